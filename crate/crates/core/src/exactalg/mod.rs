//! Exact arithmetic: rationals, square classes, the multiquadratic field and polynomials over it.

pub mod field;
pub mod poly;
pub mod rational;

pub use field::{default_generators, field_new, AlgebraElement, Generator, MultiQuadField, SignVector};
pub use poly::{HomogPoly, LinearForm};
pub use rational::{fmt_rational, parse_rational, rat, ratio, squarefree_part, Rational, SquareClass};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("zero has no square class")]
    ZeroInput,
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
    #[error("generator subset {subset:#06b} has square product {product}")]
    DependentClasses { subset: usize, product: String },
    #[error("lambda = {0} has lambda^4 = 1")]
    LambdaSingular(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("variable {0} has zero coefficient in the relation")]
    NotEliminable(usize),
    #[error("sqrt({0}) is not in the field")]
    NotInField(String),
    #[error("expected 16 coordinates, got {0}")]
    CoordinateCount(usize),
    #[error("terms of degrees {0} and {1} in one homogeneous polynomial")]
    NotHomogeneous(u32, u32),
}
