//! Degree-2 del Pezzo quotients of the Dwork pencil and their 56 lines over the multiquadratic
//! field.

pub mod fermat;
pub mod intersect;
pub mod lines;
pub mod surface;

pub use fermat::{fermat_basis, fermat_lines, FermatLine, FermatModel, FermatTag};
pub use intersect::{
    check_galois_action, galois_permutation, intersection_matrix, intersection_number,
    exceptional_set, galois_matrices_from_lines, BasisReport, ExceptionalBasis, GaloisLinesReport, LabelledBasis, Permutation,
};
pub use lines::{build_lines, count_bitangents, family_roots, square_completion, verify_line, FamilyTag, Line, LineCheck};
pub use surface::{surface_model, QuotientSurface, FIXED_SURFACES};

use thiserror::Error;

use crate::exactalg::{ExactError, SignVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DelPezzoError {
    #[error("invalid surface: {0}")]
    InvalidSurface(String),
    #[error("root {root} does not satisfy the family-{family} quartic")]
    RootVerificationFailed { family: u8, root: String },
    #[error("restriction of the branch quartic to family {family}, root {root}, is not twice a square")]
    SquareCompletionFailed { family: u8, root: usize },
    #[error("line {0} does not lie on the surface")]
    LineVerificationFailed(String),
    #[error("image of line {line} under {sign} is not in the list")]
    ImageNotFound { line: usize, sign: SignVector },
    #[error("the two lines coincide")]
    SameLine,
    #[error("zero linear form")]
    DegenerateLine,
    #[error("cannot select line: {0}")]
    AmbiguousChoice(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
