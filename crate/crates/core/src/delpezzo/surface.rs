use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::DelPezzoError;
use crate::exactalg::{fmt_rational, rat, AlgebraElement, Generator, HomogPoly, MultiQuadField, Rational};

/// The quotient `X_λ/⟨τ^r_{i,j}⟩` written as `2w² = B(u, X_k, X_l)`, where `{k, l}` are the
/// indices other than `i, j`.
#[derive(Clone, Debug)]
pub struct QuotientSurface {
    i: usize,
    j: usize,
    r: u8,
    lambda: Rational,
    field: Arc<MultiQuadField>,
    vars: [String; 3],
    branch_quartic: HomogPoly,
    completion: HomogPoly,
    pullback: [AlgebraElement; 3],
    w_factor: AlgebraElement,
}

#[derive(Clone, Debug, Serialize)]
pub struct SurfaceSummary {
    pub label: String,
    pub lambda: String,
    pub variables: [String; 3],
    pub branch_quartic: String,
    pub w: String,
}

/// `u⁴ - X_k⁴ - X_l⁴ + 4λu²X_kX_l + 2λ²X_k²X_l²`.
pub fn normal_quartic(field: &Arc<MultiQuadField>, vars: &[&str; 3]) -> HomogPoly {
    let l = field.lambda().clone();
    let c = |r: Rational| AlgebraElement::from_rational(field, &r);
    let terms = [
        (vec![4, 0, 0], c(rat(1))),
        (vec![0, 4, 0], c(rat(-1))),
        (vec![0, 0, 4], c(rat(-1))),
        (vec![2, 1, 1], c(&l * rat(4))),
        (vec![0, 2, 2], c(&l * &l * rat(2))),
    ];
    HomogPoly::from_terms(field, vars, terms).expect("homogeneous")
}

pub fn surface_model(i: usize, j: usize, r: u8, lambda: &Rational) -> Result<QuotientSurface, DelPezzoError> {
    if i == j || i > 3 || j > 3 {
        return Err(DelPezzoError::InvalidSurface(format!("indices ({i},{j})")));
    }
    if ![1, 2, 4].contains(&r) {
        return Err(DelPezzoError::InvalidSurface(format!("r = {r}")));
    }
    let field = MultiQuadField::for_lambda_padded(lambda)?;
    let (k, l) = {
        let rest: Vec<usize> = (0..4).filter(|x| *x != i && *x != j).collect();
        (rest[0], rest[1])
    };
    let names = ["u".to_string(), format!("X{k}"), format!("X{l}")];
    let vars: [&str; 3] = [&names[0], &names[1], &names[2]];
    let one = AlgebraElement::one(&field);
    let i_unit = AlgebraElement::sqrt_generator(&field, Generator::I);
    // E = u⁴ + c1·u²v + c2·v² - 4λ·v·X_kX_l + X_k⁴ + X_l⁴ with v = X_iX_j
    let (c1, c2) = match r {
        4 => (AlgebraElement::from_i64(&field, -4), rat(2)),
        2 => (AlgebraElement::from_i64(&field, 4), rat(2)),
        _ => (i_unit.scale(&rat(-4)), rat(-2)),
    };
    let x = |n| HomogPoly::var(&field, &vars, n);
    let kl = x(1).mul(&x(2));
    let p = x(0).pow(2).scale(&c1).sub(&kl.scale_rational(&(lambda * rat(4))))?;
    let s4 = x(0).pow(4).add(&x(1).pow(4))?.add(&x(2).pow(4))?;
    // E = c2·(v + P/(2c2))² - P²/(4c2) + S4, so 2w² = (2/c2)(P²/(4c2) - S4)
    let branch_quartic = p
        .pow(2)
        .scale_rational(&(rat(1) / (&c2 * rat(4))))
        .sub(&s4)?
        .scale_rational(&(rat(2) / &c2));
    let completion = p.scale_rational(&(rat(1) / (&c2 * rat(2))));
    let (pullback, w_factor) = match r {
        4 => ([one.clone(), one.clone(), one.clone()], one.clone()),
        2 => ([i_unit.clone(), one.clone(), one.clone()], one.clone()),
        _ => ([i_unit.clone(), one.clone(), i_unit.clone()], i_unit.clone()),
    };
    let s = QuotientSurface {
        i,
        j,
        r,
        lambda: lambda.clone(),
        field,
        vars: names.clone(),
        branch_quartic,
        completion,
        pullback,
        w_factor,
    };
    let pulled = s.normal_form().scale_vars(&s.pullback).scale(&s.w_factor.square());
    if pulled != s.branch_quartic {
        return Err(DelPezzoError::InvalidSurface(format!("{} does not reduce to the normal form", s.label())));
    }
    Ok(s)
}

impl QuotientSurface {
    pub fn indices(&self) -> (usize, usize) {
        (self.i, self.j)
    }

    pub fn r(&self) -> u8 {
        self.r
    }

    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }

    pub fn field(&self) -> &Arc<MultiQuadField> {
        &self.field
    }

    pub fn vars(&self) -> [&str; 3] {
        [&self.vars[0], &self.vars[1], &self.vars[2]]
    }

    /// `B` in `2w² = B`.
    pub fn branch_quartic(&self) -> &HomogPoly {
        &self.branch_quartic
    }

    /// `C` in `w = v + C`, with `v = X_iX_j`.
    pub fn completion(&self) -> &HomogPoly {
        &self.completion
    }

    /// The `(0,1;4)` quartic in this surface's variables.
    pub fn normal_form(&self) -> HomogPoly {
        normal_quartic(&self.field, &self.vars())
    }

    /// Scalars `s` and `ω` with `B(x) = ω²·Q(s·x)` for the normal form `Q`; a line
    /// `ℓ = 0, w = g` on `2w² = Q` becomes `ℓ(s·x) = 0, w = ω·g(s·x)` here.
    pub fn pullback(&self) -> (&[AlgebraElement; 3], &AlgebraElement) {
        (&self.pullback, &self.w_factor)
    }

    /// The surface equation `u⁴ + c1·u²v + c2·v² - 4λ·v·X_kX_l + X_k⁴ + X_l⁴` at a point.
    pub fn defining_equation(&self, u: &AlgebraElement, xk: &AlgebraElement, xl: &AlgebraElement, v: &AlgebraElement) -> AlgebraElement {
        let f = &self.field;
        let i_unit = AlgebraElement::sqrt_generator(f, Generator::I);
        let (c1, c2) = match self.r {
            4 => (AlgebraElement::from_i64(f, -4), AlgebraElement::from_i64(f, 2)),
            2 => (AlgebraElement::from_i64(f, 4), AlgebraElement::from_i64(f, 2)),
            _ => (i_unit.scale(&rat(-4)), AlgebraElement::from_i64(f, -2)),
        };
        let l4 = AlgebraElement::from_rational(f, &(&self.lambda * rat(4)));
        u.pow(4) + c1 * u.square() * v + c2 * v.square() - l4 * v * xk * xl + xk.pow(4) + xl.pow(4)
    }

    pub fn label(&self) -> String {
        format!("S({},{};{})", self.i, self.j, self.r)
    }

    pub fn summary(&self) -> SurfaceSummary {
        SurfaceSummary {
            label: self.label(),
            lambda: fmt_rational(&self.lambda),
            variables: self.vars.clone(),
            branch_quartic: self.branch_quartic.to_string(),
            w: format!("X{}*X{} + {}", self.i, self.j, self.completion),
        }
    }
}

impl fmt::Display for QuotientSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at lambda = {}: 2w^2 = {}", self.label(), fmt_rational(&self.lambda), self.branch_quartic)
    }
}

/// The five quotients used for the Galois computation, in order `S_1..S_5`.
pub const FIXED_SURFACES: [(usize, usize, u8); 5] = [(0, 1, 4), (0, 1, 2), (1, 2, 4), (2, 3, 4), (0, 1, 1)];
