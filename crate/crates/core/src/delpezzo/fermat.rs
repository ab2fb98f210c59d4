use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::intersect::LabelledBasis;
use super::lines::{check_on, FamilyTag, Line, LineCheck};
use super::DelPezzoError;
use crate::exactalg::{rat, ratio, AlgebraElement, ExactError, Generator, HomogPoly, LinearForm, MultiQuadField};

/// `2w² = Ax⁴ + By⁴ + Cz⁴` with `A = a⁴, B = b⁴, C = c⁴`.
#[derive(Clone, Debug)]
pub struct FermatModel {
    field: Arc<MultiQuadField>,
    vars: [String; 3],
    roots: [AlgebraElement; 3],
    zeta: AlgebraElement,
}

/// Line types of the Fermat model. `Coord` lines are `δax + by = 0, √2w = ±c²z²` and its
/// cyclic shifts, with `δ = ζ^delta`; `Triple` lines are `αax + βby + γcz = 0` with
/// `(α, β, γ) = (I^alpha, I^beta, I^gamma)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FermatTag {
    Coord { axis: char, delta: u8, sign: i8 },
    Triple { alpha: u8, beta: u8, gamma: u8 },
}

impl fmt::Display for FermatTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FermatTag::Coord { axis, delta, sign } => {
                write!(f, "L_{{{axis},z^{delta},{}}}", if *sign > 0 { '+' } else { '-' })
            }
            FermatTag::Triple { alpha, beta, gamma } => write!(f, "L_{{I^{alpha},I^{beta},I^{gamma}}}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct FermatLine {
    pub tag: FermatTag,
    pub line: Line,
}

impl FermatModel {
    /// Requires `√2` and `√-2` in the field for `ζ = (√2 + √-2)/2`.
    pub fn new(field: &Arc<MultiQuadField>, vars: [&str; 3], roots: [AlgebraElement; 3]) -> Result<FermatModel, DelPezzoError> {
        if roots.iter().any(AlgebraElement::is_zero) {
            return Err(ExactError::ZeroInput.into());
        }
        let zeta = (AlgebraElement::sqrt_rational(field, &rat(2))? + AlgebraElement::sqrt_rational(field, &rat(-2))?)
            .scale(&ratio(1, 2));
        Ok(FermatModel { field: field.clone(), vars: vars.map(String::from), roots, zeta })
    }

    /// `a = 1, b = c = ζ` in `(u, X2, X3)`, i.e. `2w² = u⁴ - X2⁴ - X3⁴`.
    pub fn standard(field: &Arc<MultiQuadField>) -> Result<FermatModel, DelPezzoError> {
        let one = AlgebraElement::one(field);
        let zeta = (AlgebraElement::sqrt_rational(field, &rat(2))? + AlgebraElement::sqrt_rational(field, &rat(-2))?)
            .scale(&ratio(1, 2));
        FermatModel::new(field, ["u", "X2", "X3"], [one, zeta.clone(), zeta])
    }

    pub fn zeta(&self) -> &AlgebraElement {
        &self.zeta
    }

    pub fn coefficients(&self) -> [AlgebraElement; 3] {
        [self.roots[0].pow(4), self.roots[1].pow(4), self.roots[2].pow(4)]
    }

    pub fn quartic(&self) -> HomogPoly {
        let v = self.var_refs();
        let [a, b, c] = self.coefficients();
        HomogPoly::from_terms(&self.field, &v, [(vec![4, 0, 0], a), (vec![0, 4, 0], b), (vec![0, 0, 4], c)])
            .expect("homogeneous")
    }

    fn var_refs(&self) -> [&str; 3] {
        [&self.vars[0], &self.vars[1], &self.vars[2]]
    }
}

/// The 56 lines: 24 of coordinate type and 32 of triple type, each checked on the model.
pub fn fermat_lines(model: &FermatModel) -> Result<Vec<FermatLine>, DelPezzoError> {
    let f = &model.field;
    let v = model.var_refs();
    let x = |n| HomogPoly::var(f, &v, n);
    let z0 = AlgebraElement::zero(f);
    let inv_root2 = AlgebraElement::sqrt_generator(f, Generator::Two).scale(&ratio(1, 2));
    let i_unit = AlgebraElement::sqrt_rational(f, &rat(-1))?;
    let [a, b, c] = model.roots.clone();
    let mut out = Vec::with_capacity(56);
    let push = |tag: FermatTag, linear: LinearForm, w: HomogPoly, out: &mut Vec<FermatLine>| -> Result<(), DelPezzoError> {
        let line = Line::new(FamilyTag { family: 0, root: out.len() as u8, sign: 1 }, &linear, &w)?;
        if check_on(&model.quartic(), line.linear(), line.w_expr())? != LineCheck::Exact {
            return Err(DelPezzoError::LineVerificationFailed(tag.to_string()));
        }
        out.push(FermatLine { tag, line });
        Ok(())
    };
    // (axis, index of the squared variable, linear form builder)
    for axis in ['x', 'y', 'z'] {
        for delta in [1u8, 3, 5, 7] {
            let d = model.zeta.pow(delta as u32);
            let (coeffs, sq_var, sq_root) = match axis {
                'z' => (vec![&d * &a, b.clone(), z0.clone()], 2, &c),
                'x' => (vec![z0.clone(), &d * &b, c.clone()], 0, &a),
                _ => (vec![a.clone(), z0.clone(), &d * &c], 1, &b),
            };
            for sign in [1i8, -1] {
                let w = x(sq_var).pow(2).scale(&(sq_root.square() * &inv_root2).scale(&rat(sign as i64)));
                push(FermatTag::Coord { axis, delta, sign }, LinearForm::new(coeffs.clone()), w, &mut out)?;
            }
        }
    }
    for alpha in [0u8, 1] {
        for beta in 0..4u8 {
            for gamma in 0..4u8 {
                let unit = |k: u8| i_unit.pow(k as u32);
                let (p, q, r) = (unit(alpha) * &a, unit(beta) * &b, unit(gamma) * &c);
                let linear = LinearForm::new(vec![p.clone(), q.clone(), r.clone()]);
                let w = x(0)
                    .mul(&x(1))
                    .scale(&(&p * &q))
                    .add(&x(1).mul(&x(2)).scale(&(&q * &r)))?
                    .add(&x(2).mul(&x(0)).scale(&(&r * &p)))?;
                push(FermatTag::Triple { alpha, beta, gamma }, linear, w, &mut out)?;
            }
        }
    }
    Ok(out)
}

/// `v1 = L_{x,ζ,+}, v2 = L_{x,ζ³,-}, v3 = L_{y,ζ,+}, v4 = L_{y,ζ³,-}, v5 = L_{z,ζ,+},
/// v6 = L_{z,ζ³,-}, v7 = L_{I,I,I}, v8' = L_{z,ζ⁷,-}`.
pub fn fermat_basis(lines: &[FermatLine]) -> Result<LabelledBasis, DelPezzoError> {
    let find = |tag: FermatTag| {
        lines
            .iter()
            .position(|l| l.tag == tag)
            .ok_or_else(|| DelPezzoError::AmbiguousChoice(tag.to_string()))
    };
    let coord = |axis, delta, sign| FermatTag::Coord { axis, delta, sign };
    Ok(LabelledBasis {
        v: [
            find(coord('x', 1, 1))?,
            find(coord('x', 3, -1))?,
            find(coord('y', 1, 1))?,
            find(coord('y', 3, -1))?,
            find(coord('z', 1, 1))?,
            find(coord('z', 3, -1))?,
            find(FermatTag::Triple { alpha: 1, beta: 1, gamma: 1 })?,
        ],
        v8_prime: find(coord('z', 7, -1))?,
    })
}
