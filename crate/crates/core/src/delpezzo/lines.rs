use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::surface::{normal_quartic, QuotientSurface};
use super::DelPezzoError;
use crate::exactalg::{rat, AlgebraElement, Generator, HomogPoly, LinearForm, MultiQuadField, Rational, SignVector};

/// Which closed-form family a line comes from: the family number, the index of the root `a`
/// in [`family_roots`] order, and the sign of the lift.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FamilyTag {
    pub family: u8,
    pub root: u8,
    pub sign: i8,
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}[{}]{}", self.family, self.root, if self.sign > 0 { '+' } else { '-' })
    }
}

/// A line `ℓ = 0, w = g` on a surface `2w² = B`, stored canonically: `ℓ` has leading
/// coefficient 1 and `g` does not involve the variable `ℓ` eliminates.
#[derive(Clone, Debug)]
pub struct Line {
    pub tag: FamilyTag,
    linear: LinearForm,
    eliminated: usize,
    w_expr: HomogPoly,
    normalization: AlgebraElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LineCheck {
    /// `2g² ≡ B` modulo `ℓ`.
    Exact,
    /// `B ≡ κ·g²` modulo `ℓ` with `κ ≠ 2`.
    Rescaled(AlgebraElement),
    Failed,
}

impl Line {
    /// Canonicalises `(linear, w)`; `w` may be any representative modulo `linear`.
    pub fn new(tag: FamilyTag, linear: &LinearForm, w: &HomogPoly) -> Result<Line, DelPezzoError> {
        let linear = linear.normalized();
        let eliminated = linear.leading_index().ok_or(DelPezzoError::DegenerateLine)?;
        let w_expr = reduce_mod(w, &linear, eliminated)?;
        let normalization = AlgebraElement::one(w.field());
        Ok(Line { tag, linear, eliminated, w_expr, normalization })
    }

    pub fn linear(&self) -> &LinearForm {
        &self.linear
    }

    pub fn eliminated(&self) -> usize {
        self.eliminated
    }

    pub fn w_expr(&self) -> &HomogPoly {
        &self.w_expr
    }

    /// Factor applied to the source formula for `w` to put the line on the surface; 1 unless a
    /// printed lift needed correcting.
    pub fn normalization(&self) -> &AlgebraElement {
        &self.normalization
    }

    pub fn field(&self) -> &Arc<MultiQuadField> {
        self.linear.field()
    }

    /// The other lift over the same bitangent.
    pub fn conjugate_lift(&self) -> Line {
        Line { tag: FamilyTag { sign: -self.tag.sign, ..self.tag }, w_expr: self.w_expr.neg(), ..self.clone() }
    }

    pub fn apply_sign(&self, s: SignVector) -> Line {
        Line {
            tag: self.tag,
            linear: self.linear.apply_sign(s),
            eliminated: self.eliminated,
            w_expr: self.w_expr.apply_sign(s),
            normalization: self.normalization.apply_sign(s),
        }
    }

    /// Equality of the underlying curves (tags and normalisation ignored).
    pub fn same_curve(&self, other: &Line) -> bool {
        self.linear == other.linear && self.w_expr == other.w_expr
    }

    pub fn same_bitangent(&self, other: &Line) -> bool {
        self.linear == other.linear
    }

    pub fn dump(&self) -> LineDump {
        let vars = self.w_expr.vars().to_vec();
        LineDump {
            tag: self.tag.to_string(),
            linear: self.linear.coeffs().iter().map(AlgebraElement::to_coord_strings).collect(),
            w_terms: self
                .w_expr
                .terms()
                .map(|(e, c)| (monomial_name(&vars, e), c.to_coord_strings()))
                .collect(),
            display: self.to_string(),
        }
    }
}

fn monomial_name(vars: &[String], e: &[u8]) -> String {
    let parts: Vec<String> = vars
        .iter()
        .zip(e)
        .filter(|(_, &k)| k > 0)
        .map(|(v, &k)| if k == 1 { v.clone() } else { format!("{v}^{k}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Coefficients as 16-coordinate vectors over the subset basis.
#[derive(Clone, Debug, Serialize)]
pub struct LineDump {
    pub tag: String,
    pub linear: Vec<Vec<String>>,
    pub w_terms: Vec<(String, Vec<String>)>,
    pub display: String,
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars = self.w_expr.vars();
        let lin: Vec<String> = self
            .linear
            .coeffs()
            .iter()
            .zip(vars)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, v)| format!("({c})*{v}"))
            .collect();
        write!(f, "{}: {} = 0, w = {}", self.tag, lin.join(" + "), self.w_expr)
    }
}

/// `p` modulo `ℓ = 0`, written without the variable `ℓ` eliminates but in the original ring.
fn reduce_mod(p: &HomogPoly, linear: &LinearForm, eliminated: usize) -> Result<HomogPoly, DelPezzoError> {
    let reduced = p.substitute_linear(linear, eliminated)?;
    let vars: Vec<&str> = p.vars().iter().map(String::as_str).collect();
    let images: Vec<HomogPoly> = (0..vars.len())
        .filter(|&i| i != eliminated)
        .map(|i| HomogPoly::var(p.field(), &vars, i))
        .collect();
    Ok(reduced.compose(&images))
}

/// Compares `2g²` with `quartic` on the line.
pub fn check_on(quartic: &HomogPoly, linear: &LinearForm, w: &HomogPoly) -> Result<LineCheck, DelPezzoError> {
    let linear = linear.normalized();
    let e = linear.leading_index().ok_or(DelPezzoError::DegenerateLine)?;
    let q = quartic.substitute_linear(&linear, e)?;
    let g = w.substitute_linear(&linear, e)?;
    if g.is_zero() {
        return Ok(LineCheck::Failed);
    }
    Ok(match q.ratio_to(&g.pow(2)) {
        Some(k) if k == AlgebraElement::from_i64(quartic.field(), 2) => LineCheck::Exact,
        Some(k) if !k.is_zero() => LineCheck::Rescaled(k),
        _ => LineCheck::Failed,
    })
}

/// Membership of `line` in `surface`: `2·w_expr² - B ≡ 0` modulo the linear form.
pub fn verify_line(surface: &QuotientSurface, line: &Line) -> LineCheck {
    check_on(surface.branch_quartic(), &line.linear, &line.w_expr).unwrap_or(LineCheck::Failed)
}

/// `g` with `2g² = q` for a binary quartic `q`, if one exists over the field.
pub fn square_completion(q: &HomogPoly) -> Option<HomogPoly> {
    assert_eq!(q.nvars(), 2);
    let field = q.field();
    let vars: Vec<&str> = q.vars().iter().map(String::as_str).collect();
    let c: Vec<AlgebraElement> = (0..5u8).map(|k| q.coeff(&[4 - k, k])).collect();
    let two = AlgebraElement::from_i64(field, 2);
    let form = |a: AlgebraElement, b: AlgebraElement, g: AlgebraElement| {
        HomogPoly::from_terms(field, &vars, [(vec![2, 0], a), (vec![1, 1], b), (vec![0, 2], g)]).expect("quadratic")
    };
    let candidate = if !c[0].is_zero() || !c[4].is_zero() {
        // complete from whichever end is nonzero
        let (c0, c1, c2) = if !c[0].is_zero() { (&c[0], &c[1], &c[2]) } else { (&c[4], &c[3], &c[2]) };
        let alpha = c0.div_ref(&two).ok()?.sqrt()?;
        let beta = c1.div_ref(&alpha.scale(&rat(4))).ok()?;
        let gamma = (c2.div_ref(&two).ok()? - beta.square()).div_ref(&alpha.scale(&rat(2))).ok()?;
        if !c[0].is_zero() {
            form(alpha, beta, gamma)
        } else {
            form(gamma, beta, alpha)
        }
    } else {
        let mid = c[2].div_ref(&two).ok()?.sqrt()?;
        let z = AlgebraElement::zero(field);
        form(z.clone(), mid, z)
    };
    (candidate.pow(2).scale(&two) == *q).then_some(candidate)
}

/// `Σ c_k a^k` for ascending coefficients.
fn eval_poly(coeffs: &[AlgebraElement], a: &AlgebraElement) -> AlgebraElement {
    coeffs
        .iter()
        .rev()
        .fold(AlgebraElement::zero(a.field()), |acc, c| acc * a + c)
}

/// The quartic in `a` cutting out family `family`, ascending coefficients. Families 6 and 7
/// carry the factor `I` in the middle coefficient.
pub fn family_quartic(field: &Arc<MultiQuadField>, family: u8) -> Vec<AlgebraElement> {
    let l = field.lambda().clone();
    let l2 = &l * &l;
    let r = |x: Rational| AlgebraElement::from_rational(field, &x);
    let i_unit = AlgebraElement::sqrt_generator(field, Generator::I);
    let mid = match family {
        1 => r(&l2 * rat(2)),
        2 | 3 => {
            return vec![r(rat(-1)), r(rat(0)), r(rat(0)), r(rat(0)), r(rat(1))];
        }
        4 => r(&l * rat(4) / (&l2 + rat(1))),
        5 => r(-(&l * rat(4)) / (&l2 + rat(1))),
        6 => i_unit.scale(&(&l * rat(4) / (&l2 - rat(1)))),
        7 => i_unit.scale(&(-(&l * rat(4)) / (&l2 - rat(1)))),
        _ => panic!("family {family}"),
    };
    vec![r(rat(1)), r(rat(0)), mid, r(rat(0)), r(rat(1))]
}

/// The four roots of [`family_quartic`] from their closed forms, each checked against it.
///
/// - family 1: `(δ√(-2(λ²-1)) + γ√(-2(λ²+1)))/2`, `(δ, γ)` in order `++, +-, -+, --`
/// - families 2, 3: `1, I, -1, -I`
/// - family 4: `ε((λ-1) + η(λ+1)I)/√(2(λ²+1))`, `(ε, η)` in order `++, +-, -+, --`
/// - family 5: `I` times the family-4 roots
/// - family 6: `ε(λ+1)(1-I)/√(2(λ²-1))` then `ε(λ-1)(1+I)/√(2(λ²-1))`, `ε = +, -`
/// - family 7: as family 6 with `I ↦ -I`
pub fn family_roots(field: &Arc<MultiQuadField>, family: u8) -> Result<Vec<AlgebraElement>, DelPezzoError> {
    let l = field.lambda().clone();
    let l2 = &l * &l;
    let r = |x: Rational| AlgebraElement::from_rational(field, &x);
    let sq = |x: Rational| AlgebraElement::sqrt_rational(field, &x);
    let i_unit = AlgebraElement::sqrt_generator(field, Generator::I);
    let one = r(rat(1));
    let signs = [(1, 1), (1, -1), (-1, 1), (-1, -1)];
    let roots: Vec<AlgebraElement> = match family {
        1 => {
            let p = sq(-(&l2 - rat(1)) * rat(2))?;
            let q = sq(-(&l2 + rat(1)) * rat(2))?;
            signs
                .iter()
                .map(|&(d, g)| (p.scale(&rat(d)) + q.scale(&rat(g))).scale(&Rational::new(1.into(), 2.into())))
                .collect()
        }
        2 | 3 => vec![one.clone(), i_unit.clone(), -&one, -&i_unit],
        4 | 5 => {
            let inv = sq((&l2 + rat(1)) * rat(2))?.inv()?;
            signs
                .iter()
                .map(|&(e, h)| {
                    let a = (r(&l - rat(1)) + i_unit.scale(&((&l + rat(1)) * rat(h)))).scale(&rat(e)) * &inv;
                    if family == 4 {
                        a
                    } else {
                        a * &i_unit
                    }
                })
                .collect()
        }
        6 | 7 => {
            let inv = sq((&l2 - rat(1)) * rat(2))?.inv()?;
            let conj = if family == 6 { rat(1) } else { rat(-1) };
            let first = r(&l + rat(1)) * (&one - &i_unit.scale(&conj));
            let second = r(&l - rat(1)) * (&one + &i_unit.scale(&conj));
            vec![
                &first * &inv,
                -(&first * &inv),
                &second * &inv,
                -(&second * &inv),
            ]
        }
        f => return Err(DelPezzoError::InvalidSurface(format!("family {f}"))),
    };
    let quartic = family_quartic(field, family);
    for a in &roots {
        if !eval_poly(&quartic, a).is_zero() {
            return Err(DelPezzoError::RootVerificationFailed { family, root: a.to_string() });
        }
    }
    Ok(roots)
}

/// The linear form of family `family` at root `a`, in `(u, X_k, X_l)` for the normal form.
pub fn family_linear(field: &Arc<MultiQuadField>, family: u8, a: &AlgebraElement) -> Result<LinearForm, DelPezzoError> {
    let r = |x: Rational| AlgebraElement::from_rational(field, &x);
    let l = r(field.lambda().clone());
    let i_unit = AlgebraElement::sqrt_generator(field, Generator::I);
    let coeffs = match family {
        1 => vec![r(rat(0)), r(rat(1)), -a],
        2 => vec![r(rat(1)), l.div_ref(a)?, -a],
        3 => vec![r(rat(1)), -a, l.div_ref(a)?],
        4..=7 => {
            let m = match family {
                4 => r(rat(1)),
                5 => r(rat(-1)),
                6 => i_unit,
                _ => -i_unit,
            };
            vec![r(rat(1)), -a, -(a * &m)]
        }
        f => return Err(DelPezzoError::InvalidSurface(format!("family {f}"))),
    };
    Ok(LinearForm::new(coeffs))
}

/// The printed `+` lift of families 1–3 at root `a`, before any correction.
fn printed_lift(field: &Arc<MultiQuadField>, vars: &[&str], family: u8, a: &AlgebraElement) -> Result<HomogPoly, DelPezzoError> {
    let l = field.lambda().clone();
    let l2 = &l * &l;
    let x = |n| HomogPoly::var(field, vars, n);
    Ok(match family {
        // 4w = √2(4aλX_l² + 2u²)
        1 => {
            let root2 = AlgebraElement::sqrt_generator(field, Generator::Two);
            let inner = x(2).pow(2).scale(&a.scale(&(&l * rat(4)))).add(&x(0).pow(2).scale_rational(&rat(2)))?;
            inner.scale(&root2.scale(&Rational::new(1.into(), 4.into())))
        }
        // 2w = X_k²√(2(λ⁴-1)), resp. X_l²
        2 | 3 => {
            let s = AlgebraElement::sqrt_rational(field, &((&l2 * &l2 - rat(1)) * rat(2)))?;
            x(if family == 2 { 1 } else { 2 }).pow(2).scale(&s.scale(&Rational::new(1.into(), 2.into())))
        }
        _ => unreachable!(),
    })
}

/// The 56 lines on the `(0,1;4)` normal form `2w² = Q` in the given variables.
pub fn normal_form_lines(field: &Arc<MultiQuadField>, vars: &[&str; 3]) -> Result<Vec<Line>, DelPezzoError> {
    let q = normal_quartic(field, vars);
    let mut out = Vec::with_capacity(56);
    for family in 1..=7u8 {
        for (idx, a) in family_roots(field, family)?.iter().enumerate() {
            let linear = family_linear(field, family, a)?;
            let tag = FamilyTag { family, root: idx as u8, sign: 1 };
            let line = if family <= 3 {
                let w = printed_lift(field, vars, family, a)?;
                let mut line = Line::new(tag, &linear, &w)?;
                match check_on(&q, &line.linear, &line.w_expr)? {
                    LineCheck::Exact => {}
                    LineCheck::Rescaled(k) => {
                        let fix = k
                            .div_ref(&AlgebraElement::from_i64(field, 2))?
                            .sqrt()
                            .ok_or_else(|| DelPezzoError::LineVerificationFailed(tag.to_string()))?;
                        line.w_expr = line.w_expr.scale(&fix);
                        line.normalization = fix;
                    }
                    LineCheck::Failed => return Err(DelPezzoError::LineVerificationFailed(tag.to_string())),
                }
                line
            } else {
                let e = linear.normalized().leading_index().ok_or(DelPezzoError::DegenerateLine)?;
                let restricted = q.substitute_linear(&linear.normalized(), e)?;
                let g = square_completion(&restricted)
                    .ok_or(DelPezzoError::SquareCompletionFailed { family, root: idx })?;
                let vars3: Vec<&str> = vars.to_vec();
                let images: Vec<HomogPoly> = (0..3)
                    .filter(|&i| i != e)
                    .map(|i| HomogPoly::var(field, &vars3, i))
                    .collect();
                Line::new(tag, &linear, &g.compose(&images))?
            };
            out.push(line.clone());
            out.push(line.conjugate_lift());
        }
    }
    Ok(out)
}

/// All 56 lines on `surface`, transported from the normal form and checked one by one.
pub fn build_lines(surface: &QuotientSurface) -> Result<Vec<Line>, DelPezzoError> {
    let field = surface.field();
    let normal = normal_form_lines(field, &surface.vars())?;
    let (s, omega) = surface.pullback();
    let mut out = Vec::with_capacity(normal.len());
    for line in normal {
        let coeffs: Vec<AlgebraElement> = line.linear.coeffs().iter().zip(s.iter()).map(|(c, si)| c * si).collect();
        let w = line.w_expr.scale_vars(s).scale(omega);
        let mut moved = Line::new(line.tag, &LinearForm::new(coeffs), &w)?;
        moved.normalization = line.normalization.clone();
        if verify_line(surface, &moved) != LineCheck::Exact {
            return Err(DelPezzoError::LineVerificationFailed(moved.tag.to_string()));
        }
        out.push(moved);
    }
    Ok(out)
}

/// Number of distinct linear forms among `lines`.
pub fn count_bitangents(lines: &[Line]) -> usize {
    let mut seen: Vec<&LinearForm> = Vec::new();
    for l in lines {
        if !seen.contains(&&l.linear) {
            seen.push(&l.linear);
        }
    }
    seen.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delpezzo::surface::surface_model;
    use crate::exactalg::ratio;

    #[test]
    fn fifty_six_lines_at_two() {
        let s = surface_model(0, 1, 4, &rat(2)).unwrap();
        let lines = build_lines(&s).unwrap();
        assert_eq!(lines.len(), 56);
        assert_eq!(count_bitangents(&lines), 28);
        for f in 1..=7 {
            assert_eq!(lines.iter().filter(|l| l.tag.family == f).count(), 8);
        }
        assert!(lines.iter().all(|l| l.normalization().is_one()));
    }

    #[test]
    fn corrupted_lift_fails() {
        let s = surface_model(0, 1, 4, &rat(2)).unwrap();
        let lines = build_lines(&s).unwrap();
        let l = &lines[0];
        let (e, c) = l.w_expr().terms().next().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let vars = s.vars();
        let bad = l
            .w_expr()
            .sub(&HomogPoly::monomial(s.field(), &vars, e, c.scale(&rat(2))))
            .unwrap();
        assert_eq!(check_on(s.branch_quartic(), l.linear(), &bad).unwrap(), LineCheck::Failed);
        assert_eq!(verify_line(&s, l), LineCheck::Exact);
    }

    #[test]
    fn printed_family_six_quartic_is_not_satisfied() {
        let f = MultiQuadField::for_lambda(&rat(2)).unwrap();
        let roots = family_roots(&f, 6).unwrap();
        let l = f.lambda().clone();
        let printed = [
            AlgebraElement::one(&f),
            AlgebraElement::zero(&f),
            AlgebraElement::from_rational(&f, &(&l * rat(4) / (&l * &l - rat(1)))),
            AlgebraElement::zero(&f),
            AlgebraElement::one(&f),
        ];
        assert!(roots.iter().all(|a| !eval_poly(&printed, a).is_zero()));
    }

    #[test]
    fn family_two_printed_line_is_not_a_bitangent() {
        // u = -X2/a + aX3 with a = 1, as printed
        let f = MultiQuadField::for_lambda(&rat(2)).unwrap();
        let vars = ["u", "X2", "X3"];
        let q = normal_quartic(&f, &vars);
        let one = AlgebraElement::one(&f);
        let printed = LinearForm::new(vec![one.clone(), one.clone(), -&one]);
        let restricted = q.substitute_linear(&printed, 0).unwrap();
        assert!(square_completion(&restricted).is_none());
    }

    #[test]
    fn roots_exist_for_sample_lambdas() {
        for l in [rat(2), rat(3), rat(5), ratio(1, 2), ratio(3, 2), rat(0)] {
            let f = MultiQuadField::for_lambda_padded(&l).unwrap();
            for fam in 1..=7 {
                let roots = family_roots(&f, fam).unwrap();
                for (i, a) in roots.iter().enumerate() {
                    assert!(roots[..i].iter().all(|b| b != a));
                }
            }
        }
    }

    #[test]
    fn all_fixed_surfaces_have_56_lines() {
        for &(i, j, r) in &crate::delpezzo::surface::FIXED_SURFACES {
            let s = surface_model(i, j, r, &rat(3)).unwrap();
            let lines = build_lines(&s).unwrap();
            assert_eq!(lines.len(), 56, "{}", s.label());
            assert_eq!(count_bitangents(&lines), 28);
        }
    }
}
