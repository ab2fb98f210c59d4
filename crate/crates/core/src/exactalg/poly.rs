//! Sparse homogeneous polynomials and linear forms over a [`MultiQuadField`].

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::field::{AlgebraElement, MultiQuadField, SignVector};
use super::rational::Rational;
use super::ExactError;

pub type Exponents = Vec<u8>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogPoly {
    field: Arc<MultiQuadField>,
    vars: Vec<String>,
    terms: BTreeMap<Exponents, AlgebraElement>,
}

fn total(e: &[u8]) -> u32 {
    e.iter().map(|&x| x as u32).sum()
}

impl HomogPoly {
    pub fn zero(field: &Arc<MultiQuadField>, vars: &[&str]) -> HomogPoly {
        HomogPoly { field: field.clone(), vars: vars.iter().map(|s| s.to_string()).collect(), terms: BTreeMap::new() }
    }

    fn empty_like(&self) -> HomogPoly {
        HomogPoly { field: self.field.clone(), vars: self.vars.clone(), terms: BTreeMap::new() }
    }

    /// Builds from `(exponents, coefficient)` pairs, merging repeats and dropping zeros.
    pub fn from_terms<I>(field: &Arc<MultiQuadField>, vars: &[&str], terms: I) -> Result<HomogPoly, ExactError>
    where
        I: IntoIterator<Item = (Exponents, AlgebraElement)>,
    {
        let mut p = HomogPoly::zero(field, vars);
        let mut degree = None;
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent arity");
            let d = total(&e);
            match degree {
                Some(d0) if d0 != d => return Err(ExactError::NotHomogeneous(d0, d)),
                _ => degree = Some(d),
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// `c · x^e`.
    pub fn monomial(field: &Arc<MultiQuadField>, vars: &[&str], e: Exponents, c: AlgebraElement) -> HomogPoly {
        HomogPoly::from_terms(field, vars, [(e, c)]).expect("single term")
    }

    /// The `i`-th variable.
    pub fn var(field: &Arc<MultiQuadField>, vars: &[&str], i: usize) -> HomogPoly {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        HomogPoly::monomial(field, vars, e, AlgebraElement::one(field))
    }

    /// A constant, i.e. a form of degree 0.
    pub fn constant(field: &Arc<MultiQuadField>, vars: &[&str], c: AlgebraElement) -> HomogPoly {
        HomogPoly::monomial(field, vars, vec![0; vars.len()], c)
    }

    fn add_term(&mut self, e: Exponents, c: AlgebraElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&e) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(e, s);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn field(&self) -> &Arc<MultiQuadField> {
        &self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &AlgebraElement)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next().map(|e| total(e))
    }

    pub fn coeff(&self, e: &[u8]) -> AlgebraElement {
        self.terms.get(e).cloned().unwrap_or_else(|| AlgebraElement::zero(&self.field))
    }

    fn check_ring(&self, other: &HomogPoly) {
        assert_eq!(self.vars, other.vars, "polynomials over different variables");
    }

    pub fn add(&self, other: &HomogPoly) -> Result<HomogPoly, ExactError> {
        self.check_ring(other);
        if let (Some(a), Some(b)) = (self.degree(), other.degree()) {
            if a != b {
                return Err(ExactError::NotHomogeneous(a, b));
            }
        }
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &HomogPoly) -> Result<HomogPoly, ExactError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> HomogPoly {
        self.map_coeffs(|c| -c)
    }

    pub fn mul(&self, other: &HomogPoly) -> HomogPoly {
        self.check_ring(other);
        let mut out = self.empty_like();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> HomogPoly {
        let mut out = HomogPoly::constant(&self.field, &self.var_refs(), AlgebraElement::one(&self.field));
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    pub fn scale(&self, c: &AlgebraElement) -> HomogPoly {
        if c.is_zero() {
            return self.empty_like();
        }
        self.map_coeffs(|x| x * c)
    }

    pub fn scale_rational(&self, r: &Rational) -> HomogPoly {
        self.scale(&AlgebraElement::from_rational(&self.field, r))
    }

    fn map_coeffs(&self, f: impl Fn(&AlgebraElement) -> AlgebraElement) -> HomogPoly {
        let mut out = self.empty_like();
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Applies a field automorphism to every coefficient.
    pub fn apply_sign(&self, s: SignVector) -> HomogPoly {
        self.map_coeffs(|c| c.apply_sign(s))
    }

    fn var_refs(&self) -> Vec<&str> {
        self.vars.iter().map(String::as_str).collect()
    }

    pub fn evaluate(&self, point: &[AlgebraElement]) -> AlgebraElement {
        assert_eq!(point.len(), self.nvars());
        let mut acc = AlgebraElement::zero(&self.field);
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t = t * x.pow(k as u32);
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Substitutes `images[i]` for the `i`-th variable; all images must share one ring and
    /// one degree.
    pub fn compose(&self, images: &[HomogPoly]) -> HomogPoly {
        assert_eq!(images.len(), self.nvars());
        let target = &images[0];
        let max_exp = self.terms.keys().flat_map(|e| e.iter().copied()).max().unwrap_or(0) as usize;
        let powers: Vec<Vec<HomogPoly>> = images
            .iter()
            .map(|im| {
                let mut v = vec![HomogPoly::constant(&self.field, &target.var_refs(), AlgebraElement::one(&self.field))];
                for k in 1..=max_exp {
                    v.push(v[k - 1].mul(im));
                }
                v
            })
            .collect();
        let mut out = target.empty_like();
        for (e, c) in &self.terms {
            let mut t = HomogPoly::constant(&self.field, &target.var_refs(), c.clone());
            for (i, &k) in e.iter().enumerate() {
                t = t.mul(&powers[i][k as usize]);
            }
            for (e2, c2) in t.terms {
                out.add_term(e2, c2);
            }
        }
        out
    }

    /// Eliminates `eliminate` using `relation = 0`; the result lives in the remaining variables
    /// in their original order.
    pub fn substitute_linear(&self, relation: &LinearForm, eliminate: usize) -> Result<HomogPoly, ExactError> {
        let images = relation.elimination_images(eliminate, &self.vars)?;
        Ok(self.compose(&images))
    }

    /// `(u·x^e)` rescaling `x_i ↦ factors[i]·x_i`.
    pub fn scale_vars(&self, factors: &[AlgebraElement]) -> HomogPoly {
        let vars = self.var_refs();
        let images: Vec<HomogPoly> = factors
            .iter()
            .enumerate()
            .map(|(i, f)| HomogPoly::var(&self.field, &vars, i).scale(f))
            .collect();
        self.compose(&images)
    }

    /// True when `self = k·other` for some constant `k`, returned.
    pub fn ratio_to(&self, other: &HomogPoly) -> Option<AlgebraElement> {
        self.check_ring(other);
        if other.is_zero() {
            return self.is_zero().then(|| AlgebraElement::zero(&self.field));
        }
        let (e0, c0) = other.terms.iter().next()?;
        let k = self.coeff(e0).div_ref(c0).ok()?;
        (other.scale(&k) == *self).then_some(k)
    }
}

impl fmt::Display for HomogPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (v, &k) in self.vars.iter().zip(e) {
                match k {
                    0 => {}
                    1 => write!(f, "*{v}")?,
                    _ => write!(f, "*{v}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

/// `Σ c_i x_i`, read as the relation `Σ c_i x_i = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    coeffs: Vec<AlgebraElement>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<AlgebraElement>) -> LinearForm {
        assert!(!coeffs.is_empty());
        LinearForm { coeffs }
    }

    pub fn coeffs(&self) -> &[AlgebraElement] {
        &self.coeffs
    }

    pub fn field(&self) -> &Arc<MultiQuadField> {
        self.coeffs[0].field()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(AlgebraElement::is_zero)
    }

    pub fn leading_index(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Scaled so that the first nonzero coefficient is 1.
    pub fn normalized(&self) -> LinearForm {
        match self.leading_index() {
            None => self.clone(),
            Some(i) => {
                let inv = self.coeffs[i].inv().expect("nonzero");
                LinearForm { coeffs: self.coeffs.iter().map(|c| c * &inv).collect() }
            }
        }
    }

    pub fn apply_sign(&self, s: SignVector) -> LinearForm {
        LinearForm { coeffs: self.coeffs.iter().map(|c| c.apply_sign(s)).collect() }
    }

    pub fn evaluate(&self, point: &[AlgebraElement]) -> AlgebraElement {
        self.coeffs
            .iter()
            .zip(point)
            .fold(AlgebraElement::zero(self.field()), |acc, (c, x)| acc + c * x)
    }

    pub fn is_proportional(&self, other: &LinearForm) -> bool {
        self.normalized() == other.normalized()
    }

    /// Images of the old variables in the ring of the remaining ones.
    fn elimination_images(&self, eliminate: usize, vars: &[String]) -> Result<Vec<HomogPoly>, ExactError> {
        assert_eq!(self.coeffs.len(), vars.len());
        let field = self.field().clone();
        let pivot = &self.coeffs[eliminate];
        if pivot.is_zero() {
            return Err(ExactError::NotEliminable(eliminate));
        }
        let neg_inv = -pivot.inv()?;
        let rest: Vec<&str> = vars
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != eliminate)
            .map(|(_, v)| v.as_str())
            .collect();
        let mut images = Vec::with_capacity(vars.len());
        let mut k = 0;
        for i in 0..vars.len() {
            if i == eliminate {
                let mut im = HomogPoly::zero(&field, &rest);
                for (j, c) in self.coeffs.iter().enumerate().filter(|(j, _)| *j != eliminate) {
                    let jj = if j < eliminate { j } else { j - 1 };
                    im = im.add(&HomogPoly::var(&field, &rest, jj).scale(&(c * &neg_inv)))?;
                }
                images.push(im);
            } else {
                images.push(HomogPoly::var(&field, &rest, k));
                k += 1;
            }
        }
        Ok(images)
    }

    /// Common zero of two independent forms in three variables, by the cross product.
    pub fn meet(&self, other: &LinearForm) -> Option<[AlgebraElement; 3]> {
        assert!(self.coeffs.len() == 3 && other.coeffs.len() == 3);
        let (a, b) = (&self.coeffs, &other.coeffs);
        let p = [
            &a[1] * &b[2] - &a[2] * &b[1],
            &a[2] * &b[0] - &a[0] * &b[2],
            &a[0] * &b[1] - &a[1] * &b[0],
        ];
        (!p.iter().all(AlgebraElement::is_zero)).then_some(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::field::Generator;
    use crate::exactalg::rational::rat;

    const V: [&str; 3] = ["u", "X2", "X3"];

    fn setup() -> Arc<MultiQuadField> {
        MultiQuadField::for_lambda(&rat(2)).unwrap()
    }

    fn k(f: &Arc<MultiQuadField>, n: i64) -> AlgebraElement {
        AlgebraElement::from_i64(f, n)
    }

    #[test]
    fn eliminate_u_from_square() {
        let f = setup();
        let p = HomogPoly::var(&f, &V, 0).pow(2);
        let rel = LinearForm::new(vec![k(&f, 1), k(&f, -1), k(&f, 0)]);
        let q = p.substitute_linear(&rel, 0).unwrap();
        assert_eq!(q, HomogPoly::monomial(&f, &["X2", "X3"], vec![2, 0], k(&f, 1)));
    }

    #[test]
    fn eliminate_with_field_coefficient() {
        let f = setup();
        let a = AlgebraElement::sqrt_generator(&f, Generator::Plus) + k(&f, 1);
        let p = HomogPoly::var(&f, &V, 0).pow(4).sub(&HomogPoly::var(&f, &V, 1).pow(4)).unwrap();
        let rel = LinearForm::new(vec![k(&f, 1), k(&f, 0), -&a]);
        let q = p.substitute_linear(&rel, 0).unwrap();
        let expected = HomogPoly::from_terms(&f, &["X2", "X3"], [(vec![0, 4], a.pow(4)), (vec![4, 0], k(&f, -1))]).unwrap();
        assert_eq!(q, expected);
    }

    #[test]
    fn zero_pivot_rejected() {
        let f = setup();
        let rel = LinearForm::new(vec![k(&f, 0), k(&f, 1), k(&f, 1)]);
        let p = HomogPoly::var(&f, &V, 0);
        assert_eq!(p.substitute_linear(&rel, 0), Err(ExactError::NotEliminable(0)));
    }

    #[test]
    fn mixed_degrees_rejected() {
        let f = setup();
        let r = HomogPoly::from_terms(&f, &V, [(vec![1, 0, 0], k(&f, 1)), (vec![2, 0, 0], k(&f, 1))]);
        assert_eq!(r, Err(ExactError::NotHomogeneous(1, 2)));
    }

    #[test]
    fn evaluation_matches_composition() {
        let f = setup();
        let p = HomogPoly::from_terms(
            &f,
            &V,
            [(vec![2, 1, 0], k(&f, 3)), (vec![0, 1, 2], AlgebraElement::sqrt_generator(&f, Generator::I))],
        )
        .unwrap();
        let pt = [k(&f, 2), k(&f, -1), AlgebraElement::sqrt_generator(&f, Generator::Two)];
        let expected = k(&f, -12) + AlgebraElement::sqrt_generator(&f, Generator::I) * k(&f, -2);
        assert_eq!(p.evaluate(&pt), expected);
    }

    #[test]
    fn meet_of_two_lines() {
        let f = setup();
        let l1 = LinearForm::new(vec![k(&f, 1), k(&f, 0), k(&f, 0)]);
        let l2 = LinearForm::new(vec![k(&f, 0), k(&f, 1), k(&f, -1)]);
        let p = l1.meet(&l2).unwrap();
        assert!(l1.evaluate(&p).is_zero() && l2.evaluate(&p).is_zero());
        assert!(l1.meet(&l1.normalized()).is_none());
    }
}
