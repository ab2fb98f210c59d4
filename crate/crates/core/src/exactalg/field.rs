//! The multiquadratic field `Q(√d1, √d2, √d3, √d4)` and its sign-flip automorphisms.
//!
//! Elements are stored over the basis of the 16 subset products `√d_S = Π_{i∈S} √d_i`,
//! indexed by the little-endian bitmask `S`. Internally every element keeps integer
//! numerators over one common positive denominator, so multiplication never touches
//! rational normalisation until the very end.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{fmt_rational, rat, ratio, rational_sqrt, squarefree_part, Rational, SquareClass};
use super::ExactError;

pub const DEGREE: usize = 16;

/// One of the four generator slots, in the order `(√-1, √2, √(λ²+1), √(λ²-1))` for the
/// default field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    I,
    Two,
    Plus,
    Minus,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::I, Generator::Two, Generator::Plus, Generator::Minus];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Generator::I => "I",
            Generator::Two => "2",
            Generator::Plus => "plus",
            Generator::Minus => "minus",
        }
    }

    pub fn parse(s: &str) -> Option<Generator> {
        match s.trim().to_ascii_lowercase().as_str() {
            "i" | "sigma_i" => Some(Generator::I),
            "2" | "two" | "sigma_2" => Some(Generator::Two),
            "plus" | "+" | "sigma_plus" => Some(Generator::Plus),
            "minus" | "-" | "sigma_minus" => Some(Generator::Minus),
            _ => None,
        }
    }
}

/// Which of the four generators an automorphism negates.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector {
    mask: u8,
}

impl SignVector {
    pub const IDENTITY: SignVector = SignVector { mask: 0 };

    pub fn from_mask(mask: u8) -> SignVector {
        SignVector { mask: mask & 0xf }
    }

    pub fn from_flags(flip_i: bool, flip_2: bool, flip_plus: bool, flip_minus: bool) -> SignVector {
        SignVector::from_mask(flip_i as u8 | (flip_2 as u8) << 1 | (flip_plus as u8) << 2 | (flip_minus as u8) << 3)
    }

    pub fn flipping(gens: &[Generator]) -> SignVector {
        gens.iter().fold(SignVector::IDENTITY, |s, g| s.compose(SignVector::single(*g)))
    }

    pub fn single(g: Generator) -> SignVector {
        SignVector::from_mask(1 << g.index())
    }

    /// Parses a comma separated list such as `I,minus`; the empty string is the identity.
    pub fn parse(s: &str) -> Result<SignVector, ExactError> {
        let mut out = SignVector::IDENTITY;
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let g = Generator::parse(part).ok_or_else(|| ExactError::Parse(s.to_string()))?;
            out = out.compose(SignVector::single(g));
        }
        Ok(out)
    }

    pub fn mask(self) -> u8 {
        self.mask
    }

    pub fn flips(self, g: Generator) -> bool {
        self.mask >> g.index() & 1 == 1
    }

    pub fn flipped(self) -> Vec<Generator> {
        Generator::ALL.into_iter().filter(|g| self.flips(*g)).collect()
    }

    /// Composition of automorphisms, i.e. coordinatewise XOR.
    pub fn compose(self, other: SignVector) -> SignVector {
        SignVector::from_mask(self.mask ^ other.mask)
    }

    /// Eigenvalue of the generator `g` in this sign pattern: `-1` when flipped.
    pub fn eigenvalue(self, g: Generator) -> i64 {
        if self.flips(g) {
            -1
        } else {
            1
        }
    }

    /// Pairing `(-1)^{|self ∩ other|}`.
    pub fn pairing(self, other: SignVector) -> i64 {
        if (self.mask & other.mask).count_ones().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn all() -> impl Iterator<Item = SignVector> {
        (0u8..16).map(SignVector::from_mask)
    }

    /// Whether the basis vector `√d_S` changes sign.
    fn negates(self, subset: usize) -> bool {
        (self.mask as usize & subset).count_ones() % 2 == 1
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mask == 0 {
            return write!(f, "id");
        }
        let names: Vec<&str> = self.flipped().into_iter().map(Generator::name).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

impl serde::Serialize for SignVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `Q(√d1, …, √d4)` with the independence of all 16 square classes checked at construction.
#[derive(Debug)]
pub struct MultiQuadField {
    lambda: Rational,
    generators: [Rational; 4],
    /// `Π_{i∈S} d_i` for each subset.
    products: Vec<Rational>,
    classes: Vec<SquareClass>,
    /// Common denominator `D = Π den(d_i)`.
    scale: BigInt,
    /// `D · Π_{i∈S∩T} d_i`, always an integer.
    mul_table: Vec<BigInt>,
}

impl PartialEq for MultiQuadField {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for MultiQuadField {}

/// Default generators `(-1, 2, λ²+1, λ²-1)`.
pub fn default_generators(lambda: &Rational) -> [Rational; 4] {
    let l2 = lambda * lambda;
    [rat(-1), rat(2), &l2 + rat(1), &l2 - rat(1)]
}

fn check_lambda(lambda: &Rational) -> Result<(), ExactError> {
    let l2 = lambda * lambda;
    if &l2 * &l2 == rat(1) {
        return Err(ExactError::LambdaSingular(fmt_rational(lambda)));
    }
    Ok(())
}

/// Builds the field and verifies the 16 subset products are pairwise distinct square classes.
pub fn field_new(lambda: &Rational, generators: [Rational; 4]) -> Result<Arc<MultiQuadField>, ExactError> {
    check_lambda(lambda)?;
    if generators.iter().any(Zero::is_zero) {
        return Err(ExactError::ZeroInput);
    }
    let products: Vec<Rational> = (0..DEGREE)
        .map(|s| {
            (0..4)
                .filter(|i| s >> i & 1 == 1)
                .fold(rat(1), |acc, i| acc * &generators[i])
        })
        .collect();
    let classes: Vec<SquareClass> = products
        .iter()
        .map(|p| squarefree_part(p).expect("nonzero"))
        .collect();
    if let Some(s) = (1..DEGREE).find(|&s| classes[s].is_trivial()) {
        return Err(ExactError::DependentClasses { subset: s, product: fmt_rational(&products[s]) });
    }
    let scale = generators
        .iter()
        .fold(BigInt::one(), |acc, g| acc * g.denom());
    let scale_r = Rational::from_integer(scale.clone());
    let mut mul_table = Vec::with_capacity(DEGREE * DEGREE);
    for s in 0..DEGREE {
        for t in 0..DEGREE {
            let c = &products[s & t] * &scale_r;
            debug_assert!(c.is_integer());
            mul_table.push(c.to_integer());
        }
    }
    Ok(Arc::new(MultiQuadField { lambda: lambda.clone(), generators, products, classes, scale, mul_table }))
}

impl MultiQuadField {
    /// The field with the default generators for `λ`.
    pub fn for_lambda(lambda: &Rational) -> Result<Arc<MultiQuadField>, ExactError> {
        field_new(lambda, default_generators(lambda))
    }

    /// Like [`MultiQuadField::for_lambda`], but a default generator whose square class is
    /// already spanned by the earlier ones is replaced by the smallest odd prime outside the
    /// span. Every default square root remains expressible through
    /// [`AlgebraElement::sqrt_rational`].
    pub fn for_lambda_padded(lambda: &Rational) -> Result<Arc<MultiQuadField>, ExactError> {
        check_lambda(lambda)?;
        let defaults = default_generators(lambda);
        let mut span: Vec<SquareClass> = vec![squarefree_part(&rat(1)).unwrap()];
        let mut chosen: Vec<Rational> = Vec::with_capacity(4);
        let mut next_prime = 3i64;
        for d in defaults {
            let candidate = if d.is_zero() {
                None
            } else {
                let c = squarefree_part(&d).unwrap();
                (!span.contains(&c)).then_some(d)
            };
            let g = match candidate {
                Some(d) => d,
                None => loop {
                    let p = rat(next_prime);
                    next_prime = next_odd_prime(next_prime);
                    if !span.contains(&squarefree_part(&p).unwrap()) {
                        break p;
                    }
                },
            };
            let gc = squarefree_part(&g).unwrap();
            let extended: Vec<SquareClass> = span.iter().map(|c| c.mul(&gc)).collect();
            span.extend(extended);
            chosen.push(g);
        }
        field_new(lambda, chosen.try_into().expect("four generators"))
    }

    pub fn lambda(&self) -> &Rational {
        &self.lambda
    }

    pub fn generators(&self) -> &[Rational; 4] {
        &self.generators
    }

    pub fn generator(&self, g: Generator) -> &Rational {
        &self.generators[g.index()]
    }

    /// `Π_{i∈S} d_i`.
    pub fn subset_product(&self, subset: usize) -> &Rational {
        &self.products[subset]
    }

    pub fn subset_class(&self, subset: usize) -> &SquareClass {
        &self.classes[subset]
    }

    /// Subset `S` whose product lies in the square class of `r`, if any.
    pub fn subset_for_class(&self, class: &SquareClass) -> Option<usize> {
        self.classes.iter().position(|c| c == class)
    }
}

fn next_odd_prime(n: i64) -> i64 {
    let mut m = n + 2;
    while (3..).step_by(2).take_while(|d| d * d <= m).any(|d| m % d == 0) {
        m += 2;
    }
    m
}

/// Element of a [`MultiQuadField`].
#[derive(Clone, Debug)]
pub struct AlgebraElement {
    field: Arc<MultiQuadField>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        same_field(&self.field, &other.field) && self.num == other.num && self.den == other.den
    }
}

impl Eq for AlgebraElement {}

fn same_field(a: &Arc<MultiQuadField>, b: &Arc<MultiQuadField>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl AlgebraElement {
    fn from_parts(field: Arc<MultiQuadField>, mut num: Vec<BigInt>, mut den: BigInt) -> AlgebraElement {
        if den.is_negative() {
            den = -den;
            num.iter_mut().for_each(|x| *x = -&*x);
        }
        let g = num.iter().fold(den.clone(), |g, x| g.gcd(x));
        if !g.is_one() && !g.is_zero() {
            num.iter_mut().for_each(|x| *x = &*x / &g);
            den /= &g;
        }
        if num.iter().all(Zero::is_zero) {
            den = BigInt::one();
        }
        AlgebraElement { field, num, den }
    }

    pub fn zero(field: &Arc<MultiQuadField>) -> AlgebraElement {
        AlgebraElement { field: field.clone(), num: vec![BigInt::zero(); DEGREE], den: BigInt::one() }
    }

    pub fn one(field: &Arc<MultiQuadField>) -> AlgebraElement {
        AlgebraElement::from_rational(field, &rat(1))
    }

    pub fn from_rational(field: &Arc<MultiQuadField>, r: &Rational) -> AlgebraElement {
        AlgebraElement::basis_scaled(field, 0, r)
    }

    pub fn from_i64(field: &Arc<MultiQuadField>, n: i64) -> AlgebraElement {
        AlgebraElement::from_rational(field, &rat(n))
    }

    /// `r · √d_S`.
    pub fn basis_scaled(field: &Arc<MultiQuadField>, subset: usize, r: &Rational) -> AlgebraElement {
        assert!(subset < DEGREE);
        let mut num = vec![BigInt::zero(); DEGREE];
        num[subset] = r.numer().clone();
        AlgebraElement::from_parts(field.clone(), num, r.denom().clone())
    }

    /// `√d_g` for one generator.
    pub fn sqrt_generator(field: &Arc<MultiQuadField>, g: Generator) -> AlgebraElement {
        AlgebraElement::basis_scaled(field, 1 << g.index(), &rat(1))
    }

    /// A square root of the rational `r` inside the field, `t · √d_S` with `t > 0`.
    pub fn sqrt_rational(field: &Arc<MultiQuadField>, r: &Rational) -> Result<AlgebraElement, ExactError> {
        let class = squarefree_part(r)?;
        let subset = field
            .subset_for_class(&class)
            .ok_or_else(|| ExactError::NotInField(fmt_rational(r)))?;
        let t = rational_sqrt(&(r / field.subset_product(subset)))
            .expect("same square class, so the quotient is a positive square");
        Ok(AlgebraElement::basis_scaled(field, subset, &t))
    }

    /// Rebuilds an element from its 16 rational coordinates.
    pub fn from_coords(field: &Arc<MultiQuadField>, coords: &[Rational]) -> Result<AlgebraElement, ExactError> {
        if coords.len() != DEGREE {
            return Err(ExactError::CoordinateCount(coords.len()));
        }
        let den = coords.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coords.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        Ok(AlgebraElement::from_parts(field.clone(), num, den))
    }

    /// Parses the 16-string serialisation produced by [`AlgebraElement::to_coord_strings`].
    pub fn from_coord_strings<S: AsRef<str>>(field: &Arc<MultiQuadField>, coords: &[S]) -> Result<AlgebraElement, ExactError> {
        let parsed = coords
            .iter()
            .map(|s| super::rational::parse_rational(s.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        AlgebraElement::from_coords(field, &parsed)
    }

    pub fn field(&self) -> &Arc<MultiQuadField> {
        &self.field
    }

    pub fn coord(&self, subset: usize) -> Rational {
        Rational::new(self.num[subset].clone(), self.den.clone())
    }

    pub fn coords(&self) -> Vec<Rational> {
        (0..DEGREE).map(|s| self.coord(s)).collect()
    }

    /// Coordinates as strings `"n"` or `"n/d"`, subset-index order.
    pub fn to_coord_strings(&self) -> Vec<String> {
        self.coords().iter().map(fmt_rational).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.is_rational() && self.num[0] == self.den
    }

    /// True when only the constant coordinate is nonzero.
    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coord(0))
    }

    pub fn scale(&self, r: &Rational) -> AlgebraElement {
        let num = self.num.iter().map(|x| x * r.numer()).collect();
        AlgebraElement::from_parts(self.field.clone(), num, &self.den * r.denom())
    }

    /// The image under the automorphism negating the flipped generators.
    pub fn apply_sign(&self, s: SignVector) -> AlgebraElement {
        let num = self
            .num
            .iter()
            .enumerate()
            .map(|(i, x)| if s.negates(i) { -x } else { x.clone() })
            .collect();
        AlgebraElement { field: self.field.clone(), num, den: self.den.clone() }
    }

    fn check_field(&self, other: &AlgebraElement) {
        assert!(same_field(&self.field, &other.field), "elements of different multiquadratic fields");
    }

    pub fn add_ref(&self, other: &AlgebraElement) -> AlgebraElement {
        self.check_field(other);
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(a, b)| a * &other.den + b * &self.den)
            .collect();
        AlgebraElement::from_parts(self.field.clone(), num, &self.den * &other.den)
    }

    pub fn sub_ref(&self, other: &AlgebraElement) -> AlgebraElement {
        self.add_ref(&other.neg_ref())
    }

    pub fn neg_ref(&self) -> AlgebraElement {
        AlgebraElement {
            field: self.field.clone(),
            num: self.num.iter().map(|x| -x).collect(),
            den: self.den.clone(),
        }
    }

    pub fn mul_ref(&self, other: &AlgebraElement) -> AlgebraElement {
        self.check_field(other);
        let mut acc = vec![BigInt::zero(); DEGREE];
        let nz_other: Vec<usize> = (0..DEGREE).filter(|&t| !other.num[t].is_zero()).collect();
        for s in (0..DEGREE).filter(|&s| !self.num[s].is_zero()) {
            for &t in &nz_other {
                let c = &self.field.mul_table[s * DEGREE + t];
                acc[s ^ t] += c * &self.num[s] * &other.num[t];
            }
        }
        AlgebraElement::from_parts(self.field.clone(), acc, &self.den * &other.den * &self.field.scale)
    }

    pub fn square(&self) -> AlgebraElement {
        self.mul_ref(self)
    }

    pub fn pow(&self, e: u32) -> AlgebraElement {
        let mut out = AlgebraElement::one(&self.field);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul_ref(&base);
            }
            base = base.square();
            e >>= 1;
        }
        out
    }

    /// Multiplicative inverse by successive conjugation through the four quadratic layers:
    /// after multiplying by the conjugates under σ_1, …, σ_4 in turn, the running product is
    /// rational.
    pub fn inv(&self) -> Result<AlgebraElement, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let mut acc = AlgebraElement::one(&self.field);
        let mut norm = self.clone();
        for g in Generator::ALL {
            let c = norm.apply_sign(SignVector::single(g));
            acc = acc.mul_ref(&c);
            norm = norm.mul_ref(&c);
        }
        let n = norm.as_rational().expect("full norm is rational");
        debug_assert!(!n.is_zero());
        Ok(acc.scale(&(rat(1) / n)))
    }

    pub fn div_ref(&self, other: &AlgebraElement) -> Result<AlgebraElement, ExactError> {
        Ok(self.mul_ref(&other.inv()?))
    }

    /// A square root inside the field, if one exists. Works down the tower
    /// `Q ⊂ Q(√d1) ⊂ … ⊂ L`: writing `x = p + q√d` over the previous layer, a root `r + s√d`
    /// has `r² = (p ± √(p² - dq²))/2` and `s = q/(2r)`.
    pub fn sqrt(&self) -> Option<AlgebraElement> {
        self.sqrt_in_layer(4)
    }

    fn sqrt_in_layer(&self, k: usize) -> Option<AlgebraElement> {
        if self.is_zero() {
            return Some(self.clone());
        }
        if k == 0 {
            let r = rational_sqrt(&self.as_rational()?)?;
            return Some(AlgebraElement::from_rational(&self.field, &r));
        }
        let bit = 1usize << (k - 1);
        let d = self.field.products[bit].clone();
        let (mut p_num, mut q_num) = (vec![BigInt::zero(); DEGREE], vec![BigInt::zero(); DEGREE]);
        for m in 0..bit {
            p_num[m] = self.num[m].clone();
            q_num[m] = self.num[m | bit].clone();
        }
        let p = AlgebraElement::from_parts(self.field.clone(), p_num, self.den.clone());
        let q = AlgebraElement::from_parts(self.field.clone(), q_num, self.den.clone());
        let root_d = AlgebraElement::basis_scaled(&self.field, bit, &rat(1));
        if q.is_zero() {
            if let Some(r) = p.sqrt_in_layer(k - 1) {
                return Some(r);
            }
            let s = p.scale(&(rat(1) / &d)).sqrt_in_layer(k - 1)?;
            return Some(s * root_d);
        }
        let m = (p.square() - q.square().scale(&d)).sqrt_in_layer(k - 1)?;
        for cand in [&p + &m, &p - &m] {
            if let Some(r) = cand.scale(&ratio(1, 2)).sqrt_in_layer(k - 1) {
                if r.is_zero() {
                    continue;
                }
                let s = q.div_ref(&r.scale(&rat(2))).ok()?;
                return Some(r + s * root_d);
            }
        }
        None
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for s in 0..DEGREE {
            let c = self.coord(s);
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = if c.is_negative() { (true, -c) } else { (false, c) };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            if s == 0 {
                write!(f, "{}", fmt_rational(&mag))?;
            } else {
                if mag != rat(1) {
                    write!(f, "{}*", fmt_rational(&mag))?;
                }
                write!(f, "sqrt({})", fmt_rational(self.field.subset_product(s)))?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $inner:ident) => {
        impl $tr<&AlgebraElement> for &AlgebraElement {
            type Output = AlgebraElement;
            fn $m(self, rhs: &AlgebraElement) -> AlgebraElement {
                self.$inner(rhs)
            }
        }
        impl $tr<AlgebraElement> for AlgebraElement {
            type Output = AlgebraElement;
            fn $m(self, rhs: AlgebraElement) -> AlgebraElement {
                (&self).$inner(&rhs)
            }
        }
        impl $tr<&AlgebraElement> for AlgebraElement {
            type Output = AlgebraElement;
            fn $m(self, rhs: &AlgebraElement) -> AlgebraElement {
                (&self).$inner(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.neg_ref()
    }
}

impl Neg for AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::ratio;

    fn field2() -> Arc<MultiQuadField> {
        MultiQuadField::for_lambda(&rat(2)).unwrap()
    }

    fn root(f: &Arc<MultiQuadField>, g: Generator) -> AlgebraElement {
        AlgebraElement::sqrt_generator(f, g)
    }

    #[test]
    fn degree_sixteen_at_two() {
        let f = field2();
        assert_eq!(f.generators(), &[rat(-1), rat(2), rat(5), rat(3)]);
        let classes: std::collections::BTreeSet<_> = (0..DEGREE).map(|s| f.subset_class(s).clone()).collect();
        assert_eq!(classes.len(), 16);
    }

    #[test]
    fn degenerate_parameters() {
        assert!(matches!(
            MultiQuadField::for_lambda(&rat(0)),
            Err(ExactError::DependentClasses { .. })
        ));
        assert!(matches!(MultiQuadField::for_lambda(&rat(1)), Err(ExactError::LambdaSingular(_))));
        assert!(matches!(MultiQuadField::for_lambda(&rat(-1)), Err(ExactError::LambdaSingular(_))));
        // λ = 3: λ²-1 = 8 lies in the class of 2
        assert!(matches!(
            MultiQuadField::for_lambda(&rat(3)),
            Err(ExactError::DependentClasses { .. })
        ));
    }

    #[test]
    fn padded_field_keeps_default_roots() {
        let f = MultiQuadField::for_lambda_padded(&rat(3)).unwrap();
        assert_eq!(f.generators(), &[rat(-1), rat(2), rat(10), rat(3)]);
        let s = AlgebraElement::sqrt_rational(&f, &rat(8)).unwrap();
        assert_eq!(s.square(), AlgebraElement::from_i64(&f, 8));
        let f0 = MultiQuadField::for_lambda_padded(&rat(0)).unwrap();
        assert_eq!(f0.generators(), &[rat(-1), rat(2), rat(3), rat(5)]);
    }

    #[test]
    fn defining_relations() {
        let f = field2();
        let i = root(&f, Generator::I);
        assert_eq!(i.square(), AlgebraElement::from_i64(&f, -1));
        let r2 = root(&f, Generator::Two);
        let inv = r2.inv().unwrap();
        assert_eq!(inv, r2.scale(&ratio(1, 2)));
        let a = root(&f, Generator::Plus);
        let b = root(&f, Generator::Minus);
        assert_eq!((&a + &b) * (&a - &b), AlgebraElement::from_i64(&f, 5 - 3));
    }

    #[test]
    fn sign_action_examples() {
        let f = field2();
        let i = root(&f, Generator::I);
        assert_eq!(i.apply_sign(SignVector::single(Generator::I)), -&i);
        let x = &i * &root(&f, Generator::Minus);
        let s = SignVector::flipping(&[Generator::I, Generator::Minus]);
        assert_eq!(x.apply_sign(s), x);
        let one = AlgebraElement::one(&f);
        assert!(SignVector::all().all(|s| one.apply_sign(s) == one));
    }

    #[test]
    fn sqrt_rational_in_span() {
        let f = field2();
        let s = AlgebraElement::sqrt_rational(&f, &ratio(-30, 4)).unwrap();
        assert_eq!(s.square(), AlgebraElement::from_rational(&f, &ratio(-30, 4)));
        assert!(matches!(AlgebraElement::sqrt_rational(&f, &rat(7)), Err(ExactError::NotInField(_))));
    }

    #[test]
    fn sqrt_of_squares_and_nonsquares() {
        let f = field2();
        let x = &root(&f, Generator::I).scale(&ratio(3, 4)) + &root(&f, Generator::Plus) - AlgebraElement::from_i64(&f, 7);
        let y = (&x * &root(&f, Generator::Two)).square();
        let r = y.sqrt().unwrap();
        assert_eq!(r.square(), y);
        assert!(root(&f, Generator::I).sqrt().is_some());
        assert!(AlgebraElement::from_i64(&f, 7).sqrt().is_none());
        assert!(root(&f, Generator::Two).sqrt().is_none());
    }

    #[test]
    fn coordinate_strings_roundtrip() {
        let f = field2();
        let x = &root(&f, Generator::I).scale(&ratio(3, 4)) + &AlgebraElement::from_rational(&f, &ratio(-1, 6));
        let strings = x.to_coord_strings();
        assert_eq!(strings[0], "-1/6");
        assert_eq!(strings[1], "3/4");
        assert_eq!(AlgebraElement::from_coord_strings(&f, &strings).unwrap(), x);
    }

    #[test]
    fn sign_vector_parsing() {
        let s = SignVector::parse("I,minus").unwrap();
        assert_eq!(s, SignVector::from_flags(true, false, false, true));
        assert_eq!(SignVector::parse("").unwrap(), SignVector::IDENTITY);
        assert!(SignVector::parse("I,bogus").is_err());
        assert_eq!(s.to_string(), "{I,minus}");
    }
}
