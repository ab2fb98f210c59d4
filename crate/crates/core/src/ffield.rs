//! Prime fields and their extensions `F_q`, `q = p^k`, with quadratic characters.
//!
//! [`FieldElem`] is plain coefficient-vector arithmetic modulo a fixed irreducible polynomial.
//! [`FqTables`] encodes `F_q` as integers `0..q` (coefficient `c_i` is base-`p` digit `i`) with
//! discrete log tables, which is what the point counters use.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::exactalg::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FfError {
    #[error("modulus {0} is not an odd prime")]
    EvenOrCompositeModulus(u64),
    #[error("{p} divides the denominator of {value}")]
    DenominatorDivisible { value: String, p: u64 },
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field of order {p}^{k} is too large")]
    TooLarge { p: u64, k: u32 },
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Odd primes in `lo..hi`.
pub fn odd_primes(lo: u64, hi: u64) -> Vec<u64> {
    (lo.max(3)..hi).filter(|&n| is_prime(n)).collect()
}

fn check_odd_prime(p: u64) -> Result<(), FfError> {
    if p == 2 || !is_prime(p) {
        return Err(FfError::EvenOrCompositeModulus(p));
    }
    Ok(())
}

pub fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

pub fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

/// Euler's criterion.
pub fn legendre(a: i64, p: u64) -> Result<i8, FfError> {
    check_odd_prime(p)?;
    Ok(legendre_residue(a.rem_euclid(p as i64) as u64, p))
}

fn legendre_residue(r: u64, p: u64) -> i8 {
    match powmod(r, (p - 1) / 2, p) {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

/// Legendre symbol of a rational whose denominator is prime to `p`.
pub fn legendre_rational(r: &Rational, p: u64) -> Result<i8, FfError> {
    check_odd_prime(p)?;
    Ok(legendre_residue(reduce_rational(r, p)?, p))
}

/// `numerator · denominator⁻¹ mod p`.
pub fn reduce_rational(r: &Rational, p: u64) -> Result<u64, FfError> {
    let pb = BigInt::from(p);
    let d = r.denom().mod_floor(&pb);
    if d.is_zero() {
        return Err(FfError::DenominatorDivisible { value: crate::exactalg::fmt_rational(r), p });
    }
    let n = r.numer().mod_floor(&pb).to_u64().expect("reduced");
    Ok(mulmod(n, invmod(d.to_u64().expect("reduced"), p), p))
}

/// Polynomials over `F_p`, low degree first, without trailing zeros.
mod fp_poly {
    use super::{invmod, mulmod};

    pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
                .collect(),
        )
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
            }
        }
        trim(out)
    }

    pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut r = trim(a.to_vec());
        let dm = m.len() - 1;
        let lead_inv = invmod(m[dm], p);
        while r.len() > dm && !r.is_empty() {
            let shift = r.len() - 1 - dm;
            let c = mulmod(*r.last().unwrap(), lead_inv, p);
            for (i, &mi) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - mulmod(c, mi, p)) % p;
            }
            r = trim(r);
        }
        r
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    /// `x^(p^e) mod m`.
    pub fn frobenius_power_of_x(e: u32, m: &[u64], p: u64) -> Vec<u64> {
        let mut x = rem(&[0, 1], m, p);
        for _ in 0..e {
            x = powmod_poly(&x, p, m, p);
        }
        x
    }

    pub fn powmod_poly(a: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
        let mut r = rem(&[1], m, p);
        let mut b = rem(a, m, p);
        while e > 0 {
            if e & 1 == 1 {
                r = rem(&mul(&r, &b, p), m, p);
            }
            b = rem(&mul(&b, &b, p), m, p);
            e >>= 1;
        }
        r
    }
}

/// Rabin's test for a monic polynomial of degree `k` (coefficients low to high, leading 1).
pub fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let k = (poly.len() - 1) as u32;
    if k == 0 {
        return false;
    }
    let x = vec![0, 1];
    if fp_poly::sub(&fp_poly::frobenius_power_of_x(k, poly, p), &fp_poly::rem(&x, poly, p), p) != Vec::<u64>::new() {
        return false;
    }
    (2..=k).filter(|r| k.is_multiple_of(*r) && is_prime(*r as u64)).all(|r| {
        let h = fp_poly::sub(&fp_poly::frobenius_power_of_x(k / r, poly, p), &x, p);
        fp_poly::gcd(&h, poly, p).len() == 1
    })
}

/// The first monic irreducible of degree `k` when candidates `x^k + Σ c_i x^i` are enumerated
/// by the integer `Σ c_i p^i`; returned low to high with the leading 1.
pub fn irreducible_modulus(p: u64, k: u32) -> Result<Vec<u64>, FfError> {
    check_odd_prime(p)?;
    if k == 0 {
        return Err(FfError::ZeroDegree);
    }
    let count = p.checked_pow(k).ok_or(FfError::TooLarge { p, k })?;
    for n in 0..count {
        let mut poly: Vec<u64> = (0..k).scan(n, |m, _| {
            let d = *m % p;
            *m /= p;
            Some(d)
        }).collect();
        poly.push(1);
        if is_irreducible(&poly, p) {
            return Ok(poly);
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// `F_{p^k}` presented as `F_p[x]/(modulus)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    p: u64,
    k: u32,
    modulus: Vec<u64>,
}

impl FieldSpec {
    pub fn new(p: u64, k: u32) -> Result<Arc<FieldSpec>, FfError> {
        let modulus = irreducible_modulus(p, k)?;
        if p.checked_pow(k).is_none_or(|q| q > u32::MAX as u64) {
            return Err(FfError::TooLarge { p, k });
        }
        Ok(Arc::new(FieldSpec { p, k, modulus }))
    }

    pub fn prime(p: u64) -> Result<Arc<FieldSpec>, FfError> {
        FieldSpec::new(p, 1)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn q(&self) -> u64 {
        self.p.pow(self.k)
    }

    /// Monic modulus, low to high.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldElem {
    spec: Arc<FieldSpec>,
    coeffs: Vec<u64>,
}

impl FieldElem {
    pub fn from_coeffs(spec: &Arc<FieldSpec>, coeffs: &[u64]) -> FieldElem {
        let p = spec.p;
        let reduced = fp_poly::rem(&coeffs.iter().map(|c| c % p).collect::<Vec<_>>(), &spec.modulus, p);
        let mut c = reduced;
        c.resize(spec.k as usize, 0);
        FieldElem { spec: spec.clone(), coeffs: c }
    }

    pub fn from_int(spec: &Arc<FieldSpec>, n: i64) -> FieldElem {
        FieldElem::from_coeffs(spec, &[n.rem_euclid(spec.p as i64) as u64])
    }

    pub fn from_rational(spec: &Arc<FieldSpec>, r: &Rational) -> Result<FieldElem, FfError> {
        Ok(FieldElem::from_coeffs(spec, &[reduce_rational(r, spec.p)?]))
    }

    /// Element with base-`p` digits of `index` as coefficients.
    pub fn from_index(spec: &Arc<FieldSpec>, mut index: u64) -> FieldElem {
        let coeffs: Vec<u64> = (0..spec.k)
            .map(|_| {
                let d = index % spec.p;
                index /= spec.p;
                d
            })
            .collect();
        FieldElem { spec: spec.clone(), coeffs }
    }

    pub fn index(&self) -> u64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * self.spec.p + c)
    }

    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, o: &FieldElem) -> FieldElem {
        let p = self.spec.p;
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| (a + b) % p).collect();
        FieldElem { spec: self.spec.clone(), coeffs }
    }

    pub fn neg(&self) -> FieldElem {
        let p = self.spec.p;
        let coeffs = self.coeffs.iter().map(|a| (p - a) % p).collect();
        FieldElem { spec: self.spec.clone(), coeffs }
    }

    pub fn sub(&self, o: &FieldElem) -> FieldElem {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &FieldElem) -> FieldElem {
        let prod = fp_poly::mul(&self.coeffs, &o.coeffs, self.spec.p);
        FieldElem::from_coeffs(&self.spec, &prod)
    }

    pub fn pow(&self, mut e: u64) -> FieldElem {
        let mut r = FieldElem::from_int(&self.spec, 1);
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self) -> Option<FieldElem> {
        (!self.is_zero()).then(|| self.pow(self.spec.q() - 2))
    }

    pub fn frobenius(&self) -> FieldElem {
        self.pow(self.spec.p)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.spec.k == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        let parts: Vec<String> = self.coeffs.iter().map(u64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// `a^((q-1)/2)` mapped to `{-1, 0, 1}`.
pub fn quad_char(a: &FieldElem) -> i8 {
    if a.is_zero() {
        return 0;
    }
    let e = a.pow((a.spec.q() - 1) / 2);
    if e == FieldElem::from_int(&a.spec, 1) {
        1
    } else {
        -1
    }
}

/// Index-encoded `F_q` with log/exp tables.
#[derive(Debug, Clone)]
pub struct FqTables {
    spec: Arc<FieldSpec>,
    q: u32,
    p: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
    generator: u32,
}

impl FqTables {
    pub fn new(spec: &Arc<FieldSpec>) -> FqTables {
        let q = spec.q();
        let order = q - 1;
        let prime_factors: Vec<u64> = (2..=order).filter(|d| order.is_multiple_of(*d) && is_prime(*d)).collect();
        let one = FieldElem::from_int(spec, 1);
        let generator = (1..q)
            .map(|i| FieldElem::from_index(spec, i))
            .find(|g| prime_factors.iter().all(|r| g.pow(order / r) != one))
            .expect("F_q* is cyclic");
        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![u32::MAX; q as usize];
        let mut x = one;
        for i in 0..order {
            let idx = x.index() as u32;
            exp.push(idx);
            log[idx as usize] = i as u32;
            x = x.mul(&generator);
        }
        FqTables { spec: spec.clone(), q: q as u32, p: spec.p as u32, exp, log, generator: generator.index() as u32 }
    }

    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn generator(&self) -> u32 {
        self.generator
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == self.q {
            let s = a + b;
            return if s >= self.q { s - self.q } else { s };
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        while a > 0 || b > 0 {
            let d = (a % self.p + b % self.p) % self.p;
            out += d * place;
            place *= self.p;
            a /= self.p;
            b /= self.p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if self.p == self.q {
            return if a == 0 { 0 } else { self.q - a };
        }
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        while a > 0 {
            let d = (self.p - a % self.p) % self.p;
            out += d * place;
            place *= self.p;
            a /= self.p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let s = self.log[a as usize] as u64 + self.log[b as usize] as u64;
        self.exp[(s % (self.q as u64 - 1)) as usize]
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let s = self.log[a as usize] as u64 * (e % (self.q as u64 - 1));
        self.exp[(s % (self.q as u64 - 1)) as usize]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| {
            let n = self.q - 1;
            self.exp[((n - self.log[a as usize]) % n) as usize]
        })
    }

    /// The canonical embedding of `F_p`: residue `r` has index `r`.
    pub fn from_residue(&self, r: u64) -> u32 {
        (r % self.p as u64) as u32
    }

    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    pub fn from_rational(&self, r: &Rational) -> Result<u32, FfError> {
        Ok(self.from_residue(reduce_rational(r, self.p as u64)?))
    }

    pub fn quad_char(&self, a: u32) -> i8 {
        if a == 0 {
            0
        } else if self.log[a as usize].is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn elem(&self, a: u32) -> FieldElem {
        FieldElem::from_index(&self.spec, a as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, ratio};

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(-1, 5), Ok(1));
        assert_eq!(legendre(5, 7), Ok(-1));
        assert_eq!(legendre(14, 7), Ok(0));
        assert_eq!(legendre(3, 2), Err(FfError::EvenOrCompositeModulus(2)));
        assert_eq!(legendre(3, 9), Err(FfError::EvenOrCompositeModulus(9)));
    }

    #[test]
    fn small_moduli() {
        assert_eq!(irreducible_modulus(3, 2).unwrap(), vec![1, 0, 1]);
        assert_eq!(irreducible_modulus(5, 2).unwrap(), vec![2, 0, 1]);
        let m = irreducible_modulus(7, 3).unwrap();
        assert_eq!(m.len(), 4);
        // a cubic is irreducible iff it has no root
        assert!((0..7u64).all(|x| (0..4).rev().fold(0, |acc, i| (acc * x + m[i]) % 7) != 0));
    }

    #[test]
    fn reduction() {
        assert_eq!(reduce_rational(&ratio(1, 2), 5), Ok(3));
        assert_eq!(reduce_rational(&rat(7), 7), Ok(0));
        assert!(matches!(reduce_rational(&ratio(1, 5), 5), Err(FfError::DenominatorDivisible { .. })));
        assert_eq!(reduce_rational(&ratio(-3, 4), 7), Ok(1));
    }

    #[test]
    fn quad_char_cases() {
        let spec = FieldSpec::new(5, 2).unwrap();
        let t = FqTables::new(&spec);
        assert_eq!(quad_char(&FieldElem::from_int(&spec, 0)), 0);
        assert_eq!(quad_char(&FieldElem::from_int(&spec, 2)), 1);
        assert_eq!(quad_char(&t.elem(t.generator())), -1);
        assert_eq!(t.quad_char(t.generator()), -1);
    }

    #[test]
    fn tables_match_elementwise_arithmetic() {
        let spec = FieldSpec::new(3, 3).unwrap();
        let t = FqTables::new(&spec);
        for a in 0..27 {
            for b in 0..27 {
                let (ea, eb) = (t.elem(a), t.elem(b));
                assert_eq!(t.add(a, b) as u64, ea.add(&eb).index());
                assert_eq!(t.mul(a, b) as u64, ea.mul(&eb).index());
                assert_eq!(t.sub(a, b) as u64, ea.sub(&eb).index());
            }
        }
    }
}
