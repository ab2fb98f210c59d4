//! Point counts of the Dwork surface `X_λ` and its mirror quotient `M_λ` over `F_q`, and the
//! congruences and trace identity relating them.
//!
//! The default [`Strategy::Histogram`] fixes two affine coordinates, which turns the equation in
//! the third into `z⁴ + Bz + C = 0` with `B` depending only on the product of the fixed
//! coordinates. Grouping the pairs by that product, one root histogram of `z ↦ z⁴ + Bz` per `B`
//! answers every pair in the group, so a chart costs `O(q²)` instead of `O(q³)`.
//! [`Strategy::Direct`] is the plain triple loop and serves as a cross-check.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::exactalg::{fmt_rational, rat, Rational};
use crate::ffield::{self, quad_char, FfError, FieldElem, FieldSpec, FqTables};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error(transparent)]
    Field(#[from] FfError),
    #[error("characteristic 2 is not supported")]
    EvenCharacteristic,
    #[error("bad reduction at p = {p}: {reason}")]
    BadReduction { p: u64, reason: String },
    #[error("the mirror family needs lambda != 0 mod p")]
    LambdaZero,
    #[error("p = {0} ramifies in one of the quadratic characters")]
    RamifiedPrime(u64),
    #[error("p = {0} is excluded for this congruence")]
    PrimeExcluded(u64),
    #[error("trace identity violated: #X - #Y = {lhs}, q(t_ns - 19) = {rhs}")]
    IdentityViolated { lhs: i64, rhs: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Model {
    #[serde(rename = "x")]
    DworkX,
    #[serde(rename = "m")]
    MirrorM,
    #[serde(rename = "y")]
    ResolutionY,
}

impl Model {
    pub fn parse(s: &str) -> Option<Model> {
        match s.to_ascii_lowercase().as_str() {
            "x" | "dwork" => Some(Model::DworkX),
            "m" | "mirror" => Some(Model::MirrorM),
            "y" | "resolution" => Some(Model::ResolutionY),
            _ => None,
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Model::DworkX => "x",
            Model::MirrorM => "m",
            Model::ResolutionY => "y",
        })
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Strategy {
    #[default]
    Histogram,
    Direct,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub model: Model,
    pub lambda: String,
    pub p: u64,
    pub k: u32,
    pub q: u64,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceReport {
    pub lambda: String,
    pub p: u64,
    pub k: u32,
    pub q: u64,
    pub predicted_tns: i64,
    pub x_count: u64,
    pub y_count: u64,
    /// `#X - 1 - q² - q·t_ns`.
    pub t_transcendental: i64,
    /// The same residual computed from `#Y`, where Frobenius acts trivially on NS.
    pub t_transcendental_from_y: i64,
    pub passed: bool,
}

impl TraceReport {
    pub fn within_weil_bound(&self) -> bool {
        self.t_transcendental.unsigned_abs() <= 3 * self.q
    }

    pub fn into_result(self) -> Result<TraceReport, CountError> {
        if self.passed {
            Ok(self)
        } else {
            Err(CountError::IdentityViolated {
                lhs: self.x_count as i64 - self.y_count as i64,
                rhs: self.q as i64 * (self.predicted_tns - 19),
            })
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceReport {
    pub lambda: String,
    pub p: u64,
    pub k: u32,
    pub modulus: u64,
    pub x_count: u64,
    pub y_count: u64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveReport {
    pub lambda: String,
    pub p: u64,
    pub k: u32,
    pub n_x: usize,
    pub n_y: usize,
    /// Roots as field-element indices (base-`p` digits of the coefficients).
    pub roots_x: Vec<u64>,
    pub roots_y: Vec<u64>,
    pub bijection_ok: bool,
}

/// Why a prime is unusable for a given `λ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Inadmissible {
    EvenCharacteristic,
    NotPrime,
    DenominatorDivisible,
    RamifiedPrime,
    LambdaZero,
}

impl fmt::Display for Inadmissible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Inadmissible::EvenCharacteristic => "EvenCharacteristic",
            Inadmissible::NotPrime => "NotPrime",
            Inadmissible::DenominatorDivisible => "DenominatorDivisible",
            Inadmissible::RamifiedPrime => "RamifiedPrime",
            Inadmissible::LambdaZero => "LambdaZero",
        })
    }
}

/// Good-reduction test: `p` odd prime, `p ∤ den(λ)`, `p ∤ 2·num(λ⁴-1)`, and `λ ≢ 0` when the
/// mirror side is needed.
pub fn admissible(lambda: &Rational, p: u64, need_mirror: bool) -> Result<(), Inadmissible> {
    if p == 2 {
        return Err(Inadmissible::EvenCharacteristic);
    }
    if !ffield::is_prime(p) {
        return Err(Inadmissible::NotPrime);
    }
    let l = ffield::reduce_rational(lambda, p).map_err(|_| Inadmissible::DenominatorDivisible)?;
    if ffield::powmod(l, 4, p) == 1 {
        return Err(Inadmissible::RamifiedPrime);
    }
    if need_mirror && l == 0 {
        return Err(Inadmissible::LambdaZero);
    }
    Ok(())
}

fn reduce_lambda(lambda: &Rational, spec: &FieldSpec, mirror: bool) -> Result<u64, CountError> {
    let p = spec.p();
    if p == 2 {
        return Err(CountError::EvenCharacteristic);
    }
    let l = ffield::reduce_rational(lambda, p).map_err(|e| match e {
        FfError::DenominatorDivisible { .. } => CountError::BadReduction { p, reason: format!("{p} divides the denominator of lambda") },
        other => CountError::Field(other),
    })?;
    if ffield::powmod(l, 4, p) == 1 {
        return Err(CountError::BadReduction { p, reason: "lambda^4 = 1 mod p".into() });
    }
    if mirror && l == 0 {
        return Err(CountError::LambdaZero);
    }
    Ok(l)
}

struct Ctx {
    t: FqTables,
    fourth: Vec<u32>,
}

impl Ctx {
    fn new(spec: &Arc<FieldSpec>) -> Ctx {
        let t = FqTables::new(spec);
        let fourth = (0..t.q()).map(|x| t.pow(x, 4)).collect();
        Ctx { t, fourth }
    }

    fn q(&self) -> u32 {
        self.t.q()
    }

    /// `#{z : z⁴ + b·z = v}` for all `v`.
    fn histogram(&self, b: u32, out: &mut [u32]) {
        out.iter_mut().for_each(|h| *h = 0);
        for z in 0..self.q() {
            let v = self.t.add(self.fourth[z as usize], self.t.mul(b, z));
            out[v as usize] += 1;
        }
    }

    /// `Σ_{(a,b) : ab = t}` of `f(a, b)`.
    fn for_product(&self, t: u32, mut f: impl FnMut(u32, u32)) {
        let q = self.q();
        if t == 0 {
            for a in 0..q {
                f(a, 0);
            }
            for b in 1..q {
                f(0, b);
            }
        } else {
            for a in 1..q {
                f(a, self.t.mul(t, self.t.inv(a).unwrap()));
            }
        }
    }

    /// Number of `(a, b)` with `1 + a⁴ + b⁴ = 0`.
    fn fermat_curve_affine(&self) -> u64 {
        let mut h = vec![0u64; self.q() as usize];
        for &f in &self.fourth {
            h[f as usize] += 1;
        }
        let one = self.t.from_int(1);
        (0..self.q())
            .map(|a| h[self.t.neg(self.t.add(one, self.fourth[a as usize])) as usize])
            .sum()
    }
}

/// Projective points of `X_λ : ΣX_i⁴ - 4λX0X1X2X3 = 0` over `F_q`.
pub fn count_x(lambda: &Rational, spec: &Arc<FieldSpec>) -> Result<CountReport, CountError> {
    count_x_with(lambda, spec, Strategy::default())
}

pub fn count_x_with(lambda: &Rational, spec: &Arc<FieldSpec>, strategy: Strategy) -> Result<CountReport, CountError> {
    let l = reduce_lambda(lambda, spec, false)?;
    let cx = Ctx::new(spec);
    let t = &cx.t;
    let one = t.from_int(1);
    let c = t.mul(t.from_int(-4), t.from_residue(l));
    let q = cx.q();
    let chart0: u64 = match strategy {
        Strategy::Histogram => (0..q)
            .into_par_iter()
            .map_init(
                || vec![0u32; q as usize],
                |hist, prod| {
                    let b = t.mul(c, prod);
                    if c == 0 && prod != 0 {
                        return 0;
                    }
                    cx.histogram(b, hist);
                    let mut n = 0u64;
                    let mut visit = |x1: u32, x2: u32| {
                        let cc = t.add(one, t.add(cx.fourth[x1 as usize], cx.fourth[x2 as usize]));
                        n += hist[t.neg(cc) as usize] as u64;
                    };
                    if c == 0 {
                        for x1 in 0..q {
                            for x2 in 0..q {
                                visit(x1, x2);
                            }
                        }
                    } else {
                        cx.for_product(prod, visit);
                    }
                    n
                },
            )
            .sum(),
        Strategy::Direct => (0..q)
            .into_par_iter()
            .map(|x1| {
                let mut n = 0u64;
                for x2 in 0..q {
                    let base = t.add(one, t.add(cx.fourth[x1 as usize], cx.fourth[x2 as usize]));
                    let b = t.mul(c, t.mul(x1, x2));
                    for x3 in 0..q {
                        let v = t.add(base, t.add(cx.fourth[x3 as usize], t.mul(b, x3)));
                        n += (v == 0) as u64;
                    }
                }
                n
            })
            .sum(),
    };
    let chart1 = cx.fermat_curve_affine();
    let chart2 = (0..q).filter(|&x| t.add(one, cx.fourth[x as usize]) == 0).count() as u64;
    Ok(report(Model::DworkX, lambda, spec, chart0 + chart1 + chart2))
}

/// Projective points of `M_λ : (ΣY_i)⁴ - (4λ)⁴Y0Y1Y2Y3 = 0` over `F_q`, singular points included.
pub fn count_m(lambda: &Rational, spec: &Arc<FieldSpec>) -> Result<CountReport, CountError> {
    count_m_with(lambda, spec, Strategy::default())
}

pub fn count_m_with(lambda: &Rational, spec: &Arc<FieldSpec>, strategy: Strategy) -> Result<CountReport, CountError> {
    let l = reduce_lambda(lambda, spec, true)?;
    let cx = Ctx::new(spec);
    let t = &cx.t;
    let one = t.from_int(1);
    let big_l = t.pow(t.mul(t.from_int(4), t.from_residue(l)), 4);
    let q = cx.q();
    // Y0 = 1, z = 1 + y1 + y2 + y3: z⁴ + Bz = B·s with B = -L·y1·y2, s = 1 + y1 + y2
    let chart0: u64 = match strategy {
        Strategy::Histogram => (0..q)
            .into_par_iter()
            .map_init(
                || vec![0u32; q as usize],
                |hist, prod| {
                    let b = t.neg(t.mul(big_l, prod));
                    cx.histogram(b, hist);
                    let mut n = 0u64;
                    cx.for_product(prod, |y1, y2| {
                        let s = t.add(one, t.add(y1, y2));
                        n += hist[t.mul(b, s) as usize] as u64;
                    });
                    n
                },
            )
            .sum(),
        Strategy::Direct => (0..q)
            .into_par_iter()
            .map(|y1| {
                let mut n = 0u64;
                for y2 in 0..q {
                    let s = t.add(one, t.add(y1, y2));
                    let m = t.mul(big_l, t.mul(y1, y2));
                    for y3 in 0..q {
                        let v = t.sub(cx.fourth[t.add(s, y3) as usize], t.mul(m, y3));
                        n += (v == 0) as u64;
                    }
                }
                n
            })
            .sum(),
    };
    // Y0 = 0, Y1 = 1: the line 1 + y2 + y3 = 0; Y0 = Y1 = 0, Y2 = 1: the point y3 = -1
    let rest = q as u64 + 1;
    Ok(report(Model::MirrorM, lambda, spec, chart0 + rest))
}

/// `#M + 18q`: each of the six rational A₃ points becomes a chain of three rational curves.
pub fn count_y(lambda: &Rational, spec: &Arc<FieldSpec>) -> Result<CountReport, CountError> {
    let m = count_m(lambda, spec)?;
    Ok(CountReport { model: Model::ResolutionY, count: m.count + 18 * m.q, ..m })
}

fn report(model: Model, lambda: &Rational, spec: &FieldSpec, count: u64) -> CountReport {
    CountReport { model, lambda: fmt_rational(lambda), p: spec.p(), k: spec.k(), q: spec.q(), count }
}

/// The four arguments `(-(λ²-1), -(λ²+1), -2(λ⁴-1), 2(λ⁴-1))` with weights `(3, 3, 6, 6)`.
pub fn character_arguments(lambda: &Rational) -> [(Rational, i64); 4] {
    let l2 = lambda * lambda;
    let l4m1 = &l2 * &l2 - rat(1);
    [
        (-(&l2 - rat(1)), 3),
        (-(&l2 + rat(1)), 3),
        (rat(-2) * &l4m1, 6),
        (rat(2) * &l4m1, 6),
    ]
}

/// `1 + 3χ(-(λ²-1)) + 3χ(-(λ²+1)) + 6χ(-2(λ⁴-1)) + 6χ(2(λ⁴-1))` with `χ` the quadratic
/// character of `F_q`.
pub fn t_ns_predicted(lambda: &Rational, spec: &Arc<FieldSpec>) -> Result<i64, CountError> {
    let p = spec.p();
    if p == 2 {
        return Err(CountError::EvenCharacteristic);
    }
    let mut total = 1;
    for (a, w) in character_arguments(lambda) {
        let e = FieldElem::from_rational(spec, &a).map_err(|_| CountError::RamifiedPrime(p))?;
        match quad_char(&e) {
            0 => return Err(CountError::RamifiedPrime(p)),
            s => total += w * s as i64,
        }
    }
    Ok(total)
}

pub fn verify_trace_identity(lambda: &Rational, spec: &Arc<FieldSpec>) -> Result<TraceReport, CountError> {
    let t = t_ns_predicted(lambda, spec)?;
    let x = count_x(lambda, spec)?.count;
    let y = count_y(lambda, spec)?.count;
    let q = spec.q() as i64;
    let base = 1 + q * q;
    Ok(TraceReport {
        lambda: fmt_rational(lambda),
        p: spec.p(),
        k: spec.k(),
        q: spec.q(),
        predicted_tns: t,
        x_count: x,
        y_count: y,
        t_transcendental: x as i64 - base - q * t,
        t_transcendental_from_y: y as i64 - base - 19 * q,
        passed: x as i64 - y as i64 == q * (t - 19),
    })
}

fn congruence(lambda: &Rational, p: u64, k: u32, factor: u64) -> Result<CongruenceReport, CountError> {
    let spec = FieldSpec::new(p, k)?;
    t_ns_predicted(lambda, &spec)?;
    let x = count_x(lambda, &spec)?.count;
    let y = count_y(lambda, &spec)?.count;
    let modulus = factor * spec.q();
    Ok(CongruenceReport {
        lambda: fmt_rational(lambda),
        p,
        k,
        modulus,
        x_count: x,
        y_count: y,
        passed: x % modulus == y % modulus,
    })
}

/// `#X(F_q) ≡ #Y(F_q) (mod q)`.
pub fn verify_wan(lambda: &Rational, p: u64, k: u32) -> Result<CongruenceReport, CountError> {
    if p == 2 {
        return Err(CountError::EvenCharacteristic);
    }
    congruence(lambda, p, k, 1)
}

/// `#X(F_q) ≡ #Y(F_q) (mod 3q)` for `p ∉ {2, 3}`.
pub fn verify_mod3q(lambda: &Rational, p: u64, k: u32) -> Result<CongruenceReport, CountError> {
    if p == 2 || p == 3 {
        return Err(CountError::PrimeExcluded(p));
    }
    congruence(lambda, p, k, 3)
}

/// Roots of `u⁴ - 4λu + 3` and `(s+3)⁴ - (4λ)⁴s` in `F_q`, and whether `u ↦ u⁴` matches them.
pub fn curve_counts(lambda: &Rational, spec: &Arc<FieldSpec>) -> Result<CurveReport, CountError> {
    let l = reduce_lambda(lambda, spec, true)?;
    let t = FqTables::new(spec);
    let lam = t.from_residue(l);
    let three = t.from_int(3);
    let four_l = t.mul(t.from_int(4), lam);
    let big_l = t.pow(four_l, 4);
    let roots_x: Vec<u32> = (0..t.q())
        .filter(|&u| t.add(t.sub(t.pow(u, 4), t.mul(four_l, u)), three) == 0)
        .collect();
    let roots_y: Vec<u32> = (0..t.q())
        .filter(|&s| t.sub(t.pow(t.add(s, three), 4), t.mul(big_l, s)) == 0)
        .collect();
    let mut image: Vec<u32> = roots_x.iter().map(|&u| t.pow(u, 4)).collect();
    image.sort_unstable();
    let injective = image.windows(2).all(|w| w[0] != w[1]);
    let bijection_ok = injective && image == roots_y;
    Ok(CurveReport {
        lambda: fmt_rational(lambda),
        p: spec.p(),
        k: spec.k(),
        n_x: roots_x.len(),
        n_y: roots_y.len(),
        roots_x: roots_x.into_iter().map(u64::from).collect(),
        roots_y: roots_y.into_iter().map(u64::from).collect(),
        bijection_ok,
    })
}

/// Primes in `lo..hi` passing [`admissible`].
pub fn admissible_primes(lambda: &Rational, lo: u64, hi: u64, need_mirror: bool) -> Vec<u64> {
    ffield::odd_primes(lo, hi)
        .into_iter()
        .filter(|&p| admissible(lambda, p, need_mirror).is_ok())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::ratio;

    fn fp(p: u64) -> Arc<FieldSpec> {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn fermat_over_f3() {
        assert_eq!(count_x(&rat(0), &fp(3)).unwrap().count, 16);
        assert_eq!(count_x_with(&rat(0), &fp(3), Strategy::Direct).unwrap().count, 16);
    }

    #[test]
    fn strategies_agree() {
        for p in [5u64, 7, 11, 13] {
            for l in [rat(2), rat(3), ratio(1, 2), rat(0)] {
                let s = fp(p);
                if let (Ok(a), Ok(b)) = (count_x(&l, &s), count_x_with(&l, &s, Strategy::Direct)) {
                    assert_eq!(a, b, "X, lambda {l}, p {p}");
                }
                if let (Ok(a), Ok(b)) = (count_m(&l, &s), count_m_with(&l, &s, Strategy::Direct)) {
                    assert_eq!(a, b, "M, lambda {l}, p {p}");
                }
            }
        }
        let s = FieldSpec::new(7, 2).unwrap();
        assert_eq!(count_x(&rat(2), &s).unwrap(), count_x_with(&rat(2), &s, Strategy::Direct).unwrap());
        assert_eq!(count_m(&rat(2), &s).unwrap(), count_m_with(&rat(2), &s, Strategy::Direct).unwrap());
    }

    #[test]
    fn worked_instance_two_seven() {
        let s = fp(7);
        assert_eq!(t_ns_predicted(&rat(2), &s), Ok(7));
        let r = verify_trace_identity(&rat(2), &s).unwrap();
        assert_eq!(r.x_count, 96);
        assert_eq!(r.y_count, 180);
        assert_eq!(r.x_count as i64 - r.y_count as i64, -84);
        assert!(r.passed);
        assert_eq!(count_y(&rat(2), &s).unwrap().count, count_m(&rat(2), &s).unwrap().count + 126);
    }

    #[test]
    fn bad_inputs() {
        assert!(matches!(count_x(&rat(1), &fp(5)), Err(CountError::BadReduction { .. })));
        assert_eq!(count_m(&rat(0), &fp(7)), Err(CountError::LambdaZero));
        assert_eq!(t_ns_predicted(&rat(2), &fp(3)), Err(CountError::RamifiedPrime(3)));
        assert_eq!(verify_mod3q(&rat(2), 3, 1), Err(CountError::PrimeExcluded(3)));
        assert!(matches!(FieldSpec::prime(2), Err(FfError::EvenOrCompositeModulus(2))));
    }

    #[test]
    fn admissibility() {
        assert_eq!(admissible(&rat(2), 7, true), Ok(()));
        assert_eq!(admissible(&rat(2), 5, true), Err(Inadmissible::RamifiedPrime));
        assert_eq!(admissible(&ratio(1, 2), 2, true), Err(Inadmissible::EvenCharacteristic));
        assert_eq!(admissible(&ratio(1, 7), 7, false), Err(Inadmissible::DenominatorDivisible));
        assert_eq!(admissible(&rat(7), 7, true), Err(Inadmissible::LambdaZero));
    }

    #[test]
    fn curve_worked_instance() {
        let r = curve_counts(&rat(2), &fp(7)).unwrap();
        assert_eq!((r.n_x, r.n_y), (1, 1));
        assert_eq!(r.roots_x, vec![5]);
        assert_eq!(r.roots_y, vec![2]);
        assert!(r.bijection_ok);
    }
}
