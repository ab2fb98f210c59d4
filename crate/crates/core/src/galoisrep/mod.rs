//! The Galois action on Néron–Severi groups as explicit integer matrices: structure checks,
//! joint sign-eigenspaces, and specialisation at Frobenius.

mod data;
pub mod matrix;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::counting::{self, CountError};
use crate::exactalg::{default_generators, fmt_rational, rat, squarefree_part, ExactError, Generator, Rational, SignVector, SquareClass};
use crate::ffield::{legendre_rational, FfError, FieldSpec};
pub use data::CHECKSUM;
pub use matrix::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GaloisError {
    #[error("dimension {0} has no embedded matrices (use 8 or 19)")]
    UnknownDimension(usize),
    #[error("relation violated in dimension {dim}: {detail}")]
    RelationViolated { dim: usize, detail: String },
    #[error("M({0})^T G M({0}) != G or M({0}) k != k")]
    IsometryViolated(String),
    #[error("eigenspaces account for {found} of {dim} dimensions")]
    IncompleteDecomposition { found: usize, dim: usize },
    #[error("p = {0} ramifies in L")]
    RamifiedPrime(u64),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Field(#[from] FfError),
    #[error(transparent)]
    Count(#[from] CountError),
}

/// How a displayed matrix acts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum Convention {
    /// Column `j` is the image of basis vector `e_j`.
    #[default]
    Column,
    /// Row `j` is the image of `e_j`; the acting matrix is the transpose of the display.
    Row,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Basis {
    /// Lines `v1..v8` on the del Pezzo quotient.
    DelPezzoLines,
    /// The 19 divisor classes spanning NS of the Dwork surface.
    Dwork,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisMatrix {
    pub label: Generator,
    pub basis: Basis,
    pub matrix: IntMatrix,
}

impl GaloisMatrix {
    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }
}

fn to_matrix<const N: usize>(m: &[[i8; N]; N]) -> IntMatrix {
    let rows: Vec<Vec<i64>> = m.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
    IntMatrix::from_rows(&rows)
}

/// The displayed matrices for `σ_I, σ_2, σ_+, σ_-`, as printed.
pub fn displayed_matrices(dim: usize) -> Result<[GaloisMatrix; 4], GaloisError> {
    let (mats, basis): ([IntMatrix; 4], Basis) = match dim {
        8 => (std::array::from_fn(|i| to_matrix(&data::M8[i])), Basis::DelPezzoLines),
        19 => (std::array::from_fn(|i| to_matrix(&data::M19[i])), Basis::Dwork),
        d => return Err(GaloisError::UnknownDimension(d)),
    };
    let mut it = mats.into_iter();
    Ok(Generator::ALL.map(|label| GaloisMatrix { label, basis, matrix: it.next().unwrap() }))
}

/// The acting matrices under `convention`.
pub fn load_matrices_with(dim: usize, convention: Convention) -> Result<[GaloisMatrix; 4], GaloisError> {
    let mut mats = displayed_matrices(dim)?;
    if convention == Convention::Row {
        for m in &mut mats {
            m.matrix = m.matrix.transpose();
        }
    }
    Ok(mats)
}

/// The acting matrices under the column convention (the one [`select_convention`] picks).
pub fn load_matrices(dim: usize) -> Result<[GaloisMatrix; 4], GaloisError> {
    load_matrices_with(dim, Convention::Column)
}

/// FNV-1a of the embedded entries, for comparison with [`CHECKSUM`].
pub fn embedded_checksum() -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let bytes = data::M8.iter().flatten().flatten().chain(data::M19.iter().flatten().flatten());
    for &x in bytes {
        h ^= x as u8 as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Each matrix squares to the identity and all pairs commute.
pub fn verify_group_relations(mats: &[GaloisMatrix]) -> Result<(), GaloisError> {
    let Some(first) = mats.first() else { return Ok(()) };
    let dim = first.dim();
    for m in mats {
        if !m.matrix.mul(&m.matrix).is_identity() {
            return Err(GaloisError::RelationViolated { dim, detail: format!("M({})^2 != I", m.label.name()) });
        }
    }
    for (i, a) in mats.iter().enumerate() {
        for b in &mats[i + 1..] {
            if a.matrix.mul(&b.matrix) != b.matrix.mul(&a.matrix) {
                return Err(GaloisError::RelationViolated {
                    dim,
                    detail: format!("M({}) and M({}) do not commute", a.label.name(), b.label.name()),
                });
            }
        }
    }
    Ok(())
}

/// `diag(-1⁷, 1)`.
pub fn gram_8() -> IntMatrix {
    IntMatrix::diagonal(&[-1, -1, -1, -1, -1, -1, -1, 1])
}

/// `3e8 - Σ_{i≤7} e_i`.
pub fn anticanonical_8() -> Vec<i64> {
    vec![-1, -1, -1, -1, -1, -1, -1, 3]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsometryReport {
    pub k_squared: i64,
    pub k_dot_lines: Vec<i64>,
}

/// `MᵀGM = G` and `Mk = k` for each matrix, plus the intersection numbers of `k`.
pub fn verify_isometry_8(mats: &[GaloisMatrix]) -> Result<IsometryReport, GaloisError> {
    let g = gram_8();
    let k = anticanonical_8();
    for m in mats {
        if m.dim() != 8 {
            return Err(GaloisError::UnknownDimension(m.dim()));
        }
        if m.matrix.transpose().mul(&g).mul(&m.matrix) != g || m.matrix.mul_vec(&k) != k {
            return Err(GaloisError::IsometryViolated(m.label.name().into()));
        }
    }
    let gk = g.mul_vec(&k);
    let k_squared = k.iter().zip(&gk).map(|(a, b)| a * b).sum();
    Ok(IsometryReport { k_squared, k_dot_lines: gk[..7].to_vec() })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConventionReport {
    pub column_passes: bool,
    pub row_passes: bool,
    pub chosen: Convention,
}

/// Runs relations, isometry and the anticanonical check on the 8×8 set under both conventions.
pub fn select_convention() -> ConventionReport {
    let passes = |c| {
        let mats = load_matrices_with(8, c).expect("embedded");
        verify_group_relations(&mats).is_ok() && verify_isometry_8(&mats).is_ok()
    };
    let column_passes = passes(Convention::Column);
    let row_passes = passes(Convention::Row);
    let chosen = if column_passes || !row_passes { Convention::Column } else { Convention::Row };
    ConventionReport { column_passes, row_passes, chosen }
}

/// `Π M_j^{ε_j}` over the flipped generators.
pub fn product_for(mats: &[GaloisMatrix], s: SignVector) -> IntMatrix {
    let dim = mats[0].dim();
    mats.iter()
        .filter(|m| s.flips(m.label))
        .fold(IntMatrix::identity(dim), |acc, m| acc.mul(&m.matrix))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenReport {
    pub dim: usize,
    /// Multiplicity of each sign vector with nonzero eigenspace; `ε_j = -1` where flipped.
    pub multiplicities: BTreeMap<SignVector, usize>,
}

impl EigenReport {
    pub fn multiplicity(&self, s: SignVector) -> usize {
        self.multiplicities.get(&s).copied().unwrap_or(0)
    }

    /// `Σ_{ε'} mult(ε')·(-1)^{⟨ε, ε'⟩}`.
    pub fn predicted_trace(&self, s: SignVector) -> i64 {
        self.multiplicities.iter().map(|(e, &m)| s.pairing(*e) * m as i64).sum()
    }
}

/// Intersection over `j` of `ker(M_j - ε_j I)`, for one sign vector.
pub fn joint_eigenspace(mats: &[GaloisMatrix], s: SignVector) -> Vec<Vec<num_bigint::BigInt>> {
    let dim = mats[0].dim();
    let id = IntMatrix::identity(dim);
    let stacked = mats
        .iter()
        .map(|m| m.matrix.sub(&id.scale(s.eigenvalue(m.label))))
        .reduce(|a, b| a.vstack(&b))
        .expect("nonempty");
    stacked.kernel()
}

pub fn joint_eigenspaces(mats: &[GaloisMatrix]) -> Result<EigenReport, GaloisError> {
    verify_group_relations(mats)?;
    let dim = mats[0].dim();
    let multiplicities: BTreeMap<SignVector, usize> = SignVector::all()
        .map(|s| (s, joint_eigenspace(mats, s).len()))
        .filter(|&(_, m)| m > 0)
        .collect();
    let found: usize = multiplicities.values().sum();
    if found != dim {
        return Err(GaloisError::IncompleteDecomposition { found, dim });
    }
    Ok(EigenReport { dim, multiplicities })
}

/// Square class of the product of `(-1, 2, λ²+1, λ²-1)` over the flipped generators.
pub fn signvector_to_squareclass(lambda: &Rational, s: SignVector) -> Result<SquareClass, GaloisError> {
    let l2 = lambda * lambda;
    if &l2 * &l2 == rat(1) {
        return Err(ExactError::LambdaSingular(fmt_rational(lambda)).into());
    }
    let gens = default_generators(lambda);
    let prod = Generator::ALL
        .iter()
        .filter(|g| s.flips(**g))
        .fold(rat(1), |acc, g| acc * &gens[g.index()]);
    Ok(squarefree_part(&prod)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterLabel {
    pub square_class: SquareClass,
    pub multiplicity: usize,
    pub sign_vectors: Vec<String>,
}

/// The eigen report regrouped by quadratic character; sign vectors whose square classes coincide
/// at this `λ` are merged.
pub fn character_labels(lambda: &Rational, report: &EigenReport) -> Result<Vec<CharacterLabel>, GaloisError> {
    let mut out: Vec<CharacterLabel> = Vec::new();
    for (s, &m) in &report.multiplicities {
        let c = signvector_to_squareclass(lambda, *s)?;
        match out.iter_mut().find(|l| l.square_class == c) {
            Some(l) => {
                l.multiplicity += m;
                l.sign_vectors.push(s.to_string());
            }
            None => out.push(CharacterLabel { square_class: c, multiplicity: m, sign_vectors: vec![s.to_string()] }),
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstraintReport {
    /// Multiplicities of the nontrivial characters.
    pub exponents: Vec<usize>,
    pub all_divisible_by_3: bool,
    pub some_at_least_6: bool,
    pub at_most_5: bool,
}

impl ConstraintReport {
    pub fn passed(&self) -> bool {
        self.all_divisible_by_3 && self.some_at_least_6 && self.at_most_5
    }
}

/// Divisibility and size constraints on the exponents of the nontrivial characters.
pub fn theorem_constraints(report: &EigenReport) -> ConstraintReport {
    let exponents: Vec<usize> = report
        .multiplicities
        .iter()
        .filter(|(s, _)| **s != SignVector::IDENTITY)
        .map(|(_, &m)| m)
        .collect();
    ConstraintReport {
        all_divisible_by_3: exponents.iter().all(|n| n % 3 == 0),
        some_at_least_6: exponents.iter().any(|&n| n >= 6),
        at_most_5: exponents.len() <= 5,
        exponents,
    }
}

/// Frobenius at `p` as a sign vector: generator `d` is flipped iff `(d/p) = -1`.
pub fn frobenius_sign(lambda: &Rational, p: u64) -> Result<SignVector, GaloisError> {
    let gens = default_generators(lambda);
    let mut s = SignVector::IDENTITY;
    for g in Generator::ALL {
        match legendre_rational(&gens[g.index()], p) {
            Ok(0) | Err(FfError::DenominatorDivisible { .. }) => return Err(GaloisError::RamifiedPrime(p)),
            Ok(1) => {}
            Ok(_) => s = s.compose(SignVector::single(g)),
            Err(e) => return Err(e.into()),
        }
    }
    Ok(s)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusMatrix {
    pub sign: SignVector,
    pub matrix: IntMatrix,
    pub trace: i64,
}

/// Frobenius of `F_{p^k}` on the 19-dimensional NS: the product of generator matrices over its
/// sign vector, which is trivial for even `k`.
pub fn frobenius_matrix(lambda: &Rational, p: u64, k: u32) -> Result<FrobeniusMatrix, GaloisError> {
    let base = frobenius_sign(lambda, p)?;
    let sign = if k.is_multiple_of(2) { SignVector::IDENTITY } else { base };
    let mats = load_matrices(19)?;
    let matrix = product_for(&mats, sign);
    let trace = matrix.trace();
    Ok(FrobeniusMatrix { sign, matrix, trace })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrosscheckReport {
    pub lambda: String,
    pub p: u64,
    pub k: u32,
    pub matrix_trace: i64,
    pub predicted_tns: i64,
    /// `(#X - #Y)/q + 19`, or `None` when `q` does not divide `#X - #Y`.
    pub from_counts: Option<i64>,
    pub passed: bool,
}

/// Three-way comparison of the Frobenius matrix trace, the character formula, and the counts.
pub fn crosscheck_trace(lambda: &Rational, p: u64, k: u32) -> Result<CrosscheckReport, GaloisError> {
    let spec: Arc<FieldSpec> = FieldSpec::new(p, k)?;
    let frob = frobenius_matrix(lambda, p, k)?;
    let predicted = counting::t_ns_predicted(lambda, &spec)?;
    let x = counting::count_x(lambda, &spec)?.count as i64;
    let y = counting::count_y(lambda, &spec)?.count as i64;
    let q = spec.q() as i64;
    let from_counts = ((x - y) % q == 0).then(|| (x - y) / q + 19);
    Ok(CrosscheckReport {
        lambda: fmt_rational(lambda),
        p,
        k,
        matrix_trace: frob.trace,
        predicted_tns: predicted,
        from_counts,
        passed: frob.trace == predicted && from_counts == Some(predicted),
    })
}

impl fmt::Display for EigenReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (s, m) in &self.multiplicities {
            writeln!(f, "{s}: {m}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flip(gs: &[Generator]) -> SignVector {
        SignVector::flipping(gs)
    }

    #[test]
    fn checksum_and_spot_values() {
        assert_eq!(embedded_checksum(), CHECKSUM);
        let m8 = displayed_matrices(8).unwrap();
        assert_eq!(m8[0].matrix.row(7), &[1, 1, 1, 0, 0, 1, 2, 3]);
        assert_eq!(m8[3].matrix.trace(), -4);
        assert_eq!(displayed_matrices(19).unwrap()[0].matrix.trace(), -5);
    }

    #[test]
    fn column_convention_wins() {
        let r = select_convention();
        assert!(r.column_passes);
        assert!(!r.row_passes);
        assert_eq!(r.chosen, Convention::Column);
    }

    #[test]
    fn eigen_multiplicities() {
        use Generator::*;
        let r19 = joint_eigenspaces(&load_matrices(19).unwrap()).unwrap();
        assert_eq!(r19.multiplicity(SignVector::IDENTITY), 1);
        assert_eq!(r19.multiplicity(flip(&[I, Minus])), 3);
        assert_eq!(r19.multiplicity(flip(&[I, Plus])), 3);
        assert_eq!(r19.multiplicity(flip(&[I, Two, Plus, Minus])), 6);
        assert_eq!(r19.multiplicity(flip(&[Two, Plus, Minus])), 6);
        let r8 = joint_eigenspaces(&load_matrices(8).unwrap()).unwrap();
        let m8: Vec<usize> = r8.multiplicities.values().copied().collect();
        assert_eq!(m8.iter().sum::<usize>(), 8);
        for (s, &m) in &r8.multiplicities {
            assert!(m <= r19.multiplicity(*s));
        }
    }

    #[test]
    fn square_classes_at_two() {
        use Generator::*;
        let l = rat(2);
        assert_eq!(signvector_to_squareclass(&l, flip(&[I, Minus])).unwrap().to_string(), "-3");
        assert_eq!(signvector_to_squareclass(&l, flip(&[I, Two, Plus, Minus])).unwrap().to_string(), "-30");
        assert_eq!(signvector_to_squareclass(&l, SignVector::IDENTITY).unwrap().to_string(), "1");
    }

    #[test]
    fn frobenius_at_seven() {
        let f = frobenius_matrix(&rat(2), 7, 1).unwrap();
        assert_eq!(f.trace, 7);
        assert_eq!(frobenius_matrix(&rat(2), 7, 2).unwrap().trace, 19);
        assert_eq!(frobenius_matrix(&rat(2), 5, 1), Err(GaloisError::RamifiedPrime(5)));
    }
}
