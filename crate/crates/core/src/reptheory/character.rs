//! Class functions, `χ_pr`, and the character table of `H` by the little-group method.

use std::collections::HashMap;

use serde::Serialize;

use super::cyclo::Cyclo3;
use super::group::{build_group, conjugacy_classes, ConjClass, GroupElement, ORDER};
use super::RepError;

/// `(1/4)·Σ_{α⁴=1} (-3)^{m_α}` for one lift given as a sign mask.
fn chi_pr_lift(h: &GroupElement, signs: u8) -> i64 {
    let cycles: Vec<(usize, i8)> = h
        .cycles()
        .into_iter()
        .map(|c| {
            let flips = c.iter().filter(|&&i| signs >> i & 1 == 1).count();
            (c.len(), if flips % 2 == 0 { 1 } else { -1 })
        })
        .collect();
    let total: i64 = (0..4)
        .map(|j| {
            // α = i^j is an eigenvalue of a cycle of length ℓ and sign product s iff α^ℓ = s
            let m = cycles
                .iter()
                .filter(|&&(len, s)| match (j * len) % 4 {
                    0 => s == 1,
                    2 => s == -1,
                    _ => false,
                })
                .count();
            (-3i64).pow(m as u32)
        })
        .sum();
    debug_assert_eq!(total % 4, 0);
    total / 4
}

/// Character of `H` on primitive cohomology, evaluated on both lifts of `h`.
pub fn chi_pr(h: &GroupElement) -> Result<i64, RepError> {
    let [a, b] = h.lifts().map(|s| chi_pr_lift(h, s));
    if a != b {
        return Err(RepError::RepresentativeAmbiguous { element: h.to_string(), values: (a, b) });
    }
    Ok(a)
}

fn euler_phi(e: usize) -> i64 {
    match e {
        1 | 2 => 1,
        4 => 2,
        _ => unreachable!(),
    }
}

/// `(1/4)·Σ_{e|4} φ(e)(-3)^{m'_e}` with `m'_e` the number of cycles of length divisible by `e`.
pub fn chi_pr_perm(h: &GroupElement) -> Result<i64, RepError> {
    if !h.has_trivial_signs() {
        return Err(RepError::SignedInput(h.to_string()));
    }
    let lens: Vec<usize> = h.cycles().iter().map(Vec::len).collect();
    let total: i64 = [1usize, 2, 4]
        .into_iter()
        .map(|e| euler_phi(e) * (-3i64).pow(lens.iter().filter(|&&l| l % e == 0).count() as u32))
        .sum();
    Ok(total / 4)
}

/// Conjugacy classes of `H` with an element lookup.
#[derive(Clone, Debug)]
pub struct HClasses {
    classes: Vec<ConjClass>,
    index: HashMap<GroupElement, usize>,
}

impl HClasses {
    pub fn new() -> HClasses {
        let classes = conjugacy_classes();
        let index = classes
            .iter()
            .enumerate()
            .flat_map(|(i, c)| c.elements.iter().map(move |g| (*g, i)))
            .collect();
        HClasses { classes, index }
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, g: &GroupElement) -> usize {
        self.index[g]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(ConjClass::size).collect()
    }

    pub fn representatives(&self) -> Vec<GroupElement> {
        self.classes.iter().map(|c| c.representative).collect()
    }

    /// `(size, χ_pr, order)` per class.
    pub fn fingerprints(&self) -> Vec<Fingerprint> {
        self.classes
            .iter()
            .map(|c| Fingerprint {
                size: c.size(),
                chi_pr: chi_pr(&c.representative).expect("well defined"),
                order: c.representative.order(),
            })
            .collect()
    }

    /// Tabulates a function on group elements, checking it is constant on classes.
    pub fn class_function(&self, f: impl Fn(&GroupElement) -> Cyclo3) -> ClassFunction {
        let values = self
            .classes
            .iter()
            .map(|c| {
                let v = f(&c.representative);
                debug_assert!(c.elements.iter().all(|g| f(g) == v));
                v
            })
            .collect();
        ClassFunction { values }
    }
}

impl Default for HClasses {
    fn default() -> Self {
        HClasses::new()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Fingerprint {
    pub size: usize,
    pub chi_pr: i64,
    pub order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    pub values: Vec<Cyclo3>,
}

impl ClassFunction {
    pub fn from_ints(values: &[i64]) -> ClassFunction {
        ClassFunction { values: values.iter().map(|&v| Cyclo3::int(v)).collect() }
    }

    pub fn as_ints(&self) -> Option<Vec<i64>> {
        self.values.iter().map(|v| v.as_int()).collect()
    }

    pub fn degree(&self) -> Cyclo3 {
        self.values[0]
    }

    pub fn permuted(&self, columns: &[usize]) -> ClassFunction {
        ClassFunction { values: columns.iter().map(|&c| self.values[c]).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub group: String,
    pub order: usize,
    pub class_labels: Vec<String>,
    pub class_sizes: Vec<usize>,
    pub labels: Vec<String>,
    pub rows: Vec<ClassFunction>,
}

impl CharacterTable {
    /// `Σ size·f·conj(g)`, i.e. `|G|·⟨f, g⟩`.
    pub fn weighted_product(&self, f: &ClassFunction, g: &ClassFunction) -> Cyclo3 {
        self.class_sizes
            .iter()
            .zip(f.values.iter().zip(&g.values))
            .fold(Cyclo3::ZERO, |acc, (&s, (&a, &b))| acc + Cyclo3::int(s as i64) * a * b.conj())
    }

    pub fn is_orthonormal(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, a)| {
            self.rows.iter().enumerate().all(|(j, b)| {
                let expected = if i == j { self.order as i64 } else { 0 };
                self.weighted_product(a, b) == Cyclo3::int(expected)
            })
        })
    }

    pub fn row(&self, label: &str) -> Option<&ClassFunction> {
        self.labels.iter().position(|l| l == label).map(|i| &self.rows[i])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Multiplicity {
    pub label: String,
    pub multiplicity: i64,
    pub degree: i64,
}

/// Multiplicities `⟨f, χ_i⟩` against every row of `t`.
pub fn decompose(f: &ClassFunction, t: &CharacterTable) -> Result<Vec<Multiplicity>, RepError> {
    t.rows
        .iter()
        .zip(&t.labels)
        .map(|(chi, label)| {
            let s = t.weighted_product(f, chi);
            match s.as_int() {
                Some(n) if n % t.order as i64 == 0 => Ok(Multiplicity {
                    label: label.clone(),
                    multiplicity: n / t.order as i64,
                    degree: chi.degree().as_int().unwrap_or(0),
                }),
                _ => Err(RepError::NonIntegralMultiplicity { label: label.clone(), sum: s.to_string(), order: t.order }),
            }
        })
        .collect()
}

/// `S4` characters on classes id, (12)(34), (12), (1234), (123).
const S4_TABLE: [[i64; 5]; 5] = [
    [1, 1, 1, 1, 1],
    [1, 1, -1, -1, 1],
    [2, 2, 0, 0, -1],
    [3, -1, 1, -1, 0],
    [3, -1, -1, 1, 0],
];

fn s4_class(g: &GroupElement) -> usize {
    match g.cycle_type().as_slice() {
        [1, 1, 1, 1] => 0,
        [2, 2] => 1,
        [2, 1, 1] => 2,
        [4] => 3,
        [3, 1] => 4,
        _ => unreachable!(),
    }
}

/// `D8` characters on classes `{id}, {u²}, {u, u⁻¹}, {v, u²v}, {uv, u³v}`.
pub(crate) const D8_TABLE: [[i64; 5]; 5] = [
    [1, 1, 1, 1, 1],
    [1, 1, 1, -1, -1],
    [1, 1, -1, 1, -1],
    [1, 1, -1, -1, 1],
    [2, -2, 0, 0, 0],
];

/// The stabiliser `K1 ≅ D8` of the character `χ1`, as pure permutations.
pub fn k1() -> Vec<GroupElement> {
    let c = GroupElement::from_cycles;
    vec![
        GroupElement::IDENTITY,
        c(&[&[1, 2]]),
        c(&[&[3, 4]]),
        c(&[&[1, 3, 2, 4]]),
        c(&[&[1, 2], &[3, 4]]),
        c(&[&[1, 4, 2, 3]]),
        c(&[&[1, 3], &[2, 4]]),
        c(&[&[1, 4], &[2, 3]]),
    ]
}

/// Class of a `K1` permutation in `D8`, with `u = (1324)` and `v = (12)`.
pub(crate) fn d8_class(g: &GroupElement) -> Option<usize> {
    let c = GroupElement::from_cycles;
    let u = c(&[&[1, 3, 2, 4]]);
    let u2 = u.compose(&u);
    let v = c(&[&[1, 2]]);
    let p = g.perm_part();
    if p == GroupElement::IDENTITY {
        Some(0)
    } else if p == u2 {
        Some(1)
    } else if p == u || p == u.inverse() {
        Some(2)
    } else if p == v || p == u2.compose(&v) {
        Some(3)
    } else if p == u.compose(&v) || p == u.compose(&u2).compose(&v) {
        Some(4)
    } else {
        None
    }
}

/// `χ1(e1) = 1`, `χ1(e2) = χ1(e3) = -1`.
fn chi1(signs: u8) -> i64 {
    if (signs & 1) ^ (signs >> 1 & 1) == 0 {
        1
    } else {
        -1
    }
}

/// `Ind_{K1⋉N}^H` of `kn ↦ ψ(k)χ1(n)` for the `D8` character `psi`.
fn induced(psi: &[i64; 5], group: &[GroupElement], g: &GroupElement) -> i64 {
    let theta = |h: GroupElement| d8_class(&h).map_or(0, |c| psi[c] * chi1(h.signs()));
    let sum: i64 = group.iter().map(|x| theta(g.conjugate_by(x))).sum();
    let sub_order = 8 * 4;
    debug_assert_eq!(sum % sub_order, 0);
    sum / sub_order
}

/// The ten irreducible characters `rho1..rho5, phi1..phi5` on the classes of [`HClasses`].
pub fn character_table_h(classes: &HClasses) -> CharacterTable {
    let group = build_group();
    let mut labels = Vec::new();
    let mut rows = Vec::new();
    for (i, row) in S4_TABLE.iter().enumerate() {
        labels.push(format!("rho{}", i + 1));
        rows.push(classes.class_function(|g| Cyclo3::int(row[s4_class(g)])));
    }
    for (i, psi) in D8_TABLE.iter().enumerate() {
        labels.push(format!("phi{}", i + 1));
        rows.push(classes.class_function(|g| Cyclo3::int(induced(psi, &group, g))));
    }
    CharacterTable {
        group: "H".into(),
        order: ORDER,
        class_labels: classes.representatives().iter().map(ToString::to_string).collect(),
        class_sizes: classes.sizes(),
        labels,
        rows,
    }
}

pub fn chi_pr_function(classes: &HClasses) -> ClassFunction {
    classes.class_function(|g| Cyclo3::int(chi_pr(g).expect("well defined")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reptheory::group::symmetric_group;

    #[test]
    fn chi_pr_worked_values() {
        assert_eq!(chi_pr(&GroupElement::from_cycles(&[&[1, 2, 3]])), Ok(3));
        assert_eq!(chi_pr(&GroupElement::e(1)), Ok(5));
        assert_eq!(chi_pr(&GroupElement::IDENTITY), Ok(21));
    }

    #[test]
    fn chi_pr_perm_agrees() {
        assert_eq!(chi_pr_perm(&GroupElement::from_cycles(&[&[1, 2]])), Ok(-7));
        assert_eq!(chi_pr_perm(&GroupElement::from_cycles(&[&[1, 2, 3, 4]])), Ok(-3));
        for g in symmetric_group() {
            assert_eq!(chi_pr_perm(&g), chi_pr(&g));
        }
        assert!(matches!(chi_pr_perm(&GroupElement::e(1)), Err(RepError::SignedInput(_))));
    }

    #[test]
    fn table_is_orthonormal() {
        let cl = HClasses::new();
        let t = character_table_h(&cl);
        assert!(t.is_orthonormal());
        let degrees: Vec<i64> = t.rows.iter().map(|r| r.degree().as_int().unwrap()).collect();
        assert_eq!(degrees, vec![1, 1, 2, 3, 3, 3, 3, 3, 3, 6]);
    }

    #[test]
    fn chi_pr_decomposition() {
        let cl = HClasses::new();
        let t = character_table_h(&cl);
        let m: Vec<i64> = decompose(&chi_pr_function(&cl), &t).unwrap().iter().map(|m| m.multiplicity).collect();
        assert_eq!(m, vec![0, 4, 1, 0, 1, 0, 1, 0, 1, 1]);
    }

    #[test]
    fn non_character_rejected() {
        let cl = HClasses::new();
        let t = character_table_h(&cl);
        let mut v = vec![Cyclo3::ZERO; 10];
        v[0] = Cyclo3::ONE;
        assert!(matches!(decompose(&ClassFunction { values: v }, &t), Err(RepError::NonIntegralMultiplicity { .. })));
    }
}
