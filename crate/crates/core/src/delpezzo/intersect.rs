use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::lines::Line;
use super::DelPezzoError;
use crate::exactalg::{Generator, SignVector};
use crate::galoisrep::{Basis, GaloisMatrix, IntMatrix};

/// `L₁·L₂` for distinct lines. Lines over different bitangents meet at most above the common
/// point `P` of the two linear forms, exactly when their `w` agree there. Two lifts of one
/// bitangent meet where `g₁ = g₂` on it, a binary quadratic, so in two points with multiplicity.
pub fn intersection_number(a: &Line, b: &Line) -> Result<i64, DelPezzoError> {
    if a.same_curve(b) {
        return Err(DelPezzoError::SameLine);
    }
    if a.same_bitangent(b) {
        return Ok(2);
    }
    let p = a.linear().meet(b.linear()).ok_or(DelPezzoError::SameLine)?;
    Ok(if a.w_expr().evaluate(&p) == b.w_expr().evaluate(&p) { 1 } else { 0 })
}

/// Full intersection matrix, with the self-intersection `-1` of a line on the diagonal.
pub fn intersection_matrix(lines: &[Line]) -> Result<IntMatrix, DelPezzoError> {
    let n = lines.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let values: Vec<i64> = pairs
        .par_iter()
        .map(|&(i, j)| intersection_number(&lines[i], &lines[j]))
        .collect::<Result<_, _>>()?;
    let mut m = IntMatrix::identity(n).scale(-1);
    for (&(i, j), v) in pairs.iter().zip(values) {
        m[(i, j)] = v;
        m[(j, i)] = v;
    }
    Ok(m)
}

/// A permutation of line indices, `image[i]` being the index of the image of line `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Permutation {
    pub image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation { image: (0..n).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self` then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation { image: self.image.iter().map(|&i| other.image[i]).collect() }
    }

    pub fn is_involution(&self) -> bool {
        self.then(self).is_identity()
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.image.len()];
        let mut out = Vec::new();
        for start in 0..self.image.len() {
            if seen[start] || self.image[start] == start {
                continue;
            }
            let mut c = vec![start];
            seen[start] = true;
            let mut k = self.image[start];
            while k != start {
                seen[k] = true;
                c.push(k);
                k = self.image[k];
            }
            out.push(c);
        }
        out
    }
}

/// Cycle notation on 0-based line indices; `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(usize::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// Acts by `s` on every coefficient and locates each image in `lines`.
pub fn galois_permutation(lines: &[Line], s: SignVector) -> Result<Permutation, DelPezzoError> {
    let image = lines
        .iter()
        .enumerate()
        .map(|(i, l)| {
            let moved = l.apply_sign(s);
            lines
                .iter()
                .position(|m| m.same_curve(&moved))
                .ok_or(DelPezzoError::ImageNotFound { line: i, sign: s })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Permutation { image })
}

#[derive(Clone, Debug, Serialize)]
pub struct GaloisLinesReport {
    pub involutions: bool,
    pub commute: bool,
    pub homomorphism: bool,
}

impl GaloisLinesReport {
    pub fn passed(&self) -> bool {
        self.involutions && self.commute && self.homomorphism
    }
}

/// Involution, commutation and `σ_s σ_t = σ_{s⊕t}` checks over all 16 sign vectors.
pub fn check_galois_action(lines: &[Line]) -> Result<GaloisLinesReport, DelPezzoError> {
    let perms: Vec<Permutation> = SignVector::all()
        .map(|s| galois_permutation(lines, s))
        .collect::<Result<_, _>>()?;
    let involutions = perms.iter().all(Permutation::is_involution);
    let mut commute = true;
    let mut homomorphism = perms[0].is_identity();
    for (s, p) in SignVector::all().zip(&perms) {
        for (t, q) in SignVector::all().zip(&perms) {
            let pq = p.then(q);
            commute &= pq == q.then(p);
            homomorphism &= pq == perms[s.compose(t).mask() as usize];
        }
    }
    Ok(GaloisLinesReport { involutions, commute, homomorphism })
}

/// Indices of `v1..v7, v8'` in a line list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LabelledBasis {
    pub v: [usize; 7],
    pub v8_prime: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct BasisReport {
    /// Intersection numbers among `v1..v7, v8'`.
    pub raw: Vec<Vec<i64>>,
    /// Gram matrix in the basis `v1..v7, v8 = v6 + v7 + v8'`.
    pub gram: Vec<Vec<i64>>,
    pub pairwise_disjoint: bool,
    pub gram_is_standard: bool,
    /// `(3v8 - Σv_i)·L` over every line `L`.
    pub anticanonical_degrees: Vec<i64>,
    pub anticanonical_square: i64,
}

impl BasisReport {
    pub fn passed(&self) -> bool {
        self.pairwise_disjoint
            && self.gram_is_standard
            && self.anticanonical_square == 2
            && self.anticanonical_degrees.iter().all(|&d| d == 1)
    }
}

impl LabelledBasis {
    fn members(&self) -> [usize; 8] {
        let mut m = [0; 8];
        m[..7].copy_from_slice(&self.v);
        m[7] = self.v8_prime;
        m
    }

    pub fn report(&self, gram: &IntMatrix) -> BasisReport {
        let m = self.members();
        let raw: Vec<Vec<i64>> = m.iter().map(|&i| m.iter().map(|&j| gram[(i, j)]).collect()).collect();
        let pairwise_disjoint = (0..7).all(|a| (0..7).all(|b| a == b || raw[a][b] == 0));
        // change of basis: v8 = v6 + v7 + v8'
        let mut t = IntMatrix::identity(8);
        t[(5, 7)] = 1;
        t[(6, 7)] = 1;
        let raw_m = IntMatrix::from_rows(&raw);
        let g = t.transpose().mul(&raw_m).mul(&t);
        let gram_is_standard = g == IntMatrix::diagonal(&[-1, -1, -1, -1, -1, -1, -1, 1]);
        let k_dot = |row: &dyn Fn(usize) -> i64| {
            let v8 = row(self.v[5]) + row(self.v[6]) + row(self.v8_prime);
            3 * v8 - self.v.iter().map(|&i| row(i)).sum::<i64>()
        };
        let anticanonical_degrees: Vec<i64> = (0..gram.rows()).map(|l| k_dot(&|i| gram[(l, i)])).collect();
        let k = [-1, -1, -1, -1, -1, -1, -1, 3];
        let gk = g.mul_vec(&k);
        let anticanonical_square = k.iter().zip(&gk).map(|(a, b)| a * b).sum();
        BasisReport {
            raw,
            gram: (0..8).map(|i| g.row(i).to_vec()).collect(),
            pairwise_disjoint,
            gram_is_standard,
            anticanonical_degrees,
            anticanonical_square,
        }
    }
}

/// Seven pairwise disjoint lines, the lexicographically first such set.
pub fn exceptional_set(gram: &IntMatrix) -> Option<[usize; 7]> {
    fn extend(gram: &IntMatrix, chosen: &mut Vec<usize>, from: usize) -> bool {
        if chosen.len() == 7 {
            return true;
        }
        for c in from..gram.rows() {
            if chosen.iter().all(|&x| gram[(x, c)] == 0) {
                chosen.push(c);
                if extend(gram, chosen, c + 1) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::with_capacity(7);
    extend(gram, &mut chosen, 0).then(|| chosen.try_into().expect("seven"))
}

/// The basis `e1..e7, h` of `NS ⊗ Q` from seven disjoint lines, with `-K = 3h - Σe_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExceptionalBasis {
    pub e: [usize; 7],
}

impl ExceptionalBasis {
    /// Coordinates of a line with intersection row `dots`: `-L·e_i` and `(1 + Σ L·e_i)/3`,
    /// using `-K·L = 1`.
    pub fn line_coordinates(&self, dots: &[i64]) -> Option<Vec<i64>> {
        let mut c: Vec<i64> = self.e.iter().map(|&i| -dots[i]).collect();
        let s: i64 = 1 + self.e.iter().map(|&i| dots[i]).sum::<i64>();
        (s % 3 == 0).then(|| {
            c.push(s / 3);
            c
        })
    }

    /// Matrix of a line permutation in the basis `e1..e7, h`, columns being images.
    pub fn class_matrix(&self, gram: &IntMatrix, perm: &Permutation) -> Option<IntMatrix> {
        let mut cols: Vec<Vec<i64>> = self
            .e
            .iter()
            .map(|&i| self.line_coordinates(gram.row(perm.image[i])))
            .collect::<Option<_>>()?;
        // σ(h) = (σ(-K) + Σ σ(e_i))/3 and σ(-K) = -K
        let mut h = [-1, -1, -1, -1, -1, -1, -1, 3];
        for col in &cols {
            h.iter_mut().zip(col).for_each(|(x, y)| *x += y);
        }
        if h.iter().any(|x| x % 3 != 0) {
            return None;
        }
        cols.push(h.iter().map(|x| x / 3).collect());
        Some(IntMatrix::from_rows(&cols).transpose())
    }
}

/// The action of `σ_I, σ_2, σ_+, σ_-` on `NS ⊗ Q` of the surface, computed from the lines.
pub fn galois_matrices_from_lines(lines: &[Line], gram: &IntMatrix) -> Result<[GaloisMatrix; 4], DelPezzoError> {
    let basis = ExceptionalBasis { e: exceptional_set(gram).ok_or_else(|| DelPezzoError::AmbiguousChoice("no seven disjoint lines".into()))? };
    let mut out = Vec::with_capacity(4);
    for g in Generator::ALL {
        let perm = galois_permutation(lines, SignVector::single(g))?;
        let matrix = basis
            .class_matrix(gram, &perm)
            .ok_or_else(|| DelPezzoError::AmbiguousChoice("non-integral class coordinates".into()))?;
        out.push(GaloisMatrix { label: g, basis: Basis::DelPezzoLines, matrix });
    }
    Ok(out.try_into().expect("four"))
}
