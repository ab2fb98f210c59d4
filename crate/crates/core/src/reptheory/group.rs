//! The group `H = S4 ⋉ (Z/2)²` of signed coordinate permutations modulo `±1`.

use std::collections::BTreeSet;
use std::fmt;

/// Signed permutation with matrix `M[i][π(i)] = s_i`, so `(M·x)_i = s_i·x_{π(i)}`.
///
/// `signs` has bit `i` set when `s_i = -1`; it has even weight and bit 0 clear (the global
/// flip identifies the two lifts).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    perm: [u8; 4],
    signs: u8,
}

pub const ORDER: usize = 96;

fn canonical_signs(mask: u8) -> u8 {
    let m = mask & 0xf;
    if m & 1 == 1 {
        m ^ 0xf
    } else {
        m
    }
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement { perm: [0, 1, 2, 3], signs: 0 };

    /// Returns `None` unless `perm` is a permutation of `0..4` and `signs` has even weight.
    pub fn new(perm: [u8; 4], signs: u8) -> Option<GroupElement> {
        let mut seen = [false; 4];
        for &p in &perm {
            if p > 3 || seen[p as usize] {
                return None;
            }
            seen[p as usize] = true;
        }
        (signs & 0xf).count_ones().is_multiple_of(2).then(|| GroupElement { perm, signs: canonical_signs(signs) })
    }

    pub fn from_perm(perm: [u8; 4]) -> Option<GroupElement> {
        GroupElement::new(perm, 0)
    }

    /// Sign change `e_1`, `e_2`, `e_3`: negate `(X2, X3)`, `(X1, X3)`, `(X1, X2)`.
    pub fn e(i: usize) -> GroupElement {
        let signs = match i {
            1 => 0b1100,
            2 => 0b1010,
            3 => 0b0110,
            _ => panic!("e_i is defined for i = 1, 2, 3"),
        };
        GroupElement { perm: [0, 1, 2, 3], signs }
    }

    /// Permutation from cycles written in the letters `1..=4`, letter `k` being `X_{k-1}`.
    pub fn from_cycles(cycles: &[&[u8]]) -> GroupElement {
        let mut perm = [0u8, 1, 2, 3];
        for c in cycles {
            for (j, &a) in c.iter().enumerate() {
                let b = c[(j + 1) % c.len()];
                perm[(a - 1) as usize] = b - 1;
            }
        }
        GroupElement::from_perm(perm).expect("valid cycles")
    }

    pub fn perm(&self) -> [u8; 4] {
        self.perm
    }

    pub fn signs(&self) -> u8 {
        self.signs
    }

    pub fn has_trivial_signs(&self) -> bool {
        self.signs == 0
    }

    /// Both sign masks representing this element.
    pub fn lifts(&self) -> [u8; 2] {
        [self.signs, self.signs ^ 0xf]
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        let mut perm = [0u8; 4];
        let mut signs = 0u8;
        for (i, slot) in perm.iter_mut().enumerate() {
            let j = self.perm[i] as usize;
            *slot = other.perm[j];
            let s = (self.signs >> i & 1) ^ (other.signs >> j & 1);
            signs |= s << i;
        }
        GroupElement { perm, signs: canonical_signs(signs) }
    }

    pub fn inverse(&self) -> GroupElement {
        let mut perm = [0u8; 4];
        let mut signs = 0u8;
        for i in 0..4 {
            let j = self.perm[i] as usize;
            perm[j] = i as u8;
            signs |= (self.signs >> i & 1) << j;
        }
        GroupElement { perm, signs: canonical_signs(signs) }
    }

    pub fn conjugate_by(&self, x: &GroupElement) -> GroupElement {
        x.compose(self).compose(&x.inverse())
    }

    pub fn order(&self) -> usize {
        let mut g = *self;
        let mut n = 1;
        while g != GroupElement::IDENTITY {
            g = g.compose(self);
            n += 1;
        }
        n
    }

    /// Cycles of the permutation as index lists, each starting at its smallest index.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = [false; 4];
        let mut out = Vec::new();
        for start in 0..4 {
            if seen[start] {
                continue;
            }
            let mut c = vec![start];
            seen[start] = true;
            let mut i = self.perm[start] as usize;
            while i != start {
                c.push(i);
                seen[i] = true;
                i = self.perm[i] as usize;
            }
            out.push(c);
        }
        out
    }

    /// Cycle lengths, descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn is_even_perm(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    pub fn perm_part(&self) -> GroupElement {
        GroupElement { perm: self.perm, signs: 0 }
    }

    pub fn sign_part(&self) -> GroupElement {
        GroupElement { perm: [0, 1, 2, 3], signs: self.signs }
    }

    /// Applies the matrix to a point.
    pub fn act<T: Clone + std::ops::Neg<Output = T>>(&self, x: &[T; 4]) -> [T; 4] {
        std::array::from_fn(|i| {
            let v = x[self.perm[i] as usize].clone();
            if self.signs >> i & 1 == 1 {
                -v
            } else {
                v
            }
        })
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = match self.signs {
            0 => "",
            0b1100 => "e1",
            0b1010 => "e2",
            0b0110 => "e3",
            _ => unreachable!("canonical sign masks"),
        };
        let cycles: Vec<String> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| format!("({})", c.iter().map(|i| (i + 1).to_string()).collect::<String>()))
            .collect();
        match (e.is_empty(), cycles.is_empty()) {
            (true, true) => write!(f, "id"),
            _ => write!(f, "{e}{}", cycles.concat()),
        }
    }
}

fn all_perms() -> Vec<[u8; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4u8 {
        for b in 0..4u8 {
            for c in 0..4u8 {
                for d in 0..4u8 {
                    let p = [a, b, c, d];
                    if p.iter().collect::<BTreeSet<_>>().len() == 4 {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// All 96 elements, sorted.
pub fn build_group() -> Vec<GroupElement> {
    let mut out: Vec<GroupElement> = all_perms()
        .into_iter()
        .flat_map(|p| [0u8, 0b1100, 0b1010, 0b0110].map(|s| GroupElement { perm: p, signs: s }))
        .collect();
    out.sort();
    out
}

/// The 24 pure permutations.
pub fn symmetric_group() -> Vec<GroupElement> {
    all_perms().into_iter().map(|p| GroupElement { perm: p, signs: 0 }).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    pub representative: GroupElement,
    pub elements: Vec<GroupElement>,
}

impl ConjClass {
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.elements.binary_search(g).is_ok()
    }
}

/// Conjugacy classes of `group` (closed under conjugation by `by`), each with its smallest
/// element as representative, ordered by representative.
pub fn classes_under(group: &[GroupElement], by: &[GroupElement]) -> Vec<ConjClass> {
    let mut remaining: BTreeSet<GroupElement> = group.iter().copied().collect();
    let mut out = Vec::new();
    while let Some(&g) = remaining.iter().next() {
        let mut elements: Vec<GroupElement> = by.iter().map(|x| g.conjugate_by(x)).collect();
        elements.sort();
        elements.dedup();
        for e in &elements {
            remaining.remove(e);
        }
        out.push(ConjClass { representative: elements[0], elements });
    }
    out
}

pub fn conjugacy_classes() -> Vec<ConjClass> {
    let g = build_group();
    classes_under(&g, &g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_and_class_sizes() {
        let g = build_group();
        assert_eq!(g.len(), ORDER);
        let cl = conjugacy_classes();
        assert_eq!(cl.len(), 10);
        let mut sizes: Vec<usize> = cl.iter().map(ConjClass::size).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 3, 3, 3, 6, 12, 12, 12, 12, 32]);
        assert_eq!(cl[0].representative, GroupElement::IDENTITY);
    }

    #[test]
    fn group_laws() {
        let g = build_group();
        for a in &g {
            assert_eq!(a.compose(&a.inverse()), GroupElement::IDENTITY);
            for b in g.iter().step_by(7) {
                for c in g.iter().step_by(11) {
                    assert_eq!(a.compose(b).compose(c), a.compose(&b.compose(c)));
                }
            }
        }
    }

    #[test]
    fn composition_is_matrix_product() {
        let g = build_group();
        let x = [3i64, 5, 7, 11];
        for a in g.iter().step_by(5) {
            for b in g.iter().step_by(3) {
                let lhs = a.compose(b).act(&x);
                let rhs = a.act(&b.act(&x));
                assert!(lhs == rhs || lhs == rhs.map(|v| -v));
            }
        }
    }

    #[test]
    fn labels() {
        assert_eq!(GroupElement::from_cycles(&[&[1, 2, 3]]).to_string(), "(123)");
        assert_eq!(GroupElement::e(2).compose(&GroupElement::from_cycles(&[&[1, 2]])).to_string(), "e2(12)");
        assert_eq!(GroupElement::IDENTITY.to_string(), "id");
    }
}
