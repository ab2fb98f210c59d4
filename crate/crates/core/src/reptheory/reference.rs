//! Published class data and character table of `H`, and matching of computed classes to them.

use super::character::{CharacterTable, Fingerprint, HClasses};
use super::RepError;

/// Column headers in published order. `e2(12)(34)` is printed over columns 5 and 9 (from 0),
/// but that element lies in the class of column 6; the classes matched to columns 5 and 9
/// contain `e1(12)(34)` and `e1(1234)`.
pub const REFERENCE_COLUMNS: [&str; 10] = [
    "id", "e1", "(12)", "e2(12)", "(12)(34)", "e2(12)(34)", "e3(12)(34)", "(123)", "(1234)", "e2(12)(34)",
];

pub const REFERENCE_SIZES: [usize; 10] = [1, 3, 12, 12, 3, 3, 6, 32, 12, 12];

pub const REFERENCE_CHI_PR: [i64; 10] = [21, 5, -7, -3, 5, 5, 5, 3, -3, -3];

pub const REFERENCE_LABELS: [&str; 10] = ["rho1", "rho2", "rho3", "rho4", "rho5", "phi1", "phi2", "phi3", "phi4", "phi5"];

pub const REFERENCE_TABLE: [[i64; 10]; 10] = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [1, 1, -1, -1, 1, 1, 1, 1, -1, -1],
    [2, 2, 0, 0, 2, 2, 2, -1, 0, 0],
    [3, 3, 1, 1, -1, -1, -1, 0, -1, -1],
    [3, 3, -1, -1, -1, -1, -1, 0, 1, 1],
    [3, -1, 1, -1, 3, -1, -1, 0, 1, -1],
    [3, -1, -1, 1, -1, 3, -1, 0, 1, -1],
    [3, -1, 1, -1, -1, 3, -1, 0, -1, 1],
    [3, -1, -1, 1, 3, -1, -1, 0, -1, 1],
    [6, -2, 0, 0, -2, -2, 2, 0, 0, 0],
];

/// For each published column, the index of the matching computed class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassMatching {
    pub columns: Vec<usize>,
    /// Number of column assignments consistent with the `(size, χ_pr)` data alone.
    pub candidates: usize,
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Finds the unique bijection between published columns and computed classes that respects
/// `(size, χ_pr)` and makes every row of `table` equal to the published row of the same label.
pub fn match_reference(classes: &HClasses, table: &CharacterTable) -> Result<ClassMatching, RepError> {
    let fps: Vec<Fingerprint> = classes.fingerprints();
    // group published columns and computed classes by (size, chi_pr)
    let key = |size: usize, chi: i64| (size, chi);
    // (key, published columns, computed classes)
    type Bucket = ((usize, i64), Vec<usize>, Vec<usize>);
    let mut groups: Vec<Bucket> = Vec::new();
    for (j, (&s, &c)) in REFERENCE_SIZES.iter().zip(&REFERENCE_CHI_PR).enumerate() {
        match groups.iter_mut().find(|g| g.0 == key(s, c)) {
            Some(g) => g.1.push(j),
            None => groups.push((key(s, c), vec![j], vec![])),
        }
    }
    for (i, f) in fps.iter().enumerate() {
        let g = groups
            .iter_mut()
            .find(|g| g.0 == key(f.size, f.chi_pr))
            .ok_or(RepError::ReferenceMismatch("a computed class has no published counterpart"))?;
        g.2.push(i);
    }
    if groups.iter().any(|g| g.1.len() != g.2.len()) {
        return Err(RepError::ReferenceMismatch("class sizes or chi_pr values differ"));
    }
    let rows: Vec<usize> = REFERENCE_LABELS
        .iter()
        .map(|l| table.labels.iter().position(|x| x == l))
        .collect::<Option<_>>()
        .ok_or(RepError::ReferenceMismatch("missing character label"))?;
    // enumerate the product of per-group permutations
    let per_group: Vec<Vec<Vec<usize>>> = groups.iter().map(|g| permutations(&g.2)).collect();
    let candidates: usize = per_group.iter().map(Vec::len).product();
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut choice = vec![0usize; groups.len()];
    loop {
        let mut columns = vec![0usize; 10];
        for (gi, g) in groups.iter().enumerate() {
            for (slot, &j) in g.1.iter().enumerate() {
                columns[j] = per_group[gi][choice[gi]][slot];
            }
        }
        let ok = rows.iter().zip(REFERENCE_TABLE.iter()).all(|(&r, published)| {
            columns
                .iter()
                .zip(published)
                .all(|(&c, &v)| table.rows[r].values[c].as_int() == Some(v))
        });
        if ok {
            found.push(columns);
        }
        let mut k = 0;
        loop {
            if k == choice.len() {
                return match found.len() {
                    1 => Ok(ClassMatching { columns: found.pop().unwrap(), candidates }),
                    0 => Err(RepError::ReferenceMismatch("no class matching reproduces the published table")),
                    _ => Err(RepError::ReferenceMismatch("class matching is not unique")),
                };
            }
            choice[k] += 1;
            if choice[k] < per_group[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reptheory::character::character_table_h;
    use crate::reptheory::group::GroupElement;

    #[test]
    fn published_table_is_orthonormal() {
        for (i, a) in REFERENCE_TABLE.iter().enumerate() {
            for (j, b) in REFERENCE_TABLE.iter().enumerate() {
                let s: i64 = (0..10).map(|c| REFERENCE_SIZES[c] as i64 * a[c] * b[c]).sum();
                assert_eq!(s, if i == j { 96 } else { 0 });
            }
        }
    }

    #[test]
    fn computed_table_matches_published() {
        let cl = HClasses::new();
        let t = character_table_h(&cl);
        let m = match_reference(&cl, &t).unwrap();
        assert_eq!(m.candidates, 36);
        let c = GroupElement::from_cycles;
        let e = GroupElement::e;
        let labelled = [
            (0, GroupElement::IDENTITY),
            (1, e(1)),
            (2, c(&[&[1, 2]])),
            (3, e(2).compose(&c(&[&[1, 2]]))),
            (4, c(&[&[1, 2], &[3, 4]])),
            (6, e(3).compose(&c(&[&[1, 2], &[3, 4]]))),
            (7, c(&[&[1, 2, 3]])),
            (8, c(&[&[1, 2, 3, 4]])),
        ];
        for (col, g) in labelled {
            assert_eq!(m.columns[col], cl.class_of(&g), "column {col}");
        }
        let double = c(&[&[1, 2], &[3, 4]]);
        assert_eq!(cl.class_of(&e(2).compose(&double)), m.columns[6]);
        assert_eq!(cl.class_of(&e(1).compose(&double)), m.columns[5]);
        assert_eq!(cl.class_of(&e(1).compose(&c(&[&[1, 2, 3, 4]]))), m.columns[9]);
    }
}
