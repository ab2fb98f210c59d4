//! Restriction of characters of `H` to the subgroups `S3`, `A3`, `A4` and `D8 = K1`.

use std::fmt;

use serde::Serialize;

use super::character::{decompose, k1, CharacterTable, ClassFunction, HClasses, Multiplicity, D8_TABLE};
use super::cyclo::Cyclo3;
use super::group::{classes_under, symmetric_group, ConjClass, GroupElement};
use super::RepError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Subgroup {
    S3,
    A3,
    A4,
    D8,
}

impl Subgroup {
    pub const ALL: [Subgroup; 4] = [Subgroup::S3, Subgroup::A3, Subgroup::A4, Subgroup::D8];

    pub fn parse(s: &str) -> Option<Subgroup> {
        match s.to_ascii_uppercase().as_str() {
            "S3" => Some(Subgroup::S3),
            "A3" | "C3" => Some(Subgroup::A3),
            "A4" => Some(Subgroup::A4),
            "D8" | "K1" => Some(Subgroup::D8),
            _ => None,
        }
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A subgroup of pure permutations with its classes and an embedded character table.
#[derive(Clone, Debug)]
pub struct SubgroupTable {
    pub kind: Subgroup,
    pub classes: Vec<ConjClass>,
    pub table: CharacterTable,
}

fn cyc(cycles: &[&[u8]]) -> GroupElement {
    GroupElement::from_cycles(cycles)
}

fn build(kind: Subgroup, elements: Vec<GroupElement>, reps: Vec<GroupElement>, labels: &[&str], rows: Vec<Vec<Cyclo3>>) -> SubgroupTable {
    let all = classes_under(&elements, &elements);
    let classes: Vec<ConjClass> = reps
        .iter()
        .map(|r| {
            let c = all.iter().find(|c| c.contains(r)).expect("representative in subgroup");
            ConjClass { representative: *r, elements: c.elements.clone() }
        })
        .collect();
    assert_eq!(classes.len(), all.len());
    let table = CharacterTable {
        group: kind.to_string(),
        order: elements.len(),
        class_labels: reps.iter().map(ToString::to_string).collect(),
        class_sizes: classes.iter().map(ConjClass::size).collect(),
        labels: labels.iter().map(|s| s.to_string()).collect(),
        rows: rows.into_iter().map(|values| ClassFunction { values }).collect(),
    };
    SubgroupTable { kind, classes, table }
}

fn ints(rows: &[&[i64]]) -> Vec<Vec<Cyclo3>> {
    rows.iter().map(|r| r.iter().map(|&v| Cyclo3::int(v)).collect()).collect()
}

/// `S3` permutes letters 1, 2, 3 and `A3 = ⟨(123)⟩`; `A4` is the even part of `S4`.
pub fn subgroup_table(kind: Subgroup) -> SubgroupTable {
    let s4 = symmetric_group();
    let (z, z2, one) = (Cyclo3::ZETA, Cyclo3::ZETA2, Cyclo3::ONE);
    match kind {
        Subgroup::S3 => build(
            kind,
            s4.into_iter().filter(|g| g.perm()[3] == 3).collect(),
            vec![GroupElement::IDENTITY, cyc(&[&[1, 2]]), cyc(&[&[1, 2, 3]])],
            &["trivial", "sign", "standard"],
            ints(&[&[1, 1, 1], &[1, -1, 1], &[2, 0, -1]]),
        ),
        Subgroup::A3 => {
            let c = cyc(&[&[1, 2, 3]]);
            build(
                kind,
                vec![GroupElement::IDENTITY, c, c.inverse()],
                vec![GroupElement::IDENTITY, c, c.inverse()],
                &["trivial", "omega", "omega_bar"],
                vec![vec![one, one, one], vec![one, z, z2], vec![one, z2, z]],
            )
        }
        Subgroup::A4 => {
            let c = cyc(&[&[1, 2, 3]]);
            let three = Cyclo3::int(3);
            let m1 = Cyclo3::int(-1);
            let zero = Cyclo3::ZERO;
            build(
                kind,
                s4.into_iter().filter(GroupElement::is_even_perm).collect(),
                vec![GroupElement::IDENTITY, cyc(&[&[1, 2], &[3, 4]]), c, c.inverse()],
                &["trivial", "omega", "omega_bar", "standard"],
                vec![
                    vec![one, one, one, one],
                    vec![one, one, z, z2],
                    vec![one, one, z2, z],
                    vec![three, m1, zero, zero],
                ],
            )
        }
        Subgroup::D8 => {
            let u = cyc(&[&[1, 3, 2, 4]]);
            let v = cyc(&[&[1, 2]]);
            build(
                kind,
                k1(),
                vec![GroupElement::IDENTITY, u.compose(&u), u, v, u.compose(&v)],
                &["psi1", "psi2", "psi3", "psi4", "psi5"],
                D8_TABLE.iter().map(|r| r.iter().map(|&x| Cyclo3::int(x)).collect()).collect(),
            )
        }
    }
}

/// Restricts a class function of `H` to `kind` and decomposes it there.
pub fn restrict_and_decompose(
    f: &ClassFunction,
    classes: &HClasses,
    kind: Subgroup,
) -> Result<Vec<Multiplicity>, RepError> {
    let sub = subgroup_table(kind);
    let restricted = ClassFunction {
        values: sub
            .classes
            .iter()
            .map(|c| f.values[classes.class_of(&c.representative)])
            .collect(),
    };
    decompose(&restricted, &sub.table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_tables_are_orthonormal() {
        for k in Subgroup::ALL {
            let s = subgroup_table(k);
            assert!(s.table.is_orthonormal(), "{k}");
            assert_eq!(s.table.class_sizes.iter().sum::<usize>(), s.table.order);
        }
    }

    #[test]
    fn standard_of_s3_on_a3() {
        let s3 = subgroup_table(Subgroup::S3);
        let a3 = subgroup_table(Subgroup::A3);
        let std_row = s3.table.row("standard").unwrap();
        let restricted = ClassFunction {
            values: a3
                .classes
                .iter()
                .map(|c| {
                    let i = s3.classes.iter().position(|d| d.contains(&c.representative)).unwrap();
                    std_row.values[i]
                })
                .collect(),
        };
        let m: Vec<i64> = decompose(&restricted, &a3.table).unwrap().iter().map(|m| m.multiplicity).collect();
        assert_eq!(m, vec![0, 1, 1]);
    }
}
