use dwork_ns::exactalg::{rat, ratio, Generator, Rational, SignVector};
use dwork_ns::galoisrep::*;

fn class_multiplicities(lambda: &Rational, dim: usize) -> Vec<(i64, usize)> {
    let report = joint_eigenspaces(&load_matrices(dim).unwrap()).unwrap();
    let mut v: Vec<(i64, usize)> = character_labels(lambda, &report)
        .unwrap()
        .iter()
        .map(|c| (c.square_class.to_string().parse().unwrap(), c.multiplicity))
        .collect();
    v.sort();
    v
}

#[test]
fn traces_agree_with_eigenspaces() {
    for dim in [8, 19] {
        let mats = load_matrices(dim).unwrap();
        let report = joint_eigenspaces(&mats).unwrap();
        assert_eq!(report.multiplicities.values().sum::<usize>(), dim);
        for s in SignVector::all() {
            assert_eq!(product_for(&mats, s).trace(), report.predicted_trace(s), "dim {dim} {s}");
        }
    }
    let m19 = load_matrices(19).unwrap();
    let m8 = load_matrices(8).unwrap();
    assert_eq!(m19[Generator::I.index()].matrix.trace(), -5);
    assert_eq!(m8[Generator::Minus.index()].matrix.trace(), -4);
}

#[test]
fn eight_dimensional_part_sits_inside() {
    let r8 = joint_eigenspaces(&load_matrices(8).unwrap()).unwrap();
    let r19 = joint_eigenspaces(&load_matrices(19).unwrap()).unwrap();
    for s in SignVector::all() {
        assert!(r8.multiplicity(s) <= r19.multiplicity(s));
    }
}

#[test]
fn characters_at_two() {
    // 1, -(λ²-1), -(λ²+1), -2(λ⁴-1), 2(λ⁴-1) at λ = 2 are 1, -3, -5, -30, 30
    assert_eq!(class_multiplicities(&rat(2), 19), vec![(-30, 6), (-5, 3), (-3, 3), (1, 1), (30, 6)]);
    let mut m8: Vec<usize> = class_multiplicities(&rat(2), 8).iter().map(|x| x.1).collect();
    m8.sort();
    assert_eq!(m8, vec![1, 1, 1, 2, 3]);
}

#[test]
fn characters_at_three_halves() {
    // λ² - 1 = 5/4, λ² + 1 = 13/4, λ⁴ - 1 = 65/16
    assert_eq!(class_multiplicities(&ratio(3, 2), 19), vec![(-130, 6), (-13, 3), (-5, 3), (1, 1), (130, 6)]);
}

#[test]
fn multiplicity_constraints() {
    let c = theorem_constraints(&joint_eigenspaces(&load_matrices(19).unwrap()).unwrap());
    assert!(c.all_divisible_by_3 && c.some_at_least_6 && c.at_most_5);
    assert!(c.passed());
}

#[test]
fn isometry_and_relations() {
    for dim in [8, 19] {
        verify_group_relations(&load_matrices(dim).unwrap()).unwrap();
    }
    let iso = verify_isometry_8(&load_matrices(8).unwrap()).unwrap();
    assert_eq!(iso.k_squared, 2);
    let conv = select_convention();
    assert_eq!(conv.chosen, Convention::Column);
    assert!(conv.column_passes && !conv.row_passes);
}

#[test]
fn frobenius_traces_against_counts() {
    for (l, p) in [(rat(2), 7u64), (rat(3), 11), (ratio(1, 2), 13), (rat(5), 19)] {
        for k in [1, 2] {
            if k == 2 && p > 11 {
                continue;
            }
            let r = crosscheck_trace(&l, p, k).unwrap();
            assert!(r.passed, "{l} {p} {k}: {r:?}");
            assert_eq!(Some(r.matrix_trace), r.from_counts);
        }
    }
    assert!(matches!(frobenius_sign(&rat(2), 5), Err(GaloisError::RamifiedPrime(5))));
}

#[test]
fn coinciding_classes_merge_at_three() {
    // -(λ²+1) = -10 and -2(λ⁴-1) = -160 share a square class
    assert_eq!(class_multiplicities(&rat(3), 19), vec![(-10, 9), (-2, 3), (1, 1), (10, 6)]);
}
