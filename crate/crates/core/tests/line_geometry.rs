use dwork_ns::delpezzo::*;
use dwork_ns::exactalg::{rat, ratio, AlgebraElement, Generator, MultiQuadField, Rational, SignVector};
use dwork_ns::galoisrep::{joint_eigenspaces, load_matrices, verify_group_relations, verify_isometry_8};

fn lines_at(l: &Rational) -> (QuotientSurface, Vec<Line>) {
    let s = surface_model(0, 1, 4, l).unwrap();
    let lines = build_lines(&s).unwrap();
    (s, lines)
}

#[test]
fn every_line_lies_on_its_surface() {
    for l in [rat(2), rat(3)] {
        let (s, lines) = lines_at(&l);
        assert_eq!(lines.len(), 56);
        assert_eq!(count_bitangents(&lines), 28);
        assert!(lines.iter().all(|line| verify_line(&s, line) == LineCheck::Exact));
        for (i, a) in lines.iter().enumerate() {
            assert_eq!(lines.iter().filter(|b| b.same_bitangent(a)).count(), 2);
            assert!(lines[..i].iter().all(|b| !b.same_curve(a)));
        }
    }
}

#[test]
fn galois_permutations_form_the_group() {
    for l in [rat(2), rat(3)] {
        let (_, lines) = lines_at(&l);
        assert!(galois_permutation(&lines, SignVector::IDENTITY).unwrap().is_identity());
        assert!(check_galois_action(&lines).unwrap().passed());
    }
}

#[test]
fn sigma_i_negates_family_one_root() {
    let (s, lines) = lines_at(&rat(2));
    let p = galois_permutation(&lines, SignVector::single(Generator::I)).unwrap();
    let roots = family_roots(s.field(), 1).unwrap();
    for (i, line) in lines.iter().enumerate().filter(|(_, l)| l.tag.family == 1) {
        let image = &lines[p.image[i]];
        assert_eq!(image.tag.family, 1);
        assert_eq!(image.tag.sign, line.tag.sign);
        assert_eq!(roots[image.tag.root as usize], -&roots[line.tag.root as usize]);
    }
}

#[test]
fn fixed_bitangents_have_fixed_coefficients() {
    let (_, lines) = lines_at(&rat(2));
    for s in SignVector::all() {
        for line in &lines {
            let fixed = line.linear().apply_sign(s) == *line.linear();
            let coeffwise = line.linear().coeffs().iter().all(|c| c.apply_sign(s) == *c);
            assert_eq!(fixed, coeffwise);
        }
    }
}

#[test]
fn intersection_numbers_are_symmetric_and_small() {
    let (_, lines) = lines_at(&rat(2));
    let g = intersection_matrix(&lines).unwrap();
    for i in 0..56 {
        let row = g.row(i);
        assert_eq!(row.iter().filter(|&&x| x == 2).count(), 1);
        // a line on a degree-2 del Pezzo meets 27 others once and is disjoint from 27
        assert_eq!(row.iter().filter(|&&x| x == 1).count(), 27);
        for j in 0..56 {
            assert_eq!(g[(i, j)], g[(j, i)]);
        }
    }
    assert!(matches!(intersection_number(&lines[0], &lines[0]), Err(DelPezzoError::SameLine)));
}

#[test]
fn fermat_configuration_at_zero() {
    let f = MultiQuadField::for_lambda_padded(&rat(0)).unwrap();
    let model = FermatModel::standard(&f).unwrap();
    let z = model.zeta();
    assert_eq!(z.square(), AlgebraElement::sqrt_generator(&f, Generator::I));
    let fl = fermat_lines(&model).unwrap();
    assert_eq!(fl.len(), 56);
    let lines: Vec<Line> = fl.iter().map(|l| l.line.clone()).collect();
    let g = intersection_matrix(&lines).unwrap();
    let basis = fermat_basis(&fl).unwrap();
    let report = basis.report(&g);
    assert!(report.pairwise_disjoint);
    assert!(report.gram_is_standard);
    assert_eq!(report.anticanonical_square, 2);
    assert!(report.anticanonical_degrees.iter().all(|&d| d == 1));
    // v8' meets v6 and v7 once, the other basis lines not at all
    assert_eq!(report.raw[7], vec![0, 0, 0, 0, 0, 1, 1, -1]);
    let v1 = &lines[basis.v[0]];
    assert_eq!(intersection_number(v1, &v1.conjugate_lift()).unwrap(), 2);
}

#[test]
fn fermat_lines_agree_with_families_at_zero() {
    let s = surface_model(0, 1, 4, &rat(0)).unwrap();
    let model = FermatModel::standard(s.field()).unwrap();
    assert_eq!(model.quartic(), *s.branch_quartic());
    let fl = fermat_lines(&model).unwrap();
    let built = build_lines(&s).unwrap();
    for b in &built {
        assert_eq!(fl.iter().filter(|f| f.line.same_curve(b)).count(), 1);
    }
}

#[test]
fn line_classes_reproduce_printed_eigenstructure() {
    let printed = load_matrices(8).unwrap();
    let printed_eigen = joint_eigenspaces(&printed).unwrap();
    for l in [rat(2), ratio(1, 2), ratio(3, 2)] {
        let (_, lines) = lines_at(&l);
        let g = intersection_matrix(&lines).unwrap();
        let mats = galois_matrices_from_lines(&lines, &g).unwrap();
        verify_group_relations(&mats).unwrap();
        verify_isometry_8(&mats).unwrap();
        for (m, p) in mats.iter().zip(&printed) {
            assert_eq!(m.matrix.trace(), p.matrix.trace(), "{}", m.label.name());
        }
        assert_eq!(joint_eigenspaces(&mats).unwrap(), printed_eigen);
    }
}

#[test]
fn other_quotients_carry_56_lines() {
    for &(i, j, r) in &FIXED_SURFACES {
        let s = surface_model(i, j, r, &rat(2)).unwrap();
        let lines = build_lines(&s).unwrap();
        assert_eq!(count_bitangents(&lines), 28);
        if r == 1 {
            // the r = 1 model has a coefficient in Q(I), so only σ_I moves it off itself
            let err = galois_permutation(&lines, SignVector::single(Generator::I));
            assert!(matches!(err, Err(DelPezzoError::ImageNotFound { .. })));
            for g in [Generator::Two, Generator::Plus, Generator::Minus] {
                assert!(galois_permutation(&lines, SignVector::single(g)).unwrap().is_involution());
            }
        } else {
            assert!(check_galois_action(&lines).unwrap().passed(), "{}", s.label());
        }
    }
}
