use std::sync::Arc;

use dwork_ns::counting::{self, *};
use dwork_ns::exactalg::{rat, ratio, Rational};
use dwork_ns::ffield::*;
use proptest::prelude::{any, prop, prop_assert, prop_assert_eq, prop_assume, proptest, ProptestConfig};

/// Affine cone count over `F_p` of a homogeneous quartic, divided by `p - 1`.
fn naive_prime(p: i64, f: impl Fn([i64; 4]) -> i64) -> u64 {
    let mut n = 0u64;
    for a in 0..p.pow(4) {
        let x = [a % p, a / p % p, a / p / p % p, a / p / p / p];
        if x != [0; 4] && f(x).rem_euclid(p) == 0 {
            n += 1;
        }
    }
    n / (p as u64 - 1)
}

fn lambda_mod(l: &Rational, p: i64) -> i64 {
    reduce_rational(l, p as u64).unwrap() as i64
}

fn naive_x(l: &Rational, p: i64) -> u64 {
    let l = lambda_mod(l, p);
    naive_prime(p, |[a, b, c, d]| {
        let s: i64 = [a, b, c, d].iter().map(|v| v.pow(4) % p).sum();
        s - 4 * l % p * (a * b % p * c % p * d % p)
    })
}

fn naive_m(l: &Rational, p: i64) -> u64 {
    let l = lambda_mod(l, p);
    let big = (4 * l % p).pow(4) % p;
    naive_prime(p, |[a, b, c, d]| (a + b + c + d).pow(4) % p - big * (a * b % p * c % p * d % p))
}

/// Same cone count over `F_q` through the slow polynomial-basis field elements.
fn naive_x_ext(l: &Rational, spec: &Arc<FieldSpec>) -> u64 {
    let q = spec.q();
    let elems: Vec<FieldElem> = (0..q).map(|i| FieldElem::from_index(spec, i)).collect();
    let fourth: Vec<FieldElem> = elems.iter().map(|e| e.pow(4)).collect();
    let c = FieldElem::from_rational(spec, &(l * rat(-4))).unwrap();
    let mut n = 0u64;
    for a in 0..q as usize {
        for b in 0..q as usize {
            let ab = elems[a].mul(&elems[b]).mul(&c);
            let s2 = fourth[a].add(&fourth[b]);
            for x in 0..q as usize {
                let abx = ab.mul(&elems[x]);
                let s3 = s2.add(&fourth[x]);
                for y in 0..q as usize {
                    if (a, b, x, y) != (0, 0, 0, 0) && s3.add(&fourth[y]).add(&abx.mul(&elems[y])).is_zero() {
                        n += 1;
                    }
                }
            }
        }
    }
    n / (q - 1)
}

#[test]
fn prime_field_counts_match_enumeration() {
    for l in [rat(2), rat(3), ratio(1, 2), ratio(3, 2)] {
        for p in [3i64, 7, 11, 13] {
            if admissible(&l, p as u64, true).is_err() {
                continue;
            }
            let spec = FieldSpec::prime(p as u64).unwrap();
            for strategy in [counting::Strategy::Histogram, counting::Strategy::Direct] {
                assert_eq!(count_x_with(&l, &spec, strategy).unwrap().count, naive_x(&l, p), "X λ={l} p={p}");
                assert_eq!(count_m_with(&l, &spec, strategy).unwrap().count, naive_m(&l, p), "M λ={l} p={p}");
            }
        }
    }
}

#[test]
fn fermat_count_over_f3() {
    let spec = FieldSpec::prime(3).unwrap();
    assert_eq!(count_x(&rat(0), &spec).unwrap().count, 16);
    assert_eq!(naive_x(&rat(0), 3), 16);
}

#[test]
fn extension_field_counts_match_enumeration() {
    for (p, l) in [(3u64, rat(0)), (5, rat(5)), (7, rat(2))] {
        let spec = FieldSpec::new(p, 2).unwrap();
        assert_eq!(count_x(&l, &spec).unwrap().count, naive_x_ext(&l, &spec), "p={p}");
    }
}

#[test]
fn worked_instance_at_seven() {
    let spec = FieldSpec::prime(7).unwrap();
    let r = verify_trace_identity(&rat(2), &spec).unwrap();
    assert_eq!((r.x_count, r.y_count, r.predicted_tns), (96, 180, 7));
    assert_eq!(r.x_count as i64 - r.y_count as i64, -84);
    assert!(r.passed && r.within_weil_bound());
    assert_eq!(r.t_transcendental, r.t_transcendental_from_y);
    let c = curve_counts(&rat(2), &spec).unwrap();
    assert_eq!((c.roots_x.clone(), c.roots_y.clone()), (vec![5], vec![2]));
    assert!(c.bijection_ok);
}

#[test]
fn bad_inputs_are_rejected() {
    let s5 = FieldSpec::prime(5).unwrap();
    assert!(matches!(count_x(&rat(1), &s5), Err(CountError::BadReduction { .. })));
    assert!(matches!(count_m(&rat(0), &FieldSpec::prime(7).unwrap()), Err(CountError::LambdaZero)));
    assert!(FieldSpec::prime(2).is_err());
    assert!(matches!(t_ns_predicted(&rat(2), &FieldSpec::prime(3).unwrap()), Err(CountError::RamifiedPrime(3))));
    assert!(matches!(verify_mod3q(&rat(2), 3, 1), Err(CountError::PrimeExcluded(3))));
    assert_eq!(admissible(&rat(2), 5, false), Err(Inadmissible::RamifiedPrime));
    assert!(admissible(&ratio(1, 2), 2, false).is_err());
}

#[test]
fn euler_criterion_matches_square_sets() {
    for p in odd_primes(3, 100) {
        let squares: std::collections::BTreeSet<u64> = (1..p).map(|x| x * x % p).collect();
        for a in 1..p {
            let expected = if squares.contains(&a) { 1 } else { -1 };
            assert_eq!(legendre(a as i64, p).unwrap(), expected, "({a}/{p})");
        }
    }
}

#[test]
fn prime_subfield_is_square_in_quadratic_extension() {
    for p in [3u64, 5, 7, 11] {
        let spec = FieldSpec::new(p, 2).unwrap();
        for a in 1..p as i64 {
            assert_eq!(quad_char(&FieldElem::from_int(&spec, a)), 1);
        }
    }
}

#[test]
fn counts_do_not_depend_on_thread_count() {
    let spec = FieldSpec::prime(31).unwrap();
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| (count_x(&ratio(3, 2), &spec).unwrap(), count_m(&ratio(3, 2), &spec).unwrap()))
    };
    assert_eq!(run(1), run(4));
}

fn small_prime() -> impl proptest::strategy::Strategy<Value = u64> {
    prop::sample::select(odd_primes(3, 60))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn legendre_is_multiplicative(a in -1000i64..1000, b in -1000i64..1000, p in small_prime()) {
        prop_assert_eq!(legendre(a * b, p).unwrap(), legendre(a, p).unwrap() * legendre(b, p).unwrap());
    }

    #[test]
    fn extension_field_axioms(p in prop::sample::select(vec![3u64, 5, 7]), k in 1u32..=3, a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let spec = FieldSpec::new(p, k).unwrap();
        let e = |i: u64| FieldElem::from_index(&spec, i % spec.q());
        let (a, b, c) = (e(a), e(b), e(c));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b).frobenius(), a.frobenius().add(&b.frobenius()));
        prop_assert_eq!(a.frobenius(), a.pow(p));
        if !a.is_zero() {
            prop_assert_eq!(a.mul(&a.inv().unwrap()), FieldElem::from_int(&spec, 1));
        }
    }

    #[test]
    fn count_is_even_in_lambda(n in -20i64..20, d in 1i64..6, p in prop::sample::select(vec![7u64, 11, 13, 17])) {
        let l = ratio(n, d);
        prop_assume!(admissible(&l, p, false).is_ok());
        let spec = FieldSpec::prime(p).unwrap();
        prop_assert_eq!(count_x(&l, &spec).unwrap().count, count_x(&-l.clone(), &spec).unwrap().count);
    }

    #[test]
    fn curve_root_sets_correspond(n in -30i64..30, d in 1i64..6, p in small_prime()) {
        let l = ratio(n, d);
        prop_assume!(admissible(&l, p, true).is_ok());
        let c = curve_counts(&l, &FieldSpec::prime(p).unwrap()).unwrap();
        prop_assert_eq!(c.n_x, c.n_y);
        prop_assert!(c.bijection_ok);
    }
}
