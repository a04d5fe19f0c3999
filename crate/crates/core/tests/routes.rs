//! Cross-route properties: lattices, graphs, links and monodromy.

mod common;

use common::{brieskorn_char_poly, evaluate_continued_fraction, poly_eval, random_unimodular};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use obstruction_core::corpus::{run_selfcheck, selfcheck_corpus};
use obstruction_core::monodromy::coxeter_operator_with_order;
use obstruction_core::{
    ade_graph, brieskorn_h1_order, brieskorn_pham_operator, compute_report, coxeter_operator,
    hirzebruch_jung, lens_space_h1, link_from_plumbing, AdeKind, BigInt, FiniteAbelianGroup,
    IntMatrix, Lattice, ObstructionReport, SingularitySpec, Verdict,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn all_ade() -> Vec<(AdeKind, u32)> {
    let mut v: Vec<_> = (1..=20).map(|n| (AdeKind::A, n)).collect();
    v.extend((4..=12).map(|n| (AdeKind::D, n)));
    v.extend((6..=8).map(|n| (AdeKind::E, n)));
    v
}

fn lattice_of(kind: AdeKind, n: u32) -> Lattice {
    Lattice::new(ade_graph(kind, n).unwrap().intersection_matrix()).unwrap()
}

#[test]
fn discriminant_is_invariant_under_basis_change() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let grams = [
        ade_graph(AdeKind::D, 5).unwrap().intersection_matrix(),
        ade_graph(AdeKind::E, 6).unwrap().intersection_matrix(),
        hirzebruch_jung(17, 5).unwrap().1.intersection_matrix(),
        IntMatrix::from_rows(&[[2, 1, 0], [1, -4, 3], [0, 3, 6]]).unwrap(),
    ];
    for gram in &grams {
        let base = Lattice::new(gram.clone()).unwrap().discriminant_group();
        for _ in 0..20 {
            let p = random_unimodular(&mut rng, gram.rows(), 8);
            assert!(p.determinant().unwrap().abs().is_one());
            let changed = &(&p.transpose() * gram) * &p;
            let group = Lattice::new(changed).unwrap().discriminant_group();
            assert_eq!(group, base);
        }
    }
}

#[test]
fn unimodularity_three_ways() {
    let mut grams: Vec<IntMatrix> = all_ade()
        .into_iter()
        .map(|(k, n)| ade_graph(k, n).unwrap().intersection_matrix())
        .collect();
    grams.push(IntMatrix::from_rows(&[[0, 1], [1, 0]]).unwrap());
    grams.push(IntMatrix::from_rows(&[[1]]).unwrap());
    for gram in grams {
        let l = Lattice::new(gram).unwrap();
        let by_group = l.discriminant_group().is_trivial();
        let by_det = l.determinant().abs().is_one();
        assert_eq!(l.is_unimodular(), by_group);
        assert_eq!(by_group, by_det);
        assert_eq!(l.discriminant_group().order(), &l.determinant().abs());
    }
}

#[test]
fn hirzebruch_jung_corpus() {
    for n in 2u64..=200 {
        for q in (1..n).filter(|q| q.gcd(&n) == 1) {
            let (cf, graph) = hirzebruch_jung(n, q).unwrap();
            assert!(cf.terms.iter().all(|&b| b >= 2), "{n}/{q}");
            assert_eq!(
                evaluate_continued_fraction(&cf.terms),
                (n as i128, q as i128)
            );
            let (p, r) = cf.evaluate();
            assert_eq!((p, r), (BigInt::from(n), BigInt::from(q)));
            let m = graph.intersection_matrix();
            assert!(m.is_negative_definite().unwrap());
            assert_eq!(m.determinant().unwrap().abs(), BigInt::from(n));
            let disc = Lattice::new(m).unwrap().discriminant_group();
            assert_eq!(disc, FiniteAbelianGroup::cyclic(n).unwrap());
        }
    }
}

#[test]
fn ade_determinants_and_groups() {
    for k in 1..=20u32 {
        let det = ade_graph(AdeKind::A, k)
            .unwrap()
            .intersection_matrix()
            .determinant()
            .unwrap();
        let expected = BigInt::from(k + 1) * if k % 2 == 0 { 1 } else { -1 };
        assert_eq!(det, expected, "A_{k}");
    }
    for n in 4..=12u32 {
        let group = lattice_of(AdeKind::D, n).discriminant_group();
        let expected: Vec<BigInt> = if n % 2 == 1 {
            vec![4.into()]
        } else {
            vec![2.into(), 2.into()]
        };
        assert_eq!(group.invariant_factors(), expected.as_slice(), "D_{n}");
    }
    for (n, order) in [(6, 3), (7, 2), (8, 1)] {
        assert_eq!(
            lattice_of(AdeKind::E, n).discriminant_group().order(),
            &BigInt::from(order)
        );
    }
    for (kind, n) in all_ade() {
        let m = ade_graph(kind, n).unwrap().intersection_matrix();
        assert!(m.is_negative_definite().unwrap(), "{kind}_{n}");
    }
}

#[test]
fn lens_space_matches_plumbing() {
    for n in 2u64..=100 {
        for q in (1..n).filter(|q| q.gcd(&n) == 1) {
            let lens = lens_space_h1(n, q).unwrap();
            let plumbed = link_from_plumbing(&hirzebruch_jung(n, q).unwrap().1).unwrap();
            assert_eq!(lens.h1_torsion, plumbed.h1_torsion, "L({n},{q})");
            assert_eq!(plumbed.h1_free_rank, 0);
            assert_eq!(plumbed.h2_torsion, plumbed.h1_torsion);
        }
    }
    for k in 1..=20u32 {
        let plumbed = link_from_plumbing(&ade_graph(AdeKind::A, k).unwrap()).unwrap();
        assert_eq!(plumbed, lens_space_h1(u64::from(k) + 1, 1).unwrap());
    }
}

#[test]
fn brieskorn_closed_form_family() {
    for m in (2u64..=49).filter(|m| m.gcd(&6) == 1) {
        let order = brieskorn_h1_order(2, 3, m).unwrap();
        assert_eq!(order, BigInt::from((m as i64 - 6).abs()), "m = {m}");
    }
}

#[test]
fn coxeter_elements_are_unimodular() {
    for (kind, n) in all_ade() {
        let t = coxeter_operator(kind, n).unwrap();
        assert!(t.matrix().determinant().unwrap().abs().is_one());
    }
}

#[test]
fn coxeter_order_does_not_matter() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (kind, n) in [
        (AdeKind::A, 3),
        (AdeKind::D, 4),
        (AdeKind::E, 6),
        (AdeKind::E, 8),
    ] {
        let base = coxeter_operator(kind, n).unwrap().variation();
        for _ in 0..5 {
            let mut order: Vec<usize> = (0..n as usize).collect();
            order.shuffle(&mut rng);
            let v = coxeter_operator_with_order(kind, n, &order)
                .unwrap()
                .variation();
            assert_eq!(v, base, "{kind}_{n} with order {order:?}");
        }
    }
}

#[test]
fn coxeter_variation_matches_discriminant() {
    for (kind, n) in all_ade() {
        let v = coxeter_operator(kind, n).unwrap().variation();
        let lattice = lattice_of(kind, n);
        assert_eq!(
            v.cokernel_torsion,
            lattice.discriminant_group(),
            "{kind}_{n}"
        );
        assert_eq!(v.kernel_rank, 0);
        assert_eq!(v.det_t_minus_id.abs(), lattice.determinant().abs());
    }
}

#[test]
fn brieskorn_tensor_model_matches_divisor_formula() {
    let cases = [
        (2, 2, 2),
        (2, 3, 5),
        (2, 3, 7),
        (2, 3, 11),
        (2, 3, 6),
        (2, 3, 4),
        (2, 5, 7),
        (3, 4, 5),
        (2, 3, 9),
    ];
    for (a, b, c) in cases {
        let op = brieskorn_pham_operator(a, b, c).unwrap();
        let charpoly = op.matrix().characteristic_polynomial().unwrap();
        let oracle: Vec<BigInt> = brieskorn_char_poly(a, b, c)
            .into_iter()
            .map(BigInt::from)
            .collect();
        assert_eq!(charpoly, oracle, "({a},{b},{c})");

        // det(T - id) = (-1)^mu p(1)
        let v = op.variation();
        let p1 = BigInt::from(poly_eval(&brieskorn_char_poly(a, b, c), 1));
        let sign = if op.mu().is_multiple_of(2) { 1 } else { -1 };
        assert_eq!(v.det_t_minus_id, p1 * sign, "({a},{b},{c})");
    }
}

#[test]
fn brieskorn_pairwise_coprime_variation_is_unimodular() {
    // For pairwise coprime exponents the divisor formula gives p(1) = ±1.
    for m in (5u64..=35).filter(|m| m.gcd(&6) == 1) {
        let v = brieskorn_pham_operator(2, 3, m).unwrap().variation();
        assert_eq!(v.kernel_rank, 0);
        assert!(v.det_t_minus_id.abs().is_one(), "m = {m}");
        assert!(v.cokernel_torsion.is_trivial());
    }
}

#[test]
fn brieskorn_kernel_appears_exactly_for_multiples_of_six() {
    for m in 2u64..=36 {
        let v = brieskorn_pham_operator(2, 3, m).unwrap().variation();
        assert_eq!(v.kernel_rank > 0, m % 6 == 0, "m = {m}");
        assert_eq!(v.determinant_order().is_err(), m % 6 == 0);
        assert_eq!(v.kernel_rank, v.cokernel_free_rank);
        assert_eq!(v.det_t_minus_id.is_zero(), m % 6 == 0);
    }
}

#[test]
fn corpus_verdicts() {
    let check = run_selfcheck(&selfcheck_corpus()).unwrap();
    assert_eq!(check.reports.len(), 100);
    for r in &check.reports {
        if !matches!(r.spec, SingularitySpec::BrieskornPham { .. }) {
            assert_eq!(r.verdict, Verdict::Compatible, "{}", r.spec);
        }
    }
}

#[test]
fn corpus_never_mismatches() {
    let check = run_selfcheck(&selfcheck_corpus()).unwrap();
    let bad: Vec<String> = check.mismatches().map(|r| r.spec.to_string()).collect();
    assert!(bad.is_empty(), "MISMATCH for {bad:?}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn report_json_round_trips(index in 0usize..100) {
        let spec = &selfcheck_corpus()[index];
        let report = compute_report(spec).unwrap();
        let text = report.to_json();
        prop_assert_eq!(ObstructionReport::from_json(&text).unwrap(), report.clone());
        prop_assert_eq!(compute_report(spec).unwrap().to_json(), text);
        prop_assert_eq!(compute_report(spec).unwrap().render_text(), report.render_text());
    }
}
