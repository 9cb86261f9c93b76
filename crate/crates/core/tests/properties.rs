use std::sync::Arc;

use fibstab::arith::{grid, int, poly_fit, rat, BivariatePolynomial, Rational, UniPoly};
use fibstab::chow::{ChowModel, ClassPoly, DivisorClass};
use fibstab::cli::{parse, ProblemSpec};
use fibstab::invariants::{df_fibration_expansion, df_intersection, df_normalisation, df_weights, linf_norm, min_norm_fibration};
use fibstab::models::{make_fibre_test_configuration, make_projectivised_fibration, make_weighted_degeneration, SplitBundle};
use fibstab::oracle::{fit_h_and_w, fit_tc, GridSpec};
use proptest::prelude::*;

fn q() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn bivariate(max_j: u32, max_k: u32) -> impl Strategy<Value = BivariatePolynomial> {
    prop::collection::vec(((0..=max_j, 0..=max_k), q()), 0..6).prop_map(BivariatePolynomial::from_terms)
}

fn unipoly() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(q(), 0..5).prop_map(UniPoly::new)
}

fn bundle_over_p1(rank: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-2i64..=2, rank)
}

fn surface_bundle() -> impl Strategy<Value = ChowModel> {
    (bundle_over_p1(2), prop::bool::ANY).prop_map(|(d, two_factors)| {
        if two_factors {
            let base = Arc::new(ChowModel::projective_product(&[1, 1]));
            let s = d.iter().map(|&x| DivisorClass::from_coeffs(vec![int(x), int(-x)])).collect();
            ChowModel::projective_bundle(base, s).unwrap()
        } else {
            let base = Arc::new(ChowModel::projective_product(&[1]));
            let s = d.iter().map(|&x| DivisorClass::from_coeffs(vec![int(x)])).collect();
            ChowModel::projective_bundle(base, s).unwrap()
        }
    })
}

fn class_on(model: &ChowModel) -> impl Strategy<Value = DivisorClass> {
    prop::collection::vec(-3i64..=3, model.ngens()).prop_map(|c| DivisorClass::from_coeffs(c.into_iter().map(int).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(a in bivariate(3, 3), b in bivariate(3, 3), c in bivariate(3, 3)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn univariate_ring_axioms(a in unipoly(), b in unipoly(), x in q()) {
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
    }

    #[test]
    fn fit_round_trip(p in bivariate(2, 3)) {
        let samples: Vec<_> = grid(1, 4, 0, 5).into_iter().map(|(j, k)| ((j, k), p.eval_int(j, k))).collect();
        prop_assert_eq!(poly_fit(&samples, (2, 3)).unwrap(), p);
    }

    #[test]
    fn intersection_is_symmetric_and_multilinear(x in surface_bundle().prop_flat_map(|m| {
        (class_on(&m), class_on(&m), class_on(&m), class_on(&m), Just(m))
    }), s in -3i64..=3) {
        let (a, b, c, d, m) = x;
        if m.dimension() == 2 {
            prop_assert_eq!(m.intersect(&[&a, &b]).unwrap(), m.intersect(&[&b, &a]).unwrap());
            let lhs = m.intersect(&[&(&a + &c.scale(&int(s))), &b]).unwrap();
            let rhs = m.intersect(&[&a, &b]).unwrap() + int(s) * m.intersect(&[&c, &b]).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(m.intersect(&[&a, &b]).unwrap(), m.intersect_by_reduction(&[&a, &b]).unwrap());
        } else {
            let abc = m.intersect(&[&a, &b, &c]).unwrap();
            prop_assert_eq!(&abc, &m.intersect(&[&c, &a, &b]).unwrap());
            prop_assert_eq!(&abc, &m.intersect_by_reduction(&[&a, &b, &c]).unwrap());
            let e = &a + &d.scale(&int(s));
            let lhs = m.intersect(&[&e, &b, &c]).unwrap();
            prop_assert_eq!(lhs, abc + int(s) * m.intersect(&[&d, &b, &c]).unwrap());
        }
    }

    #[test]
    fn reduction_is_idempotent(m in surface_bundle(), exps in prop::collection::vec(prop::collection::vec(0u32..=4, 3), 1..5)) {
        let mut p = ClassPoly::zero(m.ngens());
        for (i, e) in exps.into_iter().enumerate() {
            let mut e = e;
            e.truncate(m.ngens());
            e.resize(m.ngens(), 0);
            p.add_term(e, int(i as i64 + 1));
        }
        let once = m.reduce(&p).unwrap();
        prop_assert_eq!(m.reduce(&once).unwrap(), once);
    }

    #[test]
    fn weight_shift_invariance(deg in bundle_over_p1(3), w in prop::collection::vec(0i64..=2, 3), s in 1i64..=3) {
        let rows: Vec<Vec<i64>> = deg.iter().map(|&d| vec![d]).collect();
        let e = SplitBundle::over_product(&[1], &rows).unwrap();
        let x = make_projectivised_fibration(&e, &e.base().generator("h").unwrap()).unwrap();
        let shifted: Vec<i64> = w.iter().map(|v| v + s).collect();
        let a = make_weighted_degeneration(&x, &w).unwrap();
        let b = make_weighted_degeneration(&x, &shifted).unwrap();
        let ea = df_fibration_expansion(&a).unwrap();
        let eb = df_fibration_expansion(&b).unwrap();
        prop_assert!(ea.function.same_function(&eb.function));
        prop_assert_eq!((&ea.w0, &ea.w1), (&eb.w0, &eb.w1));
        prop_assert_eq!(min_norm_fibration(&a).unwrap(), min_norm_fibration(&b).unwrap());
        let g = GridSpec::default();
        let la = linf_norm(&a, &fit_h_and_w(&a, &g).unwrap()).unwrap();
        let lb = linf_norm(&b, &fit_h_and_w(&b, &g).unwrap()).unwrap();
        prop_assert_eq!(la.c0, lb.c0);
    }

    #[test]
    fn fibre_df_by_two_routes(deg in bundle_over_p1(3), w in prop::collection::vec(-1i64..=2, 3)) {
        let rows: Vec<Vec<i64>> = deg.iter().map(|&d| vec![d]).collect();
        let e = SplitBundle::over_product(&[1], &rows).unwrap();
        let x = make_projectivised_fibration(&e, &e.base().generator("h").unwrap()).unwrap();
        let tc = make_fibre_test_configuration(&make_weighted_degeneration(&x, &w).unwrap()).unwrap();
        let (h, wp) = fit_tc(&tc, 24).unwrap();
        prop_assert_eq!(df_weights(&h, &wp).unwrap() * df_normalisation(tc.q()), df_intersection(&tc).unwrap());
    }

    #[test]
    fn spec_round_trip(deg in prop::collection::vec(prop::collection::vec(-3i64..=3, 2), 1..4), pol in prop::collection::vec(1i64..=3, 2), oc in prop::bool::ANY) {
        let doc = serde_json::json!({
            "base": {"factors": [1, 1], "polarization": pol},
            "bundle": {"summands": deg},
            "oracle_check": oc,
        });
        let s: ProblemSpec = parse(&doc.to_string()).unwrap();
        prop_assert_eq!(parse(&s.to_json()).unwrap(), s);
    }
}
