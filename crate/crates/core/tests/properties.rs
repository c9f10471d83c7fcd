use anomaly_core::genera::PowerSumBridge;
use anomaly_core::graded::{GradedClass, GradedRing, Monomial};
use anomaly_core::laws::monomials;
use anomaly_core::manifolds::{partitions, verify_product_formula, Evaluator, Functional, ManifoldClass};
use anomaly_core::rational::{format_rational, frac, int, parse_rational, Rational};
use anomaly_core::series::Series;
use num_traits::Zero;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| frac(n, d))
}

fn class(ring: GradedRing) -> impl Strategy<Value = GradedClass> {
    let basis = monomials(ring);
    prop::collection::vec(prop::option::of(rational()), basis.len()).prop_map(move |coeffs| {
        let terms: Vec<(Monomial, Rational)> = basis
            .iter()
            .zip(coeffs)
            .filter_map(|(m, c)| c.map(|c| (m.clone(), c)))
            .collect();
        GradedClass::from_terms(ring, terms)
    })
}

fn ring() -> GradedRing {
    GradedRing::for_dimension(12, true)
}

fn series(len: usize) -> impl Strategy<Value = Series<Rational>> {
    prop::collection::vec(rational(), len).prop_map(Series::new)
}

fn unit_series(len: usize) -> impl Strategy<Value = Series<Rational>> {
    series(len).prop_map(|s| {
        let mut c = s.coeffs().to_vec();
        c[0] = int(1);
        Series::new(c)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn class_ring_laws(a in class(ring()), b in class(ring()), c in class(ring())) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_empty());
        prop_assert_eq!(&a * &GradedClass::one(ring()), a.clone());
    }

    #[test]
    fn truncation_is_a_ring_map(a in class(ring()), b in class(ring()), degree in 0u32..6) {
        let small = ring().with_max_degree(degree);
        let t = |x: &GradedClass| x.embed(small).unwrap();
        prop_assert_eq!(t(&(&a * &b)), &t(&a) * &t(&b));
        prop_assert_eq!(t(&(&a + &b)), &t(&a) + &t(&b));
    }

    #[test]
    fn exp_log_round_trip(a in class(ring())) {
        let n = &a - &GradedClass::constant(ring(), a.constant_term());
        prop_assert_eq!(n.exp().unwrap().log().unwrap(), n.clone());
        let u = &GradedClass::one(ring()) + &n;
        prop_assert_eq!(u.log().unwrap().exp().unwrap(), u);
    }

    #[test]
    fn class_inverse(a in class(ring()), c in 1i64..9) {
        let u = &(&a - &GradedClass::constant(ring(), a.constant_term())) + &GradedClass::constant(ring(), int(c));
        prop_assert_eq!(&u * &u.try_inverse().unwrap(), GradedClass::one(ring()));
    }

    #[test]
    fn series_inverse_and_truncation(s in unit_series(9), t in series(9), k in 0usize..9) {
        prop_assert_eq!(s.mul(&s.inverse().unwrap()), Series::one(&int(0), 8));
        prop_assert_eq!(s.mul(&t).truncate(k), s.truncate(k).mul(&t.truncate(k)));
        prop_assert_eq!(s.log().unwrap().exp().unwrap(), s);
    }

    #[test]
    fn bridge_is_stable_in_root_count(f in unit_series(5), g in series(5)) {
        let ring = GradedRing::for_dimension(16, false);
        let reference = PowerSumBridge::new(4, ring);
        let mult = reference.symmetrize_multiplicative(&f).unwrap();
        let add = reference.symmetrize_additive(&g);
        for m in [5, 6, 8] {
            let wider = PowerSumBridge::new(m, ring);
            prop_assert_eq!(wider.symmetrize_multiplicative(&f).unwrap(), mult.clone());
            let shift = GradedClass::constant(ring, &g.coeffs()[0] * int(m as i64 - 4));
            prop_assert_eq!(wider.symmetrize_additive(&g), &add + &shift);
        }
    }

    #[test]
    fn rationals_round_trip_through_text(r in rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn monomials_round_trip_through_text(a in class(ring())) {
        for (m, _) in a.terms() {
            prop_assert_eq!(&m.to_string().parse::<Monomial>().unwrap(), m);
        }
    }
}

fn manifold(dim: u32) -> impl Strategy<Value = ManifoldClass> {
    let parts = partitions(dim / 4);
    prop::collection::vec(-300i64..=300, parts.len()).prop_map(move |values| {
        let numbers = parts.iter().cloned().zip(values.into_iter().map(int));
        ManifoldClass::new(format!("M{dim}"), dim, numbers, true).unwrap()
    })
}

fn values(ev: &Evaluator, m: &ManifoldClass) -> Vec<Rational> {
    Functional::ALL.iter().map(|&f| ev.value(m, f).unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn products_commute_and_associate(a in manifold(4), b in manifold(8), c in manifold(4)) {
        let ev = Evaluator::new(16).unwrap();
        prop_assert_eq!(values(&ev, &a.product(&b)), values(&ev, &b.product(&a)));
        let left = a.product(&b).product(&c);
        let right = a.product(&b.product(&c));
        prop_assert_eq!(left.pontryagin_numbers().collect::<Vec<_>>(), right.pontryagin_numbers().collect::<Vec<_>>());
    }

    #[test]
    fn signature_and_a_hat_are_multiplicative(a in manifold(4), b in manifold(8)) {
        let ev = Evaluator::new(12).unwrap();
        let p = a.product(&b);
        for f in [Functional::Signature, Functional::AHat] {
            prop_assert_eq!(ev.value(&p, f).unwrap(), ev.value(&a, f).unwrap() * ev.value(&b, f).unwrap());
        }
    }

    #[test]
    fn twisted_signatures_of_products(a in manifold(4), b in manifold(8)) {
        let ev = Evaluator::new(12).unwrap();
        for report in verify_product_formula(&ev, &a, &b) {
            prop_assert!(report.passed(), "{}", report.render_text());
        }
    }

    #[test]
    fn pairing_is_linear(m in manifold(8), a in class(GradedRing::for_dimension(8, false)), b in class(GradedRing::for_dimension(8, false))) {
        let lhs = m.pair(&(&a + &b)).unwrap();
        prop_assert_eq!(lhs, m.pair(&a).unwrap() + m.pair(&b).unwrap());
        prop_assert!(m.pair(&GradedClass::zero(a.ring())).unwrap().is_zero());
    }
}
