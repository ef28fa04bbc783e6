use asymptotic_eval::*;
use proptest::prelude::*;

fn structure_holds(r: &ExpansionResult) {
    assert!(r.trunc_estimate >= 0.0);
    assert_eq!(r.k_used + 1, r.terms.len());
    let sum = r.terms.iter().sum::<f64>() + r.algebraic_terms.iter().sum::<f64>();
    assert_eq!(r.value, sum);
}

fn any_policy() -> impl Strategy<Value = TruncationPolicy> {
    prop_oneof![
        Just(TruncationPolicy::All),
        Just(TruncationPolicy::Optimal),
        (0usize..5).prop_map(TruncationPolicy::Fixed),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn airy_variable_matches_saddle_phases(a in prop_oneof![0.02f64..0.998, 1.002f64..6.0]) {
        let p = phases(a, 1.0).unwrap();
        let lhs = 2.0 / 3.0 * p.zeta.abs().powf(1.5);
        let rhs = if a < 1.0 { p.psi.unwrap() } else { p.c_asym.unwrap() };
        prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs, "{lhs} {rhs}");
        prop_assert_eq!(p.zeta > 0.0, a < 1.0);
        prop_assert!(p.omega > 0.0);
    }

    #[test]
    fn zeta_ratio_is_smooth_through_the_series_band(d in 1e-4f64..2e-3, s in prop_oneof![Just(-1.0), Just(1.0)]) {
        let a = 1.0 + s * d;
        let r = |a: f64| phases(a, 1.0).unwrap().zeta / (1.0 - a);
        let h = 1e-7;
        let mid = r(a);
        let slope = (r(a + h) - r(a - h)) / (2.0 * h);
        // ζ/(1−a) ≈ 1 + 2ε/15 near a = 1
        prop_assert!((mid - 1.0 - 2.0 * (1.0 - a) / 15.0).abs() < 1e-5);
        prop_assert!((slope + 2.0 / 15.0).abs() < 1e-3, "slope {slope}");
    }

    #[test]
    fn result_structure(x in 15.0f64..200.0, a in prop_oneof![0.1f64..0.9, 1.1f64..4.0], pol in any_policy()) {
        let p = EvalPoint::from_ratio(x, a).unwrap();
        let pos = if a > 1.0 {
            [eval_k_pos_osc(p, pol).unwrap(), eval_h_pos_osc(p, pol).unwrap()]
        } else {
            [eval_k_pos_mono(p, pol).unwrap(), eval_h_pos_mono(p, pol).unwrap()]
        };
        for r in &pos {
            structure_holds(r);
        }
        let n = EvalPoint::from_ratio(-x, a).unwrap();
        structure_holds(&eval_neg(n, Which::Bateman, pol).unwrap());
        structure_holds(&eval_neg(n, Which::Havelock, pol).unwrap());
        structure_holds(&eval_k_coalesce(x, pol).unwrap());
        structure_holds(&eval_h_coalesce(x, pol).unwrap());
    }

    #[test]
    fn fixed_truncation_is_a_prefix(x in 15.0f64..100.0, a in 1.2f64..3.0, k in 0usize..5) {
        let p = EvalPoint::from_ratio(-x, a).unwrap();
        let short = eval_neg(p, Which::Havelock, TruncationPolicy::Fixed(k)).unwrap();
        let long = eval_neg(p, Which::Havelock, TruncationPolicy::Fixed(k + 1)).unwrap();
        prop_assert_eq!(&short.terms[..], &long.terms[..=k]);
        prop_assert_eq!(&short.algebraic_terms[..], &long.algebraic_terms[..=k]);
        prop_assert!(short.trunc_estimate >= long.algebraic_terms[k + 1].abs());
    }

    #[test]
    fn even_order_negative_bateman_is_zero(n in 1u32..20, x in 1.0f64..80.0, pol in any_policy()) {
        let p = EvalPoint::new(-x, 2.0 * n as f64).unwrap();
        prop_assert_eq!(eval_neg(p, Which::Bateman, pol).unwrap().value, 0.0);
        let r = eval_fixed_order(p, Which::Bateman, ArgSign::Neg, TruncationPolicy::All).unwrap();
        prop_assert_eq!(r.value, 0.0);
    }

    #[test]
    fn negative_argument_havelock_odd_order_has_no_exponential_part(n in 0u32..10, x in 5.0f64..60.0) {
        // cos(πν/2) = 0 at odd ν leaves only the algebraic series
        let p = EvalPoint::new(-x, 2.0 * n as f64 + 1.0).unwrap();
        let r = eval_neg(p, Which::Havelock, TruncationPolicy::All).unwrap();
        prop_assert!(r.terms.iter().all(|t| *t == 0.0));
    }

    #[test]
    fn auto_eval_agrees_with_classify(x in prop_oneof![-100.0f64..-1.0, 1.0f64..100.0], a in 0.01f64..3.0, h in any::<bool>()) {
        let nu = a * x.abs();
        let which = if h { Which::Havelock } else { Which::Bateman };
        let cfg = AutoConfig::default();
        let r = auto_eval(x, nu, which, &cfg).unwrap();
        let p = EvalPoint::new(x, nu).unwrap();
        prop_assert_eq!(r.regime, classify(&p, cfg.transition_width));
    }

    #[test]
    fn uniform_form_is_continuous_through_a_equal_one(x in 20.0f64..500.0, d in 1e-7f64..1e-4) {
        let u = |a: f64| eval_airy_uniform(EvalPoint::from_ratio(x, a).unwrap()).unwrap().value;
        let mid = u(1.0);
        prop_assert!((u(1.0 - d) - mid).abs() < 5.0 * d * x.powf(2.0 / 3.0) * mid);
        prop_assert!((u(1.0 + d) - mid).abs() < 5.0 * d * x.powf(2.0 / 3.0) * mid);
    }
}
