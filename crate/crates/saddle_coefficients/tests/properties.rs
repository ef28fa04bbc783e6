use proptest::prelude::*;
use saddle_coefficients::{closed_form, generate_family, CoefficientFamily as F, MAX_INDEX};
use series_engine::{cx, Cdd, Dd, TruncatedSeries};

/// Taylor coefficients of `(1 + w)^{ν/2} (1 − w)^{−ν/2}` from two binomial
/// series, independent of the arctanh/exp route used by the generator.
fn binomial_route(nu: f64, n: usize) -> Vec<Dd> {
    let half = Dd::from_f64(nu) * Dd::from_f64(0.5);
    let binom = |alpha: Dd, sign: f64| {
        let mut c = vec![Dd::ONE; n + 1];
        for k in 1..=n {
            let kk = Dd::from_i64(k as i64);
            c[k] = c[k - 1] * (alpha - kk + Dd::ONE) / kk * Dd::from_f64(sign);
        }
        c
    };
    let p = binom(half, 1.0);
    let q = binom(-half, -1.0);
    (0..=n)
        .map(|k| (0..=k).fold(Dd::ZERO, |acc, j| acc + p[j] * q[k - j]))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn c_nu_generating_function(nu in 0.0f64..12.0) {
        let t = generate_family(F::CNu, Some(nu), MAX_INDEX).unwrap();
        let mut fact = Dd::ONE;
        let scaled: Vec<Cdd> = t.values().iter().enumerate().map(|(k, &c)| {
            if k > 0 { fact = fact * Dd::from_i64(k as i64); }
            c / cx::real(fact)
        }).collect();
        let times = TruncatedSeries::new(Cdd::default(), scaled).unwrap()
            .mul(&TruncatedSeries::from_f64(&{
                let mut v = vec![0.0; MAX_INDEX + 1];
                v[0] = 1.0;
                v[2] = -1.0;
                v
            }).unwrap()).unwrap();
        let want = binomial_route(nu, MAX_INDEX);
        for (k, w) in want.iter().enumerate() {
            let err = cx::abs(times.coeff(k) - cx::real(*w)).to_f64();
            prop_assert!(err <= 1e-20 * w.abs().to_f64().max(1.0), "k={k}: err {err}");
        }
    }

    #[test]
    fn c_family_reflection_is_finite_and_real(a in 0.01f64..8.0) {
        let t = generate_family(F::C, Some(-a), MAX_INDEX).unwrap();
        for c in t.values() {
            prop_assert!(cx::is_finite(*c));
            prop_assert!(c.im.abs().to_f64() <= 1e-25 * c.re.abs().to_f64().max(1.0));
        }
    }

    #[test]
    fn oscillatory_family_matches_printed(a in 1.05f64..6.0) {
        let t = generate_family(F::A, Some(a), 8).unwrap();
        for k in t.subscripts() {
            let g = t.get(k).unwrap();
            let c = closed_form(F::A, k, Some(a)).unwrap();
            prop_assert!(cx::abs(g - c).to_f64() <= 1e-10 * cx::abs(c).to_f64().max(1.0));
            prop_assert!(g.im.abs().to_f64() <= 1e-20 * cx::abs(g).to_f64().max(1.0));
        }
    }

    #[test]
    fn monotone_families_match_printed(a in 0.05f64..0.95) {
        for fam in [F::AhatEven, F::AhatOdd, F::C] {
            let t = generate_family(fam, Some(a), fam.printed_max()).unwrap();
            for k in t.subscripts() {
                let g = t.get(k).unwrap();
                let c = closed_form(fam, k, Some(a)).unwrap();
                prop_assert!(
                    cx::abs(g - c).to_f64() <= 1e-10 * cx::abs(c).to_f64().max(1.0),
                    "{fam}_{k}({a})"
                );
            }
        }
    }

    #[test]
    fn reflected_hat_family_matches_printed(a in 0.05f64..6.0) {
        let t = generate_family(F::AhatEven, Some(-a), 8).unwrap();
        for k in t.subscripts() {
            let g = t.get(k).unwrap();
            let c = closed_form(F::AhatEven, k, Some(-a)).unwrap();
            prop_assert!(cx::abs(g - c).to_f64() <= 1e-10 * cx::abs(c).to_f64().max(1.0));
        }
    }
}
