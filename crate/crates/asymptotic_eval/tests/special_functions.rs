use asymptotic_eval::special::{airy_ai, airy_bi, lower_gamma_int};

/// `(z, Ai(z), Bi(z))` from a 30-digit arbitrary-precision evaluation.
const AIRY: [(f64, f64, f64); 12] = [
    (1.0, 0.13529241631288142, 1.2074235949528713),
    (1.7, 0.054324792732919471, 2.3194075069389248),
    (-1.7, 0.38860703739632876, -0.29620265761049571),
    (5.0, 1.0834442813607442e-4, 657.79204417117118),
    (-5.0, 0.35076100902411432, -0.13836913490160058),
    (8.0, 4.6922076160992316e-8, 1199586.0041244599),
    (-8.0, -0.052705050356386203, -0.33125158075113786),
    (9.0, 2.4711684308724898e-9, 21472868.891435349),
    (-9.0, -0.022133721547341404, 0.32494732345524492),
    (20.0, 1.6916728686705403e-27, 2.1037650496511038e25),
    (-20.0, -0.17640612707798469, -0.20013930932265135),
    (0.0, 0.35502805388781724, 0.61492662744600074),
];

#[test]
fn airy_reference_values() {
    for (z, ai, bi) in AIRY {
        let (ga, gb) = (airy_ai(z), airy_bi(z));
        assert!((ga - ai).abs() <= 1e-12 * ai.abs(), "Ai({z}) = {ga:e}, want {ai:e}");
        assert!((gb - bi).abs() <= 1e-12 * bi.abs(), "Bi({z}) = {gb:e}, want {bi:e}");
    }
    let far = airy_ai(100.0);
    assert!((far - 2.6344821520881845e-291).abs() <= 1e-10 * 2.6344821520881845e-291);
    assert_eq!(airy_ai(111.0), 0.0);
}

#[test]
fn airy_first_zero_by_bisection() {
    let (mut lo, mut hi) = (-2.5, -2.2);
    assert!(airy_ai(lo) * airy_ai(hi) < 0.0);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if airy_ai(lo) * airy_ai(mid) <= 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    assert!((lo + 2.338107410459767).abs() < 1e-12, "{lo}");
}

#[test]
fn airy_wronskian_across_branches() {
    // Ai·Bi′ − Ai′·Bi = 1/π, derivatives by fourth-order differences
    let d = |f: fn(f64) -> f64, z: f64| {
        let h = 1e-3;
        (f(z - 2.0 * h) - 8.0 * f(z - h) + 8.0 * f(z + h) - f(z + 2.0 * h)) / (12.0 * h)
    };
    let mut z = -14.0;
    while z <= 10.0 {
        let w = airy_ai(z) * d(airy_bi, z) - d(airy_ai, z) * airy_bi(z);
        assert!((w * std::f64::consts::PI - 1.0).abs() < 1e-8, "z={z} w={w}");
        z += 0.37;
    }
}

/// Composite Simpson rule on `e^{−t} t^n` over `[0, z]`.
fn simpson(n: u32, z: f64) -> f64 {
    let m = 20_000;
    let h = z / m as f64;
    let f = |t: f64| (-t).exp() * t.powi(n as i32);
    let inner: f64 = (1..m)
        .map(|i| if i % 2 == 1 { 4.0 } else { 2.0 } * f(i as f64 * h))
        .sum();
    (f(0.0) + inner + f(z)) * h / 3.0
}

#[test]
fn lower_gamma_against_quadrature() {
    for n in [0, 1, 2, 4, 7, 12] {
        for z in [0.3, 1.0, 5.33, 8.0, 13.0, 26.6] {
            let q = simpson(n, z);
            let g = lower_gamma_int(n, z);
            assert!((g - q).abs() <= 1e-10 * q, "n={n} z={z}: {g:e} vs {q:e}");
        }
    }
}
