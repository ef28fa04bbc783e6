//! Scalar special functions used by the expansions.

use std::f64::consts::PI;

use series_engine::Dd;

/// `γ(n + 1, z) = ∫₀ᶻ e^{−t} t^n dt`, i.e. the `γ(2k+1, ·)` weights take `n = 2k`.
///
/// Below `z = n + 1` the power series `z^{n+1} e^{−z} Σ z^j / ((n+1)…(n+1+j))`
/// is used, which has only positive terms; above it the complement
/// `n!(1 − e^{−z} Σ_{m≤n} z^m/m!)` is safe because the subtracted part is
/// below one half.
pub fn lower_gamma_int(n: u32, z: f64) -> f64 {
    assert!(z >= 0.0, "lower_gamma_int needs z >= 0");
    if z == 0.0 {
        return 0.0;
    }
    let n1 = n as f64 + 1.0;
    if z < n1 {
        let mut term = 1.0 / n1;
        let mut sum = term;
        let mut j = 1.0;
        while term > sum * 1e-17 {
            term *= z / (n1 + j);
            sum += term;
            j += 1.0;
        }
        (n1 * z.ln() - z).exp() * sum
    } else {
        let mut term = 1.0;
        let mut sum = 1.0;
        for m in 1..=n {
            term *= z / m as f64;
            sum += term;
        }
        factorial(n) * (1.0 - (-z).exp() * sum)
    }
}

pub fn factorial(n: u32) -> f64 {
    (1..=n).fold(1.0, |acc, m| acc * m as f64)
}

/// Rising factorial `(a)_k`.
pub fn pochhammer(a: f64, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, j| acc * (a + j as f64))
}

/// `Γ(x)`, exact at the integers where `(x−1)!` is representable.
pub fn gamma(x: f64) -> f64 {
    if x.fract() == 0.0 && (1.0..=23.0).contains(&x) {
        return factorial(x as u32 - 1);
    }
    statrs::function::gamma::gamma(x)
}

pub fn ln_gamma(x: f64) -> f64 {
    statrs::function::gamma::ln_gamma(x)
}

/// `sin(πν/2)` with exact zeros at even integers and exact `±1` at odd ones.
pub fn sin_half_pi(nu: f64) -> f64 {
    let r = nu.rem_euclid(4.0);
    if r.fract() == 0.0 {
        return [0.0, 1.0, 0.0, -1.0][r as usize];
    }
    (PI * (r - 1.0) / 2.0).cos()
}

/// `cos(πν/2)`, exact at integers.
pub fn cos_half_pi(nu: f64) -> f64 {
    sin_half_pi(nu + 1.0)
}

/// `Ai(0)`.
const AI0: &str = "0.355028053887817239260063186004183176";
/// `−Ai'(0)`.
const AIP0: &str = "0.258819403792806798405183560189203963";

/// Below this modulus the Maclaurin pair is summed in double-double; the
/// asymptotic series beyond it are accurate to about `e^{−2·(2/3)|z|^{3/2}}`.
const MACLAURIN_LIMIT: f64 = 8.0;

/// `Ai(z)` is below the smallest normal `f64` here.
pub const AI_UNDERFLOW: f64 = 110.0;

fn maclaurin_pair(z: f64) -> (Dd, Dd) {
    let zd = Dd::from_f64(z);
    let z3 = zd * zd * zd;
    let mut f = Dd::ONE;
    let mut g = zd;
    let mut tf = Dd::ONE;
    let mut tg = zd;
    for k in 1..200 {
        let k3 = 3 * k as i64;
        tf = tf * z3 / Dd::from_i64((k3 - 1) * k3);
        tg = tg * z3 / Dd::from_i64(k3 * (k3 + 1));
        f += tf;
        g += tg;
        if tf.abs().to_f64() < 1e-34 * f.abs().to_f64().max(1e-300)
            && tg.abs().to_f64() < 1e-34 * g.abs().to_f64().max(1e-300)
        {
            break;
        }
    }
    (f, g)
}

/// `u_k` of the Airy asymptotic series, `k = 0..n`.
fn airy_u(n: usize) -> Vec<f64> {
    let mut u = vec![1.0; n];
    for k in 1..n {
        let kf = k as f64;
        u[k] = u[k - 1] * (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0)
            / ((2.0 * kf - 1.0) * 216.0 * kf);
    }
    u
}

/// Sums `Σ s_k u_k / ξ^k` until the terms stop decreasing.
fn asymptotic_sum(xi: f64, sign: impl Fn(usize) -> f64, parity: Option<usize>) -> f64 {
    let u = airy_u(60);
    let mut sum = 0.0;
    let mut last = f64::INFINITY;
    let mut pw = 1.0;
    for (k, uk) in u.iter().enumerate() {
        if k > 0 {
            pw /= xi;
        }
        if let Some(p) = parity {
            if k % 2 != p {
                continue;
            }
        }
        let t = uk * pw;
        if t > last {
            break;
        }
        last = t;
        sum += sign(k) * t;
        if t < 1e-17 * sum.abs() {
            break;
        }
    }
    sum
}

/// Airy function of the first kind.
pub fn airy_ai(z: f64) -> f64 {
    if z > AI_UNDERFLOW {
        return 0.0;
    }
    if z.abs() <= MACLAURIN_LIMIT {
        let (f, g) = maclaurin_pair(z);
        let c1: Dd = AI0.parse().unwrap();
        let c2: Dd = AIP0.parse().unwrap();
        return (c1 * f - c2 * g).to_f64();
    }
    let r = z.abs();
    let xi = 2.0 / 3.0 * r.powf(1.5);
    let scale = 1.0 / (PI.sqrt() * r.powf(0.25));
    if z > 0.0 {
        let s = asymptotic_sum(xi, |k| if k % 2 == 0 { 1.0 } else { -1.0 }, None);
        0.5 * scale * (-xi).exp() * s
    } else {
        let (p, q) = oscillatory_pq(xi);
        let th = xi + PI / 4.0;
        scale * (th.sin() * p - th.cos() * q)
    }
}

/// Airy function of the second kind.
pub fn airy_bi(z: f64) -> f64 {
    if z.abs() <= MACLAURIN_LIMIT {
        let (f, g) = maclaurin_pair(z);
        let c1: Dd = AI0.parse().unwrap();
        let c2: Dd = AIP0.parse().unwrap();
        return (Dd::from_f64(3.0).sqrt() * (c1 * f + c2 * g)).to_f64();
    }
    let r = z.abs();
    let xi = 2.0 / 3.0 * r.powf(1.5);
    let scale = 1.0 / (PI.sqrt() * r.powf(0.25));
    if z > 0.0 {
        scale * xi.exp() * asymptotic_sum(xi, |_| 1.0, None)
    } else {
        let (p, q) = oscillatory_pq(xi);
        let th = xi + PI / 4.0;
        scale * (th.cos() * p + th.sin() * q)
    }
}

/// `P = Σ(−1)^k u_{2k}/ξ^{2k}`, `Q = Σ(−1)^k u_{2k+1}/ξ^{2k+1}`.
fn oscillatory_pq(xi: f64) -> (f64, f64) {
    let alt = |k: usize| if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
    (
        asymptotic_sum(xi, alt, Some(0)),
        asymptotic_sum(xi, alt, Some(1)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sin_half_pi_is_exact_at_integers() {
        for n in 0..40 {
            let s = sin_half_pi(n as f64);
            assert_eq!(s, [0.0, 1.0, 0.0, -1.0][n % 4]);
        }
        assert!((sin_half_pi(2.5) - (1.25 * PI).sin()).abs() < 1e-15);
        assert!((cos_half_pi(0.5) - (0.25 * PI).cos()).abs() < 1e-15);
    }

    #[test]
    fn pochhammer_small_cases() {
        assert_eq!(pochhammer(0.5, 0), 1.0);
        assert_eq!(pochhammer(0.5, 3), 0.5 * 1.5 * 2.5);
        assert_eq!(pochhammer(-1.0, 2), 0.0);
    }

    #[test]
    fn lower_gamma_branches_meet() {
        // both branches at the switch point
        let n = 6;
        let z = 7.0 - 1e-12;
        let a = lower_gamma_int(n, z);
        let b = lower_gamma_int(n, 7.0);
        assert!((a - b).abs() < 1e-9 * b);
    }
}
