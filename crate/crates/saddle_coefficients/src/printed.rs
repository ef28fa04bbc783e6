//! The printed closed forms, evaluated in double-double.

use series_engine::{cx, Cdd, Dd};

use crate::{mu, CoeffError, CoefficientFamily};

fn poly(c: &[i64], x: Dd) -> Dd {
    c.iter()
        .rev()
        .fold(Dd::ZERO, |acc, &k| acc * x + Dd::from_i64(k))
}

/// `s^{m/2}` for `s > 0`.
fn half_pow(s: Dd, m: i32) -> Dd {
    let whole = s.powi(m / 2);
    if m % 2 == 0 {
        whole
    } else {
        whole * s.sqrt()
    }
}

/// `num(a) / (den · a^p · s^{m/2})`.
fn rational(num: &[i64], a: Dd, den: i64, p: i32, s: Dd, m: i32) -> Dd {
    poly(num, a) / (Dd::from_i64(den) * a.powi(p) * half_pow(s, m))
}

const A2: [i64; 3] = [8, -12, 9];
const A4: [i64; 5] = [64, -192, 288, 360, -135];
const A6: [i64; 7] = [-71168, 320256, -554688, 518400, 340200, -170100, 42525];
const A8: [i64; 9] = [
    -2338816, 14032896, -36790272, 55710720, -32876928, 231880320, -68584320, 30618000, -5740875,
];

/// Printed value of subscript `k` at `parameter` (ignored for `B`).
///
/// `c_7` is evaluated as `ν(8448 + 2464ν² + 112ν⁴ + ν⁶)`: the printed middle
/// term lacks the square that the parity of the family requires.
pub fn closed_form(
    family: CoefficientFamily,
    k: usize,
    parameter: Option<f64>,
) -> Result<Cdd, CoeffError> {
    if !family.is_printed(k) {
        return Err(CoeffError::NotPrinted(family, k));
    }
    family.check_parameter(parameter)?;
    let a = parameter.map(Dd::from_f64).unwrap_or(Dd::ONE);
    let one = Dd::ONE;
    let v = match family {
        CoefficientFamily::A => {
            let s = a - one;
            match k {
                0 => one,
                2 => rational(&A2, a, 24, 1, s, 3),
                4 => rational(&A4, a, 3456, 2, s, 6),
                6 => rational(&A6, a, 6220800, 3, s, 9),
                _ => rational(&A8, a, 4180377600, 4, s, 12),
            }
        }
        CoefficientFamily::AhatEven => {
            let s = one - a;
            match k {
                0 => one,
                2 => -rational(&A2, a, 24, 1, s, 3),
                4 => rational(&A4, a, 3456, 2, s, 6),
                6 => -rational(&A6, a, 6220800, 3, s, 9),
                _ => rational(&A8, a, 4180377600, 4, s, 12),
            }
        }
        CoefficientFamily::AhatOdd => {
            let s = one - a;
            match k {
                1 => rational(&[-2, 3], a, 3, 1, s, 2),
                3 => rational(&[-16, 36], a, 135, 2, s, 5),
                5 => rational(&[32, -120, 144, 189], a, 2835, 3, s, 8),
                7 => rational(&[128, -672, 1440, -1656, 2160], a, 25515, 4, s, 11),
                _ => rational(
                    &[-35968, 242784, -692064, 1077948, -1020600, 1403325, 400950],
                    a,
                    37889775,
                    5,
                    s,
                    14,
                ),
            }
        }
        CoefficientFamily::B => return Ok(b_printed(k)),
        CoefficientFamily::C => {
            let s = one - a;
            match k {
                0 => one,
                1 => one / s,
                2 => rational(&[3, 2], a, 3, 0, s, 4),
                3 => rational(&[45, 78, 17], a, 45, 0, s, 6),
                4 => rational(&[315, 972, 576, 62], a, 315, 0, s, 8),
                5 => rational(&[14175, 66060, 71982, 21576, 1382], a, 14175, 0, s, 10),
                _ => rational(
                    &[467775, 3001590, 5063616, 2842542, 514533, 21844],
                    a,
                    467775,
                    0,
                    s,
                    12,
                ),
            }
        }
        CoefficientFamily::CNu => {
            let n2 = a * a;
            let even = |c: &[i64]| poly(c, n2);
            match k {
                0 => one,
                1 => a,
                2 => even(&[2, 1]),
                3 => a * even(&[8, 1]),
                4 => even(&[24, 20, 1]),
                5 => a * even(&[184, 40, 1]),
                6 => even(&[720, 784, 70, 1]),
                7 => a * even(&[8448, 2464, 112, 1]),
                _ => even(&[40320, 52352, 6384, 168, 1]),
            }
        }
    };
    Ok(cx::real(v))
}

fn b_printed(k: usize) -> Cdd {
    let m = mu();
    let r = |p: i64, q: i64| cx::real(Dd::ratio(p, q));
    let i = cx::i();
    match k {
        0 => m,
        1 => i * r(-6, 5),
        2 => r(-27, 35) / m,
        3 => m * r(2, 25),
        4 => i * r(1296, 67375),
        5 => r(9774, 284375) / m,
        6 => m * r(-49711, 11790625),
        _ => i * r(-3390336, 1861234375),
    }
}
