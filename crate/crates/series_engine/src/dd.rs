//! Double-double real arithmetic.
//!
//! A value is the unevaluated sum `hi + lo` of two `f64` with `|lo| <= ulp(hi)/2`,
//! giving roughly 32 significant decimal digits. Only the algebraic operations
//! needed for coefficient generation are provided: the four field operations,
//! square and cube roots, integer powers and decimal conversion.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Rem, Sub, SubAssign};
use std::str::FromStr;

use num_complex::{Complex, Complex64};
use num_traits::{Num, One, Zero};

#[derive(Clone, Copy, Default, PartialEq)]
pub struct Dd {
    hi: f64,
    lo: f64,
}

/// Complex double-double scalar.
pub type Cdd = Complex<Dd>;

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };
    pub const PI: Dd = Dd {
        hi: std::f64::consts::PI,
        lo: 1.224_646_799_147_353_2e-16,
    };

    /// Builds a normalized value from two parts of arbitrary relative size.
    pub fn new(hi: f64, lo: f64) -> Dd {
        let (s, e) = two_sum(hi, lo);
        Dd { hi: s, lo: e }
    }

    pub const fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact for every `i64`.
    pub fn from_i64(i: i64) -> Dd {
        let hi = i as f64;
        // i - hi is exactly representable once hi is the nearest double
        let rem = (i as i128 - hi as i128) as f64;
        Dd::new(hi, rem)
    }

    pub fn ratio(p: i64, q: i64) -> Dd {
        Dd::from_i64(p) / Dd::from_i64(q)
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn lo(self) -> f64 {
        self.lo
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }

    pub fn is_sign_negative(self) -> bool {
        self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0)
    }

    pub fn abs(self) -> Dd {
        if self.is_sign_negative() {
            -self
        } else {
            self
        }
    }

    pub fn recip(self) -> Dd {
        Dd::ONE / self
    }

    pub fn sqr(self) -> Dd {
        self * self
    }

    pub fn mul_f64(self, b: f64) -> Dd {
        let (p, e) = two_prod(self.hi, b);
        let (p, e) = quick_two_sum(p, e + self.lo * b);
        Dd { hi: p, lo: e }
    }

    pub fn powi(self, n: i32) -> Dd {
        if n == 0 {
            return Dd::ONE;
        }
        let mut base = self;
        let mut e = n.unsigned_abs();
        let mut acc = Dd::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base * base;
            e >>= 1;
        }
        if n < 0 {
            acc.recip()
        } else {
            acc
        }
    }

    /// Newton refinement of the `f64` root; two steps reach full precision.
    pub fn sqrt(self) -> Dd {
        if self.hi == 0.0 {
            return Dd::ZERO;
        }
        if self.hi < 0.0 {
            return Dd::from_f64(f64::NAN);
        }
        let mut r = Dd::from_f64(self.hi.sqrt());
        for _ in 0..2 {
            r = r + (self - r * r) / r.mul_f64(2.0);
        }
        r
    }

    /// Real cube root, defined for negative arguments.
    pub fn cbrt(self) -> Dd {
        if self.hi == 0.0 {
            return Dd::ZERO;
        }
        let mut r = Dd::from_f64(self.hi.cbrt());
        for _ in 0..2 {
            let r2 = r * r;
            r = r - (r2 * r - self) / r2.mul_f64(3.0);
        }
        r
    }

    pub fn floor(self) -> Dd {
        let fh = self.hi.floor();
        if fh == self.hi {
            Dd::new(fh, self.lo.floor())
        } else {
            Dd::from_f64(fh)
        }
    }

    pub fn trunc(self) -> Dd {
        if self.is_sign_negative() {
            -(-self).floor()
        } else {
            self.floor()
        }
    }

    /// Scientific notation with `digits` significant digits (truncated, not rounded).
    pub fn to_sci_string(self, digits: usize) -> String {
        if self.hi == 0.0 {
            return format!("{:.*}e0", digits.saturating_sub(1), 0.0);
        }
        if !self.is_finite() {
            return format!("{}", self.hi);
        }
        let neg = self.is_sign_negative();
        let mut y = self.abs();
        let mut exp = y.hi.log10().floor() as i32;
        y = y / Dd::from_f64(10.0).powi(exp);
        if y.hi >= 10.0 {
            y = y / Dd::from_f64(10.0);
            exp += 1;
        } else if y.hi < 1.0 {
            y = y * Dd::from_f64(10.0);
            exp -= 1;
        }
        let mut out = String::new();
        if neg {
            out.push('-');
        }
        for i in 0..digits {
            let d = y.floor().to_f64().clamp(0.0, 9.0) as u8;
            out.push((b'0' + d) as char);
            if i == 0 && digits > 1 {
                out.push('.');
            }
            y = (y - Dd::from_f64(d as f64)).mul_f64(10.0);
        }
        out.push_str(&format!("e{exp}"));
        out
    }
}

impl fmt::Debug for Dd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dd({})", self.to_sci_string(32))
    }
}

impl fmt::Display for Dd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().map(|p| p + 1).unwrap_or(32);
        f.write_str(&self.to_sci_string(digits))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseDdError;

impl fmt::Display for ParseDdError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("invalid double-double literal")
    }
}

impl std::error::Error for ParseDdError {}

/// Decimal literals such as `-1.25e-3`; digits beyond about 32 are absorbed without gain.
impl FromStr for Dd {
    type Err = ParseDdError;

    fn from_str(s: &str) -> Result<Dd, ParseDdError> {
        let s = s.trim();
        let (neg, body) = match s.as_bytes().first() {
            Some(b'-') => (true, &s[1..]),
            Some(b'+') => (false, &s[1..]),
            _ => (false, s),
        };
        let (mant, exp) = match body.find(['e', 'E']) {
            Some(p) => (
                &body[..p],
                body[p + 1..].parse::<i32>().map_err(|_| ParseDdError)?,
            ),
            None => (body, 0),
        };
        let mut acc = Dd::ZERO;
        let mut scale = 0i32;
        let mut seen_dot = false;
        let mut any = false;
        for c in mant.chars() {
            match c {
                '0'..='9' => {
                    any = true;
                    acc = acc.mul_f64(10.0) + Dd::from_f64(f64::from(c as u8 - b'0'));
                    if seen_dot {
                        scale -= 1;
                    }
                }
                '.' if !seen_dot => seen_dot = true,
                _ => return Err(ParseDdError),
            }
        }
        if !any {
            return Err(ParseDdError);
        }
        let e = exp + scale;
        let ten = Dd::from_f64(10.0);
        let v = if e >= 0 { acc * ten.powi(e) } else { acc / ten.powi(-e) };
        Ok(if neg { -v } else { v })
    }
}

impl PartialOrd for Dd {
    fn partial_cmp(&self, other: &Dd) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            o => o,
        }
    }
}

impl From<f64> for Dd {
    fn from(x: f64) -> Dd {
        Dd::from_f64(x)
    }
}

impl From<i64> for Dd {
    fn from(i: i64) -> Dd {
        Dd::from_i64(i)
    }
}

impl From<i32> for Dd {
    fn from(i: i32) -> Dd {
        Dd::from_f64(f64::from(i))
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, b: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (s, e) = quick_two_sum(s, e + f);
        Dd { hi: s, lo: e }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, b: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, b.hi);
        let e = e + (self.hi * b.lo + self.lo * b.hi);
        let (p, e) = quick_two_sum(p, e);
        Dd { hi: p, lo: e }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let r = self - b.mul_f64(q1);
        let q2 = r.hi / b.hi;
        let r = r - b.mul_f64(q2);
        let q3 = r.hi / b.hi;
        let (q1, q2) = quick_two_sum(q1, q2);
        Dd { hi: q1, lo: q2 } + Dd::from_f64(q3)
    }
}

impl Rem for Dd {
    type Output = Dd;
    fn rem(self, b: Dd) -> Dd {
        self - b * (self / b).trunc()
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl AddAssign for Dd {
    fn add_assign(&mut self, b: Dd) {
        *self = *self + b;
    }
}

impl SubAssign for Dd {
    fn sub_assign(&mut self, b: Dd) {
        *self = *self - b;
    }
}

impl MulAssign for Dd {
    fn mul_assign(&mut self, b: Dd) {
        *self = *self * b;
    }
}

impl DivAssign for Dd {
    fn div_assign(&mut self, b: Dd) {
        *self = *self / b;
    }
}

impl Zero for Dd {
    fn zero() -> Dd {
        Dd::ZERO
    }
    fn is_zero(&self) -> bool {
        self.hi == 0.0 && self.lo == 0.0
    }
}

impl One for Dd {
    fn one() -> Dd {
        Dd::ONE
    }
}

impl Num for Dd {
    type FromStrRadixErr = ParseDdError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Dd, ParseDdError> {
        if radix != 10 {
            return Err(ParseDdError);
        }
        s.parse()
    }
}

/// Complex helpers for [`Cdd`].
pub mod cx {
    use super::*;

    pub fn new(re: Dd, im: Dd) -> Cdd {
        Complex::new(re, im)
    }

    pub fn real(re: Dd) -> Cdd {
        Complex::new(re, Dd::ZERO)
    }

    pub fn from_f64(re: f64, im: f64) -> Cdd {
        Complex::new(Dd::from_f64(re), Dd::from_f64(im))
    }

    pub fn i() -> Cdd {
        Complex::new(Dd::ZERO, Dd::ONE)
    }

    pub fn from_c64(z: Complex64) -> Cdd {
        from_f64(z.re, z.im)
    }

    pub fn to_c64(z: Cdd) -> Complex64 {
        Complex64::new(z.re.to_f64(), z.im.to_f64())
    }

    pub fn abs(z: Cdd) -> Dd {
        z.norm_sqr().sqrt()
    }

    pub fn is_finite(z: Cdd) -> bool {
        z.re.is_finite() && z.im.is_finite()
    }

    pub fn powi(z: Cdd, n: u32) -> Cdd {
        let mut acc = Cdd::one();
        for _ in 0..n {
            acc = acc * z;
        }
        acc
    }

    /// Principal square root: `f64` seed, then Newton steps in double-double.
    pub fn sqrt(z: Cdd) -> Cdd {
        if z.is_zero() {
            return z;
        }
        let mut r = from_c64(to_c64(z).sqrt());
        let two = Dd::from_f64(2.0);
        for _ in 0..2 {
            r = r + (z - r * r) / r.scale(two);
        }
        r
    }

    /// Principal cube root (argument in (−π/3, π/3]).
    pub fn cbrt(z: Cdd) -> Cdd {
        if z.is_zero() {
            return z;
        }
        let mut r = from_c64(to_c64(z).cbrt());
        let three = Dd::from_f64(3.0);
        for _ in 0..2 {
            let r2 = r * r;
            r = r - (r2 * r - z) / r2.scale(three);
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_keeps_low_word() {
        let third = Dd::ONE / Dd::from_f64(3.0);
        let back = third * Dd::from_f64(3.0) - Dd::ONE;
        assert!(back.abs().to_f64() < 1e-31);
        assert!(third.lo() != 0.0);
    }

    #[test]
    fn roots_reach_full_precision() {
        let two = Dd::from_f64(2.0);
        let r = two.sqrt();
        assert!((r * r - two).abs().to_f64() < 1e-31);
        let three = Dd::from_f64(3.0);
        let c = three.cbrt();
        assert!((c * c * c - three).abs().to_f64() < 1e-30);
        assert!(((-three).cbrt() + c).abs().to_f64() < 1e-30);
    }

    #[test]
    fn pi_digits() {
        assert_eq!(
            Dd::PI.to_sci_string(31),
            "3.141592653589793238462643383279e0"
        );
    }

    #[test]
    fn parse_round_trip() {
        let v: Dd = "0.1234567890123456789012345678901".parse().unwrap();
        assert_eq!(v.to_sci_string(31), "1.234567890123456789012345678901e-1");
        let w: Dd = "-2.5e3".parse().unwrap();
        assert_eq!(w.to_f64(), -2500.0);
    }

    #[test]
    fn large_integers_are_exact() {
        let n = 9_007_199_254_740_993i64;
        let d = Dd::from_i64(n);
        assert_eq!(d.hi() as i128 + d.lo() as i128, n as i128);
    }

    #[test]
    fn complex_roots() {
        let z = cx::from_f64(-1.0, 0.0);
        let s = cx::sqrt(z);
        assert!((s - cx::i()).norm_sqr().to_f64() < 1e-60);
        let w = cx::new(Dd::ZERO, Dd::from_f64(-1.0) / Dd::from_f64(3.0));
        let c = cx::cbrt(w);
        let back = c * c * c - w;
        assert!(cx::abs(back).to_f64() < 1e-31);
        // principal branch of (−i/3)^{1/3} lies at argument −π/6
        assert!(c.re.to_f64() > 0.0 && c.im.to_f64() < 0.0);
    }
}
