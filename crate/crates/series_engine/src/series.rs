//! Truncated power series `Σ c_k (u − center)^k`, `k = 0..=N`, over [`Cdd`].

use num_traits::{One, Zero};

use crate::dd::{cx, Cdd, Dd};
use crate::SeriesError;

#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries {
    center: Cdd,
    coeffs: Vec<Cdd>,
}

/// Branch of a square root, fixed by the sign of the constant term.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SqrtBranch {
    Principal,
    Negated,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
    Scale,
    Compose,
    Derivative,
}

/// Right-hand operand of [`series_arith`].
#[derive(Clone, Copy, Debug)]
pub enum Operand<'a> {
    Series(&'a TruncatedSeries),
    Scalar(Cdd),
    None,
}

/// Single entry point over the elementary operations.
pub fn series_arith(
    lhs: &TruncatedSeries,
    rhs: Operand<'_>,
    kind: ArithKind,
) -> Result<TruncatedSeries, SeriesError> {
    match (kind, rhs) {
        (ArithKind::Add, Operand::Series(r)) => lhs.add(r),
        (ArithKind::Add, Operand::Scalar(c)) => Ok(lhs.add_scalar(c)),
        (ArithKind::Sub, Operand::Series(r)) => lhs.sub(r),
        (ArithKind::Sub, Operand::Scalar(c)) => Ok(lhs.add_scalar(-c)),
        (ArithKind::Mul, Operand::Series(r)) => lhs.mul(r),
        (ArithKind::Mul | ArithKind::Scale, Operand::Scalar(c)) => Ok(lhs.scale(c)),
        (ArithKind::Compose, Operand::Series(r)) => lhs.compose(r),
        (ArithKind::Derivative, Operand::None) => Ok(lhs.derivative()),
        _ => Err(SeriesError::Operand(kind)),
    }
}

impl TruncatedSeries {
    pub fn new(center: Cdd, coeffs: Vec<Cdd>) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::Empty);
        }
        if let Some(k) = coeffs.iter().position(|c| !cx::is_finite(*c)) {
            return Err(SeriesError::NonFinite(k));
        }
        Ok(TruncatedSeries { center, coeffs })
    }

    /// Real `f64` coefficients about the origin; convenient for tests and examples.
    pub fn from_f64(coeffs: &[f64]) -> Result<Self, SeriesError> {
        Self::new(
            Cdd::zero(),
            coeffs.iter().map(|&c| cx::from_f64(c, 0.0)).collect(),
        )
    }

    pub fn constant(value: Cdd, center: Cdd, order: usize) -> Self {
        let mut coeffs = vec![Cdd::zero(); order + 1];
        coeffs[0] = value;
        TruncatedSeries { center, coeffs }
    }

    /// The series of `u − center`.
    pub fn variable(center: Cdd, order: usize) -> Self {
        let mut coeffs = vec![Cdd::zero(); order + 1];
        if order >= 1 {
            coeffs[1] = Cdd::one();
        }
        TruncatedSeries { center, coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn center(&self) -> Cdd {
        self.center
    }

    pub fn coeffs(&self) -> &[Cdd] {
        &self.coeffs
    }

    /// Coefficient of `(u − center)^k`, zero past the truncation order.
    pub fn coeff(&self, k: usize) -> Cdd {
        self.coeffs.get(k).copied().unwrap_or_else(Cdd::zero)
    }

    pub fn with_center(mut self, center: Cdd) -> Self {
        self.center = center;
        self
    }

    pub fn truncate(&self, order: usize) -> Self {
        let n = order.min(self.order());
        TruncatedSeries {
            center: self.center,
            coeffs: self.coeffs[..=n].to_vec(),
        }
    }

    fn check_center(&self, other: &Self) -> Result<usize, SeriesError> {
        if self.center != other.center {
            return Err(SeriesError::CenterMismatch);
        }
        Ok(self.order().min(other.order()))
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        let n = self.check_center(other)?;
        let coeffs = (0..=n).map(|k| self.coeffs[k] + other.coeffs[k]).collect();
        Ok(TruncatedSeries {
            center: self.center,
            coeffs,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        let n = self.check_center(other)?;
        let coeffs = (0..=n).map(|k| self.coeffs[k] - other.coeffs[k]).collect();
        Ok(TruncatedSeries {
            center: self.center,
            coeffs,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        let n = self.check_center(other)?;
        Ok(TruncatedSeries {
            center: self.center,
            coeffs: cauchy(&self.coeffs[..=n], &other.coeffs[..=n]),
        })
    }

    pub fn scale(&self, c: Cdd) -> Self {
        TruncatedSeries {
            center: self.center,
            coeffs: self.coeffs.iter().map(|&v| v * c).collect(),
        }
    }

    pub fn add_scalar(&self, c: Cdd) -> Self {
        let mut out = self.clone();
        out.coeffs[0] = out.coeffs[0] + c;
        out
    }

    /// `self(inner(w))`. The inner series must vanish at its center; the result
    /// lives at the inner series' center.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroInnerConstant);
        }
        let n = self.order().min(inner.order());
        let g = &inner.coeffs[..=n];
        let mut acc = vec![Cdd::zero(); n + 1];
        acc[0] = self.coeffs[n];
        for k in (0..n).rev() {
            acc = cauchy(&acc, g);
            acc[0] = acc[0] + self.coeffs[k];
        }
        Ok(TruncatedSeries {
            center: inner.center,
            coeffs: acc,
        })
    }

    pub fn derivative(&self) -> Self {
        let coeffs = if self.order() == 0 {
            vec![Cdd::zero()]
        } else {
            (1..=self.order())
                .map(|k| self.coeffs[k].scale(Dd::from_i64(k as i64)))
                .collect()
        };
        TruncatedSeries {
            center: self.center,
            coeffs,
        }
    }

    /// Divides by `(u − center)^m`, dropping the first `m` coefficients.
    /// The caller vouches that they vanish (e.g. the linear term at a saddle).
    pub fn shift_down(&self, m: usize) -> Result<Self, SeriesError> {
        if m > self.order() {
            return Err(SeriesError::Empty);
        }
        Ok(TruncatedSeries {
            center: self.center,
            coeffs: self.coeffs[m..].to_vec(),
        })
    }

    /// Multiplies by `(u − center)^m`, raising the order by `m`.
    pub fn shift_up(&self, m: usize) -> Self {
        let mut coeffs = vec![Cdd::zero(); m];
        coeffs.extend_from_slice(&self.coeffs);
        TruncatedSeries {
            center: self.center,
            coeffs,
        }
    }

    pub fn recip(&self) -> Result<Self, SeriesError> {
        let c0 = self.coeffs[0];
        if c0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let n = self.order();
        let inv0 = Cdd::one() / c0;
        let mut r = vec![Cdd::zero(); n + 1];
        r[0] = inv0;
        for k in 1..=n {
            let mut acc = Cdd::zero();
            for j in 1..=k {
                acc = acc + self.coeffs[j] * r[k - j];
            }
            r[k] = -acc * inv0;
        }
        Ok(TruncatedSeries {
            center: self.center,
            coeffs: r,
        })
    }

    pub fn sqrt(&self, branch: SqrtBranch) -> Result<Self, SeriesError> {
        let c0 = self.coeffs[0];
        if c0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let mut r0 = cx::sqrt(c0);
        if branch == SqrtBranch::Negated {
            r0 = -r0;
        }
        let n = self.order();
        let mut r = vec![Cdd::zero(); n + 1];
        r[0] = r0;
        let two_r0 = r0.scale(Dd::from_f64(2.0));
        for k in 1..=n {
            let mut acc = self.coeffs[k];
            for j in 1..k {
                acc = acc - r[j] * r[k - j];
            }
            r[k] = acc / two_r0;
        }
        Ok(TruncatedSeries {
            center: self.center,
            coeffs: r,
        })
    }

    /// `self^alpha` with the constant term of the result fixed to `root0`
    /// (which must satisfy `root0 = c_0^alpha` on the intended branch).
    /// J.C.P. Miller's recurrence: `n c_0 r_n = Σ_{k=1}^n (alpha·k − n + k) c_k r_{n−k}`.
    pub fn pow_with_root(&self, alpha: Dd, root0: Cdd) -> Result<Self, SeriesError> {
        let c0 = self.coeffs[0];
        if c0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let n = self.order();
        let mut r = vec![Cdd::zero(); n + 1];
        r[0] = root0;
        for m in 1..=n {
            let mut acc = Cdd::zero();
            for k in 1..=m {
                let w = alpha * Dd::from_i64(k as i64) - Dd::from_i64((m - k) as i64);
                acc = acc + (self.coeffs[k] * r[m - k]).scale(w);
            }
            r[m] = acc / c0.scale(Dd::from_i64(m as i64));
        }
        Ok(TruncatedSeries {
            center: self.center,
            coeffs: r,
        })
    }

    /// Cube root on branch `k ∈ {0, 1, 2}`: the principal root of the constant
    /// term rotated by `e^{2πik/3}`.
    pub fn cbrt(&self, branch: u8) -> Result<Self, SeriesError> {
        let c0 = self.coeffs[0];
        if c0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let half = Dd::from_f64(0.5);
        let s3 = Dd::from_f64(3.0).sqrt() * half;
        let rot = match branch % 3 {
            0 => Cdd::one(),
            1 => cx::new(-half, s3),
            _ => cx::new(-half, -s3),
        };
        self.pow_with_root(Dd::ONE / Dd::from_f64(3.0), cx::cbrt(c0) * rot)
    }

    /// `exp(self)` for a series with zero constant term, via `E' = E·f'`.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroInnerConstant);
        }
        let n = self.order();
        let mut e = vec![Cdd::zero(); n + 1];
        e[0] = Cdd::one();
        for m in 1..=n {
            let mut acc = Cdd::zero();
            for k in 1..=m {
                acc = acc + (self.coeffs[k] * e[m - k]).scale(Dd::from_i64(k as i64));
            }
            e[m] = acc.unscale(Dd::from_i64(m as i64));
        }
        Ok(TruncatedSeries {
            center: self.center,
            coeffs: e,
        })
    }

    /// Compositional inverse: `t` with `self(t(w)) = w + O(w^{N+1})`.
    ///
    /// Triangular recurrence, one coefficient per order: with `P_k = t^k`,
    /// `[w^n] P_k` for `k ≥ 2` only involves `t_1..t_{n−1}`, so
    /// `t_n = −(Σ_{k=2}^n s_k [w^n]P_k) / s_1`. The result is a series in `w`
    /// about 0 whose value is the displacement from `self.center()`.
    pub fn revert(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroInnerConstant);
        }
        let s1 = self.coeff(1);
        if s1.is_zero() {
            return Err(SeriesError::ZeroLinearCoefficient);
        }
        let n = self.order();
        let inv1 = Cdd::one() / s1;
        // pw[k][m] = [w^m] t^k
        let mut pw = vec![vec![Cdd::zero(); n + 1]; n + 1];
        pw[0][0] = Cdd::one();
        if n >= 1 {
            pw[1][1] = inv1;
        }
        for k in 2..=n {
            pw[k][k] = pw[k - 1][k - 1] * inv1;
        }
        for m in 2..=n {
            let mut acc = Cdd::zero();
            for k in 2..=m {
                // pw[k][m] = Σ_{j=1}^{m−k+1} t_j · pw[k−1][m−j]; diagonal already set
                if k < m {
                    let mut v = Cdd::zero();
                    for j in 1..=(m - k + 1) {
                        v = v + pw[1][j] * pw[k - 1][m - j];
                    }
                    pw[k][m] = v;
                }
                acc = acc + self.coeffs[k] * pw[k][m];
            }
            pw[1][m] = -acc * inv1;
        }
        Ok(TruncatedSeries {
            center: Cdd::zero(),
            coeffs: pw[1].clone(),
        })
    }

    /// Largest coefficient-wise modulus of `self − other` over the common order.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let n = self.order().min(other.order());
        (0..=n)
            .map(|k| cx::abs(self.coeffs[k] - other.coeffs[k]).to_f64())
            .fold(0.0, f64::max)
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|&c| cx::abs(c).to_f64())
            .fold(0.0, f64::max)
    }
}

fn cauchy(a: &[Cdd], b: &[Cdd]) -> Vec<Cdd> {
    let n = a.len().min(b.len());
    (0..n)
        .map(|k| {
            let mut acc = Cdd::zero();
            for i in 0..=k {
                acc = acc + a[i] * b[k - i];
            }
            acc
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn re(s: &TruncatedSeries, k: usize) -> f64 {
        s.coeff(k).re.to_f64()
    }

    #[test]
    fn difference_of_squares() {
        let p = TruncatedSeries::from_f64(&[1.0, 1.0, 0.0]).unwrap();
        let m = TruncatedSeries::from_f64(&[1.0, -1.0, 0.0]).unwrap();
        let prod = p.mul(&m).unwrap();
        assert_eq!([re(&prod, 0), re(&prod, 1), re(&prod, 2)], [1.0, 0.0, -1.0]);
    }

    #[test]
    fn center_mismatch_is_rejected() {
        let a = TruncatedSeries::variable(Cdd::zero(), 3);
        let b = TruncatedSeries::variable(cx::from_f64(1.0, 0.0), 3);
        assert!(matches!(a.add(&b), Err(SeriesError::CenterMismatch)));
    }

    #[test]
    fn compose_needs_vanishing_inner() {
        let a = TruncatedSeries::from_f64(&[1.0, 2.0]).unwrap();
        let b = TruncatedSeries::from_f64(&[1.0, 1.0]).unwrap();
        assert!(matches!(
            a.compose(&b),
            Err(SeriesError::NonzeroInnerConstant)
        ));
    }

    #[test]
    fn revert_cubic() {
        let s = TruncatedSeries::from_f64(&[0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0]).unwrap();
        let t = s.revert().unwrap();
        let want = [0.0, 1.0, 0.0, -1.0, 0.0, 3.0, 0.0];
        for (k, w) in want.iter().enumerate() {
            assert!((re(&t, k) - w).abs() < 1e-28, "k={k}");
        }
    }

    #[test]
    fn revert_rejects_degenerate_input() {
        let s = TruncatedSeries::from_f64(&[0.0, 0.0, 1.0]).unwrap();
        assert!(matches!(
            s.revert(),
            Err(SeriesError::ZeroLinearCoefficient)
        ));
    }

    #[test]
    fn sqrt_binomial() {
        let s = TruncatedSeries::from_f64(&[1.0, 2.0, 0.0, 0.0]).unwrap();
        let r = s.sqrt(SqrtBranch::Principal).unwrap();
        let want = [1.0, 1.0, -0.5, 0.5];
        for (k, w) in want.iter().enumerate() {
            assert!((re(&r, k) - w).abs() < 1e-30);
        }
        let n = s.sqrt(SqrtBranch::Negated).unwrap();
        assert_eq!(re(&n, 0), -1.0);
    }

    #[test]
    fn sqrt_of_constant_and_square() {
        let four = TruncatedSeries::from_f64(&[4.0]).unwrap();
        assert_eq!(re(&four.sqrt(SqrtBranch::Principal).unwrap(), 0), 2.0);
        let sq = TruncatedSeries::from_f64(&[1.0, 2.0, 1.0, 0.0]).unwrap();
        let r = sq.sqrt(SqrtBranch::Principal).unwrap();
        assert!((re(&r, 1) - 1.0).abs() < 1e-30);
        assert!(re(&r, 2).abs() < 1e-30 && re(&r, 3).abs() < 1e-30);
    }

    #[test]
    fn cube_root_round_trip() {
        let s = TruncatedSeries::from_f64(&[8.0, 1.0, -2.0, 0.5, 0.25]).unwrap();
        let r = s.cbrt(0).unwrap();
        let back = r.mul(&r).unwrap().mul(&r).unwrap();
        assert!(back.max_abs_diff(&s) < 1e-28);
    }

    #[test]
    fn exp_of_variable() {
        let v = TruncatedSeries::variable(Cdd::zero(), 6);
        let e = v.exp().unwrap();
        let mut fact = 1.0;
        for k in 0..=6 {
            if k > 0 {
                fact *= k as f64;
            }
            assert!((re(&e, k) - 1.0 / fact).abs() < 1e-30);
        }
    }

    #[test]
    fn recip_geometric() {
        let s = TruncatedSeries::from_f64(&[1.0, -1.0, 0.0, 0.0, 0.0]).unwrap();
        let r = s.recip().unwrap();
        for k in 0..=4 {
            assert!((re(&r, k) - 1.0).abs() < 1e-30);
        }
    }

    #[test]
    fn arith_dispatch() {
        let s = TruncatedSeries::from_f64(&[1.0, 2.0, 3.0]).unwrap();
        let d = series_arith(&s, Operand::None, ArithKind::Derivative).unwrap();
        assert_eq!([re(&d, 0), re(&d, 1)], [2.0, 6.0]);
        assert!(series_arith(&s, Operand::None, ArithKind::Add).is_err());
    }
}
