use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{WPoly, WittRing};

/// A univariate polynomial with exact integer coefficients, ascending degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        ZPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn t() -> Self {
        ZPoly::from_i64(&[0, 1])
    }

    pub fn one() -> Self {
        ZPoly::from_i64(&[1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn add(&self, other: &ZPoly) -> ZPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = BigInt::zero();
        ZPoly::new(
            (0..len)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigInt) -> ZPoly {
        ZPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn sub(&self, other: &ZPoly) -> ZPoly {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn mul(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() || other.is_zero() {
            return ZPoly::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ZPoly::new(out)
    }

    /// The composite self(inner).
    pub fn compose(&self, inner: &ZPoly) -> ZPoly {
        let mut acc = ZPoly::new(Vec::new());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&ZPoly::new(vec![c.clone()]));
        }
        acc
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn to_witt(&self, ring: WittRing) -> WPoly {
        WPoly::new(ring, self.coeffs.iter().map(|c| ring.from_bigint(c)).collect())
    }

    /// Resultant via the Sylvester matrix and fraction-free elimination.
    pub fn resultant(&self, other: &ZPoly) -> BigInt {
        let (m, n) = match (self.degree(), other.degree()) {
            (Some(m), Some(n)) => (m, n),
            _ => return BigInt::zero(),
        };
        if m + n == 0 {
            return BigInt::one();
        }
        let size = m + n;
        let mut rows = vec![vec![BigInt::zero(); size]; size];
        for r in 0..n {
            for (i, c) in self.coeffs.iter().rev().enumerate() {
                rows[r][r + i] = c.clone();
            }
        }
        for r in 0..m {
            for (i, c) in other.coeffs.iter().rev().enumerate() {
                rows[n + r][r + i] = c.clone();
            }
        }
        bareiss_det(rows)
    }
}

/// Exact determinant of a square integer matrix.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// If `x` is ±2^k return k.
pub fn power_of_two_exponent(x: &BigInt) -> Option<u64> {
    let a = x.abs();
    if a.is_zero() {
        return None;
    }
    let k = a.trailing_zeros()?;
    if a == BigInt::one() << k {
        Some(k)
    } else {
        None
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = !a.is_one() || i == 0;
            if show_coeff {
                write!(f, "{a}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}
