use std::fmt;

use super::WittRing;
use crate::{Error, Result};

/// A univariate polynomial over W_N, ascending degree, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WPoly {
    ring: WittRing,
    coeffs: Vec<u64>,
}

impl WPoly {
    pub fn new(ring: WittRing, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| ring.reduce(c)).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        WPoly { ring, coeffs }
    }

    pub fn from_i64(ring: WittRing, coeffs: &[i64]) -> Self {
        WPoly::new(ring, coeffs.iter().map(|&c| ring.from_i64(c)).collect())
    }

    pub fn zero(ring: WittRing) -> Self {
        WPoly { ring, coeffs: Vec::new() }
    }

    pub fn constant(ring: WittRing, c: u64) -> Self {
        WPoly::new(ring, vec![c])
    }

    pub fn t(ring: WittRing) -> Self {
        WPoly::new(ring, vec![0, 1])
    }

    /// t^k.
    pub fn monomial(ring: WittRing, k: usize) -> Self {
        let mut c = vec![0; k + 1];
        c[k] = 1;
        WPoly::new(ring, c)
    }

    pub fn ring(&self) -> WittRing {
        self.ring
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn add(&self, other: &WPoly) -> WPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        WPoly::new(self.ring, (0..len).map(|i| self.ring.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &WPoly) -> WPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        WPoly::new(self.ring, (0..len).map(|i| self.ring.sub(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn scale(&self, c: u64) -> WPoly {
        WPoly::new(self.ring, self.coeffs.iter().map(|&a| self.ring.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &WPoly) -> WPoly {
        if self.is_zero() || other.is_zero() {
            return WPoly::zero(self.ring);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = self.ring.add(out[i + j], self.ring.mul(a, b));
            }
        }
        WPoly::new(self.ring, out)
    }

    pub fn compose(&self, inner: &WPoly) -> WPoly {
        let mut acc = WPoly::zero(self.ring);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&WPoly::constant(self.ring, c));
        }
        acc
    }

    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0;
        for &c in self.coeffs.iter().rev() {
            acc = self.ring.add(self.ring.mul(acc, x), c);
        }
        acc
    }

    /// Remainder on division by a monic polynomial.
    pub fn rem_monic(&self, modulus: &WPoly) -> Result<WPoly> {
        if !modulus.is_monic() {
            return Err(Error::Domain("division by a non-monic polynomial".into()));
        }
        let d = modulus.degree().unwrap_or(0);
        let mut r = self.coeffs.clone();
        while r.len() > d {
            let top = r.len() - 1;
            let c = r[top];
            if c != 0 {
                for (i, &m) in modulus.coeffs.iter().enumerate() {
                    let idx = top - d + i;
                    r[idx] = self.ring.sub(r[idx], self.ring.mul(c, m));
                }
            }
            r.pop();
        }
        Ok(WPoly::new(self.ring, r))
    }

    /// Reduction mod 2, as a bit vector of coefficients.
    pub fn mod2(&self) -> Vec<u8> {
        let mut bits: Vec<u8> = self.coeffs.iter().map(|&c| self.ring.residue(c)).collect();
        while bits.last() == Some(&0) {
            bits.pop();
        }
        bits
    }

    /// True when the reduction mod 2 is exactly t^k.
    pub fn is_monomial_mod2(&self, k: usize) -> bool {
        let bits = self.mod2();
        bits.len() == k + 1 && bits[..k].iter().all(|&b| b == 0)
    }

    /// Coefficients as balanced signed integers.
    pub fn signed_coeffs(&self) -> Vec<i128> {
        self.coeffs.iter().map(|&c| self.ring.to_signed(c)).collect()
    }
}

impl serde::Serialize for WPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("WPoly", 2)?;
        st.serialize_field("text", &self.to_string())?;
        st.serialize_field("coeffs", &self.signed_coeffs())?;
        st.end()
    }
}

impl fmt::Display for WPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.signed_coeffs().into_iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let a = c.unsigned_abs();
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            first = false;
            if a != 1 || i == 0 {
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
