use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// The truncated Witt ring W_N = Z/2^N over GF(2), 1 ≤ N ≤ 64.
///
/// Elements are plain `u64` residues; all arithmetic wraps mod 2^64 and is then masked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WittRing {
    n: u32,
}

impl WittRing {
    pub fn new(n: u32) -> Result<Self> {
        if !(1..=64).contains(&n) {
            return Err(Error::Domain(format!("Witt precision N={n} outside 1..=64")));
        }
        Ok(WittRing { n })
    }

    pub fn precision(&self) -> u32 {
        self.n
    }

    #[inline]
    fn mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    #[inline]
    pub fn reduce(&self, a: u64) -> u64 {
        a & self.mask()
    }

    pub fn from_i64(&self, a: i64) -> u64 {
        self.reduce(a as u64)
    }

    pub fn from_bigint(&self, a: &num_bigint::BigInt) -> u64 {
        let m = num_bigint::BigInt::from(1u8) << self.n;
        let mut r = a % &m;
        if r.sign() == num_bigint::Sign::Minus {
            r += &m;
        }
        let (_, digits) = r.to_u64_digits();
        digits.first().copied().unwrap_or(0)
    }

    /// Balanced lift to the interval (−2^{N−1}, 2^{N−1}], for display.
    pub fn to_signed(&self, a: u64) -> i128 {
        let a = self.reduce(a) as i128;
        let m = 1i128 << self.n;
        if a > m / 2 {
            a - m
        } else {
            a
        }
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        self.reduce(a.wrapping_add(b))
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.reduce(a.wrapping_sub(b))
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        self.reduce(a.wrapping_neg())
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.reduce(a.wrapping_mul(b))
    }

    pub fn pow(&self, mut a: u64, mut k: u64) -> u64 {
        let mut acc = self.reduce(1);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            k >>= 1;
        }
        acc
    }

    pub fn is_unit(&self, a: u64) -> bool {
        a & 1 == 1
    }

    /// 2-adic valuation, with `N` standing for the zero element.
    pub fn valuation(&self, a: u64) -> u32 {
        let a = self.reduce(a);
        if a == 0 {
            self.n
        } else {
            a.trailing_zeros()
        }
    }

    /// Inverse of a unit by Newton iteration x ↦ x(2 − ax).
    pub fn inv(&self, a: u64) -> Option<u64> {
        if !self.is_unit(a) {
            return None;
        }
        let mut x: u64 = 1;
        for _ in 0..7 {
            x = x.wrapping_mul(2u64.wrapping_sub(a.wrapping_mul(x)));
        }
        Some(self.reduce(x))
    }

    /// Reduction W_N → GF(2).
    pub fn residue(&self, a: u64) -> u8 {
        (a & 1) as u8
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn units_are_exactly_odd_residues() {
        let w = WittRing::new(10).unwrap();
        for a in 0..1024u64 {
            match w.inv(a) {
                Some(b) => assert_eq!(w.mul(a, b), 1),
                None => assert_eq!(a % 2, 0),
            }
        }
    }

    #[test]
    fn residue_is_ring_map() {
        let w = WittRing::new(8).unwrap();
        for a in 0..256u64 {
            for b in (0..256u64).step_by(3) {
                assert_eq!(w.residue(w.mul(a, b)), w.residue(a) & w.residue(b));
                assert_eq!(w.residue(w.add(a, b)), w.residue(a) ^ w.residue(b));
            }
        }
    }

    #[test]
    fn full_width_precision() {
        let w = WittRing::new(64).unwrap();
        let a = 0xdead_beef_1234_5677u64;
        assert_eq!(w.mul(a, w.inv(a).unwrap()), 1);
        assert_eq!(w.valuation(0), 64);
        assert_eq!(w.valuation(48), 4);
    }
}
