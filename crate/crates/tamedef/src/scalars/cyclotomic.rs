use serde::{Deserialize, Serialize};

use super::{WPoly, WittRing};
use crate::{Error, Result};

/// W_N[x]/(x^{2^{ℓ−1}} + 1), a truncation of W[ζ_ℓ] with ζ_ℓ the class of x.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CyclotomicWitt {
    base: WittRing,
    level: u32,
}

/// Coordinates on the power basis 1, ζ, …, ζ^{2^{ℓ−1}−1}.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycElem(pub Vec<u64>);

impl CyclotomicWitt {
    pub fn new(base: WittRing, level: u32) -> Result<Self> {
        if !(1..=20).contains(&level) {
            return Err(Error::Domain(format!("cyclotomic level {level} outside 1..=20")));
        }
        Ok(CyclotomicWitt { base, level })
    }

    pub fn base(&self) -> WittRing {
        self.base
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// Rank over W_N.
    pub fn degree(&self) -> usize {
        1 << (self.level - 1)
    }

    pub fn zero(&self) -> CycElem {
        CycElem(vec![0; self.degree()])
    }

    pub fn from_int(&self, a: i64) -> CycElem {
        let mut v = self.zero();
        v.0[0] = self.base.from_i64(a);
        v
    }

    pub fn one(&self) -> CycElem {
        self.from_int(1)
    }

    /// ζ_ℓ^k for any integer k.
    pub fn zeta_pow(&self, k: i64) -> CycElem {
        let d = self.degree() as i64;
        let k = k.rem_euclid(2 * d);
        let mut v = self.zero();
        if k < d {
            v.0[k as usize] = 1;
        } else {
            v.0[(k - d) as usize] = self.base.neg(1);
        }
        v
    }

    pub fn zeta(&self) -> CycElem {
        self.zeta_pow(1)
    }

    pub fn add(&self, a: &CycElem, b: &CycElem) -> CycElem {
        CycElem(a.0.iter().zip(&b.0).map(|(&x, &y)| self.base.add(x, y)).collect())
    }

    pub fn sub(&self, a: &CycElem, b: &CycElem) -> CycElem {
        CycElem(a.0.iter().zip(&b.0).map(|(&x, &y)| self.base.sub(x, y)).collect())
    }

    pub fn neg(&self, a: &CycElem) -> CycElem {
        CycElem(a.0.iter().map(|&x| self.base.neg(x)).collect())
    }

    pub fn scale(&self, a: &CycElem, c: u64) -> CycElem {
        CycElem(a.0.iter().map(|&x| self.base.mul(x, c)).collect())
    }

    /// Negacyclic convolution, since x^d = −1.
    pub fn mul(&self, a: &CycElem, b: &CycElem) -> CycElem {
        let d = self.degree();
        let mut out = vec![0u64; d];
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                let p = self.base.mul(x, y);
                let k = i + j;
                if k < d {
                    out[k] = self.base.add(out[k], p);
                } else {
                    out[k - d] = self.base.sub(out[k - d], p);
                }
            }
        }
        CycElem(out)
    }

    pub fn pow(&self, a: &CycElem, mut k: u64) -> CycElem {
        let mut acc = self.one();
        let mut base = a.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            k >>= 1;
        }
        acc
    }

    pub fn is_zero(&self, a: &CycElem) -> bool {
        a.0.iter().all(|&x| self.base.reduce(x) == 0)
    }

    pub fn eval_poly(&self, p: &WPoly, x: &CycElem) -> CycElem {
        let mut acc = self.zero();
        for &c in p.coeffs().iter().rev() {
            acc = self.mul(&acc, x);
            acc.0[0] = self.base.add(acc.0[0], c);
        }
        acc
    }

    /// The inclusion W[ζ_{ℓ'}] → W[ζ_ℓ] for ℓ' ≤ ℓ, sending ζ_{ℓ'} to ζ_ℓ^{2^{ℓ−ℓ'}}.
    pub fn embed(&self, lower: &CyclotomicWitt, a: &CycElem) -> Result<CycElem> {
        if lower.level > self.level {
            return Err(Error::Domain("cannot embed a higher level into a lower one".into()));
        }
        let step = 1usize << (self.level - lower.level);
        let mut v = self.zero();
        for (i, &c) in a.0.iter().enumerate() {
            v.0[i * step] = self.base.reduce(c);
        }
        Ok(v)
    }

    /// ζ_ℓ^k + ζ_ℓ^{−k}.
    pub fn trace_pair(&self, k: i64) -> CycElem {
        self.add(&self.zeta_pow(k), &self.zeta_pow(-k))
    }

    /// ζ_ℓ^k − ζ_ℓ^{−k}.
    pub fn diff_pair(&self, k: i64) -> CycElem {
        self.sub(&self.zeta_pow(k), &self.zeta_pow(-k))
    }
}
