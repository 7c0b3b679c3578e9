//! Generalized decomposition numbers at an element σ of maximal order 2^{n−1} and the
//! Galois orbits of the height-one characters χ_{5,i}.

use serde::{Deserialize, Serialize};

use crate::scalars::{minpoly_nu, CycElem, CyclotomicWitt, WittRing};
use crate::{DefectType, Error, Result};

/// The value d^{(σ)}_{χ_{5,i},φ} as an element of W_N[ζ], ζ a primitive 2^{n−1}-th root of unity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenDecompValue {
    pub i: u64,
    pub n: u32,
    pub defect_type: DefectType,
    pub ring: CyclotomicWitt,
    pub value: CycElem,
}

impl GenDecompValue {
    /// Level ℓ of the Galois orbit containing i.
    pub fn level(&self) -> u32 {
        orbit_level(self.i, self.n)
    }

    /// Whether the value is one of 0, 1, −1.
    ///
    /// The coordinates of ζ^i ± ζ^{−i} − δ on the power basis are integers of absolute
    /// value at most 2, so comparison in W_N[ζ] is exact once N ≥ 3.
    pub fn is_trivial(&self) -> bool {
        [0, 1, -1].iter().any(|&d| {
            let diff = self.ring.sub(&self.value, &self.ring.from_int(d));
            self.ring.is_zero(&diff)
        })
    }

    /// Evaluates the minimal polynomial of ν_ℓ at the value, ℓ the orbit level of i.
    pub fn minpoly_residual(&self) -> Result<CycElem> {
        let p = minpoly_nu(self.level(), self.defect_type, self.n, self.ring.base())?;
        Ok(self.ring.eval_poly(&p, &self.value))
    }
}

/// O_ℓ = {2^{n−1−ℓ}(2u − 1) : 1 ≤ u ≤ 2^{ℓ−2}}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaloisOrbit {
    pub level: u32,
    pub members: Vec<u64>,
}

fn check(n: u32, ty: DefectType) -> Result<()> {
    if n < 3 || n < ty.n_min() || n > 20 {
        return Err(Error::Domain(format!("no height-one characters χ_5,i for {ty} with n={n}")));
    }
    Ok(())
}

fn orbit_level(i: u64, n: u32) -> u32 {
    n - 1 - i.trailing_zeros()
}

/// Number of characters χ_{5,i}, that is 2^{n−2} − 1.
pub fn height_one_count(n: u32) -> u64 {
    (1u64 << (n - 2)) - 1
}

pub fn gen_decomp(i: u64, n: u32, ty: DefectType, ring: WittRing) -> Result<GenDecompValue> {
    check(n, ty)?;
    if i == 0 || i > height_one_count(n) {
        return Err(Error::Domain(format!("index i={i} outside 1..={}", height_one_count(n))));
    }
    let cyc = CyclotomicWitt::new(ring, n - 1)?;
    let k = i as i64;
    let half = 1i64 << (n - 3);
    let value = match ty {
        DefectType::SD if k % 2 == 1 && k < half => cyc.diff_pair(k),
        DefectType::SD if k % 2 == 1 => cyc.diff_pair(-k),
        _ => cyc.trace_pair(k),
    };
    Ok(GenDecompValue { i, n, defect_type: ty, ring: cyc, value })
}

pub fn orbits(n: u32, ty: DefectType) -> Result<Vec<GaloisOrbit>> {
    check(n, ty)?;
    Ok((2..n)
        .map(|level| {
            let step = 1u64 << (n - 1 - level);
            let members = (1..=1u64 << (level - 2)).map(|u| step * (2 * u - 1)).collect();
            GaloisOrbit { level, members }
        })
        .collect())
}

/// True iff χ_{5,i} has a generalized decomposition number outside {0, ±1}, which happens
/// exactly when n ≥ 4 and i ≠ 2^{n−3}.
pub fn is_maximally_ordinary_index(i: u64, n: u32) -> bool {
    n >= 4 && i != 1u64 << (n - 3)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w() -> WittRing {
        WittRing::new(24).unwrap()
    }

    #[test]
    fn quaternion_eight_vanishes() {
        let v = gen_decomp(1, 3, DefectType::Q, w()).unwrap();
        assert!(v.ring.is_zero(&v.value));
        assert!(!is_maximally_ordinary_index(1, 3));
    }

    #[test]
    fn sd_sign_flip_above_half() {
        let a = gen_decomp(5, 5, DefectType::SD, w()).unwrap();
        let b = gen_decomp(1, 5, DefectType::SD, w()).unwrap();
        assert_eq!(a.value, a.ring.diff_pair(-5));
        assert_eq!(b.value, b.ring.diff_pair(1));
    }

    #[test]
    fn range_errors() {
        assert!(gen_decomp(0, 4, DefectType::D, w()).is_err());
        assert!(gen_decomp(4, 4, DefectType::D, w()).is_err());
        assert!(gen_decomp(1, 3, DefectType::SD, w()).is_err());
    }
}
