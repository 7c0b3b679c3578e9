//! The group ring W_N[Z] of a cyclic group Z = ⟨σ⟩ of order 2^{n−1} and its subring of
//! invariants under an involution τ.

use serde::{Deserialize, Serialize};

use crate::scalars::{WPoly, WittRing};
use crate::{DefectType, Error, Result};

/// How τ acts on σ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Involution {
    /// σ ↦ σ^{−1}.
    Inversion,
    /// σ ↦ σ^{−1+2^{n−2}}.
    Semidihedral,
}

impl Involution {
    pub fn for_type(ty: DefectType) -> Self {
        match ty {
            DefectType::SD => Involution::Semidihedral,
            DefectType::D | DefectType::Q => Involution::Inversion,
        }
    }
}

/// An element of W_N[Z] as its coefficient vector on σ^0, …, σ^{2^{n−1}−1}.
pub type GroupElem = Vec<u64>;

/// (W_N Z)^⟨τ⟩ with the basis of τ-orbit sums σ^k + τ(σ^k), or σ^k for τ-fixed k.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedGroupAlgebra {
    pub n: u32,
    pub tau: Involution,
    ring: WittRing,
    /// Orbits of exponents, smallest exponent first; the basis element is their sum.
    orbits: Vec<Vec<usize>>,
    /// Position of each exponent's orbit in `orbits`.
    orbit_of: Vec<usize>,
}

impl FixedGroupAlgebra {
    pub fn new(n: u32, tau: Involution, ring: WittRing) -> Result<Self> {
        let lo = if tau == Involution::Semidihedral { 4 } else { 3 };
        if n < lo || n > 16 {
            return Err(Error::Domain(format!("cyclic group of order 2^{} not supported for {tau:?}", n.saturating_sub(1))));
        }
        let order = 1usize << (n - 1);
        let mut orbit_of = vec![usize::MAX; order];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        let fixed_first = [0, order / 2];
        let rest = (0..order).filter(|k| !fixed_first.contains(k));
        for k in fixed_first.into_iter().chain(rest) {
            if orbit_of[k] != usize::MAX {
                continue;
            }
            let j = tau_exp(tau, n, k);
            let mut orb = vec![k];
            if j != k {
                orb.push(j);
            }
            for &e in &orb {
                orbit_of[e] = orbits.len();
            }
            orbits.push(orb);
        }
        Ok(FixedGroupAlgebra { n, tau, ring, orbits, orbit_of })
    }

    pub fn ring(&self) -> WittRing {
        self.ring
    }

    pub fn order(&self) -> usize {
        1 << (self.n - 1)
    }

    /// Rank over W_N, which is 2^{n−2} + 1.
    pub fn rank(&self) -> usize {
        self.orbits.len()
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    /// Human-readable name of the i-th basis element.
    pub fn basis_label(&self, i: usize) -> String {
        let half = self.order() / 2;
        let name = |k: usize| match k {
            0 => "1".to_string(),
            k if k == half => "J".to_string(),
            1 => "σ".to_string(),
            k => format!("σ^{k}"),
        };
        self.orbits[i].iter().map(|&k| name(k)).collect::<Vec<_>>().join("+")
    }

    pub fn tau_exp(&self, k: usize) -> usize {
        tau_exp(self.tau, self.n, k)
    }

    pub fn zero(&self) -> GroupElem {
        vec![0; self.order()]
    }

    pub fn sigma_pow(&self, k: i64) -> GroupElem {
        let mut v = self.zero();
        v[k.rem_euclid(self.order() as i64) as usize] = 1;
        v
    }

    pub fn basis_element(&self, i: usize) -> GroupElem {
        let mut v = self.zero();
        for &k in &self.orbits[i] {
            v[k] = 1;
        }
        v
    }

    pub fn add(&self, a: &GroupElem, b: &GroupElem) -> GroupElem {
        a.iter().zip(b).map(|(&x, &y)| self.ring.add(x, y)).collect()
    }

    pub fn sub(&self, a: &GroupElem, b: &GroupElem) -> GroupElem {
        a.iter().zip(b).map(|(&x, &y)| self.ring.sub(x, y)).collect()
    }

    pub fn scale(&self, a: &GroupElem, c: u64) -> GroupElem {
        a.iter().map(|&x| self.ring.mul(x, c)).collect()
    }

    /// Cyclic convolution.
    pub fn mul(&self, a: &GroupElem, b: &GroupElem) -> GroupElem {
        let m = self.order();
        let mut out = vec![0u64; m];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y != 0 {
                    let k = (i + j) % m;
                    out[k] = self.ring.add(out[k], self.ring.mul(x, y));
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &GroupElem, k: usize) -> GroupElem {
        (0..k).fold(self.sigma_pow(0), |acc, _| self.mul(&acc, a))
    }

    pub fn apply_tau(&self, a: &GroupElem) -> GroupElem {
        let mut out = self.zero();
        for (k, &x) in a.iter().enumerate() {
            out[self.tau_exp(k)] = x;
        }
        out
    }

    pub fn is_fixed(&self, a: &GroupElem) -> bool {
        self.apply_tau(a).iter().zip(a).all(|(x, y)| self.ring.reduce(*x) == self.ring.reduce(*y))
    }

    /// Coordinates on the orbit-sum basis; fails if `a` is not τ-invariant.
    pub fn coords(&self, a: &GroupElem) -> Result<Vec<u64>> {
        if !self.is_fixed(a) {
            return Err(Error::Domain("element of W[Z] is not τ-invariant".into()));
        }
        Ok(self.orbits.iter().map(|o| self.ring.reduce(a[o[0]])).collect())
    }

    pub fn from_coords(&self, c: &[u64]) -> GroupElem {
        let mut v = self.zero();
        for (o, &x) in self.orbits.iter().zip(c) {
            for &k in o {
                v[k] = self.ring.reduce(x);
            }
        }
        v
    }

    /// σ + τ(σ), the image of t.
    pub fn h(&self) -> GroupElem {
        self.add(&self.sigma_pow(1), &self.sigma_pow(self.tau_exp(1) as i64))
    }

    /// T(σ²) = 1 + σ² + ⋯ + σ^{2^{n−1}−2}.
    pub fn t_sigma2(&self) -> GroupElem {
        (0..self.order()).map(|k| u64::from(k % 2 == 0)).collect()
    }

    /// σ·T(σ²), the sum of the odd powers of σ.
    pub fn sigma_t_sigma2(&self) -> GroupElem {
        (0..self.order()).map(|k| u64::from(k % 2 == 1)).collect()
    }

    pub fn eval_poly(&self, p: &WPoly, x: &GroupElem) -> GroupElem {
        let mut acc = self.zero();
        for &c in p.coeffs().iter().rev() {
            acc = self.mul(&acc, x);
            acc[0] = self.ring.add(acc[0], c);
        }
        acc
    }

    /// A W_N-spanning set of the ideal of (W_N Z)^⟨τ⟩ generated by `gens`, in coordinates.
    pub fn ideal_rows(&self, gens: &[GroupElem]) -> Result<Vec<Vec<u64>>> {
        let mut rows = Vec::new();
        for g in gens {
            for i in 0..self.rank() {
                rows.push(self.coords(&self.mul(&self.basis_element(i), g))?);
            }
        }
        Ok(rows)
    }

    /// Index of the basis element containing σ^k.
    pub fn orbit_index(&self, k: usize) -> usize {
        self.orbit_of[k % self.order()]
    }
}

fn tau_exp(tau: Involution, n: u32, k: usize) -> usize {
    let order = 1usize << (n - 1);
    let a = match tau {
        Involution::Inversion => order - 1,
        Involution::Semidihedral => order / 2 - 1,
    };
    (k * a) % order
}
