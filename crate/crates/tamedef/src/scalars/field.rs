use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// An element of GF(2^e): a polynomial over GF(2) of degree < e packed into the low bits.
pub type Fe = u8;

const MAX_E: u32 = 8;

// Primitive polynomials, so that x generates the multiplicative group.
const MODULI: [u16; 9] = [0, 0b11, 0b111, 0b1011, 0b1_0011, 0b10_0101, 0b100_0011, 0b1000_0011, 0b1_0001_1101];

struct Tables {
    exp: Vec<Fe>,
    log: Vec<u16>,
}

static TABLES: [OnceLock<Tables>; 9] = [const { OnceLock::new() }; 9];

fn tables(e: u32) -> &'static Tables {
    TABLES[e as usize].get_or_init(|| {
        let order = (1usize << e) - 1;
        let mut exp = vec![0u8; 2 * order.max(1)];
        let mut log = vec![0u16; 1 << e];
        let gen: u16 = if e == 1 { 1 } else { 2 };
        let mut x: u16 = 1;
        for i in 0..order {
            exp[i] = x as Fe;
            exp[i + order] = x as Fe;
            log[x as usize] = i as u16;
            x = clmul_mod(x, gen, MODULI[e as usize], e);
        }
        Tables { exp, log }
    })
}

fn clmul_mod(a: u16, b: u16, modulus: u16, e: u32) -> u16 {
    let mut acc: u32 = 0;
    for i in 0..16 {
        if b >> i & 1 == 1 {
            acc ^= (a as u32) << i;
        }
    }
    for bit in (e..32).rev() {
        if acc >> bit & 1 == 1 {
            acc ^= (modulus as u32) << (bit - e);
        }
    }
    acc as u16
}

/// The finite field GF(2^e), 1 ≤ e ≤ 8.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FField {
    e: u32,
}

impl Default for FField {
    fn default() -> Self {
        FField::gf2()
    }
}

impl FField {
    pub fn new(e: u32) -> Result<Self> {
        if !(1..=MAX_E).contains(&e) {
            return Err(Error::Domain(format!("field degree e={e} outside 1..={MAX_E}")));
        }
        Ok(FField { e })
    }

    pub const fn gf2() -> Self {
        FField { e: 1 }
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn size(&self) -> usize {
        1 << self.e
    }

    /// All elements, zero first.
    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.size()).map(|x| x as Fe)
    }

    pub fn contains(&self, a: Fe) -> bool {
        (a as usize) < self.size()
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        a ^ b
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        a ^ b
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        a
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.e == 1 {
            return 1;
        }
        let t = tables(self.e);
        t.exp[t.log[a as usize] as usize + t.log[b as usize] as usize]
    }

    pub fn inv(&self, a: Fe) -> Option<Fe> {
        if a == 0 {
            return None;
        }
        if self.e == 1 {
            return Some(1);
        }
        let t = tables(self.e);
        let order = self.size() - 1;
        Some(t.exp[(order - t.log[a as usize] as usize) % order])
    }

    #[inline]
    pub fn div(&self, a: Fe, b: Fe) -> Fe {
        self.mul(a, self.inv(b).expect("division by zero in GF(2^e)"))
    }

    pub fn pow(&self, a: Fe, k: u64) -> Fe {
        if k == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        if self.e == 1 {
            return 1;
        }
        let t = tables(self.e);
        let order = (self.size() - 1) as u64;
        t.exp[((t.log[a as usize] as u64 * (k % order)) % order) as usize]
    }

    pub fn frobenius(&self, a: Fe) -> Fe {
        self.mul(a, a)
    }

    /// Image of an integer under Z → GF(2) ⊂ GF(2^e).
    pub fn from_int(&self, k: i64) -> Fe {
        (k.rem_euclid(2)) as Fe
    }

    /// A generator of the multiplicative group.
    pub fn generator(&self) -> Fe {
        if self.e == 1 {
            1
        } else {
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_small() {
        for e in 1..=4 {
            let f = FField::new(e).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                    }
                }
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
            }
        }
    }

    #[test]
    fn frobenius_is_bijective() {
        for e in 1..=8 {
            let f = FField::new(e).unwrap();
            let mut seen = vec![false; f.size()];
            for a in f.elements() {
                seen[f.frobenius(a) as usize] = true;
            }
            assert!(seen.iter().all(|&s| s));
        }
    }

    #[test]
    fn multiplication_matches_carryless_product() {
        for e in 2..=8 {
            let f = FField::new(e).unwrap();
            for a in f.elements() {
                for b in f.elements().step_by(7) {
                    let want = clmul_mod(a as u16, b as u16, MODULI[e as usize], e) as Fe;
                    assert_eq!(f.mul(a, b), want);
                }
            }
        }
    }
}
