use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::module::{HomSpace, ModMap, RepModule};
use crate::scalars::Fe;
use crate::Result;

const EXHAUSTIVE_BITS: u32 = 14;
const RANDOM_SAMPLES: usize = 2048;

/// Elements of a Hom space: all of them when few, else a seeded sample.
pub(crate) fn elements(h: &HomSpace, src: &RepModule, dst: &RepModule, seed: u64) -> Vec<ModMap> {
    let f = src.field();
    let q = f.size();
    let bits = f.degree() * h.dim() as u32;
    let coeff_sets: Vec<Vec<Fe>> = if bits <= EXHAUSTIVE_BITS {
        (0..q.pow(h.dim() as u32))
            .map(|mut code| {
                (0..h.dim())
                    .map(|_| {
                        let c = (code % q) as Fe;
                        code /= q;
                        c
                    })
                    .collect()
            })
            .collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..RANDOM_SAMPLES).map(|_| (0..h.dim()).map(|_| rng.gen_range(0..q) as Fe).collect()).collect()
    };
    coeff_sets.iter().map(|c| h.combination(c, src, dst)).collect()
}

pub(crate) fn power(x: &ModMap, k: usize) -> ModMap {
    ModMap::new(x.blocks.iter().map(|b| b.pow(k as u64)).collect())
}

/// M / x^k M.
pub(crate) fn truncate(m: &RepModule, x: &ModMap, k: usize) -> RepModule {
    m.quotient(&power(x, k).image()).0
}

/// Evidence that a module is free over k[t]/(t^m) with cokernel V.
#[derive(Clone, Debug, Serialize)]
pub struct LiftCheck {
    pub m: usize,
    pub dim: usize,
    pub end_dim: usize,
    /// Whether some endomorphism t satisfies all conditions.
    pub found: bool,
    /// Whether the search over End was exhaustive.
    pub exhaustive: bool,
    pub seed: u64,
}

/// Looks for t ∈ End(U) with t^m = 0, rank t^{m−1} = dim V (so U is free of rank dim V)
/// and U/tU ≅ V.
pub(crate) fn find_lift(u: &RepModule, v: &RepModule, m: usize, seed: u64) -> Result<(LiftCheck, Option<ModMap>)> {
    let end = u.end();
    let f = u.field();
    let exhaustive = f.degree() * end.dim() as u32 <= EXHAUSTIVE_BITS;
    let mut check = LiftCheck { m, dim: u.dim(), end_dim: end.dim(), found: false, exhaustive, seed };
    if u.dim() != m * v.dim() || m == 0 {
        return Ok((check, None));
    }
    for t in elements(&end, u, u, seed) {
        if !power(&t, m).is_zero() || power(&t, m - 1).rank() != v.dim() {
            continue;
        }
        if u.quotient(&t.image()).0.is_isomorphic(v)? {
            check.found = true;
            return Ok((check, Some(t)));
        }
    }
    Ok((check, None))
}

/// A nilpotent endomorphism of exact index `k`, if End(M) has one.
pub(crate) fn nilpotent_of_index(m: &RepModule, k: usize, seed: u64) -> Option<ModMap> {
    let end = m.end();
    elements(&end, m, m, seed)
        .into_iter()
        .find(|t| power(t, k).is_zero() && (k == 0 || !power(t, k - 1).is_zero()))
}
