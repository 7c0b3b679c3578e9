//! Linear algebra over W_N = Z/2^N: Smith invariants, determinants and span membership.

use serde::{Deserialize, Serialize};

use crate::scalars::WittRing;
use crate::{Error, Result};

/// A finitely generated W_N-module, written as W_N^free ⊕ ⊕ Z/2^{e} for e in `torsion`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleStructure {
    pub free_rank: usize,
    pub torsion: Vec<u32>,
}

impl ModuleStructure {
    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Dimension of M/2M over GF(2).
    pub fn fiber_dim(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(format!("W^{}", self.free_rank));
        }
        for &e in &self.torsion {
            parts.push(if e == 1 { "Z/2".to_string() } else { format!("Z/2^{e}") });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" ⊕ ")
        }
    }
}

fn min_valuation(ring: WittRing, rows: &[Vec<u64>], from: usize, col_from: usize) -> Option<(usize, usize, u32)> {
    let mut best: Option<(usize, usize, u32)> = None;
    for (r, row) in rows.iter().enumerate().skip(from) {
        for (c, &x) in row.iter().enumerate().skip(col_from) {
            if ring.reduce(x) == 0 {
                continue;
            }
            let v = ring.valuation(x);
            if best.is_none_or(|b| v < b.2) {
                best = Some((r, c, v));
                if v == 0 {
                    return best;
                }
            }
        }
    }
    best
}

/// Valuations of the Smith invariants of a matrix over W_N.
///
/// Fails with a precision error when a nonzero invariant is divisible by 2^{N−2}, since such an
/// entry cannot be told apart from a zero of the untruncated ring.
pub fn smith_valuations(ring: WittRing, mat: &[Vec<u64>]) -> Result<Vec<u32>> {
    let n = ring.precision();
    let mut a: Vec<Vec<u64>> = mat.iter().map(|r| r.iter().map(|&x| ring.reduce(x)).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut k = 0;
    while k < a.len() && k < cols {
        let Some((r, c, v)) = min_valuation(ring, &a, k, k) else { break };
        if v + 2 >= n {
            return Err(Error::Precision {
                precision: n,
                detail: format!("Smith invariant 2^{v} is too close to 2^{n} to certify"),
            });
        }
        a.swap(k, r);
        for row in a.iter_mut() {
            row.swap(k, c);
        }
        let p = a[k][k];
        let u = ring.inv(p >> v).expect("odd part is a unit");
        for i in k + 1..a.len() {
            let f = ring.mul(a[i][k] >> v, u);
            if f != 0 {
                for j in k..cols {
                    a[i][j] = ring.sub(a[i][j], ring.mul(f, a[k][j]));
                }
            }
        }
        for j in k + 1..cols {
            let f = ring.mul(a[k][j] >> v, u);
            if f != 0 {
                for i in k..a.len() {
                    a[i][j] = ring.sub(a[i][j], ring.mul(f, a[i][k]));
                }
            }
        }
        out.push(v);
        k += 1;
    }
    Ok(out)
}

/// Structure of W_N^ambient modulo the row span of `relators`.
pub fn quotient_structure(ring: WittRing, ambient: usize, relators: &[Vec<u64>]) -> Result<ModuleStructure> {
    let vals = smith_valuations(ring, relators)?;
    let torsion: Vec<u32> = vals.iter().copied().filter(|&v| v > 0).collect();
    Ok(ModuleStructure { free_rank: ambient - vals.len(), torsion })
}

/// Determinant of a square matrix over W_N.
///
/// Elimination uses a pivot of least valuation in each column, so every quotient taken is exact.
pub fn det(ring: WittRing, mat: &[Vec<u64>]) -> u64 {
    let mut a: Vec<Vec<u64>> = mat.iter().map(|r| r.iter().map(|&x| ring.reduce(x)).collect()).collect();
    let n = a.len();
    let mut d = 1u64;
    for k in 0..n {
        let pivot = (k..n).filter(|&i| a[i][k] != 0).min_by_key(|&i| ring.valuation(a[i][k]));
        let Some(p) = pivot else { return 0 };
        if p != k {
            a.swap(p, k);
            d = ring.neg(d);
        }
        let v = ring.valuation(a[k][k]);
        let u = ring.inv(a[k][k] >> v).expect("odd part is a unit");
        d = ring.mul(d, a[k][k]);
        for i in k + 1..n {
            let f = ring.mul(a[i][k] >> v, u);
            if f != 0 {
                for j in k..n {
                    a[i][j] = ring.sub(a[i][j], ring.mul(f, a[k][j]));
                }
            }
        }
    }
    d
}

/// Row span of a matrix over W_N in a form that decides membership.
///
/// When a pivot 2^v·u is taken, the multiple 2^{N−v} of its row no longer reaches the pivot
/// column and is fed back into the remaining rows, so reduction against the pivots is complete.
#[derive(Clone, Debug)]
pub struct Span {
    ring: WittRing,
    pivots: Vec<(usize, u32, Vec<u64>)>,
}

impl Span {
    pub fn new(ring: WittRing, rows: &[Vec<u64>]) -> Self {
        let n = ring.precision();
        let mut rest: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|&x| ring.reduce(x)).collect()).collect();
        let cols = rest.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        for c in 0..cols {
            let best = (0..rest.len()).filter(|&i| rest[i][c] != 0).min_by_key(|&i| ring.valuation(rest[i][c]));
            let Some(b) = best else { continue };
            let row = rest.swap_remove(b);
            let v = ring.valuation(row[c]);
            let u = ring.inv(row[c] >> v).expect("odd part is a unit");
            for other in rest.iter_mut() {
                let f = ring.mul(other[c] >> v, u);
                if f != 0 {
                    for j in c..cols {
                        other[j] = ring.sub(other[j], ring.mul(f, row[j]));
                    }
                }
            }
            if v > 0 {
                let m = ring.pow(2, u64::from(n - v));
                let extra: Vec<u64> = row.iter().map(|&x| ring.mul(x, m)).collect();
                if extra.iter().any(|&x| x != 0) {
                    rest.push(extra);
                }
            }
            pivots.push((c, v, row));
        }
        Span { ring, pivots }
    }

    /// Reduces `x` against the span; the result is zero iff `x` lies in it.
    pub fn reduce(&self, x: &[u64]) -> Vec<u64> {
        let ring = self.ring;
        let mut x: Vec<u64> = x.iter().map(|&a| ring.reduce(a)).collect();
        for (c, v, row) in &self.pivots {
            if x[*c] == 0 || ring.valuation(x[*c]) < *v {
                continue;
            }
            let u = ring.inv(row[*c] >> v).expect("odd part is a unit");
            let f = ring.mul(x[*c] >> v, u);
            for (xj, &rj) in x.iter_mut().zip(row) {
                *xj = ring.sub(*xj, ring.mul(f, rj));
            }
        }
        x
    }

    pub fn contains(&self, x: &[u64]) -> bool {
        self.reduce(x).iter().all(|&a| a == 0)
    }
}
