use std::sync::Arc;

use crate::linalg::Mat;
use crate::quiver::PresentedAlgebra;
use crate::scalars::{FField, Fe};
use crate::{Error, Result};

use super::{RepModule, Subspaces};

const MAX_BRANCHES: usize = 4096;

/// One radical layer: the simples it contains, with repetition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layer(pub Vec<usize>);

impl Layer {
    pub fn simple(v: usize) -> Layer {
        Layer(vec![v])
    }

    pub fn dims(&self, nv: usize) -> Vec<usize> {
        let mut d = vec![0; nv];
        for &v in &self.0 {
            d[v] += 1;
        }
        d
    }
}

/// The unique quotient of P_v whose radical layers are `layers` (top first).
///
/// Layer by layer, the candidates are cut down by every choice of subspace of the current
/// layer, keeping one representative per isomorphism class. More than one surviving class
/// is reported as an error.
pub fn layered_module(alg: &Arc<PresentedAlgebra>, layers: &[Layer]) -> Result<RepModule> {
    let nv = alg.vertex_count();
    let targets: Vec<Vec<usize>> = layers.iter().map(|l| l.dims(nv)).collect();
    let top = targets.first().ok_or_else(|| Error::Construction("no layers given".into()))?;
    if top.iter().sum::<usize>() != 1 {
        return Err(Error::Construction("the top layer must be a single simple".into()));
    }
    let v = top.iter().position(|&x| x == 1).unwrap();
    let mut cands = vec![RepModule::projective(alg, v)];
    for depth in 1..=targets.len() {
        let want = targets.get(depth).cloned().unwrap_or_else(|| vec![0; nv]);
        let mut next: Vec<RepModule> = Vec::new();
        for q in &cands {
            for m in cut_layer(q, depth, &want)? {
                if let Some(next_want) = targets.get(depth + 1) {
                    let layers = m.radical_layers();
                    let avail = layers.get(depth + 1).cloned().unwrap_or_else(|| vec![0; nv]);
                    if avail.iter().zip(next_want).any(|(a, w)| a < w) {
                        continue;
                    }
                }
                let mut dup = false;
                for n in &next {
                    if m.is_isomorphic(n)? {
                        dup = true;
                        break;
                    }
                }
                if !dup {
                    next.push(m);
                }
                if next.len() > MAX_BRANCHES {
                    return Err(Error::Capacity("too many non-isomorphic candidates".into()));
                }
            }
        }
        cands = next;
        if cands.is_empty() {
            break;
        }
    }
    let shape: Vec<String> = layers.iter().map(|l| format!("{:?}", l.0)).collect();
    match cands.len() {
        0 => Err(Error::Construction(format!("no quotient of P_{v} has layers {}", shape.join("|")))),
        1 => Ok(cands.pop().unwrap()),
        k => Err(Error::Construction(format!("{k} non-isomorphic quotients of P_{v} have layers {}", shape.join("|")))),
    }
}

/// All quotients of `q` by submodules generated inside rad^depth q that leave `want` in
/// layer `depth`.
fn cut_layer(q: &RepModule, depth: usize, want: &[usize]) -> Result<Vec<RepModule>> {
    let f = q.field();
    let (deep, incl) = radical_power(q, depth);
    let deeper_in_deep = deep.radical();
    let have: Vec<usize> = deep.dims().iter().zip(&deeper_in_deep).map(|(&d, r)| d - r.cols()).collect();
    if have.iter().zip(want).any(|(h, w)| h < w) {
        return Ok(Vec::new());
    }
    // Per vertex, complements of rad(rad^depth q) inside rad^depth q, in q's coordinates.
    let tops: Vec<Mat> = (0..q.dims().len())
        .map(|u| {
            let idx = deeper_in_deep[u].complement_indices();
            incl[u].mul(&Mat::identity(f, deep.dims()[u]).select_cols(&idx))
        })
        .collect();
    let choices: Vec<Vec<Mat>> = (0..q.dims().len())
        .map(|u| subspaces(f, have[u], have[u] - want[u]))
        .collect::<Result<_>>()?;
    let total: usize = choices.iter().map(|c| c.len()).product();
    if total > MAX_BRANCHES * 16 {
        return Err(Error::Capacity(format!("{total} subspace choices in one layer")));
    }
    let mut out = Vec::with_capacity(total);
    let mut pick = vec![0usize; choices.len()];
    loop {
        let mut gens: Vec<(usize, Vec<Fe>)> = Vec::new();
        for (u, &k) in pick.iter().enumerate() {
            let w = &choices[u][k];
            for c in 0..w.cols() {
                gens.push((u, tops[u].mul_vec(&w.col(c))));
            }
        }
        let sub = q.generated(&gens);
        out.push(q.quotient(&sub).0);
        let mut u = 0;
        loop {
            if u == pick.len() {
                return Ok(out);
            }
            pick[u] += 1;
            if pick[u] < choices[u].len() {
                break;
            }
            pick[u] = 0;
            u += 1;
        }
    }
}

/// rad^k(M) as a module with its per-vertex inclusion into M.
fn radical_power(m: &RepModule, k: usize) -> (RepModule, Subspaces) {
    let f = m.field();
    let mut cur = m.clone();
    let mut incl: Subspaces = m.dims().iter().map(|&d| Mat::identity(f, d)).collect();
    for _ in 0..k {
        let rad = cur.radical();
        incl = incl.iter().zip(&rad).map(|(i, r)| i.mul(r)).collect();
        cur = cur.submodule(&rad).0;
    }
    (cur, incl)
}

/// Every k-dimensional subspace of F^n, as column-basis matrices in reduced echelon form.
pub(crate) fn subspaces(f: FField, n: usize, k: usize) -> Result<Vec<Mat>> {
    if k > n {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        // Free entries: row r may be nonzero in non-pivot columns after pivots[r].
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|r| {
                let piv = pivots.clone();
                (piv[r] + 1..n).filter(move |c| !piv.contains(c)).map(move |c| (r, c))
            })
            .collect();
        let count = f.size().checked_pow(free.len() as u32).filter(|&c| c <= MAX_BRANCHES * 16);
        let Some(count) = count else {
            return Err(Error::Capacity(format!("too many {k}-subspaces of a {n}-space")));
        };
        for code in 0..count {
            let mut rows = vec![vec![0 as Fe; n]; k];
            for (r, &p) in pivots.iter().enumerate() {
                rows[r][p] = 1;
            }
            let mut c = code;
            for &(r, col) in &free {
                rows[r][col] = (c % f.size()) as Fe;
                c /= f.size();
            }
            out.push(if k == 0 { Mat::zeros(f, n, 0) } else { Mat::from_cols(f, n, &rows) });
        }
        if out.len() > MAX_BRANCHES * 16 {
            return Err(Error::Capacity(format!("too many {k}-subspaces of a {n}-space")));
        }
        // Next pivot combination.
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if pivots[i] < n - k + i {
                pivots[i] += 1;
                for j in i + 1..k {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// The uniserial module with the given composition factors, top first.
pub fn uniserial(alg: &Arc<PresentedAlgebra>, factors: &[usize]) -> Result<RepModule> {
    let layers: Vec<Layer> = factors.iter().map(|&v| Layer::simple(v)).collect();
    layered_module(alg, &layers)
}

/// The uniserial module made of `m` copies of the factor sequence of V stacked on top of
/// each other.
pub fn stacked_uniserial(alg: &Arc<PresentedAlgebra>, factors: &[usize], m: usize) -> Result<RepModule> {
    let all: Vec<usize> = factors.iter().copied().cycle().take(factors.len() * m).collect();
    uniserial(alg, &all)
}
