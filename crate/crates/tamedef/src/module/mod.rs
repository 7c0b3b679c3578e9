//! Finite-dimensional modules over a [`PresentedAlgebra`] and their homological invariants.
//!
//! A module is a representation: a vector space per vertex and a matrix per arrow,
//! `target-dim × source-dim`. Modules are left modules, so `P_v = Λe_v` has top `T_v`.

mod construct;
mod endo;
mod hom;

use std::fmt;
use std::sync::Arc;

use crate::linalg::{Mat, RowSpace};
use crate::quiver::PresentedAlgebra;
use crate::scalars::{FField, Fe};
use crate::{Error, Result};

pub use construct::{layered_module, stacked_uniserial, uniserial, Layer};
pub use endo::{Decomposition, IsoSettings};
pub use hom::{HomSpace, ModMap, ProjectiveCover};

#[derive(Clone)]
pub struct RepModule {
    alg: Arc<PresentedAlgebra>,
    dims: Vec<usize>,
    maps: Vec<Mat>,
}

impl fmt::Debug for RepModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RepModule{:?} over {}", self.dims, self.alg.name())
    }
}

/// One subspace per vertex, each given by the columns of a matrix.
pub type Subspaces = Vec<Mat>;

impl RepModule {
    /// Checks shapes and that every relation acts as zero.
    pub fn new(alg: Arc<PresentedAlgebra>, dims: Vec<usize>, maps: Vec<Mat>) -> Result<RepModule> {
        let m = RepModule::from_parts(alg, dims, maps)?;
        if !m.satisfies_relations() {
            return Err(Error::Construction("a relation does not act as zero".into()));
        }
        Ok(m)
    }

    fn from_parts(alg: Arc<PresentedAlgebra>, dims: Vec<usize>, maps: Vec<Mat>) -> Result<RepModule> {
        let q = alg.quiver();
        if dims.len() != q.vertex_count() || maps.len() != q.arrow_count() {
            return Err(Error::Construction("shape does not match the quiver".into()));
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] || m.field() != alg.field() {
                return Err(Error::Construction(format!("matrix for {} has the wrong shape", a.name)));
            }
        }
        Ok(RepModule { alg, dims, maps })
    }

    pub(crate) fn raw(alg: Arc<PresentedAlgebra>, dims: Vec<usize>, maps: Vec<Mat>) -> RepModule {
        debug_assert!(RepModule::from_parts(alg.clone(), dims.clone(), maps.clone()).is_ok());
        RepModule { alg, dims, maps }
    }

    pub fn zero(alg: &Arc<PresentedAlgebra>) -> RepModule {
        let f = alg.field();
        let maps = alg.quiver().arrows().iter().map(|_| Mat::zeros(f, 0, 0)).collect();
        RepModule::raw(alg.clone(), vec![0; alg.vertex_count()], maps)
    }

    /// The simple module T_v.
    pub fn simple(alg: &Arc<PresentedAlgebra>, v: usize) -> RepModule {
        let f = alg.field();
        let mut dims = vec![0; alg.vertex_count()];
        dims[v] = 1;
        let maps = alg
            .quiver()
            .arrows()
            .iter()
            .map(|a| Mat::zeros(f, dims[a.target], dims[a.source]))
            .collect();
        RepModule::raw(alg.clone(), dims, maps)
    }

    /// The indecomposable projective P_v = Λe_v on the normal-path basis.
    pub fn projective(alg: &Arc<PresentedAlgebra>, v: usize) -> RepModule {
        let (dims, coord) = projective_coords(alg, v);
        let f = alg.field();
        let q = alg.quiver();
        let mut maps: Vec<Mat> =
            q.arrows().iter().map(|a| Mat::zeros(f, dims[a.target], dims[a.source])).collect();
        for &i in alg.paths_from(v) {
            let (u, pos) = coord[&i];
            for (a, arrow) in q.arrows().iter().enumerate() {
                if arrow.source != u {
                    continue;
                }
                for &(j, c) in alg.arrow_times(a, i) {
                    let (t, tpos) = coord[&j];
                    debug_assert_eq!(t, arrow.target);
                    maps[a].set(tpos, pos, c);
                }
            }
        }
        RepModule::raw(alg.clone(), dims, maps)
    }

    pub fn algebra(&self) -> &Arc<PresentedAlgebra> {
        &self.alg
    }

    pub fn field(&self) -> FField {
        self.alg.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn map(&self, a: usize) -> &Mat {
        &self.maps[a]
    }

    pub fn maps(&self) -> &[Mat] {
        &self.maps
    }

    pub fn same_algebra(&self, other: &RepModule) -> Result<()> {
        if PresentedAlgebra::same(&self.alg, &other.alg) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// Matrix of a written word (right-to-left) from the source vertex space to the target.
    pub fn word_matrix(&self, w: &[u8]) -> Mat {
        let q = self.alg.quiver();
        let (s, _) = q.endpoints(w);
        let mut acc = Mat::identity(self.field(), self.dims[s]);
        for &a in w.iter().rev() {
            acc = self.maps[a as usize].mul(&acc);
        }
        acc
    }

    /// Matrices of every basis path of Λe_v acting on this module, indexed like `paths_from(v)`.
    pub fn path_matrices(&self, v: usize) -> Vec<Mat> {
        let alg = &self.alg;
        let from = alg.paths_from(v);
        let mut pos = std::collections::HashMap::with_capacity(from.len());
        let mut out: Vec<Mat> = Vec::with_capacity(from.len());
        for (k, &i) in from.iter().enumerate() {
            pos.insert(i, k);
            let m = match alg.tree(i) {
                None => Mat::identity(self.field(), self.dims[v]),
                Some((a, rest)) => self.maps[a as usize].mul(&out[pos[&rest]]),
            };
            out.push(m);
        }
        out
    }

    pub fn satisfies_relations(&self) -> bool {
        let f = self.field();
        let q = self.alg.quiver();
        self.alg.relations().iter().all(|r| {
            let Some((w, _)) = r.terms.iter().next() else { return true };
            let (s, t) = q.endpoints(&w.0);
            let mut acc = Mat::zeros(f, self.dims[t], self.dims[s]);
            for (w, &c) in &r.terms {
                acc.add_scaled(&self.word_matrix(&w.0), c);
            }
            acc.is_zero()
        })
    }

    pub fn direct_sum(parts: &[&RepModule]) -> Result<RepModule> {
        let first = parts.first().ok_or_else(|| Error::Construction("empty direct sum".into()))?;
        for p in parts {
            first.same_algebra(p)?;
        }
        let alg = first.alg.clone();
        let f = alg.field();
        let nv = alg.vertex_count();
        let dims: Vec<usize> = (0..nv).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let maps = alg
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let mut m = Mat::zeros(f, dims[arrow.target], dims[arrow.source]);
                let (mut r, mut c) = (0, 0);
                for p in parts {
                    m.set_block(r, c, &p.maps[a]);
                    r += p.dims[arrow.target];
                    c += p.dims[arrow.source];
                }
                m
            })
            .collect();
        Ok(RepModule::raw(alg, dims, maps))
    }

    /// The k-dual, a module over the opposite algebra.
    pub fn dual(&self) -> RepModule {
        let op = self.alg.opposite();
        let maps = self.maps.iter().map(|m| m.transpose()).collect();
        RepModule::raw(op, self.dims.clone(), maps)
    }

    /// Smallest submodule containing the given per-vertex vectors.
    pub fn generated(&self, gens: &[(usize, Vec<Fe>)]) -> Subspaces {
        let f = self.field();
        let q = self.alg.quiver();
        let mut spaces: Vec<RowSpace> = self.dims.iter().map(|&d| RowSpace::new(f, d)).collect();
        let mut stack: Vec<(usize, Vec<Fe>)> = Vec::new();
        for (v, x) in gens {
            if spaces[*v].insert(x) {
                stack.push((*v, x.clone()));
            }
        }
        while let Some((v, x)) = stack.pop() {
            for (a, arrow) in q.arrows().iter().enumerate() {
                if arrow.source != v {
                    continue;
                }
                let y = self.maps[a].mul_vec(&x);
                if spaces[arrow.target].insert(&y) {
                    stack.push((arrow.target, y));
                }
            }
        }
        spaces.into_iter().zip(&self.dims).map(|(s, &d)| rows_to_cols(f, d, s.basis())).collect()
    }

    pub fn radical(&self) -> Subspaces {
        let f = self.field();
        let q = self.alg.quiver();
        (0..self.dims.len())
            .map(|u| {
                let blocks: Vec<&Mat> =
                    q.arrows().iter().enumerate().filter(|(_, a)| a.target == u).map(|(i, _)| &self.maps[i]).collect();
                if blocks.is_empty() {
                    Mat::zeros(f, self.dims[u], 0)
                } else {
                    Mat::hstack(f, self.dims[u], &blocks).col_basis()
                }
            })
            .collect()
    }

    pub fn socle(&self) -> Subspaces {
        let f = self.field();
        let q = self.alg.quiver();
        (0..self.dims.len())
            .map(|u| {
                let blocks: Vec<&Mat> =
                    q.arrows().iter().enumerate().filter(|(_, a)| a.source == u).map(|(i, _)| &self.maps[i]).collect();
                if blocks.is_empty() {
                    Mat::identity(f, self.dims[u])
                } else {
                    let cols = self.dims[u];
                    Mat::vstack(f, cols, &blocks).kernel()
                }
            })
            .collect()
    }

    /// Multiplicities of the simples in the top M/rad M.
    pub fn top_dims(&self) -> Vec<usize> {
        self.radical().iter().zip(&self.dims).map(|(r, &d)| d - r.cols()).collect()
    }

    pub fn socle_dims(&self) -> Vec<usize> {
        self.socle().iter().map(|s| s.cols()).collect()
    }

    /// The submodule on the given subspaces, with its inclusion map.
    pub fn submodule(&self, sub: &Subspaces) -> (RepModule, ModMap) {
        let f = self.field();
        let q = self.alg.quiver();
        let dims: Vec<usize> = sub.iter().map(|s| s.cols()).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let img = self.maps[a].mul(&sub[arrow.source]);
                sub[arrow.target].solve(&img).expect("subspaces are closed under the arrows")
            })
            .collect();
        let _ = f;
        (RepModule::raw(self.alg.clone(), dims, maps), ModMap::new(sub.clone()))
    }

    /// The quotient by the given submodule, with its projection.
    pub fn quotient(&self, sub: &Subspaces) -> (RepModule, ModMap) {
        let f = self.field();
        let q = self.alg.quiver();
        let mut lifts = Vec::new();
        let mut projs = Vec::new();
        for (u, s) in sub.iter().enumerate() {
            let comp = s.complement_indices();
            let e = Mat::identity(f, self.dims[u]).select_cols(&comp);
            let full = Mat::hstack(f, self.dims[u], &[s, &e]);
            let inv = full.inverse().expect("basis extended to the whole space");
            projs.push(inv.block(s.cols(), 0, comp.len(), self.dims[u]));
            lifts.push(e);
        }
        let dims: Vec<usize> = lifts.iter().map(|e| e.cols()).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| projs[arrow.target].mul(&self.maps[a]).mul(&lifts[arrow.source]))
            .collect();
        (RepModule::raw(self.alg.clone(), dims, maps), ModMap::new(projs))
    }

    /// Dimension vectors of the radical layers, top first.
    pub fn radical_layers(&self) -> Vec<Vec<usize>> {
        let mut layers = Vec::new();
        let mut m = self.clone();
        while !m.is_zero() {
            let rad = m.radical();
            layers.push(m.dims.iter().zip(&rad).map(|(&d, r)| d - r.cols()).collect());
            m = m.submodule(&rad).0;
        }
        layers
    }

    /// Dimension vectors of the socle layers, bottom first.
    pub fn socle_layers(&self) -> Vec<Vec<usize>> {
        let mut layers = Vec::new();
        let mut m = self.clone();
        while !m.is_zero() {
            let soc = m.socle();
            layers.push(soc.iter().map(|s| s.cols()).collect());
            m = m.quotient(&soc).0;
        }
        layers
    }

    /// Uniserial with the given composition factors, top first.
    pub fn uniserial_factors(&self) -> Option<Vec<usize>> {
        let layers = self.radical_layers();
        let mut out = Vec::new();
        for l in layers {
            if l.iter().sum::<usize>() != 1 {
                return None;
            }
            out.push(l.iter().position(|&x| x == 1).unwrap());
        }
        Some(out)
    }

    pub fn is_simple(&self) -> bool {
        self.dim() == 1
    }

    /// Radical and socle layers as a compact string, e.g. `0|1⊕2|0`.
    pub fn shape(&self) -> String {
        self.radical_layers()
            .iter()
            .map(|l| {
                let parts: Vec<String> = l
                    .iter()
                    .enumerate()
                    .flat_map(|(v, &k)| std::iter::repeat_n(v.to_string(), k))
                    .collect();
                parts.join("⊕")
            })
            .collect::<Vec<_>>()
            .join("|")
    }
}

fn rows_to_cols(f: FField, d: usize, rows: &[Vec<Fe>]) -> Mat {
    if rows.is_empty() {
        return Mat::zeros(f, d, 0);
    }
    Mat::from_cols(f, d, rows)
}

/// Vertex dimensions of P_v and (vertex, position) of each basis path of Λe_v.
pub(crate) fn projective_coords(
    alg: &PresentedAlgebra,
    v: usize,
) -> (Vec<usize>, std::collections::HashMap<usize, (usize, usize)>) {
    let mut dims = vec![0; alg.vertex_count()];
    let mut coord = std::collections::HashMap::new();
    for &i in alg.paths_from(v) {
        let (_, t) = alg.ends(i);
        coord.insert(i, (t, dims[t]));
        dims[t] += 1;
    }
    (dims, coord)
}
