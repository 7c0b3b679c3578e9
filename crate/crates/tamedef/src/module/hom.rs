use crate::linalg::Mat;
use crate::scalars::{FField, Fe};
use crate::{Error, Result};

use super::{projective_coords, RepModule, Subspaces};

/// A module homomorphism: one matrix per vertex (`target-dim × source-dim`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModMap {
    pub blocks: Vec<Mat>,
}

impl ModMap {
    pub fn new(blocks: Vec<Mat>) -> ModMap {
        ModMap { blocks }
    }

    pub fn identity(m: &RepModule) -> ModMap {
        ModMap::new(m.dims().iter().map(|&d| Mat::identity(m.field(), d)).collect())
    }

    pub fn zero(src: &RepModule, dst: &RepModule) -> ModMap {
        ModMap::new(src.dims().iter().zip(dst.dims()).map(|(&s, &t)| Mat::zeros(src.field(), t, s)).collect())
    }

    /// self ∘ other.
    pub fn compose(&self, other: &ModMap) -> ModMap {
        ModMap::new(self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.mul(b)).collect())
    }

    pub fn add_scaled(&mut self, other: &ModMap, c: Fe) {
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            a.add_scaled(b, c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }

    pub fn is_iso(&self) -> bool {
        self.blocks.iter().all(|b| b.is_invertible())
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(|b| b.rank()).sum()
    }

    pub fn flatten(&self) -> Vec<Fe> {
        self.blocks.iter().flat_map(|b| b.data().iter().copied()).collect()
    }

    /// Block-diagonal matrix on the total space.
    pub fn full_matrix(&self, f: FField) -> Mat {
        let rows = self.blocks.iter().map(|b| b.rows()).sum();
        let cols = self.blocks.iter().map(|b| b.cols()).sum();
        let mut m = Mat::zeros(f, rows, cols);
        let (mut r, mut c) = (0, 0);
        for b in &self.blocks {
            m.set_block(r, c, b);
            r += b.rows();
            c += b.cols();
        }
        m
    }

    /// Whether this is a module map between the given modules.
    pub fn intertwines(&self, src: &RepModule, dst: &RepModule) -> bool {
        let q = src.algebra().quiver();
        q.arrows().iter().enumerate().all(|(a, arrow)| {
            self.blocks[arrow.target].mul(src.map(a)) == dst.map(a).mul(&self.blocks[arrow.source])
        })
    }

    pub fn image(&self) -> Subspaces {
        self.blocks.iter().map(|b| b.col_basis()).collect()
    }

    pub fn kernel(&self) -> Subspaces {
        self.blocks.iter().map(|b| b.kernel()).collect()
    }
}

/// A basis of Hom(M, N).
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub basis: Vec<ModMap>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Σ cᵢ·basisᵢ.
    pub fn combination(&self, coeffs: &[Fe], src: &RepModule, dst: &RepModule) -> ModMap {
        let mut acc = ModMap::zero(src, dst);
        for (b, &c) in self.basis.iter().zip(coeffs) {
            acc.add_scaled(b, c);
        }
        acc
    }
}

/// A projective cover π: P → M with P = ⊕ P_{v_k}.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    /// Vertex of each top generator.
    pub gens: Vec<usize>,
    pub cover: RepModule,
    pub pi: ModMap,
    /// Per vertex of P: (generator, algebra basis index) of each coordinate.
    pub labels: Vec<Vec<(usize, usize)>>,
}

impl RepModule {
    pub fn projective_cover(&self) -> ProjectiveCover {
        let alg = self.algebra().clone();
        let f = self.field();
        let rad = self.radical();
        let mut gens = Vec::new();
        let mut gen_vecs = Vec::new();
        for (v, r) in rad.iter().enumerate() {
            for j in r.complement_indices() {
                let mut x = vec![0; self.dims()[v]];
                x[j] = 1;
                gens.push(v);
                gen_vecs.push(x);
            }
        }
        let pieces: Vec<RepModule> = gens.iter().map(|&v| RepModule::projective(&alg, v)).collect();
        let cover = if pieces.is_empty() {
            RepModule::zero(&alg)
        } else {
            RepModule::direct_sum(&pieces.iter().collect::<Vec<_>>()).expect("same algebra")
        };
        let nv = alg.vertex_count();
        let mut labels: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nv];
        let mut cols: Vec<Vec<Vec<Fe>>> = vec![Vec::new(); nv];
        let mut path_cache: Vec<Option<Vec<Mat>>> = vec![None; nv];
        for (k, (&v, x)) in gens.iter().zip(&gen_vecs).enumerate() {
            let (_, coord) = projective_coords(&alg, v);
            let mats = path_cache[v].get_or_insert_with(|| self.path_matrices(v));
            // Coordinates of P_v are ordered by position inside each vertex space.
            let mut entries: Vec<(usize, usize, usize)> =
                alg.paths_from(v).iter().enumerate().map(|(idx, &i)| (coord[&i].0, coord[&i].1, idx)).collect();
            entries.sort();
            for (u, _, idx) in entries {
                labels[u].push((k, alg.paths_from(v)[idx]));
                cols[u].push(mats[idx].mul_vec(x));
            }
        }
        let pi = ModMap::new(
            (0..nv)
                .map(|u| {
                    if cols[u].is_empty() {
                        Mat::zeros(f, self.dims()[u], 0)
                    } else {
                        Mat::from_cols(f, self.dims()[u], &cols[u])
                    }
                })
                .collect(),
        );
        debug_assert!(pi.intertwines(&cover, self));
        ProjectiveCover { gens, cover, pi, labels }
    }

    /// All module maps M → N.
    pub fn hom(&self, other: &RepModule) -> Result<HomSpace> {
        self.same_algebra(other)?;
        let pc = self.projective_cover();
        Ok(hom_via_cover(self, &pc, other))
    }

    pub fn hom_dim(&self, other: &RepModule) -> Result<usize> {
        Ok(self.hom(other)?.dim())
    }

    pub fn end(&self) -> HomSpace {
        self.hom(self).expect("same algebra")
    }

    /// Ω(M): the kernel of the projective cover.
    pub fn syzygy(&self) -> Result<RepModule> {
        if self.has_projective_summand() {
            return Err(Error::ProjectiveSummand);
        }
        Ok(self.syzygy_unchecked())
    }

    pub(crate) fn syzygy_unchecked(&self) -> RepModule {
        let pc = self.projective_cover();
        let ker = pc.pi.kernel();
        pc.cover.submodule(&ker).0
    }

    /// Ω⁻¹(M): the cokernel of the injective hull, computed as DΩD.
    pub fn cosyzygy(&self) -> Result<RepModule> {
        if self.has_projective_summand() {
            return Err(Error::ProjectiveSummand);
        }
        Ok(self.dual().syzygy_unchecked().dual())
    }

    /// Ω^k for k ∈ ℤ.
    pub fn omega(&self, k: i32) -> Result<RepModule> {
        let mut m = self.clone();
        for _ in 0..k.unsigned_abs() {
            m = if k > 0 { m.syzygy()? } else { m.cosyzygy()? };
        }
        Ok(m)
    }

    /// Whether some P_v splits off: over a self-injective algebra this happens exactly
    /// when the socle element of P_v acts non-trivially.
    pub fn has_projective_summand(&self) -> bool {
        let alg = self.algebra().clone();
        (0..alg.vertex_count()).any(|v| {
            if self.dims()[v] == 0 {
                return false;
            }
            let p = RepModule::projective(&alg, v);
            let soc = p.socle();
            let (_, coord) = projective_coords(&alg, v);
            let mats = self.path_matrices(v);
            for (u, s) in soc.iter().enumerate() {
                for c in 0..s.cols() {
                    let mut acc = Mat::zeros(self.field(), self.dims()[u], self.dims()[v]);
                    for (idx, &i) in alg.paths_from(v).iter().enumerate() {
                        let (t, pos) = coord[&i];
                        if t == u && s.get(pos, c) != 0 {
                            acc.add_scaled(&mats[idx], s.get(pos, c));
                        }
                    }
                    if !acc.is_zero() {
                        return true;
                    }
                }
            }
            false
        })
    }

    /// Dimension of Hom modulo maps factoring through a projective, using that every such
    /// map factors through the projective cover of the target.
    pub fn stable_hom_dim(&self, other: &RepModule) -> Result<usize> {
        self.same_algebra(other)?;
        let h = self.hom(other)?;
        if h.dim() == 0 {
            return Ok(0);
        }
        let pc = other.projective_cover();
        let through = self.hom(&pc.cover)?;
        let f = self.field();
        let vecs: Vec<Vec<Fe>> = through.basis.iter().map(|g| pc.pi.compose(g).flatten()).collect();
        let len = h.basis[0].flatten().len();
        let rank = if vecs.is_empty() || len == 0 { 0 } else { Mat::from_rows(f, len, &vecs).rank() };
        Ok(h.dim() - rank)
    }

    pub fn stable_end_dim(&self) -> usize {
        self.stable_hom_dim(self).expect("same algebra")
    }

    /// dim Ext¹(M, N) from 0 → ΩM → P → M → 0.
    pub fn ext1_dim(&self, other: &RepModule) -> Result<usize> {
        self.same_algebra(other)?;
        let pc = self.projective_cover();
        let omega = pc.cover.submodule(&pc.pi.kernel()).0;
        let hom_p: usize = pc.gens.iter().map(|&v| other.dims()[v]).sum();
        let hom_omega = omega.hom_dim(other)?;
        let hom_m = hom_via_cover(self, &pc, other).dim();
        Ok(hom_omega + hom_m - hom_p)
    }
}

/// Hom(M, N) by solving for the images y_k ∈ N_{v_k} of the top generators of M.
fn hom_via_cover(m: &RepModule, pc: &ProjectiveCover, n: &RepModule) -> HomSpace {
    let f = m.field();
    let alg = m.algebra().clone();
    let nv = alg.vertex_count();
    let offsets: Vec<usize> = pc
        .gens
        .iter()
        .scan(0, |acc, &v| {
            let o = *acc;
            *acc += n.dims()[v];
            Some(o)
        })
        .collect();
    let unknowns: usize = pc.gens.iter().map(|&v| n.dims()[v]).sum();
    if unknowns == 0 {
        return HomSpace { basis: Vec::new() };
    }
    let mut path_mats: Vec<Option<Vec<Mat>>> = vec![None; nv];
    let mut path_pos: Vec<std::collections::HashMap<usize, usize>> = vec![Default::default(); nv];
    for &v in &pc.gens {
        if path_mats[v].is_none() {
            path_mats[v] = Some(n.path_matrices(v));
            path_pos[v] = alg.paths_from(v).iter().enumerate().map(|(k, &i)| (i, k)).collect();
        }
    }
    // Y_u: P_u → N_u as a linear function of the unknowns; column j of P_u is label (k, i).
    let label_block = |u: usize, col: usize| -> (usize, &Mat) {
        let (k, i) = pc.labels[u][col];
        let v = pc.gens[k];
        (k, &path_mats[v].as_ref().unwrap()[path_pos[v][&i]])
    };
    let mut eq_rows: Vec<Vec<Fe>> = Vec::new();
    for u in 0..nv {
        if n.dims()[u] == 0 {
            continue;
        }
        let ker = pc.pi.blocks[u].kernel();
        for z in 0..ker.cols() {
            let mut block = Mat::zeros(f, n.dims()[u], unknowns);
            for col in 0..ker.rows() {
                let c = ker.get(col, z);
                if c == 0 {
                    continue;
                }
                let (k, pm) = label_block(u, col);
                let off = offsets[k];
                for r in 0..pm.rows() {
                    for s in 0..pm.cols() {
                        let x = pm.get(r, s);
                        if x != 0 {
                            let cur = block.get(r, off + s);
                            block.set(r, off + s, cur ^ f.mul(c, x));
                        }
                    }
                }
            }
            for r in 0..block.rows() {
                if block.row(r).iter().any(|&x| x != 0) {
                    eq_rows.push(block.row(r).to_vec());
                }
            }
        }
    }
    let sol = if eq_rows.is_empty() {
        Mat::identity(f, unknowns)
    } else {
        Mat::from_rows(f, unknowns, &eq_rows).kernel()
    };
    let sections: Vec<Mat> = (0..nv)
        .map(|u| {
            if m.dims()[u] == 0 {
                Mat::zeros(f, pc.cover.dims()[u], 0)
            } else {
                pc.pi.blocks[u].solve(&Mat::identity(f, m.dims()[u])).expect("projective cover is onto")
            }
        })
        .collect();
    let basis = (0..sol.cols())
        .map(|s| {
            let y = sol.col(s);
            let blocks = (0..nv)
                .map(|u| {
                    let mut yu = Mat::zeros(f, n.dims()[u], pc.cover.dims()[u]);
                    for col in 0..pc.cover.dims()[u] {
                        let (k, pm) = label_block(u, col);
                        let v = pc.gens[k];
                        let yk = &y[offsets[k]..offsets[k] + n.dims()[v]];
                        let img = pm.mul_vec(yk);
                        for (r, &x) in img.iter().enumerate() {
                            yu.set(r, col, x);
                        }
                    }
                    yu.mul(&sections[u])
                })
                .collect();
            ModMap::new(blocks)
        })
        .collect();
    HomSpace { basis }
}
