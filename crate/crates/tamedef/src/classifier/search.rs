use std::collections::HashMap;

use serde::Serialize;

use crate::linalg::{Mat, RowSpace};
use crate::module::RepModule;
use crate::scalars::Fe;
use crate::{Error, Result};

use super::{Instance, ModuleSummary};

const MAX_CLASSES: usize = 20_000;

#[derive(Clone, Debug, Serialize)]
pub struct FoundModule {
    pub module: ModuleSummary,
    pub indecomposable: Option<bool>,
    pub stable_end_dim: usize,
    /// Label of the isomorphic recipe module, if any.
    pub recipe: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CompletenessSummary {
    pub instance: String,
    pub family: String,
    pub n: u32,
    /// Dimension vectors of the height-one Brauer characters searched.
    pub multisets: Vec<Vec<usize>>,
    pub dim_cap: usize,
    pub exhaustive: bool,
    /// Isomorphism classes of all modules (decomposable included) with a searched dimension vector.
    pub classes: usize,
    pub accepted: Vec<FoundModule>,
    /// Indecomposables whose stable endomorphism ring is bigger than k.
    pub rejected: Vec<FoundModule>,
    /// Recipes within the dimension cap.
    pub expected: Vec<String>,
    pub pass: bool,
}

/// Enumerates every module with a height-one dimension vector and checks that those with
/// stable endomorphism ring k are exactly the recipe modules.
pub fn completeness_search(inst: &Instance, dim_cap: Option<usize>) -> Result<CompletenessSummary> {
    let f = &inst.family;
    let dm = f.decomposition_matrix(inst.n)?;
    let mut multisets: Vec<Vec<usize>> = Vec::new();
    for row in dm.rows_of_height(1) {
        let d: Vec<usize> = row.iter().map(|&x| x as usize).collect();
        if !multisets.contains(&d) {
            multisets.push(d);
        }
    }
    let full = multisets.iter().map(|d| d.iter().sum::<usize>()).max().unwrap_or(0);
    let cap = dim_cap.unwrap_or(full);
    let recipes: Vec<(String, RepModule)> = f
        .mo_recipes(inst.n)?
        .into_iter()
        .map(|r| r.build(&inst.algebra).map(|m| (r.label, m)))
        .collect::<Result<_>>()?;
    let expected: Vec<String> = recipes.iter().filter(|(_, m)| m.dim() <= cap).map(|(l, _)| l.clone()).collect();

    let mut enumerator = Enumerator { inst, memo: HashMap::new() };
    let mut classes = 0;
    let mut accepted = Vec::new();
    let mut rejected = Vec::new();
    for d in &multisets {
        if d.iter().sum::<usize>() > cap {
            continue;
        }
        let all = enumerator.all(d)?;
        classes += all.len();
        for m in all {
            if m.has_projective_summand() {
                continue;
            }
            let st = m.stable_end_dim();
            let ind = match m.is_indecomposable() {
                Ok(b) => Some(b),
                Err(Error::Inconclusive(_)) => None,
                Err(e) => return Err(e),
            };
            let mut recipe = None;
            for (l, r) in &recipes {
                if r.dims() == m.dims() && r.is_isomorphic(&m)? {
                    recipe = Some(l.clone());
                    break;
                }
            }
            let found = FoundModule { module: ModuleSummary::of(&m), indecomposable: ind, stable_end_dim: st, recipe };
            if st == 1 {
                accepted.push(found);
            } else if ind == Some(true) {
                rejected.push(found);
            }
        }
    }
    let exhaustive = full <= cap;
    let mut got: Vec<String> = accepted.iter().filter_map(|a| a.recipe.clone()).collect();
    got.sort();
    got.dedup();
    let mut want = expected.clone();
    want.sort();
    let pass = accepted.iter().all(|a| a.recipe.is_some()) && accepted.len() == expected.len() && got == want;
    Ok(CompletenessSummary {
        instance: inst.label(),
        family: f.name().into(),
        n: inst.n,
        multisets,
        dim_cap: cap,
        exhaustive,
        classes,
        accepted,
        rejected,
        expected,
        pass,
    })
}

struct Enumerator<'a> {
    inst: &'a Instance,
    memo: HashMap<Vec<usize>, Vec<RepModule>>,
}

impl Enumerator<'_> {
    /// Representatives of all isomorphism classes with dimension vector `d`, each built as
    /// an extension of a smaller module by a simple submodule.
    fn all(&mut self, d: &[usize]) -> Result<Vec<RepModule>> {
        if let Some(v) = self.memo.get(d) {
            return Ok(v.clone());
        }
        let alg = &self.inst.algebra;
        let out = if d.iter().all(|&x| x == 0) {
            vec![RepModule::zero(alg)]
        } else {
            let mut reps: Vec<(Key, RepModule)> = Vec::new();
            for v in 0..d.len() {
                if d[v] == 0 {
                    continue;
                }
                let mut smaller = d.to_vec();
                smaller[v] -= 1;
                for m in self.all(&smaller)? {
                    for e in extensions(&m, v)? {
                        let key = Key::of(&e);
                        let mut dup = false;
                        for (k, r) in &reps {
                            if *k == key && r.is_isomorphic(&e)? {
                                dup = true;
                                break;
                            }
                        }
                        if !dup {
                            reps.push((key, e));
                        }
                        if reps.len() > MAX_CLASSES {
                            return Err(Error::Capacity(format!("more than {MAX_CLASSES} classes at {d:?}")));
                        }
                    }
                }
            }
            reps.into_iter().map(|(_, m)| m).collect()
        };
        self.memo.insert(d.to_vec(), out.clone());
        Ok(out)
    }
}

/// Cheap isomorphism invariants.
#[derive(PartialEq, Eq)]
struct Key {
    radical: Vec<Vec<usize>>,
    socle: Vec<Vec<usize>>,
    end: usize,
}

impl Key {
    fn of(m: &RepModule) -> Key {
        Key { radical: m.radical_layers(), socle: m.socle_layers(), end: m.end().dim() }
    }
}

/// Every module E with T_v ⊆ E and E/T_v ≅ M, one per class in Ext¹(M, T_v).
fn extensions(m: &RepModule, v: usize) -> Result<Vec<RepModule>> {
    let alg = m.algebra().clone();
    let f = m.field();
    let q = alg.quiver();
    // Unknowns: for each arrow a into v, a row vector δ_a on M_{s(a)}.
    let mut offset = vec![usize::MAX; q.arrow_count()];
    let mut unknowns = 0;
    for (a, arrow) in q.arrows().iter().enumerate() {
        if arrow.target == v {
            offset[a] = unknowns;
            unknowns += m.dims()[arrow.source];
        }
    }
    let build = |delta: &[Fe]| -> Result<RepModule> {
        let mut dims = m.dims().to_vec();
        dims[v] += 1;
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let (r0, c0) = (usize::from(arrow.target == v), usize::from(arrow.source == v));
                let mut e = Mat::zeros(f, dims[arrow.target], dims[arrow.source]);
                e.set_block(r0, c0, m.map(a));
                if arrow.target == v {
                    for j in 0..m.dims()[arrow.source] {
                        e.set(0, c0 + j, delta[offset[a] + j]);
                    }
                }
                e
            })
            .collect();
        RepModule::new(alg.clone(), dims, maps)
    };
    if unknowns == 0 {
        return Ok(vec![build(&[])?]);
    }
    // Cocycle conditions: each relation ending at v must act as zero on the new corner.
    let mut eqs: Vec<Vec<Fe>> = Vec::new();
    for rel in alg.relations() {
        let Some((w0, _)) = rel.terms.iter().next() else { continue };
        let (s, t) = q.endpoints(&w0.0);
        if t != v {
            continue;
        }
        let ds = m.dims()[s];
        let mut block = vec![vec![0 as Fe; unknowns]; ds];
        for (w, &c) in &rel.terms {
            let last = w.0[0] as usize;
            let rest = &w.0[1..];
            let r = if rest.is_empty() { Mat::identity(f, ds) } else { m.word_matrix(rest) };
            for (i, row) in (0..r.rows()).map(|i| (i, r.row(i))) {
                for (j, &x) in row.iter().enumerate() {
                    if x != 0 {
                        block[j][offset[last] + i] ^= f.mul(c, x);
                    }
                }
            }
        }
        eqs.extend(block.into_iter().filter(|r| r.iter().any(|&x| x != 0)));
    }
    let z = if eqs.is_empty() { Mat::identity(f, unknowns) } else { Mat::from_rows(f, unknowns, &eqs).kernel() };
    // Coboundaries: δ_a = φ ∘ M_a for a functional φ on M_v.
    let mut space = RowSpace::new(f, unknowns);
    for i in 0..m.dims()[v] {
        let mut b = vec![0 as Fe; unknowns];
        for (a, arrow) in q.arrows().iter().enumerate() {
            if arrow.target == v {
                let row = m.map(a).row(i);
                b[offset[a]..offset[a] + row.len()].copy_from_slice(row);
            }
        }
        space.insert(&b);
    }
    let mut reps: Vec<Vec<Fe>> = Vec::new();
    for c in 0..z.cols() {
        let col = z.col(c);
        if space.insert(&col) {
            reps.push(col);
        }
    }
    let k = reps.len();
    let total = f.size().checked_pow(k as u32).filter(|&t| t <= 1 << 16);
    let total = total.ok_or_else(|| Error::Capacity(format!("Ext¹ of dimension {k} is too large to enumerate")))?;
    let mut out = Vec::with_capacity(total);
    for mut code in 0..total {
        let mut delta = vec![0 as Fe; unknowns];
        for r in &reps {
            let c = (code % f.size()) as Fe;
            code /= f.size();
            if c != 0 {
                for (d, &x) in delta.iter_mut().zip(r) {
                    *d ^= f.mul(c, x);
                }
            }
        }
        out.push(build(&delta)?);
    }
    Ok(out)
}
