use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, Weak};

use crate::scalars::{FField, Fe};
use crate::{Error, Result};

use super::groebner::{complete, RewriteSystem, DEFAULT_BASIS_CAP};
use super::{parse_relation, Elem, Quiver, RelParams, Word};

/// Sparse vector in the path basis.
pub type Sparse = Vec<(usize, Fe)>;

/// A finite-dimensional quotient kQ/I with its normal-word basis.
///
/// Basis element `v < vertex_count` is the trivial path at `v`; the rest are normal
/// words in length-lexicographic order.
pub struct PresentedAlgebra {
    name: String,
    quiver: Quiver,
    field: FField,
    relation_text: Vec<String>,
    relations: Vec<Elem>,
    rewrite: RewriteSystem,
    words: Vec<Vec<u8>>,
    ends: Vec<(usize, usize)>,
    index: HashMap<Vec<u8>, usize>,
    tree: Vec<Option<(u8, usize)>>,
    by_source: Vec<Vec<usize>>,
    arrow_action: Vec<Vec<Sparse>>,
    opposite: OnceLock<Arc<PresentedAlgebra>>,
    original: Option<Weak<PresentedAlgebra>>,
}

impl fmt::Debug for PresentedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PresentedAlgebra")
            .field("name", &self.name)
            .field("quiver", &self.quiver.name())
            .field("dim", &self.dim())
            .finish()
    }
}

impl PresentedAlgebra {
    /// Parses relation templates and completes them.
    pub fn from_text(
        name: &str,
        quiver: Quiver,
        field: FField,
        relations: &[&str],
        params: &RelParams,
    ) -> Result<PresentedAlgebra> {
        let elems = relations
            .iter()
            .map(|t| parse_relation(&quiver, field, t, params))
            .collect::<Result<Vec<_>>>()?;
        let texts = relations.iter().map(|s| s.to_string()).collect();
        PresentedAlgebra::from_elems(name, quiver, field, elems, texts, DEFAULT_BASIS_CAP)
    }

    pub fn from_elems(
        name: &str,
        quiver: Quiver,
        field: FField,
        relations: Vec<Elem>,
        relation_text: Vec<String>,
        basis_cap: usize,
    ) -> Result<PresentedAlgebra> {
        let rewrite = complete(&quiver, &field, &relations, name)?;
        let nv = quiver.vertex_count();
        let mut words: Vec<Vec<u8>> = vec![Vec::new(); nv];
        let mut ends: Vec<(usize, usize)> = (0..nv).map(|v| (v, v)).collect();
        let mut tree: Vec<Option<(u8, usize)>> = vec![None; nv];
        let mut index = HashMap::new();
        let mut frontier: Vec<usize> = (0..nv).collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &i in &frontier {
                let tgt = ends[i].1;
                for (a, arrow) in quiver.arrows().iter().enumerate() {
                    if arrow.source != tgt {
                        continue;
                    }
                    let mut w = Vec::with_capacity(words[i].len() + 1);
                    w.push(a as u8);
                    w.extend_from_slice(&words[i]);
                    if rewrite.has_tip_prefix(&w) {
                        continue;
                    }
                    let id = words.len();
                    ends.push((ends[i].0, arrow.target));
                    index.insert(w.clone(), id);
                    words.push(w);
                    tree.push(Some((a as u8, i)));
                    next.push(id);
                    if words.len() > basis_cap {
                        return Err(Error::Completion {
                            family: name.to_string(),
                            reason: format!("more than {basis_cap} normal words"),
                        });
                    }
                }
            }
            frontier = next;
        }
        // Sort the non-trivial words into length-lex order, keeping trees consistent.
        let mut order: Vec<usize> = (nv..words.len()).collect();
        order.sort_by(|&x, &y| Word(words[x].clone()).cmp(&Word(words[y].clone())));
        let mut relabel = vec![0usize; words.len()];
        for v in 0..nv {
            relabel[v] = v;
        }
        for (k, &old) in order.iter().enumerate() {
            relabel[old] = nv + k;
        }
        let mut nwords = vec![Vec::new(); words.len()];
        let mut nends = vec![(0, 0); words.len()];
        let mut ntree = vec![None; words.len()];
        for old in 0..words.len() {
            let new = relabel[old];
            nwords[new] = words[old].clone();
            nends[new] = ends[old];
            ntree[new] = tree[old].map(|(a, r)| (a, relabel[r]));
        }
        let index: HashMap<Vec<u8>, usize> = index.into_iter().map(|(w, i)| (w, relabel[i])).collect();
        let mut by_source = vec![Vec::new(); nv];
        for (i, e) in nends.iter().enumerate() {
            by_source[e.0].push(i);
        }
        let mut alg = PresentedAlgebra {
            name: name.to_string(),
            quiver,
            field,
            relation_text,
            relations,
            rewrite,
            words: nwords,
            ends: nends,
            index,
            tree: ntree,
            by_source,
            arrow_action: Vec::new(),
            opposite: OnceLock::new(),
            original: None,
        };
        alg.arrow_action = (0..alg.quiver.arrow_count())
            .map(|a| (0..alg.dim()).map(|i| alg.reduce_product(&[a as u8], i)).collect())
            .collect();
        Ok(alg)
    }

    /// Normal form of word·b_i as a sparse vector (empty if the product is not a path).
    fn reduce_product(&self, w: &[u8], i: usize) -> Sparse {
        let (src, tgt) = self.ends[i];
        if w.is_empty() {
            return vec![(i, 1)];
        }
        let (wsrc, _) = self.quiver.endpoints(w);
        if wsrc != tgt {
            return Vec::new();
        }
        let _ = src;
        let full = [w, self.words[i].as_slice()].concat();
        self.to_sparse(&self.rewrite.reduce(&self.field, &Elem::monomial(full, 1)))
    }

    /// Expresses a reduced element in the basis.
    pub fn to_sparse(&self, e: &Elem) -> Sparse {
        e.terms
            .iter()
            .map(|(w, &c)| {
                let i = *self.index.get(&w.0).expect("reduced element uses normal words");
                (i, c)
            })
            .collect()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn field(&self) -> FField {
        self.field
    }

    pub fn relations(&self) -> &[Elem] {
        &self.relations
    }

    pub fn relation_text(&self) -> &[String] {
        &self.relation_text
    }

    pub fn rewrite_system(&self) -> &RewriteSystem {
        &self.rewrite
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn word(&self, i: usize) -> &[u8] {
        &self.words[i]
    }

    /// (source, target) of basis element i.
    pub fn ends(&self, i: usize) -> (usize, usize) {
        self.ends[i]
    }

    /// Basis element i is `arrow · rest`; None for trivial paths.
    pub fn tree(&self, i: usize) -> Option<(u8, usize)> {
        self.tree[i]
    }

    /// Basis indices of Λe_v, trivial path first and in increasing order.
    pub fn paths_from(&self, v: usize) -> &[usize] {
        &self.by_source[v]
    }

    pub fn basis_index(&self, w: &[u8]) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Left multiplication by an arrow on a basis element.
    pub fn arrow_times(&self, a: usize, i: usize) -> &Sparse {
        &self.arrow_action[a][i]
    }

    pub fn format_basis(&self, i: usize) -> String {
        if i < self.vertex_count() {
            format!("e{i}")
        } else {
            self.quiver.format_word(&self.words[i])
        }
    }

    /// b_i · b_j via left multiplication by the arrows of b_i.
    pub fn mul_basis(&self, i: usize, j: usize) -> Sparse {
        let (src_i, _) = self.ends[i];
        let (_, tgt_j) = self.ends[j];
        if src_i != tgt_j {
            return Vec::new();
        }
        let mut v: Vec<Fe> = vec![0; self.dim()];
        v[j] = 1;
        for &a in self.words[i].iter().rev() {
            let mut nv = vec![0; self.dim()];
            for (k, &c) in v.iter().enumerate() {
                if c != 0 {
                    for &(t, d) in &self.arrow_action[a as usize][k] {
                        nv[t] ^= self.field.mul(c, d);
                    }
                }
            }
            v = nv;
        }
        v.into_iter().enumerate().filter(|(_, c)| *c != 0).collect()
    }

    /// Full structure-constant table by reducing concatenations directly.
    pub fn structure_constants(&self) -> Vec<Vec<Sparse>> {
        let d = self.dim();
        (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        if self.ends[i].0 != self.ends[j].1 {
                            Vec::new()
                        } else if i < self.vertex_count() {
                            vec![(j, 1)]
                        } else {
                            self.reduce_product(&self.words[i], j)
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// (ab)c = a(bc) on all basis triples.
    pub fn assoc_check(&self) -> bool {
        let table = self.structure_constants();
        let f = self.field;
        let d = self.dim();
        let combine = |x: &Sparse, k: usize, left: bool| -> Vec<Fe> {
            let mut acc = vec![0; d];
            for &(i, c) in x {
                let prod = if left { &table[i][k] } else { &table[k][i] };
                for &(t, e) in prod {
                    acc[t] ^= f.mul(c, e);
                }
            }
            acc
        };
        for a in 0..d {
            for b in 0..d {
                if table[a][b].is_empty() && self.ends[a].0 != self.ends[b].1 {
                    continue;
                }
                for c in 0..d {
                    if self.ends[b].0 != self.ends[c].1 {
                        continue;
                    }
                    let lhs = combine(&table[a][b], c, true);
                    let rhs = combine(&table[b][c], a, false);
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        // Trivial paths are orthogonal idempotents summing to one.
        for v in 0..self.vertex_count() {
            for w in 0..self.vertex_count() {
                let expect: Sparse = if v == w { vec![(v, 1)] } else { Vec::new() };
                if table[v][w] != expect {
                    return false;
                }
            }
        }
        true
    }

    /// C[i][j] = dim e_i Λ e_j, the number of normal paths from j to i.
    pub fn cartan(&self) -> Vec<Vec<u64>> {
        let nv = self.vertex_count();
        let mut c = vec![vec![0u64; nv]; nv];
        for &(s, t) in &self.ends {
            c[t][s] += 1;
        }
        c
    }

    pub fn projective_dim(&self, v: usize) -> usize {
        self.by_source[v].len()
    }

    /// The opposite algebra: arrows reversed and relation words read backwards.
    /// The opposite of the opposite is the original `Arc`.
    pub fn opposite(self: &Arc<Self>) -> Arc<PresentedAlgebra> {
        if let Some(orig) = self.original.as_ref().and_then(Weak::upgrade) {
            return orig;
        }
        self.opposite
            .get_or_init(|| {
                let q = self.quiver.opposite();
                let rels: Vec<Elem> = self.relations.iter().map(|r| r.reversed()).collect();
                let texts = rels.iter().map(|r| r.format(&q, &self.field)).collect();
                let mut op = PresentedAlgebra::from_elems(
                    &format!("{}^op", self.name),
                    q,
                    self.field,
                    rels,
                    texts,
                    DEFAULT_BASIS_CAP.max(self.dim() + 1),
                )
                .expect("the opposite of a finite-dimensional algebra completes");
                op.original = Some(Arc::downgrade(self));
                Arc::new(op)
            })
            .clone()
    }

    /// Whether two handles denote the same algebra.
    pub fn same(a: &Arc<Self>, b: &Arc<Self>) -> bool {
        Arc::ptr_eq(a, b)
    }

    pub fn max_word_length(&self) -> usize {
        self.words.iter().map(|w| w.len()).max().unwrap_or(0)
    }
}
