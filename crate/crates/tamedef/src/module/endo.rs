use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{Mat, RowSpace};
use crate::scalars::Fe;
use crate::{Error, Result};

use super::{HomSpace, ModMap, RepModule};

/// Outcome of the local-endomorphism-ring test.
#[derive(Clone, Debug)]
pub enum Decomposition {
    Indecomposable,
    /// An endomorphism whose high power is neither zero nor invertible (a Fitting witness).
    Decomposable(ModMap),
}

/// Controls for [`RepModule::is_isomorphic_with`].
#[derive(Clone, Copy, Debug)]
pub struct IsoSettings {
    /// Exhaustive search over Hom(M, N) is used when `|F|^dim ≤ 2^threshold`.
    pub exhaustive_threshold: u32,
    pub samples: usize,
    pub seed: u64,
}

impl Default for IsoSettings {
    fn default() -> Self {
        IsoSettings { exhaustive_threshold: 12, samples: 256, seed: 0x5eed }
    }
}

fn power(x: &ModMap, k: u64) -> ModMap {
    ModMap::new(x.blocks.iter().map(|b| b.pow(k)).collect())
}

fn minus_scalar(x: &ModMap, c: Fe) -> ModMap {
    let f = x.blocks.first().map(|b| b.field());
    let mut y = x.clone();
    if let Some(f) = f {
        for b in &mut y.blocks {
            b.add_scaled(&Mat::identity(f, b.rows()), c);
        }
    }
    y
}

/// Whether `x^d` is zero, invertible, or neither (the latter is a Fitting witness).
enum Fitting {
    Nilpotent,
    Invertible,
    Split(ModMap),
}

fn fitting(x: &ModMap, d: u64) -> Fitting {
    let p = power(x, d);
    if p.is_zero() {
        Fitting::Nilpotent
    } else if p.is_iso() {
        Fitting::Invertible
    } else {
        Fitting::Split(x.clone())
    }
}

impl RepModule {
    /// Decides whether End(M) is local.
    ///
    /// Each basis element b must be λ + nilpotent for some λ in the field; the nilpotent
    /// parts must then span a nilpotent subalgebra. An element with no eigenvalue in the
    /// field and no Fitting splitting makes the test inconclusive.
    pub fn decomposition(&self) -> Result<Decomposition> {
        if self.is_zero() {
            return Err(Error::Domain("the zero module".into()));
        }
        let end = self.end();
        let f = self.field();
        let d = self.dim() as u64;
        let mut nil: Vec<ModMap> = Vec::new();
        for b in &end.basis {
            let mut found = None;
            for lam in f.elements() {
                let y = minus_scalar(b, lam);
                match fitting(&y, d) {
                    Fitting::Nilpotent => {
                        found = Some(y);
                        break;
                    }
                    Fitting::Split(w) => return Ok(Decomposition::Decomposable(w)),
                    Fitting::Invertible => {}
                }
            }
            match found {
                Some(y) => nil.push(y),
                None => {
                    if let Some(w) = self.random_fitting_witness(&end, 64) {
                        return Ok(Decomposition::Decomposable(w));
                    }
                    return Err(Error::Inconclusive(
                        "an endomorphism has no eigenvalue in the field; retry over a larger field".into(),
                    ));
                }
            }
        }
        if nilpotent_span(&nil) {
            Ok(Decomposition::Indecomposable)
        } else {
            // Not local, so a sum of two basis elements or a random element splits.
            for (i, a) in nil.iter().enumerate() {
                for b in &nil[i..] {
                    let mut s = a.clone();
                    s.add_scaled(b, 1);
                    for cand in [a.compose(b), s] {
                        for lam in f.elements() {
                            if let Fitting::Split(w) = fitting(&minus_scalar(&cand, lam), d) {
                                return Ok(Decomposition::Decomposable(w));
                            }
                        }
                    }
                }
            }
            if let Some(w) = self.random_fitting_witness(&end, 256) {
                return Ok(Decomposition::Decomposable(w));
            }
            Err(Error::Inconclusive("End(M) is not local but no splitting endomorphism was found".into()))
        }
    }

    fn random_fitting_witness(&self, end: &HomSpace, tries: usize) -> Option<ModMap> {
        let f = self.field();
        let mut rng = ChaCha8Rng::seed_from_u64(0xf1771);
        let d = self.dim() as u64;
        for _ in 0..tries {
            let coeffs: Vec<Fe> = (0..end.dim()).map(|_| rng.gen_range(0..f.size()) as Fe).collect();
            let x = end.combination(&coeffs, self, self);
            if let Fitting::Split(w) = fitting(&x, d) {
                return Some(w);
            }
        }
        None
    }

    pub fn is_indecomposable(&self) -> Result<bool> {
        Ok(matches!(self.decomposition()?, Decomposition::Indecomposable))
    }

    /// Krull–Schmidt decomposition by repeated Fitting splitting.
    pub fn summands(&self) -> Result<Vec<RepModule>> {
        if self.is_zero() {
            return Ok(Vec::new());
        }
        match self.decomposition()? {
            Decomposition::Indecomposable => Ok(vec![self.clone()]),
            Decomposition::Decomposable(w) => {
                let p = power(&w, self.dim() as u64);
                let (a, _) = self.submodule(&p.kernel());
                let (b, _) = self.submodule(&p.image());
                let mut out = a.summands()?;
                out.extend(b.summands()?);
                Ok(out)
            }
        }
    }

    pub fn is_isomorphic(&self, other: &RepModule) -> Result<bool> {
        self.is_isomorphic_with(other, IsoSettings::default())
    }

    pub fn is_isomorphic_with(&self, other: &RepModule, settings: IsoSettings) -> Result<bool> {
        self.same_algebra(other)?;
        if self.dims() != other.dims() {
            return Ok(false);
        }
        if self.is_zero() {
            return Ok(true);
        }
        if self.top_dims() != other.top_dims() || self.socle_dims() != other.socle_dims() {
            return Ok(false);
        }
        let hmn = self.hom(other)?;
        let e_m = self.end();
        if hmn.dim() != e_m.dim() || other.end().dim() != e_m.dim() {
            return Ok(false);
        }
        match (self.summands(), other.summands()) {
            (Ok(a), Ok(b)) => {
                if a.len() == 1 && b.len() == 1 {
                    return local_iso(self, other, &hmn);
                }
                match_summands(a, b)
            }
            _ => search_iso(self, other, &hmn, settings),
        }
    }
}

/// For M with local End, M ≅ N iff some g∘f is an automorphism with f, g from the bases.
fn local_iso(m: &RepModule, n: &RepModule, hmn: &HomSpace) -> Result<bool> {
    let hnm = n.hom(m)?;
    for f in &hmn.basis {
        if f.is_iso() {
            return Ok(true);
        }
        for g in &hnm.basis {
            if g.compose(f).is_iso() {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

fn match_summands(a: Vec<RepModule>, mut b: Vec<RepModule>) -> Result<bool> {
    if a.len() != b.len() {
        return Ok(false);
    }
    for x in a {
        let mut hit = None;
        for (j, y) in b.iter().enumerate() {
            if x.dims() != y.dims() {
                continue;
            }
            let h = x.hom(y)?;
            if local_iso(&x, y, &h)? {
                hit = Some(j);
                break;
            }
        }
        match hit {
            Some(j) => {
                b.swap_remove(j);
            }
            None => return Ok(false),
        }
    }
    Ok(true)
}

fn search_iso(m: &RepModule, n: &RepModule, hmn: &HomSpace, s: IsoSettings) -> Result<bool> {
    let f = m.field();
    let h = hmn.dim();
    let bits = f.degree() as u64 * h as u64;
    if bits <= s.exhaustive_threshold as u64 {
        let q = f.size();
        let total = q.pow(h as u32);
        for code in 0..total {
            let mut c = code;
            let coeffs: Vec<Fe> = (0..h)
                .map(|_| {
                    let x = (c % q) as Fe;
                    c /= q;
                    x
                })
                .collect();
            if hmn.combination(&coeffs, m, n).is_iso() {
                return Ok(true);
            }
        }
        return Ok(false);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
    for _ in 0..s.samples {
        let coeffs: Vec<Fe> = (0..h).map(|_| rng.gen_range(0..f.size()) as Fe).collect();
        if hmn.combination(&coeffs, m, n).is_iso() {
            return Ok(true);
        }
    }
    Err(Error::Inconclusive(format!("no isomorphism found among {} random maps", s.samples)))
}

/// Whether the span of the given maps is closed under composition and nilpotent.
fn nilpotent_span(gens: &[ModMap]) -> bool {
    let Some(first) = gens.first() else { return true };
    let f = first.blocks.first().map(|b| b.field());
    let Some(f) = f else { return true };
    let len = first.flatten().len();
    let mut span = RowSpace::new(f, len);
    let mut basis: Vec<ModMap> = Vec::new();
    for g in gens {
        if span.insert(&g.flatten()) {
            basis.push(g.clone());
        }
    }
    for a in &basis {
        for b in &basis {
            if !span.contains(&a.compose(b).flatten()) {
                return false;
            }
        }
    }
    // N ⊋ N² ⊋ … must reach zero.
    let mut cur = basis.clone();
    let mut dim = span.rank();
    while !cur.is_empty() {
        let mut next_span = RowSpace::new(f, len);
        let mut next = Vec::new();
        for a in &cur {
            for b in &basis {
                let p = a.compose(b);
                if next_span.insert(&p.flatten()) {
                    next.push(p);
                }
            }
        }
        if next_span.rank() >= dim {
            return false;
        }
        dim = next_span.rank();
        cur = next;
    }
    true
}
