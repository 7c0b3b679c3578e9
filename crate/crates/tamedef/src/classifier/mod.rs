//! Verification pipeline: maximally ordinary modules, completeness at a fixed composition
//! multiset, the 3-tube dichotomy, and the endomorphism ring of the truncated lift Ū′.

mod lift;
mod search;
mod tube;

use std::sync::Arc;

use serde::Serialize;

use crate::catalog::{Family, FamilyParams, Recipe};
use crate::module::RepModule;
use crate::quiver::PresentedAlgebra;
use crate::scalars::FField;
use crate::{DefectType, Result};

pub use lift::LiftCheck;
pub use search::{completeness_search, CompletenessSummary, FoundModule};
pub use tube::{verify_claim2, verify_tube, Candidate, Claim2Certificate, Construction, TubeCertificate};

/// Compact description of a module for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleSummary {
    pub dims: Vec<usize>,
    pub dim: usize,
    /// Radical layers, e.g. `0|1⊕2|0`.
    pub shape: String,
}

impl ModuleSummary {
    pub fn of(m: &RepModule) -> ModuleSummary {
        ModuleSummary { dims: m.dims().to_vec(), dim: m.dim(), shape: m.shape() }
    }
}

/// One algebra instance to run checks on.
#[derive(Clone, Debug)]
pub struct Instance {
    pub family: Family,
    pub n: u32,
    pub params: FamilyParams,
    pub algebra: Arc<PresentedAlgebra>,
}

impl Instance {
    pub fn new(family: Family, n: u32, params: FamilyParams, field: FField) -> Result<Instance> {
        let algebra = family.algebra(n, &params, field)?;
        Ok(Instance { family, n, params, algebra })
    }

    pub fn default_for(family: Family, n: u32) -> Result<Instance> {
        Instance::new(family, n, FamilyParams::default(), FField::gf2())
    }

    pub fn label(&self) -> String {
        self.family.instance_label(self.n, &self.params)
    }

    /// The order-8 quaternion case, where Ext¹(V, V) vanishes.
    pub fn is_q8(&self) -> bool {
        self.family.defect_type() == DefectType::Q && self.n == 3
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RecipeResult {
    pub recipe: String,
    pub description: String,
    pub module: Option<ModuleSummary>,
    pub error: Option<String>,
    pub indecomposable: Option<bool>,
    pub end_dim: Option<usize>,
    pub stable_end_dim: Option<usize>,
    pub ext1_dim: Option<usize>,
    pub expected_ext1: usize,
    /// The dimension vector is a height-one row of the decomposition matrix.
    pub height_one_character: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BiglistReport {
    pub instance: String,
    pub family: String,
    pub n: u32,
    pub recipes: Vec<RecipeResult>,
    pub pass: bool,
}

/// For every recipe: End = k, stable End = k, and the expected Ext¹(V, V).
pub fn verify_biglist(inst: &Instance) -> Result<BiglistReport> {
    let f = &inst.family;
    let dm = f.decomposition_matrix(inst.n)?;
    let rows: Vec<Vec<usize>> =
        dm.rows_of_height(1).iter().map(|r| r.iter().map(|&x| x as usize).collect()).collect();
    let expected_ext1 = if inst.is_q8() { 0 } else { 1 };
    let mut results = Vec::new();
    for r in f.mo_recipes(inst.n)? {
        results.push(check_recipe(inst, &r, &rows, expected_ext1)?);
    }
    let pass = !results.is_empty() && results.iter().all(|r| r.pass);
    Ok(BiglistReport { instance: inst.label(), family: f.name().into(), n: inst.n, recipes: results, pass })
}

fn check_recipe(inst: &Instance, r: &Recipe, rows: &[Vec<usize>], expected_ext1: usize) -> Result<RecipeResult> {
    let mut out = RecipeResult {
        recipe: r.label.clone(),
        description: r.describe(),
        module: None,
        error: None,
        indecomposable: None,
        end_dim: None,
        stable_end_dim: None,
        ext1_dim: None,
        expected_ext1,
        height_one_character: false,
        pass: false,
    };
    let m = match r.build(&inst.algebra) {
        Ok(m) => m,
        Err(e) if !e.is_abort() => {
            out.error = Some(e.to_string());
            return Ok(out);
        }
        Err(e) => return Err(e),
    };
    let ind = m.is_indecomposable()?;
    let end = m.end().dim();
    let st = m.stable_end_dim();
    let ext = m.ext1_dim(&m)?;
    out.height_one_character = rows.iter().any(|row| row.as_slice() == m.dims());
    out.pass = ind && end == 1 && st == 1 && ext == expected_ext1 && out.height_one_character;
    out.module = Some(ModuleSummary::of(&m));
    out.indecomposable = Some(ind);
    out.end_dim = Some(end);
    out.stable_end_dim = Some(st);
    out.ext1_dim = Some(ext);
    Ok(out)
}
