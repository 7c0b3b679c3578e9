use std::collections::BTreeMap;
use std::sync::OnceLock;

use clap::ValueEnum;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use tamedef::catalog::{integer_det, Family, FamilyParams, Recipe};
use tamedef::classifier::{completeness_search, verify_biglist, verify_claim2, verify_tube, Instance};
use tamedef::deformation::{c_n_recursive, verify_h_iso, verify_theta_iso};
use tamedef::scalars::{FField, WittRing};
use tamedef::{DefectType, Error};

use crate::config::NRange;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    Cartan,
    AlgebraDims,
    Biglist,
    Tubes,
    Claim2,
    Rings,
    /// Completeness search at the height-one multiset; not part of `all`.
    Completeness,
    All,
}

impl Scope {
    fn expand(self) -> Vec<Scope> {
        use Scope::*;
        match self {
            All => vec![Cartan, AlgebraDims, Biglist, Tubes, Claim2, Rings],
            s => vec![s],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Scope::Cartan => "cartan",
            Scope::AlgebraDims => "algebra-dims",
            Scope::Biglist => "biglist",
            Scope::Tubes => "tubes",
            Scope::Claim2 => "claim2",
            Scope::Rings => "rings",
            Scope::Completeness => "completeness",
            Scope::All => "all",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Abort,
}

#[derive(Clone, Debug, Serialize)]
pub struct TaskResult {
    pub subject: String,
    pub n: u32,
    pub check: String,
    pub recipe: Option<String>,
    pub status: Status,
    pub error: Option<String>,
    pub detail: Value,
}

/// Work item; `subject` is a family, or a defect type for the ring checks.
#[derive(Clone, Debug)]
struct Task {
    key: (usize, u32, Scope, usize),
    family: Option<Family>,
    ty: DefectType,
    n: u32,
    scope: Scope,
    recipe: Option<Recipe>,
}

pub struct Plan {
    pub scope: Scope,
    pub families: Vec<Family>,
    pub types: Vec<DefectType>,
    pub n: Option<NRange>,
    pub params: FamilyParams,
    pub field: FField,
    pub precision: u32,
    pub seed: u64,
}

fn module_ns(f: Family, range: Option<NRange>) -> Vec<u32> {
    let q = f.defect_type() == DefectType::Q && f.n_min() <= 3;
    let ok = |n: u32| n >= f.n_min() && (n >= 4 || (q && n == 3));
    match range {
        Some(r) => r.iter().filter(|&n| ok(n)).collect(),
        None => [3, 4].into_iter().filter(|&n| ok(n)).collect(),
    }
}

fn catalog_ns(f: Family, range: Option<NRange>) -> Vec<u32> {
    let r = range.unwrap_or(NRange { lo: f.n_min(), hi: 5 });
    r.iter().filter(|&n| n >= f.n_min()).collect()
}

fn ring_ns(ty: DefectType, range: Option<NRange>) -> Vec<u32> {
    let r = range.unwrap_or(NRange { lo: 3, hi: 5 });
    r.iter().filter(|&n| n >= ty.n_min().max(3)).collect()
}

impl Plan {
    fn tasks(&self) -> Vec<Task> {
        let mut out = Vec::new();
        let fam_count = tamedef::catalog::list_families().len();
        for scope in self.scope.expand() {
            if scope == Scope::Rings {
                for (ti, &ty) in DefectType::ALL.iter().enumerate() {
                    if !self.types.contains(&ty) {
                        continue;
                    }
                    for n in ring_ns(ty, self.n) {
                        let key = (fam_count + ti, n, scope, 0);
                        out.push(Task { key, family: None, ty, n, scope, recipe: None });
                    }
                }
                continue;
            }
            for (fi, &f) in tamedef::catalog::list_families().iter().enumerate() {
                if !self.families.contains(&f) {
                    continue;
                }
                let ty = f.defect_type();
                match scope {
                    Scope::Cartan | Scope::AlgebraDims => {
                        for n in catalog_ns(f, self.n) {
                            out.push(Task { key: (fi, n, scope, 0), family: Some(f), ty, n, scope, recipe: None });
                        }
                    }
                    Scope::Biglist | Scope::Completeness => {
                        for n in module_ns(f, self.n) {
                            out.push(Task { key: (fi, n, scope, 0), family: Some(f), ty, n, scope, recipe: None });
                        }
                    }
                    Scope::Tubes | Scope::Claim2 => {
                        for n in module_ns(f, self.n) {
                            for (ri, r) in f.mo_recipes(n).unwrap_or_default().into_iter().enumerate() {
                                let key = (fi, n, scope, ri);
                                out.push(Task { key, family: Some(f), ty, n, scope, recipe: Some(r) });
                            }
                        }
                    }
                    Scope::Rings | Scope::All => unreachable!(),
                }
            }
        }
        out.sort_by_key(|t| t.key);
        out
    }

    /// Runs every task on the current rayon pool; results come back in plan order.
    pub fn run(&self) -> Vec<TaskResult> {
        let tasks = self.tasks();
        let mut cache: BTreeMap<(Family, u32), OnceLock<Result<Instance, Error>>> = BTreeMap::new();
        for t in &tasks {
            if let Some(f) = t.family {
                cache.entry((f, t.n)).or_default();
            }
        }
        tasks
            .par_iter()
            .map(|t| {
                let inst = || {
                    let f = t.family.expect("module checks have a family");
                    cache[&(f, t.n)]
                        .get_or_init(|| Instance::new(f, t.n, self.params.clone(), self.field))
                        .clone()
                };
                self.run_one(t, inst)
            })
            .collect()
    }

    fn run_one(&self, t: &Task, inst: impl Fn() -> Result<Instance, Error>) -> TaskResult {
        let seed = self.seed ^ ((t.key.0 as u64) << 32 | (t.n as u64) << 16 | t.key.3 as u64);
        let outcome: Result<(bool, Value), Error> = (|| match t.scope {
            Scope::Cartan => cartan(t.family.expect("family"), t.n),
            Scope::AlgebraDims => {
                let i = inst()?;
                let c = i.family.cartan(t.n)?;
                let sum: u64 = c.iter().flatten().sum();
                let dim = i.algebra.dim() as u64;
                let completed = i.algebra.cartan();
                let ok = dim == sum && completed == c;
                Ok((ok, json!({"algebra_dim": dim, "cartan_sum": sum, "cartan_matches": completed == c})))
            }
            Scope::Biglist => {
                let r = verify_biglist(&inst()?)?;
                Ok((r.pass, serde_json::to_value(&r).expect("serializable")))
            }
            Scope::Completeness => {
                let r = completeness_search(&inst()?, None)?;
                Ok((r.pass, serde_json::to_value(&r).expect("serializable")))
            }
            Scope::Tubes => {
                let i = inst()?;
                let r = verify_tube(&i.family, t.n, t.recipe.as_ref().expect("recipe"), &i.algebra, seed)?;
                Ok((r.pass, serde_json::to_value(&r).expect("serializable")))
            }
            Scope::Claim2 => {
                let i = inst()?;
                let r = verify_claim2(&i.family, t.n, t.recipe.as_ref().expect("recipe"), &i.algebra, seed)?;
                Ok((r.pass, serde_json::to_value(&r).expect("serializable")))
            }
            Scope::Rings => rings(t.ty, t.n, self.precision),
            Scope::All => unreachable!(),
        })();
        let subject = match t.family {
            Some(f) => f.name().to_string(),
            None => t.ty.to_string(),
        };
        let (status, error, detail) = match outcome {
            Ok((true, d)) => (Status::Pass, None, d),
            Ok((false, d)) => (Status::Fail, None, d),
            Err(e) if e.is_abort() => (Status::Abort, Some(e.to_string()), Value::Null),
            Err(e) => (Status::Fail, Some(e.to_string()), Value::Null),
        };
        TaskResult {
            subject,
            n: t.n,
            check: t.scope.name().to_string(),
            recipe: t.recipe.as_ref().map(|r| r.label.clone()),
            status,
            error,
            detail,
        }
    }
}

/// det(DᵀD) is 2^{n+r}, r the number of characters of height n − 2, and there are 2^{n−2} − 1
/// characters χ_{5,i} (three height-one rows in all for quaternion defect groups of order 8).
fn cartan(f: Family, n: u32) -> Result<(bool, Value), Error> {
    let dm = f.decomposition_matrix(n)?;
    let c = dm.cartan();
    let det = integer_det(&c)?;
    let top = f.figure().top_height_rows() as u32;
    let expected_det = 1i128 << (n + top);
    let h1 = dm.height_one_family().len();
    let q8 = f.defect_type() == DefectType::Q && n == 3;
    let ok = det == expected_det && h1 == (1usize << (n - 2)) - 1 && (!q8 || dm.rows_of_height(1).len() == 3);
    Ok((
        ok,
        json!({
            "cartan": c,
            "det": det.to_string(),
            "expected_det": expected_det.to_string(),
            "det_is_2_pow_n": det == 1i128 << n,
            "height_one_family_rows": h1,
            "rows_of_height_one": dm.rows_of_height(1).len(),
        }),
    ))
}

fn rings(ty: DefectType, n: u32, precision: u32) -> Result<(bool, Value), Error> {
    let h = verify_h_iso(n, ty, precision)?;
    let mut ok = h.valid;
    let mut detail = json!({ "h_iso": h.report() });
    if ty == DefectType::SD && n >= 4 {
        let th = verify_theta_iso(n, precision)?;
        let ring = WittRing::new(precision)?;
        let expected = ring.to_signed(ring.from_bigint(&c_n_recursive(n)?));
        let c_ok = h.c_n == Some(expected) && expected % 2 != 0;
        ok &= th.valid && c_ok;
        detail["theta_iso"] = serde_json::to_value(th.report()).expect("serializable");
        detail["c_n_matches_recursion"] = json!(c_ok);
    }
    Ok((ok, detail))
}
