//! The 24 Morita-equivalence families of tame non-local 2-blocks.

mod decomp;
mod families;
mod recipes;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::quiver::{PresentedAlgebra, QuiverId, RelParams};
use crate::scalars::{FField, Fe};
use crate::{DefectType, Error, Result};

pub use decomp::{integer_det, DecompMatrix, Figure};
pub use families::ParamSlots;
pub use recipes::{Recipe, Shape};

use families::{FamilyData, FAMILIES};

/// Scalar parameters c, a and p(t); unused slots are ignored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyParams {
    pub c: Fe,
    pub a: Fe,
    /// Ascending coefficients of p(t), with p(0) = 1.
    pub p: Vec<Fe>,
}

impl Default for FamilyParams {
    fn default() -> Self {
        FamilyParams { c: 0, a: 1, p: vec![1] }
    }
}

impl FamilyParams {
    pub fn with_c(c: Fe) -> Self {
        FamilyParams { c, ..Default::default() }
    }

    fn validate(&self, field: &FField) -> Result<()> {
        if !field.contains(self.c) || !field.contains(self.a) || self.p.iter().any(|&x| !field.contains(x)) {
            return Err(Error::Domain(format!("parameters lie outside GF(2^{})", field.degree())));
        }
        if self.a == 0 {
            return Err(Error::Domain("the parameter a must be nonzero".into()));
        }
        if self.p.first() != Some(&1) {
            return Err(Error::Domain("p(t) must satisfy p(0) = 1".into()));
        }
        Ok(())
    }
}

/// A registered family; a cheap handle into static data.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Family {
    idx: usize,
}

impl fmt::Debug for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Family({})", self.name())
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for Family {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowRecord {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverRecord {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowRecord>,
}

/// JSON form of a family at a fixed n.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRecord {
    pub name: String,
    pub alias: String,
    pub defect_type: DefectType,
    pub n: u32,
    pub quiver: QuiverRecord,
    pub relations: Vec<String>,
    pub decomposition_matrix: Vec<Vec<u32>>,
    pub heights: Vec<u32>,
}

pub fn list_families() -> Vec<Family> {
    (0..FAMILIES.len()).map(|idx| Family { idx }).collect()
}

/// Uppercase, drop brackets, underscores, commas and spaces, map subscript digits.
fn normalize(name: &str) -> String {
    name.chars()
        .filter_map(|c| match c {
            '(' | ')' | '_' | ',' | ' ' | '{' | '}' => None,
            '₀'..='₉' => char::from_digit(c as u32 - '₀' as u32, 10),
            _ => Some(c.to_ascii_uppercase()),
        })
        .collect()
}

/// Looks a family up by its name (`SD(3C)₂,₂`) or alias (`SD3C_22`).
pub fn family(name: &str) -> Result<Family> {
    let key = normalize(name);
    if let Some(idx) = FAMILIES.iter().position(|f| normalize(f.name) == key || normalize(f.alias) == key) {
        return Ok(Family { idx });
    }
    // A bare name such as D(3A) resolves when exactly one subscripted family extends it.
    let extended: Vec<usize> = (0..FAMILIES.len())
        .filter(|&i| {
            normalize(FAMILIES[i].name)
                .strip_prefix(key.as_str())
                .is_some_and(|rest| !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit()))
        })
        .collect();
    match extended.as_slice() {
        [idx] => return Ok(Family { idx: *idx }),
        [] => {}
        many => {
            let names: Vec<&str> = many.iter().map(|&i| FAMILIES[i].name).collect();
            return Err(Error::UnknownFamily(format!("{name} is ambiguous: {}", names.join(", "))));
        }
    }
    Err(nonexistence(&key).unwrap_or_else(|| Error::UnknownFamily(name.to_string())))
}

fn nonexistence(key: &str) -> Option<Error> {
    let (ty, quiver) = if let Some(rest) = key.strip_prefix("SD") {
        (Some("semidihedral"), rest)
    } else if let Some(rest) = key.strip_prefix('D') {
        (Some("dihedral"), rest)
    } else if let Some(rest) = key.strip_prefix('Q') {
        (Some("generalized quaternion"), rest)
    } else {
        (None, key)
    };
    let quiver: String = quiver.chars().take(2).collect();
    match quiver.as_str() {
        "3L" | "3Q" | "3R" | "3F" => Some(Error::Nonexistent(format!(
            "no blocks with tame defect groups have Ext quiver {quiver}"
        ))),
        "3C" | "3D" | "3H" | "3K" | "2A" | "2B" | "3A" | "3B" => ty.map(|t| {
            Error::Nonexistent(format!("no blocks with {t} defect groups have Ext quiver {quiver}"))
        }),
        _ => None,
    }
}

impl Family {
    fn data(&self) -> &'static FamilyData {
        &FAMILIES[self.idx]
    }

    pub fn name(&self) -> &'static str {
        self.data().name
    }

    /// Shell-safe spelling of the name.
    pub fn alias(&self) -> &'static str {
        self.data().alias
    }

    pub fn quiver_id(&self) -> QuiverId {
        self.data().quiver
    }

    pub fn defect_type(&self) -> DefectType {
        self.data().defect
    }

    /// Smallest admissible n. The two-simple quaternion families start at n = 4 because
    /// quaternion blocks of order 8 only have the quivers 3A, 3B and 3K.
    pub fn n_min(&self) -> u32 {
        match (self.defect_type(), self.quiver_id()) {
            (DefectType::Q, QuiverId::Q2A | QuiverId::Q2B) => 4,
            (t, _) => t.n_min(),
        }
    }

    pub fn params(&self) -> ParamSlots {
        self.data().params
    }

    pub fn relation_templates(&self) -> &'static [&'static str] {
        self.data().relations
    }

    pub fn figure(&self) -> Figure {
        self.data().figure
    }

    pub fn simple_count(&self) -> usize {
        self.quiver_id().vertex_count()
    }

    /// False only for Q(2B)₂, which is known not to occur as a block.
    pub fn realizable_as_block(&self) -> bool {
        self.alias() != "Q2B_2"
    }

    pub fn check_n(&self, n: u32) -> Result<()> {
        if n < self.n_min() {
            return Err(Error::Domain(format!("{} needs n ≥ {}, got {n}", self.name(), self.n_min())));
        }
        if n > 30 {
            return Err(Error::Domain(format!("n = {n} is out of range")));
        }
        Ok(())
    }

    pub fn decomposition_matrix(&self, n: u32) -> Result<DecompMatrix> {
        self.check_n(n)?;
        Ok(self.figure().matrix(n))
    }

    pub fn cartan(&self, n: u32) -> Result<Vec<Vec<u64>>> {
        Ok(self.decomposition_matrix(n)?.cartan())
    }

    pub fn rel_params(&self, n: u32, params: &FamilyParams) -> RelParams {
        let slots = self.params();
        RelParams {
            k: 1 << (n - 2),
            c: if slots.c { params.c } else { 0 },
            a: if slots.a { params.a } else { 1 },
            p: if slots.p { params.p.clone() } else { vec![1] },
        }
    }

    /// Completes the family's relations at defect exponent n.
    pub fn algebra(&self, n: u32, params: &FamilyParams, field: FField) -> Result<Arc<PresentedAlgebra>> {
        self.check_n(n)?;
        params.validate(&field)?;
        let label = self.instance_label(n, params);
        let alg = PresentedAlgebra::from_text(
            &label,
            self.quiver_id().quiver(),
            field,
            self.relation_templates(),
            &self.rel_params(n, params),
        )
        .map_err(|e| match e {
            Error::Completion { reason, .. } => Error::Completion { family: label.clone(), reason },
            other => other,
        })?;
        Ok(Arc::new(alg))
    }

    pub fn default_algebra(&self, n: u32) -> Result<Arc<PresentedAlgebra>> {
        self.algebra(n, &FamilyParams::default(), FField::gf2())
    }

    /// e.g. `SD(2B)₄(c=1), n=4`.
    pub fn instance_label(&self, n: u32, params: &FamilyParams) -> String {
        let slots = self.params();
        let mut bits = Vec::new();
        if slots.p {
            bits.push(format!("p={:?}", params.p));
        }
        if slots.a {
            bits.push(format!("a={}", params.a));
        }
        if slots.c {
            bits.push(format!("c={}", params.c));
        }
        if bits.is_empty() {
            format!("{}, n={n}", self.name())
        } else {
            format!("{}({}), n={n}", self.name(), bits.join(","))
        }
    }

    /// The serializable description of the family at defect exponent n.
    pub fn record(&self, n: u32) -> Result<FamilyRecord> {
        let dm = self.decomposition_matrix(n)?;
        let q = self.quiver_id().quiver();
        Ok(FamilyRecord {
            name: self.name().to_string(),
            alias: self.alias().to_string(),
            defect_type: self.defect_type(),
            n,
            quiver: QuiverRecord {
                vertices: q.vertices().to_vec(),
                arrows: q
                    .arrows()
                    .iter()
                    .map(|a| ArrowRecord { name: a.name.clone(), source: a.source, target: a.target })
                    .collect(),
            },
            relations: self.relation_strings(n),
            decomposition_matrix: dm.rows.clone(),
            heights: dm.heights.clone(),
        })
    }

    /// Relation strings with K spelled out as 2^{n−2}.
    pub fn relation_strings(&self, n: u32) -> Vec<String> {
        let k = 1u64 << (n - 2);
        self.relation_templates()
            .iter()
            .map(|t| {
                t.replace("{K-1}", &(k - 1).to_string())
                    .replace("{K+1}", &(k + 1).to_string())
                    .replace("{K-2}", &(k - 2).to_string())
                    .replace('K', &k.to_string())
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_and_aliases_resolve() {
        assert_eq!(family("SD(3C)₂,₂").unwrap().alias(), "SD3C_22");
        assert_eq!(family("sd3c_22").unwrap().name(), "SD(3C)₂,₂");
        assert_eq!(family("D(2A)").unwrap().n_min(), 2);
        assert!(!family("Q2B_2").unwrap().realizable_as_block());
        assert!(matches!(family("3L"), Err(Error::Nonexistent(_))));
        assert!(matches!(family("D(3C)"), Err(Error::Nonexistent(_))));
        assert!(matches!(family("banana"), Err(Error::UnknownFamily(_))));
    }

    #[test]
    fn all_families_complete_small_n() {
        for f in list_families() {
            let n = f.n_min().max(3);
            let alg = f.default_algebra(n).unwrap();
            assert_eq!(alg.cartan(), f.cartan(n).unwrap(), "{}", f.name());
        }
    }
}
