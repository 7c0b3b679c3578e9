//! Ring presentations over truncated Witt vectors: R′ = W[[t]]/(q_n), the quotients S′ and Θ
//! of the τ-invariants of a cyclic group ring, and the isomorphisms between them.

mod group;
mod lattice;
mod presentation;
mod theorem;
mod verify;

use serde::Serialize;

pub use group::{FixedGroupAlgebra, GroupElem, Involution};
pub use lattice::{det, quotient_structure, smith_valuations, ModuleStructure, Span};
pub use presentation::{
    build_rprime, build_sprime, build_theta, build_theta_with, build_tube_ring, PresentationKind, WPresentation,
};
pub use theorem::{theorem_presentation, SubquotientWitness, TheoremPresentation};
pub use verify::{
    c_n, c_n_recursive, eval_at_h, verify_h_iso, verify_iota, verify_theta_iso, verify_theta_iso_with,
    HIsoCertificate, IotaCertificate, ThetaCertificate,
};

/// One verification outcome in the shape used by the JSON reports.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub statement: String,
    pub n: u32,
    #[serde(rename = "type")]
    pub defect_type: String,
    pub precision: u32,
    pub witness: serde_json::Value,
    pub status: String,
}

fn status(valid: bool) -> String {
    if valid { "valid" } else { "invalid" }.to_string()
}

impl HIsoCertificate {
    pub fn report(&self) -> Report {
        Report {
            statement: "h: R′ → S′, t ↦ σ+τ(σ), is an isomorphism".into(),
            n: self.n,
            defect_type: self.defect_type.to_string(),
            precision: self.precision,
            witness: serde_json::json!({
                "c_n": self.c_n,
                "determinant": self.determinant,
                "ranks": [self.rank, self.rank],
            }),
            status: status(self.valid),
        }
    }
}

impl ThetaCertificate {
    pub fn report(&self) -> Report {
        Report {
            statement: "θ: W[[t]]/((t−2)·q_n) → Θ is an isomorphism".into(),
            n: self.n,
            defect_type: match self.tau {
                Involution::Semidihedral => "SD".into(),
                Involution::Inversion => "D".into(),
            },
            precision: self.precision,
            witness: serde_json::json!({
                "c_n": self.c_n,
                "determinant": self.determinant,
                "ranks": [self.rank, self.theta_rank],
            }),
            status: status(self.valid),
        }
    }
}
