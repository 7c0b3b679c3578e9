use serde::Serialize;

use crate::quiver::QuiverId;
use crate::DefectType;

use super::decomp::Figure;

/// Which scalar parameters a family carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ParamSlots {
    pub c: bool,
    pub a: bool,
    pub p: bool,
}

const NONE: ParamSlots = ParamSlots { c: false, a: false, p: false };
const C: ParamSlots = ParamSlots { c: true, a: false, p: false };
const PAC: ParamSlots = ParamSlots { c: true, a: true, p: true };

pub(super) struct FamilyData {
    pub name: &'static str,
    pub alias: &'static str,
    pub quiver: QuiverId,
    pub defect: DefectType,
    pub params: ParamSlots,
    pub relations: &'static [&'static str],
    pub figure: Figure,
}

use DefectType::{D, Q, SD};
use Figure::*;
use QuiverId::*;

pub(super) const FAMILIES: [FamilyData; 24] = [
    FamilyData {
        name: "D(2A)",
        alias: "D2A",
        quiver: Q2A,
        defect: D,
        params: NONE,
        relations: &["βγ", "α^2", "(γβα)^K - (αγβ)^K"],
        figure: F1,
    },
    FamilyData {
        name: "SD(2A)₁",
        alias: "SD2A_1",
        quiver: Q2A,
        defect: SD,
        params: C,
        relations: &[
            "α^2 - c(γβα)^K",
            "βγβ - βα(γβα)^{K-1}",
            "γβγ - αγ(βαγ)^{K-1}",
            "α(γβα)^K",
        ],
        figure: F2,
    },
    FamilyData {
        name: "SD(2A)₂",
        alias: "SD2A_2",
        quiver: Q2A,
        defect: SD,
        params: C,
        relations: &["βγ", "α^2 - γβ(αγβ)^{K-1} - c(γβα)^K", "(γβα)^K - (αγβ)^K"],
        figure: F1,
    },
    FamilyData {
        name: "Q(2A)",
        alias: "Q2A",
        quiver: Q2A,
        defect: Q,
        params: C,
        relations: &[
            "α^2 - γβ(αγβ)^{K-1} - c(αγβ)^K",
            "βγβ - βα(γβα)^{K-1}",
            "γβγ - αγ(βαγ)^{K-1}",
            "βα^2",
        ],
        figure: F2,
    },
    FamilyData {
        name: "D(2B)",
        alias: "D2B",
        quiver: Q2B,
        defect: D,
        params: NONE,
        relations: &["ηβ", "γη", "βγ", "α^2", "γβα - αγβ", "η^K - βαγ"],
        figure: F3,
    },
    FamilyData {
        name: "SD(2B)₁",
        alias: "SD2B_1",
        quiver: Q2B,
        defect: SD,
        params: C,
        relations: &["ηβ", "γη", "βγ", "α^2 - γβ - cαγβ", "γβα - αγβ", "η^K - βαγ"],
        figure: F3,
    },
    FamilyData {
        name: "SD(2B)₂",
        alias: "SD2B_2",
        quiver: Q2B,
        defect: SD,
        params: C,
        relations: &[
            "ηβ - βα(γβα)",
            "γη - αγ(βαγ)",
            "α^2 - c(γβα)^2",
            "βγ - η^{K-1}",
            "η^2β",
            "γη^2",
        ],
        figure: F4,
    },
    FamilyData {
        name: "SD(2B)₄",
        alias: "SD2B_4",
        quiver: Q2B,
        defect: SD,
        params: C,
        relations: &[
            "γη - αγ",
            "βα - ηβ",
            "α^{K+1}",
            "η^{K+1}",
            "βα^{K-1}",
            "α^{K-1}γ",
            "γη^{K-1}",
            "η^{K-1}β",
            "γβ - α^2",
            "βγ - η^2(1 + cη^{K-2})",
        ],
        figure: F5,
    },
    FamilyData {
        name: "Q(2B)₁",
        alias: "Q2B_1",
        quiver: Q2B,
        defect: Q,
        params: C,
        relations: &[
            "ηβ - βα(γβα)",
            "γη - αγ(βαγ)",
            "α^2 - γβ(αγβ) - c(αγβ)^2",
            "βγ - η^{K-1}",
            "βα^2",
        ],
        figure: F4,
    },
    FamilyData {
        name: "Q(2B)₂",
        alias: "Q2B_2",
        quiver: Q2B,
        defect: Q,
        params: PAC,
        relations: &[
            "γη - αγ",
            "βα - ηβ",
            "α^{K+1}",
            "η^{K+1}",
            "βα^{K-1}",
            "α^{K-1}γ",
            "γβ - p(α)α^2",
            "βγ - p(η)η^2 - aη^{K-1} - cη^K",
        ],
        figure: F5,
    },
    FamilyData {
        name: "D(3A)₁",
        alias: "D3A_1",
        quiver: Q3A,
        defect: D,
        params: NONE,
        relations: &["γβ", "δη", "(ηδβγ)^K - (βγηδ)^K"],
        figure: F6,
    },
    FamilyData {
        name: "SD(3A)₁",
        alias: "SD3A_1",
        quiver: Q3A,
        defect: SD,
        params: NONE,
        relations: &["γβ", "δηδ - δβγ(ηδβγ)^{K-1}", "ηδη - βγη(δβγη)^{K-1}"],
        figure: F7,
    },
    FamilyData {
        name: "Q(3A)₂",
        alias: "Q3A_2",
        quiver: Q3A,
        defect: Q,
        params: NONE,
        relations: &[
            "βγβ - ηδβ(γηδβ)^{K-1}",
            "γβγ - γηδ(βγηδ)^{K-1}",
            "δβγβ",
            "δηδ - δβγ(ηδβγ)^{K-1}",
            "ηδη - βγη(δβγη)^{K-1}",
            "γηδη",
        ],
        figure: F8,
    },
    FamilyData {
        name: "D(3B)₁",
        alias: "D3B_1",
        quiver: Q3B,
        defect: D,
        params: NONE,
        relations: &["βα", "αγ", "γβ", "δη", "ηδβγ - βγηδ", "α^K - γηδβ"],
        figure: F9,
    },
    FamilyData {
        name: "SD(3B)₁",
        alias: "SD3B_1",
        quiver: Q3B,
        defect: SD,
        params: NONE,
        relations: &["βα", "αγ", "γβ", "δηδ - δβγ", "ηδη - βγη", "α^K - γηδβ"],
        figure: F10,
    },
    FamilyData {
        name: "SD(3B)₂",
        alias: "SD3B_2",
        quiver: Q3B,
        defect: SD,
        params: NONE,
        relations: &["δη", "γβ - α^{K-1}", "αγ - γηδ(βγηδ)", "βα - ηδβ(γηδβ)"],
        figure: F11,
    },
    FamilyData {
        name: "Q(3B)",
        alias: "Q3B",
        quiver: Q3B,
        defect: Q,
        params: NONE,
        relations: &[
            "γβ - α^{K-1}",
            "αγ - γηδ(βγηδ)",
            "βα - ηδβ(γηδβ)",
            "δηδ - δβγ(ηδβγ)",
            "ηδη - βγη(δβγη)",
            "βα^2",
            "δηδβ",
        ],
        figure: F12,
    },
    FamilyData {
        name: "SD(3C)₂,₁",
        alias: "SD3C_21",
        quiver: Q3C,
        defect: SD,
        params: NONE,
        relations: &["ρβ", "δρ", "ρη", "γρ", "βγ - ηδ", "(βγ)^2 - ρ^K", "δβγβ", "γηδη"],
        figure: F13,
    },
    FamilyData {
        name: "SD(3C)₂,₂",
        alias: "SD3C_22",
        quiver: Q3C,
        defect: SD,
        params: NONE,
        relations: &[
            "ρβ",
            "δρ",
            "ρη",
            "γρ",
            "βγ - ηδ",
            "(βγ)^K - ρ^2",
            "δβ(γβ)^{K-1}",
            "γη(δη)^{K-1}",
        ],
        figure: F14,
    },
    FamilyData {
        name: "SD(3D)",
        alias: "SD3D",
        quiver: Q3D,
        defect: SD,
        params: NONE,
        relations: &["ξδ", "ηξ", "δη", "γβ - α^{K-1}", "αγ - γηδ", "βα - ηδβ", "ξ^2 - δβγη"],
        figure: F10,
    },
    FamilyData {
        name: "SD(3H)₁",
        alias: "SD3H_1",
        quiver: Q3H,
        defect: SD,
        params: NONE,
        relations: &["λδ - γβγ", "βλ - η(δη)^{K-1}", "ηδβ", "δβγ", "γη"],
        figure: F15,
    },
    FamilyData {
        name: "SD(3H)₂",
        alias: "SD3H_2",
        quiver: Q3H,
        defect: SD,
        params: NONE,
        relations: &["λδ - γ(βγ)^{K-1}", "βλ - ηδη", "ηδβ", "δβγ", "γη"],
        figure: F16,
    },
    FamilyData {
        name: "D(3K)",
        alias: "D3K",
        quiver: Q3K,
        defect: D,
        params: NONE,
        relations: &[
            "δβ",
            "λδ",
            "βλ",
            "κγ",
            "ηκ",
            "γη",
            "γβ - λκ",
            "κλ - (δη)^K",
            "(ηδ)^K - βγ",
        ],
        figure: F17,
    },
    FamilyData {
        name: "Q(3K)",
        alias: "Q3K",
        quiver: Q3K,
        defect: Q,
        params: NONE,
        relations: &[
            "δβ - κλκ",
            "γη - λκλ",
            "λδ - γβγ",
            "ηκ - βγβ",
            "βλ - η(δη)^{K-1}",
            "κγ - δ(ηδ)^{K-1}",
            "δβγ",
            "γηδ",
            "ηκλ",
        ],
        figure: F18,
    },
];
