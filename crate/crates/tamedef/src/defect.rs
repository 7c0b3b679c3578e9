use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Isomorphism type of the defect group: dihedral, semidihedral or generalized quaternion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DefectType {
    D,
    SD,
    Q,
}

impl DefectType {
    pub const ALL: [DefectType; 3] = [DefectType::D, DefectType::SD, DefectType::Q];

    /// Smallest defect exponent n for which the type exists.
    pub fn n_min(self) -> u32 {
        match self {
            DefectType::D => 2,
            DefectType::Q => 3,
            DefectType::SD => 4,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            DefectType::D => "D",
            DefectType::SD => "SD",
            DefectType::Q => "Q",
        }
    }
}

impl fmt::Display for DefectType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DefectType {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "D" | "DIHEDRAL" => Ok(DefectType::D),
            "SD" | "SEMIDIHEDRAL" => Ok(DefectType::SD),
            "Q" | "QUATERNION" => Ok(DefectType::Q),
            other => Err(crate::Error::Domain(format!("unknown defect type `{other}`"))),
        }
    }
}
