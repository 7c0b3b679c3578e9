use std::sync::Arc;

use serde::Serialize;

use crate::module::{layered_module, uniserial, Layer, RepModule};
use crate::quiver::{PresentedAlgebra, QuiverId};
use crate::{DefectType, Error, Result};

use super::Family;

/// How a maximally ordinary module is assembled.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Shape {
    /// Descending composition factors.
    Uniserial { factors: Vec<usize> },
    /// Top T_top over the direct sum of the `below` simples.
    TopOver { top: usize, below: Vec<usize> },
    /// The `above` simples over socle T_socle.
    SocleUnder { above: Vec<usize>, socle: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Recipe {
    pub label: String,
    pub shape: Shape,
}

impl Recipe {
    fn uni(factors: &[usize]) -> Recipe {
        let label = if factors.len() == 1 {
            format!("T{}", factors[0])
        } else {
            format!("u{}", factors.iter().map(|v| v.to_string()).collect::<String>())
        };
        Recipe { label, shape: Shape::Uniserial { factors: factors.to_vec() } }
    }

    /// Radical layers, top first.
    pub fn layers(&self) -> Vec<Layer> {
        match &self.shape {
            Shape::Uniserial { factors } => factors.iter().map(|&v| Layer::simple(v)).collect(),
            Shape::TopOver { top, below } => vec![Layer::simple(*top), Layer(below.clone())],
            Shape::SocleUnder { above, socle } => vec![Layer(above.clone()), Layer::simple(*socle)],
        }
    }

    /// Simples in the top.
    pub fn top(&self) -> Vec<usize> {
        match &self.shape {
            Shape::Uniserial { factors } => vec![factors[0]],
            Shape::TopOver { top, .. } => vec![*top],
            Shape::SocleUnder { above, .. } => above.clone(),
        }
    }

    pub fn socle(&self) -> Vec<usize> {
        match &self.shape {
            Shape::Uniserial { factors } => vec![*factors.last().unwrap()],
            Shape::TopOver { below, .. } => below.clone(),
            Shape::SocleUnder { socle, .. } => vec![*socle],
        }
    }

    pub fn length(&self) -> usize {
        self.layers().iter().map(|l| l.0.len()).sum()
    }

    pub fn factors(&self) -> Option<&[usize]> {
        match &self.shape {
            Shape::Uniserial { factors } => Some(factors),
            _ => None,
        }
    }

    /// Human-readable layers, e.g. `T0|T1⊕T2`.
    pub fn describe(&self) -> String {
        self.layers()
            .iter()
            .map(|l| l.0.iter().map(|v| format!("T{v}")).collect::<Vec<_>>().join("⊕"))
            .collect::<Vec<_>>()
            .join("|")
    }

    /// Builds the module; socle-described shapes come from the opposite algebra by duality.
    pub fn build(&self, alg: &Arc<PresentedAlgebra>) -> Result<RepModule> {
        match &self.shape {
            Shape::Uniserial { factors } => uniserial(alg, factors),
            Shape::TopOver { .. } => layered_module(alg, &self.layers()),
            Shape::SocleUnder { above, socle } => {
                let op = alg.opposite();
                let m = layered_module(&op, &[Layer::simple(*socle), Layer(above.clone())])?;
                Ok(m.dual())
            }
        }
    }

    /// Whether `sel` names this recipe: its label, or `top-Tk` / `soc-Tk`.
    pub fn matches(&self, sel: &str) -> bool {
        let s = sel.trim();
        if s.eq_ignore_ascii_case(&self.label) {
            return true;
        }
        let pick = |prefix: &str| {
            s.strip_prefix(prefix).and_then(|r| r.trim_start_matches(['T', 't']).parse::<usize>().ok())
        };
        if let Some(v) = pick("top-") {
            return self.top() == [v];
        }
        if let Some(v) = pick("soc-") {
            return self.socle() == [v];
        }
        false
    }
}

impl Family {
    /// The modules with stable endomorphism ring k whose Brauer character is that of a
    /// height-one character. The quaternion families use their own lists at n = 3; for the
    /// other families the n = 3 list is the generic one, whose modules are not maximally ordinary.
    pub fn mo_recipes(&self, n: u32) -> Result<Vec<Recipe>> {
        self.check_n(n)?;
        if n < 3 {
            return Ok(Vec::new());
        }
        let q8 = self.defect_type() == DefectType::Q && n == 3;
        let u = Recipe::uni;
        let alias = self.alias();
        let list = match self.quiver_id() {
            _ if q8 && self.quiver_id() == QuiverId::Q3K => {
                vec![u(&[0, 1]), u(&[1, 0]), u(&[0, 2]), u(&[2, 0]), u(&[1, 2]), u(&[2, 1])]
            }
            _ if q8 => vec![u(&[1]), u(&[2]), u(&[0, 1, 0, 2]), u(&[0, 2, 0, 1]), u(&[1, 0, 2, 0]), u(&[2, 0, 1, 0])],
            QuiverId::Q2A => vec![u(&[0, 0, 1]), u(&[1, 0, 0])],
            QuiverId::Q2B if alias == "SD2B_4" || alias == "Q2B_2" => vec![u(&[0, 1]), u(&[1, 0])],
            QuiverId::Q2B => vec![u(&[1])],
            QuiverId::Q3A => vec![u(&[0, 1, 0, 2]), u(&[2, 0, 1, 0]), u(&[0, 2, 0, 1]), u(&[1, 0, 2, 0])],
            QuiverId::Q3B | QuiverId::Q3D => vec![u(&[1])],
            QuiverId::Q3C if alias == "SD3C_21" => vec![u(&[0])],
            QuiverId::Q3C => vec![
                Recipe { label: "top-T0".into(), shape: Shape::TopOver { top: 0, below: vec![1, 2] } },
                Recipe { label: "soc-T0".into(), shape: Shape::SocleUnder { above: vec![1, 2], socle: 0 } },
                u(&[1, 0, 2]),
                u(&[2, 0, 1]),
            ],
            QuiverId::Q3H if alias == "SD3H_2" => vec![u(&[0, 1]), u(&[1, 0])],
            QuiverId::Q3H | QuiverId::Q3K => vec![u(&[1, 2]), u(&[2, 1])],
        };
        Ok(list)
    }

    pub fn recipe(&self, n: u32, sel: &str) -> Result<Recipe> {
        let all = self.mo_recipes(n)?;
        all.iter().find(|r| r.matches(sel)).cloned().ok_or_else(|| {
            let labels: Vec<&str> = all.iter().map(|r| r.label.as_str()).collect();
            Error::Domain(format!("{} has no recipe {sel:?}; available: {}", self.name(), labels.join(", ")))
        })
    }

    /// Whether the recipe's module belongs to a 3-tube.
    pub fn tube_rule(&self, recipe: &Recipe) -> bool {
        let top_or_soc = |v: usize| recipe.top() == [v] || recipe.socle() == [v];
        match self.defect_type() {
            DefectType::D => true,
            DefectType::Q => false,
            DefectType::SD => match self.alias() {
                "SD2A_2" | "SD2B_1" | "SD3B_1" | "SD3C_21" => true,
                "SD3A_1" => top_or_soc(1),
                "SD3C_22" => top_or_soc(0),
                "SD3H_1" => recipe.top() == [1],
                "SD3H_2" => recipe.top() == [0],
                _ => false,
            },
        }
    }
}
