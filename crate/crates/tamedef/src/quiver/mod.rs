//! Quivers, path algebras and finite-dimensional quotients kQ/I.
//!
//! Paths compose right to left: the word `βγ` runs γ first and then β, so a
//! word `a₁a₂…a_k` is a path exactly when `target(a_{i+1}) = source(a_i)`.

mod algebra;
mod element;
mod groebner;
mod parse;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use algebra::PresentedAlgebra;
pub use element::{Elem, Word};
pub use groebner::{complete, RewriteSystem, DEFAULT_BASIS_CAP};
pub use parse::{parse_relation, RelParams};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub symbol: char,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Quiver {
    name: String,
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

/// The quiver shapes occurring for tame non-local 2-blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum QuiverId {
    Q2A,
    Q2B,
    Q3A,
    Q3B,
    Q3C,
    Q3D,
    Q3H,
    Q3K,
}

impl QuiverId {
    pub const ALL: [QuiverId; 8] = [
        QuiverId::Q2A,
        QuiverId::Q2B,
        QuiverId::Q3A,
        QuiverId::Q3B,
        QuiverId::Q3C,
        QuiverId::Q3D,
        QuiverId::Q3H,
        QuiverId::Q3K,
    ];

    pub fn label(self) -> &'static str {
        match self {
            QuiverId::Q2A => "2A",
            QuiverId::Q2B => "2B",
            QuiverId::Q3A => "3A",
            QuiverId::Q3B => "3B",
            QuiverId::Q3C => "3C",
            QuiverId::Q3D => "3D",
            QuiverId::Q3H => "3H",
            QuiverId::Q3K => "3K",
        }
    }

    pub fn vertex_count(self) -> usize {
        match self {
            QuiverId::Q2A | QuiverId::Q2B => 2,
            _ => 3,
        }
    }

    pub fn quiver(self) -> Quiver {
        const BASE_3A: &[(char, usize, usize)] = &[('β', 1, 0), ('γ', 0, 1), ('δ', 0, 2), ('η', 2, 0)];
        const BASE_3H: &[(char, usize, usize)] = &[('β', 0, 1), ('γ', 1, 0), ('λ', 2, 0), ('δ', 1, 2), ('η', 2, 1)];
        let arrows: Vec<(char, usize, usize)> = match self {
            QuiverId::Q2A => vec![('α', 0, 0), ('β', 0, 1), ('γ', 1, 0)],
            QuiverId::Q2B => vec![('α', 0, 0), ('β', 0, 1), ('γ', 1, 0), ('η', 1, 1)],
            QuiverId::Q3A => BASE_3A.to_vec(),
            QuiverId::Q3B => [BASE_3A, &[('α', 1, 1)]].concat(),
            QuiverId::Q3C => [BASE_3A, &[('ρ', 0, 0)]].concat(),
            QuiverId::Q3D => [BASE_3A, &[('α', 1, 1), ('ξ', 2, 2)]].concat(),
            QuiverId::Q3H => BASE_3H.to_vec(),
            QuiverId::Q3K => [BASE_3H, &[('κ', 0, 2)]].concat(),
        };
        let vertices = (0..self.vertex_count()).map(|v| v.to_string()).collect();
        let arrows = arrows
            .into_iter()
            .map(|(symbol, source, target)| Arrow {
                name: ascii_name(symbol).to_string(),
                symbol,
                source,
                target,
            })
            .collect();
        Quiver::new(self.label(), vertices, arrows).expect("built-in quiver is well formed")
    }
}

impl fmt::Display for QuiverId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// ASCII spelling of a Greek arrow symbol.
pub fn ascii_name(symbol: char) -> &'static str {
    match symbol {
        'α' => "alpha",
        'β' => "beta",
        'γ' => "gamma",
        'δ' => "delta",
        'η' => "eta",
        'κ' => "kappa",
        'λ' => "lambda",
        'ρ' => "rho",
        'ξ' => "xi",
        _ => "?",
    }
}

impl Quiver {
    pub fn new(name: &str, vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Quiver> {
        if vertices.len() > u8::MAX as usize || arrows.len() > u8::MAX as usize {
            return Err(Error::Domain("quiver too large".into()));
        }
        for (i, a) in arrows.iter().enumerate() {
            if a.source >= vertices.len() || a.target >= vertices.len() {
                return Err(Error::Domain(format!("arrow {} has an undeclared endpoint", a.name)));
            }
            if arrows[..i].iter().any(|b| b.name == a.name || b.symbol == a.symbol) {
                return Err(Error::Domain(format!("duplicate arrow label {}", a.name)));
            }
        }
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::Domain(format!("duplicate vertex label {v}")));
            }
        }
        Ok(Quiver { name: name.to_string(), vertices, arrows })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }

    pub fn arrow_by_symbol(&self, c: char) -> Option<usize> {
        self.arrows.iter().position(|a| a.symbol == c)
    }

    pub fn arrow_by_name(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Same vertices, every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow { source: a.target, target: a.source, ..a.clone() })
            .collect();
        Quiver { name: format!("{}^op", self.name), vertices: self.vertices.clone(), arrows }
    }

    /// Whether the written word is a path (right-to-left composition).
    pub fn is_path(&self, w: &[u8]) -> bool {
        w.windows(2).all(|p| self.arrows[p[1] as usize].target == self.arrows[p[0] as usize].source)
    }

    /// (source, target) of a nonempty path.
    pub fn endpoints(&self, w: &[u8]) -> (usize, usize) {
        let last = &self.arrows[*w.last().expect("nonempty word") as usize];
        let first = &self.arrows[w[0] as usize];
        (last.source, first.target)
    }

    pub fn format_word(&self, w: &[u8]) -> String {
        w.iter().map(|&a| self.arrows[a as usize].symbol).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_quivers_are_well_formed() {
        for id in QuiverId::ALL {
            let q = id.quiver();
            assert_eq!(q.vertex_count(), id.vertex_count());
        }
        assert_eq!(QuiverId::Q3K.quiver().arrow_count(), 6);
        assert_eq!(QuiverId::Q3D.quiver().arrow_count(), 6);
    }

    #[test]
    fn right_to_left_paths() {
        let q = QuiverId::Q3K.quiver();
        let beta = q.arrow_by_symbol('β').unwrap() as u8;
        let delta = q.arrow_by_symbol('δ').unwrap() as u8;
        assert!(q.is_path(&[delta, beta]));
        assert!(!q.is_path(&[beta, delta]));
        assert_eq!(q.endpoints(&[delta, beta]), (0, 2));
    }
}
