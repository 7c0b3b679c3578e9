use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::scalars::{FField, Fe};

use super::Quiver;

/// A word in the arrows, compared length-first and then lexicographically by arrow index.
/// The empty word stands for the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<u8>);

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A linear combination of words.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Elem {
    pub terms: BTreeMap<Word, Fe>,
}

impl Elem {
    pub fn zero() -> Elem {
        Elem::default()
    }

    pub fn one() -> Elem {
        Elem::monomial(Vec::new(), 1)
    }

    pub fn monomial(w: Vec<u8>, c: Fe) -> Elem {
        let mut e = Elem::zero();
        e.add_term(Word(w), c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: Fe) {
        if c == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() ^= c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Elem) -> Elem {
        let mut out = self.clone();
        for (w, &c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn scale(&self, f: &FField, c: Fe) -> Elem {
        let mut out = Elem::zero();
        for (w, &x) in &self.terms {
            out.add_term(w.clone(), f.mul(x, c));
        }
        out
    }

    /// Product in written order; `Err` carries a pair of words that do not compose.
    pub fn mul(&self, other: &Elem, q: &Quiver, f: &FField) -> Result<Elem, (Vec<u8>, Vec<u8>)> {
        let mut out = Elem::zero();
        for (u, &a) in &self.terms {
            for (v, &b) in &other.terms {
                let joinable = match (u.0.last(), v.0.first()) {
                    (Some(&l), Some(&r)) => q.arrow(r as usize).target == q.arrow(l as usize).source,
                    _ => true,
                };
                if !joinable {
                    return Err((u.0.clone(), v.0.clone()));
                }
                let mut w = u.0.clone();
                w.extend_from_slice(&v.0);
                out.add_term(Word(w), f.mul(a, b));
            }
        }
        Ok(out)
    }

    pub fn leading(&self) -> Option<(&Word, Fe)> {
        self.terms.iter().next_back().map(|(w, &c)| (w, c))
    }

    pub fn reversed(&self) -> Elem {
        let mut out = Elem::zero();
        for (w, &c) in &self.terms {
            let mut r = w.0.clone();
            r.reverse();
            out.add_term(Word(r), c);
        }
        out
    }

    pub fn format(&self, q: &Quiver, f: &FField) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (w, &c) in self.terms.iter().rev() {
            let body = if w.0.is_empty() { "1".to_string() } else { q.format_word(&w.0) };
            if c == 1 {
                parts.push(body);
            } else {
                parts.push(format!("{}·{}", f_label(f, c), body));
            }
        }
        parts.join(" + ")
    }
}

fn f_label(_f: &FField, c: Fe) -> String {
    format!("[{c}]")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_order_is_length_first() {
        assert!(Word(vec![5]) < Word(vec![0, 0]));
        assert!(Word(vec![0, 1]) < Word(vec![1, 0]));
        assert!(Word(vec![]) < Word(vec![0]));
    }

    #[test]
    fn cancellation_in_characteristic_two() {
        let mut e = Elem::monomial(vec![1, 2], 1);
        e.add_term(Word(vec![1, 2]), 1);
        assert!(e.is_zero());
    }
}
