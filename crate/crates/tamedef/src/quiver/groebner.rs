//! Completion of a relation ideal to a confluent rewriting system under the
//! length-lexicographic word order.

use std::collections::{BTreeMap, BTreeSet, BinaryHeap, HashMap};
use std::cmp::Reverse;

use crate::scalars::{FField, Fe};
use crate::{Error, Result};

use super::{Elem, Quiver, Word};

/// Refuse to enumerate more than this many normal words.
pub const DEFAULT_BASIS_CAP: usize = 20_000;

const MAX_RULES: usize = 20_000;
const MAX_STEPS: usize = 2_000_000;

/// A monic rule `tip → tail`; the tail only contains smaller words.
#[derive(Clone, Debug)]
pub struct Rule {
    pub tip: Vec<u8>,
    pub tail: Vec<(Vec<u8>, Fe)>,
}

/// A reduced Gröbner basis of a two-sided ideal in the path algebra.
#[derive(Clone, Debug, Default)]
pub struct RewriteSystem {
    rules: Vec<Rule>,
    by_tip: HashMap<Vec<u8>, usize>,
    tip_lengths: BTreeSet<usize>,
}

impl RewriteSystem {
    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn tips(&self) -> impl Iterator<Item = &[u8]> {
        self.rules.iter().map(|r| r.tip.as_slice())
    }

    fn push(&mut self, rule: Rule) {
        self.tip_lengths.insert(rule.tip.len());
        self.by_tip.insert(rule.tip.clone(), self.rules.len());
        self.rules.push(rule);
    }

    fn rebuild(rules: Vec<Rule>) -> RewriteSystem {
        let mut rs = RewriteSystem::default();
        for r in rules {
            rs.push(r);
        }
        rs
    }

    /// First occurrence of a tip inside `w`: (offset, rule index).
    pub fn find_tip(&self, w: &[u8]) -> Option<(usize, usize)> {
        for start in 0..w.len() {
            for &l in &self.tip_lengths {
                if start + l > w.len() {
                    break;
                }
                if let Some(&r) = self.by_tip.get(&w[start..start + l]) {
                    return Some((start, r));
                }
            }
        }
        None
    }

    /// Whether some tip is a prefix of `w`.
    pub fn has_tip_prefix(&self, w: &[u8]) -> bool {
        self.tip_lengths.iter().any(|&l| l <= w.len() && self.by_tip.contains_key(&w[..l]))
    }

    pub fn is_normal(&self, w: &[u8]) -> bool {
        self.find_tip(w).is_none()
    }

    /// Normal form of an element.
    pub fn reduce(&self, f: &FField, e: &Elem) -> Elem {
        let mut pending: BTreeMap<Word, Fe> = e.terms.clone();
        let mut out = Elem::zero();
        while let Some((w, c)) = pending.pop_last() {
            match self.find_tip(&w.0) {
                None => out.add_term(w, c),
                Some((start, r)) => {
                    let rule = &self.rules[r];
                    let (pre, post) = (&w.0[..start], &w.0[start + rule.tip.len()..]);
                    for (x, d) in &rule.tail {
                        let mut nw = Vec::with_capacity(pre.len() + x.len() + post.len());
                        nw.extend_from_slice(pre);
                        nw.extend_from_slice(x);
                        nw.extend_from_slice(post);
                        let key = Word(nw);
                        let v = pending.get(&key).copied().unwrap_or(0) ^ f.mul(c, *d);
                        if v == 0 {
                            pending.remove(&key);
                        } else {
                            pending.insert(key, v);
                        }
                    }
                }
            }
        }
        out
    }
}

fn monic(f: &FField, e: &Elem) -> Option<Rule> {
    let (tip, lc) = e.leading()?;
    let inv = f.inv(lc).expect("nonzero leading coefficient");
    let tail = e
        .terms
        .iter()
        .filter(|(w, _)| *w != tip)
        .map(|(w, &c)| (w.0.clone(), f.mul(c, inv)))
        .collect();
    Some(Rule { tip: tip.0.clone(), tail })
}

fn rule_elem(r: &Rule) -> Elem {
    let mut e = Elem::monomial(r.tip.clone(), 1);
    for (w, c) in &r.tail {
        e.add_term(Word(w.clone()), *c);
    }
    e
}

fn wrap(e: &Elem, left: &[u8], right: &[u8]) -> Elem {
    let mut out = Elem::zero();
    for (w, &c) in &e.terms {
        out.add_term(Word([left, w.0.as_slice(), right].concat()), c);
    }
    out
}

/// Overlap S-elements between rules `a` and `b`: a suffix of a's tip equals a prefix of b's tip.
fn overlaps(a: &Rule, b: &Rule) -> Vec<Elem> {
    let mut out = Vec::new();
    let (s, t) = (&a.tip, &b.tip);
    for k in 1..s.len().min(t.len()) {
        if s[s.len() - k..] == t[..k] {
            let ea = wrap(&rule_elem(a), &[], &t[k..]);
            let eb = wrap(&rule_elem(b), &s[..s.len() - k], &[]);
            out.push(ea.add(&eb));
        }
    }
    out
}

struct Queued(Elem);

impl PartialEq for Queued {
    fn eq(&self, other: &Self) -> bool {
        self.0.leading().map(|x| x.0.clone()) == other.0.leading().map(|x| x.0.clone())
    }
}
impl Eq for Queued {}
impl PartialOrd for Queued {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Queued {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.leading().map(|x| x.0).cmp(&other.0.leading().map(|x| x.0))
    }
}

/// Buchberger completion processing the smallest pending element first.
/// `label` names the algebra in error messages.
pub fn complete(q: &Quiver, f: &FField, generators: &[Elem], label: &str) -> Result<RewriteSystem> {
    let fail = |reason: String| Error::Completion { family: label.to_string(), reason };
    let _ = q;
    let mut queue: BinaryHeap<Reverse<Queued>> =
        generators.iter().filter(|g| !g.is_zero()).cloned().map(|g| Reverse(Queued(g))).collect();
    let mut rs = RewriteSystem::default();
    let mut steps = 0usize;
    while let Some(Reverse(Queued(g))) = queue.pop() {
        steps += 1;
        if steps > MAX_STEPS {
            return Err(fail(format!("more than {MAX_STEPS} reduction steps")));
        }
        let h = rs.reduce(f, &g);
        let Some(rule) = monic(f, &h) else { continue };
        // Rules whose tip contains the new tip are retired and re-queued.
        let mut kept = Vec::with_capacity(rs.rules.len());
        for r in rs.rules.drain(..) {
            let contains = r.tip.len() >= rule.tip.len()
                && r.tip.windows(rule.tip.len()).any(|w| w == rule.tip.as_slice());
            if contains {
                queue.push(Reverse(Queued(rule_elem(&r))));
            } else {
                kept.push(r);
            }
        }
        for r in &kept {
            for s in overlaps(r, &rule).into_iter().chain(overlaps(&rule, r)) {
                queue.push(Reverse(Queued(s)));
            }
        }
        for s in overlaps(&rule, &rule) {
            queue.push(Reverse(Queued(s)));
        }
        kept.push(rule);
        if kept.len() > MAX_RULES {
            return Err(fail(format!("more than {MAX_RULES} rules")));
        }
        rs = RewriteSystem::rebuild(kept);
    }
    // Interreduce tails.
    let mut rules = rs.rules.clone();
    rules.sort_by_key(|a| Word(a.tip.clone()));
    let mut out = Vec::with_capacity(rules.len());
    for r in rules {
        let tail: Elem = {
            let mut e = Elem::zero();
            for (w, c) in &r.tail {
                e.add_term(Word(w.clone()), *c);
            }
            e
        };
        let red = rs.reduce(f, &tail);
        out.push(Rule { tip: r.tip, tail: red.terms.into_iter().rev().map(|(w, c)| (w.0, c)).collect() });
    }
    Ok(RewriteSystem::rebuild(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{parse_relation, QuiverId, RelParams};

    #[test]
    fn monomial_relations_stay_put() {
        let q = QuiverId::Q2A.quiver();
        let f = FField::gf2();
        let p = RelParams::for_n(3);
        let gens: Vec<Elem> =
            ["βγ", "α^2"].iter().map(|t| parse_relation(&q, f, t, &p).unwrap()).collect();
        let rs = complete(&q, &f, &gens, "test").unwrap();
        assert_eq!(rs.rules().len(), 2);
    }

    #[test]
    fn reduction_is_idempotent() {
        let q = QuiverId::Q2A.quiver();
        let f = FField::gf2();
        let p = RelParams::for_n(3);
        let gens: Vec<Elem> = ["βγ", "α^2", "(γβα)^K - (αγβ)^K"]
            .iter()
            .map(|t| parse_relation(&q, f, t, &p).unwrap())
            .collect();
        let rs = complete(&q, &f, &gens, "D(2A)").unwrap();
        let w = parse_relation(&q, f, "(γβα)^3", &p).unwrap();
        let once = rs.reduce(&f, &w);
        assert_eq!(rs.reduce(&f, &once), once);
    }
}
