//! A small language for relations: `α^2 - c(γβα)^K`, `βγ - p(η)η^2 - aη^{K-1}`.
//!
//! Juxtaposition is the path product in written order, `^` takes an integer,
//! `K` or a braced `{K±j}`, and `c`, `a`, `p(x)` are the family parameters.
//! Signs are irrelevant in characteristic two and are accepted for readability.

use crate::scalars::{FField, Fe};
use crate::{Error, Result};

use super::{Elem, Quiver};

/// Values substituted into a relation template.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelParams {
    /// The exponent K, always 2^{n−2} for the catalog families.
    pub k: u64,
    pub c: Fe,
    pub a: Fe,
    /// Coefficients of p(t) in ascending degree.
    pub p: Vec<Fe>,
}

impl RelParams {
    pub fn for_n(n: u32) -> RelParams {
        RelParams { k: 1 << (n - 2), c: 0, a: 1, p: vec![1] }
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    q: &'a Quiver,
    f: FField,
    params: &'a RelParams,
}

pub fn parse_relation(q: &Quiver, f: FField, text: &str, params: &RelParams) -> Result<Elem> {
    let mut p = Parser {
        chars: text.chars().filter(|c| !c.is_whitespace()).collect(),
        pos: 0,
        q,
        f,
        params,
    };
    let e = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(p.err("trailing input"));
    }
    let mut ends = None;
    for w in e.terms.keys() {
        if w.0.is_empty() {
            return Err(Error::Parse(format!("`{text}` has a trivial-path term")));
        }
        let here = q.endpoints(&w.0);
        if *ends.get_or_insert(here) != here {
            return Err(Error::Parse(format!("`{text}` is not homogeneous in source and target")));
        }
    }
    Ok(e)
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        let s: String = self.chars.iter().collect();
        Error::Parse(format!("{msg} at offset {} in `{s}`", self.pos))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Elem> {
        self.eat('-');
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            if c == '+' || c == '-' || c == '−' {
                self.pos += 1;
                acc = acc.add(&self.term()?);
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Elem> {
        let mut acc = Elem::one();
        let mut any = false;
        while let Some(c) = self.peek() {
            if matches!(c, '+' | '-' | '−' | ')') {
                break;
            }
            let factor = self.factor()?;
            acc = self.product(&acc, &factor)?;
            any = true;
        }
        if !any {
            return Err(self.err("empty term"));
        }
        Ok(acc)
    }

    fn product(&self, x: &Elem, y: &Elem) -> Result<Elem> {
        x.mul(y, self.q, &self.f).map_err(|(u, v)| {
            Error::Parse(format!(
                "`{}` followed by `{}` is not a path when composing right to left",
                self.q.format_word(&u),
                self.q.format_word(&v)
            ))
        })
    }

    fn factor(&mut self) -> Result<Elem> {
        let base = self.atom()?;
        if self.eat('^') {
            let k = self.exponent()?;
            let mut out = Elem::one();
            for _ in 0..k {
                out = self.product(&out, &base)?;
            }
            Ok(out)
        } else {
            Ok(base)
        }
    }

    fn exponent(&mut self) -> Result<u64> {
        if self.eat('{') {
            let base = self.exponent()?;
            let v = if self.eat('+') {
                base + self.integer()?
            } else if self.eat('-') || self.eat('−') {
                base.checked_sub(self.integer()?).ok_or_else(|| self.err("negative exponent"))?
            } else {
                base
            };
            if !self.eat('}') {
                return Err(self.err("expected `}`"));
            }
            Ok(v)
        } else if self.eat('K') {
            Ok(self.params.k)
        } else {
            self.integer()
        }
    }

    fn integer(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.err("integer overflow"))
    }

    fn atom(&mut self) -> Result<Elem> {
        let c = self.peek().ok_or_else(|| self.err("unexpected end"))?;
        if c.is_ascii_digit() {
            let k = self.integer()?;
            return Ok(Elem::one().scale(&self.f, (k & 1) as Fe));
        }
        self.pos += 1;
        match c {
            '(' => {
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(e)
            }
            'c' => Ok(Elem::one().scale(&self.f, self.params.c)),
            'a' => Ok(Elem::one().scale(&self.f, self.params.a)),
            'p' => {
                if !self.eat('(') {
                    return Err(self.err("expected `(` after p"));
                }
                let x = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected `)`"));
                }
                let mut out = Elem::zero();
                let mut power = Elem::one();
                for &coef in &self.params.p {
                    out = out.add(&power.scale(&self.f, coef));
                    power = self.product(&power, &x)?;
                }
                Ok(out)
            }
            sym => match self.q.arrow_by_symbol(sym) {
                Some(i) => Ok(Elem::monomial(vec![i as u8], 1)),
                None => {
                    self.pos -= 1;
                    Err(self.err(&format!("unknown symbol `{sym}`")))
                }
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{QuiverId, Word};

    #[test]
    fn powers_and_parameters() {
        let q = QuiverId::Q2A.quiver();
        let f = FField::gf2();
        let mut params = RelParams::for_n(3);
        params.c = 1;
        let e = parse_relation(&q, f, "α^2 - c(γβα)^K", &params).unwrap();
        assert_eq!(e.terms.len(), 2);
        assert!(e.terms.contains_key(&Word(vec![0, 0])));
        assert!(e.terms.contains_key(&Word(vec![2, 1, 0, 2, 1, 0])));
        params.c = 0;
        let e = parse_relation(&q, f, "α^2 - c(γβα)^K", &params).unwrap();
        assert_eq!(e.terms.len(), 1);
    }

    #[test]
    fn braced_exponents() {
        let q = QuiverId::Q2A.quiver();
        let e = parse_relation(&q, FField::gf2(), "βα(γβα)^{K-1}", &RelParams::for_n(4)).unwrap();
        assert_eq!(e.leading().unwrap().0 .0.len(), 11);
    }

    #[test]
    fn rejects_left_to_right_words() {
        let q = QuiverId::Q3A.quiver();
        assert!(parse_relation(&q, FField::gf2(), "βδ", &RelParams::for_n(4)).is_err());
        assert!(parse_relation(&q, FField::gf2(), "γβ", &RelParams::for_n(4)).is_ok());
    }

    #[test]
    fn polynomial_parameter() {
        let q = QuiverId::Q2B.quiver();
        let mut params = RelParams::for_n(4);
        params.p = vec![1, 1];
        let e = parse_relation(&q, FField::gf2(), "p(α)α^2", &params).unwrap();
        assert_eq!(e.terms.len(), 2);
    }
}
