//! Algebra names accepted on the command line.
//!
//! ```text
//! spec  := item ('+' item)*
//! item  := 'A(' n ')' | 'H(' m ')' | 'GH(' d ')' ('/' vector)? | 'F(' d ',' c ')'
//! vector:= '[' rational (',' rational)* ']'
//! ```
//!
//! The vector after `GH(d)/` spans the central line to factor out. It is given
//! either on the `y_ij` coordinates (length `½d(d-1)`, order `y12, y13, …`) or
//! on the full basis (length `½d(d+1)`).

use std::sync::Arc;

use crate::constructions::{abelian, central_quotient_gh, generalized_heisenberg, heisenberg};
use crate::hall::free_nilpotent;
use crate::lie::LieAlgebra;
use crate::linalg::{zero_vec, Rational};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraSpec {
    Abelian(usize),
    Heisenberg(usize),
    GeneralizedHeisenberg(usize),
    GhQuotient(usize, Vec<Rational>),
    Free(usize, usize),
    Sum(Vec<AlgebraSpec>),
}

impl AlgebraSpec {
    pub fn parse(input: &str) -> Result<Self> {
        let mut p = Parser { src: input, pos: 0 };
        let mut items = vec![p.item()?];
        loop {
            p.skip_ws();
            if p.eat('+') {
                items.push(p.item()?);
            } else {
                break;
            }
        }
        p.skip_ws();
        if p.pos != input.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(if items.len() == 1 {
            items.pop().expect("one item")
        } else {
            AlgebraSpec::Sum(items)
        })
    }

    pub fn build(&self) -> Result<Arc<LieAlgebra>> {
        Ok(match self {
            AlgebraSpec::Abelian(n) => Arc::new(abelian(*n)),
            AlgebraSpec::Heisenberg(m) => Arc::new(heisenberg(*m)?),
            AlgebraSpec::GeneralizedHeisenberg(d) => generalized_heisenberg(*d)?.algebra().clone(),
            AlgebraSpec::GhQuotient(d, w) => {
                let full = *d * (*d + 1) / 2;
                let ys = *d * d.saturating_sub(1) / 2;
                let w = if w.len() == ys && ys != full {
                    let mut v = zero_vec(full);
                    v[*d..].clone_from_slice(w);
                    v
                } else {
                    w.clone()
                };
                central_quotient_gh(*d, &w)?.0
            }
            AlgebraSpec::Free(d, c) => free_nilpotent(*d, *c)?.algebra().clone(),
            AlgebraSpec::Sum(items) => {
                let mut it = items.iter();
                let first = it.next().expect("sums have at least one term").build()?;
                let mut acc = first.as_ref().clone();
                for item in it {
                    acc = acc.direct_sum(&*item.build()?);
                }
                Arc::new(acc)
            }
        })
    }
}

pub fn parse_algebra(input: &str) -> Result<Arc<LieAlgebra>> {
    AlgebraSpec::parse(input)?.build()
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let digits = self.rest().len() - self.rest().trim_start_matches(|c: char| c.is_ascii_digit()).len();
        if digits == 0 {
            return Err(self.error("expected a non-negative integer"));
        }
        let text = &self.rest()[..digits];
        let value = text
            .parse()
            .map_err(|_| self.error("integer out of range"))?;
        self.pos += digits;
        Ok(value)
    }

    fn rational(&mut self) -> Result<Rational> {
        self.skip_ws();
        let len = self.rest().len()
            - self
                .rest()
                .trim_start_matches(|c: char| c.is_ascii_digit() || c == '-' || c == '/')
                .len();
        if len == 0 {
            return Err(self.error("expected a rational number"));
        }
        let text = &self.rest()[..len];
        let value = text
            .parse::<Rational>()
            .map_err(|_| self.error(&format!("bad rational {text:?}")))?;
        self.pos += len;
        Ok(value)
    }

    fn item(&mut self) -> Result<AlgebraSpec> {
        self.skip_ws();
        let start = self.pos;
        let name_len = self.rest().len()
            - self
                .rest()
                .trim_start_matches(|c: char| c.is_ascii_alphabetic())
                .len();
        let name = self.rest()[..name_len].to_string();
        self.pos += name_len;
        let spec = match name.as_str() {
            "A" | "H" | "GH" => {
                self.expect('(')?;
                let n = self.number()?;
                self.expect(')')?;
                match name.as_str() {
                    "A" => AlgebraSpec::Abelian(n),
                    "H" => AlgebraSpec::Heisenberg(n),
                    _ => {
                        if self.eat('/') {
                            AlgebraSpec::GhQuotient(n, self.vector()?)
                        } else {
                            AlgebraSpec::GeneralizedHeisenberg(n)
                        }
                    }
                }
            }
            "F" => {
                self.expect('(')?;
                let d = self.number()?;
                self.expect(',')?;
                let c = self.number()?;
                self.expect(')')?;
                AlgebraSpec::Free(d, c)
            }
            _ => {
                self.pos = start;
                return Err(self.error("expected one of A(n), H(m), GH(d), F(d,c)"));
            }
        };
        Ok(spec)
    }

    fn vector(&mut self) -> Result<Vec<Rational>> {
        self.expect('[')?;
        let mut v = vec![self.rational()?];
        while self.eat(',') {
            v.push(self.rational()?);
        }
        self.expect(']')?;
        Ok(v)
    }
}
