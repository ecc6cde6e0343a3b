//! Acceptance criteria attached to constraint conditions.
//!
//! A criteria string is a conjunction of terms evaluated against the table
//! of per-condition mean similarities:
//!
//! ```text
//! EXPR := TERM+
//! TERM := 'Min' | CMP REF
//! CMP  := '<' | '>' | '='
//! REF  := '(' INT ')' | 'Min' | NUMBER
//! ```
//!
//! `<(1)` compares against condition 1's mean, `>0.95` against a literal,
//! `>Min` against the minimum over all conditions, and a bare `Min` asserts
//! the condition is the strict minimum itself. Only `>` may take the `Min`
//! reference. Equality is satisfied within a configurable tolerance.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CriteriaRef {
    /// Mean of the condition with this id.
    Cond(u32),
    /// Minimum mean over all conditions in the run.
    MinAll,
    /// Literal threshold.
    Value(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CriteriaTerm {
    Less(CriteriaRef),
    Greater(CriteriaRef),
    Equal(CriteriaRef),
    /// Strictly below every other condition's mean.
    IsMin,
}

/// Parsed conjunction of criteria terms. Parsing and printing round-trip.
#[derive(Debug, Clone, PartialEq)]
pub struct CriteriaExpr {
    terms: Vec<CriteriaTerm>,
}

impl CriteriaExpr {
    pub fn parse(text: &str) -> Result<Self> {
        Parser { text, pos: 0 }.parse()
    }

    pub fn terms(&self) -> &[CriteriaTerm] {
        &self.terms
    }

    /// Condition ids this expression compares against.
    pub fn referenced_ids(&self) -> Vec<u32> {
        self.terms
            .iter()
            .filter_map(|t| match t {
                CriteriaTerm::Less(CriteriaRef::Cond(k))
                | CriteriaTerm::Greater(CriteriaRef::Cond(k))
                | CriteriaTerm::Equal(CriteriaRef::Cond(k)) => Some(*k),
                _ => None,
            })
            .collect()
    }

    /// Evaluates the conjunction for condition `id` against the table of
    /// mean similarities. Equality terms pass within `eps`.
    ///
    /// # Errors
    ///
    /// `InvalidArgument` if `id` or a referenced condition is missing from
    /// the table.
    pub fn evaluate(&self, id: u32, means: &BTreeMap<u32, f64>, eps: f64) -> Result<bool> {
        let own = *means
            .get(&id)
            .ok_or_else(|| Error::InvalidArgument(format!("condition {id} missing from table")))?;
        let resolve = |r: &CriteriaRef| -> Result<f64> {
            match r {
                CriteriaRef::Cond(k) => means.get(k).copied().ok_or_else(|| {
                    Error::InvalidArgument(format!("criteria reference condition {k} missing from table"))
                }),
                CriteriaRef::MinAll => Ok(means
                    .values()
                    .copied()
                    .fold(f64::INFINITY, f64::min)),
                CriteriaRef::Value(v) => Ok(*v),
            }
        };
        for term in &self.terms {
            let pass = match term {
                CriteriaTerm::Less(r) => own < resolve(r)?,
                CriteriaTerm::Greater(r) => own > resolve(r)?,
                CriteriaTerm::Equal(r) => (own - resolve(r)?).abs() <= eps,
                CriteriaTerm::IsMin => means.iter().all(|(&k, &v)| k == id || own < v),
            };
            if !pass {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for CriteriaExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for term in &self.terms {
            let (op, r) = match term {
                CriteriaTerm::IsMin => {
                    f.write_str("Min")?;
                    continue;
                }
                CriteriaTerm::Less(r) => ('<', r),
                CriteriaTerm::Greater(r) => ('>', r),
                CriteriaTerm::Equal(r) => ('=', r),
            };
            write!(f, "{op}")?;
            match r {
                CriteriaRef::Cond(k) => write!(f, "({k})")?,
                CriteriaRef::MinAll => f.write_str("Min")?,
                CriteriaRef::Value(v) => write!(f, "{v}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for CriteriaExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CriteriaExpr::parse(s)
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn parse(mut self) -> Result<CriteriaExpr> {
        if self.text.is_empty() {
            return Err(self.err("empty criteria"));
        }
        let mut terms = Vec::new();
        while self.pos < self.text.len() {
            terms.push(self.term()?);
        }
        Ok(CriteriaExpr { terms })
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn err(&self, message: &str) -> Error {
        Error::CriteriaParse {
            position: self.pos,
            message: message.into(),
        }
    }

    fn term(&mut self) -> Result<CriteriaTerm> {
        if self.rest().starts_with("Min") {
            self.pos += 3;
            return Ok(CriteriaTerm::IsMin);
        }
        let op = match self.rest().as_bytes().first() {
            Some(b'<') => '<',
            Some(b'>') => '>',
            Some(b'=') => '=',
            _ => return Err(self.err("expected '<', '>', '=', or 'Min'")),
        };
        self.pos += 1;
        let r = self.reference(op)?;
        Ok(match op {
            '<' => CriteriaTerm::Less(r),
            '>' => CriteriaTerm::Greater(r),
            _ => CriteriaTerm::Equal(r),
        })
    }

    fn reference(&mut self, op: char) -> Result<CriteriaRef> {
        if self.rest().starts_with("Min") {
            if op != '>' {
                return Err(self.err("only '>' may compare against Min"));
            }
            self.pos += 3;
            return Ok(CriteriaRef::MinAll);
        }
        match self.rest().as_bytes().first() {
            Some(b'(') => {
                self.pos += 1;
                let digits = self.take_digits()?;
                let id: u32 = digits
                    .parse()
                    .map_err(|_| self.err("condition id out of range"))?;
                if id == 0 {
                    return Err(self.err("condition ids start at 1"));
                }
                if self.rest().as_bytes().first() != Some(&b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(CriteriaRef::Cond(id))
            }
            Some(b'0'..=b'9') => {
                let start = self.pos;
                self.take_digits()?;
                if self.rest().as_bytes().first() == Some(&b'.') {
                    self.pos += 1;
                    self.take_digits()
                        .map_err(|_| self.err("expected digits after '.'"))?;
                }
                let lit = &self.text[start..self.pos];
                let v: f64 = lit.parse().map_err(|_| self.err("malformed number"))?;
                Ok(CriteriaRef::Value(v))
            }
            _ => Err(self.err("expected '(', 'Min', or a number")),
        }
    }

    fn take_digits(&mut self) -> Result<&'a str> {
        let start = self.pos;
        while matches!(self.rest().as_bytes().first(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected digits"));
        }
        Ok(&self.text[start..self.pos])
    }
}
