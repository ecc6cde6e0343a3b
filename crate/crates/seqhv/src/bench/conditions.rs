//! Bundled constraint dataset: prime/target template pairs with acceptance
//! criteria, modelling characteristic sequence edits (deletion, insertion,
//! substitution, transposition, mirrored distractors) at varying positions.
//!
//! Templates are written over the digits `0`-`9` plus the placeholder `d`.
//! Digits denote fixed symbols shared between prime and target; `d` denotes
//! a distractor symbol absent from the target alphabet. All `d` occurrences
//! within a pair stand for one and the same symbol, so `12dd5` contains a
//! doubled distractor rather than two distinct ones.

use std::sync::OnceLock;

use crate::bench::criteria::CriteriaExpr;
use crate::error::{Error, Result};

/// One row of the constraint dataset.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstraintCondition {
    id: u32,
    prime_template: String,
    target_template: String,
    criteria: CriteriaExpr,
    criteria_text: String,
}

impl ConstraintCondition {
    pub fn id(&self) -> u32 {
        self.id
    }

    pub fn prime_template(&self) -> &str {
        &self.prime_template
    }

    pub fn target_template(&self) -> &str {
        &self.target_template
    }

    pub fn criteria(&self) -> &CriteriaExpr {
        &self.criteria
    }

    /// The criteria exactly as written in the dataset.
    pub fn criteria_text(&self) -> &str {
        &self.criteria_text
    }

    /// Turns the templates into concrete symbol strings. Digit `k` maps to
    /// the `k`-th lowercase letter and `d` maps to `z`, so instantiation is
    /// deterministic and the distractor never collides with a digit letter.
    pub fn instantiate_pair(&self) -> (String, String) {
        (
            instantiate(&self.prime_template),
            instantiate(&self.target_template),
        )
    }
}

fn instantiate(template: &str) -> String {
    template
        .chars()
        .map(|c| match c {
            '0'..='9' => (b'a' + (c as u8 - b'0')) as char,
            'd' => 'z',
            other => other,
        })
        .collect()
}

const EMBEDDED: &str = include_str!("../../data/conditions.csv");

/// The bundled dataset, parsed once. Ids are unique and every criteria
/// reference points at a row in the set.
pub fn conditions() -> &'static [ConstraintCondition] {
    static SET: OnceLock<Vec<ConstraintCondition>> = OnceLock::new();
    SET.get_or_init(|| parse_conditions(EMBEDDED).expect("bundled condition data is well-formed"))
}

fn parse_conditions(text: &str) -> Result<Vec<ConstraintCondition>> {
    let mut lines = text.lines();
    let header = lines.next().unwrap_or("");
    if header != "id,prime_template,target_template,criteria" {
        return Err(Error::Data(format!("unexpected condition header: {header:?}")));
    }
    let mut rows = Vec::new();
    for (i, line) in lines.enumerate() {
        let lineno = i + 2;
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 4 {
            return Err(Error::Data(format!(
                "condition line {lineno}: expected 4 fields, found {}",
                fields.len()
            )));
        }
        let id: u32 = fields[0]
            .parse()
            .map_err(|_| Error::Data(format!("condition line {lineno}: bad id {:?}", fields[0])))?;
        for tmpl in [fields[1], fields[2]] {
            if tmpl.is_empty() || !tmpl.chars().all(|c| c.is_ascii_digit() || c == 'd') {
                return Err(Error::Data(format!(
                    "condition line {lineno}: template {tmpl:?} must be nonempty digits or 'd'"
                )));
            }
        }
        let criteria = CriteriaExpr::parse(fields[3]).map_err(|e| {
            Error::Data(format!("condition line {lineno}: {e}"))
        })?;
        rows.push(ConstraintCondition {
            id,
            prime_template: fields[1].into(),
            target_template: fields[2].into(),
            criteria,
            criteria_text: fields[3].into(),
        });
    }
    if rows.is_empty() {
        return Err(Error::Data("condition data has no rows".into()));
    }
    let mut ids: Vec<u32> = rows.iter().map(|r| r.id).collect();
    ids.sort_unstable();
    ids.dedup();
    if ids.len() != rows.len() {
        return Err(Error::Data("condition ids are not unique".into()));
    }
    for row in &rows {
        for k in row.criteria.referenced_ids() {
            if ids.binary_search(&k).is_err() {
                return Err(Error::Data(format!(
                    "condition {} references missing condition {k}",
                    row.id
                )));
            }
            if k == row.id {
                return Err(Error::Data(format!("condition {} references itself", row.id)));
            }
        }
    }
    Ok(rows)
}
