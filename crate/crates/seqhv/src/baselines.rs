//! String similarity baselines: edit distance and ordered-bigram kernels.
//!
//! These operate on plain strings (unicode scalars) and need no random
//! state, which makes them the comparison point for the hypervector
//! measures in the benchmarks.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Window used by [`Baseline::KernelUob`]: ordered pairs up to position
/// difference `DEFAULT_KERNEL_WINDOW - 1` are counted.
pub const DEFAULT_KERNEL_WINDOW: usize = 3;

/// Classic edit distance (insert, delete, substitute; all cost 1) over
/// unicode scalars, two-row dynamic programming.
pub fn levenshtein(x: &str, y: &str) -> usize {
    let xs: Vec<char> = x.chars().collect();
    let ys: Vec<char> = y.chars().collect();
    if xs.is_empty() {
        return ys.len();
    }
    if ys.is_empty() {
        return xs.len();
    }
    let mut prev: Vec<usize> = (0..=ys.len()).collect();
    let mut cur = vec![0usize; ys.len() + 1];
    for (i, &cx) in xs.iter().enumerate() {
        cur[0] = i + 1;
        for (j, &cy) in ys.iter().enumerate() {
            let sub = prev[j] + usize::from(cx != cy);
            cur[j + 1] = sub.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[ys.len()]
}

/// Normalization for [`lev_sim`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LevNorm {
    /// `1 - d / (|x| + |y|)`
    Sum,
    /// `1 - d / max(|x|, |y|)`
    Max,
}

/// Edit distance turned into a similarity in `[0, 1]`. With `db` the first
/// and last symbols of both strings are doubled before measuring, and the
/// normalizing lengths are those of the doubled strings.
///
/// # Errors
///
/// `EmptySequence` if either string is empty.
pub fn lev_sim(x: &str, y: &str, norm: LevNorm, db: bool) -> Result<f64> {
    if x.is_empty() || y.is_empty() {
        return Err(Error::EmptySequence);
    }
    let (x, y) = if db {
        (double_edges(x), double_edges(y))
    } else {
        (x.to_owned(), y.to_owned())
    };
    let d = levenshtein(&x, &y) as f64;
    let nx = x.chars().count() as f64;
    let ny = y.chars().count() as f64;
    Ok(match norm {
        LevNorm::Sum => 1.0 - d / (nx + ny),
        LevNorm::Max => 1.0 - d / nx.max(ny),
    })
}

fn double_edges(s: &str) -> String {
    let cs: Vec<char> = s.chars().collect();
    match (cs.first(), cs.last()) {
        (Some(&f), Some(&l)) => {
            let mut out = String::with_capacity(s.len() + 8);
            out.push(f);
            out.push_str(s);
            out.push(l);
            out
        }
        _ => String::new(),
    }
}

/// Overlap of deduplicated ordered pairs, normalized by the target:
/// `|pairs(x) & pairs(y)| / |pairs(y)|` where `pairs(s)` is the set of
/// `(s[i], s[j])` with `i < j` at any gap.
///
/// # Errors
///
/// `InvalidArgument` if the target is shorter than 2 symbols (its pair set
/// would be empty). A short `x` just yields similarity 0.
pub fn uob_gvh_sim(x: &str, y: &str) -> Result<f64> {
    let py = ordered_pairs(y);
    if py.is_empty() {
        return Err(Error::InvalidArgument(
            "open-bigram target must have at least 2 symbols".into(),
        ));
    }
    let px = ordered_pairs(x);
    let shared = px.intersection(&py).count();
    Ok(shared as f64 / py.len() as f64)
}

fn ordered_pairs(s: &str) -> HashSet<(char, char)> {
    let cs: Vec<char> = s.chars().collect();
    let mut set = HashSet::new();
    for i in 0..cs.len() {
        for j in i + 1..cs.len() {
            set.insert((cs[i], cs[j]));
        }
    }
    set
}

/// Cosine of windowed ordered-pair count vectors: pairs `(s[i], s[j])` with
/// `0 < j - i <= window - 1` are counted with multiplicity. Strings shorter
/// than 2 symbols have empty count vectors and score 0 by convention.
///
/// # Errors
///
/// `InvalidArgument` if `window < 2` (no pair fits in a smaller window).
pub fn kernel_uob_sim(x: &str, y: &str, window: usize) -> Result<f64> {
    if window < 2 {
        return Err(Error::InvalidArgument(format!(
            "kernel window must be at least 2, got {window}"
        )));
    }
    Ok(BigramVector::windowed_pairs(x, window).cosine(&BigramVector::windowed_pairs(y, window)))
}

/// Cosine of wildcard trigram count vectors. Every ordered pair within
/// position difference 2 expands to length-3 patterns that keep order and
/// gap: an adjacent pair `ab` contributes `ab*` and `*ab`, a gap-1 pair
/// contributes `a*b`.
///
/// # Errors
///
/// `InvalidArgument` if either string is shorter than 2 symbols.
pub fn wildcard3_sim(x: &str, y: &str) -> Result<f64> {
    if x.chars().nth(1).is_none() || y.chars().nth(1).is_none() {
        return Err(Error::InvalidArgument(
            "wildcard trigrams need strings of at least 2 symbols".into(),
        ));
    }
    Ok(BigramVector::wildcard_trigrams(x).cosine(&BigramVector::wildcard_trigrams(y)))
}

/// Sparse count vector over ordered-pair or wildcard-trigram patterns.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BigramVector {
    counts: HashMap<String, u64>,
}

impl BigramVector {
    /// Counts of ordered pairs with position difference `1..=window-1`.
    pub fn windowed_pairs(s: &str, window: usize) -> Self {
        let cs: Vec<char> = s.chars().collect();
        let mut counts = HashMap::new();
        for i in 0..cs.len() {
            for j in i + 1..cs.len().min(i + window) {
                let mut key = String::with_capacity(8);
                key.push(cs[i]);
                key.push(cs[j]);
                *counts.entry(key).or_insert(0) += 1;
            }
        }
        Self { counts }
    }

    /// Counts of wildcard trigram patterns: `ab*` and `*ab` per adjacent
    /// pair, `a*b` per gap-1 pair.
    pub fn wildcard_trigrams(s: &str) -> Self {
        let cs: Vec<char> = s.chars().collect();
        let mut counts: HashMap<String, u64> = HashMap::new();
        let mut add = |key: String| *counts.entry(key).or_insert(0) += 1;
        for w in cs.windows(2) {
            add(format!("{}{}*", w[0], w[1]));
            add(format!("*{}{}", w[0], w[1]));
        }
        for w in cs.windows(3) {
            add(format!("{}*{}", w[0], w[2]));
        }
        Self { counts }
    }

    pub fn counts(&self) -> &HashMap<String, u64> {
        &self.counts
    }

    /// Cosine of two count vectors; 0 when either is empty.
    pub fn cosine(&self, other: &Self) -> f64 {
        let dot: f64 = self
            .counts
            .iter()
            .filter_map(|(k, &a)| other.counts.get(k).map(|&b| a as f64 * b as f64))
            .sum();
        let na: f64 = self.counts.values().map(|&a| (a * a) as f64).sum::<f64>().sqrt();
        let nb: f64 = other.counts.values().map(|&b| (b * b) as f64).sum::<f64>().sqrt();
        if na == 0.0 || nb == 0.0 {
            return 0.0;
        }
        dot / (na * nb)
    }
}

/// Named baseline for benchmark plumbing and the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Baseline {
    LevSum,
    LevMax,
    Gvh,
    KernelUob,
    Wildcard3,
}

impl Baseline {
    pub const ALL: [Baseline; 5] = [
        Baseline::LevSum,
        Baseline::LevMax,
        Baseline::Gvh,
        Baseline::KernelUob,
        Baseline::Wildcard3,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Baseline::LevSum => "lev-sum",
            Baseline::LevMax => "lev-max",
            Baseline::Gvh => "gvh",
            Baseline::KernelUob => "kernel-uob",
            Baseline::Wildcard3 => "wildcard3",
        }
    }

    /// Applies the baseline to a string pair. With `db`, edge symbols of
    /// both strings are doubled first (for every baseline, so results stay
    /// comparable with the hypervector encoder's `db` mode).
    pub fn similarity(&self, x: &str, y: &str, db: bool) -> Result<f64> {
        match self {
            Baseline::LevSum => lev_sim(x, y, LevNorm::Sum, db),
            Baseline::LevMax => lev_sim(x, y, LevNorm::Max, db),
            other => {
                let (x, y) = if db {
                    (double_edges(x), double_edges(y))
                } else {
                    (x.to_owned(), y.to_owned())
                };
                match other {
                    Baseline::Gvh => uob_gvh_sim(&x, &y),
                    Baseline::KernelUob => kernel_uob_sim(&x, &y, DEFAULT_KERNEL_WINDOW),
                    Baseline::Wildcard3 => wildcard3_sim(&x, &y),
                    Baseline::LevSum | Baseline::LevMax => unreachable!(),
                }
            }
        }
    }
}

impl fmt::Display for Baseline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Baseline {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Baseline::ALL
            .into_iter()
            .find(|b| b.name() == s.to_ascii_lowercase())
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "unknown baseline '{s}' (expected one of lev-sum, lev-max, gvh, kernel-uob, wildcard3)"
                ))
            })
    }
}
