//! Similarity measures over encoded vectors.
//!
//! All three measures share the numerator `Re(dot(x, y))` and differ in how
//! they normalize it. Denominators are built from `norm_sq`, the real part
//! of a vector's self inner product (its imaginary part is identically
//! zero). [`sim_shifted`] turns any measure into a small-shift invariant
//! one by taking the best value over a window of relative shifts.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::encode::Codebook;
use crate::error::{Error, Result};
use crate::fhrr::Hypervector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SimilarityMeasure {
    /// `Re<x,y> / sqrt(<x,x><y,y>)`
    Cosine,
    /// `Re<x,y> / (<x,x> + <y,y> - Re<x,y>)`
    Jaccard,
    /// `Re<x,y> / min(<x,x>, <y,y>)`
    Simpson,
}

impl SimilarityMeasure {
    pub const ALL: [SimilarityMeasure; 3] = [
        SimilarityMeasure::Cosine,
        SimilarityMeasure::Jaccard,
        SimilarityMeasure::Simpson,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SimilarityMeasure::Cosine => "cosine",
            SimilarityMeasure::Jaccard => "jaccard",
            SimilarityMeasure::Simpson => "simpson",
        }
    }
}

impl fmt::Display for SimilarityMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SimilarityMeasure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "cosine" => Ok(SimilarityMeasure::Cosine),
            "jaccard" => Ok(SimilarityMeasure::Jaccard),
            "simpson" => Ok(SimilarityMeasure::Simpson),
            other => Err(Error::InvalidArgument(format!(
                "unknown similarity measure '{other}' (expected cosine, jaccard, or simpson)"
            ))),
        }
    }
}

/// Symmetric window of candidate shifts `{-s, ..., s}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ShiftRange(u32);

impl ShiftRange {
    pub fn new(max_shift: u32) -> Self {
        Self(max_shift)
    }

    pub fn max_shift(&self) -> u32 {
        self.0
    }

    /// Candidate shifts ordered by preference: `0, -1, 1, -2, 2, ...`.
    /// Combined with strictly-greater replacement in [`sim_shifted`], ties
    /// resolve to the smallest |shift|, negative before positive.
    pub fn shifts(&self) -> impl Iterator<Item = i64> {
        let s = self.0 as i64;
        std::iter::once(0).chain((1..=s).flat_map(|k| [-k, k]))
    }
}

/// Similarity of `x` and `y` under `measure`.
///
/// # Errors
///
/// `ZeroVector` if either argument has zero norm; `DimensionMismatch` if
/// lengths differ.
pub fn sim(measure: SimilarityMeasure, x: &Hypervector, y: &Hypervector) -> Result<f64> {
    let re = x.dot(y)?.re;
    let xx = x.norm_sq();
    let yy = y.norm_sq();
    if xx == 0.0 || yy == 0.0 {
        return Err(Error::ZeroVector);
    }
    Ok(match measure {
        SimilarityMeasure::Cosine => re / (xx * yy).sqrt(),
        SimilarityMeasure::Jaccard => re / (xx + yy - re),
        SimilarityMeasure::Simpson => re / xx.min(yy),
    })
}

/// Best similarity over relative shifts of `x`, together with the winning
/// shift: `max_j sim(measure, shift_hv(x, j), y)` for `j` in `shifts`.
///
/// Shifting binds a unit-magnitude power onto `x`, so norms are preserved
/// and only the cross term varies. Ties go to the smallest |j|, negative
/// first.
///
/// # Errors
///
/// Propagates [`sim`] errors (zero vectors, dimension mismatch).
pub fn sim_shifted(
    cb: &Codebook,
    measure: SimilarityMeasure,
    x: &Hypervector,
    y: &Hypervector,
    shifts: ShiftRange,
) -> Result<(f64, i64)> {
    let mut best: Option<(f64, i64)> = None;
    for j in shifts.shifts() {
        let value = sim(measure, &cb.shift_hv(x, j), y)?;
        if best.map_or(true, |(b, _)| value > b) {
            best = Some((value, j));
        }
    }
    Ok(best.expect("shift window always contains 0"))
}
