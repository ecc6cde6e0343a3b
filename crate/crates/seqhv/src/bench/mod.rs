//! Reproducible benchmark harness.
//!
//! Every run draws `realizations` independent codebooks from a master seed
//! (see [`realization_seed`]), scores each item under every codebook, and
//! reports per-item mean and sample standard deviation. Aggregation order
//! is fixed by item and realization index, so a run with the same
//! configuration reproduces its output byte for byte.

pub mod conditions;
pub mod criteria;
pub mod priming;

pub use conditions::{conditions, ConstraintCondition};
pub use criteria::{CriteriaExpr, CriteriaRef, CriteriaTerm};
pub use priming::{read_priming_csv, read_priming_file, PrimingRecord};

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use crate::baselines::Baseline;
use crate::encode::{realization_seed, Codebook, EncoderConfig, PositionedSequence};
use crate::error::{Error, Result};
use crate::sim::{sim, sim_shifted, ShiftRange, SimilarityMeasure};

/// Tolerance used by equality criteria unless overridden.
pub const DEFAULT_EQUALITY_EPS: f64 = 0.02;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BenchConfig {
    pub dim: usize,
    pub radius: usize,
    /// Maximum |shift| explored when aligning prime to target.
    pub shift: u32,
    /// Double the edge symbols of every sequence before encoding.
    pub db: bool,
    pub measure: SimilarityMeasure,
    pub seed: u64,
    pub realizations: usize,
    pub equality_eps: f64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            dim: 10_000,
            radius: 3,
            shift: 2,
            db: false,
            measure: SimilarityMeasure::Cosine,
            seed: 42,
            realizations: 50,
            equality_eps: DEFAULT_EQUALITY_EPS,
        }
    }
}

impl BenchConfig {
    pub fn validate(&self) -> Result<()> {
        EncoderConfig::new(self.dim, self.radius, self.seed, self.db)?;
        if self.realizations == 0 {
            return Err(Error::InvalidArgument("realizations must be at least 1".into()));
        }
        if !self.equality_eps.is_finite() || self.equality_eps < 0.0 {
            return Err(Error::InvalidArgument(format!(
                "equality tolerance must be finite and nonnegative, found {}",
                self.equality_eps
            )));
        }
        Ok(())
    }

    fn codebook(&self, realization: usize) -> Codebook {
        let seed = realization_seed(self.seed, realization as u64);
        // validate() has already vetted dim and radius
        let cfg = EncoderConfig::new(self.dim, self.radius, seed, self.db)
            .expect("validated dimensions");
        Codebook::new(cfg)
    }
}

fn mean_std(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

/// Pearson correlation coefficient.
///
/// # Errors
///
/// `InvalidArgument` on length mismatch, `UndefinedCorrelation` for fewer
/// than two points or zero variance on either side.
pub fn pearson(xs: &[f64], ys: &[f64]) -> Result<f64> {
    if xs.len() != ys.len() {
        return Err(Error::InvalidArgument(format!(
            "correlation needs equal lengths, found {} and {}",
            xs.len(),
            ys.len()
        )));
    }
    if xs.len() < 2 {
        return Err(Error::UndefinedCorrelation("fewer than two points".into()));
    }
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (x, y) in xs.iter().zip(ys) {
        let dx = x - mx;
        let dy = y - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(Error::UndefinedCorrelation("zero variance".into()));
    }
    Ok(sxy / (sxx * syy).sqrt())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConditionOutcome {
    pub id: u32,
    pub prime: String,
    pub target: String,
    pub criteria: String,
    pub mean: f64,
    pub std: f64,
    pub satisfied: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConstraintReport {
    pub config: BenchConfig,
    pub conditions: Vec<ConditionOutcome>,
    pub satisfied: usize,
    pub total: usize,
}

impl ConstraintReport {
    pub fn all_satisfied(&self) -> bool {
        self.satisfied == self.total
    }

    pub fn summary_line(&self) -> String {
        format!("satisfied {}/{} conditions", self.satisfied, self.total)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("id,prime,target,criteria,mean,std,satisfied\n");
        for c in &self.conditions {
            out.push_str(&format!(
                "{},{},{},{},{:.4},{:.4},{}\n",
                c.id, c.prime, c.target, c.criteria, c.mean, c.std, c.satisfied
            ));
        }
        out
    }
}

/// Scores the bundled constraint dataset: for every condition, the shifted
/// similarity between instantiated prime and target, averaged over
/// realizations, then each condition's criteria evaluated on the table of
/// means.
pub fn run_constraints(config: &BenchConfig) -> Result<ConstraintReport> {
    config.validate()?;
    let conds = conditions();
    let pairs: Vec<(String, String)> = conds.iter().map(|c| c.instantiate_pair()).collect();
    let shifts = ShiftRange::new(config.shift);
    let per_realization: Vec<Vec<f64>> = (0..config.realizations)
        .into_par_iter()
        .map(|k| {
            let cb = config.codebook(k);
            pairs
                .iter()
                .map(|(prime, target)| {
                    let x = cb.encode_str(prime)?;
                    let y = cb.encode_str(target)?;
                    Ok(sim_shifted(&cb, config.measure, &x, &y, shifts)?.0)
                })
                .collect::<Result<Vec<f64>>>()
        })
        .collect::<Result<_>>()?;

    let mut means = BTreeMap::new();
    let mut stats = Vec::with_capacity(conds.len());
    for (i, cond) in conds.iter().enumerate() {
        let values: Vec<f64> = per_realization.iter().map(|r| r[i]).collect();
        let (mean, std) = mean_std(&values);
        means.insert(cond.id(), mean);
        stats.push((mean, std));
    }

    let mut outcomes = Vec::with_capacity(conds.len());
    let mut satisfied = 0;
    for (cond, (mean, std)) in conds.iter().zip(stats) {
        let (prime, target) = cond.instantiate_pair();
        let ok = cond
            .criteria()
            .evaluate(cond.id(), &means, config.equality_eps)?;
        satisfied += ok as usize;
        outcomes.push(ConditionOutcome {
            id: cond.id(),
            prime,
            target,
            criteria: cond.criteria_text().to_string(),
            mean,
            std,
            satisfied: ok,
        });
    }
    Ok(ConstraintReport {
        config: *config,
        conditions: outcomes,
        satisfied,
        total: conds.len(),
    })
}

/// Shifted similarity of a single prime/target pair, averaged over
/// realizations. Returns (mean, sample std).
pub fn run_pair(config: &BenchConfig, prime: &str, target: &str) -> Result<(f64, f64)> {
    config.validate()?;
    if prime.is_empty() || target.is_empty() {
        return Err(Error::EmptySequence);
    }
    let shifts = ShiftRange::new(config.shift);
    let values: Vec<f64> = (0..config.realizations)
        .into_par_iter()
        .map(|k| {
            let cb = config.codebook(k);
            let x = cb.encode_str(prime)?;
            let y = cb.encode_str(target)?;
            Ok(sim_shifted(&cb, config.measure, &x, &y, shifts)?.0)
        })
        .collect::<Result<_>>()?;
    Ok(mean_std(&values))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScatterPoint {
    pub prime: String,
    pub target: String,
    pub priming_ms: f64,
    pub mean_similarity: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PrimingReport {
    pub config: BenchConfig,
    pub pairs: usize,
    pub mean_corr: f64,
    pub std_corr: f64,
    pub scatter: Vec<ScatterPoint>,
}

impl PrimingReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("prime,target,priming_ms,mean_similarity\n");
        for p in &self.scatter {
            out.push_str(&format!(
                "{},{},{},{:.6}\n",
                p.prime, p.target, p.priming_ms, p.mean_similarity
            ));
        }
        out
    }
}

/// Correlates encoded-sequence similarity with the priming effect: one
/// Pearson coefficient per realization, plus per-pair mean similarities for
/// a scatter plot.
pub fn run_priming(config: &BenchConfig, records: &[PrimingRecord]) -> Result<PrimingReport> {
    config.validate()?;
    if records.len() < 2 {
        return Err(Error::UndefinedCorrelation(format!(
            "need at least 2 priming records, found {}",
            records.len()
        )));
    }
    let ms: Vec<f64> = records.iter().map(|r| r.priming_ms).collect();
    let shifts = ShiftRange::new(config.shift);
    let runs: Vec<(Vec<f64>, f64)> = (0..config.realizations)
        .into_par_iter()
        .map(|k| {
            let cb = config.codebook(k);
            let sims = records
                .iter()
                .map(|r| {
                    let x = cb.encode_str(&r.prime)?;
                    let y = cb.encode_str(&r.target)?;
                    Ok(sim_shifted(&cb, config.measure, &x, &y, shifts)?.0)
                })
                .collect::<Result<Vec<f64>>>()?;
            let corr = pearson(&sims, &ms)?;
            Ok((sims, corr))
        })
        .collect::<Result<_>>()?;

    let corrs: Vec<f64> = runs.iter().map(|(_, c)| *c).collect();
    let (mean_corr, std_corr) = mean_std(&corrs);
    let scatter = records
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let values: Vec<f64> = runs.iter().map(|(sims, _)| sims[i]).collect();
            ScatterPoint {
                prime: r.prime.clone(),
                target: r.target.clone(),
                priming_ms: r.priming_ms,
                mean_similarity: mean_std(&values).0,
            }
        })
        .collect();
    Ok(PrimingReport {
        config: *config,
        pairs: records.len(),
        mean_corr,
        std_corr,
        scatter,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BaselineCorr {
    pub baseline: Baseline,
    pub corr: f64,
}

/// Pearson correlation of every string baseline with the priming effect.
/// Baselines are deterministic, so there is no realization loop.
pub fn baseline_corrs(records: &[PrimingRecord], db: bool) -> Result<Vec<BaselineCorr>> {
    if records.len() < 2 {
        return Err(Error::UndefinedCorrelation(format!(
            "need at least 2 priming records, found {}",
            records.len()
        )));
    }
    let ms: Vec<f64> = records.iter().map(|r| r.priming_ms).collect();
    Baseline::ALL
        .iter()
        .map(|b| {
            let sims = records
                .iter()
                .map(|r| b.similarity(&r.prime, &r.target, db))
                .collect::<Result<Vec<f64>>>()?;
            Ok(BaselineCorr {
                baseline: *b,
                corr: pearson(&sims, &ms)?,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepMode {
    Profile,
    Radius,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub x: i64,
    pub mean: f64,
    pub std: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub config: BenchConfig,
    pub mode: SweepMode,
    pub label: String,
    pub rows: Vec<SweepRow>,
}

impl SweepReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let x_name = match self.mode {
            SweepMode::Profile => "offset",
            SweepMode::Radius => "radius",
        };
        let mut out = format!("{x_name},mean,std\n");
        for r in &self.rows {
            out.push_str(&format!("{},{:.6},{:.6}\n", r.x, r.mean, r.std));
        }
        out
    }
}

/// Plain (unshifted) similarity between a sequence at offset zero and the
/// same sequence displaced by each offset in the range. Traces the
/// positional kernel; the configured shift window is deliberately not
/// applied, since it would compensate the displacement away.
pub fn sweep_profile(
    config: &BenchConfig,
    s: &str,
    offsets: RangeInclusive<i64>,
) -> Result<SweepReport> {
    config.validate()?;
    if s.is_empty() {
        return Err(Error::EmptySequence);
    }
    if offsets.is_empty() {
        return Err(Error::InvalidArgument("empty offset range".into()));
    }
    let offsets: Vec<i64> = offsets.collect();
    let per_realization: Vec<Vec<f64>> = (0..config.realizations)
        .into_par_iter()
        .map(|k| {
            let cb = config.codebook(k);
            let base = cb.encode_str(s)?;
            offsets
                .iter()
                .map(|&p| {
                    let moved = cb.encode_sequence(&PositionedSequence::new(s, p))?;
                    sim(config.measure, &base, &moved)
                })
                .collect::<Result<Vec<f64>>>()
        })
        .collect::<Result<_>>()?;
    let rows = offsets
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            let values: Vec<f64> = per_realization.iter().map(|r| r[i]).collect();
            let (mean, std) = mean_std(&values);
            SweepRow { x: p, mean, std }
        })
        .collect();
    Ok(SweepReport {
        config: *config,
        mode: SweepMode::Profile,
        label: s.to_string(),
        rows,
    })
}

/// Priming correlation as a function of the encoding radius: one
/// [`run_priming`] per radius in the range.
pub fn sweep_radius(
    config: &BenchConfig,
    records: &[PrimingRecord],
    radii: RangeInclusive<usize>,
) -> Result<SweepReport> {
    if radii.is_empty() {
        return Err(Error::InvalidArgument("empty radius range".into()));
    }
    let mut rows = Vec::new();
    for r in radii {
        let cfg = BenchConfig { radius: r, ..*config };
        let report = run_priming(&cfg, records)?;
        rows.push(SweepRow {
            x: r as i64,
            mean: report.mean_corr,
            std: report.std_corr,
        });
    }
    Ok(SweepReport {
        config: *config,
        mode: SweepMode::Radius,
        label: "priming-correlation".into(),
        rows,
    })
}
