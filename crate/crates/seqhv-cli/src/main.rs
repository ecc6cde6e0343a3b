//! Command-line front end for the seqhv encoder: pairwise similarity,
//! benchmark runs, sweeps, and raw hypervector dumps.
//!
//! Exit codes: 0 success (and all criteria satisfied where applicable),
//! 1 benchmark criteria not satisfied, 2 usage or operational error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use seqhv::baselines::Baseline;
use seqhv::bench::{self, BenchConfig};
use seqhv::{realization_seed, Codebook, EncoderConfig, SimilarityMeasure};

#[derive(Parser)]
#[command(
    name = "seqhv",
    version,
    about = "Similarity-preserving hypervector encoding of symbol sequences"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct EncoderArgs {
    /// Hypervector dimension
    #[arg(long, default_value_t = 10_000)]
    dim: usize,

    /// Positional similarity radius
    #[arg(long, default_value_t = 3)]
    radius: usize,

    /// Maximum |shift| explored when aligning prime to target
    #[arg(long, default_value_t = 2)]
    shift: u32,

    /// Double the edge symbols of every sequence before encoding
    #[arg(long)]
    db: bool,

    /// Similarity measure: cosine, jaccard, or simpson
    #[arg(long, default_value = "cosine")]
    measure: SimilarityMeasure,

    /// Master seed for the realization schedule
    #[arg(long, env = "SEQHV_SEED", default_value_t = 42)]
    seed: u64,

    /// Number of independent codebook draws to average over
    #[arg(long, default_value_t = 50)]
    realizations: usize,

    /// Tolerance of equality criteria in the constraint benchmark
    #[arg(long, default_value_t = bench::DEFAULT_EQUALITY_EPS)]
    equality_eps: f64,
}

impl EncoderArgs {
    fn config(&self) -> BenchConfig {
        BenchConfig {
            dim: self.dim,
            radius: self.radius,
            shift: self.shift,
            db: self.db,
            measure: self.measure,
            seed: self.seed,
            realizations: self.realizations,
            equality_eps: self.equality_eps,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Mean shifted similarity between two symbol strings, plus string baselines
    Sim {
        prime: String,
        target: String,
        #[command(flatten)]
        enc: EncoderArgs,
    },

    /// Score the bundled constraint dataset and evaluate its criteria
    #[command(name = "bench-constraints")]
    BenchConstraints {
        #[command(flatten)]
        enc: EncoderArgs,
        /// Report file: .csv for CSV, any other extension for JSON
        #[arg(long)]
        output: Option<PathBuf>,
    },

    /// Correlate encoded similarity with a priming dataset
    #[command(name = "bench-priming")]
    BenchPriming {
        /// CSV file with header prime,target,priming_ms
        #[arg(long)]
        data: PathBuf,
        /// Also report deterministic string-baseline correlations
        #[arg(long)]
        baselines: bool,
        #[command(flatten)]
        enc: EncoderArgs,
        /// Report file: .csv for the scatter table, otherwise JSON
        #[arg(long)]
        output: Option<PathBuf>,
    },

    /// Sweep a displacement profile or the encoding radius
    Sweep {
        #[arg(long, value_enum)]
        mode: SweepModeArg,
        /// Sequence to profile (mode: profile)
        #[arg(long)]
        string: Option<String>,
        /// Priming CSV to correlate per radius (mode: radius)
        #[arg(long)]
        data: Option<PathBuf>,
        /// Range start: offset for profile (default -10), radius for radius (default 1)
        #[arg(long, allow_negative_numbers = true)]
        from: Option<i64>,
        /// Range end, inclusive: default 10 for profile, 5 for radius
        #[arg(long, allow_negative_numbers = true)]
        to: Option<i64>,
        #[command(flatten)]
        enc: EncoderArgs,
        /// Report file: .csv for CSV, any other extension for JSON
        #[arg(long)]
        output: Option<PathBuf>,
    },

    /// Dump one encoded hypervector for external tooling
    Encode {
        string: String,
        /// csv: index,re,im rows; bin: interleaved little-endian f64 pairs
        #[arg(long, value_enum, default_value_t = DumpFormat::Csv)]
        format: DumpFormat,
        /// Required for bin; csv prints to stdout when omitted
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        enc: EncoderArgs,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SweepModeArg {
    Profile,
    Radius,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DumpFormat {
    Csv,
    Bin,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Cmd) -> anyhow::Result<ExitCode> {
    match cmd {
        Cmd::Sim { prime, target, enc } => cmd_sim(&prime, &target, &enc.config()),
        Cmd::BenchConstraints { enc, output } => cmd_bench_constraints(&enc.config(), output.as_deref()),
        Cmd::BenchPriming { data, baselines, enc, output } => {
            cmd_bench_priming(&data, baselines, &enc.config(), output.as_deref())
        }
        Cmd::Sweep { mode, string, data, from, to, enc, output } => {
            cmd_sweep(mode, string, data, from, to, &enc.config(), output.as_deref())
        }
        Cmd::Encode { string, format, output, enc } => {
            cmd_encode(&string, format, output.as_deref(), &enc.config())
        }
    }
}

fn cmd_sim(prime: &str, target: &str, cfg: &BenchConfig) -> anyhow::Result<ExitCode> {
    anyhow::ensure!(
        !prime.is_empty() && !target.is_empty(),
        "prime and target must be nonempty"
    );
    let (mean, std) = bench::run_pair(cfg, prime, target)?;
    println!("{} similarity of {prime:?} vs {target:?}", cfg.measure);
    println!(
        "  mean {mean:.4}  std {std:.4}  (dim {}, radius {}, shift {}, db {}, seed {}, realizations {})",
        cfg.dim, cfg.radius, cfg.shift, cfg.db, cfg.seed, cfg.realizations
    );
    println!("baselines (db {}):", cfg.db);
    for b in Baseline::ALL {
        match b.similarity(prime, target, cfg.db) {
            Ok(v) => println!("  {:<11} {v:.4}", b.name()),
            Err(e) => println!("  {:<11} n/a ({e})", b.name()),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_bench_constraints(cfg: &BenchConfig, output: Option<&Path>) -> anyhow::Result<ExitCode> {
    let report = bench::run_constraints(cfg)?;
    print!("{}", report.to_csv());
    println!("{} (seed {})", report.summary_line(), cfg.seed);
    if let Some(path) = output {
        write_report(path, || report.to_json(), || report.to_csv())?;
    }
    Ok(if report.all_satisfied() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_bench_priming(
    data: &Path,
    baselines: bool,
    cfg: &BenchConfig,
    output: Option<&Path>,
) -> anyhow::Result<ExitCode> {
    let records = bench::read_priming_file(data)?;
    let report = bench::run_priming(cfg, &records)?;
    println!(
        "pearson correlation of {} similarity with priming over {} pairs",
        cfg.measure, report.pairs
    );
    println!(
        "  mean {:.4}  std {:.4}  (dim {}, radius {}, shift {}, db {}, seed {}, realizations {})",
        report.mean_corr, report.std_corr, cfg.dim, cfg.radius, cfg.shift, cfg.db, cfg.seed, cfg.realizations
    );
    if baselines {
        println!("baseline correlations (db {}):", cfg.db);
        for c in bench::baseline_corrs(&records, cfg.db)? {
            println!("  {:<11} {:.4}", c.baseline.name(), c.corr);
        }
    }
    if let Some(path) = output {
        write_report(path, || report.to_json(), || report.to_csv())?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_sweep(
    mode: SweepModeArg,
    string: Option<String>,
    data: Option<PathBuf>,
    from: Option<i64>,
    to: Option<i64>,
    cfg: &BenchConfig,
    output: Option<&Path>,
) -> anyhow::Result<ExitCode> {
    let report = match mode {
        SweepModeArg::Profile => {
            let s = string.context("--mode profile requires --string")?;
            let range = from.unwrap_or(-10)..=to.unwrap_or(10);
            bench::sweep_profile(cfg, &s, range)?
        }
        SweepModeArg::Radius => {
            let path = data.context("--mode radius requires --data")?;
            let records = bench::read_priming_file(&path)?;
            let from = from.unwrap_or(1);
            let to = to.unwrap_or(5);
            anyhow::ensure!(from >= 1, "radius sweep must start at 1 or above");
            anyhow::ensure!(from <= to, "empty radius range {from}..={to}");
            bench::sweep_radius(cfg, &records, from as usize..=to as usize)?
        }
    };
    print!("{}", report.to_csv());
    println!("# seed {}", cfg.seed);
    if let Some(path) = output {
        write_report(path, || report.to_json(), || report.to_csv())?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_encode(
    string: &str,
    format: DumpFormat,
    output: Option<&Path>,
    cfg: &BenchConfig,
) -> anyhow::Result<ExitCode> {
    anyhow::ensure!(!string.is_empty(), "string must be nonempty");
    cfg.validate()?;
    // dump under the first realization of the configured master seed
    let enc = EncoderConfig::new(cfg.dim, cfg.radius, realization_seed(cfg.seed, 0), cfg.db)?;
    let hv = Codebook::new(enc).encode_str(string)?;
    match format {
        DumpFormat::Csv => {
            let mut text = String::from("index,re,im\n");
            for (i, c) in hv.components().iter().enumerate() {
                text.push_str(&format!("{i},{},{}\n", c.re, c.im));
            }
            match output {
                Some(path) => fs::write(path, text)
                    .with_context(|| format!("cannot write {}", path.display()))?,
                None => print!("{text}"),
            }
        }
        DumpFormat::Bin => {
            let path = output.context("--format bin requires --output")?;
            let mut bytes = Vec::with_capacity(hv.len() * 16);
            for c in hv.components() {
                bytes.extend_from_slice(&c.re.to_le_bytes());
                bytes.extend_from_slice(&c.im.to_le_bytes());
            }
            fs::write(path, bytes).with_context(|| format!("cannot write {}", path.display()))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

// .csv extension selects the CSV rendering, anything else gets JSON
fn write_report(
    path: &Path,
    json: impl Fn() -> String,
    csv: impl Fn() -> String,
) -> anyhow::Result<()> {
    let text = if path.extension().and_then(|e| e.to_str()) == Some("csv") {
        csv()
    } else {
        json()
    };
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}
