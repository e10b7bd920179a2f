//! `consec` command-line front end.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or input error.

use std::fs::File;
use std::io::{BufReader, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use consec_core::compare::{compare_with_counts, observed_from_aggregates, ComparisonReport};
use consec_core::decimal::{format_percent, format_ratio, Rounding};
use consec_core::fixture::{self, FIXTURE_NAMES};
use consec_core::oracle::{monte_carlo, verify_configs, DEFAULT_ENUMERATION_LIMIT};
use consec_core::{
    classify_history, parse_history, CategorySelector, CounterRegistry, LotteryConfig,
    OccurrenceModel, StreakCounts,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Largest pool `verify` sweeps without `--force`.
pub const VERIFY_POOL_GUARD: u32 = 20;

#[derive(Debug, Parser)]
#[command(
    name = "consec",
    version,
    about = "Consecutive-number statistics for k-of-N lotteries"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Decimal places for probabilities and real-valued statistics.
    #[arg(long, global = true, default_value_t = 4)]
    pub precision: usize,

    /// Maximum subsets the enumeration method may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_LIMIT)]
    pub limit: u64,

    /// How exact fractions are cut to `--precision` places.
    #[arg(long, global = true, value_enum, default_value_t = RoundingArg::Truncate)]
    pub rounding: RoundingArg,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RoundingArg {
    Truncate,
    HalfEven,
}

impl From<RoundingArg> for Rounding {
    fn from(r: RoundingArg) -> Self {
        match r {
            RoundingArg::Truncate => Rounding::Truncate,
            RoundingArg::HalfEven => Rounding::HalfEven,
        }
    }
}

#[derive(Debug, Clone, Copy, Args)]
pub struct ConfigArgs {
    /// Numbers in the pool (N).
    #[arg(long, default_value_t = 90)]
    pub pool: u32,
    /// Numbers per draw (n).
    #[arg(long, default_value_t = 6)]
    pub draw: u32,
}

impl ConfigArgs {
    fn config(&self) -> Result<LotteryConfig, CliError> {
        Ok(LotteryConfig::new(self.pool, self.draw)?)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Probability that a draw contains at least one adjacent pair.
    Prob {
        #[command(flatten)]
        config: ConfigArgs,
        /// Counting method (see `methods`).
        #[arg(long, default_value = "closed-form")]
        method: String,
    },
    /// Exact draw counts per number of adjacent pairs.
    Counts {
        #[command(flatten)]
        config: ConfigArgs,
        #[arg(long, default_value = "closed-form")]
        method: String,
    },
    /// Expected occurrences over M draws (binomial mean and deviation).
    Expect {
        #[command(flatten)]
        config: ConfigArgs,
        /// Number of draws M.
        #[arg(long)]
        draws: u64,
    },
    /// Compare a draw history with the exact model.
    Analyze {
        #[command(flatten)]
        config: ConfigArgs,
        /// CSV file with one `YYYY-MM-DD,a1,...,an` draw per line.
        #[arg(conflicts_with_all = ["fixture", "observed"])]
        input: Option<PathBuf>,
        /// Built-in dataset by name.
        #[arg(long, conflicts_with = "observed")]
        fixture: Option<String>,
        /// Published counts for categories 1..n, comma separated.
        #[arg(long, value_delimiter = ',', requires = "total")]
        observed: Option<Vec<u64>>,
        /// Total draws behind `--observed`.
        #[arg(long, requires = "observed")]
        total: Option<u64>,
    },
    /// Check a counting method against exhaustive enumeration.
    Verify {
        #[arg(long, default_value_t = VERIFY_POOL_GUARD)]
        max_pool: u32,
        #[arg(long, default_value = "closed-form")]
        method: String,
        #[arg(long, default_value = "enumeration")]
        oracle: String,
        /// Allow pools above the default guard.
        #[arg(long)]
        force: bool,
    },
    /// Seeded Monte Carlo estimate of the category frequencies.
    Simulate {
        #[command(flatten)]
        config: ConfigArgs,
        #[arg(long, default_value_t = 1_000_000)]
        trials: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// List the registered counting methods.
    Methods,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(consec_core::Error),
    Io(std::io::Error),
}

impl From<consec_core::Error> for CliError {
    fn from(e: consec_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

struct Ctx<'a> {
    cli: &'a Cli,
    registry: &'a CounterRegistry,
}

impl Ctx<'_> {
    fn rounding(&self) -> Rounding {
        self.cli.rounding.into()
    }

    fn real(&self, x: f64) -> String {
        format!("{x:.*}", self.cli.precision)
    }

    fn counts(&self, method: &str, config: LotteryConfig) -> Result<StreakCounts, CliError> {
        Ok(self.registry.get(method)?.count(config)?)
    }
}

/// Runs `cli` with the default counting methods.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    run_with_registry(cli, &CounterRegistry::with_defaults(cli.limit), out, err)
}

/// Runs `cli` against a caller-supplied registry.
pub fn run_with_registry(
    cli: &Cli,
    registry: &CounterRegistry,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> u8 {
    let ctx = Ctx { cli, registry };
    match dispatch(&ctx, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(ctx: &Ctx<'_>, out: &mut dyn Write) -> Result<u8, CliError> {
    match &ctx.cli.command {
        Command::Prob { config, method } => cmd_prob(ctx, config.config()?, method, out),
        Command::Counts { config, method } => cmd_counts(ctx, config.config()?, method, out),
        Command::Expect { config, draws } => cmd_expect(ctx, config.config()?, *draws, out),
        Command::Analyze {
            config,
            input,
            fixture,
            observed,
            total,
        } => cmd_analyze(
            ctx,
            config,
            input.as_ref(),
            fixture.as_deref(),
            observed.as_deref(),
            *total,
            out,
        ),
        Command::Verify {
            max_pool,
            method,
            oracle,
            force,
        } => cmd_verify(ctx, *max_pool, method, oracle, *force, out),
        Command::Simulate {
            config,
            trials,
            seed,
        } => cmd_simulate(ctx, config.config()?, *trials, *seed, out),
        Command::Methods => cmd_methods(ctx, out),
    }
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<u8, CliError> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(std::io::Error::from)?;
    writeln!(out)?;
    Ok(EXIT_OK)
}

fn cmd_prob(
    ctx: &Ctx<'_>,
    config: LotteryConfig,
    method: &str,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    let counts = ctx.counts(method, config)?;
    let p = counts.consecutive_probability();
    let decimal = format_ratio(
        &p.favourable,
        &p.possible,
        ctx.cli.precision,
        ctx.rounding(),
    );
    let percent = format_percent(&p.favourable, &p.possible, ctx.rounding());
    match ctx.cli.format {
        Format::Json => emit_json(
            out,
            &json!({
                "config": config,
                "method": method,
                "probability": p,
                "decimal": decimal.text,
                "percent": percent.text,
                "exact": decimal.exact,
            }),
        ),
        Format::Table => {
            let relation = if decimal.exact { "=" } else { "≈" };
            writeln!(
                out,
                "{}/{} {relation} {} ({}%)",
                p.favourable, p.possible, decimal.text, percent.text
            )?;
            Ok(EXIT_OK)
        }
    }
}

fn cmd_counts(
    ctx: &Ctx<'_>,
    config: LotteryConfig,
    method: &str,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    let counts = ctx.counts(method, config)?;
    match ctx.cli.format {
        Format::Json => emit_json(out, &json!({ "method": method, "counts": counts })),
        Format::Table => {
            let mut rows: Vec<(String, String)> = counts
                .by_category
                .iter()
                .enumerate()
                .skip(1)
                .filter(|(_, c)| !num_is_zero(c))
                .map(|(k, c)| (format!("N_{k}"), c.to_string()))
                .collect();
            rows.push(("N_c".into(), counts.with_consecutive.to_string()));
            rows.push(("N_t".into(), counts.total.to_string()));
            writeln!(out, "{config} lottery, method {method}")?;
            let width = rows.iter().map(|(_, v)| v.len()).max().unwrap_or(0);
            for (label, value) in rows {
                writeln!(out, "{label:<4} {value:>width$}")?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn num_is_zero(n: &consec_core::Natural) -> bool {
    n.bits() == 0
}

fn mean_pm_sd(mean: i64, sd: i64) -> String {
    if sd == 0 {
        format!("~{mean}")
    } else {
        format!("{mean} ± {sd}")
    }
}

fn cmd_expect(
    ctx: &Ctx<'_>,
    config: LotteryConfig,
    draws: u64,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    if draws < 1 {
        return Err(CliError::Usage("--draws must be at least 1".into()));
    }
    let counts = consec_core::model::streak_counts(config);
    let categories: Vec<OccurrenceModel> = (0..config.draw_size())
        .map(|k| OccurrenceModel::from_counts(&counts, draws, CategorySelector::Exactly(k)))
        .collect::<Result<_, _>>()?;
    let overall = OccurrenceModel::from_counts(&counts, draws, CategorySelector::Any)?;
    match ctx.cli.format {
        Format::Json => emit_json(
            out,
            &json!({
                "config": config,
                "draws": draws,
                "categories": categories,
                "overall": overall,
                "rounded": {
                    "overall": [overall.rounded_mean(), overall.rounded_std_dev()],
                    "categories": categories.iter().map(|m| [m.rounded_mean(), m.rounded_std_dev()]).collect::<Vec<_>>(),
                },
            }),
        ),
        Format::Table => {
            writeln!(out, "{config} lottery, M = {draws} draws")?;
            writeln!(
                out,
                "{:<9} {:<12} {:>12} {:>12}",
                "category", "expected", "mean", "std dev"
            )?;
            let mut row = |label: String, m: &OccurrenceModel| -> std::io::Result<()> {
                writeln!(
                    out,
                    "{label:<9} {:<12} {:>12} {:>12}",
                    mean_pm_sd(m.rounded_mean(), m.rounded_std_dev()),
                    ctx.real(m.mean),
                    ctx.real(m.std_dev)
                )
            };
            for (k, m) in categories.iter().enumerate().skip(1) {
                row(format!("N_{k}"), m)?;
            }
            row("N_c".into(), &overall)?;
            Ok(EXIT_OK)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_analyze(
    ctx: &Ctx<'_>,
    config_args: &ConfigArgs,
    input: Option<&PathBuf>,
    fixture_name: Option<&str>,
    observed: Option<&[u64]>,
    total: Option<u64>,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    let (source, observed) = match (input, fixture_name, observed) {
        (Some(path), None, None) => {
            let config = config_args.config()?;
            let file = File::open(path)?;
            let history = parse_history(BufReader::new(file), config)?;
            (path.display().to_string(), classify_history(&history))
        }
        (None, Some(name), None) => {
            let history = fixture::fixture(name).ok_or_else(|| {
                CliError::Usage(format!(
                    "unknown fixture `{name}` (available: {})",
                    FIXTURE_NAMES.join(", ")
                ))
            })?;
            if config_args.config()? != history.config {
                return Err(CliError::Usage(format!(
                    "fixture `{name}` is a {} lottery",
                    history.config
                )));
            }
            (format!("fixture {name}"), classify_history(&history))
        }
        (None, None, Some(with_pairs)) => {
            let config = config_args.config()?;
            let total = total.expect("clap enforces --total");
            (
                "published counts".to_owned(),
                observed_from_aggregates(config, with_pairs, total)?,
            )
        }
        _ => {
            return Err(CliError::Usage(
                "give an input file, --fixture NAME, or --observed with --total".into(),
            ))
        }
    };
    let config = config_args.config()?;
    if observed.iter().sum::<u64>() == 0 {
        return Err(CliError::Usage(format!("{source}: no draws")));
    }
    let counts = consec_core::model::streak_counts(config);
    let report = compare_with_counts(&observed, &counts)?;
    match ctx.cli.format {
        Format::Json => emit_json(out, &json!({ "source": source, "report": report })),
        Format::Table => write_report(ctx, &source, &report, out),
    }
}

fn z_text(ctx: &Ctx<'_>, z: Option<f64>) -> String {
    z.map_or_else(|| "n/a".to_owned(), |z| ctx.real(z))
}

fn write_report(
    ctx: &Ctx<'_>,
    source: &str,
    report: &ComparisonReport,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    let with = report.overall.observed;
    let percent = format_percent(&with.into(), &report.trials.into(), ctx.rounding());
    writeln!(
        out,
        "{source}: {} lottery, {} draws",
        report.config, report.trials
    )?;
    writeln!(
        out,
        "{with} of {} draws with consecutive strings ({}%)",
        report.trials, percent.text
    )?;
    writeln!(
        out,
        "{:<9} {:>9}  {:<12} {:>12} {:>12} {:>9}",
        "category", "observed", "expected", "mean", "std dev", "z-score"
    )?;
    let rows = report
        .per_category
        .iter()
        .enumerate()
        .map(|(k, c)| (format!("N_{k}"), c))
        .chain([("N_c".to_owned(), &report.overall)]);
    for (label, c) in rows {
        writeln!(
            out,
            "{label:<9} {:>9}  {:<12} {:>12} {:>12} {:>9}",
            c.observed,
            mean_pm_sd(c.rounded_mean, c.rounded_std_dev),
            ctx.real(c.expected_mean),
            ctx.real(c.expected_std_dev),
            z_text(ctx, c.z_score)
        )?;
    }
    let chi = &report.chi_square;
    match (chi.statistic, chi.p_value) {
        (Some(stat), p) => writeln!(
            out,
            "chi-square {} (df {}, p = {}); {}",
            ctx.real(stat),
            chi.degrees_of_freedom,
            p.map_or_else(|| "n/a".to_owned(), |p| ctx.real(p)),
            chi.pooling_note
        )?,
        (None, _) => writeln!(
            out,
            "chi-square undefined (fewer than two usable bins); {}",
            chi.pooling_note
        )?,
    }
    Ok(EXIT_OK)
}

fn cmd_verify(
    ctx: &Ctx<'_>,
    max_pool: u32,
    method: &str,
    oracle: &str,
    force: bool,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    if max_pool > VERIFY_POOL_GUARD && !force {
        return Err(CliError::Usage(format!(
            "--max-pool above {VERIFY_POOL_GUARD} needs --force"
        )));
    }
    let report = verify_configs(
        ctx.registry.get(method)?,
        ctx.registry.get(oracle)?,
        max_pool,
    )?;
    let code = if report.passed() {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    };
    match ctx.cli.format {
        Format::Json => {
            emit_json(out, &json!({ "passed": report.passed(), "report": report }))?;
        }
        Format::Table => {
            if report.passed() {
                let noun = if report.configurations == 1 {
                    "configuration"
                } else {
                    "configurations"
                };
                writeln!(
                    out,
                    "all {} {noun} match ({} vs {})",
                    report.configurations, report.candidate, report.oracle
                )?;
            } else {
                for m in &report.mismatches {
                    writeln!(
                        out,
                        "mismatch at pool {}, draw {}, {}: {} gives {}, {} gives {}",
                        m.pool_size,
                        m.draw_size,
                        m.field,
                        report.oracle,
                        m.expected,
                        report.candidate,
                        m.actual
                    )?;
                }
                writeln!(
                    out,
                    "{} mismatching field(s) across {} configurations",
                    report.mismatches.len(),
                    report.configurations
                )?;
            }
        }
    }
    Ok(code)
}

fn cmd_simulate(
    ctx: &Ctx<'_>,
    config: LotteryConfig,
    trials: u64,
    seed: u64,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    if trials < 1 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    let estimate = monte_carlo(config, trials, seed)?;
    let exact = consec_core::model::streak_counts(config);
    let (overall_dev, category_dev) = estimate.deviations(&exact);
    match ctx.cli.format {
        Format::Json => emit_json(
            out,
            &json!({
                "estimate": estimate,
                "exact_overall": exact.consecutive_probability().value,
                "exact_categories": (0..config.category_count()).map(|k| exact.category_probability(k).value).collect::<Vec<_>>(),
                "deviation_sigma": { "overall": overall_dev, "categories": category_dev },
            }),
        ),
        Format::Table => {
            writeln!(out, "{config} lottery, {trials} trials, seed {seed}")?;
            writeln!(
                out,
                "{:<9} {:>10} {:>10} {:>10} {:>10} {:>10}",
                "category", "count", "frequency", "std error", "exact", "deviation"
            )?;
            let rows = estimate
                .categories
                .iter()
                .enumerate()
                .map(|(k, e)| {
                    (
                        format!("N_{k}"),
                        e,
                        exact.category_probability(k).value,
                        category_dev[k],
                    )
                })
                .chain([(
                    "N_c".to_owned(),
                    &estimate.overall,
                    exact.consecutive_probability().value,
                    overall_dev,
                )]);
            for (label, e, p, dev) in rows {
                writeln!(
                    out,
                    "{label:<9} {:>10} {:>10} {:>10} {:>10} {:>10}",
                    e.count,
                    ctx.real(e.frequency),
                    ctx.real(e.std_error),
                    ctx.real(p),
                    dev.map_or_else(|| "n/a".to_owned(), |d| format!("{}σ", ctx.real(d)))
                )?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn cmd_methods(ctx: &Ctx<'_>, out: &mut dyn Write) -> Result<u8, CliError> {
    match ctx.cli.format {
        Format::Json => {
            let methods: Vec<_> = ctx
                .registry
                .iter()
                .map(|c| json!({ "name": c.name(), "description": c.description() }))
                .collect();
            emit_json(out, &methods)
        }
        Format::Table => {
            for c in ctx.registry.iter() {
                writeln!(out, "{:<20} {}", c.name(), c.description())?;
            }
            Ok(EXIT_OK)
        }
    }
}
