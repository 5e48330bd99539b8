//! `motion-walks`: classify random walks on finite motion groups.
//!
//! Exit codes: 0 success, 1 check failed (`verify-srf` only), 2 violated
//! implications, 3 no violations but an indeterminate spectral verdict,
//! 64 unreadable or invalid input, 65 measure is not a probability,
//! 70 internal failure.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use motion_walks::classify::{self, ClassifyConfig, TriState, Verdict};
use motion_walks::io::{self, Format, RunConfig};
use motion_walks::rosenblatt;
use motion_walks::simulate;
use motion_walks::spectral::{self, BlockRecord};
use motion_walks::{Error, GroupMeasure, ProbabilityMeasure};
use serde::Serialize;

const EXIT_OK: u8 = 0;
const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_VIOLATIONS: u8 = 2;
const EXIT_INDETERMINATE: u8 = 3;
const EXIT_USAGE: u8 = 64;
const EXIT_NOT_PROBABILITY: u8 = 65;
const EXIT_INTERNAL: u8 = 70;

#[derive(Parser)]
#[command(name = "motion-walks", version, about = "Random walks on finite motion groups A ⋊ K")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide (SR), (S), adaptedness, strict aperiodicity and the empirical conditions.
    Classify(Common),
    /// Compare the Gelfand radius with the largest block spectral radius.
    VerifySrf(Common),
    /// Per-block spectral radius, norm and distance of 1 from the spectrum.
    Spectrum(Common),
    /// Monte Carlo distance to uniform against the exact law.
    Simulate {
        #[command(flatten)]
        common: Common,
        /// Number of independent walks per step count.
        #[arg(long, default_value_t = 100_000)]
        trials: usize,
    },
    /// Defect of the normalized indicators for the Z² ⋊ Z example.
    Rosenblatt {
        /// Window lengths (each at least 3).
        #[arg(long = "n", value_delimiter = ',', default_values_t = [8usize, 64, 1024])]
        n_list: Vec<usize>,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Common {
    /// Group definition (JSON).
    #[arg(long)]
    group: PathBuf,
    /// Measure definition (JSON).
    #[arg(long)]
    measure: PathBuf,
    #[arg(long, default_value_t = spectral::DEFAULT_TOL)]
    tol: f64,
    /// Largest power for the decay curves (Cesàro curves stop at half of it).
    #[arg(long, default_value_t = 1024)]
    n_max: u64,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write output here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Table,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Table => Format::Table,
        }
    }
}

impl Common {
    fn config(&self) -> RunConfig {
        RunConfig {
            group_path: Some(self.group.clone()),
            measure_path: Some(self.measure.clone()),
            tol: self.tol,
            n_max: self.n_max,
            format: self.format.into(),
            seed: self.seed,
        }
    }

    fn load(&self) -> Result<(RunConfig, GroupMeasure), Error> {
        let cfg = self.config();
        cfg.validate()?;
        let g = io::parse_group(&io::read_file(&self.group)?)?;
        let mu = io::parse_measure(&io::read_file(&self.measure)?, Arc::new(g))?;
        Ok((cfg, mu))
    }
}

fn exit_for(e: &Error) -> u8 {
    match e {
        Error::Parse(_)
        | Error::InvalidParameters(_)
        | Error::NotAGroupTable(_)
        | Error::NotAHomomorphism { .. }
        | Error::NotInvertible { .. }
        | Error::InvalidElement(_) => EXIT_USAGE,
        Error::NotProbability(_) | Error::EmptySupport => EXIT_NOT_PROBABILITY,
        _ => EXIT_INTERNAL,
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Error> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Parse(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn f(v: f64) -> String {
    format!("{v:.6e}")
}

fn classify_text(v: &Verdict, format: Format) -> String {
    let rows: Vec<Vec<String>> = vec![
        vec!["SR".into(), v.sr.state.to_string(), v.sr.witness.as_ref().map_or("-".into(), |w| format!("{} radius={}", w.block, f(w.value)))],
        vec!["S".into(), v.s.state.to_string(), v.s.witness.as_ref().map_or("-".into(), |w| format!("{} margin={}", w.block, f(w.value)))],
        vec!["A".into(), holds(v.adapted.holds), format!("generated subgroup {}/{}", v.adapted.subgroup_size, v.adapted.group_order)],
        vec!["ASA".into(), holds(v.aperiodic()), format!("normal closure of differences {}/{}", v.strictly_aperiodic.subgroup_size, v.strictly_aperiodic.group_order)],
        vec!["M".into(), v.empirical_mixing.verdict.to_string(), format!("sup ||f*mu^n|| = {} at n = {}", f(v.empirical_mixing.last()), v.empirical_mixing.points.last().map_or(0, |p| p.0))],
        vec!["E".into(), v.empirical_ergodic.verdict.to_string(), format!("Cesaro sup = {} at n = {}", f(v.empirical_ergodic.last()), v.empirical_ergodic.points.last().map_or(0, |p| p.0))],
        vec!["WM".into(), v.weak_mixing_empirical.verdict.to_string(), format!("tail average = {}", f(v.weak_mixing_empirical.tail_points.last().map_or(f64::NAN, |p| p.1)))],
    ];
    match format {
        Format::Csv => io::verdict_curves_csv(v),
        _ => {
            let mut t = io::table(&["condition", "verdict", "detail"], &rows);
            if v.consistency.is_empty() {
                t.push_str("consistency: no violations\n");
            } else {
                t.push_str(&format!("consistency: VIOLATED {}\n", v.consistency.join(", ")));
            }
            t
        }
    }
}

fn holds(b: bool) -> String {
    if b { "HOLDS" } else { "FAILS" }.to_string()
}

fn block_rows(records: &[&BlockRecord]) -> Vec<Vec<String>> {
    records
        .iter()
        .map(|r| {
            vec![
                r.block.to_string(),
                f(r.spectral_radius),
                f(r.op_norm),
                f(r.margin),
                r.one_in_spectrum.to_string(),
            ]
        })
        .collect()
}

const BLOCK_HEADER: [&str; 5] = ["block", "radius", "norm", "margin", "one_in_spectrum"];

fn render<T: Serialize>(
    command: &str,
    cfg: &RunConfig,
    result: &T,
    header: &[&str],
    rows: &[Vec<String>],
) -> String {
    match cfg.format {
        Format::Json => {
            let mut s = io::report_json(command, cfg, result);
            s.push('\n');
            s
        }
        Format::Csv => io::csv(header, rows),
        Format::Table => io::table(header, rows),
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Classify(c) => {
            let (cfg, mu) = c.load()?;
            let mu = ProbabilityMeasure::new(mu)?;
            let ccfg = ClassifyConfig {
                tol: cfg.tol,
                n_max: cfg.n_max,
                cesaro_n_max: (cfg.n_max / 2).max(1),
                seed: cfg.seed,
                ..ClassifyConfig::default()
            };
            let v = classify::cross_check(&mu, &ccfg)?;
            let text = match cfg.format {
                Format::Json => io::report_json("classify", &cfg, &v) + "\n",
                other => classify_text(&v, other),
            };
            emit(c.out.as_deref(), &text)?;
            Ok(if !v.consistency.is_empty() {
                EXIT_VIOLATIONS
            } else if v.sr.state == TriState::Indeterminate || v.s.state == TriState::Indeterminate {
                EXIT_INDETERMINATE
            } else {
                EXIT_OK
            })
        }
        Command::VerifySrf(c) => {
            let (cfg, mu) = c.load()?;
            let r = spectral::verify_srf(&mu, cfg.tol)?;
            let rows = vec![vec![
                f(r.gelfand_radius_estimate),
                f(r.sup_block_radius),
                f(r.formula_gap),
                f(r.star_norm),
                if r.pass { "PASS" } else { "FAIL" }.to_string(),
            ]];
            let header = ["gelfand_radius", "sup_block_radius", "formula_gap", "star_norm", "result"];
            emit(c.out.as_deref(), &render("verify-srf", &cfg, &r, &header, &rows))?;
            Ok(if r.pass { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::Spectrum(c) => {
            let (cfg, mu) = c.load()?;
            let m = mu.group().k_order();
            let mut records = Vec::new();
            for (alpha, block) in spectral::orbit_blocks(&mu) {
                if alpha.is_zero() {
                    let comp = motion_walks::rep::compress_to_complement(&block, m);
                    records.push(BlockRecord::compute(spectral::BlockId::Lambda0Complement, &comp, cfg.tol)?);
                }
                records.push(BlockRecord::compute(spectral::BlockId::Orbit { representative: alpha }, &block, cfg.tol)?);
            }
            let rows = block_rows(&records.iter().collect::<Vec<_>>());
            emit(c.out.as_deref(), &render("spectrum", &cfg, &records, &BLOCK_HEADER, &rows))?;
            Ok(EXIT_OK)
        }
        Command::Simulate { common, trials } => {
            let (cfg, mu) = common.load()?;
            mu.check_probability()?;
            let steps = classify::dyadic_schedule(cfg.n_max);
            let table = simulate::tv_table(&mu, &steps, trials, cfg.seed)?;
            let rows: Vec<Vec<String>> = table
                .iter()
                .map(|r| vec![r.n.to_string(), f(r.tv_exact), f(r.tv_empirical)])
                .collect();
            let header = ["n", "tv_exact", "tv_empirical"];
            emit(common.out.as_deref(), &render("simulate", &cfg, &table, &header, &rows))?;
            Ok(EXIT_OK)
        }
        Command::Rosenblatt { n_list, format, out } => {
            let report = rosenblatt::report(&n_list)?;
            let rows: Vec<Vec<String>> = report
                .rows
                .iter()
                .map(|r| vec![r.n.to_string(), format!("{:.15e}", r.direct), format!("{:.15e}", r.closed_form)])
                .collect();
            let header = ["n", "direct", "closed_form"];
            let text = match Format::from(format) {
                Format::Json => serde_json::to_string_pretty(&RosenblattOut {
                    tool: "motion-walks",
                    version: env!("CARGO_PKG_VERSION"),
                    n_list: &n_list,
                    result: &report,
                })
                .expect("report serializes")
                    + "\n",
                Format::Csv => io::csv(&header, &rows),
                Format::Table => {
                    let mut t = format!("lambda = {}\nt = ({}, {})\n", report.lambda, report.t[0], report.t[1]);
                    t.push_str(&io::table(&header, &rows));
                    t
                }
            };
            emit(out.as_deref(), &text)?;
            Ok(EXIT_OK)
        }
    }
}

#[derive(Serialize)]
struct RosenblattOut<'a> {
    tool: &'static str,
    version: &'static str,
    n_list: &'a [usize],
    result: &'a rosenblatt::RosenblattReport,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_for(&e))
        }
    }
}

