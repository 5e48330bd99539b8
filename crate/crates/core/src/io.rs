//! JSON definitions of groups and measures, run configuration and report
//! envelopes, and CSV rendering of curves.
//!
//! Group file:
//! ```json
//! {"abelian": {"modulus": 5, "rank": 1},
//!  "k": {"table": [[0,1],[1,0]], "action": [[[1]], [[4]]]}}
//! ```
//! Measure file (atoms with equal `(a, k)` are summed):
//! ```json
//! {"atoms": [{"a": [1], "k": 0, "re": 0.5, "im": 0.0}]}
//! ```

use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::classify::{DecayCurve, Verdict};
use crate::error::{Error, Result};
use crate::group::{GElem, MotionGroup};
use crate::measure::GroupMeasure;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AbelianSpec {
    pub modulus: u64,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KSpec {
    pub table: Vec<Vec<usize>>,
    pub action: Vec<Vec<Vec<i64>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub abelian: AbelianSpec,
    pub k: KSpec,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Atom {
    pub a: Vec<u64>,
    pub k: usize,
    pub re: f64,
    #[serde(default)]
    pub im: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeasureFile {
    pub atoms: Vec<Atom>,
}

fn json_error(what: &str, e: serde_json::Error) -> Error {
    Error::Parse(format!("{what}: {e} (line {}, column {})", e.line(), e.column()))
}

impl GroupFile {
    pub fn from_group(g: &MotionGroup) -> Self {
        let action = g
            .k()
            .actions()
            .iter()
            .map(|m| m.rows().into_iter().map(|r| r.into_iter().map(|v| v as i64).collect()).collect())
            .collect();
        Self {
            abelian: AbelianSpec { modulus: g.modulus(), rank: g.rank() },
            k: KSpec { table: g.k().table().to_vec(), action },
        }
    }

    pub fn build(&self) -> Result<MotionGroup> {
        MotionGroup::build(self.abelian.modulus, self.abelian.rank, self.k.table.clone(), &self.k.action)
    }
}

impl MeasureFile {
    /// Nonzero atoms in canonical order.
    pub fn from_measure(mu: &GroupMeasure) -> Self {
        let g = mu.group();
        let atoms = mu
            .support()
            .into_iter()
            .map(|x| {
                let e = g.element(x);
                let w = mu.weight(x);
                Atom { a: e.a, k: e.k, re: w.re, im: w.im }
            })
            .collect();
        Self { atoms }
    }

    pub fn build(&self, g: Arc<MotionGroup>) -> Result<GroupMeasure> {
        let mut w = vec![Complex64::new(0.0, 0.0); g.order()];
        for (i, atom) in self.atoms.iter().enumerate() {
            let e = GElem::new(atom.a.clone(), atom.k);
            if !g.is_valid(&e) {
                return Err(Error::Parse(format!(
                    "atom {i}: ({:?}, {}) is not an element of a group with modulus {}, rank {}, |K| = {}",
                    atom.a,
                    atom.k,
                    g.modulus(),
                    g.rank(),
                    g.k_order()
                )));
            }
            if !atom.re.is_finite() || !atom.im.is_finite() {
                return Err(Error::Parse(format!("atom {i}: weight is not finite")));
            }
            w[g.index_of(&e)] += Complex64::new(atom.re, atom.im);
        }
        GroupMeasure::new(g, w)
    }
}

pub fn parse_group(text: &str) -> Result<MotionGroup> {
    let file: GroupFile = serde_json::from_str(text).map_err(|e| json_error("group", e))?;
    file.build()
}

pub fn parse_measure(text: &str, g: Arc<MotionGroup>) -> Result<GroupMeasure> {
    let file: MeasureFile = serde_json::from_str(text).map_err(|e| json_error("measure", e))?;
    file.build(g)
}

pub fn group_to_json(g: &MotionGroup) -> String {
    serde_json::to_string_pretty(&GroupFile::from_group(g)).expect("plain data")
}

pub fn measure_to_json(mu: &GroupMeasure) -> String {
    serde_json::to_string_pretty(&MeasureFile::from_measure(mu)).expect("plain data")
}

pub fn read_file(path: &std::path::Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Table,
}

/// Everything a command was run with.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub group_path: Option<PathBuf>,
    pub measure_path: Option<PathBuf>,
    pub tol: f64,
    pub n_max: u64,
    pub format: Format,
    pub seed: u64,
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err(Error::InvalidParameters(format!("tol must be positive, got {}", self.tol)));
        }
        if self.n_max < 1 {
            return Err(Error::InvalidParameters("n_max must be >= 1".into()));
        }
        Ok(())
    }
}

/// Report envelope: tool name and version, configuration, and payload.
#[derive(Debug, Clone, Serialize)]
pub struct Report<'a, T: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'a str,
    pub config: &'a RunConfig,
    pub result: &'a T,
}

pub fn report_json<T: Serialize>(command: &str, config: &RunConfig, result: &T) -> String {
    let r = Report {
        tool: "motion-walks",
        version: env!("CARGO_PKG_VERSION"),
        command,
        config,
        result,
    };
    serde_json::to_string_pretty(&r).expect("report serializes")
}

fn curve_rows(out: &mut String, name: &str, points: &[(u64, f64)]) {
    for (n, v) in points {
        let _ = writeln!(out, "{name},{n},{v:e}");
    }
}

/// `curve,n,value` rows for every empirical curve of a verdict.
pub fn verdict_curves_csv(v: &Verdict) -> String {
    let mut out = String::from("curve,n,value\n");
    curve_rows(&mut out, "mixing", &v.empirical_mixing.points);
    curve_rows(&mut out, "ergodic", &v.empirical_ergodic.points);
    curve_rows(&mut out, "weak_mixing", &v.weak_mixing_empirical.points);
    curve_rows(&mut out, "weak_mixing_tail", &v.weak_mixing_empirical.tail_points);
    out
}

pub fn curve_csv(name: &str, c: &DecayCurve) -> String {
    let mut out = String::from("curve,n,value\n");
    curve_rows(&mut out, name, &c.points);
    out
}

/// Header plus rows, each row already split into fields.
pub fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for r in rows {
        out.push_str(&r.join(","));
        out.push('\n');
    }
    out
}

/// Left-aligned plain-text table.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, f) in widths.iter_mut().zip(r) {
            *w = (*w).max(f.chars().count());
        }
    }
    let line = |fields: Vec<String>| -> String {
        fields
            .iter()
            .zip(&widths)
            .map(|(f, w)| format!("{f:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let mut out = line(header.iter().map(|s| s.to_string()).collect());
    out.push('\n');
    for r in rows {
        out.push_str(&line(r.clone()));
        out.push('\n');
    }
    out
}
