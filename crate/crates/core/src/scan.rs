//! Parameter-space sweeps comparing each sufficient condition with the
//! empirical subordination check, and their CSV / JSON serialization.
//!
//! Work is parallel over `(n, α)`; each task evaluates its functional on the
//! grid once and reuses the samples for every `(C, D)` and sign convention.
//! Rows are reassembled in a fixed order, so output does not depend on the
//! thread count.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::domain::{JanowskiParams, SignConvention, TargetDomain};
use crate::error::{Error, Result};
use crate::laguerre::PolynomialSpec;
use crate::subordination::{DiskGrid, Functional, FunctionalKind, SampledFunctional};
use crate::theorems::{
    nonvanishing_clause, thm1_condition, thm2_algebraic_clauses, Clause, ClauseStatus, ConditionVerdict, Quadruple,
    Relation,
};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

pub const CSV_HEADER: [&str; 11] = [
    "n",
    "alpha",
    "C",
    "D",
    "condition_holds",
    "empirical_verdict",
    "worst_margin",
    "witness_re",
    "witness_im",
    "nonvanishing_ok",
    "failed_clauses",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanTheorem {
    /// Exponential subordination of `M_{n,α}`.
    Thm1,
    /// Janowski convexity of `M_{n,α}`.
    Thm2,
    /// Janowski starlikeness of `z·M_{n,α}`.
    Corollary,
}

impl std::str::FromStr for ScanTheorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "thm1" => Ok(ScanTheorem::Thm1),
            "thm2" => Ok(ScanTheorem::Thm2),
            "corollary" => Ok(ScanTheorem::Corollary),
            other => Err(Error::Config(format!("unknown theorem {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConventionChoice {
    #[serde(rename = "plusD")]
    PlusD,
    #[serde(rename = "minusD")]
    MinusD,
    #[serde(rename = "both")]
    Both,
}

impl ConventionChoice {
    pub fn conventions(&self) -> Vec<SignConvention> {
        match self {
            ConventionChoice::PlusD => vec![SignConvention::PlusD],
            ConventionChoice::MinusD => vec![SignConvention::MinusD],
            ConventionChoice::Both => vec![SignConvention::PlusD, SignConvention::MinusD],
        }
    }
}

impl std::str::FromStr for ConventionChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plusD" | "plus" => Ok(ConventionChoice::PlusD),
            "minusD" | "minus" => Ok(ConventionChoice::MinusD),
            "both" => Ok(ConventionChoice::Both),
            other => Err(Error::Config(format!("unknown sign convention {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    Csv,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::Config(format!("unknown format {other:?}"))),
        }
    }
}

/// Closed range `start, start+step, ..., <= end`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StepRange {
    pub start: f64,
    pub end: f64,
    pub step: f64,
}

impl StepRange {
    pub fn new(start: f64, end: f64, step: f64) -> Self {
        StepRange { start, end, step }
    }

    pub fn validate(&self, name: &str) -> Result<()> {
        if !(self.start.is_finite() && self.end.is_finite() && self.step.is_finite()) {
            return Err(Error::Config(format!("{name}: bounds and step must be finite")));
        }
        if !(self.step > 0.0) {
            return Err(Error::Config(format!("{name}: step must be > 0")));
        }
        if self.end < self.start {
            return Err(Error::Config(format!("{name}: empty range [{}, {}]", self.start, self.end)));
        }
        Ok(())
    }

    /// Values computed as `start + i·step` and rounded to 12 decimals, so
    /// `0.05`-steps print as `0.3` rather than `0.30000000000000004`.
    pub fn values(&self) -> Vec<f64> {
        let count = ((self.end - self.start) / self.step + 1e-9).floor() as usize + 1;
        (0..count).map(|i| ((self.start + i as f64 * self.step) * 1e12).round() / 1e12).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanConfig {
    pub theorem: ScanTheorem,
    /// Inclusive `[n_min, n_max]`.
    pub n_range: [usize; 2],
    pub alpha_range: StepRange,
    #[serde(rename = "C_range")]
    pub c_range: StepRange,
    #[serde(rename = "D_range")]
    pub d_range: StepRange,
    pub grid: DiskGrid,
    pub sign_convention: ConventionChoice,
    /// Radius at which nonvanishing hypotheses are checked.
    pub root_radius: f64,
    pub format: OutputFormat,
    #[serde(skip_serializing, default)]
    pub output_path: Option<PathBuf>,
}

impl ScanConfig {
    pub fn default_for(theorem: ScanTheorem) -> Self {
        let (n_range, alpha_range) = match theorem {
            ScanTheorem::Thm1 => ([0, 8], StepRange::new(-0.75, 15.0, 0.25)),
            ScanTheorem::Thm2 => ([1, 4], StepRange::new(0.0, 10.0, 0.25)),
            ScanTheorem::Corollary => ([0, 3], StepRange::new(0.25, 10.0, 0.25)),
        };
        let (sign_convention, format) = match theorem {
            ScanTheorem::Thm1 => (ConventionChoice::PlusD, OutputFormat::Csv),
            _ => (ConventionChoice::Both, OutputFormat::Json),
        };
        ScanConfig {
            theorem,
            n_range,
            alpha_range,
            c_range: StepRange::new(-1.0, 1.0, 0.05),
            d_range: StepRange::new(-0.95, 1.0, 0.05),
            grid: DiskGrid::CANONICAL,
            sign_convention,
            root_radius: 1.0,
            format,
            output_path: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let [lo, hi] = self.n_range;
        if lo > hi {
            return Err(Error::Config(format!("n_range: empty range [{lo}, {hi}]")));
        }
        self.alpha_range.validate("alpha_range")?;
        self.grid.validate().map_err(|e| Error::Config(e.to_string()))?;
        if !(self.root_radius > 0.0 && self.root_radius.is_finite()) {
            return Err(Error::Config("root_radius must be finite and > 0".into()));
        }
        let alphas = self.alpha_range.values();
        match self.theorem {
            ScanTheorem::Thm1 | ScanTheorem::Thm2 => {
                if alphas.iter().any(|&a| a <= -1.0) {
                    return Err(Error::Config("alpha must be > -1".into()));
                }
                if self.theorem == ScanTheorem::Thm2 && lo == 0 {
                    return Err(Error::Config("convexity scan needs n >= 1".into()));
                }
            }
            ScanTheorem::Corollary => {
                if alphas.iter().any(|&a| a <= 0.0) {
                    return Err(Error::Config("starlikeness scan needs alpha > 0".into()));
                }
            }
        }
        if self.theorem != ScanTheorem::Thm1 {
            self.c_range.validate("C_range")?;
            self.d_range.validate("D_range")?;
            if self.janowski_pairs().is_empty() {
                return Err(Error::Config("no (C, D) pair satisfies -1 <= D < C <= 1".into()));
            }
            if self.format == OutputFormat::Csv && self.sign_convention == ConventionChoice::Both {
                return Err(Error::Config(
                    "CSV has no sign_convention column; choose plusD or minusD, or use JSON".into(),
                ));
            }
        }
        Ok(())
    }

    /// `(C, D)` pairs with `-1 <= D < C <= 1`, C-major.
    pub fn janowski_pairs(&self) -> Vec<JanowskiParams> {
        let ds = self.d_range.values();
        self.c_range
            .values()
            .into_iter()
            .flat_map(|c| ds.iter().filter_map(move |&d| JanowskiParams::new(c, d).ok()))
            .collect()
    }
}

/// Partial configuration: a JSON config file or a set of CLI flags.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScanConfigPatch {
    pub theorem: Option<ScanTheorem>,
    pub n_range: Option<[usize; 2]>,
    pub alpha_range: Option<StepRange>,
    #[serde(rename = "C_range")]
    pub c_range: Option<StepRange>,
    #[serde(rename = "D_range")]
    pub d_range: Option<StepRange>,
    pub grid: Option<DiskGrid>,
    pub sign_convention: Option<ConventionChoice>,
    pub root_radius: Option<f64>,
    pub format: Option<OutputFormat>,
    pub output_path: Option<PathBuf>,
}

impl ScanConfigPatch {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(format!("config file: {e}")))
    }

    /// Later patches win. The theorem picks the defaults underneath.
    pub fn resolve(layers: &[&ScanConfigPatch]) -> ScanConfig {
        let theorem = layers.iter().rev().find_map(|p| p.theorem).unwrap_or(ScanTheorem::Thm2);
        let mut cfg = ScanConfig::default_for(theorem);
        for p in layers {
            if let Some(v) = p.n_range {
                cfg.n_range = v;
            }
            if let Some(v) = p.alpha_range {
                cfg.alpha_range = v;
            }
            if let Some(v) = p.c_range {
                cfg.c_range = v;
            }
            if let Some(v) = p.d_range {
                cfg.d_range = v;
            }
            if let Some(v) = p.grid {
                cfg.grid = v;
            }
            if let Some(v) = p.sign_convention {
                cfg.sign_convention = v;
            }
            if let Some(v) = p.root_radius {
                cfg.root_radius = v;
            }
            if let Some(v) = p.format {
                cfg.format = v;
            }
            if let Some(v) = &p.output_path {
                cfg.output_path = Some(v.clone());
            }
        }
        cfg
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanRow {
    pub n: usize,
    pub alpha: f64,
    #[serde(rename = "C")]
    pub c: Option<f64>,
    #[serde(rename = "D")]
    pub d: Option<f64>,
    pub sign_convention: Option<SignConvention>,
    pub condition_holds: bool,
    pub failed_clauses: Vec<String>,
    pub empirical_verdict: bool,
    pub worst_margin: f64,
    pub witness: Complex64,
    pub nonvanishing_ok: bool,
}

impl ScanRow {
    pub fn is_soundness_violation(&self) -> bool {
        self.condition_holds && !self.empirical_verdict
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub sign_convention: Option<SignConvention>,
    pub rows: usize,
    pub condition_holds: usize,
    pub empirical_true: usize,
    pub soundness_violations: usize,
}

impl std::fmt::Display for ScanSummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let conv = self.sign_convention.map_or("-", |c| c.as_str());
        write!(
            f,
            "sign_convention={conv} rows={} condition_holds={} empirical_true={} soundness_violations={}",
            self.rows, self.condition_holds, self.empirical_true, self.soundness_violations
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanOutput {
    pub config: ScanConfig,
    pub rows: Vec<ScanRow>,
    pub summary: Vec<ScanSummary>,
    pub tool_version: String,
}

pub fn summarize(rows: &[ScanRow]) -> Vec<ScanSummary> {
    let mut keys: Vec<Option<SignConvention>> = Vec::new();
    for r in rows {
        if !keys.contains(&r.sign_convention) {
            keys.push(r.sign_convention);
        }
    }
    keys.into_iter()
        .map(|key| {
            let sel: Vec<&ScanRow> = rows.iter().filter(|r| r.sign_convention == key).collect();
            ScanSummary {
                sign_convention: key,
                rows: sel.len(),
                condition_holds: sel.iter().filter(|r| r.condition_holds).count(),
                empirical_true: sel.iter().filter(|r| r.empirical_verdict).count(),
                soundness_violations: sel.iter().filter(|r| r.is_soundness_violation()).count(),
            }
        })
        .collect()
}

/// Nonvanishing clause that records an ambiguous root as a violation instead
/// of aborting the sweep.
fn lenient_nonvanishing(spec: &PolynomialSpec, order: usize, radius: f64) -> Result<Clause> {
    match nonvanishing_clause(spec, order, radius) {
        Ok(c) => Ok(c),
        Err(Error::AmbiguousRoot { modulus, .. }) => Ok(Clause {
            name: "nonvanishing:ambiguous-root".into(),
            lhs: Some(modulus),
            relation: Relation::Gt,
            rhs: Some(radius),
            status: ClauseStatus::Violated,
            note: Some(format!("root of derivative order {order} within the guard band")),
        }),
        Err(e) => Err(e),
    }
}

#[allow(clippy::too_many_arguments)]
fn make_row(
    n: usize,
    alpha: f64,
    pair: Option<&JanowskiParams>,
    convention: Option<SignConvention>,
    verdict: &ConditionVerdict,
    sampled: &SampledFunctional,
    domain: &TargetDomain,
    nonvanishing_ok: bool,
) -> ScanRow {
    let report = sampled.report(domain);
    ScanRow {
        n,
        alpha,
        c: pair.map(|p| p.c()),
        d: pair.map(|p| p.d()),
        sign_convention: convention,
        condition_holds: verdict.holds,
        failed_clauses: verdict.failed().map(|c| c.name.clone()).collect(),
        empirical_verdict: report.verdict,
        worst_margin: report.worst_margin,
        witness: report.witness,
        nonvanishing_ok,
    }
}

/// Rows for one `(n, α)`, one vector per sign convention.
fn rows_for(cfg: &ScanConfig, pairs: &[JanowskiParams], n: usize, alpha: f64) -> Result<Vec<Vec<ScanRow>>> {
    match cfg.theorem {
        ScanTheorem::Thm1 => {
            let spec = PolynomialSpec::new(n, alpha)?;
            let verdict = thm1_condition(n, alpha)?;
            let nv = lenient_nonvanishing(&spec, 0, cfg.root_radius)?;
            let sampled = SampledFunctional::new(&Functional::new(FunctionalKind::Identity, spec), &cfg.grid)?;
            Ok(vec![vec![make_row(
                n,
                alpha,
                None,
                None,
                &verdict,
                &sampled,
                &TargetDomain::Exponential,
                !nv.is_violated(),
            )]])
        }
        ScanTheorem::Thm2 | ScanTheorem::Corollary => {
            let base = PolynomialSpec::new(n, alpha)?;
            // Condition parameters differ from the sampled polynomial for the corollary.
            let (cond_n, cond_alpha, functional) = if cfg.theorem == ScanTheorem::Thm2 {
                (n, alpha, Functional::new(FunctionalKind::ConvexityRatio, base))
            } else {
                (n + 1, alpha - 1.0, Functional::with_prefactor_z(FunctionalKind::StarlikeRatio, base))
            };
            let cond_spec = PolynomialSpec::new(cond_n, cond_alpha)?;
            let nv1 = lenient_nonvanishing(&cond_spec, 1, cfg.root_radius)?;
            let nv2 = lenient_nonvanishing(&cond_spec, 2, cfg.root_radius)?;
            let nonvanishing_ok = !nv1.is_violated() && !nv2.is_violated();
            let sampled = SampledFunctional::new(&functional, &cfg.grid)?;

            let verdicts: Vec<ConditionVerdict> = pairs
                .iter()
                .map(|p| {
                    let q = Quadruple::new(cond_n, cond_alpha, p.c(), p.d())?;
                    let mut clauses = thm2_algebraic_clauses(&q);
                    clauses.push(nv1.clone());
                    clauses.push(nv2.clone());
                    Ok(ConditionVerdict::from_clauses(clauses))
                })
                .collect::<Result<_>>()?;

            Ok(cfg
                .sign_convention
                .conventions()
                .into_iter()
                .map(|conv| {
                    pairs
                        .iter()
                        .zip(&verdicts)
                        .map(|(p, v)| {
                            let domain = TargetDomain::Janowski { params: *p, convention: conv };
                            make_row(n, alpha, Some(p), Some(conv), v, &sampled, &domain, nonvanishing_ok)
                        })
                        .collect()
                })
                .collect())
        }
    }
}

/// Runs the sweep on the current rayon pool.
pub fn run_scan(cfg: &ScanConfig) -> Result<ScanOutput> {
    cfg.validate()?;
    let pairs = if cfg.theorem == ScanTheorem::Thm1 { Vec::new() } else { cfg.janowski_pairs() };
    let alphas = cfg.alpha_range.values();
    let cells: Vec<(usize, f64)> =
        (cfg.n_range[0]..=cfg.n_range[1]).flat_map(|n| alphas.iter().map(move |&a| (n, a))).collect();

    let blocks: Vec<Vec<Vec<ScanRow>>> =
        cells.par_iter().map(|&(n, a)| rows_for(cfg, &pairs, n, a)).collect::<Result<_>>()?;

    let n_conv = blocks.first().map_or(0, |b| b.len());
    let mut rows = Vec::new();
    for conv in 0..n_conv {
        for block in &blocks {
            rows.extend(block[conv].iter().cloned());
        }
    }
    let summary = summarize(&rows);
    Ok(ScanOutput { config: cfg.clone(), rows, summary, tool_version: TOOL_VERSION.to_string() })
}

/// Shortest round-trip text for `x`, with an exponent for very large or small
/// magnitudes; integral values carry no `.0` and `-0` prints as `0`.
pub fn format_real(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let s = format!("{x:?}");
    match s.strip_suffix(".0") {
        Some(t) => t.to_string(),
        None => s,
    }
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map(format_real).unwrap_or_default()
}

pub fn to_csv(rows: &[ScanRow]) -> Result<Vec<u8>> {
    let io = |e: csv::Error| Error::Io(e.to_string());
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).map_err(io)?;
    for r in rows {
        w.write_record([
            r.n.to_string(),
            format_real(r.alpha),
            fmt_opt(r.c),
            fmt_opt(r.d),
            r.condition_holds.to_string(),
            r.empirical_verdict.to_string(),
            format_real(r.worst_margin),
            format_real(r.witness.re),
            format_real(r.witness.im),
            r.nonvanishing_ok.to_string(),
            r.failed_clauses.join(";"),
        ])
        .map_err(io)?;
    }
    w.into_inner().map_err(|e| Error::Io(e.to_string()))
}

pub fn to_json(out: &ScanOutput) -> Result<Vec<u8>> {
    let mut buf = serde_json::to_vec(out).map_err(|e| Error::Io(e.to_string()))?;
    buf.push(b'\n');
    Ok(buf)
}

pub fn serialize(out: &ScanOutput) -> Result<Vec<u8>> {
    match out.config.format {
        OutputFormat::Csv => to_csv(&out.rows),
        OutputFormat::Json => to_json(out),
    }
}

/// Writes through a sibling temporary file; nothing is left behind on failure.
pub fn write_atomically(path: &Path, bytes: &[u8]) -> Result<()> {
    let mut tmp_name = path.file_name().map(|s| s.to_os_string()).unwrap_or_default();
    tmp_name.push(".partial");
    let tmp = path.with_file_name(tmp_name);
    let result = (|| -> std::io::Result<()> {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(bytes)?;
        f.sync_all()?;
        fs::rename(&tmp, path)
    })();
    if let Err(e) = result {
        let _ = fs::remove_file(&tmp);
        return Err(e.into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(theorem: ScanTheorem) -> ScanConfig {
        let mut cfg = ScanConfig::default_for(theorem);
        cfg.grid = DiskGrid::new(0.99, 8, 32).unwrap();
        cfg.n_range = if theorem == ScanTheorem::Corollary { [0, 1] } else { [1, 2] };
        cfg.alpha_range = StepRange::new(0.5, 3.5, 1.5);
        cfg.c_range = StepRange::new(0.0, 1.0, 0.5);
        cfg.d_range = StepRange::new(-1.0, 0.5, 0.5);
        cfg
    }

    #[test]
    fn real_formatting() {
        assert_eq!(format_real(0.875), "0.875");
        assert_eq!(format_real(1.0), "1");
        assert_eq!(format_real(-0.0), "0");
        assert_eq!(format_real(1.2234221523482057e-16), "1.2234221523482057e-16");
        assert_eq!(format_real(-2.5e20), "-2.5e20");
        for x in [0.1, 1.0 / 3.0, -7.25e-9, f64::MAX] {
            assert_eq!(format_real(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn step_range_values_are_clean() {
        let v = StepRange::new(-1.0, 1.0, 0.05).values();
        assert_eq!(v.len(), 41);
        assert_eq!(v[26], 0.3);
        assert_eq!(v[40], 1.0);
        assert_eq!(StepRange::new(0.0, 10.0, 0.25).values().len(), 41);
    }

    #[test]
    fn default_pairs_match_strict_filter() {
        let cfg = ScanConfig::default_for(ScanTheorem::Thm2);
        let pairs = cfg.janowski_pairs();
        assert_eq!(pairs.len(), 780);
        assert!(pairs.iter().all(|p| p.d() > -1.0 && p.d() < p.c() && p.c() <= 1.0));
    }

    #[test]
    fn empty_pair_filter_is_a_config_error() {
        let mut cfg = small(ScanTheorem::Thm2);
        cfg.c_range = StepRange::new(-0.5, -0.5, 0.1);
        cfg.d_range = StepRange::new(0.0, 0.5, 0.1);
        assert!(matches!(cfg.validate(), Err(Error::Config(_))));
    }

    #[test]
    fn csv_with_both_conventions_is_rejected() {
        let mut cfg = small(ScanTheorem::Thm2);
        cfg.format = OutputFormat::Csv;
        assert!(cfg.validate().is_err());
        cfg.sign_convention = ConventionChoice::MinusD;
        assert!(cfg.validate().is_ok());
    }

    #[test]
    fn thm2_rows_are_grouped_by_convention() {
        let cfg = small(ScanTheorem::Thm2);
        let out = run_scan(&cfg).unwrap();
        let pairs = cfg.janowski_pairs().len();
        assert_eq!(out.rows.len(), 2 * 2 * 3 * pairs);
        let half = out.rows.len() / 2;
        assert!(out.rows[..half].iter().all(|r| r.sign_convention == Some(SignConvention::PlusD)));
        assert!(out.rows[half..].iter().all(|r| r.sign_convention == Some(SignConvention::MinusD)));
        assert_eq!(out.summary.len(), 2);
        assert!(out.rows.iter().all(|r| !r.condition_holds));
    }

    #[test]
    fn thm1_rows_match_condition() {
        let mut cfg = small(ScanTheorem::Thm1);
        cfg.alpha_range = StepRange::new(-0.5, 6.0, 0.5);
        let out = run_scan(&cfg).unwrap();
        for r in &out.rows {
            assert_eq!(r.condition_holds, r.alpha > r.n as f64 + 1.0);
            assert!(r.c.is_none());
        }
        assert_eq!(out.summary[0].soundness_violations, 0);
    }

    #[test]
    fn corollary_scan_runs() {
        let out = run_scan(&small(ScanTheorem::Corollary)).unwrap();
        assert!(!out.rows.is_empty());
        assert!(out.rows.iter().all(|r| !r.condition_holds));
    }

    #[test]
    fn csv_schema_and_config_patch() {
        let out = run_scan(&small(ScanTheorem::Thm1)).unwrap();
        let csv = String::from_utf8(to_csv(&out.rows).unwrap()).unwrap();
        assert_eq!(csv.lines().next().unwrap(), CSV_HEADER.join(","));
        assert_eq!(csv.lines().count(), out.rows.len() + 1);

        let file = ScanConfigPatch::from_json(r#"{"theorem":"thm1","n_range":[0,2]}"#).unwrap();
        let flags = ScanConfigPatch { n_range: Some([1, 1]), ..Default::default() };
        let cfg = ScanConfigPatch::resolve(&[&file, &flags]);
        assert_eq!(cfg.theorem, ScanTheorem::Thm1);
        assert_eq!(cfg.n_range, [1, 1]);
        assert!(ScanConfigPatch::from_json(r#"{"bogus":1}"#).is_err());
    }
}
