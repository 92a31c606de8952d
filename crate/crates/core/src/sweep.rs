//! Parameter sweeps: run the check suites over a grid of `(m, p)` and render
//! the results as text, CSV or JSON.
//!
//! Cells run in parallel. Each cell is isolated, so an error or panic in one
//! cell is recorded there and never hides the others. Records always come out
//! in `(m, p)` lexicographic order, and every timing lives in a separate
//! metadata block so that the report bodies are reproducible byte for byte.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io::Write;
use std::ops::RangeInclusive;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::alexander::{delta_lmp, delta_sym_sq, inversion_sign, torres_check, FamilyParams};
use crate::braid::{parse_manifest, twist_candidate, validate_candidate, BraidWord, BUNDLED_MANIFEST};
use crate::error::{Error, Result};
use crate::homology::homology_report;
use crate::swcalc::{
    compare_results, conjugation_symmetry_check, count_formula, disjoint_support_check, sw_closed_form, sw_pipeline,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Sw,
    Alexander,
    Homology,
    Braid,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Sw, Suite::Alexander, Suite::Homology, Suite::Braid];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Sw => "sw",
            Suite::Alexander => "alexander",
            Suite::Homology => "homology",
            Suite::Braid => "braid",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(Error::InvalidConfig(format!("unknown format {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub m_range: RangeInclusive<u32>,
    pub p_range: RangeInclusive<u32>,
    pub suites: BTreeSet<Suite>,
    pub format: Format,
    /// `None` writes to standard output.
    pub out: Option<std::path::PathBuf>,
}

impl SweepConfig {
    pub fn new(
        m_range: RangeInclusive<u32>,
        p_range: RangeInclusive<u32>,
        suites: impl IntoIterator<Item = Suite>,
    ) -> Result<Self> {
        let cfg = SweepConfig {
            m_range,
            p_range,
            suites: suites.into_iter().collect(),
            format: Format::Text,
            out: None,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, r) in [("m", &self.m_range), ("p", &self.p_range)] {
            if r.is_empty() {
                return Err(Error::InvalidConfig(format!(
                    "empty {name} range {}..{}",
                    r.start(),
                    r.end()
                )));
            }
            if *r.start() < 1 {
                return Err(Error::InvalidConfig(format!("{name} range must start at 1 or more")));
            }
        }
        if self.suites.is_empty() {
            return Err(Error::InvalidConfig("no suites selected".into()));
        }
        Ok(())
    }

    fn cells(&self) -> Vec<FamilyParams> {
        self.m_range
            .clone()
            .flat_map(|m| self.p_range.clone().map(move |p| FamilyParams::new(m, p).unwrap()))
            .collect()
    }
}

/// Parses `A..B`, `A..=B` or a single integer `A`.
pub fn parse_range(s: &str) -> Result<RangeInclusive<u32>> {
    let bad = || Error::InvalidConfig(format!("cannot parse range {s:?}"));
    let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
    match s.split_once("..") {
        Some((a, b)) => Ok(num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(s)?;
            Ok(v..=v)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Skipped,
    Error,
}

impl Outcome {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }

    pub fn is_failure(self) -> bool {
        matches!(self, Outcome::Fail | Outcome::Error)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwCell {
    pub outcome: Outcome,
    pub count_enumerated: Option<usize>,
    pub count_formula: Option<i64>,
    pub count_match: Option<bool>,
    pub closed_form: Outcome,
    /// Exponent shift taking the closed form onto the pipeline result.
    pub support_translation: Option<[i64; 2]>,
    pub magnitude_match: Option<bool>,
    pub disjoint_summands: Option<bool>,
    pub conjugation_symmetric: Option<bool>,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlexanderCell {
    pub outcome: Outcome,
    pub terms: Option<usize>,
    pub unit_coefficients: Option<bool>,
    pub inversion_sign: Option<i8>,
    pub torres: Option<bool>,
    pub torres_reoriented: Option<bool>,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyCell {
    pub outcome: Outcome,
    pub tc_equals_mu_b: Option<bool>,
    pub xi_exponents: Option<[i64; 2]>,
    pub framing_det: Option<i64>,
    pub kernel_rank: Option<usize>,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidCell {
    pub outcome: Outcome,
    pub word: Option<String>,
    /// `manifest` or `generated`.
    pub source: Option<String>,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub m: u32,
    pub p: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sw: Option<SwCell>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub alexander: Option<AlexanderCell>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub homology: Option<HomologyCell>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub braid: Option<BraidCell>,
    pub pass: bool,
}

impl Record {
    fn outcomes(&self) -> impl Iterator<Item = Outcome> + '_ {
        [
            self.sw.as_ref().map(|c| c.outcome),
            self.alexander.as_ref().map(|c| c.outcome),
            self.homology.as_ref().map(|c| c.outcome),
            self.braid.as_ref().map(|c| c.outcome),
        ]
        .into_iter()
        .flatten()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistinguishRow {
    pub p: u32,
    /// `(m, count)` for every `m >= 2` of the grid with a count.
    pub counts: Vec<(u32, usize)>,
    pub strictly_increasing: bool,
    pub pairwise_distinct: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub cells: usize,
    pub passed: usize,
    pub failed: usize,
    pub checks_passed: usize,
    pub checks_failed: usize,
    pub checks_skipped: usize,
    pub checks_errored: usize,
    pub distinguishability: Vec<DistinguishRow>,
}

impl Summary {
    fn tally(records: &[Record]) -> Self {
        let mut s = Summary {
            cells: records.len(),
            ..Summary::default()
        };
        for r in records {
            if r.pass {
                s.passed += 1;
            } else {
                s.failed += 1;
            }
            for o in r.outcomes() {
                match o {
                    Outcome::Pass => s.checks_passed += 1,
                    Outcome::Fail => s.checks_failed += 1,
                    Outcome::Skipped => s.checks_skipped += 1,
                    Outcome::Error => s.checks_errored += 1,
                }
            }
        }
        s.distinguishability = distinguish_rows(records);
        s
    }
}

fn distinguish_rows(records: &[Record]) -> Vec<DistinguishRow> {
    let ps: BTreeSet<u32> = records.iter().map(|r| r.p).collect();
    ps.into_iter()
        .filter_map(|p| {
            let counts: Vec<(u32, usize)> = records
                .iter()
                .filter(|r| r.p == p && r.m >= 2)
                .filter_map(|r| Some((r.m, r.sw.as_ref()?.count_enumerated?)))
                .collect();
            if counts.is_empty() {
                return None;
            }
            let strictly_increasing = counts.windows(2).all(|w| w[0].1 < w[1].1);
            let distinct: BTreeSet<usize> = counts.iter().map(|c| c.1).collect();
            Some(DistinguishRow {
                p,
                pairwise_distinct: distinct.len() == counts.len(),
                counts,
                strictly_increasing,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellTiming {
    pub m: u32,
    pub p: u32,
    pub runtime_ms: u64,
}

/// Wall-clock data, kept apart from the deterministic body of the report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    pub threads: usize,
    pub total_ms: u64,
    pub cells: Vec<CellTiming>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub records: Vec<Record>,
    pub summary: Summary,
    pub metadata: Metadata,
}

impl CheckReport {
    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }

    fn runtime_ms(&self, m: u32, p: u32) -> u64 {
        self.metadata
            .cells
            .iter()
            .find(|c| c.m == m && c.p == p)
            .map_or(0, |c| c.runtime_ms)
    }
}

/// Thread cap from `SWLINK_THREADS`, if set to a positive integer.
pub fn thread_cap() -> Option<usize> {
    std::env::var("SWLINK_THREADS")
        .ok()?
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
}

pub fn run_sweep(cfg: &SweepConfig) -> Result<CheckReport> {
    cfg.validate()?;
    let manifest = parse_manifest(BUNDLED_MANIFEST)?;
    let cells = cfg.cells();
    let start = Instant::now();

    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = thread_cap() {
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::InvalidConfig(format!("thread pool: {e}")))?;
    let threads = pool.current_num_threads();

    let mut results: Vec<(Record, u64)> = pool.install(|| {
        cells
            .par_iter()
            .map(|&params| {
                let t = Instant::now();
                let record = run_cell(params, &cfg.suites, &manifest);
                (record, t.elapsed().as_millis() as u64)
            })
            .collect()
    });
    results.sort_by_key(|(r, _)| (r.m, r.p));

    let metadata = Metadata {
        threads,
        total_ms: start.elapsed().as_millis() as u64,
        cells: results
            .iter()
            .map(|(r, ms)| CellTiming {
                m: r.m,
                p: r.p,
                runtime_ms: *ms,
            })
            .collect(),
    };
    let records: Vec<Record> = results.into_iter().map(|(r, _)| r).collect();
    Ok(CheckReport {
        summary: Summary::tally(&records),
        records,
        metadata,
    })
}

fn run_cell(params: FamilyParams, suites: &BTreeSet<Suite>, manifest: &[crate::braid::ManifestEntry]) -> Record {
    let mut record = Record {
        m: params.m() as u32,
        p: params.p() as u32,
        sw: None,
        alexander: None,
        homology: None,
        braid: None,
        pass: false,
    };
    for suite in suites {
        match suite {
            Suite::Sw => record.sw = Some(isolate(|| sw_cell(params), sw_error)),
            Suite::Alexander => record.alexander = Some(isolate(|| alexander_cell(params), alexander_error)),
            Suite::Homology => record.homology = Some(isolate(|| homology_cell(params), homology_error)),
            Suite::Braid => record.braid = Some(isolate(|| braid_cell(params, manifest), braid_error)),
        }
    }
    let failed = record.outcomes().any(Outcome::is_failure);
    record.pass = !failed;
    record
}

fn isolate<T>(f: impl FnOnce() -> Result<T>, on_error: impl FnOnce(String) -> T) -> T {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(v)) => v,
        Ok(Err(e)) => on_error(e.to_string()),
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            on_error(format!("panic: {msg}"))
        }
    }
}

fn sw_error(detail: String) -> SwCell {
    SwCell {
        outcome: Outcome::Error,
        count_enumerated: None,
        count_formula: None,
        count_match: None,
        closed_form: Outcome::Skipped,
        support_translation: None,
        magnitude_match: None,
        disjoint_summands: None,
        conjugation_symmetric: None,
        detail: Some(detail),
    }
}

fn alexander_error(detail: String) -> AlexanderCell {
    AlexanderCell {
        outcome: Outcome::Error,
        terms: None,
        unit_coefficients: None,
        inversion_sign: None,
        torres: None,
        torres_reoriented: None,
        detail: Some(detail),
    }
}

fn homology_error(detail: String) -> HomologyCell {
    HomologyCell {
        outcome: Outcome::Error,
        tc_equals_mu_b: None,
        xi_exponents: None,
        framing_det: None,
        kernel_rank: None,
        detail: Some(detail),
    }
}

fn braid_error(detail: String) -> BraidCell {
    BraidCell {
        outcome: Outcome::Error,
        word: None,
        source: None,
        detail: Some(detail),
    }
}

fn sw_cell(params: FamilyParams) -> Result<SwCell> {
    let mut cell = sw_error(String::new());
    cell.detail = None;
    if params.p() < 2 {
        cell.outcome = Outcome::Skipped;
        cell.detail = Some("the invariant needs p >= 2".into());
        return Ok(cell);
    }
    let pipe = sw_pipeline(params)?;
    let count = pipe.count();
    cell.count_enumerated = Some(count);
    let symmetric = conjugation_symmetry_check(&pipe).pass;
    cell.conjugation_symmetric = Some(symmetric);

    if params.m() < 2 {
        // single zero class
        cell.closed_form = Outcome::Skipped;
        let ok = count == 1 && symmetric;
        cell.outcome = Outcome::from_bool(ok);
        cell.detail = Some("closed form skipped for m < 2".into());
        return Ok(cell);
    }

    let formula = count_formula(params);
    cell.count_formula = Some(formula);
    cell.count_match = Some(count as i64 == formula);
    let closed = sw_closed_form(params)?;
    let cmp = compare_results(&pipe, &closed);
    cell.closed_form = Outcome::from_bool(cmp.pass());
    cell.support_translation = cmp.translation;
    cell.magnitude_match = Some(cmp.magnitude_match);
    let disjoint = disjoint_support_check(params)?.pass;
    cell.disjoint_summands = Some(disjoint);
    cell.outcome = Outcome::from_bool(cmp.pass() && count as i64 == formula && disjoint && symmetric);
    Ok(cell)
}

fn alexander_cell(params: FamilyParams) -> Result<AlexanderCell> {
    let delta = delta_lmp(params)?;
    let unit_coefficients = delta.terms().all(|(_, c)| c.magnitude() == &1u32.into());
    let sign = inversion_sign(&delta_sym_sq(params)?);
    let torres = torres_check(params)?;
    let ok = unit_coefficients && sign.is_some() && torres.pass;
    Ok(AlexanderCell {
        outcome: Outcome::from_bool(ok),
        terms: Some(delta.len()),
        unit_coefficients: Some(unit_coefficients),
        inversion_sign: sign,
        torres: Some(torres.pass),
        torres_reoriented: Some(torres.reoriented_pass),
        detail: None,
    })
}

fn homology_cell(params: FamilyParams) -> Result<HomologyCell> {
    let r = homology_report(params)?;
    Ok(HomologyCell {
        outcome: Outcome::from_bool(r.pass()),
        tc_equals_mu_b: Some(r.tc_class.equals_mu_b),
        xi_exponents: Some([r.xi_exponents.0, r.xi_exponents.1]),
        framing_det: Some(r.framing_det),
        kernel_rank: r.kernel_rank.as_ref().map(|k| k.kernel_rank),
        detail: None,
    })
}

fn braid_cell(params: FamilyParams, manifest: &[crate::braid::ManifestEntry]) -> Result<BraidCell> {
    let entry = manifest
        .iter()
        .find(|e| e.verified && i64::from(e.m) == params.m() && i64::from(e.p) == params.p());
    let (word, source): (BraidWord, &str) = match entry {
        Some(e) => (e.braid()?, "manifest"),
        None => (twist_candidate(params), "generated"),
    };
    let report = validate_candidate(&word, params)?;
    let failed = [
        &report.stages.strand_count,
        &report.stages.cycle_type,
        &report.stages.linking,
        &report.stages.alexander,
    ]
    .into_iter()
    .find(|s| s.status != crate::braid::StageStatus::Pass);
    Ok(BraidCell {
        outcome: Outcome::from_bool(report.verified()),
        word: Some(report.word.clone()),
        source: Some(source.into()),
        detail: failed.map(|s| s.detail.clone()),
    })
}

pub const CSV_HEADER: &str = "m,p,count_enumerated,count_formula,match,support_translation,runtime_ms";

/// Renders the report. CSV carries the per-cell runtime column; JSON keeps
/// timings in the `metadata` object.
pub fn render(report: &CheckReport, format: Format) -> Result<String> {
    match format {
        Format::Csv => Ok(render_csv(report)),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).map_err(|e| Error::Io(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        Format::Text => Ok(render_text(report)),
    }
}

pub fn emit(report: &CheckReport, format: Format, out: &mut impl Write) -> Result<()> {
    out.write_all(render(report, format)?.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

fn render_csv(report: &CheckReport) -> String {
    let mut s = String::from(CSV_HEADER);
    s.push('\n');
    for r in &report.records {
        let sw = r.sw.as_ref();
        let shift = sw.and_then(|c| c.support_translation).map(|[a, b]| format!("{a};{b}"));
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{}",
            r.m,
            r.p,
            opt(sw.and_then(|c| c.count_enumerated)),
            opt(sw.and_then(|c| c.count_formula)),
            opt(sw.and_then(|c| c.count_match)),
            opt(shift),
            report.runtime_ms(r.m, r.p),
        );
    }
    s
}

fn outcome_word(o: Option<Outcome>) -> &'static str {
    match o {
        None => "-",
        Some(Outcome::Pass) => "pass",
        Some(Outcome::Fail) => "FAIL",
        Some(Outcome::Skipped) => "skip",
        Some(Outcome::Error) => "ERROR",
    }
}

fn render_text(report: &CheckReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:>3} {:>3}  {:>6} {:>6}  {:<5} {:<9} {:<8} {:<5}",
        "m", "p", "count", "formula", "sw", "alexander", "homology", "braid"
    );
    for r in &report.records {
        let sw = r.sw.as_ref();
        let _ = writeln!(
            s,
            "{:>3} {:>3}  {:>6} {:>7}  {:<5} {:<9} {:<8} {:<5}",
            r.m,
            r.p,
            opt(sw.and_then(|c| c.count_enumerated)),
            opt(sw.and_then(|c| c.count_formula)),
            outcome_word(sw.map(|c| c.outcome)),
            outcome_word(r.alexander.as_ref().map(|c| c.outcome)),
            outcome_word(r.homology.as_ref().map(|c| c.outcome)),
            outcome_word(r.braid.as_ref().map(|c| c.outcome)),
        );
        let details = [
            sw.and_then(|c| c.detail.as_deref())
                .filter(|_| sw.is_some_and(|c| c.outcome.is_failure())),
            r.alexander.as_ref().and_then(|c| c.detail.as_deref()),
            r.homology.as_ref().and_then(|c| c.detail.as_deref()),
            r.braid
                .as_ref()
                .filter(|c| c.outcome.is_failure())
                .and_then(|c| c.detail.as_deref()),
        ];
        for d in details.into_iter().flatten() {
            let _ = writeln!(s, "          {d}");
        }
    }
    let sm = &report.summary;
    let _ = writeln!(s);
    let _ = writeln!(s, "cells: {} passed, {} failed of {}", sm.passed, sm.failed, sm.cells);
    let _ = writeln!(
        s,
        "checks: {} passed, {} failed, {} errors, {} skipped",
        sm.checks_passed, sm.checks_failed, sm.checks_errored, sm.checks_skipped
    );
    for row in &sm.distinguishability {
        let counts: Vec<String> = row.counts.iter().map(|(m, c)| format!("m={m}:{c}")).collect();
        let _ = writeln!(
            s,
            "p={}: {}  increasing={} distinct={}",
            row.p,
            counts.join(" "),
            row.strictly_increasing,
            row.pairwise_distinct
        );
    }
    s
}
