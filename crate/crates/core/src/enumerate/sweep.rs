use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::free_trees::{enumerate_free_trees, EnumerateError, MAX_ENUM_ORDER};
use crate::families::{
    apply_step, lemma3_check, recognize_arith, recognize_structural, verify_trace, Family,
    FamilyError, OpKind, OperationStep,
};
use crate::graph::{classify, edgelist, graph6, is_isomorphic, subdivide, Tree};
use crate::solver::{
    bounds, gamma_brute, gamma_subdivision, gamma_tree_dp, gamma_tree_dp_forced, is_toids,
    SolveError,
};

pub const SCHEMA_VERSION: u32 = 1;

/// Largest subdivision the brute-force oracle is run on.
pub const ORACLE_SUBDIVISION_CAP: usize = 19;

/// Random sites tried per operation per tree.
const LEMMA2_SITES: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Bounds,
    CharLower,
    CharUpper,
    Lemma1,
    Lemma2,
    Lemma3,
    OracleVsDp,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Bounds,
        Check::CharLower,
        Check::CharUpper,
        Check::Lemma1,
        Check::Lemma2,
        Check::Lemma3,
        Check::OracleVsDp,
    ];
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_n: usize,
    pub checks: BTreeSet<Check>,
    pub workers: usize,
    pub seed: u64,
    /// JSON report destination.
    pub report_path: Option<PathBuf>,
    /// Optional CSV summary (n, count, #lower, #upper, #both).
    pub csv_path: Option<PathBuf>,
    /// Where counterexample edge lists go; defaults to the report's directory.
    pub counterexample_dir: Option<PathBuf>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_n: 12,
            checks: Check::ALL.into_iter().collect(),
            workers: 1,
            seed: 0,
            report_path: None,
            csv_path: None,
            counterexample_dir: None,
        }
    }
}

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("max_n must be in 2..={MAX_ENUM_ORDER}, got {0}")]
    MaxN(usize),
    #[error("workers must be at least 1")]
    Workers,
    #[error("thread pool: {0}")]
    Pool(String),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error("writing {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
    /// Trees where the check did not apply (e.g. Lemma 3 preconditions).
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderSummary {
    pub n: usize,
    pub count: usize,
    pub lower: usize,
    pub upper: usize,
    pub both: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub n: usize,
    pub check: Check,
    pub detail: String,
    pub edges: Vec<(usize, usize)>,
    pub graph6: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub schema_version: u32,
    pub max_n: usize,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub per_n: Vec<OrderSummary>,
    pub tallies: BTreeMap<Check, Tally>,
    pub counterexamples: Vec<Counterexample>,
    /// Milliseconds per phase. The only nondeterministic field.
    pub timings_ms: BTreeMap<String, u128>,
}

impl SweepReport {
    pub fn total_trees(&self) -> usize {
        self.per_n.iter().map(|s| s.count).sum()
    }

    pub fn failures(&self) -> usize {
        self.tallies.values().map(|t| t.failed).sum()
    }

    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty() && self.failures() == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The report with timing fields cleared, for run-to-run comparison.
    pub fn without_timings(&self) -> SweepReport {
        SweepReport { timings_ms: BTreeMap::new(), ..self.clone() }
    }
}

#[derive(Default)]
struct TreeOutcome {
    lower: bool,
    upper: bool,
    tallies: BTreeMap<Check, Tally>,
    failures: Vec<(Check, String)>,
}

impl TreeOutcome {
    fn pass(&mut self, check: Check) {
        self.tallies.entry(check).or_default().passed += 1;
    }

    fn skip(&mut self, check: Check) {
        self.tallies.entry(check).or_default().skipped += 1;
    }

    fn fail(&mut self, check: Check, detail: String) {
        self.tallies.entry(check).or_default().failed += 1;
        self.failures.push((check, detail));
    }

    fn record(&mut self, check: Check, result: Result<Option<String>, String>) {
        match result {
            Ok(None) => self.pass(check),
            Ok(Some(detail)) | Err(detail) => self.fail(check, detail),
        }
    }
}

/// Enumerates every free tree with `2 <= n <= max_n` and runs the selected
/// checks on each. Failures are recorded in the report, never raised.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepReport, SweepError> {
    if !(2..=MAX_ENUM_ORDER).contains(&cfg.max_n) {
        return Err(SweepError::MaxN(cfg.max_n));
    }
    if cfg.workers == 0 {
        return Err(SweepError::Workers);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| SweepError::Pool(e.to_string()))?;

    let mut report = SweepReport {
        schema_version: SCHEMA_VERSION,
        max_n: cfg.max_n,
        seed: cfg.seed,
        checks: cfg.checks.iter().copied().collect(),
        per_n: Vec::new(),
        tallies: cfg.checks.iter().map(|&c| (c, Tally::default())).collect(),
        counterexamples: Vec::new(),
        timings_ms: BTreeMap::new(),
    };

    let start = Instant::now();
    for n in 2..=cfg.max_n {
        let phase = Instant::now();
        let trees: Vec<Tree> = enumerate_free_trees(n)?.collect();
        let outcomes: Vec<TreeOutcome> = pool.install(|| {
            trees
                .par_iter()
                .enumerate()
                .map(|(i, t)| check_tree(t, tree_seed(cfg.seed, n, i), &cfg.checks))
                .collect()
        });

        let mut summary = OrderSummary { n, count: trees.len(), lower: 0, upper: 0, both: 0 };
        for (t, out) in trees.iter().zip(outcomes) {
            summary.lower += out.lower as usize;
            summary.upper += out.upper as usize;
            summary.both += (out.lower && out.upper) as usize;
            for (check, tally) in out.tallies {
                let total = report.tallies.entry(check).or_default();
                total.passed += tally.passed;
                total.failed += tally.failed;
                total.skipped += tally.skipped;
            }
            for (check, detail) in out.failures {
                report.counterexamples.push(Counterexample {
                    n,
                    check,
                    detail,
                    edges: t.edges(),
                    graph6: graph6::encode(t),
                });
            }
        }
        report.per_n.push(summary);
        report.timings_ms.insert(format!("n={n:02}"), phase.elapsed().as_millis());
    }
    report.timings_ms.insert("total".into(), start.elapsed().as_millis());

    persist(cfg, &report)?;
    Ok(report)
}

fn tree_seed(seed: u64, n: usize, index: usize) -> u64 {
    seed ^ ((n as u64) << 48) ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

fn check_tree(t: &Tree, seed: u64, checks: &BTreeSet<Check>) -> TreeOutcome {
    let mut out = TreeOutcome::default();
    let b = match bounds(t) {
        Ok(b) => b,
        Err(e) => {
            out.fail(Check::Bounds, format!("bounds failed: {e}"));
            return out;
        }
    };
    out.lower = b.attains_lower;
    out.upper = b.attains_upper;

    if checks.contains(&Check::Bounds) {
        out.record(
            Check::Bounds,
            Ok((!b.sandwich_holds()).then(|| {
                format!("{} <= 3*{} <= {} violated", b.lower_num, b.gamma, b.upper_num)
            })),
        );
    }
    for (check, family, arith) in [
        (Check::CharLower, Family::Lower, b.attains_lower),
        (Check::CharUpper, Family::Upper, b.attains_upper),
    ] {
        if checks.contains(&check) {
            out.record(check, characterization(t, family, arith).map_err(|e| e.to_string()));
        }
    }
    if checks.contains(&Check::OracleVsDp) {
        out.record(Check::OracleVsDp, oracle_vs_dp(t).map_err(|e| e.to_string()));
    }
    if checks.contains(&Check::Lemma1) {
        if t.order() < 3 {
            out.skip(Check::Lemma1);
        } else {
            out.record(Check::Lemma1, lemma1(t).map_err(|e| e.to_string()));
        }
    }
    if checks.contains(&Check::Lemma2) {
        out.record(Check::Lemma2, lemma2(t, b.gamma, seed).map_err(|e| e.to_string()));
    }
    if checks.contains(&Check::Lemma3) {
        match lemma3_check(t) {
            Ok(true) => out.pass(Check::Lemma3),
            Ok(false) => out.fail(
                Check::Lemma3,
                "a semi-support has more than one support neighbor".into(),
            ),
            Err(FamilyError::ExcludedP5 | FamilyError::StrongLeaves | FamilyError::NotUpperExtremal) => {
                out.skip(Check::Lemma3)
            }
            Err(e) => out.fail(Check::Lemma3, e.to_string()),
        }
    }
    out
}

fn characterization(t: &Tree, family: Family, arith: bool) -> Result<Option<String>, FamilyError> {
    debug_assert_eq!(arith, recognize_arith(t, family)?);
    let trace = recognize_structural(t, family)?;
    if trace.accepted != arith {
        return Ok(Some(format!(
            "{family:?}: arithmetic says {arith}, reducer says {} ({})",
            trace.accepted,
            trace.rejection.as_deref().unwrap_or("accepted")
        )));
    }
    if trace.accepted {
        if !verify_trace(t, &trace)? || !is_isomorphic(&trace.script.replay()?, t) {
            return Ok(Some(format!("{family:?}: trace {} does not replay", trace.script.to_json())));
        }
    }
    Ok(None)
}

fn oracle_vs_dp(t: &Tree) -> Result<Option<String>, SolveError> {
    let s = subdivide(t)?;
    let mut graphs = vec![("T", t)];
    if s.graph.order() <= ORACLE_SUBDIVISION_CAP {
        graphs.push(("S(T)", &s.graph));
    }
    for (name, g) in graphs {
        let dp = gamma_tree_dp(g)?;
        let brute = gamma_brute(g, &[])?;
        if dp.value != brute.value || !is_toids(g, &dp.witness)? {
            return Ok(Some(format!("{name}: dp {} vs brute {}", dp.value, brute.value)));
        }
    }
    Ok(None)
}

/// Forcing the supports and semi-supports of `T` into the TOIDS of `S(T)`
/// leaves the optimum unchanged.
fn lemma1(t: &Tree) -> Result<Option<String>, SolveError> {
    let c = classify(t)?;
    let mut forced = [c.supports.as_slice(), c.semi_supports.as_slice()].concat();
    forced.sort_unstable();
    let s = subdivide(t)?.graph;
    let (free, pinned) = if s.order() <= ORACLE_SUBDIVISION_CAP {
        (gamma_brute(&s, &[])?.value, gamma_brute(&s, &forced)?.value)
    } else {
        (gamma_tree_dp(&s)?.value, gamma_tree_dp_forced(&s, &forced)?.value)
    };
    Ok((free != pinned).then(|| format!("unforced {free}, forced {pinned}")))
}

/// Lemma 2 deltas on up to three random legal sites per operation.
fn lemma2(t: &Tree, gamma: usize, seed: u64) -> Result<Option<String>, FamilyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let c = classify(t)?;
    for kind in [OpKind::F1, OpKind::F2, OpKind::F3, OpKind::O1, OpKind::O2, OpKind::O3] {
        if kind == OpKind::F3 && t.order() == 2 {
            continue;
        }
        let mut sites = kind.site_class().members(&c);
        for _ in 0..LEMMA2_SITES.min(sites.len()) {
            let site = sites.swap_remove(rng.gen_range(0..sites.len()));
            let r = (kind == OpKind::O3).then(|| rng.gen_range(2..=4));
            let step = OperationStep { kind, site, r };
            let grown = apply_step(t, &step)?;
            let delta = gamma_subdivision(&grown)? as isize - gamma as isize;
            let expected = expected_delta(kind, r.unwrap_or(1)) as isize;
            if delta != expected {
                return Ok(Some(format!("{kind:?} at {site} (r={r:?}): delta {delta}, expected {expected}")));
            }
        }
    }
    Ok(None)
}

pub fn expected_delta(kind: OpKind, r: usize) -> usize {
    match kind {
        OpKind::F1 | OpKind::O1 => 1,
        OpKind::F2 => 2,
        OpKind::F3 | OpKind::O2 => 4,
        OpKind::O3 => 4 * r,
    }
}

fn persist(cfg: &SweepConfig, report: &SweepReport) -> Result<(), SweepError> {
    let io = |path: &Path| {
        let path = path.to_path_buf();
        move |source| SweepError::Io { path, source }
    };
    if let Some(path) = &cfg.report_path {
        fs::write(path, report.to_json()).map_err(io(path))?;
    }
    if let Some(path) = &cfg.csv_path {
        let mut w = csv::Writer::from_path(path)?;
        for row in &report.per_n {
            w.serialize(row)?;
        }
        w.flush().map_err(io(path))?;
    }
    if report.counterexamples.is_empty() {
        return Ok(());
    }
    let dir = cfg.counterexample_dir.clone().or_else(|| {
        cfg.report_path.as_ref().map(|p| p.with_extension("counterexamples"))
    });
    if let Some(dir) = dir {
        fs::create_dir_all(&dir).map_err(io(&dir))?;
        for (i, cx) in report.counterexamples.iter().enumerate() {
            let path = dir.join(format!("{i:04}-n{}-{:?}.edges", cx.n, cx.check));
            let t = Tree::from_edges(cx.n, cx.edges.iter().copied()).expect("stored edges form a tree");
            let text = format!("# {}\n# graph6 {}\n{}", cx.detail, cx.graph6, edgelist::write(&t));
            fs::write(&path, text).map_err(io(&path))?;
        }
    }
    Ok(())
}
