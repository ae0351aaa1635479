mod common;

use std::collections::BTreeMap;
use std::io::Write;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{center_key, naive_gamma, prufer_classes, subdivision_edges};
use toid::enumerate::{enumerate_free_trees, expected_delta, run_sweep, Check, SweepConfig};
use toid::families::{apply_step, lemma3_check, random_member, recognize_structural, FamilyError};
use toid::graph::{classify, subdivide};
use toid::solver::{bounds, gamma_brute, gamma_subdivision, gamma_tree_dp};
use toid::{Family, OpKind, OperationStep, Tree};

type Outcome = Result<String, String>;

struct Verdict {
    outcome: Outcome,
    elapsed: Duration,
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Verdict {
    let start = Instant::now();
    let outcome = f();
    let elapsed = start.elapsed();
    let outcome = match outcome {
        Ok(_) if elapsed > limit => Err(format!("took {elapsed:?}, limit {limit:?}")),
        other => other,
    };
    Verdict { outcome, elapsed }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_trees(lo: usize, hi: usize) -> Vec<Tree> {
    (lo..=hi).flat_map(|n| enumerate_free_trees(n).unwrap()).collect()
}

// vertex i of the fixture is v{i+1}
const FIGURE_ONE: [(usize, usize); 6] = [(1, 0), (1, 2), (1, 3), (3, 4), (4, 5), (4, 6)];

/// Class table straight from the definitions, by degree counting.
fn class_table(n: usize, edges: &[(usize, usize)]) -> BTreeMap<&'static str, Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let leaf = |v: usize| adj[v].len() == 1;
    let leaf_count = |v: usize| adj[v].iter().filter(|&&w| leaf(w)).count();
    let support = |v: usize| leaf_count(v) > 0;
    let semi = |v: usize| !leaf(v) && !support(v) && adj[v].iter().any(|&w| support(w));
    let pick = |p: &dyn Fn(usize) -> bool| (0..n).filter(|&v| p(v)).collect::<Vec<_>>();
    let mut t = BTreeMap::new();
    t.insert("S", pick(&support));
    t.insert("S_s", pick(&|v| leaf_count(v) >= 2));
    t.insert("L_s", pick(&|v| leaf(v) && leaf_count(adj[v][0]) >= 2));
    t.insert("L_w", pick(&|v| leaf(v) && leaf_count(adj[v][0]) == 1));
    t.insert("SS", pick(&semi));
    t.insert("NSS", pick(&|v| !support(v) && !semi(v) && adj[v].iter().any(|&w| semi(w))));
    t
}

fn c1() -> Outcome {
    let t = Tree::from_edges(7, FIGURE_ONE).unwrap();
    let g = gamma_tree_dp(&t).map_err(|e| e.to_string())?.value;
    let b = bounds(&t).map_err(|e| e.to_string())?;
    ensure(g == 3 && naive_gamma(7, &FIGURE_ONE, &[]) == 3, || format!("gamma(T) = {g}"))?;
    let s = naive_gamma(13, &subdivision_edges(7, &FIGURE_ONE), &[]);
    ensure(b.gamma == 8 && s == 8, || format!("gamma(S(T)) = {} / oracle {s}", b.gamma))?;
    ensure(b.attains_upper && b.upper_num == 24, || "upper bound not attained".into())?;
    ensure(b.lower_num % 3 != 0, || format!("lower numerator {} is divisible by 3", b.lower_num))?;
    let c = classify(&t).unwrap();
    let want = class_table(7, &FIGURE_ONE);
    let got: BTreeMap<_, _> = [
        ("S", c.supports),
        ("S_s", c.strong_supports),
        ("L_s", c.strong_leaves),
        ("L_w", c.weak_leaves),
        ("SS", c.semi_supports),
        ("NSS", c.nss),
    ]
    .into_iter()
    .collect();
    ensure(got == want, || format!("classes {got:?} vs {want:?}"))?;
    ensure(want["S"] == [1, 4] && want["SS"] == [3] && want["L_s"] == [0, 2, 5, 6], || "hand table".into())?;
    ensure((c.l_count, c.s_count) == (4, 2), || "l, s".into())?;
    Ok("gamma 3 / 8, upper 24/3 attained, lower 22/3".into())
}

fn c2() -> Outcome {
    let trees = all_trees(2, 9);
    for t in &trees {
        let s = subdivide(t).unwrap().graph;
        for g in [t, &s] {
            let dp = gamma_tree_dp(g).unwrap().value;
            let brute = gamma_brute(g, &[]).unwrap().value;
            ensure(dp == brute, || format!("{:?}: dp {dp} brute {brute}", g.edges()))?;
        }
    }
    Ok(format!("{} trees and their subdivisions", trees.len()))
}

fn sweep(checks: &[Check]) -> Result<toid::enumerate::SweepReport, String> {
    let cfg = SweepConfig {
        max_n: 12,
        checks: checks.iter().copied().collect(),
        workers: 4,
        seed: 7,
        ..SweepConfig::default()
    };
    run_sweep(&cfg).map_err(|e| e.to_string())
}

fn c3() -> Outcome {
    let r = sweep(&[Check::Bounds])?;
    let t = r.tallies[&Check::Bounds];
    ensure(t.failed == 0 && t.passed == r.total_trees(), || format!("{t:?}"))?;
    ensure(r.total_trees() == 986, || format!("{} trees", r.total_trees()))?;
    Ok(format!("{} trees, 0 violations", r.total_trees()))
}

fn c4() -> Outcome {
    let r = sweep(&[Check::CharLower, Check::CharUpper])?;
    for c in [Check::CharLower, Check::CharUpper] {
        let t = r.tallies[&c];
        ensure(t.failed == 0 && t.passed == r.total_trees(), || format!("{c:?}: {t:?}"))?;
    }
    let lower: usize = r.per_n.iter().map(|s| s.lower).sum();
    let upper: usize = r.per_n.iter().map(|s| s.upper).sum();
    Ok(format!("{} trees, {lower} lower and {upper} upper traces replayed", r.total_trees()))
}

fn c5() -> Outcome {
    const HOSTS: usize = 200;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let cases = [
        (OpKind::F1, None),
        (OpKind::F2, None),
        (OpKind::F3, None),
        (OpKind::O1, None),
        (OpKind::O2, None),
        (OpKind::O3, Some(2)),
        (OpKind::O3, Some(3)),
        (OpKind::O3, Some(4)),
    ];
    for (kind, r) in cases {
        let mut done = 0;
        while done < HOSTS {
            let host = Tree::random(rng.gen_range(5..=40), &mut rng);
            let sites = kind.site_class().members(&classify(&host).unwrap());
            if sites.is_empty() {
                continue;
            }
            let site = sites[rng.gen_range(0..sites.len())];
            let grown = apply_step(&host, &OperationStep { kind, site, r }).map_err(|e| e.to_string())?;
            let before = gamma_subdivision(&host).unwrap();
            let after = gamma_subdivision(&grown).unwrap();
            let want = expected_delta(kind, r.unwrap_or(1));
            ensure(after == before + want, || {
                format!("{kind:?} r={r:?} at {site} on {:?}: {before} -> {after}", host.edges())
            })?;
            done += 1;
        }
    }
    Ok(format!("{HOSTS} hosts for each of F1 F2 F3 O1 O2 and O3 with r = 2, 3, 4"))
}

fn c6() -> Outcome {
    let trees = all_trees(3, 9);
    for t in &trees {
        let c = classify(t).unwrap();
        let forced = [c.supports.as_slice(), c.semi_supports.as_slice()].concat();
        let s = subdivide(t).unwrap().graph;
        let free = gamma_brute(&s, &[]).unwrap().value;
        let pinned = gamma_brute(&s, &forced).unwrap().value;
        ensure(free == pinned, || format!("{:?}: {free} vs forced {pinned}", t.edges()))?;
    }
    Ok(format!("{} trees, forced = unforced", trees.len()))
}

fn c7() -> Outcome {
    let mut qualifying = 0;
    let mut bad = Vec::new();
    for t in all_trees(2, 12) {
        match lemma3_check(&t) {
            Ok(true) => qualifying += 1,
            Ok(false) => {
                qualifying += 1;
                bad.push(t.edges());
            }
            Err(FamilyError::ExcludedP5 | FamilyError::StrongLeaves | FamilyError::NotUpperExtremal) => {}
            Err(e) => return Err(e.to_string()),
        }
    }
    ensure(bad.is_empty(), || {
        format!("{} of {qualifying} qualifying trees violate it; first {:?}", bad.len(), bad[0])
    })?;
    Ok(format!("{qualifying} qualifying trees"))
}

fn c8() -> Outcome {
    for (n, want) in [(4, 2), (7, 11), (10, 106)] {
        let got = enumerate_free_trees(n).unwrap().count();
        ensure(got == want, || format!("n = {n}: {got}"))?;
    }
    for n in 1..=9 {
        let ours: Vec<String> = enumerate_free_trees(n).unwrap().map(|t| center_key(n, &t.edges())).collect();
        let oracle = prufer_classes(n);
        let distinct: std::collections::HashSet<_> = ours.iter().cloned().collect();
        ensure(distinct.len() == ours.len(), || format!("n = {n}: duplicate trees"))?;
        ensure(distinct == oracle, || format!("n = {n}: {} vs Prüfer {}", ours.len(), oracle.len()))?;
    }
    Ok("2, 11, 106; Prüfer classes agree for n <= 9".into())
}

fn c9() -> Outcome {
    let big = Tree::random(100_000, &mut ChaCha8Rng::seed_from_u64(9));
    let start = Instant::now();
    let g = gamma_tree_dp(&big).map_err(|e| e.to_string())?.value;
    let dp = start.elapsed();
    ensure(dp < Duration::from_secs(1), || format!("dp took {dp:?}"))?;

    let (member, _) = random_member(Family::Upper, 10_000, 9).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let trace = recognize_structural(&member, Family::Upper).map_err(|e| e.to_string())?;
    let rec = start.elapsed();
    ensure(trace.accepted, || "member rejected".into())?;
    ensure(rec < Duration::from_secs(5), || format!("recognition took {rec:?}"))?;
    Ok(format!("dp on 100000 vertices (gamma {g}) in {dp:?}; recognizer on {} vertices in {rec:?}", member.order()))
}

const CRITERIA: [(&str, fn() -> Outcome, u64); 9] = [
    ("1 figure one fixture", c1, 1),
    ("2 dp equals brute force, n <= 9", c2, 120),
    ("3 bounds sweep, n <= 12", c3, 300),
    ("4 characterization sweep, n <= 12", c4, 600),
    ("5 attachment deltas", c5, 300),
    ("6 forced supports and semi-supports", c6, 120),
    ("7 semi-supports see one support", c7, 600),
    ("8 enumeration counts", c8, 600),
    ("9 performance", c9, 600),
];

fn verdict(i: usize) -> &'static Verdict {
    static CACHE: [OnceLock<Verdict>; 9] = [const { OnceLock::new() }; 9];
    let (_, f, secs) = CRITERIA[i];
    CACHE[i].get_or_init(|| timed(Duration::from_secs(secs), f))
}

fn assert_criterion(i: usize) {
    if let Err(e) = &verdict(i).outcome {
        panic!("criterion {}: {e}", CRITERIA[i].0);
    }
}

#[test]
fn criterion_1_figure_one() {
    assert_criterion(0);
}

#[test]
fn criterion_2_oracle_agreement() {
    assert_criterion(1);
}

#[test]
fn criterion_3_bounds() {
    assert_criterion(2);
}

#[test]
fn criterion_4_characterizations() {
    assert_criterion(3);
}

#[test]
fn criterion_5_deltas() {
    assert_criterion(4);
}

#[test]
fn criterion_6_forced_inclusion() {
    assert_criterion(5);
}

#[test]
#[ignore = "false at n = 8 and n = 11; see README"]
fn criterion_7_semi_support_neighbors() {
    assert_criterion(6);
}

#[test]
fn criterion_8_counts() {
    assert_criterion(7);
}

#[test]
fn criterion_9_performance() {
    assert_criterion(8);
}

/// One line per criterion. Criterion 7 is reported but not asserted.
///
/// Writes to stdout directly so the lines survive output capture.
#[test]
fn summary() {
    let mut out = std::io::stdout().lock();
    let mut failed = Vec::new();
    for (i, (name, _, _)) in CRITERIA.iter().enumerate() {
        let v = verdict(i);
        match &v.outcome {
            Ok(detail) => writeln!(out, "\nPASS criterion {name} [{:.2?}]: {detail}", v.elapsed).unwrap(),
            Err(e) => {
                writeln!(out, "\nFAIL criterion {name} [{:.2?}]: {e}", v.elapsed).unwrap();
                if i != 6 {
                    failed.push(*name);
                }
            }
        }
    }
    assert!(failed.is_empty(), "failed: {failed:?}");
}
