//! Exhaustive claim checks over isomorph-free catalogs.
//!
//! Each engine streams the relevant universe (connected graphs, all graphs
//! or trees of one order) through [`par_fold_graphs`] and returns a
//! [`VerificationResult`]. Two kinds of failure are distinguished:
//!
//! * a proven inequality that fails is reported as
//!   [`VerifyError::TheoremViolation`], since it can only mean a bug;
//! * a conjecture or hypothesis that fails yields `holds == false` together
//!   with the offending graphs in `witnesses`.
//!
//! Floating-point comparisons use [`COMPARE_EPS`]: a claim fails only when
//! violated by more than the epsilon, and a minimizer or maximizer is called
//! unique only when the runner-up trails it by more than the epsilon.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::canon::canonical_form;
use crate::entropy::{
    density_test, k2n2_closed, renyi_graph_entropy, shannon_entropy_compensated, star_entropy_closed,
    star_test, tr2, von_neumann_entropy, EntropyError, ProbabilityDistribution, Rational, COMPARE_EPS,
};
use crate::enumerate::{enumerate_trees, par_fold_graphs, EnumerateError};
use crate::graph::{complete_bipartite, path, star, Graph};
use crate::graph6::write_graph6;
use crate::spectral::{density_spectrum, Spectrum, DEFAULT_TOL};

/// Default bound on stored witnesses; totals are always exact.
pub const DEFAULT_WITNESS_CAP: usize = 1000;
/// Tolerance at which coentropy groups are re-confirmed.
pub const COENTROPY_CONFIRM_TOL: f64 = 1e-12;
/// Entrywise tolerance below which two spectra count as equal.
pub const SPECTRUM_TOL: f64 = 1e-7;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("{claim}: proven bound violated by {graph6}: {detail}")]
    TheoremViolation { claim: String, graph6: String, detail: String },
    #[error("invalid input: {0}")]
    BadInput(String),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error(transparent)]
    Entropy(#[from] EntropyError),
}

fn violation(claim: &str, g: &Graph, detail: String) -> VerifyError {
    VerifyError::TheoremViolation { claim: claim.to_string(), graph6: write_graph6(g), detail }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub threads: usize,
    pub witness_cap: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { threads: 1, witness_cap: DEFAULT_WITNESS_CAP }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Universe {
    Connected,
    Trees,
    All,
}

/// Rounds to 12 significant digits so serialized output is reproducible.
pub fn round_sig12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

#[derive(Debug, Clone, PartialEq)]
pub enum Stat {
    Int(u64),
    Real(f64),
    Bool(bool),
    Text(String),
}

impl Serialize for Stat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Stat::Int(v) => s.serialize_u64(*v),
            Stat::Real(v) if v.is_finite() => s.serialize_f64(round_sig12(*v)),
            Stat::Real(_) => s.serialize_none(),
            Stat::Bool(v) => s.serialize_bool(*v),
            Stat::Text(v) => s.serialize_str(v),
        }
    }
}

impl From<u64> for Stat {
    fn from(v: u64) -> Self {
        Stat::Int(v)
    }
}
impl From<usize> for Stat {
    fn from(v: usize) -> Self {
        Stat::Int(v as u64)
    }
}
impl From<f64> for Stat {
    fn from(v: f64) -> Self {
        Stat::Real(v)
    }
}
impl From<bool> for Stat {
    fn from(v: bool) -> Self {
        Stat::Bool(v)
    }
}
impl From<Rational> for Stat {
    fn from(v: Rational) -> Self {
        Stat::Text(format!("{}/{}", v.numer(), v.denom()))
    }
}

fn serialize_runtime<S: Serializer>(v: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(t) => s.serialize_f64(round_sig12(*t)),
        None => s.serialize_none(),
    }
}

/// Outcome of one exhaustive search. Field order is the JSON key order.
///
/// `holds` is true exactly when `witness_count` is zero. `witnesses` holds
/// at most the configured cap; for claims refuted by pairs of graphs the
/// pairs are flattened into consecutive entries and `witness_count` counts
/// pairs.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationResult {
    pub claim: String,
    pub order: usize,
    pub universe: Universe,
    pub holds: bool,
    pub extremal_graphs: Vec<String>,
    pub witnesses: Vec<String>,
    /// Parallel to `witnesses` for claims whose witness is a graph plus an edge.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witness_edges: Vec<(usize, usize)>,
    pub witness_count: u64,
    pub stats: BTreeMap<String, Stat>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "serialize_runtime")]
    pub runtime_seconds: Option<f64>,
}

impl VerificationResult {
    fn new(claim: &str, order: usize, universe: Universe) -> Self {
        VerificationResult {
            claim: claim.to_string(),
            order,
            universe,
            holds: true,
            extremal_graphs: Vec::new(),
            witnesses: Vec::new(),
            witness_edges: Vec::new(),
            witness_count: 0,
            stats: BTreeMap::new(),
            runtime_seconds: None,
        }
    }

    fn stat(&mut self, key: &str, value: impl Into<Stat>) {
        self.stats.insert(key.to_string(), value.into());
    }

    fn finish(mut self, started: Instant) -> Self {
        self.holds = self.witness_count == 0;
        self.runtime_seconds = Some(started.elapsed().as_secs_f64());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("result serializes")
    }
}

/// List that keeps the first `cap` items but counts all of them.
/// Concatenation followed by truncation is associative, so merging partial
/// lists in order is deterministic.
#[derive(Debug, Clone)]
struct Capped<T> {
    items: Vec<T>,
    total: u64,
    cap: usize,
}

impl<T> Capped<T> {
    fn new(cap: usize) -> Self {
        Capped { items: Vec::new(), total: 0, cap }
    }

    fn push(&mut self, item: T) {
        self.total += 1;
        if self.items.len() < self.cap {
            self.items.push(item);
        }
    }

    fn merge(mut self, other: Capped<T>) -> Self {
        self.total += other.total;
        let room = self.cap.saturating_sub(self.items.len());
        self.items.extend(other.items.into_iter().take(room));
        self
    }
}

/// The `K` entries with smallest key; ties broken by graph6.
#[derive(Debug, Clone, Default)]
struct Lowest {
    items: Vec<(f64, String)>,
}

const LOWEST_KEEP: usize = 16;

impl Lowest {
    fn push(&mut self, key: f64, g6: String) {
        self.items.push((key, g6));
        self.normalize();
    }

    fn normalize(&mut self) {
        self.items.sort_by(|a, b| a.0.total_cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
        self.items.truncate(LOWEST_KEEP);
    }

    fn merge(mut self, other: Lowest) -> Self {
        self.items.extend(other.items);
        self.normalize();
        self
    }

    /// Entries within `eps` of the minimum, and the gap to the first entry beyond.
    fn extremes(&self, eps: f64) -> (Vec<String>, Option<f64>) {
        let Some(&(min, _)) = self.items.first() else {
            return (Vec::new(), None);
        };
        let tied = self.items.iter().filter(|(k, _)| *k <= min + eps).map(|(_, g)| g.clone()).collect();
        let gap = self.items.iter().find(|(k, _)| *k > min + eps).map(|(k, _)| k - min);
        (tied, gap)
    }
}

/// graph6 of the canonical relabeling, the form in which enumerated graphs
/// are reported.
pub fn canonical_graph6(g: &Graph) -> String {
    write_graph6(&canonical_form(g).graph())
}

fn is_star(g: &Graph) -> bool {
    let n = g.order();
    n >= 2 && g.size() == n - 1 && g.max_degree() == n - 1
}

fn is_path(g: &Graph) -> bool {
    let n = g.order();
    g.size() + 1 == n && g.is_connected() && g.max_degree() <= 2
}

fn check_order(n: usize, lo: usize, hi: usize) -> Result<(), VerifyError> {
    if n < lo || n > hi {
        return Err(VerifyError::BadInput(format!("order {n} outside {lo}..={hi}")));
    }
    Ok(())
}

fn check_alpha(alpha: f64) -> Result<(), VerifyError> {
    if !(alpha > 1.0 && alpha.is_finite()) {
        return Err(VerifyError::BadInput(format!("Renyi order must exceed 1, got {alpha}")));
    }
    Ok(())
}

type Partial<T> = Result<T, VerifyError>;

fn fold_connected<T, I, F, R>(n: usize, cfg: &VerifyConfig, identity: I, fold: F, reduce: R) -> Result<T, VerifyError>
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(T, &Graph) -> Partial<T> + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    fold_universe(n, true, cfg, identity, fold, reduce)
}

/// Parallel fold that stops contributing after the first error; errors are
/// merged keeping the earliest in enumeration order.
fn fold_universe<T, I, F, R>(
    n: usize,
    connected_only: bool,
    cfg: &VerifyConfig,
    identity: I,
    fold: F,
    reduce: R,
) -> Result<T, VerifyError>
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(T, &Graph) -> Partial<T> + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    par_fold_graphs(
        n,
        connected_only,
        cfg.threads,
        || Ok(identity()),
        |acc: Partial<T>, g| acc.and_then(|a| fold(a, g)),
        |a, b| match (a, b) {
            (Ok(a), Ok(b)) => Ok(reduce(a, b)),
            (Err(e), _) | (_, Err(e)) => Err(e),
        },
    )?
}

/// Every connected graph on `n` vertices has `S(G) >= S(K_{1,n-1})`.
pub fn verify_star_min_von_neumann(n: usize, cfg: &VerifyConfig) -> Result<VerificationResult, VerifyError> {
    check_order(n, 2, 16)?;
    let started = Instant::now();
    let star_s = von_neumann_entropy(&star(n).expect("n >= 2"))?;
    let (lowest, below) = fold_connected(
        n,
        cfg,
        || (Lowest::default(), Capped::new(cfg.witness_cap)),
        |(mut lowest, mut below), g| {
            let s = von_neumann_entropy(g)?;
            let g6 = write_graph6(g);
            if s < star_s - COMPARE_EPS {
                below.push(g6.clone());
            }
            lowest.push(s, g6);
            Ok((lowest, below))
        },
        |(l1, b1), (l2, b2)| (l1.merge(l2), b1.merge(b2)),
    )?;
    let mut r = VerificationResult::new("star-min-S", n, Universe::Connected);
    let (minimizers, gap) = lowest.extremes(COMPARE_EPS);
    let min = lowest.items.first().map(|x| x.0).unwrap_or(f64::NAN);
    r.stat("star_entropy", star_s);
    r.stat("star_entropy_closed", star_entropy_closed(n)?);
    r.stat("min_entropy", min);
    if let Some(gap) = gap {
        r.stat("runner_up_gap", gap);
    }
    r.stat("unique_minimizer", minimizers.len() == 1 && gap.is_none_or(|g| g > COMPARE_EPS));
    r.extremal_graphs = minimizers;
    r.witness_count = below.total;
    r.witnesses = below.items;
    Ok(r.finish(started))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeEntropy {
    VonNeumann,
    Renyi2,
}

/// Extremes over trees: for `Renyi2` the star is the unique minimizer and the
/// path the unique maximizer (checked in exact arithmetic; failure is a
/// theorem violation). For `VonNeumann`, reports whether the path maximizes.
pub fn verify_tree_extremes(n: usize, kind: TreeEntropy, cfg: &VerifyConfig) -> Result<VerificationResult, VerifyError> {
    check_order(n, 3, 16)?;
    let started = Instant::now();
    let trees = enumerate_trees(n)?;
    match kind {
        TreeEntropy::Renyi2 => {
            let claim = "tree-extremes-H2";
            let star_t = tr2(&star(n).expect("n >= 3").degree_sequence())?;
            let path_t = tr2(&path(n).expect("n >= 3").degree_sequence())?;
            for t in &trees {
                let v = tr2(&t.degree_sequence())?;
                if !is_star(t) && v >= star_t {
                    return Err(violation(claim, t, format!("tr2 {v} >= star {star_t}")));
                }
                if !is_path(t) && v <= path_t {
                    return Err(violation(claim, t, format!("tr2 {v} <= path {path_t}")));
                }
            }
            let mut r = VerificationResult::new(claim, n, Universe::Trees);
            r.stat("trees", trees.len());
            r.stat("star_tr2", star_t);
            r.stat("path_tr2", path_t);
            r.stat("star_h2", -(*star_t.numer() as f64 / *star_t.denom() as f64).log2());
            r.stat("path_h2", -(*path_t.numer() as f64 / *path_t.denom() as f64).log2());
            r.extremal_graphs = vec![
                canonical_graph6(&star(n).expect("n >= 3")),
                canonical_graph6(&path(n).expect("n >= 3")),
            ];
            Ok(r.finish(started))
        }
        TreeEntropy::VonNeumann => {
            let path_s = von_neumann_entropy(&path(n).expect("n >= 3"))?;
            let mut lowest_neg = Lowest::default();
            let mut above = Capped::new(cfg.witness_cap);
            let mut min_s = f64::INFINITY;
            let mut min_tree = String::new();
            for t in &trees {
                let s = von_neumann_entropy(t)?;
                let g6 = canonical_graph6(t);
                if s > path_s + COMPARE_EPS {
                    above.push(g6.clone());
                }
                if s < min_s {
                    min_s = s;
                    min_tree = g6.clone();
                }
                lowest_neg.push(-s, g6);
            }
            let (maximizers, gap) = lowest_neg.extremes(COMPARE_EPS);
            let mut r = VerificationResult::new("tree-extremes-S", n, Universe::Trees);
            r.stat("trees", trees.len());
            r.stat("path_entropy", path_s);
            r.stat("max_entropy", -lowest_neg.items[0].0);
            r.stat("min_entropy", min_s);
            r.stat("min_is_star", is_star(&crate::graph6::parse_graph6(&min_tree).expect("own output")));
            if let Some(gap) = gap {
                r.stat("runner_up_gap", gap);
            }
            r.stat("unique_maximizer", maximizers.len() == 1 && gap.is_none_or(|g| g > COMPARE_EPS));
            r.extremal_graphs = maximizers;
            r.witness_count = above.total;
            r.witnesses = above.items;
            Ok(r.finish(started))
        }
    }
}

/// Every connected graph has `H_alpha(G) >= H_alpha(K_{1,n-1})`. For
/// `alpha == 2` the comparison is exact on `tr2` and strict uniqueness is
/// required.
pub fn verify_renyi_star_min(n: usize, alpha: f64, cfg: &VerifyConfig) -> Result<VerificationResult, VerifyError> {
    check_order(n, 3, 16)?;
    check_alpha(alpha)?;
    let started = Instant::now();
    let star_g = star(n).expect("n >= 3");
    if alpha == 2.0 {
        let claim = "renyi-star-min";
        let star_t = tr2(&star_g.degree_sequence())?;
        let (count, runner_up) = fold_connected(
            n,
            cfg,
            || (0u64, None::<Rational>),
            |(count, best), g| {
                if is_star(g) {
                    return Ok((count + 1, best));
                }
                let t = tr2(&g.degree_sequence())?;
                if t >= star_t {
                    return Err(violation(claim, g, format!("tr2 {t} >= star {star_t}")));
                }
                Ok((count + 1, Some(best.map_or(t, |b: Rational| b.max(t)))))
            },
            |(c1, b1), (c2, b2)| {
                let best = match (b1, b2) {
                    (Some(a), Some(b)) => Some(a.max(b)),
                    (a, b) => a.or(b),
                };
                (c1 + c2, best)
            },
        )?;
        let mut r = VerificationResult::new(claim, n, Universe::Connected);
        r.stat("alpha", alpha);
        r.stat("graphs", count);
        r.stat("exact", true);
        r.stat("star_tr2", star_t);
        if let Some(b) = runner_up {
            r.stat("runner_up_tr2", b);
        }
        r.stat("unique_minimizer", true);
        r.extremal_graphs = vec![canonical_graph6(&star_g)];
        return Ok(r.finish(started));
    }

    let star_h = renyi_graph_entropy(&star_g, alpha)?;
    let (lowest, below, count) = fold_connected(
        n,
        cfg,
        || (Lowest::default(), Capped::new(cfg.witness_cap), 0u64),
        |(mut lowest, mut below, count), g| {
            let h = renyi_graph_entropy(g, alpha)?;
            let g6 = write_graph6(g);
            if h < star_h - COMPARE_EPS {
                below.push(g6.clone());
            }
            lowest.push(h, g6);
            Ok((lowest, below, count + 1))
        },
        |(l1, b1, c1), (l2, b2, c2)| (l1.merge(l2), b1.merge(b2), c1 + c2),
    )?;
    let (minimizers, gap) = lowest.extremes(COMPARE_EPS);
    let mut r = VerificationResult::new("renyi-star-min", n, Universe::Connected);
    r.stat("alpha", alpha);
    r.stat("graphs", count);
    r.stat("exact", false);
    r.stat("star_entropy", star_h);
    if let Some(gap) = gap {
        r.stat("runner_up_gap", gap);
    }
    r.stat("unique_minimizer", minimizers.len() == 1 && gap.is_none_or(|g| g > COMPARE_EPS));
    r.extremal_graphs = minimizers;
    r.witness_count = below.total;
    r.witnesses = below.items;
    Ok(r.finish(started))
}

/// Over all graphs with an edge, `0 <= H_alpha(G) <= log2(n-1)`, with the
/// single-edge graph the only one at zero.
pub fn verify_renyi_max(n: usize, alpha: f64, cfg: &VerifyConfig) -> Result<VerificationResult, VerifyError> {
    check_order(n, 2, 16)?;
    check_alpha(alpha)?;
    let claim = "renyi-max";
    let started = Instant::now();
    let bound = ((n - 1) as f64).log2();
    let (highest, zeros, count) = fold_universe(
        n,
        false,
        cfg,
        || (Lowest::default(), 0u64, 0u64),
        |(mut highest, zeros, count), g| {
            if g.size() == 0 {
                return Ok((highest, zeros, count));
            }
            let h = renyi_graph_entropy(g, alpha)?;
            if h > bound + COMPARE_EPS {
                return Err(violation(claim, g, format!("H = {h} exceeds log2(n-1) = {bound}")));
            }
            let is_zero = h <= COMPARE_EPS;
            if is_zero != (g.size() == 1) {
                return Err(violation(claim, g, format!("H = {h} with {} edges", g.size())));
            }
            highest.push(-h, write_graph6(g));
            Ok((highest, zeros + is_zero as u64, count + 1))
        },
        |(h1, z1, c1), (h2, z2, c2)| (h1.merge(h2), z1 + z2, c1 + c2),
    )?;
    if zeros != 1 {
        return Err(VerifyError::TheoremViolation {
            claim: claim.into(),
            graph6: String::new(),
            detail: format!("{zeros} graphs with zero entropy"),
        });
    }
    let (maximizers, _) = highest.extremes(COMPARE_EPS);
    let mut r = VerificationResult::new(claim, n, Universe::All);
    r.stat("alpha", alpha);
    r.stat("graphs", count);
    r.stat("bound", bound);
    r.stat("max_entropy", -highest.items[0].0);
    r.stat("zero_entropy_graphs", zeros);
    r.extremal_graphs = maximizers;
    Ok(r.finish(started))
}

/// One row of the star-test failure table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub n: usize,
    pub failures: u64,
    pub total: u64,
    pub failing: Vec<String>,
}

impl Table1Row {
    pub fn fraction(&self) -> f64 {
        if self.total == 0 {
            0.0
        } else {
            self.failures as f64 / self.total as f64
        }
    }
}

/// Counts connected graphs on `n` vertices failing the star test.
pub fn table1_row(n: usize, cfg: &VerifyConfig) -> Result<Table1Row, VerifyError> {
    check_order(n, 2, 16)?;
    let (failing, total) = fold_connected(
        n,
        cfg,
        || (Capped::new(cfg.witness_cap), 0u64),
        |(mut failing, total), g| {
            if !star_test(&g.degree_sequence(), n)? {
                failing.push(write_graph6(g));
            }
            Ok((failing, total + 1))
        },
        |(f1, t1), (f2, t2)| (f1.merge(f2), t1 + t2),
    )?;
    Ok(Table1Row { n, failures: failing.total, total, failing: failing.items })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FailureRecord {
    pub graph6: String,
    pub min_degree: usize,
    pub has_leaf: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FailureReport {
    pub n: usize,
    pub records: Vec<FailureRecord>,
    pub all_have_leaf: bool,
}

/// Structural facts about every connected graph failing the star test.
pub fn failing_graph_properties(n: usize, cfg: &VerifyConfig) -> Result<FailureReport, VerifyError> {
    check_order(n, 2, 10)?;
    let uncapped = VerifyConfig { witness_cap: usize::MAX, ..*cfg };
    let row = table1_row(n, &uncapped)?;
    let records: Vec<FailureRecord> = row
        .failing
        .iter()
        .map(|g6| {
            let g = crate::graph6::parse_graph6(g6).expect("own output");
            let min_degree = g.min_degree();
            FailureRecord { graph6: g6.clone(), min_degree, has_leaf: min_degree == 1 }
        })
        .collect();
    let all_have_leaf = records.iter().all(|r| r.has_leaf);
    Ok(FailureReport { n, records, all_have_leaf })
}

/// `density_test => star_test` over connected graphs (a theorem), with the
/// number of graphs where the converse fails.
pub fn verify_density_implies_star(n: usize, cfg: &VerifyConfig) -> Result<VerificationResult, VerifyError> {
    check_order(n, 2, 16)?;
    let claim = "density-implies-star";
    let started = Instant::now();
    let (dense, star_pass, converse_fail, total) = fold_connected(
        n,
        cfg,
        || (0u64, 0u64, 0u64, 0u64),
        |(d, s, c, t), g| {
            let dt = density_test(n, g.size())?;
            let st = star_test(&g.degree_sequence(), n)?;
            if dt && !st {
                return Err(violation(claim, g, "dense graph fails the star test".into()));
            }
            Ok((d + dt as u64, s + st as u64, c + (st && !dt) as u64, t + 1))
        },
        |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2, a.3 + b.3),
    )?;
    let mut r = VerificationResult::new(claim, n, Universe::Connected);
    r.stat("graphs", total);
    r.stat("density_pass", dense);
    r.stat("star_pass", star_pass);
    r.stat("star_pass_density_fail", converse_fail);
    Ok(r.finish(started))
}

/// Spectral `H2` agrees with the degree formula, and `S >= H2`, on every
/// connected graph (both proven; a mismatch is a theorem violation).
pub fn verify_h2_consistency(n: usize, cfg: &VerifyConfig) -> Result<VerificationResult, VerifyError> {
    check_order(n, 2, 16)?;
    let claim = "h2-consistency";
    let started = Instant::now();
    let (max_diff, min_gap, total) = fold_connected(
        n,
        cfg,
        || (0.0f64, f64::INFINITY, 0u64),
        |(diff, gap, t), g| {
            let spectral = renyi_graph_entropy(g, 2.0)?;
            let exact = crate::entropy::h2_degree(&g.degree_sequence())?;
            let s = von_neumann_entropy(g)?;
            let d = (spectral - exact).abs();
            if d > COMPARE_EPS {
                return Err(violation(claim, g, format!("spectral H2 {spectral} vs degree H2 {exact}")));
            }
            if s < exact - COMPARE_EPS {
                return Err(violation(claim, g, format!("S = {s} < H2 = {exact}")));
            }
            Ok((diff.max(d), gap.min(s - exact), t + 1))
        },
        |a, b| (a.0.max(b.0), a.1.min(b.1), a.2 + b.2),
    )?;
    let mut r = VerificationResult::new(claim, n, Universe::Connected);
    r.stat("graphs", total);
    r.stat("max_h2_route_difference", max_diff);
    r.stat("min_s_minus_h2", min_gap);
    Ok(r.finish(started))
}

/// For each connected graph and each complement edge, `tr2(G+e) < tr2(star)`
/// in exact arithmetic.
pub fn verify_edge_addition_tr2(n: usize, cfg: &VerifyConfig) -> Result<VerificationResult, VerifyError> {
    check_order(n, 3, 16)?;
    let claim = "edge-add-tr2";
    let started = Instant::now();
    let star_t = tr2(&star(n).expect("n >= 3").degree_sequence())?;
    let (pairs, max_after) = fold_connected(
        n,
        cfg,
        || (0u64, None::<Rational>),
        |(pairs, best), g| {
            let mut best = best;
            let mut pairs = pairs;
            if tr2(&g.degree_sequence())? > star_t {
                return Ok((pairs, best));
            }
            for (u, v) in g.complement_edges() {
                let h = g.add_edge(u, v).expect("complement edge");
                let t = tr2(&h.degree_sequence())?;
                if t >= star_t {
                    return Err(violation(claim, g, format!("adding {u}-{v} gives tr2 {t} >= {star_t}")));
                }
                pairs += 1;
                best = Some(best.map_or(t, |b: Rational| b.max(t)));
            }
            Ok((pairs, best))
        },
        |a, b| {
            let best = match (a.1, b.1) {
                (Some(x), Some(y)) => Some(x.max(y)),
                (x, y) => x.or(y),
            };
            (a.0 + b.0, best)
        },
    )?;
    let mut r = VerificationResult::new(claim, n, Universe::Connected);
    r.stat("pairs", pairs);
    r.stat("star_tr2", star_t);
    if let Some(b) = max_after {
        r.stat("max_tr2_after", b);
    }
    Ok(r.finish(started))
}

/// Hypothesis "adding an edge never lowers `S`": witnesses are pairs
/// `(G, e)` with `S(G+e) < S(G) - eps`. Every scanned pair is also checked
/// against the proven bound `S(G+e) >= d_G/(d_G+2) S(G)`.
pub fn edge_add_decrease_search(n: usize, cfg: &VerifyConfig) -> Result<VerificationResult, VerifyError> {
    check_order(n, 2, 10)?;
    let claim = "edge-add-decrease";
    let started = Instant::now();
    let family = if n >= 4 {
        let k = complete_bipartite(2, n - 2).expect("n >= 4");
        let plus = k.add_edge(0, 1).expect("the two hubs are non-adjacent");
        Some((canonical_form(&k), canonical_form(&plus)))
    } else {
        None
    };

    struct Acc {
        witnesses: Capped<(String, (usize, usize))>,
        pairs: u64,
        min_bound_gap: f64,
        family_found: bool,
    }
    let acc = fold_connected(
        n,
        cfg,
        || Acc {
            witnesses: Capped::new(cfg.witness_cap),
            pairs: 0,
            min_bound_gap: f64::INFINITY,
            family_found: false,
        },
        |mut acc, g| {
            let s = von_neumann_entropy(g)?;
            let dg = g.degree_sum() as f64;
            let is_k2n2 = family.is_some_and(|(k, _)| canonical_form(g) == k);
            for (u, v) in g.complement_edges() {
                let h = g.add_edge(u, v).expect("complement edge");
                let sh = von_neumann_entropy(&h)?;
                let bound = dg / (dg + 2.0) * s;
                if sh < bound - COMPARE_EPS {
                    return Err(violation(claim, g, format!("adding {u}-{v}: {sh} < bound {bound}")));
                }
                acc.min_bound_gap = acc.min_bound_gap.min(sh - bound);
                acc.pairs += 1;
                if sh < s - COMPARE_EPS {
                    acc.witnesses.push((write_graph6(g), (u, v)));
                    if is_k2n2 && family.is_some_and(|(_, p)| canonical_form(&h) == p) {
                        acc.family_found = true;
                    }
                }
            }
            Ok(acc)
        },
        |a, b| Acc {
            witnesses: a.witnesses.merge(b.witnesses),
            pairs: a.pairs + b.pairs,
            min_bound_gap: a.min_bound_gap.min(b.min_bound_gap),
            family_found: a.family_found || b.family_found,
        },
    )?;
    let mut r = VerificationResult::new(claim, n, Universe::Connected);
    r.stat("pairs", acc.pairs);
    r.stat("min_bound_gap", acc.min_bound_gap);
    r.stat("bound_strict", acc.min_bound_gap > 0.0);
    r.stat("k2n2_witness_found", acc.family_found);
    if n >= 4 {
        let (before, after) = k2n2_closed(n)?;
        r.stat("k2n2_closed_gap", before - after);
    }
    r.witness_count = acc.witnesses.total;
    let (g6s, edges): (Vec<_>, Vec<_>) = acc.witnesses.items.into_iter().unzip();
    r.witnesses = g6s;
    r.witness_edges = edges;
    Ok(r.finish(started))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoentropyMember {
    pub graph6: String,
    pub entropy: f64,
    pub spectrum: Vec<f64>,
}

/// Connected graphs with equal `S` but different spectra.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoentropyGroup {
    pub entropy: f64,
    pub members: Vec<CoentropyMember>,
}

fn distinct_spectra(members: &[(f64, String, Spectrum)]) -> bool {
    members.iter().any(|m| m.2.max_abs_diff(&members[0].2) > SPECTRUM_TOL)
}

/// Groups of connected graphs whose entropies agree within `group_tol`
/// (consecutive-difference chaining after sorting) and whose spectra are not
/// all equal. Candidate groups are re-split at [`COENTROPY_CONFIRM_TOL`]
/// using compensated summation before being reported.
pub fn coentropy_search(n: usize, group_tol: f64, cfg: &VerifyConfig) -> Result<Vec<CoentropyGroup>, VerifyError> {
    check_order(n, 2, 10)?;
    let mut all = fold_connected(
        n,
        cfg,
        Vec::new,
        |mut v, g| {
            let spec = density_spectrum(g, DEFAULT_TOL).map_err(EntropyError::from)?;
            let s = shannon_entropy_compensated(&ProbabilityDistribution::try_from(&spec)?);
            v.push((s, write_graph6(g), spec));
            Ok(v)
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    )?;
    all.sort_by(|a, b| a.0.total_cmp(&b.0).then_with(|| a.1.cmp(&b.1)));

    let chains = |items: Vec<(f64, String, Spectrum)>, tol: f64| {
        let mut groups: Vec<Vec<(f64, String, Spectrum)>> = Vec::new();
        for item in items {
            match groups.last_mut() {
                Some(g) if item.0 - g.last().expect("nonempty group").0 <= tol => g.push(item),
                _ => groups.push(vec![item]),
            }
        }
        groups.into_iter().filter(|g| g.len() > 1 && distinct_spectra(g)).collect::<Vec<_>>()
    };

    let mut out = Vec::new();
    for coarse in chains(all, group_tol) {
        for group in chains(coarse, COENTROPY_CONFIRM_TOL.min(group_tol)) {
            out.push(CoentropyGroup {
                entropy: group[0].0,
                members: group
                    .into_iter()
                    .map(|(entropy, graph6, spec)| CoentropyMember { graph6, entropy, spectrum: spec.values().to_vec() })
                    .collect(),
            });
        }
    }
    Ok(out)
}

/// Hypothesis "entropy determines the spectrum": witnesses are the members
/// of every coentropy group.
pub fn verify_coentropy(n: usize, group_tol: f64, cfg: &VerifyConfig) -> Result<VerificationResult, VerifyError> {
    let started = Instant::now();
    let groups = coentropy_search(n, group_tol, cfg)?;
    let mut r = VerificationResult::new("coentropy", n, Universe::Connected);
    let mut w = Capped::new(cfg.witness_cap);
    for g in &groups {
        for m in &g.members {
            w.push(m.graph6.clone());
        }
    }
    r.stat("groups", groups.len());
    r.stat("group_tol", group_tol);
    r.witness_count = w.total;
    r.witnesses = w.items;
    Ok(r.finish(started))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphParam {
    Matching,
    Diameter,
    MaxDegree,
}

impl GraphParam {
    pub fn name(self) -> &'static str {
        match self {
            GraphParam::Matching => "matching",
            GraphParam::Diameter => "diameter",
            GraphParam::MaxDegree => "max_degree",
        }
    }

    pub fn eval(self, g: &Graph) -> usize {
        match self {
            GraphParam::Matching => g.matching_number(),
            GraphParam::Diameter => g.diameter().expect("connected graph"),
            GraphParam::MaxDegree => g.max_degree(),
        }
    }
}

/// Ordered pairs `(G1, G2)` of connected graphs with `param(G1) < param(G2)`,
/// split by whether entropy moves the same way (`concordant`,
/// `S(G1) < S(G2) - eps`) or the opposite way (`discordant`,
/// `S(G1) > S(G2) + eps`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComparabilityReport {
    pub param: &'static str,
    pub n: usize,
    pub concordant_count: u64,
    pub discordant_count: u64,
    pub concordant: Vec<(String, String)>,
    pub discordant: Vec<(String, String)>,
}

impl ComparabilityReport {
    pub fn noncomparable(&self) -> bool {
        self.concordant_count > 0 && self.discordant_count > 0
    }
}

pub fn param_comparability(n: usize, param: GraphParam, cfg: &VerifyConfig) -> Result<ComparabilityReport, VerifyError> {
    check_order(n, 2, 8)?;
    let mut rows = fold_connected(
        n,
        cfg,
        Vec::new,
        |mut v, g| {
            v.push((param.eval(g), von_neumann_entropy(g)?, write_graph6(g)));
            Ok(v)
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    )?;
    rows.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.total_cmp(&b.1)).then_with(|| a.2.cmp(&b.2)));
    let mut concordant = Capped::new(cfg.witness_cap);
    let mut discordant = Capped::new(cfg.witness_cap);
    for (i, a) in rows.iter().enumerate() {
        for b in &rows[i + 1..] {
            if a.0 >= b.0 {
                continue;
            }
            if a.1 < b.1 - COMPARE_EPS {
                concordant.push((a.2.clone(), b.2.clone()));
            } else if a.1 > b.1 + COMPARE_EPS {
                discordant.push((a.2.clone(), b.2.clone()));
            }
        }
    }
    Ok(ComparabilityReport {
        param: param.name(),
        n,
        concordant_count: concordant.total,
        discordant_count: discordant.total,
        concordant: concordant.items,
        discordant: discordant.items,
    })
}

/// Hypothesis "`param` orders graphs the same way `S` does, or the reverse
/// way": refuted when both concordant and discordant pairs exist, in which
/// case one pair of each kind is returned as witnesses.
pub fn verify_param_comparability(n: usize, param: GraphParam, cfg: &VerifyConfig) -> Result<VerificationResult, VerifyError> {
    let started = Instant::now();
    let rep = param_comparability(n, param, cfg)?;
    let mut r = VerificationResult::new(&format!("param-compare-{}", param.name()), n, Universe::Connected);
    r.stat("concordant_pairs", rep.concordant_count);
    r.stat("discordant_pairs", rep.discordant_count);
    if rep.noncomparable() {
        let (a, b) = &rep.concordant[0];
        let (c, d) = &rep.discordant[0];
        r.witnesses = vec![a.clone(), b.clone(), c.clone(), d.clone()];
        r.witness_count = 2;
    }
    Ok(r.finish(started))
}
