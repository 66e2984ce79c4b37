//! Decision and optimisation drivers: can `k` edges be removed while staying
//! within the stretch bound?
//!
//! Every solution only removes candidate edges, so when the candidate set is
//! small enough an exhaustive search over its `k`-subsets is both complete
//! and cheap. Above the size threshold a solution is known to exist; it is
//! searched for among the edges of a bounded family of short cycles, or built
//! directly by the [`constructive`](crate::constructive) routines.

use std::ops::ControlFlow;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use thiserror::Error;

use crate::candidates::{
    candidate_edges, cycles_through_edge, enumerate_short_cycles, for_each_short_cycle,
    greedy_edge_disjoint, CandidateSet, Cycle,
};
use crate::constructive::{
    build_sequence, middle_edge_removal, spanner_from_sequence, ConstructError, CycleSeq, Effort,
};
use crate::graph::{EdgeMask, Graph};
use crate::thresholds::{f1, f2, f3, thresholds};
use crate::verify::{verify, ParamError, Rational, SpannerParams, Verifier};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Exact,
    /// Above the size threshold, try the direct constructions before
    /// enumerating. Same verdicts as `Exact`, possibly different masks.
    ConstructivePreferred,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub mode: Mode,
    /// Replaces the candidate-set size threshold; tests use it to force the
    /// large branch on small graphs.
    pub f4_override: Option<u64>,
    /// Most short cycles the large branch will materialise.
    pub cycle_cap: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            mode: Mode::Exact,
            f4_override: None,
            cycle_cap: 100_000,
        }
    }
}

impl SolveOptions {
    pub fn with_mode(mode: Mode) -> Self {
        SolveOptions {
            mode,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Feasible(EdgeMask),
    Infeasible,
}

impl Verdict {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Verdict::Feasible(_))
    }

    pub fn mask(&self) -> Option<&EdgeMask> {
        match self {
            Verdict::Feasible(m) => Some(m),
            Verdict::Infeasible => None,
        }
    }
}

/// Which part of the solver settled the instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Branch {
    SmallF,
    ManyCycles,
    Oracle,
    Constructive,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::SmallF => "small_f",
            Branch::ManyCycles => "many_cycles",
            Branch::Oracle => "oracle",
            Branch::Constructive => "constructive",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SolveStats {
    pub candidates: usize,
    pub cycles_found: usize,
    pub subsets_examined: u64,
}

impl SolveStats {
    fn absorb(&mut self, other: SolveStats) {
        self.candidates += other.candidates;
        self.cycles_found += other.cycles_found;
        self.subsets_examined += other.subsets_examined;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub verdict: Verdict,
    pub branch: Branch,
    pub stats: SolveStats,
}

impl SolveResult {
    pub fn is_feasible(&self) -> bool {
        self.verdict.is_feasible()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("C({m}, {k}) subsets exceed the budget of {budget}")]
    BudgetExceeded { m: usize, k: usize, budget: u64 },
}

/// Largest removal found by stepping `k` upward.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxRemoval {
    pub count: usize,
    pub removed: EdgeMask,
    pub stats: SolveStats,
}

/// Additive `t`-spanner decision on one graph, normally a connected one.
pub fn solve_additive(g: &Graph, t: u32, k: usize, opts: &SolveOptions) -> SolveResult {
    let params = SpannerParams::Additive(t);
    let cand = candidate_edges(g, t);
    let mut stats = SolveStats {
        candidates: cand.len(),
        ..SolveStats::default()
    };
    if k == 0 {
        return feasible(g.empty_mask(), Branch::SmallF, stats);
    }
    if !above_threshold(&cand, t, k, opts) {
        return small_f(g, &cand, k, params, stats);
    }
    if let Some(r) = large_branch(g, &cand, t, k, opts, &mut stats) {
        return r;
    }
    small_f(g, &cand, k, params, stats)
}

/// `(alpha, beta)`-spanner decision. Any removable edge lies on a cycle of
/// length at most `floor(alpha + beta) + 1`, so the additive machinery with
/// `t = floor(alpha + beta) - 1` narrows the search; every mask is checked
/// against the `(alpha, beta)` bound itself.
pub fn solve_ab(
    g: &Graph,
    alpha: Rational,
    beta: Rational,
    k: usize,
    opts: &SolveOptions,
) -> Result<SolveResult, ParamError> {
    let params = SpannerParams::alpha_beta(alpha, beta)?;
    Ok(solve_ab_params(g, params, k, opts))
}

fn solve_ab_params(g: &Graph, params: SpannerParams, k: usize, opts: &SolveOptions) -> SolveResult {
    let t = params.derived_t();
    if k == 0 {
        return feasible(g.empty_mask(), Branch::SmallF, SolveStats::default());
    }
    if t == 0 {
        return SolveResult {
            verdict: Verdict::Infeasible,
            branch: Branch::SmallF,
            stats: SolveStats::default(),
        };
    }
    let cand = candidate_edges(g, t);
    let mut stats = SolveStats {
        candidates: cand.len(),
        ..SolveStats::default()
    };
    if above_threshold(&cand, t, k, opts) {
        // an additive t-spanner is also an (alpha, beta)-spanner
        if let Some(r) = large_branch(g, &cand, t, k, opts, &mut stats) {
            if let Verdict::Feasible(m) = &r.verdict {
                if verify(g, m, params).is_ok() {
                    return r;
                }
            }
        }
    }
    small_f(g, &cand, k, params, stats)
}

/// Largest number of removable edges, with a witness.
pub fn solve_max_k(g: &Graph, params: SpannerParams, opts: &SolveOptions) -> MaxRemoval {
    max_k_capped(g, params, usize::MAX, opts).0
}

fn max_k_capped(
    g: &Graph,
    params: SpannerParams,
    cap: usize,
    opts: &SolveOptions,
) -> (MaxRemoval, Branch) {
    let limit = removal_limit(g).min(cap);
    let mut best = MaxRemoval {
        count: 0,
        removed: g.empty_mask(),
        stats: SolveStats::default(),
    };
    let mut branch = Branch::SmallF;
    for k in 1..=limit {
        let r = solve_connected(g, params, k, opts);
        best.stats.absorb(r.stats);
        // candidates are counted once per graph, not once per k
        best.stats.candidates = r.stats.candidates;
        match r.verdict {
            Verdict::Feasible(m) => {
                best.count = k;
                best.removed = m;
                branch = branch.max(r.branch);
            }
            Verdict::Infeasible => break,
        }
    }
    (best, branch)
}

fn solve_connected(g: &Graph, params: SpannerParams, k: usize, opts: &SolveOptions) -> SolveResult {
    match params {
        SpannerParams::Additive(t) => solve_additive(g, t, k, opts),
        SpannerParams::AlphaBeta { .. } => solve_ab_params(g, params, k, opts),
    }
}

/// Decision on an arbitrary graph. Components are independent, so each one
/// contributes its own maximum removal until `k` is covered.
pub fn solve(g: &Graph, params: SpannerParams, k: usize, opts: &SolveOptions) -> SolveResult {
    let mut removed = g.empty_mask();
    let mut stats = SolveStats::default();
    let mut branch = Branch::SmallF;
    let mut remaining = k;
    for comp in g.components() {
        if remaining == 0 {
            break;
        }
        let (sub, edge_map) = g.induced(&comp);
        if sub.edge_count() == 0 {
            continue;
        }
        let (best, b) = max_k_capped(&sub, params, remaining, opts);
        stats.absorb(best.stats);
        if best.count > 0 {
            branch = branch.max(b);
        }
        for e in best.removed.iter() {
            removed.insert(edge_map[e]);
        }
        remaining -= best.count;
    }
    if remaining > 0 {
        // settled by the exhaustive search that failed one step further
        return SolveResult {
            verdict: Verdict::Infeasible,
            branch: Branch::SmallF,
            stats,
        };
    }
    assert!(
        verify(g, &removed, params).is_ok(),
        "per-component removals must combine into a valid spanner"
    );
    feasible(removed, branch, stats)
}

/// Brute force over every `k`-subset of all edges in lexicographic order,
/// accepting the first that passes [`verify`].
pub fn oracle(
    g: &Graph,
    params: SpannerParams,
    k: usize,
    budget: u64,
) -> Result<SolveResult, OracleError> {
    let m = g.edge_count();
    let mut stats = SolveStats::default();
    let infeasible = |stats| SolveResult {
        verdict: Verdict::Infeasible,
        branch: Branch::Oracle,
        stats,
    };
    if k > removal_limit(g) {
        return Ok(infeasible(stats));
    }
    if binomial(m, k) > u128::from(budget) {
        return Err(OracleError::BudgetExceeded { m, k, budget });
    }
    let base = g.all_pairs_dist(&g.empty_mask());
    let mut verifier = Verifier::new(g, &base, params);
    let mut combo: Vec<usize> = (0..k).collect();
    loop {
        stats.subsets_examined += 1;
        let mask = EdgeMask::from_edges(m, combo.iter().copied());
        if verifier.is_spanner(&mask) {
            return Ok(SolveResult {
                verdict: Verdict::Feasible(mask),
                branch: Branch::Oracle,
                stats,
            });
        }
        if !next_combination(&mut combo, m) {
            return Ok(infeasible(stats));
        }
    }
}

/// Most edges removable from `g` without disconnecting anything.
pub fn removal_limit(g: &Graph) -> usize {
    g.edge_count() + g.components().len() - g.vertex_count()
}

fn next_combination(combo: &mut [usize], m: usize) -> bool {
    let k = combo.len();
    let Some(i) = (0..k).rev().find(|&i| combo[i] < m - k + i) else {
        return false;
    };
    combo[i] += 1;
    for j in i + 1..k {
        combo[j] = combo[j - 1] + 1;
    }
    true
}

fn binomial(m: usize, k: usize) -> u128 {
    if k > m {
        return 0;
    }
    let k = k.min(m - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((m - i) as u128) / (i as u128 + 1);
    }
    acc
}

fn feasible(mask: EdgeMask, branch: Branch, stats: SolveStats) -> SolveResult {
    SolveResult {
        verdict: Verdict::Feasible(mask),
        branch,
        stats,
    }
}

fn above_threshold(cand: &CandidateSet, t: u32, k: usize, opts: &SolveOptions) -> bool {
    if t == 0 {
        // no edge lies on a cycle of length 2
        return false;
    }
    let limit = opts
        .f4_override
        .unwrap_or_else(|| thresholds(u64::from(t), k as u64).f4);
    cand.len() as u64 > limit
}

fn small_f(
    g: &Graph,
    cand: &CandidateSet,
    k: usize,
    params: SpannerParams,
    mut stats: SolveStats,
) -> SolveResult {
    let pool = cand.edges.to_vec();
    let (found, examined) = search_subsets(g, &pool, k, params);
    stats.subsets_examined += examined;
    SolveResult {
        verdict: found.map_or(Verdict::Infeasible, Verdict::Feasible),
        branch: Branch::SmallF,
        stats,
    }
}

/// Large candidate set: direct construction (if asked), then the edges of
/// a bounded family of short cycles. `None` hands over to the full search.
fn large_branch(
    g: &Graph,
    cand: &CandidateSet,
    t: u32,
    k: usize,
    opts: &SolveOptions,
    stats: &mut SolveStats,
) -> Option<SolveResult> {
    let params = SpannerParams::Additive(t);
    if opts.mode == Mode::ConstructivePreferred {
        if let Some(mask) = construct(g, t, k, opts, stats) {
            debug_assert!(mask.is_subset(&cand.edges));
            return Some(feasible(mask, Branch::Constructive, *stats));
        }
    }
    let table = thresholds(u64::from(t), k as u64);
    let cap = usize::try_from(table.cycle_family)
        .unwrap_or(usize::MAX)
        .min(opts.cycle_cap);
    let mut union = g.empty_mask();
    let mut found = 0;
    if cap > 0 {
        for_each_short_cycle(g, t, |c| {
            found += 1;
            for &e in c.edges() {
                union.insert(e);
            }
            if found >= cap {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
    }
    stats.cycles_found += found;
    let (mask, examined) = search_subsets(g, &union.to_vec(), k, params);
    stats.subsets_examined += examined;
    mask.map(|m| feasible(m, Branch::ManyCycles, *stats))
}

/// The construction chain: many cycles through one edge, then an ordered
/// sequence of disjoint cycles; first at the proven thresholds, then below.
fn construct(
    g: &Graph,
    t: u32,
    k: usize,
    opts: &SolveOptions,
    stats: &mut SolveStats,
) -> Option<EdgeMask> {
    let accept = |mask: EdgeMask| {
        (mask.len() == k && verify(g, &mask, SpannerParams::Additive(t)).is_ok()).then_some(mask)
    };
    let note = |r: &Result<EdgeMask, ConstructError>| {
        debug_assert!(
            !matches!(r, Err(ConstructError::InternalAssertionFailed(_))),
            "construction failed above its threshold: {r:?}"
        );
    };

    let heavy = f1((k + t as usize + 1) as u64, u64::from(t) + 1);
    let cycles = enumerate_short_cycles(g, t, opts.cycle_cap);
    stats.cycles_found += cycles.len();
    let mut load = vec![0usize; g.edge_count()];
    for c in &cycles {
        for &e in c.edges() {
            load[e] += 1;
        }
    }
    let busiest = (0..g.edge_count()).max_by_key(|&e| (load[e], std::cmp::Reverse(e)));

    if heavy <= opts.cycle_cap as u64 {
        for e in 0..g.edge_count() {
            let through = cycles_through_edge(g, e, t, heavy as usize);
            if (through.len() as u64) < heavy {
                continue;
            }
            let r =
                middle_edge_removal(g, e, &through, k, t, Effort::Guaranteed).map(|o| o.removed);
            note(&r);
            if let Some(m) = r.ok().and_then(accept) {
                return Some(m);
            }
            break;
        }
    }

    let p = f3(u64::from(t), k as u64);
    let need = f2(u64::from(t), p);
    let family: Vec<Cycle> = greedy_edge_disjoint(&cycles, cycles.len());
    if family.len() as u64 >= need {
        let r = sequence_removal(g, &family, t, p as usize, k, Effort::Guaranteed);
        note(&r);
        if let Some(m) = r.ok().and_then(accept) {
            return Some(m);
        }
    }

    if let Some(e) = busiest.filter(|&e| load[e] > 0) {
        let through = cycles_through_edge(g, e, t, opts.cycle_cap);
        let r = middle_edge_removal(g, e, &through, k, t, Effort::BestEffort).map(|o| o.removed);
        if let Some(m) = r.ok().and_then(accept) {
            return Some(m);
        }
    }
    let p = (p.min(family.len() as u64) as usize).max(k);
    sequence_removal(g, &family, t, p, k, Effort::BestEffort)
        .ok()
        .and_then(accept)
}

fn sequence_removal(
    g: &Graph,
    family: &[Cycle],
    t: u32,
    p: usize,
    k: usize,
    effort: Effort,
) -> Result<EdgeMask, ConstructError> {
    let outcome = build_sequence(g, family, t, p, effort)?;
    let seq: &CycleSeq = &outcome.seq;
    spanner_from_sequence(g, seq, t, k, effort).map(|s| s.removed)
}

/// Lexicographically smallest feasible `k`-subset of `pool` (ascending edge
/// indices), and the number of masks checked.
///
/// Removing more edges never shortens a distance, so any set with an
/// infeasible subset is infeasible. The search therefore drops edges that
/// fail on their own, extends only feasible prefixes, and rejects a prefix
/// that disconnects a component before running the full distance check.
fn search_subsets(
    g: &Graph,
    pool: &[usize],
    k: usize,
    params: SpannerParams,
) -> (Option<EdgeMask>, u64) {
    if k == 0 {
        return (Some(g.empty_mask()), 0);
    }
    let base = g.all_pairs_dist(&g.empty_mask());
    let components = g.components().len();
    let mut verifier = Verifier::new(g, &base, params);
    let mut examined = pool.len() as u64;
    let pool: Vec<usize> = pool
        .iter()
        .copied()
        .filter(|&e| verifier.is_spanner(&EdgeMask::from_edges(g.edge_count(), [e])))
        .collect();
    if pool.len() < k || k > removal_limit(g) {
        return (None, examined);
    }

    let branches = pool.len() - k + 1;
    let counts: Vec<AtomicU64> = (0..branches).map(|_| AtomicU64::new(0)).collect();
    let found = (0..branches)
        .into_par_iter()
        .map_init(
            || Search {
                g,
                pool: &pool,
                k,
                components,
                verifier: Verifier::new(g, &base, params),
                mask: g.empty_mask(),
                examined: 0,
            },
            |s, first| {
                s.mask.clear();
                s.examined = 0;
                s.mask.insert(s.pool[first]);
                let hit = s.extend(first + 1, 1);
                counts[first].store(s.examined, Ordering::Relaxed);
                hit.then(|| (first, s.mask.clone()))
            },
        )
        .find_map_first(|r| r);
    // branches after the winner may or may not have run; count up to it
    let last = found.as_ref().map_or(branches - 1, |(i, _)| *i);
    examined += counts[..=last]
        .iter()
        .map(|c| c.load(Ordering::Relaxed))
        .sum::<u64>();
    (found.map(|(_, m)| m), examined)
}

struct Search<'a> {
    g: &'a Graph,
    pool: &'a [usize],
    k: usize,
    components: usize,
    verifier: Verifier<'a>,
    mask: EdgeMask,
    examined: u64,
}

impl Search<'_> {
    fn extend(&mut self, start: usize, depth: usize) -> bool {
        if depth == self.k {
            return true;
        }
        let end = self.pool.len() + depth + 1 - self.k;
        for i in start..end {
            let e = self.pool[i];
            self.mask.insert(e);
            self.examined += 1;
            if self.keeps_components()
                && self.verifier.is_spanner(&self.mask)
                && self.extend(i + 1, depth + 1)
            {
                return true;
            }
            self.mask.remove(e);
        }
        false
    }

    fn keeps_components(&self) -> bool {
        let n = self.g.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn root(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut count = n;
        for (e, &(u, v)) in self.g.edges().iter().enumerate() {
            if self.mask.contains(e) {
                continue;
            }
            let (a, b) = (root(&mut parent, u), root(&mut parent, v));
            if a != b {
                parent[a] = b;
                count -= 1;
            }
        }
        count == self.components
    }
}
