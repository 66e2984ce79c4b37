use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;

use super::{check_star, sp_forest, ConstructError, CycleSeq, Effort, SpForest};
use crate::candidates::Cycle;
use crate::graph::Graph;
use crate::thresholds::f2;

const NONE: usize = usize::MAX;

/// How the sequence was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceCase {
    /// Some escape path crosses `(3t+1) p` cycle edges; the cycles owning
    /// well-spaced crossings are taken in path order.
    Spaced {
        /// Start of the long escape path.
        vertex: usize,
        /// Input index of the cycle the path leads to.
        target: usize,
        /// Positions along the path of the chosen crossings.
        positions: Vec<usize>,
        /// Path vertex where each chosen crossing starts.
        anchors: Vec<usize>,
    },
    /// Greedy extension avoiding forbidden singles, pairs and triples.
    Greedy(SeqSearchState),
}

/// Bookkeeping of the greedy extension.
///
/// A triple `(C_h, C_i, C_j)` is forbidden when the path from some vertex of
/// `C_h` to `C_i` uses an edge of `C_j`. A pair `(C_h, C_i)` is forbidden when
/// at least `|C| / (3p^2)` cycles complete it to a forbidden triple, and a
/// single cycle when at least `|C| / (3p)` cycles complete it to a forbidden
/// pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeqSearchState {
    pub family_size: usize,
    pub p: usize,
    /// Forbidden single cycles (input indices).
    pub forbidden_singles: Vec<usize>,
    pub forbidden_pair_count: usize,
    /// True when the pair threshold exceeds the largest possible completion
    /// count, so no pair (and hence no single) can be forbidden.
    pub pairs_ruled_out: bool,
    /// False when the single and pair filters were dropped after they
    /// excluded every cycle of a below-threshold family.
    pub density_filters: bool,
    /// Cycles blocked through a forbidden pair with a chosen cycle, per step.
    pub n2: Vec<usize>,
    /// Cycles blocked through a forbidden triple of chosen cycles, per step.
    pub n3: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceOutcome {
    pub seq: CycleSeq,
    /// Input index of each sequence position.
    pub chosen: Vec<usize>,
    pub case: SequenceCase,
}

/// Orders `p` of the given edge-disjoint cycles so that [`check_star`] holds.
///
/// With `Effort::Guaranteed` the family must hold at least
/// `f2(t, p) = 27 (t+2)(3t+1) p^4` cycles.
pub fn build_sequence(
    g: &Graph,
    disjoint: &[Cycle],
    t: u32,
    p: usize,
    effort: Effort,
) -> Result<SequenceOutcome, ConstructError> {
    if p == 0 || t == 0 {
        return Err(ConstructError::InvalidInput(
            "p and t must be positive".into(),
        ));
    }
    let mut owner = vec![NONE; g.edge_count()];
    for (c, cycle) in disjoint.iter().enumerate() {
        if cycle.len() > t as usize + 2 {
            return Err(ConstructError::PreconditionUnmet(format!(
                "cycle {c} is longer than {}",
                t + 2
            )));
        }
        for &e in cycle.edges() {
            if owner[e] != NONE {
                return Err(ConstructError::PreconditionUnmet(format!(
                    "cycles {} and {c} share edge {e}",
                    owner[e]
                )));
            }
            owner[e] = c;
        }
    }
    let need = f2(u64::from(t), p as u64);
    if effort == Effort::Guaranteed && (disjoint.len() as u64) < need {
        return Err(ConstructError::PreconditionUnmet(format!(
            "{} disjoint cycles, need {need}",
            disjoint.len()
        )));
    }
    if disjoint.len() < p {
        return Err(effort.failure(format!(
            "{} cycles cannot fill {p} positions",
            disjoint.len()
        )));
    }

    let spacing = 3 * t as usize + 1;
    let crossing_threshold = spacing * p;
    // Case 1: the first cycle (in input order) with an escape path crossing
    // enough cycle edges. When there is none, every path crosses fewer
    // than `crossing_threshold` cycle edges.
    let long_path = disjoint
        .par_iter()
        .enumerate()
        .map_init(
            || CrossingScan::new(g.vertex_count()),
            |scan, (c, cycle)| {
                scan.first_over(g, cycle, &owner, crossing_threshold)
                    .map(|v| (c, v))
            },
        )
        .find_map_first(|hit| hit);
    let max_crossings = crossing_threshold - 1;

    let outcome = match long_path {
        Some((target, vertex)) => spaced(g, disjoint, &owner, target, vertex, spacing, p),
        None => match greedy(g, disjoint, &owner, t, p, max_crossings, true, effort) {
            Ok(found) => found,
            // below threshold the density filters can exclude everything;
            // avoiding forbidden triples alone is still exactly the ordering
            // condition
            Err(ConstructError::Failed(_)) => {
                greedy(g, disjoint, &owner, t, p, max_crossings, false, effort)?
            }
            Err(e) => return Err(e),
        },
    };
    let (chosen, case) = outcome;
    let seq = CycleSeq::new(g, chosen.iter().map(|&c| disjoint[c].clone()).collect(), t)?;
    if let Err(w) = check_star(&seq) {
        return Err(effort.failure(format!("sequence breaks the ordering condition at {w:?}")));
    }
    Ok(SequenceOutcome { seq, chosen, case })
}

/// Counts cycle edges along the chosen escape paths without materialising
/// the forest. Visits vertices in the same order as [`sp_forest`], so the
/// counts match the forest's paths exactly.
struct CrossingScan {
    count: Vec<usize>,
    queue: Vec<usize>,
}

impl CrossingScan {
    fn new(n: usize) -> Self {
        CrossingScan {
            count: vec![NONE; n],
            queue: Vec::with_capacity(n),
        }
    }

    /// Smallest vertex whose path to `cycle` crosses `threshold` or more
    /// cycle edges.
    fn first_over(
        &mut self,
        g: &Graph,
        cycle: &Cycle,
        owner: &[usize],
        threshold: usize,
    ) -> Option<usize> {
        self.queue.clear();
        let mut roots = cycle.vertices().to_vec();
        roots.sort_unstable();
        for r in roots {
            self.count[r] = 0;
            self.queue.push(r);
        }
        let mut best: Option<usize> = None;
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            if self.count[v] >= threshold && best.is_none_or(|b| v < b) {
                best = Some(v);
            }
            for &(w, e) in g.neighbors(v) {
                if self.count[w] == NONE {
                    self.count[w] = self.count[v] + usize::from(owner[e] != NONE);
                    self.queue.push(w);
                }
            }
        }
        for &v in &self.queue {
            self.count[v] = NONE;
        }
        best
    }
}

fn spaced(
    g: &Graph,
    disjoint: &[Cycle],
    owner: &[usize],
    target: usize,
    vertex: usize,
    spacing: usize,
    p: usize,
) -> (Vec<usize>, SequenceCase) {
    let forest = sp_forest(g, &disjoint[target]);
    let verts = forest.path_vertices(vertex);
    let edges = forest.path_edges(vertex);
    let mut positions: Vec<usize> = Vec::with_capacity(p);
    for (pos, &e) in edges.iter().enumerate() {
        if positions.len() == p {
            break;
        }
        if owner[e] == NONE {
            continue;
        }
        if positions.last().is_none_or(|&last| pos >= last + spacing) {
            positions.push(pos);
        }
    }
    let chosen = positions.iter().map(|&pos| owner[edges[pos]]).collect();
    let anchors = positions.iter().map(|&pos| verts[pos]).collect();
    (
        chosen,
        SequenceCase::Spaced {
            vertex,
            target,
            positions,
            anchors,
        },
    )
}

/// Cycles hit by the chosen paths from the vertices of `from`.
fn completions(forest: &SpForest, from: &Cycle, owner: &[usize]) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for &v in from.vertices() {
        for e in forest.path_edges(v) {
            if owner[e] != NONE {
                out.insert(owner[e]);
            }
        }
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn greedy(
    g: &Graph,
    cycles: &[Cycle],
    owner: &[usize],
    t: u32,
    p: usize,
    max_crossings: usize,
    density_filters: bool,
    effort: Effort,
) -> Result<(Vec<usize>, SequenceCase), ConstructError> {
    let size = cycles.len();
    let pp = 3 * p * p;
    let longest = cycles
        .iter()
        .map(Cycle::len)
        .max()
        .unwrap_or(t as usize + 2);
    // a completion row has at most |V(C_h)| * max_crossings entries
    let pairs_ruled_out = !density_filters || longest * max_crossings * pp < size;

    // forbidden pairs as successor lists
    let mut pair_succ: Vec<Vec<usize>> = vec![Vec::new(); size];
    if !pairs_ruled_out {
        let rows: Vec<Vec<usize>> = (0..size)
            .into_par_iter()
            .map(|i| {
                let forest = sp_forest(g, &cycles[i]);
                (0..size)
                    .filter(|&h| completions(&forest, &cycles[h], owner).len() * pp >= size)
                    .collect()
            })
            .collect();
        for (i, hs) in rows.into_iter().enumerate() {
            for h in hs {
                pair_succ[h].push(i);
            }
        }
    }
    let forbidden_pair_count = pair_succ.iter().map(Vec::len).sum();
    let forbidden_singles: Vec<usize> = (0..size)
        .filter(|&h| !pair_succ[h].is_empty() && pair_succ[h].len() * 3 * p >= size)
        .collect();
    let single_set: HashSet<usize> = forbidden_singles.iter().copied().collect();

    let mut chosen: Vec<usize> = Vec::with_capacity(p);
    let mut blocked_pairs: HashSet<usize> = HashSet::new();
    let mut blocked_triples: HashSet<usize> = HashSet::new();
    let mut n2 = Vec::with_capacity(p);
    let mut n3 = Vec::with_capacity(p);
    while chosen.len() < p {
        n2.push(blocked_pairs.len());
        n3.push(blocked_triples.len());
        let next = (0..size).find(|c| {
            !chosen.contains(c)
                && !single_set.contains(c)
                && !blocked_pairs.contains(c)
                && !blocked_triples.contains(c)
        });
        let Some(next) = next else {
            return Err(effort.failure(format!(
                "no admissible cycle after {} of {p} positions",
                chosen.len()
            )));
        };
        let forest = sp_forest(g, &cycles[next]);
        for &h in &chosen {
            blocked_triples.extend(completions(&forest, &cycles[h], owner));
        }
        blocked_pairs.extend(pair_succ[next].iter().copied());
        chosen.push(next);
    }
    Ok((
        chosen,
        SequenceCase::Greedy(SeqSearchState {
            family_size: size,
            p,
            forbidden_singles,
            forbidden_pair_count,
            pairs_ruled_out,
            density_filters,
            n2,
            n3,
        }),
    ))
}
