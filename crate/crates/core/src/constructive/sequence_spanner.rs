use std::collections::BTreeSet;

use super::{check_star, ConstructError, CycleSeq, Effort};
use crate::graph::{EdgeMask, Graph};
use crate::thresholds::f3;
use crate::verify::{verify, SpannerParams};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceSpanner {
    pub removed: EdgeMask,
    /// `(sequence position, removed edge)` per step.
    pub picks: Vec<(usize, usize)>,
    /// `|I_i|` after each step `i = 1..=k`, where `I_i` are the positions
    /// still eligible.
    pub eligible_sizes: Vec<usize>,
}

/// Picks one edge from each of `k` cycles of a sequence satisfying
/// [`check_star`].
///
/// Position `i` is safe for edge `e` when `e` lies on none of the chosen
/// paths towards cycle `i`. Each step takes the first still-eligible cycle and
/// removes the edge of it that keeps the most later positions eligible.
/// With `Effort::Guaranteed` the sequence must be at least
/// `f3(t, k) = k (t+2)^(k-1)` long, and `|I_i| >= (k-i)(t+2)^(k-i-1)` is
/// checked after every step.
pub fn spanner_from_sequence(
    g: &Graph,
    seq: &CycleSeq,
    t: u32,
    k: usize,
    effort: Effort,
) -> Result<SequenceSpanner, ConstructError> {
    if k == 0 || t == 0 {
        return Err(ConstructError::InvalidInput(
            "k and t must be positive".into(),
        ));
    }
    if let Some(c) = seq.cycles().iter().find(|c| c.len() > t as usize + 2) {
        return Err(ConstructError::PreconditionUnmet(format!(
            "cycle {:?} is longer than {}",
            c.vertices(),
            t + 2
        )));
    }
    if let Err(w) = check_star(seq) {
        return Err(ConstructError::PreconditionUnmet(format!(
            "sequence breaks the ordering condition at {w:?}"
        )));
    }
    let p = seq.len();
    let need = f3(u64::from(t), k as u64);
    if effort == Effort::Guaranteed && (p as u64) < need {
        return Err(ConstructError::PreconditionUnmet(format!(
            "sequence of {p} cycles, need {need}"
        )));
    }

    let tree_edges: Vec<EdgeMask> = seq
        .forests()
        .iter()
        .map(|f| f.edge_set(g.edge_count()))
        .collect();
    let safe_positions =
        |e: usize| -> BTreeSet<usize> { (0..p).filter(|&i| !tree_edges[i].contains(e)).collect() };

    let mut eligible: BTreeSet<usize> = (0..p).collect();
    let mut removed = g.empty_mask();
    let mut picks = Vec::with_capacity(k);
    let mut eligible_sizes = Vec::with_capacity(k);
    let width = u64::from(t) + 2;
    for step in 1..=k {
        let Some(&ind) = eligible.first() else {
            return Err(effort.failure(format!("no eligible cycle left at step {step}")));
        };
        eligible.remove(&ind);
        let mut best: Option<(usize, BTreeSet<usize>)> = None;
        let mut edges = seq.cycles()[ind].edges().to_vec();
        edges.sort_unstable();
        for e in edges {
            let kept: BTreeSet<usize> =
                eligible.intersection(&safe_positions(e)).copied().collect();
            if best.as_ref().is_none_or(|(_, b)| kept.len() > b.len()) {
                best = Some((e, kept));
            }
        }
        let (e, kept) = best.expect("cycles have edges");
        eligible = kept;
        removed.insert(e);
        picks.push((ind, e));
        eligible_sizes.push(eligible.len());

        if effort == Effort::Guaranteed && step < k {
            let rest = (k - step) as u64;
            let floor = rest.saturating_mul(width.saturating_pow((rest - 1) as u32));
            if (eligible.len() as u64) < floor {
                return Err(ConstructError::InternalAssertionFailed(format!(
                    "|I_{step}| = {} below {floor}",
                    eligible.len()
                )));
            }
        }
    }
    if let Err(viol) = verify(g, &removed, SpannerParams::Additive(t)) {
        return Err(ConstructError::InternalAssertionFailed(format!(
            "removal along an ordered sequence violates the stretch: {viol:?}"
        )));
    }
    Ok(SequenceSpanner {
        removed,
        picks,
        eligible_sizes,
    })
}
