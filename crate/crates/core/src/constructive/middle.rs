use std::collections::HashSet;

use super::{find_disjoint_paths, ConstructError, DisjointPathsResult, Effort, PathFamily};
use crate::candidates::Cycle;
use crate::graph::{EdgeMask, Graph};
use crate::thresholds::f1;
use crate::verify::{verify, SpannerParams};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MiddleEdgeOutcome {
    pub removed: EdgeMask,
    /// The `k + t + 1` disjoint detours the middle edges were cut from.
    pub detours: DisjointPathsResult,
    /// One middle edge per chosen detour, in detour order.
    pub middle_edges: Vec<usize>,
}

/// Removal set for an edge lying on many short cycles.
///
/// The cycles through `e = uv`, minus `e`, form a family of short `u`-`v`
/// paths. From it we extract `k + t + 1` edge-disjoint `u'`-`v'` detours,
/// drop the ones touching `e` or the shortest paths `u -> u'` and `v -> v'`,
/// and cut the middle edge of `k` survivors: a detour of length `L` keeps
/// `floor((L - 1) / 2)` edges before the cut and `ceil((L - 1) / 2)` after.
pub fn middle_edge_removal(
    g: &Graph,
    e: usize,
    cycles_through_e: &[Cycle],
    k: usize,
    t: u32,
    effort: Effort,
) -> Result<MiddleEdgeOutcome, ConstructError> {
    if k == 0 || t == 0 {
        return Err(ConstructError::InvalidInput(
            "k and t must be positive".into(),
        ));
    }
    if e >= g.edge_count() {
        return Err(ConstructError::InvalidInput(format!("no edge {e}")));
    }
    for c in cycles_through_e {
        if !c.contains_edge(e) || c.len() > t as usize + 2 {
            return Err(ConstructError::PreconditionUnmet(format!(
                "cycle {:?} must contain edge {e} and have length at most {}",
                c.vertices(),
                t + 2
            )));
        }
    }
    let distinct: HashSet<&Cycle> = cycles_through_e.iter().collect();
    let want = k + t as usize + 1;
    let need = f1(want as u64, u64::from(t) + 1);
    if effort == Effort::Guaranteed && (distinct.len() as u64) < need {
        return Err(ConstructError::PreconditionUnmet(format!(
            "{} cycles through edge {e}, need {need}",
            distinct.len()
        )));
    }

    let (u, v) = g.endpoints(e);
    let family = PathFamily {
        source: u,
        target: v,
        max_len: t as usize + 1,
        paths: cycles_through_e
            .iter()
            .map(|c| c.path_without(g, e).unwrap())
            .collect(),
    };
    let detours = find_disjoint_paths(g, &family, want, effort)?;

    let mut forbidden: HashSet<usize> = HashSet::from([e]);
    for (from, to) in [(u, detours.source), (v, detours.target)] {
        let q = g.shortest_path(from, to).expect("endpoints are connected");
        forbidden.extend(g.walk_edges(&q).unwrap());
    }

    let mut removed = g.empty_mask();
    let mut middle_edges = Vec::with_capacity(k);
    for path in &detours.paths {
        if middle_edges.len() == k {
            break;
        }
        let edges = g.walk_edges(path).unwrap();
        if edges.iter().any(|f| forbidden.contains(f)) {
            continue;
        }
        let cut = edges[(edges.len() - 1) / 2];
        middle_edges.push(cut);
        removed.insert(cut);
    }
    if middle_edges.len() < k {
        return Err(effort.failure(format!(
            "only {} detours avoid the connecting paths",
            middle_edges.len()
        )));
    }
    if let Err(viol) = verify(g, &removed, SpannerParams::Additive(t)) {
        return Err(effort.failure(format!("middle edges violate the stretch: {viol:?}")));
    }
    Ok(MiddleEdgeOutcome {
        removed,
        detours,
        middle_edges,
    })
}
