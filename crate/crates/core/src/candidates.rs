//! Short cycles and the candidate edge set.
//!
//! An edge can only ever be removed if it lies on a cycle of length at most
//! `t + 2`; that set of edges is the candidate set `F`.

use std::collections::VecDeque;
use std::ops::ControlFlow;

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{EdgeMask, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error("a cycle needs at least 3 vertices, got {0}")]
    TooShort(usize),
    #[error("vertex {0} repeats in the cycle")]
    RepeatedVertex(usize),
    #[error("({0}, {1}) is not an edge")]
    MissingEdge(usize, usize),
}

/// A simple cycle stored in canonical rotation: smallest vertex first, then
/// the orientation whose second vertex is smaller.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    vertices: Vec<usize>,
    // edges[i] joins vertices[i] and vertices[(i + 1) % len]
    edges: Vec<usize>,
}

impl Cycle {
    pub fn new(g: &Graph, vertices: &[usize]) -> Result<Self, CycleError> {
        let len = vertices.len();
        if len < 3 {
            return Err(CycleError::TooShort(len));
        }
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(CycleError::RepeatedVertex(w[0]));
        }
        let start = (0..len).min_by_key(|&i| vertices[i]).unwrap();
        let mut canon: Vec<usize> = (0..len).map(|i| vertices[(start + i) % len]).collect();
        if canon[1] > canon[len - 1] {
            canon[1..].reverse();
        }
        let mut edges = Vec::with_capacity(len);
        for i in 0..len {
            let (a, b) = (canon[i], canon[(i + 1) % len]);
            edges.push(g.edge_between(a, b).ok_or(CycleError::MissingEdge(a, b))?);
        }
        Ok(Cycle {
            vertices: canon,
            edges,
        })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn contains_edge(&self, e: usize) -> bool {
        self.edges.contains(&e)
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn shares_edge(&self, other: &Cycle) -> bool {
        self.edges.iter().any(|e| other.edges.contains(e))
    }

    /// The cycle minus edge `e`, as a vertex path from `e`'s smaller endpoint
    /// to its larger one. `None` if `e` is not on the cycle.
    pub fn path_without(&self, g: &Graph, e: usize) -> Option<Vec<usize>> {
        let pos = self.edges.iter().position(|&x| x == e)?;
        let len = self.len();
        let (u, _) = g.endpoints(e);
        // edge `pos` joins vertices[pos] and vertices[pos + 1]
        let (a, b) = (pos, (pos + 1) % len);
        let mut path = Vec::with_capacity(len);
        if self.vertices[a] == u {
            // walk backwards from a to b
            for i in 0..len {
                path.push(self.vertices[(a + len - i) % len]);
            }
        } else {
            for i in 0..len {
                path.push(self.vertices[(b + i) % len]);
            }
        }
        Some(path)
    }
}

/// Edges lying on some cycle of length at most `t + 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateSet {
    pub edges: EdgeMask,
    pub t: u32,
}

impl CandidateSet {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// `e = uv` is a candidate iff `G - e` has a `u`-`v` path of length `<= t + 1`.
/// Checked per edge with a BFS truncated at depth `t + 1`.
pub fn candidate_edges(g: &Graph, t: u32) -> CandidateSet {
    let cap = t as usize + 1;
    let hits: Vec<usize> = (0..g.edge_count())
        .into_par_iter()
        .map_init(
            || {
                (
                    vec![usize::MAX; g.vertex_count()],
                    VecDeque::new(),
                    Vec::new(),
                )
            },
            |(dist, queue, touched), e| {
                let found = reroute_within(g, e, cap, dist, queue, touched);
                found.then_some(e)
            },
        )
        .flatten()
        .collect();
    CandidateSet {
        edges: EdgeMask::from_edges(g.edge_count(), hits),
        t,
    }
}

fn reroute_within(
    g: &Graph,
    e: usize,
    cap: usize,
    dist: &mut [usize],
    queue: &mut VecDeque<usize>,
    touched: &mut Vec<usize>,
) -> bool {
    let (u, v) = g.endpoints(e);
    queue.clear();
    dist[u] = 0;
    touched.push(u);
    queue.push_back(u);
    let mut found = false;
    'bfs: while let Some(x) = queue.pop_front() {
        let d = dist[x];
        if d >= cap {
            continue;
        }
        for &(y, f) in g.neighbors(x) {
            if f == e || dist[y] != usize::MAX {
                continue;
            }
            if y == v {
                found = true;
                break 'bfs;
            }
            dist[y] = d + 1;
            touched.push(y);
            queue.push_back(y);
        }
    }
    for x in touched.drain(..) {
        dist[x] = usize::MAX;
    }
    found
}

/// Streams every cycle of length `<= t + 2` once, in canonical order: by
/// smallest vertex, then depth-first with ascending neighbours.
pub fn for_each_short_cycle<F>(g: &Graph, t: u32, mut visit: F)
where
    F: FnMut(&Cycle) -> ControlFlow<()>,
{
    let max_len = t as usize + 2;
    let mut on_path = vec![false; g.vertex_count()];
    let mut path = Vec::with_capacity(max_len);
    for s in 0..g.vertex_count() {
        path.clear();
        path.push(s);
        on_path[s] = true;
        let flow = extend(g, s, max_len, &mut path, &mut on_path, &mut visit);
        on_path[s] = false;
        if flow.is_break() {
            return;
        }
    }
}

fn extend<F>(
    g: &Graph,
    s: usize,
    max_len: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&Cycle) -> ControlFlow<()>,
{
    let last = *path.last().unwrap();
    for &(w, _) in g.neighbors(last) {
        if w < s {
            continue;
        }
        if w == s {
            if path.len() >= 3 && path[1] < last {
                let cycle = Cycle::new(g, path).expect("dfs path closes a cycle");
                visit(&cycle)?;
            }
            continue;
        }
        if on_path[w] || path.len() == max_len {
            continue;
        }
        on_path[w] = true;
        path.push(w);
        let flow = extend(g, s, max_len, path, on_path, visit);
        path.pop();
        on_path[w] = false;
        flow?;
    }
    ControlFlow::Continue(())
}

/// Distinct cycles of length `<= t + 2`, at most `cap` of them.
pub fn enumerate_short_cycles(g: &Graph, t: u32, cap: usize) -> Vec<Cycle> {
    let mut out = Vec::new();
    if cap == 0 {
        return out;
    }
    for_each_short_cycle(g, t, |c| {
        out.push(c.clone());
        if out.len() >= cap {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    out
}

/// Cycles of length `<= t + 2` through edge `e`, at most `cap` of them,
/// ordered by the detour path they take from `e`'s smaller endpoint.
pub fn cycles_through_edge(g: &Graph, e: usize, t: u32, cap: usize) -> Vec<Cycle> {
    let (u, v) = g.endpoints(e);
    let max_edges = t as usize + 1;
    let mut out = Vec::new();
    let mut on_path = vec![false; g.vertex_count()];
    let mut path = vec![u];
    on_path[u] = true;
    detours(g, e, v, max_edges, cap, &mut path, &mut on_path, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn detours(
    g: &Graph,
    e: usize,
    target: usize,
    max_edges: usize,
    cap: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<Cycle>,
) {
    let last = *path.last().unwrap();
    for &(w, f) in g.neighbors(last) {
        if out.len() >= cap {
            return;
        }
        if f == e || on_path[w] {
            continue;
        }
        if w == target {
            path.push(w);
            out.push(Cycle::new(g, path).expect("detour closes a cycle"));
            path.pop();
            continue;
        }
        if path.len() < max_edges {
            on_path[w] = true;
            path.push(w);
            detours(g, e, target, max_edges, cap, path, on_path, out);
            path.pop();
            on_path[w] = false;
        }
    }
}

/// Greedy edge-disjoint subfamily in input order, stopping at `target`.
pub fn greedy_edge_disjoint(cycles: &[Cycle], target: usize) -> Vec<Cycle> {
    let mut used = std::collections::HashSet::new();
    let mut out = Vec::new();
    for c in cycles {
        if out.len() >= target {
            break;
        }
        if c.edges().iter().any(|e| used.contains(e)) {
            continue;
        }
        used.extend(c.edges().iter().copied());
        out.push(c.clone());
    }
    out
}
