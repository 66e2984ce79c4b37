use std::collections::VecDeque;

use super::ConstructError;
use crate::candidates::Cycle;
use crate::graph::{EdgeMask, Graph, INF};

const NONE: usize = usize::MAX;

/// Shortest paths from every vertex to a cycle, as a multi-source BFS tree
/// rooted at the cycle's vertices. Ties go to the smallest-index parent, so
/// the union of the chosen paths is a forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpForest {
    parent: Vec<usize>,
    parent_edge: Vec<usize>,
    dist: Vec<u32>,
    /// Reachable vertices in BFS order.
    order: Vec<usize>,
}

pub fn sp_forest(g: &Graph, cycle: &Cycle) -> SpForest {
    let n = g.vertex_count();
    let mut parent = vec![NONE; n];
    let mut parent_edge = vec![NONE; n];
    let mut dist = vec![INF; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::new();
    let mut roots = cycle.vertices().to_vec();
    roots.sort_unstable();
    for r in roots {
        dist[r] = 0;
        parent[r] = r;
        queue.push_back(r);
    }
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &(w, e) in g.neighbors(v) {
            if dist[w] == INF {
                dist[w] = dist[v] + 1;
                parent[w] = v;
                parent_edge[w] = e;
                queue.push_back(w);
            }
        }
    }
    SpForest {
        parent,
        parent_edge,
        dist,
        order,
    }
}

impl SpForest {
    /// Length of the chosen path from `v`, `None` if `v` cannot reach the cycle.
    pub fn dist(&self, v: usize) -> Option<u32> {
        (self.dist[v] != INF).then_some(self.dist[v])
    }

    pub fn is_reachable(&self, v: usize) -> bool {
        self.dist[v] != INF
    }

    /// Edges of the chosen path from `v` to the cycle, starting at `v`.
    pub fn path_edges(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        if !self.is_reachable(v) {
            return out;
        }
        let mut x = v;
        while self.parent[x] != x {
            out.push(self.parent_edge[x]);
            x = self.parent[x];
        }
        out
    }

    /// Vertices of the chosen path, `v` first and a cycle vertex last.
    pub fn path_vertices(&self, v: usize) -> Vec<usize> {
        if !self.is_reachable(v) {
            return Vec::new();
        }
        let mut out = vec![v];
        let mut x = v;
        while self.parent[x] != x {
            x = self.parent[x];
            out.push(x);
        }
        out
    }

    /// Parent pointer and the edge to it; `None` at roots and unreachable vertices.
    pub fn parent(&self, v: usize) -> Option<(usize, usize)> {
        (self.is_reachable(v) && self.parent[v] != v).then(|| (self.parent[v], self.parent_edge[v]))
    }

    /// Reachable vertices, roots first, parents before children.
    pub fn bfs_order(&self) -> &[usize] {
        &self.order
    }

    /// Union of all chosen paths.
    pub fn edge_set(&self, edge_count: usize) -> EdgeMask {
        EdgeMask::from_edges(
            edge_count,
            self.order
                .iter()
                .filter_map(|&v| self.parent(v).map(|(_, e)| e)),
        )
    }
}

/// Ordered, pairwise edge-disjoint short cycles together with their forests.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSeq {
    cycles: Vec<Cycle>,
    forests: Vec<SpForest>,
}

impl CycleSeq {
    /// Checks the cycles are pairwise edge-disjoint and of length at most
    /// `t + 2`, then computes one forest per cycle.
    pub fn new(g: &Graph, cycles: Vec<Cycle>, t: u32) -> Result<Self, ConstructError> {
        let mut used = EdgeMask::new(g.edge_count());
        for c in &cycles {
            if c.len() > t as usize + 2 {
                return Err(ConstructError::InvalidInput(format!(
                    "cycle {:?} is longer than {}",
                    c.vertices(),
                    t + 2
                )));
            }
            for &e in c.edges() {
                if e >= g.edge_count() || used.contains(e) {
                    return Err(ConstructError::InvalidInput(format!(
                        "cycle {:?} shares edge {e} with an earlier cycle",
                        c.vertices()
                    )));
                }
                used.insert(e);
            }
        }
        let forests = cycles.iter().map(|c| sp_forest(g, c)).collect();
        Ok(CycleSeq { cycles, forests })
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn forests(&self) -> &[SpForest] {
        &self.forests
    }

    pub fn into_cycles(self) -> Vec<Cycle> {
        self.cycles
    }
}

/// Positions `h < i < j` and a vertex `v` of cycle `h` whose chosen path to
/// cycle `i` uses an edge of cycle `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct StarWitness {
    pub h: usize,
    pub i: usize,
    pub j: usize,
    pub v: usize,
}

/// For all `h < i < j` and every vertex `v` of `C_h`, the chosen path from
/// `v` to `C_i` must avoid the edges of `C_j`. Returns the lexicographically
/// smallest `(h, i, j, v)` breaking this. Vertices that cannot reach `C_i`
/// satisfy it vacuously.
pub fn check_star(seq: &CycleSeq) -> Result<(), StarWitness> {
    let p = seq.len();
    let mut owner = std::collections::HashMap::new();
    for (j, c) in seq.cycles.iter().enumerate() {
        for &e in c.edges() {
            owner.insert(e, j);
        }
    }
    for h in 0..p {
        let mut from: Vec<usize> = seq.cycles[h].vertices().to_vec();
        from.sort_unstable();
        for i in h + 1..p {
            let forest = &seq.forests[i];
            // smallest offending j, then smallest v for it
            let mut best: Option<(usize, usize)> = None;
            for &v in &from {
                for e in forest.path_edges(v) {
                    if let Some(&j) = owner.get(&e) {
                        if j > i && best.is_none_or(|b| (j, v) < b) {
                            best = Some((j, v));
                        }
                    }
                }
            }
            if let Some((j, v)) = best {
                return Err(StarWitness { h, i, j, v });
            }
        }
    }
    Ok(())
}
