//! Immutable simple graphs, edge masks and BFS distance machinery.
//!
//! Vertices and edges are dense indices. Removing edges never mutates a
//! [`Graph`]; callers overlay an [`EdgeMask`] instead, which is what the
//! enumeration code does millions of times over one graph.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;
use thiserror::Error;

/// Distance sentinel for unreachable pairs. Larger than any hop count.
pub const INF: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
}

/// A simple undirected graph with stable edge indices `0..m`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    // (neighbor, edge index), sorted by neighbor
    adj: Vec<Vec<(usize, usize)>>,
    index: HashMap<(usize, usize), usize>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Builds a graph from vertex pairs. Each pair is stored as `(min, max)`;
    /// edge `i` is the `i`-th pair. Self-loops and duplicates are errors.
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(pairs.len());
        let mut index = HashMap::with_capacity(pairs.len());
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in pairs {
            for vertex in [a, b] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { vertex, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let key = (a.min(b), a.max(b));
            if index.contains_key(&key) {
                return Err(GraphError::DuplicateEdge(key.0, key.1));
            }
            let e = edges.len();
            index.insert(key, e);
            edges.push(key);
            adj[key.0].push((key.1, e));
            adj[key.1].push((key.0, e));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges,
            adj,
            index,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of edge `e` as `(smaller, larger)`.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `(neighbor, edge)` pairs of `v`, ascending by neighbor.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_between(&self, a: usize, b: usize) -> Option<usize> {
        self.index.get(&(a.min(b), a.max(b))).copied()
    }

    /// An empty mask sized for this graph.
    pub fn empty_mask(&self) -> EdgeMask {
        EdgeMask::new(self.edge_count())
    }

    /// Hop distances from `source` in the graph minus `mask`. With a cap,
    /// vertices farther than `depth_cap` hops report [`INF`].
    pub fn bfs_dist(&self, source: usize, mask: &EdgeMask, depth_cap: Option<u32>) -> Vec<u32> {
        let mut bfs = Bfs::new(self.n);
        bfs.run(self, source, mask, depth_cap);
        bfs.dist
    }

    /// All-pairs hop distances in the graph minus `mask`, one BFS per vertex.
    pub fn all_pairs_dist(&self, mask: &EdgeMask) -> DistMatrix {
        let mut data = Vec::with_capacity(self.n * self.n);
        let mut bfs = Bfs::new(self.n);
        for s in 0..self.n {
            bfs.run(self, s, mask, None);
            data.extend_from_slice(&bfs.dist);
        }
        DistMatrix { n: self.n, data }
    }

    /// Connected components ordered by their smallest member; each
    /// component's vertices are ascending.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &(w, _) in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Subgraph induced by `vertices`, relabelled `0..len` in the given order.
    /// The second vector maps each new edge index to its index in `self`.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut relabel = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            relabel[v] = i;
        }
        let mut pairs = Vec::new();
        let mut edge_map = Vec::new();
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            if relabel[a] != usize::MAX && relabel[b] != usize::MAX {
                pairs.push((relabel[a], relabel[b]));
                edge_map.push(e);
            }
        }
        let sub = Graph::new(vertices.len(), &pairs).expect("induced subgraph of a simple graph");
        (sub, edge_map)
    }

    /// Edge indices along a vertex walk, or `None` if two consecutive
    /// vertices are not adjacent.
    pub fn walk_edges(&self, walk: &[usize]) -> Option<Vec<usize>> {
        walk.windows(2)
            .map(|w| self.edge_between(w[0], w[1]))
            .collect()
    }

    /// A shortest path from `from` to `to` as a vertex list. Ties go to the
    /// smallest-index parent.
    pub fn shortest_path(&self, from: usize, to: usize) -> Option<Vec<usize>> {
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        parent[from] = from;
        queue.push_back(from);
        while let Some(v) = queue.pop_front() {
            if v == to {
                break;
            }
            for &(w, _) in &self.adj[v] {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        if parent[to] == usize::MAX {
            return None;
        }
        let mut path = vec![to];
        let mut v = to;
        while v != from {
            v = parent[v];
            path.push(v);
        }
        path.reverse();
        Some(path)
    }
}

/// Reusable BFS buffers for hot loops.
#[derive(Debug, Clone)]
pub struct Bfs {
    pub dist: Vec<u32>,
    queue: VecDeque<usize>,
}

impl Bfs {
    pub fn new(n: usize) -> Self {
        Bfs {
            dist: vec![INF; n],
            queue: VecDeque::with_capacity(n),
        }
    }

    /// Fills `self.dist` with distances from `source` avoiding masked edges.
    pub fn run(&mut self, g: &Graph, source: usize, mask: &EdgeMask, depth_cap: Option<u32>) {
        self.dist.clear();
        self.dist.resize(g.vertex_count(), INF);
        self.queue.clear();
        self.dist[source] = 0;
        self.queue.push_back(source);
        let cap = depth_cap.unwrap_or(INF);
        while let Some(v) = self.queue.pop_front() {
            let d = self.dist[v];
            if d >= cap {
                continue;
            }
            for &(w, e) in g.neighbors(v) {
                if self.dist[w] == INF && !mask.contains(e) {
                    self.dist[w] = d + 1;
                    self.queue.push_back(w);
                }
            }
        }
    }
}

/// Dense `n x n` table of hop distances, [`INF`] for disconnected pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistMatrix {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.data[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.data[u * self.n..(u + 1) * self.n]
    }
}

/// A set of removed edges, backed by a bitset sized to the graph's edge count.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeMask {
    bits: FixedBitSet,
}

impl fmt::Debug for EdgeMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl EdgeMask {
    pub fn new(edge_count: usize) -> Self {
        EdgeMask {
            bits: FixedBitSet::with_capacity(edge_count),
        }
    }

    /// Panics if an index is `>= edge_count`.
    pub fn from_edges(edge_count: usize, edges: impl IntoIterator<Item = usize>) -> Self {
        let mut mask = EdgeMask::new(edge_count);
        for e in edges {
            mask.insert(e);
        }
        mask
    }

    /// Number of edges the mask is sized for.
    pub fn capacity(&self) -> usize {
        self.bits.len()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.bits.contains(e)
    }

    pub fn insert(&mut self, e: usize) {
        assert!(e < self.bits.len(), "edge {e} out of range");
        self.bits.insert(e);
    }

    pub fn remove(&mut self, e: usize) {
        self.bits.set(e, false);
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn clear(&mut self) {
        self.bits.clear();
    }

    /// Ascending edge indices.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &EdgeMask) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn union_with(&mut self, other: &EdgeMask) {
        self.bits.union_with(&other.bits);
    }
}
