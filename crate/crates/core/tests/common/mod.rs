//! Test-side references, written without the library's distance code.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use additive_spanner::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const UNREACHABLE: usize = usize::MAX;

/// Plain BFS over an edge list, skipping the edges whose index is in `skip`.
pub fn ref_dist(n: usize, edges: &[(usize, usize)], skip: &HashSet<usize>, s: usize) -> Vec<usize> {
    let mut adj = vec![Vec::new(); n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        if !skip.contains(&i) {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    let mut dist = vec![UNREACHABLE; n];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if dist[y] == UNREACHABLE {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

/// Additive check done the slow way: every pair, fresh BFS.
pub fn ref_is_additive_spanner(g: &Graph, removed: &[usize], t: usize) -> bool {
    let skip: HashSet<usize> = removed.iter().copied().collect();
    let none = HashSet::new();
    (0..g.vertex_count()).all(|s| {
        let dg = ref_dist(g.vertex_count(), g.edges(), &none, s);
        let dh = ref_dist(g.vertex_count(), g.edges(), &skip, s);
        dg.iter()
            .zip(&dh)
            .all(|(&a, &b)| a == UNREACHABLE || (b != UNREACHABLE && b <= a + t))
    })
}

/// `e = uv` lies on a cycle of length `<= t + 2` iff `G - e` joins `u` and
/// `v` within `t + 1` steps.
pub fn ref_is_candidate(g: &Graph, e: usize, t: usize) -> bool {
    let (u, v) = g.edges()[e];
    let d = ref_dist(g.vertex_count(), g.edges(), &HashSet::from([e]), u)[v];
    d != UNREACHABLE && d <= t + 1
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    Graph::new(n, &pairs).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn connected(n: usize, pairs: &[(usize, usize)]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for &(a, b) in pairs {
            for (p, q) in [(a, b), (b, a)] {
                if p == x && !seen[q] {
                    seen[q] = true;
                    stack.push(q);
                }
            }
        }
    }
    seen.iter().all(|&s| s)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// One representative of every connected simple graph on `n` vertices, up to
/// isomorphism. Brute force: a labelled graph is kept when its edge bitmask
/// is the smallest over all relabellings.
pub fn connected_catalog(n: usize) -> Vec<Graph> {
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut slot_of = vec![vec![0usize; n]; n];
    for (i, &(u, v)) in slots.iter().enumerate() {
        slot_of[u][v] = i;
        slot_of[v][u] = i;
    }
    let perms = permutations(n);
    let mut out = Vec::new();
    for bits in 0u32..(1u32 << slots.len()) {
        let pairs: Vec<_> = (0..slots.len())
            .filter(|&i| bits >> i & 1 == 1)
            .map(|i| slots[i])
            .collect();
        if n > 1 && !connected(n, &pairs) {
            continue;
        }
        let minimal = perms.iter().all(|pi| {
            let image = pairs
                .iter()
                .fold(0u32, |acc, &(u, v)| acc | 1 << slot_of[pi[u]][pi[v]]);
            image >= bits
        });
        if minimal {
            out.push(Graph::new(n, &pairs).unwrap());
        }
    }
    out
}

/// Catalogs for `n = 1..=max_n`, concatenated.
pub fn catalog_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(connected_catalog).collect()
}
