use std::collections::{BTreeMap, BTreeSet, HashSet};

use super::{ConstructError, Effort};
use crate::graph::{EdgeMask, Graph, INF};
use crate::thresholds::f1;

/// Paths from `source` to `target`, each of length at most `max_len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathFamily {
    pub source: usize,
    pub target: usize,
    pub max_len: usize,
    /// Vertex sequences starting at `source` and ending at `target`.
    pub paths: Vec<Vec<usize>>,
}

/// `k` pairwise edge-disjoint paths between a new pair of endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjointPathsResult {
    pub source: usize,
    pub target: usize,
    pub paths: Vec<Vec<usize>>,
    /// `max_len - dist(old source, source) - dist(old target, target)`;
    /// every path is at most this long.
    pub residual_bound: usize,
    /// How many times the family was split at a heavy edge.
    pub splits: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Path {
    vertices: Vec<usize>,
    edges: Vec<usize>,
}

impl Path {
    fn len(&self) -> usize {
        self.edges.len()
    }
}

struct Found {
    source: usize,
    target: usize,
    paths: Vec<Path>,
    splits: usize,
}

/// Extracts `k` edge-disjoint paths from a large family of short paths.
///
/// If no edge lies on `f1(k, l) / (k l)` or more paths of the family, the
/// paths are taken greedily and the endpoints stay put. Otherwise the family
/// is split at the smallest-indexed heavy edge `xy` into
/// prefixes ending at `x` and suffixes starting at `x`, and one side (which
/// is again large enough for its shorter length bound) is solved recursively.
pub fn find_disjoint_paths(
    g: &Graph,
    family: &PathFamily,
    k: usize,
    effort: Effort,
) -> Result<DisjointPathsResult, ConstructError> {
    let paths = validate(g, family)?;
    if k == 0 {
        return Err(ConstructError::InvalidInput("k must be positive".into()));
    }
    let need = f1(k as u64, family.max_len as u64);
    if effort == Effort::Guaranteed && (paths.len() as u64) < need {
        return Err(ConstructError::InsufficientPaths {
            have: paths.len(),
            need,
        });
    }
    let found = match effort {
        Effort::Guaranteed => {
            guaranteed(g, family.source, family.target, paths, family.max_len, k)?
        }
        Effort::BestEffort => {
            best_effort(g, family.source, family.target, paths, family.max_len, k, 3).ok_or_else(
                || ConstructError::Failed(format!("no {k} edge-disjoint paths found")),
            )?
        }
    };

    let from_source = g.bfs_dist(family.source, &g.empty_mask(), None)[found.source];
    let from_target = g.bfs_dist(family.target, &g.empty_mask(), None)[found.target];
    debug_assert!(from_source != INF && from_target != INF);
    let residual = family.max_len as i64 - i64::from(from_source) - i64::from(from_target);
    let result = DisjointPathsResult {
        source: found.source,
        target: found.target,
        residual_bound: residual.max(0) as usize,
        paths: found.paths.into_iter().map(|p| p.vertices).collect(),
        splits: found.splits,
    };
    check_result(g, &result, k, residual)?;
    Ok(result)
}

fn validate(g: &Graph, family: &PathFamily) -> Result<Vec<Path>, ConstructError> {
    let bad = |msg: String| Err(ConstructError::InvalidInput(msg));
    if family.source == family.target {
        return bad("endpoints must differ".into());
    }
    if family.max_len == 0 {
        return bad("length bound must be positive".into());
    }
    for verts in &family.paths {
        if verts.first() != Some(&family.source) || verts.last() != Some(&family.target) {
            return bad(format!("path {verts:?} has the wrong endpoints"));
        }
        if verts.len() - 1 > family.max_len {
            return bad(format!("path {verts:?} exceeds length {}", family.max_len));
        }
        let distinct: HashSet<_> = verts.iter().collect();
        if distinct.len() != verts.len() {
            return bad(format!("path {verts:?} is not simple"));
        }
        if g.walk_edges(verts).is_none() {
            return bad(format!("path {verts:?} uses a non-edge"));
        }
    }
    // input order is kept; duplicates are dropped
    let mut out = Vec::with_capacity(family.paths.len());
    let mut emitted = HashSet::new();
    for verts in &family.paths {
        if emitted.insert(verts.clone()) {
            let edges = g.walk_edges(verts).unwrap();
            out.push(Path {
                vertices: verts.clone(),
                edges,
            });
        }
    }
    Ok(out)
}

fn check_result(
    g: &Graph,
    result: &DisjointPathsResult,
    k: usize,
    residual: i64,
) -> Result<(), ConstructError> {
    let fail = |msg: String| Err(ConstructError::InternalAssertionFailed(msg));
    if result.paths.len() != k {
        return fail(format!("expected {k} paths, got {}", result.paths.len()));
    }
    let mut used = EdgeMask::new(g.edge_count());
    for p in &result.paths {
        if p.first() != Some(&result.source) || p.last() != Some(&result.target) {
            return fail(format!("path {p:?} has the wrong endpoints"));
        }
        if (p.len() - 1) as i64 > residual {
            return fail(format!(
                "path {p:?} is longer than the residual bound {residual}"
            ));
        }
        for e in g.walk_edges(p).unwrap() {
            if used.contains(e) {
                return fail(format!("edge {e} is shared"));
            }
            used.insert(e);
        }
    }
    Ok(())
}

fn greedy(paths: &[Path], k: usize) -> Vec<Path> {
    let mut used = HashSet::new();
    let mut out = Vec::new();
    for p in paths {
        if out.len() == k {
            break;
        }
        if p.edges.iter().any(|e| used.contains(e)) {
            continue;
        }
        used.extend(p.edges.iter().copied());
        out.push(p.clone());
    }
    out
}

fn edge_loads(paths: &[Path]) -> BTreeMap<usize, usize> {
    let mut load = BTreeMap::new();
    for p in paths {
        for &e in &p.edges {
            *load.entry(e).or_insert(0) += 1;
        }
    }
    load
}

type ByLength = BTreeMap<usize, Vec<Path>>;

/// Prefixes `u..x` and suffixes `x..v` of the paths through `heavy`, grouped
/// by length and deduplicated.
fn split_at(
    g: &Graph,
    u: usize,
    v: usize,
    paths: &[Path],
    heavy: usize,
) -> (usize, ByLength, ByLength) {
    let (a, b) = g.endpoints(heavy);
    let x = if a != u && a != v { a } else { b };
    let mut prefixes: BTreeMap<usize, BTreeSet<Path>> = BTreeMap::new();
    let mut suffixes: BTreeMap<usize, BTreeSet<Path>> = BTreeMap::new();
    for p in paths.iter().filter(|p| p.edges.contains(&heavy)) {
        let pos = p.vertices.iter().position(|&w| w == x).unwrap();
        let pre = Path {
            vertices: p.vertices[..=pos].to_vec(),
            edges: p.edges[..pos].to_vec(),
        };
        let suf = Path {
            vertices: p.vertices[pos..].to_vec(),
            edges: p.edges[pos..].to_vec(),
        };
        prefixes.entry(pre.len()).or_default().insert(pre);
        suffixes.entry(suf.len()).or_default().insert(suf);
    }
    let collect = |m: BTreeMap<usize, BTreeSet<Path>>| {
        m.into_iter()
            .map(|(len, set)| (len, set.into_iter().collect()))
            .collect()
    };
    (x, collect(prefixes), collect(suffixes))
}

fn guaranteed(
    g: &Graph,
    u: usize,
    v: usize,
    paths: Vec<Path>,
    max_len: usize,
    k: usize,
) -> Result<Found, ConstructError> {
    let need = f1(k as u64, max_len as u64);
    if (paths.len() as u64) < need {
        return Err(ConstructError::InternalAssertionFailed(format!(
            "family of {} paths below f1 = {need} at length {max_len}",
            paths.len()
        )));
    }
    let kl = (k * max_len) as u128;
    let heavy = edge_loads(&paths)
        .into_iter()
        .find(|&(_, load)| load as u128 * kl >= u128::from(need))
        .map(|(e, _)| e);

    let Some(heavy) = heavy else {
        let chosen = greedy(&paths, k);
        if chosen.len() < k {
            return Err(ConstructError::InternalAssertionFailed(format!(
                "greedy found {} of {k} disjoint paths with no heavy edge",
                chosen.len()
            )));
        }
        return Ok(Found {
            source: u,
            target: v,
            paths: chosen,
            splits: 0,
        });
    };

    let (x, prefixes, suffixes) = split_at(g, u, v, &paths, heavy);
    let size = |m: &BTreeMap<usize, Vec<Path>>, len: usize| m.get(&len).map_or(0, Vec::len) as u128;
    for i in 1..max_len {
        for j in 1..=max_len - i {
            let (fi, fj) = (f1(k as u64, i as u64), f1(k as u64, j as u64));
            if size(&prefixes, i) * size(&suffixes, j) < u128::from(fi) * u128::from(fj) {
                continue;
            }
            let mut found = if size(&prefixes, i) >= u128::from(fi) {
                guaranteed(g, u, x, prefixes[&i].clone(), i, k)?
            } else {
                guaranteed(g, x, v, suffixes[&j].clone(), j, k)?
            };
            found.splits += 1;
            return Ok(found);
        }
    }
    Err(ConstructError::InternalAssertionFailed(format!(
        "heavy edge {heavy} gave no large enough prefix or suffix family"
    )))
}

fn best_effort(
    g: &Graph,
    u: usize,
    v: usize,
    paths: Vec<Path>,
    max_len: usize,
    k: usize,
    breadth: usize,
) -> Option<Found> {
    let chosen = greedy(&paths, k);
    if chosen.len() == k {
        return Some(Found {
            source: u,
            target: v,
            paths: chosen,
            splits: 0,
        });
    }
    if max_len <= 1 {
        return None;
    }
    let mut loads: Vec<(usize, usize)> = edge_loads(&paths)
        .into_iter()
        .filter(|&(_, load)| load >= k.max(2))
        .collect();
    loads.sort_by_key(|&(e, load)| (std::cmp::Reverse(load), e));
    for &(heavy, _) in loads.iter().take(breadth) {
        let (x, prefixes, suffixes) = split_at(g, u, v, &paths, heavy);
        let mut options: Vec<(usize, usize, usize, Vec<Path>)> = Vec::new();
        for (len, fam) in prefixes {
            options.push((u, x, len, fam));
        }
        for (len, fam) in suffixes {
            options.push((x, v, len, fam));
        }
        options.retain(|o| o.3.len() >= k);
        options.sort_by_key(|o| std::cmp::Reverse(o.3.len()));
        for (a, b, len, fam) in options {
            if let Some(mut found) = best_effort(g, a, b, fam, len, k, breadth) {
                found.splits += 1;
                return Some(found);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    // u = 0, v = 1, middles 2..2+k
    fn k2k(k: usize) -> (Graph, PathFamily) {
        let mut pairs = Vec::new();
        for m in 2..2 + k {
            pairs.push((0, m));
            pairs.push((m, 1));
        }
        let g = Graph::new(2 + k, &pairs).unwrap();
        let paths = (2..2 + k).map(|m| vec![0, m, 1]).collect();
        (
            g,
            PathFamily {
                source: 0,
                target: 1,
                max_len: 2,
                paths,
            },
        )
    }

    // u = 0, x = 2, v = 1, middles 3..3+count; paths 0-2-m-1
    fn bundle(count: usize) -> (Graph, PathFamily) {
        let mut pairs = vec![(0, 2)];
        for m in 3..3 + count {
            pairs.push((2, m));
            pairs.push((m, 1));
        }
        let g = Graph::new(3 + count, &pairs).unwrap();
        let paths = (3..3 + count).map(|m| vec![0, 2, m, 1]).collect();
        (
            g,
            PathFamily {
                source: 0,
                target: 1,
                max_len: 3,
                paths,
            },
        )
    }

    #[test]
    fn disjoint_family_passes_through() {
        let (g, fam) = k2k(3);
        let res = find_disjoint_paths(&g, &fam, 3, Effort::BestEffort).unwrap();
        assert_eq!((res.source, res.target), (0, 1));
        assert_eq!(res.paths, fam.paths);
        assert_eq!(res.residual_bound, 2);
        assert_eq!(res.splits, 0);
    }

    #[test]
    fn disjoint_family_above_threshold_is_greedy() {
        // f1(2, 2) = 32
        let (g, fam) = k2k(32);
        let res = find_disjoint_paths(&g, &fam, 2, Effort::Guaranteed).unwrap();
        assert_eq!((res.source, res.target), (0, 1));
        assert_eq!(res.paths.len(), 2);
    }

    #[test]
    fn bundle_moves_the_source() {
        // f1(2, 3) = 2 * 54^2 = 5832
        let (g, fam) = bundle(5832);
        let res = find_disjoint_paths(&g, &fam, 2, Effort::Guaranteed).unwrap();
        assert_eq!((res.source, res.target), (2, 1));
        assert_eq!(res.residual_bound, 2);
        assert_eq!(res.paths.len(), 2);
        assert!(res.paths.iter().all(|p| p.len() == 3));
        assert_eq!(res.splits, 1);
    }

    #[test]
    fn bundle_below_threshold_best_effort() {
        let (g, fam) = bundle(4);
        assert_eq!(
            find_disjoint_paths(&g, &fam, 2, Effort::Guaranteed),
            Err(ConstructError::InsufficientPaths {
                have: 4,
                need: 5832
            })
        );
        let res = find_disjoint_paths(&g, &fam, 2, Effort::BestEffort).unwrap();
        assert_eq!((res.source, res.target), (2, 1));
        assert_eq!(res.residual_bound, 2);
    }

    #[test]
    fn single_path_cannot_give_two() {
        let (g, mut fam) = k2k(1);
        fam.paths.truncate(1);
        assert!(matches!(
            find_disjoint_paths(&g, &fam, 2, Effort::Guaranteed),
            Err(ConstructError::InsufficientPaths { have: 1, .. })
        ));
        assert!(matches!(
            find_disjoint_paths(&g, &fam, 2, Effort::BestEffort),
            Err(ConstructError::Failed(_))
        ));
    }

    #[test]
    fn rejects_malformed_paths() {
        let (g, mut fam) = k2k(2);
        fam.paths.push(vec![0, 1]);
        assert!(matches!(
            find_disjoint_paths(&g, &fam, 1, Effort::BestEffort),
            Err(ConstructError::InvalidInput(_))
        ));
        let (g, mut fam) = k2k(2);
        fam.paths.push(vec![0, 2, 0, 3, 1]);
        fam.max_len = 4;
        assert!(matches!(
            find_disjoint_paths(&g, &fam, 1, Effort::BestEffort),
            Err(ConstructError::InvalidInput(_))
        ));
    }
}
