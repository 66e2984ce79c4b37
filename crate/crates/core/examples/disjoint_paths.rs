//! Pull `k` edge-disjoint paths out of a big family of short paths.
//!
//! Run with `cargo run --example disjoint_paths`.

use additive_spanner::constructive::{find_disjoint_paths, Effort, PathFamily};
use additive_spanner::thresholds::f1;
use additive_spanner::Graph;

fn main() {
    let (k, l) = (2, 3);
    let need = f1(k as u64, l as u64) as usize;

    // 0 -> a_i -> b_j -> 1 for a few a's and many b's: every path shares its
    // first edge with many others, so the family has to be split
    let (a, b) = (3, need.div_ceil(3));
    let mut pairs = Vec::new();
    for i in 0..a {
        pairs.push((0, 2 + i));
        for j in 0..b {
            pairs.push((2 + i, 2 + a + j));
        }
    }
    for j in 0..b {
        pairs.push((2 + a + j, 1));
    }
    let g = Graph::new(2 + a + b, &pairs).unwrap();
    let paths = (0..a)
        .flat_map(|i| (0..b).map(move |j| vec![0, 2 + i, 2 + a + j, 1]))
        .collect::<Vec<_>>();
    println!("{} paths of length {l}, threshold {need}", paths.len());

    let family = PathFamily {
        source: 0,
        target: 1,
        max_len: l,
        paths,
    };
    let res = find_disjoint_paths(&g, &family, k, Effort::Guaranteed).unwrap();
    println!(
        "endpoints {} -> {}, length bound {}, {} split(s)",
        res.source, res.target, res.residual_bound, res.splits
    );
    for p in &res.paths {
        println!("  {p:?}");
    }
}
