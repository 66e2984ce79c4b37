//! Check whether deleting some edges keeps every distance within the stretch.
//!
//! Run with `cargo run --example verify_spanner`.

use additive_spanner::verify::{max_additive_stretch, Stretch};
use additive_spanner::{verify, EdgeMask, Graph, SpannerParams, INF};

fn main() {
    // 3x3 grid, row-major
    let mut pairs = Vec::new();
    for r in 0..3 {
        for c in 0..3 {
            let v = r * 3 + c;
            if c < 2 {
                pairs.push((v, v + 1));
            }
            if r < 2 {
                pairs.push((v, v + 3));
            }
        }
    }
    let g = Graph::new(9, &pairs).unwrap();

    let centre_edge = g.edge_between(4, 5).unwrap();
    let removed = EdgeMask::from_edges(g.edge_count(), [centre_edge]);

    for t in 0..=2 {
        match verify(&g, &removed, SpannerParams::Additive(t)) {
            Ok(()) => println!("t = {t}: spanner"),
            Err(v) => println!(
                "t = {t}: pair {:?} went from {} to {}",
                v.pair, v.dist_in_g, v.dist_in_h
            ),
        }
    }

    match max_additive_stretch(&g, &removed) {
        Stretch::Finite(s) => println!("smallest working t: {s}"),
        Stretch::Infinite => println!("removal disconnects the grid"),
    }

    // cutting a bridge is never allowed
    let path = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
    let cut = EdgeMask::from_edges(2, [0]);
    let v = verify(&path, &cut, SpannerParams::Additive(10)).unwrap_err();
    assert_eq!(v.dist_in_h, INF);
    println!("bridge removal: pair {:?} disconnected", v.pair);
}
