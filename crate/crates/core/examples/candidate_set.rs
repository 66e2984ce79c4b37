//! Which edges can ever be removed? Only those on a cycle of length `<= t + 2`.
//!
//! Run with `cargo run --example candidate_set`.

use additive_spanner::candidates::enumerate_short_cycles;
use additive_spanner::io::mask_pairs;
use additive_spanner::{candidate_edges, Graph};

fn main() {
    // a triangle and a pentagon sharing vertex 0, with a pendant edge
    let g = Graph::new(
        8,
        &[
            (0, 1),
            (1, 2),
            (2, 0),
            (0, 3),
            (3, 4),
            (4, 5),
            (5, 6),
            (6, 0),
            (6, 7),
        ],
    )
    .unwrap();

    for t in 1..=3 {
        let f = candidate_edges(&g, t);
        println!(
            "t = {t}: {} candidates {:?}",
            f.len(),
            mask_pairs(&g, &f.edges)
        );
    }

    for c in enumerate_short_cycles(&g, 3, usize::MAX) {
        println!("cycle of length {}: {:?}", c.len(), c.vertices());
    }
}
