//! Seeded instance families.
//!
//! Run with `cargo run --example generate_instances`.

use additive_spanner::generate::{generate, Generator, InstanceSpec};
use additive_spanner::{candidate_edges, thresholds};

fn main() {
    let families = [
        Generator::Cycle { n: 8 },
        Generator::Complete { n: 6 },
        Generator::Grid { rows: 3, cols: 5 },
        Generator::ErdosRenyi { n: 30, p: 0.15 },
        Generator::Book { width: 4, depth: 1 },
        Generator::Book { width: 4, depth: 2 },
        Generator::CaterpillarTriangles { count: 5, gap: 2 },
        Generator::SpacedTriangles { count: 5, gap: 3 },
    ];
    for generator in families {
        let g = generate(&InstanceSpec::seeded(generator, 7)).unwrap();
        println!(
            "{generator:?}: n = {}, m = {}, candidates at t=1: {}",
            g.vertex_count(),
            g.edge_count(),
            candidate_edges(&g, 1).len()
        );
    }

    // same seed, same graph
    let spec = InstanceSpec::seeded(Generator::ErdosRenyi { n: 50, p: 0.1 }, 99);
    assert_eq!(
        generate(&spec).unwrap().edges(),
        generate(&spec).unwrap().edges()
    );

    // the size at which the constructive route is certain to succeed
    for (t, k) in [(1, 1), (1, 2), (2, 2)] {
        let th = thresholds(t, k);
        println!(
            "t={t} k={k}: sequence {} cycles {} heavy edge {} f4 {}",
            th.p, th.n, th.heavy, th.f4
        );
    }
}
