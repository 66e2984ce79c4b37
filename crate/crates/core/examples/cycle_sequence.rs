//! Order disjoint short cycles so escape paths never cross later cycles, then
//! remove one edge per step along the order.
//!
//! Run with `cargo run --example cycle_sequence`.

use additive_spanner::candidates::Cycle;
use additive_spanner::constructive::{
    build_sequence, check_star, spanner_from_sequence, CycleSeq, Effort, SequenceCase,
};
use additive_spanner::generate::{generate, spaced_anchors, Generator, InstanceSpec};
use additive_spanner::io::mask_pairs;
use additive_spanner::thresholds::f3;
use additive_spanner::{verify, SpannerParams};

fn main() {
    let (t, k) = (1u32, 2usize);
    let count = f3(u64::from(t), k as u64) as usize;
    let gap = 3;
    let g = generate(&InstanceSpec::new(Generator::SpacedTriangles {
        count,
        gap,
    }))
    .unwrap();
    let spine = (count - 1) * gap + 2;
    let triangles: Vec<Cycle> = spaced_anchors(count, gap)
        .iter()
        .enumerate()
        .map(|(i, &a)| Cycle::new(&g, &[a, a + 1, spine + i]).unwrap())
        .collect();

    // path order satisfies the ordering condition
    let seq = CycleSeq::new(&g, triangles.clone(), t).unwrap();
    println!("path order: {:?}", check_star(&seq));

    // swapping two ends breaks it
    let mut swapped = triangles.clone();
    swapped.swap(0, count - 1);
    let bad = CycleSeq::new(&g, swapped, t).unwrap();
    println!("swapped order: {:?}", check_star(&bad));

    let out = spanner_from_sequence(&g, &seq, t, k, Effort::Guaranteed).unwrap();
    println!(
        "removed {:?}, eligible sizes {:?}",
        mask_pairs(&g, &out.removed),
        out.eligible_sizes
    );
    assert!(verify(&g, &out.removed, SpannerParams::Additive(t)).is_ok());

    // let the search find an order on its own
    let mut shuffled = triangles;
    shuffled.reverse();
    let found = build_sequence(&g, &shuffled, t, count, Effort::BestEffort).unwrap();
    let case = match found.case {
        SequenceCase::Spaced { .. } => "spaced crossings",
        SequenceCase::Greedy(_) => "greedy extension",
    };
    println!(
        "build_sequence via {case}: input indices {:?}",
        found.chosen
    );
    assert!(check_star(&found.seq).is_ok());
}
