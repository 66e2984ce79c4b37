//! An edge on many short cycles: cut the middle of disjoint detours.
//!
//! Run with `cargo run --example middle_edge`.

use additive_spanner::candidates::cycles_through_edge;
use additive_spanner::constructive::{middle_edge_removal, Effort};
use additive_spanner::generate::{generate, Generator, InstanceSpec};
use additive_spanner::io::mask_pairs;
use additive_spanner::thresholds::f1;
use additive_spanner::{verify, SpannerParams};

fn main() {
    let (t, k) = (1u32, 2usize);
    let need = f1((k + t as usize + 1) as u64, u64::from(t) + 1) as usize;

    // `need` triangles on the spine 0-1
    let g = generate(&InstanceSpec::new(Generator::Book {
        width: need,
        depth: 1,
    }))
    .unwrap();
    let spine = g.edge_between(0, 1).unwrap();
    let cycles = cycles_through_edge(&g, spine, t, usize::MAX);
    println!(
        "{} triangles through the spine, threshold {need}",
        cycles.len()
    );

    let out = middle_edge_removal(&g, spine, &cycles, k, t, Effort::Guaranteed).unwrap();
    println!("detours {:?}", out.detours.paths);
    println!("removed {:?}", mask_pairs(&g, &out.removed));
    assert!(verify(&g, &out.removed, SpannerParams::Additive(t)).is_ok());

    // below threshold the guaranteed mode refuses; best effort still tries
    let few = &cycles[..need / 4];
    println!(
        "guaranteed on {}: {:?}",
        few.len(),
        middle_edge_removal(&g, spine, few, k, t, Effort::Guaranteed).err()
    );
    match middle_edge_removal(&g, spine, few, k, t, Effort::BestEffort) {
        Ok(out) => println!(
            "best effort on {}: removed {:?}",
            few.len(),
            mask_pairs(&g, &out.removed)
        ),
        Err(e) => println!("best effort on {}: {e}", few.len()),
    }
}
