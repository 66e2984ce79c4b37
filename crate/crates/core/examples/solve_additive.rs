//! Decide whether `k` edges can go while keeping an additive `t`-spanner.
//!
//! Run with `cargo run --example solve_additive`.

use additive_spanner::generate::{generate, Generator, InstanceSpec};
use additive_spanner::io::mask_pairs;
use additive_spanner::{solve, solve_max_k, Mode, SolveOptions, SpannerParams};

fn main() {
    let g = generate(&InstanceSpec::new(Generator::Grid { rows: 4, cols: 4 })).unwrap();
    let opts = SolveOptions::default();

    for t in 1..=3 {
        let params = SpannerParams::Additive(t);
        let best = solve_max_k(&g, params, &opts);
        println!(
            "t = {t}: at most {} edges, e.g. {:?} ({} subsets examined)",
            best.count,
            mask_pairs(&g, &best.removed),
            best.stats.subsets_examined
        );
        let over = solve(&g, params, best.count + 1, &opts);
        assert!(!over.is_feasible());
    }

    // a wide book has more short cycles than the search needs, so the
    // constructive route answers without enumerating
    let book = generate(&InstanceSpec::new(Generator::Book {
        width: 60,
        depth: 1,
    }))
    .unwrap();
    let opts = SolveOptions {
        f4_override: Some(0),
        ..SolveOptions::with_mode(Mode::ConstructivePreferred)
    };
    let res = solve(&book, SpannerParams::Additive(1), 2, &opts);
    println!(
        "book: {:?} via {}",
        res.verdict.mask().map(|m| mask_pairs(&book, m)),
        res.branch.as_str()
    );
}
