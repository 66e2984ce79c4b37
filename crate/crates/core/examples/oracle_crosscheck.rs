//! Compare the solver with plain subset enumeration on random graphs.
//!
//! Run with `cargo run --example oracle_crosscheck`.

use additive_spanner::generate::{generate, Generator, InstanceSpec};
use additive_spanner::{oracle, solve, SolveOptions, SpannerParams};

fn main() {
    let opts = SolveOptions::default();
    let mut runs = 0;
    let mut feasible = 0;
    for seed in 0..40 {
        let g = generate(&InstanceSpec::seeded(
            Generator::ErdosRenyi { n: 7, p: 0.5 },
            seed,
        ))
        .unwrap();
        for t in 1..=2 {
            for k in 1..=3 {
                let params = SpannerParams::Additive(t);
                let fast = solve(&g, params, k, &opts);
                let slow = oracle(&g, params, k, 1_000_000).unwrap();
                assert_eq!(fast.verdict, slow.verdict, "seed {seed} t {t} k {k}");
                runs += 1;
                feasible += usize::from(fast.is_feasible());
            }
        }
    }
    println!("{runs} runs agree ({feasible} feasible)");

    let big = generate(&InstanceSpec::new(Generator::Complete { n: 10 })).unwrap();
    println!(
        "{}",
        oracle(&big, SpannerParams::Additive(1), 20, 1000).unwrap_err()
    );
}
