//! Multiplicative-plus-additive stretch `d_H <= alpha d_G + beta`.
//!
//! Run with `cargo run --example alpha_beta`.

use additive_spanner::io::{mask_pairs, parse_rational};
use additive_spanner::{solve, verify, Graph, SolveOptions, SpannerParams};

fn main() {
    // six-cycle with one chord
    let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]).unwrap();
    let opts = SolveOptions::default();

    for (a, b) in [
        ("1", "1"),
        ("3/2", "0.5"),
        ("2", "0"),
        ("1", "3"),
        ("3", "1"),
    ] {
        let params =
            SpannerParams::alpha_beta(parse_rational(a).unwrap(), parse_rational(b).unwrap())
                .unwrap();
        let res = solve(&g, params, 2, &opts);
        match res.verdict.mask() {
            Some(m) => {
                assert!(verify(&g, m, params).is_ok());
                println!(
                    "alpha={a} beta={b} (t={}): remove {:?}",
                    params.derived_t(),
                    mask_pairs(&g, m)
                );
            }
            None => println!(
                "alpha={a} beta={b} (t={}): two edges cannot go",
                params.derived_t()
            ),
        }
    }

    println!(
        "{:?}",
        SpannerParams::alpha_beta(parse_rational("0.9").unwrap(), parse_rational("1").unwrap())
    );
}
