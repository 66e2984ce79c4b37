//! Read and write edge lists and DIMACS, and print a result document.
//!
//! Run with `cargo run --example file_formats`.

use additive_spanner::io::{
    mask_pairs, pairs_value, parse_graph_str, write_graph, Format, ResultDoc,
};
use additive_spanner::{solve_additive, SolveOptions};

fn main() {
    let text = "# a square with one diagonal\n0 1\n1 2\n2 3\n3 0\n0 2\n";
    let g = parse_graph_str(text, Format::Edgelist).unwrap();
    let dimacs = write_graph(&g, Format::Dimacs);
    print!("{dimacs}");
    let back = parse_graph_str(&dimacs, Format::Dimacs).unwrap();
    assert_eq!(back.edges(), g.edges());
    print!("{}", write_graph(&back, Format::Edgelist));

    if let Err(e) = parse_graph_str("0 1\n1 x\n", Format::Edgelist) {
        println!("error: {e}");
    }

    let res = solve_additive(&g, 1, 1, &SolveOptions::default());
    let removed = res
        .verdict
        .mask()
        .map(|m| mask_pairs(&g, m))
        .unwrap_or_default();
    let doc = ResultDoc::new("solve")
        .with(
            "verdict",
            if res.is_feasible() {
                "feasible"
            } else {
                "infeasible"
            },
        )
        .with("removed", pairs_value(&removed))
        .with("branch", res.branch.as_str());
    println!("{}", doc.render());
}
