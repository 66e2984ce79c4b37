//! Deterministic instance generators.
//!
//! Besides the usual families there are three built to meet the size
//! preconditions of the direct constructions:
//!
//! * `book`: many short cycles through one spine edge `0-1`.
//! * `caterpillar_triangles`: triangles hanging off a path at single vertices.
//! * `spaced_triangles`: triangles sitting on path edges `gap` apart.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Generator {
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    Grid {
        rows: usize,
        cols: usize,
    },
    /// Each pair is an edge independently with probability `p`, drawn in
    /// `(u, v)` order, `u < v`, from ChaCha8 seeded with the instance seed.
    ErdosRenyi {
        n: usize,
        p: f64,
    },
    /// Spine `0-1`. Depth 1: `width` triangles `0-x-1`. Depth 2: `0` joined
    /// to `a_1..a_w`, `1` joined to `b_1..b_w`, and every `a_i b_j` present,
    /// giving `width^2` four-cycles through the spine.
    Book {
        width: usize,
        depth: usize,
    },
    /// Path `0..` with a triangle `s-x-y` on every `gap`-th path vertex `s`.
    CaterpillarTriangles {
        count: usize,
        gap: usize,
    },
    /// Path `0..` with an apex over path edge `(a, a+1)` for `a = 0, gap, 2 gap, ..`.
    SpacedTriangles {
        count: usize,
        gap: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InstanceSpec {
    pub generator: Generator,
    pub seed: u64,
}

impl InstanceSpec {
    pub fn new(generator: Generator) -> Self {
        InstanceSpec { generator, seed: 0 }
    }

    pub fn seeded(generator: Generator, seed: u64) -> Self {
        InstanceSpec { generator, seed }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("bad parameters: {0}")]
    BadParameters(String),
}

fn bad(msg: impl Into<String>) -> GenerateError {
    GenerateError::BadParameters(msg.into())
}

pub fn generate(spec: &InstanceSpec) -> Result<Graph, GenerateError> {
    let (n, pairs) = match spec.generator {
        Generator::Cycle { n } => {
            if n < 3 {
                return Err(bad("a cycle needs at least 3 vertices"));
            }
            (n, (0..n).map(|i| (i, (i + 1) % n)).collect())
        }
        Generator::Complete { n } => {
            let mut pairs = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    pairs.push((u, v));
                }
            }
            (n, pairs)
        }
        Generator::Grid { rows, cols } => {
            if rows == 0 || cols == 0 {
                return Err(bad("grid sides must be positive"));
            }
            let at = |r: usize, c: usize| r * cols + c;
            let mut pairs = Vec::new();
            for r in 0..rows {
                for c in 0..cols {
                    if c + 1 < cols {
                        pairs.push((at(r, c), at(r, c + 1)));
                    }
                    if r + 1 < rows {
                        pairs.push((at(r, c), at(r + 1, c)));
                    }
                }
            }
            (rows * cols, pairs)
        }
        Generator::ErdosRenyi { n, p } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(bad(format!("edge probability {p} outside [0, 1]")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
            let mut pairs = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(p) {
                        pairs.push((u, v));
                    }
                }
            }
            (n, pairs)
        }
        Generator::Book { width, depth } => book(width, depth)?,
        Generator::CaterpillarTriangles { count, gap } => {
            if count == 0 || gap == 0 {
                return Err(bad("count and gap must be positive"));
            }
            let spine = (count - 1) * gap + 1;
            let mut pairs: Vec<_> = (1..spine).map(|i| (i - 1, i)).collect();
            for i in 0..count {
                let (s, x, y) = (i * gap, spine + 2 * i, spine + 2 * i + 1);
                pairs.extend([(s, x), (s, y), (x, y)]);
            }
            (spine + 2 * count, pairs)
        }
        Generator::SpacedTriangles { count, gap } => {
            if count == 0 || gap == 0 {
                return Err(bad("count and gap must be positive"));
            }
            let spine = (count - 1) * gap + 2;
            let mut pairs: Vec<_> = (1..spine).map(|i| (i - 1, i)).collect();
            for i in 0..count {
                let (a, apex) = (i * gap, spine + i);
                pairs.extend([(a, apex), (a + 1, apex)]);
            }
            (spine + count, pairs)
        }
    };
    Graph::new(n, &pairs).map_err(|e| bad(e.to_string()))
}

fn book(width: usize, depth: usize) -> Result<(usize, Vec<(usize, usize)>), GenerateError> {
    if width == 0 {
        return Err(bad("book width must be positive"));
    }
    let mut pairs = vec![(0, 1)];
    match depth {
        1 => {
            for x in 2..2 + width {
                pairs.extend([(0, x), (x, 1)]);
            }
            Ok((2 + width, pairs))
        }
        2 => {
            let a = |i: usize| 2 + i;
            let b = |j: usize| 2 + width + j;
            for i in 0..width {
                pairs.extend([(0, a(i)), (1, b(i))]);
            }
            for i in 0..width {
                for j in 0..width {
                    pairs.push((a(i), b(j)));
                }
            }
            Ok((2 + 2 * width, pairs))
        }
        _ => Err(bad(format!("book depth must be 1 or 2, got {depth}"))),
    }
}

/// Path positions of the triangles in [`Generator::SpacedTriangles`].
pub fn spaced_anchors(count: usize, gap: usize) -> Vec<usize> {
    (0..count).map(|i| i * gap).collect()
}
