//! Spanner checks: does removing a set of edges keep every distance within
//! the allowed stretch?

use std::fmt;

use num_rational::Ratio;
use thiserror::Error;

use crate::graph::{Bfs, DistMatrix, EdgeMask, Graph, INF};

pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("alpha must be at least 1, got {0}")]
    AlphaBelowOne(Rational),
    #[error("beta must be non-negative, got {0}")]
    NegativeBeta(Rational),
}

/// Stretch requirement: `d_H <= d_G + t` or `d_H <= alpha * d_G + beta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpannerParams {
    Additive(u32),
    AlphaBeta { alpha: Rational, beta: Rational },
}

impl SpannerParams {
    pub fn alpha_beta(alpha: Rational, beta: Rational) -> Result<Self, ParamError> {
        if alpha < Rational::from_integer(1) {
            return Err(ParamError::AlphaBelowOne(alpha));
        }
        if beta < Rational::from_integer(0) {
            return Err(ParamError::NegativeBeta(beta));
        }
        Ok(SpannerParams::AlphaBeta { alpha, beta })
    }

    /// The additive parameter the solver works with. For `(alpha, beta)` this
    /// is `floor(alpha + beta) - 1`; zero means no edge is removable.
    pub fn derived_t(&self) -> u32 {
        match *self {
            SpannerParams::Additive(t) => t,
            SpannerParams::AlphaBeta { alpha, beta } => {
                let floor = (alpha + beta).floor().to_integer();
                u32::try_from(floor - 1).unwrap_or(u32::MAX)
            }
        }
    }

    /// Largest allowed `d_H` for a pair at finite distance `d` in `G`.
    pub fn allowed(&self, d: u32) -> u64 {
        match *self {
            SpannerParams::Additive(t) => u64::from(d) + u64::from(t),
            SpannerParams::AlphaBeta { alpha, beta } => {
                // floor((an/ad) d + bn/bd) in exact integer arithmetic
                let (an, ad) = (i128::from(*alpha.numer()), i128::from(*alpha.denom()));
                let (bn, bd) = (i128::from(*beta.numer()), i128::from(*beta.denom()));
                let num = an * i128::from(d) * bd + bn * ad;
                let den = ad * bd;
                u64::try_from(num.div_euclid(den)).unwrap_or(0)
            }
        }
    }

    fn bounds(&self, n: usize) -> Vec<u64> {
        (0..n as u32).map(|d| self.allowed(d)).collect()
    }
}

impl fmt::Display for SpannerParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpannerParams::Additive(t) => write!(f, "additive t={t}"),
            SpannerParams::AlphaBeta { alpha, beta } => write!(f, "alpha={alpha} beta={beta}"),
        }
    }
}

/// A pair whose distance in the spanner exceeds the allowed bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub pair: (usize, usize),
    pub dist_in_g: u32,
    /// [`INF`] when the removal disconnects the pair.
    pub dist_in_h: u32,
}

/// Checks `G - removed` against `params`. Pairs in different components of
/// `G` are exempt. Returns the lexicographically smallest violating pair.
pub fn verify(g: &Graph, removed: &EdgeMask, params: SpannerParams) -> Result<(), Violation> {
    let base = g.all_pairs_dist(&g.empty_mask());
    Verifier::new(g, &base, params).check(removed)
}

/// Repeated checks against one graph, reusing its distance matrix.
#[derive(Debug)]
pub struct Verifier<'a> {
    g: &'a Graph,
    base: &'a DistMatrix,
    bounds: Vec<u64>,
    bfs: Bfs,
}

impl<'a> Verifier<'a> {
    pub fn new(g: &'a Graph, base: &'a DistMatrix, params: SpannerParams) -> Self {
        assert_eq!(base.size(), g.vertex_count());
        Verifier {
            g,
            base,
            bounds: params.bounds(g.vertex_count().max(1)),
            bfs: Bfs::new(g.vertex_count()),
        }
    }

    pub fn check(&mut self, removed: &EdgeMask) -> Result<(), Violation> {
        assert_eq!(
            removed.capacity(),
            self.g.edge_count(),
            "mask sized for another graph"
        );
        let n = self.g.vertex_count();
        for x in 0..n {
            self.bfs.run(self.g, x, removed, None);
            let row = self.base.row(x);
            for (y, &dg) in row.iter().enumerate().skip(x + 1) {
                if dg == INF {
                    continue;
                }
                let dh = self.bfs.dist[y];
                if dh == INF || u64::from(dh) > self.bounds[dg as usize] {
                    return Err(Violation {
                        pair: (x, y),
                        dist_in_g: dg,
                        dist_in_h: dh,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn is_spanner(&mut self, removed: &EdgeMask) -> bool {
        self.check(removed).is_ok()
    }
}

/// Worst additive stretch over pairs connected in `G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Stretch {
    Finite(u32),
    Infinite,
}

/// Smallest `t` for which `removed` yields an additive `t`-spanner.
pub fn max_additive_stretch(g: &Graph, removed: &EdgeMask) -> Stretch {
    let base = g.all_pairs_dist(&g.empty_mask());
    let mut bfs = Bfs::new(g.vertex_count());
    let mut worst = 0;
    for x in 0..g.vertex_count() {
        bfs.run(g, x, removed, None);
        for (y, &dg) in base.row(x).iter().enumerate() {
            if dg == INF || y == x {
                continue;
            }
            let dh = bfs.dist[y];
            if dh == INF {
                return Stretch::Infinite;
            }
            worst = worst.max(dh - dg);
        }
    }
    Stretch::Finite(worst)
}
