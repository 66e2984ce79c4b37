//! The explicit size thresholds that drive the branching.
//!
//! All values saturate at `2^63 - 1`. Saturation only ever pushes the solver
//! into the exhaustive small-candidate branch, which is exact.

/// Saturation ceiling for every threshold.
pub const SATURATED: u64 = i64::MAX as u64;

fn mul(a: u64, b: u64) -> u64 {
    a.checked_mul(b).map_or(SATURATED, |x| x.min(SATURATED))
}

fn pow(base: u64, exp: u64) -> u64 {
    let exp = u32::try_from(exp).unwrap_or(u32::MAX);
    base.checked_pow(exp)
        .map_or(SATURATED, |x| x.min(SATURATED))
}

/// Path-family size that forces `k` edge-disjoint paths: `2 (k l^3)^(l-1)`.
pub fn f1(k: u64, l: u64) -> u64 {
    assert!(l >= 1, "path length bound must be positive");
    mul(2, pow(mul(k, pow(l, 3)), l - 1))
}

/// Disjoint-cycle count that forces a good sequence of `p` cycles:
/// `27 (t+2)(3t+1) p^4`.
pub fn f2(t: u64, p: u64) -> u64 {
    mul(mul(mul(27, t + 2), mul(3, t) + 1), pow(p, 4))
}

/// Sequence length that lets the greedy pick `k` removable edges:
/// `k (t+2)^(k-1)`.
pub fn f3(t: u64, k: u64) -> u64 {
    assert!(k >= 1);
    mul(k, pow(t + 2, k - 1))
}

/// Candidate-set size above which a solution is guaranteed to exist:
/// `N (t+2)^2 f1(k+t+1, t+1)` with `N = f2(t, f3(t, k))`.
pub fn f4(t: u64, k: u64) -> u64 {
    let n = f2(t, f3(t, k));
    mul(mul(n, pow(t + 2, 2)), f1(k + t + 1, t + 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThresholdTable {
    pub t: u64,
    pub k: u64,
    /// Sequence length `f3(t, k)`.
    pub p: u64,
    /// Disjoint cycles needed, `f2(t, p)`.
    pub n: u64,
    /// Heavy-edge bound `f1(k+t+1, t+1)`.
    pub heavy: u64,
    /// Cycle family size for the many-cycles branch, `N (t+2) f1(k+t+1, t+1)`.
    pub cycle_family: u64,
    pub f4: u64,
}

pub fn thresholds(t: u64, k: u64) -> ThresholdTable {
    assert!(t >= 1 && k >= 1, "thresholds need t >= 1 and k >= 1");
    let p = f3(t, k);
    let n = f2(t, p);
    let heavy = f1(k + t + 1, t + 1);
    ThresholdTable {
        t,
        k,
        p,
        n,
        heavy,
        cycle_family: mul(mul(n, t + 2), heavy),
        f4: f4(t, k),
    }
}

impl ThresholdTable {
    /// `name = value` lines, one per quantity.
    pub fn lines(&self) -> Vec<String> {
        vec![
            format!("t = {}", self.t),
            format!("k = {}", self.k),
            format!("f1(k,1) = {}", f1(self.k, 1)),
            format!("f1(k,t+1) = {}", f1(self.k, self.t + 1)),
            format!("f1(k+t+1,t+1) = {}", self.heavy),
            format!("f3(t,k) = {}", self.p),
            format!("p = {}", self.p),
            format!("f2(t,p) = {}", self.n),
            format!("N = {}", self.n),
            format!("cycle_family = {}", self.cycle_family),
            format!("f4(t,k) = {}", self.f4),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f1_at_length_one_is_two() {
        for k in 1..=10 {
            assert_eq!(f1(k, 1), 2);
        }
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(f3(2, 3), 48);
        assert_eq!(f2(1, 2), 5184);
        assert_eq!(f1(3, 2), 48);
        assert_eq!(f1(3, 3), 13122);
        assert_eq!(f2(1, 1), 324);
        // p = 1, N = 324, 9 * 324 * 48
        assert_eq!(f4(1, 1), 139_968);
    }

    #[test]
    fn saturates_instead_of_overflowing() {
        assert_eq!(f4(6, 6), SATURATED);
        assert_eq!(f1(1000, 1000), SATURATED);
    }

    #[test]
    fn table_is_consistent() {
        let tab = thresholds(1, 2);
        assert_eq!(tab.p, 6);
        assert_eq!(tab.n, f2(1, 6));
        assert_eq!(tab.heavy, f1(4, 2));
        assert_eq!(tab.f4, mul(tab.cycle_family, 3));
        assert!(tab.lines().iter().any(|l| l == "f1(k,1) = 2"));
    }
}
