//! Uniform collocation grid on `[a, b]`.

use crate::error::{Error, Result};

/// Minimum node count. The boundary-modified basis combines distinct splines
/// at indices 0, 1, n-2, n-1 plus one interior, so five nodes are required.
pub const MIN_NODES: usize = 5;

/// Uniformly spaced nodes `x_0 = a < x_1 < ... < x_{n-1} = b`.
#[derive(Debug, Clone, PartialEq)]
pub struct UniformGrid {
    a: f64,
    b: f64,
    n: usize,
    h: f64,
    nodes: Vec<f64>,
}

impl UniformGrid {
    /// Build a grid with `n` nodes on `[a, b]`.
    pub fn new(a: f64, b: f64, n: usize) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() || a >= b {
            return Err(Error::InvalidDomain { a, b });
        }
        if n < MIN_NODES {
            return Err(Error::GridTooSmall { min: MIN_NODES, got: n });
        }
        let h = (b - a) / (n - 1) as f64;
        // Convex form keeps both endpoints exact.
        let nodes = (0..n)
            .map(|i| {
                let s = i as f64 / (n - 1) as f64;
                a * (1.0 - s) + b * s
            })
            .collect();
        Ok(Self { a, b, n, h, nodes })
    }

    /// Build a grid from a target spacing `h`, which must partition `b - a`
    /// into a whole number of intervals (to relative tolerance 1e-9).
    pub fn from_spacing(a: f64, b: f64, h: f64) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() || a >= b {
            return Err(Error::InvalidDomain { a, b });
        }
        if h <= 0.0 || !h.is_finite() {
            return Err(Error::SpacingMismatch { a, b, h });
        }
        let intervals = (b - a) / h;
        let rounded = intervals.round();
        if rounded < 1.0 || (intervals - rounded).abs() > 1e-9 * rounded {
            return Err(Error::SpacingMismatch { a, b, h });
        }
        Self::new(a, b, rounded as usize + 1)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// Number of nodes.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Node spacing `h = (b - a) / (n - 1)`.
    pub fn spacing(&self) -> f64 {
        self.h
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// Node coordinate `x_i`.
    pub fn node(&self, i: usize) -> f64 {
        self.nodes[i]
    }

    /// Coordinate of the (possibly phantom) spline center at signed index
    /// `j`; `j = -1` and `j = n` lie one spacing outside the domain.
    pub(crate) fn extended_node(&self, j: isize) -> f64 {
        self.a + j as f64 * self.h
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endpoints_and_spacing_are_exact() {
        let g = UniformGrid::new(-1.0, 1.0, 51).unwrap();
        assert_eq!(g.node(0), -1.0);
        assert_eq!(g.node(50), 1.0);
        let h = g.spacing();
        for i in 0..50 {
            let d = g.node(i + 1) - g.node(i);
            assert!((d - h).abs() <= 1e-12 * h, "nonuniform gap at {i}: {d} vs {h}");
        }
    }

    #[test]
    fn rejects_small_and_degenerate_grids() {
        assert!(matches!(
            UniformGrid::new(0.0, 1.0, 4),
            Err(Error::GridTooSmall { .. })
        ));
        assert!(matches!(
            UniformGrid::new(1.0, 1.0, 11),
            Err(Error::InvalidDomain { .. })
        ));
        assert!(matches!(
            UniformGrid::new(0.0, f64::INFINITY, 11),
            Err(Error::InvalidDomain { .. })
        ));
    }

    #[test]
    fn from_spacing_counts_intervals() {
        let g = UniformGrid::from_spacing(-1.0, 1.0, 0.04).unwrap();
        assert_eq!(g.len(), 51);
        assert!((g.spacing() - 0.04).abs() < 1e-15);

        // 0.03 does not divide 2.0
        assert!(matches!(
            UniformGrid::from_spacing(-1.0, 1.0, 0.03),
            Err(Error::SpacingMismatch { .. })
        ));
    }

    #[test]
    fn extended_nodes_extrapolate_one_spacing() {
        let g = UniformGrid::new(0.0, 1.0, 5).unwrap();
        assert!((g.extended_node(-1) + 0.25).abs() < 1e-15);
        assert!((g.extended_node(5) - 1.25).abs() < 1e-15);
    }
}
