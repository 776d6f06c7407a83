//! Property tests for the basis, the weight systems and the norms.

mod common;

use proptest::prelude::*;
use sgdqm::{
    error_norms, eval_bspline, eval_modified, thomas_solve, weights_order1, weights_order2,
    RmsMode, TriDiagMatrix, UniformGrid, W2Method,
};
use sgdqm::spline;

fn grid_strategy() -> impl Strategy<Value = UniformGrid> {
    (5usize..40, -3.0f64..0.0, 0.5f64..4.0)
        .prop_map(|(n, a, len)| UniformGrid::new(a, a + len, n).unwrap())
}

proptest! {
    /// The modified basis sums to 6 everywhere on [a, b]: the boundary
    /// folding telescopes back to the plain partition.
    #[test]
    fn partition_of_unity(grid in grid_strategy(), s in 0.0f64..=1.0) {
        let x = grid.a() + s * (grid.b() - grid.a());
        let sum: f64 = (0..grid.len())
            .map(|j| eval_modified(&grid, j, x, 0).unwrap())
            .sum();
        prop_assert!((sum - 6.0).abs() <= 1e-12, "sum = {sum}");
    }

    /// Derivatives of the partition vanish identically.
    #[test]
    fn derivative_partitions_vanish(grid in grid_strategy(), s in 0.0f64..=1.0) {
        let x = grid.a() + s * (grid.b() - grid.a());
        let h = grid.spacing();
        let d1: f64 = (0..grid.len())
            .map(|j| eval_modified(&grid, j, x, 1).unwrap())
            .sum();
        let d2: f64 = (0..grid.len())
            .map(|j| eval_modified(&grid, j, x, 2).unwrap())
            .sum();
        prop_assert!(d1.abs() <= 1e-10 / h, "d1 sum = {d1}");
        prop_assert!(d2.abs() <= 1e-10 / (h * h), "d2 sum = {d2}");
    }

    /// The spline is exactly zero at and beyond two spacings from its center.
    #[test]
    fn compact_support(grid in grid_strategy(), j in 0isize..20, s in 2.0f64..6.0, order in 0usize..3) {
        let j = j.min(grid.len() as isize);
        let center = grid.a() + j as f64 * grid.spacing();
        let right = eval_bspline(&grid, j, center + s * grid.spacing(), order).unwrap();
        let left = eval_bspline(&grid, j, center - s * grid.spacing(), order).unwrap();
        prop_assert_eq!(right, 0.0);
        prop_assert_eq!(left, 0.0);
    }

    /// Even symmetry of the value, odd symmetry of the slope.
    #[test]
    fn spline_symmetry(grid in grid_strategy(), s in 1e-6f64..2.0) {
        let j = (grid.len() / 2) as isize;
        let center = grid.a() + j as f64 * grid.spacing();
        let dx = s * grid.spacing();
        let plus = eval_bspline(&grid, j, center + dx, 0).unwrap();
        let minus = eval_bspline(&grid, j, center - dx, 0).unwrap();
        prop_assert!((plus - minus).abs() <= 1e-12 * plus.abs().max(1.0));
        let dplus = eval_bspline(&grid, j, center + dx, 1).unwrap();
        let dminus = eval_bspline(&grid, j, center - dx, 1).unwrap();
        prop_assert!((dplus + dminus).abs() <= 1e-11 / grid.spacing());
    }

    /// Thomas elimination matches dense Gaussian elimination on random
    /// diagonally dominant systems.
    #[test]
    fn thomas_matches_dense_oracle(
        n in 2usize..12,
        seeds in proptest::collection::vec(-1.0f64..1.0, 40),
    ) {
        let sub: Vec<f64> = (0..n - 1).map(|i| seeds[i]).collect();
        let sup: Vec<f64> = (0..n - 1).map(|i| seeds[i + 12]).collect();
        let diag: Vec<f64> = (0..n)
            .map(|i| {
                let dom = 2.5 + seeds[i + 24].abs();
                if seeds[i] >= 0.0 { dom } else { -dom }
            })
            .collect();
        let rhs: Vec<f64> = (0..n).map(|i| 2.0 * seeds[(i + 7) % 40]).collect();

        let m = TriDiagMatrix::new(sub.clone(), diag.clone(), sup.clone()).unwrap();
        let x = thomas_solve(&m, &rhs).unwrap();

        let mut dense = vec![vec![0.0; n]; n];
        for i in 0..n {
            dense[i][i] = diag[i];
            if i > 0 {
                dense[i][i - 1] = sub[i - 1];
            }
            if i + 1 < n {
                dense[i][i + 1] = sup[i];
            }
        }
        let y = common::dense_solve(&dense, &rhs);
        prop_assert!(common::max_abs_diff(&x, &y) <= 1e-12);
    }

    /// Rows of both weight matrices annihilate constants.
    #[test]
    fn weight_rows_sum_to_zero(grid in grid_strategy()) {
        let h = grid.spacing();
        let w1 = weights_order1(&grid).unwrap();
        for i in 0..grid.len() {
            let s: f64 = w1.row(i).sum();
            prop_assert!(s.abs() <= 1e-10 / h, "w1 row {i}: {s:e}");
        }
        for method in [W2Method::ShuRecurrence, W2Method::SplineSystem] {
            let w2 = weights_order2(&grid, method).unwrap();
            for i in 0..grid.len() {
                let s: f64 = w2.row(i).sum();
                prop_assert!(s.abs() <= 1e-8 / (h * h), "{method} row {i}: {s:e}");
            }
        }
    }

    /// Definition-forced norm inequalities.
    #[test]
    fn norm_inequalities(values in proptest::collection::vec(-10.0f64..10.0, 11)) {
        let grid = UniformGrid::new(0.0, 1.0, 11).unwrap();
        let r = error_norms(&values, |_, _| 0.0, &grid, 0.0, RmsMode::Conventional).unwrap();
        prop_assert!(r.rms <= r.linf * (1.0 + 1e-15));
        prop_assert!(r.l2 <= (r.h * r.n as f64).sqrt() * r.linf * (1.0 + 1e-15));
        let lit = error_norms(&values, |_, _| 0.0, &grid, 0.0, RmsMode::Literal).unwrap();
        prop_assert!(lit.rms <= r.rms * (1.0 + 1e-15));
    }
}

/// One-sided evaluations agree at every interior knot for all orders: the
/// basis is C^2. The half-open piece convention decides which side a knot
/// evaluation takes, so probing one ulp to the left reaches the other piece.
#[test]
fn c2_continuity_at_interior_knots() {
    let grid = UniformGrid::new(-1.5, 2.0, 17).unwrap();
    let h = grid.spacing();
    for j in -1..=(grid.len() as isize) {
        for order in 0..3usize {
            let scale = 1.0 / h.powi(order as i32);
            for k in 1..grid.len() - 1 {
                let x = grid.node(k);
                let right = eval_bspline(&grid, j, x, order).unwrap();
                let left = eval_bspline(&grid, j, f64::next_down(x), order).unwrap();
                assert!(
                    (right - left).abs() <= 1e-10 * scale,
                    "spline {j}, order {order}, knot {k}: {right} vs {left}"
                );
            }
        }
    }
}

/// Nodal values of the tabulated constants agree with direct evaluation for
/// every basis member, including the boundary-folded ones.
#[test]
fn nodal_table_matches_evaluation_on_random_grid() {
    let grid = UniformGrid::new(0.3, 2.7, 13).unwrap();
    let table = spline::NodalValueTable::new(grid.spacing());
    let n = grid.len();
    for order in 0..3usize {
        let scale = 1.0 / grid.spacing().powi(order as i32);
        for p in 0..n {
            for i in 0..n {
                let direct = eval_modified(&grid, p, grid.node(i), order).unwrap();
                let tab = table.modified(n, p, i, order);
                assert!(
                    (direct - tab).abs() <= 1e-11 * scale.max(1.0),
                    "p={p} i={i} order={order}: {direct} vs {tab}"
                );
            }
        }
    }
}
