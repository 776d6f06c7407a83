//! Independent reference implementations used as oracles.
//!
//! Everything here deliberately avoids the library's solution paths: dense
//! Gaussian elimination instead of the Thomas algorithm, dense row solves
//! instead of the production weight assembly, and a hand-rolled five-stage
//! update loop instead of the tableau-driven stepper.

#![allow(dead_code)]

use sgdqm::{ProblemSpec, UniformGrid, W2Method};

/// Dense Gaussian elimination with partial pivoting.
pub fn dense_solve(a: &[Vec<f64>], rhs: &[f64]) -> Vec<f64> {
    let n = rhs.len();
    let mut m: Vec<Vec<f64>> = a.to_vec();
    let mut b = rhs.to_vec();
    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&i, &j| m[i][col].abs().partial_cmp(&m[j][col].abs()).unwrap())
            .unwrap();
        m.swap(col, pivot_row);
        b.swap(col, pivot_row);
        let pivot = m[col][col];
        assert!(pivot != 0.0, "singular oracle system");
        let pivot_row = m[col].clone();
        for row in col + 1..n {
            let factor = m[row][col] / pivot;
            if factor != 0.0 {
                for (slot, pv) in m[row][col..].iter_mut().zip(&pivot_row[col..]) {
                    *slot -= factor * pv;
                }
                b[row] -= factor * b[col];
            }
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let mut s = b[row];
        for k in row + 1..n {
            s -= m[row][k] * x[k];
        }
        x[row] = s / m[row][row];
    }
    x
}

/// Modified-basis nodal value from first principles (Table-style constants
/// combined per the boundary folding), independent of the library's table.
fn modified_nodal(n: usize, h: f64, p: usize, i: usize, order: usize) -> f64 {
    let plain = |center: isize| -> f64 {
        let offset = i as isize - center;
        match (order, offset) {
            (0, -1) | (0, 1) => 1.0,
            (0, 0) => 4.0,
            (1, -1) => 3.0 / h,
            (1, 1) => -3.0 / h,
            (2, -1) | (2, 1) => 6.0 / (h * h),
            (2, 0) => -12.0 / (h * h),
            _ => 0.0,
        }
    };
    if p == 0 {
        plain(0) + 2.0 * plain(-1)
    } else if p == 1 {
        plain(1) - plain(-1)
    } else if p == n - 2 {
        plain(n as isize - 2) - plain(n as isize)
    } else if p == n - 1 {
        plain(n as isize - 1) + 2.0 * plain(n as isize)
    } else {
        plain(p as isize)
    }
}

/// Dense collocation matrix `B[p][j] = phi_p(x_j)`.
pub fn dense_basis_matrix(grid: &UniformGrid) -> Vec<Vec<f64>> {
    let n = grid.len();
    let h = grid.spacing();
    (0..n)
        .map(|p| (0..n).map(|j| modified_nodal(n, h, p, j, 0)).collect())
        .collect()
}

/// Weight rows obtained by dense solves of the defining systems.
pub fn dense_weights(grid: &UniformGrid, order: usize) -> Vec<Vec<f64>> {
    let n = grid.len();
    let h = grid.spacing();
    let b = dense_basis_matrix(grid);
    (0..n)
        .map(|i| {
            let rhs: Vec<f64> = (0..n).map(|p| modified_nodal(n, h, p, i, order)).collect();
            dense_solve(&b, &rhs)
        })
        .collect()
}

/// Second-derivative weights for the requested method, all-dense route.
pub fn dense_w2(grid: &UniformGrid, method: W2Method) -> Vec<Vec<f64>> {
    match method {
        W2Method::SplineSystem => dense_weights(grid, 2),
        W2Method::ShuRecurrence => {
            let n = grid.len();
            let x = grid.nodes();
            let w1 = dense_weights(grid, 1);
            let mut w2 = vec![vec![0.0; n]; n];
            for i in 0..n {
                let mut row_sum = 0.0;
                for j in 0..n {
                    if j != i {
                        let v = 2.0 * w1[i][j] * (w1[i][i] - 1.0 / (x[i] - x[j]));
                        w2[i][j] = v;
                        row_sum += v;
                    }
                }
                w2[i][i] = -row_sum;
            }
            w2
        }
    }
}

/// Fixed-step reference integration of the sine-Gordon reduction with the
/// five-stage scheme written out stage by stage.
pub fn reference_solve(
    spec: &ProblemSpec,
    grid: &UniformGrid,
    method: W2Method,
    dt: f64,
    steps: usize,
) -> (Vec<f64>, Vec<f64>) {
    let n = grid.len();
    let w2 = dense_w2(grid, method);

    let rhs = |t: f64, u: &[f64], v: &[f64]| -> (Vec<f64>, Vec<f64>) {
        let _ = t;
        let mut du = vec![0.0; n];
        let mut dv = vec![0.0; n];
        for i in 1..n - 1 {
            du[i] = v[i];
            let mut acc = 0.0;
            for j in 0..n {
                acc += w2[i][j] * u[j];
            }
            dv[i] = acc - u[i].sin();
        }
        (du, dv)
    };

    let impose = |t: f64, u: &mut [f64], v: &mut [f64]| {
        u[0] = spec.left_bc(t);
        u[n - 1] = spec.right_bc(t);
        v[0] = spec.left_bc_rate(t);
        v[n - 1] = spec.right_bc_rate(t);
    };

    let combine = |terms: &[(f64, &[f64])]| -> Vec<f64> {
        let mut out = vec![0.0; n];
        for &(coeff, vec) in terms {
            for (o, &x) in out.iter_mut().zip(vec) {
                *o += coeff * x;
            }
        }
        out
    };

    let mut u: Vec<f64> = grid.nodes().iter().map(|&x| spec.initial_u(x)).collect();
    let mut v: Vec<f64> = grid.nodes().iter().map(|&x| spec.initial_v(x)).collect();
    impose(0.0, &mut u, &mut v);

    let c = [
        0.0,
        0.391752226571890,
        0.586079689311540,
        0.474542363121400,
        0.935010630967653,
    ];
    let mut t = 0.0;
    for _ in 0..steps {
        let (fu0, fv0) = rhs(t + c[0] * dt, &u, &v);
        let mut u1 = combine(&[(1.0, &u), (0.391752226571890 * dt, &fu0)]);
        let mut v1 = combine(&[(1.0, &v), (0.391752226571890 * dt, &fv0)]);
        impose(t + c[1] * dt, &mut u1, &mut v1);

        let (fu1, fv1) = rhs(t + c[1] * dt, &u1, &v1);
        let mut u2 = combine(&[
            (0.444370493651235, &u),
            (0.555629506348765, &u1),
            (0.368410593050371 * dt, &fu1),
        ]);
        let mut v2 = combine(&[
            (0.444370493651235, &v),
            (0.555629506348765, &v1),
            (0.368410593050371 * dt, &fv1),
        ]);
        impose(t + c[2] * dt, &mut u2, &mut v2);

        let (fu2, fv2) = rhs(t + c[2] * dt, &u2, &v2);
        let mut u3 = combine(&[
            (0.620101851488403, &u),
            (0.379898148511597, &u2),
            (0.251891774271694 * dt, &fu2),
        ]);
        let mut v3 = combine(&[
            (0.620101851488403, &v),
            (0.379898148511597, &v2),
            (0.251891774271694 * dt, &fv2),
        ]);
        impose(t + c[3] * dt, &mut u3, &mut v3);

        let (fu3, fv3) = rhs(t + c[3] * dt, &u3, &v3);
        let mut u4 = combine(&[
            (0.178079954393132, &u),
            (0.821920045606868, &u3),
            (0.544974750228521 * dt, &fu3),
        ]);
        let mut v4 = combine(&[
            (0.178079954393132, &v),
            (0.821920045606868, &v3),
            (0.544974750228521 * dt, &fv3),
        ]);
        impose(t + c[4] * dt, &mut u4, &mut v4);

        let (fu4, fv4) = rhs(t + c[4] * dt, &u4, &v4);
        u = combine(&[
            (0.517231671970585, &u2),
            (0.096059710526147, &u3),
            (0.063692468666290 * dt, &fu3),
            (0.386708617503269, &u4),
            (0.226007483236906 * dt, &fu4),
        ]);
        v = combine(&[
            (0.517231671970585, &v2),
            (0.096059710526147, &v3),
            (0.063692468666290 * dt, &fv3),
            (0.386708617503269, &v4),
            (0.226007483236906 * dt, &fv4),
        ]);
        t += dt;
        impose(t, &mut u, &mut v);
    }
    (u, v)
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}
