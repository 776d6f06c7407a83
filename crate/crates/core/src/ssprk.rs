//! Optimal five-stage, fourth-order strong-stability-preserving Runge-Kutta
//! time stepping (SSPRK(5,4)) in Shu-Osher form.
//!
//! Each stage is a nonnegative convex combination of earlier stage values
//! plus nonnegative multiples of forward-Euler increments, which is what
//! makes the scheme strong-stability preserving. The coefficients are the
//! standard optimal ones; the stage abscissae and Butcher weights are
//! derived from them rather than transcribed, and the fourth-order behavior
//! is enforced by the order-of-accuracy tests.

use crate::error::{Error, Result};

/// Number of stages.
pub const STAGES: usize = 5;

/// Shu-Osher coefficients of SSPRK(5,4).
///
/// Stage `k` (1-based) computes
/// `y_k = sum_m alpha[k-1][m] y_m + dt * sum_m beta[k-1][m] F(t + c_m dt, y_m)`
/// over `m < k`, with `y_0` the step input and `y_5` the step result.
#[derive(Debug, Clone)]
pub struct SspRk54Tableau {
    alpha: [[f64; STAGES]; STAGES],
    beta: [[f64; STAGES]; STAGES],
    c: [f64; STAGES + 1],
}

impl SspRk54Tableau {
    pub fn new() -> Self {
        let mut alpha = [[0.0; STAGES]; STAGES];
        let mut beta = [[0.0; STAGES]; STAGES];

        alpha[0][0] = 1.0;
        beta[0][0] = 0.391752226571890;

        alpha[1][0] = 0.444370493651235;
        alpha[1][1] = 0.555629506348765;
        beta[1][1] = 0.368410593050371;

        alpha[2][0] = 0.620101851488403;
        alpha[2][2] = 0.379898148511597;
        beta[2][2] = 0.251891774271694;

        alpha[3][0] = 0.178079954393132;
        alpha[3][3] = 0.821920045606868;
        beta[3][3] = 0.544974750228521;

        alpha[4][2] = 0.517231671970585;
        alpha[4][3] = 0.096059710526147;
        beta[4][3] = 0.063692468666290;
        alpha[4][4] = 0.386708617503269;
        beta[4][4] = 0.226007483236906;

        let rows = butcher_rows(&alpha, &beta);
        let mut c = [0.0; STAGES + 1];
        for (k, row) in rows.iter().enumerate() {
            c[k] = row.iter().sum();
        }
        Self { alpha, beta, c }
    }

    pub fn alpha(&self) -> &[[f64; STAGES]; STAGES] {
        &self.alpha
    }

    pub fn beta(&self) -> &[[f64; STAGES]; STAGES] {
        &self.beta
    }

    /// Abscissae of the stage values `y_0 ..= y_5` in units of `dt`;
    /// `c[0] = 0` and `c[5] = 1` up to roundoff.
    pub fn abscissae(&self) -> &[f64; STAGES + 1] {
        &self.c
    }

    /// Weights of the induced Butcher form (the final-stage derivative
    /// coefficients); they sum to one for a consistent scheme.
    pub fn butcher_weights(&self) -> [f64; STAGES] {
        butcher_rows(&self.alpha, &self.beta)[STAGES]
    }

    /// Full Butcher coefficient rows of `y_0 ..= y_5`.
    pub fn butcher_coefficients(&self) -> [[f64; STAGES]; STAGES + 1] {
        butcher_rows(&self.alpha, &self.beta)
    }
}

impl Default for SspRk54Tableau {
    fn default() -> Self {
        Self::new()
    }
}

/// Coefficients of `F(y_j)` in each stage value, obtained by unrolling the
/// Shu-Osher recursion.
fn butcher_rows(
    alpha: &[[f64; STAGES]; STAGES],
    beta: &[[f64; STAGES]; STAGES],
) -> [[f64; STAGES]; STAGES + 1] {
    let mut rows = [[0.0; STAGES]; STAGES + 1];
    for k in 1..=STAGES {
        for m in 0..k {
            let row_m = rows[m];
            for (out, v) in rows[k].iter_mut().zip(row_m) {
                *out += alpha[k - 1][m] * v;
            }
            rows[k][m] += beta[k - 1][m];
        }
    }
    rows
}

/// A first-order ODE system `y' = F(t, y)` with an optional per-stage hook.
pub trait OdeSystem {
    fn dim(&self) -> usize;

    /// Write `F(t, y)` into `dydt`; both slices have length [`dim`](Self::dim).
    fn rhs(&self, t: f64, y: &[f64], dydt: &mut [f64]);

    /// Applied to every stage value at the stage time, after the stage
    /// combination. Used to re-impose time-dependent Dirichlet data so the
    /// boundary entries track the stage time levels. `stage` runs from 1 to
    /// [`STAGES`]; the final stage is the step result at `t + dt`.
    /// Default: no-op.
    fn post_stage(&self, _t: f64, _stage: usize, _y: &mut [f64]) {}
}

/// Scratch vectors reused across steps.
struct Workspace {
    ys: Vec<Vec<f64>>,
    fs: Vec<Vec<f64>>,
}

impl Workspace {
    fn new(dim: usize) -> Self {
        Self {
            ys: vec![vec![0.0; dim]; STAGES + 1],
            fs: vec![vec![0.0; dim]; STAGES],
        }
    }
}

fn step_into<S: OdeSystem + ?Sized>(
    tableau: &SspRk54Tableau,
    sys: &S,
    t: f64,
    dt: f64,
    ws: &mut Workspace,
) -> Result<()> {
    for k in 1..=STAGES {
        sys.rhs(t + tableau.c[k - 1] * dt, &ws.ys[k - 1], &mut ws.fs[k - 1]);

        let (done, rest) = ws.ys.split_at_mut(k);
        let yk = &mut rest[0];
        yk.fill(0.0);
        for (m, ym) in done.iter().enumerate() {
            let a = tableau.alpha[k - 1][m];
            if a != 0.0 {
                for (out, &v) in yk.iter_mut().zip(ym) {
                    *out += a * v;
                }
            }
            let b = dt * tableau.beta[k - 1][m];
            if b != 0.0 {
                for (out, &f) in yk.iter_mut().zip(&ws.fs[m]) {
                    *out += b * f;
                }
            }
        }
        // the final stage is the solution at exactly t + dt
        let t_stage = if k == STAGES { t + dt } else { t + tableau.c[k] * dt };
        sys.post_stage(t_stage, k, yk);
        if !yk.iter().all(|v| v.is_finite()) {
            return Err(Error::Diverged { t, stage: k });
        }
    }
    Ok(())
}

/// Advance `y` from `t` to `t + dt` with one SSPRK(5,4) step.
pub fn ssprk54_step<S: OdeSystem + ?Sized>(sys: &S, t: f64, y: &[f64], dt: f64) -> Result<Vec<f64>> {
    if y.len() != sys.dim() {
        return Err(Error::LengthMismatch { expected: sys.dim(), got: y.len() });
    }
    if dt <= 0.0 || !dt.is_finite() {
        return Err(Error::InvalidStepSize(dt));
    }
    let tableau = SspRk54Tableau::new();
    let mut ws = Workspace::new(sys.dim());
    ws.ys[0].copy_from_slice(y);
    step_into(&tableau, sys, t, dt, &mut ws)?;
    Ok(ws.ys.swap_remove(STAGES))
}

/// Advance from `t0` to `t_end` with fixed step `dt`, recording the state at
/// each observer time and at `t_end`.
///
/// Steps are shortened (never interpolated) to land exactly on every
/// recorded time; after each landing the nominal `dt` resumes. Observer
/// times outside `[t0, t_end]` are ignored.
pub fn integrate<S: OdeSystem + ?Sized>(
    sys: &S,
    y0: &[f64],
    t0: f64,
    t_end: f64,
    dt: f64,
    observers: &[f64],
) -> Result<Vec<(f64, Vec<f64>)>> {
    if y0.len() != sys.dim() {
        return Err(Error::LengthMismatch { expected: sys.dim(), got: y0.len() });
    }
    if dt <= 0.0 || !dt.is_finite() {
        return Err(Error::InvalidStepSize(dt));
    }
    if t_end.is_nan() || t0.is_nan() || t_end < t0 {
        return Err(Error::InvalidTimeWindow { t0, t_end });
    }

    let same = |a: f64, b: f64| (a - b).abs() <= 1e-12 * a.abs().max(b.abs()).max(1.0);

    let mut targets: Vec<f64> = observers
        .iter()
        .copied()
        .filter(|&ob| ob.is_finite() && ob >= t0 && (ob <= t_end || same(ob, t_end)))
        .chain(std::iter::once(t_end))
        .collect();
    targets.sort_by(|a, b| a.partial_cmp(b).unwrap());
    targets.dedup_by(|a, b| same(*a, *b));

    let tableau = SspRk54Tableau::new();
    let mut ws = Workspace::new(sys.dim());
    ws.ys[0].copy_from_slice(y0);
    let mut records = Vec::with_capacity(targets.len());
    let mut t = t0;

    for target in targets {
        while t < target && !same(t, target) {
            let remaining = target - t;
            // absorb accumulated roundoff into the landing step instead of
            // taking a spurious microstep
            let d = if remaining <= dt * (1.0 + 1e-9) { remaining } else { dt };
            step_into(&tableau, sys, t, d, &mut ws)
                .map_err(|e| match e {
                    Error::Diverged { stage, .. } => Error::Diverged { t, stage },
                    other => other,
                })?;
            ws.ys.swap(0, STAGES);
            t = if d == remaining { target } else { t + d };
        }
        records.push((target, ws.ys[0].clone()));
    }
    Ok(records)
}
