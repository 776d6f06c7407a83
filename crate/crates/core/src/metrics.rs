//! Error norms against an exact solution and grid-convergence orders.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::grid::UniformGrid;
use crate::model::{solve, ProblemSpec};
use crate::weights::W2Method;

/// Which root-mean-square convention to report.
///
/// The conventional form is `sqrt(sum e^2 / n)`. The literal form
/// `sqrt(sum e^2) / n` reads the same printed formula with the root binding
/// tightly; both are provided so reports can state which one a reference
/// value matches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RmsMode {
    #[default]
    Conventional,
    Literal,
}

impl RmsMode {
    pub fn name(self) -> &'static str {
        match self {
            RmsMode::Conventional => "conventional",
            RmsMode::Literal => "literal",
        }
    }
}

impl fmt::Display for RmsMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RmsMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "conventional" => Ok(RmsMode::Conventional),
            "literal" => Ok(RmsMode::Literal),
            other => Err(format!(
                "unknown rms mode `{other}`, expected `conventional` or `literal`"
            )),
        }
    }
}

/// Error norms of a nodal solution at one time level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorReport {
    pub l2: f64,
    pub linf: f64,
    pub rms: f64,
    pub t: f64,
    pub n: usize,
    pub h: f64,
}

/// Compute `L2 = sqrt(h sum e^2)`, `Linf = max |e|` and the RMS of the
/// nodal errors `e_j = exact(x_j, t) - numerical_j`.
pub fn error_norms(
    numerical: &[f64],
    exact: impl Fn(f64, f64) -> f64,
    grid: &UniformGrid,
    t: f64,
    mode: RmsMode,
) -> Result<ErrorReport> {
    let n = grid.len();
    if numerical.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: numerical.len() });
    }
    let h = grid.spacing();
    let mut sum_sq = 0.0;
    let mut linf = 0.0f64;
    for (i, &x) in grid.nodes().iter().enumerate() {
        let e = exact(x, t) - numerical[i];
        sum_sq += e * e;
        linf = linf.max(e.abs());
    }
    let rms = match mode {
        RmsMode::Conventional => (sum_sq / n as f64).sqrt(),
        RmsMode::Literal => sum_sq.sqrt() / n as f64,
    };
    Ok(ErrorReport {
        l2: (h * sum_sq).sqrt(),
        linf,
        rms,
        t,
        n,
        h,
    })
}

/// One refinement level of a convergence study.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRow {
    pub h: f64,
    pub l2: f64,
    pub linf: f64,
    /// Observed order from the previous level; absent for the first row.
    pub order_l2: Option<f64>,
    pub order_linf: Option<f64>,
}

/// Observed orders from successive error ratios,
/// `order_k = log(e_{k-1}/e_k) / log(h_{k-1}/h_k)`; the first entry is
/// `None`, as is any entry whose ratio is degenerate (zero errors).
pub fn observed_orders(h_list: &[f64], errors: &[f64]) -> Vec<Option<f64>> {
    assert_eq!(h_list.len(), errors.len());
    let mut orders = vec![None; errors.len()];
    for k in 1..errors.len() {
        if errors[k - 1] > 0.0 && errors[k] > 0.0 && h_list[k] > 0.0 && h_list[k - 1] > h_list[k] {
            let order = (errors[k - 1] / errors[k]).ln() / (h_list[k - 1] / h_list[k]).ln();
            if order.is_finite() {
                orders[k] = Some(order);
            }
        }
    }
    orders
}

/// Run the solver at each spacing in `h_list` (descending) and tabulate the
/// norms at `t_end` with the observed orders between successive levels.
pub fn convergence_study(
    spec: &ProblemSpec,
    h_list: &[f64],
    dt: f64,
    t_end: f64,
    method: W2Method,
) -> Result<Vec<ConvergenceRow>> {
    if h_list.len() < 2 {
        return Err(Error::TooFewSpacings { min: 2, got: h_list.len() });
    }
    if !spec.has_exact() {
        return Err(Error::MissingExactSolution);
    }
    let (a, b) = spec.domain();
    let mut l2s = Vec::with_capacity(h_list.len());
    let mut linfs = Vec::with_capacity(h_list.len());
    for &h in h_list {
        let grid = UniformGrid::from_spacing(a, b, h)?;
        let states = solve(spec, &grid, dt, t_end, method, &[])?;
        let last = states.last().expect("integration always records t_end");
        let report = error_norms(
            &last.u,
            |x, t| spec.exact(x, t).expect("exact presence checked above"),
            &grid,
            last.t,
            RmsMode::Conventional,
        )?;
        l2s.push(report.l2);
        linfs.push(report.linf);
    }
    let order_l2 = observed_orders(h_list, &l2s);
    let order_linf = observed_orders(h_list, &linfs);
    Ok((0..h_list.len())
        .map(|k| ConvergenceRow {
            h: h_list[k],
            l2: l2s[k],
            linf: linfs[k],
            order_l2: order_l2[k],
            order_linf: order_linf[k],
        })
        .collect())
}
