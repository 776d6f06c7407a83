//! Published benchmark values the reports compare against.
//!
//! The `reference` source carries the values our runs are expected to
//! reproduce; the other sources are results of competing published methods,
//! kept for report context only. All values are transcribed verbatim and
//! never recomputed.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    L2,
    Linf,
    Rms,
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Metric::L2 => "l2",
            Metric::Linf => "linf",
            Metric::Rms => "rms",
        })
    }
}

/// One published value: a time (or spacing) key, the metric, the value and
/// which method produced it.
#[derive(Debug, Clone, Copy)]
pub struct BaselineEntry {
    pub key: f64,
    pub metric: Metric,
    pub value: f64,
    pub source: &'static str,
}

const fn entry(key: f64, metric: Metric, value: f64, source: &'static str) -> BaselineEntry {
    BaselineEntry { key, metric, value, source }
}

use Metric::{Linf, Rms, L2};

/// Errors at t = 0.25 .. 1.0 for the soliton problem on [-1, 1] with
/// h = 0.04, dt = 1e-4.
pub static TABLE_2: &[BaselineEntry] = &[
    entry(0.25, L2, 2.43e-6, "reference"),
    entry(0.25, Linf, 5.46e-6, "reference"),
    entry(0.50, L2, 5.54e-6, "reference"),
    entry(0.50, Linf, 7.39e-6, "reference"),
    entry(0.75, L2, 6.45e-6, "reference"),
    entry(0.75, Linf, 7.40e-6, "reference"),
    entry(1.0, L2, 7.84e-6, "reference"),
    entry(1.0, Linf, 8.75e-6, "reference"),
    entry(0.25, L2, 1.18e-5, "mittal-bhatia"),
    entry(0.25, Linf, 2.32e-5, "mittal-bhatia"),
    entry(0.50, L2, 4.19e-5, "mittal-bhatia"),
    entry(0.50, Linf, 4.11e-5, "mittal-bhatia"),
    entry(0.75, L2, 7.78e-5, "mittal-bhatia"),
    entry(0.75, Linf, 1.02e-4, "mittal-bhatia"),
    entry(1.0, L2, 1.30e-4, "mittal-bhatia"),
    entry(1.0, Linf, 1.64e-4, "mittal-bhatia"),
    entry(0.25, L2, 3.91e-5, "dehghan-shokri"),
    entry(0.25, Linf, 5.89e-6, "dehghan-shokri"),
    entry(0.50, L2, 1.30e-4, "dehghan-shokri"),
    entry(0.50, Linf, 2.01e-5, "dehghan-shokri"),
    entry(0.75, L2, 2.35e-4, "dehghan-shokri"),
    entry(0.75, Linf, 3.63e-5, "dehghan-shokri"),
    entry(1.0, L2, 3.27e-4, "dehghan-shokri"),
    entry(1.0, Linf, 5.07e-5, "dehghan-shokri"),
];

/// Errors at t = 0.2 .. 1.0 for the soliton problem on [-2, 2] with
/// h = dt = 0.01.
pub static TABLE_3: &[BaselineEntry] = &[
    entry(0.2, Linf, 1.46e-6, "reference"),
    entry(0.2, Rms, 2.54e-8, "reference"),
    entry(0.4, Linf, 2.97e-6, "reference"),
    entry(0.4, Rms, 5.67e-8, "reference"),
    entry(0.6, Linf, 4.32e-6, "reference"),
    entry(0.6, Rms, 9.07e-8, "reference"),
    entry(0.8, Linf, 5.46e-6, "reference"),
    entry(0.8, Rms, 1.25e-7, "reference"),
    entry(1.0, Linf, 6.33e-6, "reference"),
    entry(1.0, Rms, 1.58e-7, "reference"),
    entry(0.2, Linf, 9.25e-5, "li-min-zong-min"),
    entry(0.2, Rms, 1.76e-5, "li-min-zong-min"),
    entry(0.4, Linf, 1.62e-4, "li-min-zong-min"),
    entry(0.4, Rms, 1.62e-4, "li-min-zong-min"),
    entry(0.6, Linf, 3.73e-4, "li-min-zong-min"),
    entry(0.6, Rms, 1.65e-4, "li-min-zong-min"),
    entry(0.8, Linf, 6.24e-4, "li-min-zong-min"),
    entry(0.8, Rms, 2.98e-4, "li-min-zong-min"),
    entry(1.0, Linf, 8.49e-4, "li-min-zong-min"),
    entry(1.0, Rms, 4.37e-4, "li-min-zong-min"),
    entry(0.2, Linf, 2.50e-5, "jiang-wang"),
    entry(0.2, Rms, 6.55e-7, "jiang-wang"),
    entry(0.4, Linf, 4.20e-5, "jiang-wang"),
    entry(0.4, Rms, 1.15e-6, "jiang-wang"),
    entry(0.6, Linf, 6.54e-5, "jiang-wang"),
    entry(0.6, Rms, 1.55e-6, "jiang-wang"),
    entry(0.8, Linf, 4.01e-4, "jiang-wang"),
    entry(0.8, Rms, 3.92e-6, "jiang-wang"),
    entry(1.0, Linf, 1.53e-3, "jiang-wang"),
    entry(1.0, Rms, 1.56e-5, "jiang-wang"),
    entry(0.2, Linf, 2.26e-5, "mittal-bhatia"),
    entry(0.2, Rms, 2.69e-7, "mittal-bhatia"),
    entry(0.4, Linf, 7.52e-5, "mittal-bhatia"),
    entry(0.4, Rms, 1.19e-6, "mittal-bhatia"),
    entry(0.6, Linf, 1.55e-4, "mittal-bhatia"),
    entry(0.6, Rms, 2.96e-6, "mittal-bhatia"),
    entry(0.8, Linf, 2.59e-4, "mittal-bhatia"),
    entry(0.8, Rms, 5.72e-6, "mittal-bhatia"),
    entry(1.0, Linf, 3.84e-4, "mittal-bhatia"),
    entry(1.0, Rms, 9.56e-6, "mittal-bhatia"),
];

/// Kink-problem convergence table at t = 1 with dt = 0.01 (key is h).
pub static TABLE_4: &[BaselineEntry] = &[
    entry(0.04, L2, 3.331197e-5, "reference"),
    entry(0.04, Linf, 3.743029e-5, "reference"),
    entry(0.02, L2, 8.480206e-6, "reference"),
    entry(0.02, Linf, 9.640778e-6, "reference"),
    entry(0.01, L2, 2.087315e-6, "reference"),
    entry(0.01, Linf, 2.385016e-6, "reference"),
    entry(0.005, L2, 4.660351e-7, "reference"),
    entry(0.005, Linf, 5.340646e-7, "reference"),
];

/// Errors at t = 0.25 .. 1.0 for the kink problem (c = 0.5) on [-3, 3]
/// with h = 0.04, dt = 1e-4.
pub static TABLE_5: &[BaselineEntry] = &[
    entry(0.25, L2, 5.67e-6, "reference"),
    entry(0.25, Linf, 9.61e-6, "reference"),
    entry(0.50, L2, 8.39e-6, "reference"),
    entry(0.50, Linf, 1.10e-5, "reference"),
    entry(0.75, L2, 1.05e-5, "reference"),
    entry(0.75, Linf, 1.26e-5, "reference"),
    entry(1.0, L2, 1.24e-5, "reference"),
    entry(1.0, Linf, 1.44e-5, "reference"),
    entry(0.25, L2, 1.76e-5, "dehghan-shokri"),
    entry(0.25, Linf, 4.95e-6, "dehghan-shokri"),
    entry(0.50, L2, 4.31e-5, "dehghan-shokri"),
    entry(0.50, Linf, 8.42e-6, "dehghan-shokri"),
    entry(0.75, L2, 8.25e-5, "dehghan-shokri"),
    entry(0.75, Linf, 1.65e-5, "dehghan-shokri"),
    entry(1.0, L2, 1.27e-4, "dehghan-shokri"),
    entry(1.0, Linf, 2.51e-5, "dehghan-shokri"),
    entry(0.25, L2, 3.66e-5, "mittal-bhatia"),
    entry(0.25, Linf, 4.90e-5, "mittal-bhatia"),
    entry(0.50, L2, 9.00e-5, "mittal-bhatia"),
    entry(0.50, Linf, 7.55e-5, "mittal-bhatia"),
    entry(0.75, L2, 1.60e-4, "mittal-bhatia"),
    entry(0.75, Linf, 1.43e-4, "mittal-bhatia"),
    entry(1.0, L2, 2.27e-4, "mittal-bhatia"),
    entry(1.0, Linf, 2.10e-4, "mittal-bhatia"),
];

/// Kink-problem convergence table at t = 1 with dt = 1e-4 (key is h).
pub static TABLE_6: &[BaselineEntry] = &[
    entry(0.04, L2, 1.235453e-5, "reference"),
    entry(0.04, Linf, 1.439969e-5, "reference"),
    entry(0.02, L2, 3.208207e-6, "reference"),
    entry(0.02, Linf, 3.820306e-6, "reference"),
    entry(0.01, L2, 8.168641e-7, "reference"),
    entry(0.01, Linf, 9.834778e-7, "reference"),
    entry(0.005, L2, 2.05831e-7, "reference"),
    entry(0.005, Linf, 2.493047e-7, "reference"),
];

/// Errors at t = 1, 10, 20 for the breather problem (c = 0.5) on [-10, 10]
/// with h = 0.01, dt = 1e-3.
pub static TABLE_7: &[BaselineEntry] = &[
    entry(1.0, L2, 1.866e-9, "reference"),
    entry(1.0, Linf, 2.318e-9, "reference"),
    entry(10.0, L2, 5.474e-9, "reference"),
    entry(10.0, Linf, 5.234e-9, "reference"),
    entry(20.0, L2, 9.800e-9, "reference"),
    entry(20.0, Linf, 5.471e-9, "reference"),
    entry(1.0, L2, 2.564e-5, "mittal-bhatia"),
    entry(1.0, Linf, 1.818e-5, "mittal-bhatia"),
    entry(10.0, L2, 8.850e-5, "mittal-bhatia"),
    entry(10.0, Linf, 5.228e-5, "mittal-bhatia"),
    entry(20.0, L2, 1.713e-4, "mittal-bhatia"),
    entry(20.0, Linf, 9.438e-5, "mittal-bhatia"),
    entry(1.0, Linf, 1.276e-4, "bratsos"),
    entry(10.0, Linf, 1.912e-4, "bratsos"),
    entry(20.0, Linf, 2.519e-4, "bratsos"),
];

pub fn table(id: u8) -> Option<&'static [BaselineEntry]> {
    match id {
        2 => Some(TABLE_2),
        3 => Some(TABLE_3),
        4 => Some(TABLE_4),
        5 => Some(TABLE_5),
        6 => Some(TABLE_6),
        7 => Some(TABLE_7),
        _ => None,
    }
}

/// Reference value for (key, metric), when the table carries one.
pub fn reference_value(table: &[BaselineEntry], key: f64, metric: Metric) -> Option<f64> {
    table
        .iter()
        .find(|e| e.source == "reference" && e.metric == metric && (e.key - key).abs() <= 1e-12)
        .map(|e| e.value)
}
