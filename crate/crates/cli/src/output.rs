//! CSV and JSON writers.
//!
//! Numbers in CSV files use `.` as decimal separator and scientific
//! notation with ten significant digits, so files are reproducible
//! byte-for-byte across runs (except fields documented as timing metadata).

use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use crate::Failure;

pub fn fmt_sci(x: f64) -> String {
    format!("{x:.9e}")
}

pub fn ensure_dir(dir: &Path) -> Result<(), Failure> {
    fs::create_dir_all(dir)
        .map_err(|e| Failure::usage(format!("cannot create output dir {}: {e}", dir.display())))
}

pub fn create(path: &Path) -> Result<BufWriter<File>, Failure> {
    let file = File::create(path)
        .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
    Ok(BufWriter::new(file))
}

pub fn finish(mut w: BufWriter<File>, path: &Path) -> Result<(), Failure> {
    w.flush()
        .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))
}

/// Snapshot file: one row per node with the exact solution and pointwise
/// error when available.
pub fn write_snapshot(
    dir: &Path,
    t: f64,
    xs: &[f64],
    u: &[f64],
    exact: Option<&dyn Fn(f64, f64) -> f64>,
) -> Result<PathBuf, Failure> {
    let path = dir.join(format!("snapshot_t{t}.csv"));
    let mut w = create(&path)?;
    let header = if exact.is_some() {
        "x,u_numerical,u_exact,error"
    } else {
        "x,u_numerical"
    };
    writeln!(w, "{header}").map_err(|e| Failure::usage(e.to_string()))?;
    for (i, &x) in xs.iter().enumerate() {
        let line = match exact {
            Some(f) => {
                let ue = f(x, t);
                format!(
                    "{},{},{},{}",
                    fmt_sci(x),
                    fmt_sci(u[i]),
                    fmt_sci(ue),
                    fmt_sci(ue - u[i])
                )
            }
            None => format!("{},{}", fmt_sci(x), fmt_sci(u[i])),
        };
        writeln!(w, "{line}").map_err(|e| Failure::usage(e.to_string()))?;
    }
    finish(w, &path)?;
    Ok(path)
}

/// Combined `(t, x, u)` grid across all recorded states, ready for surface
/// or contour plotting.
pub fn write_surface(dir: &Path, states: &[(f64, &[f64])], xs: &[f64]) -> Result<PathBuf, Failure> {
    let path = dir.join("surface.csv");
    let mut w = create(&path)?;
    writeln!(w, "t,x,u").map_err(|e| Failure::usage(e.to_string()))?;
    for (t, u) in states {
        for (&x, &v) in xs.iter().zip(*u) {
            writeln!(w, "{t},{},{}", fmt_sci(x), fmt_sci(v))
                .map_err(|e| Failure::usage(e.to_string()))?;
        }
    }
    finish(w, &path)?;
    Ok(path)
}

/// Gnuplot script plotting every snapshot against the exact solution.
pub fn write_gnuplot(dir: &Path, times: &[f64], with_exact: bool) -> Result<PathBuf, Failure> {
    let path = dir.join("plot.gp");
    let mut w = create(&path)?;
    let mut plot_lines = Vec::new();
    for &t in times {
        plot_lines.push(format!(
            "'snapshot_t{t}.csv' using 1:2 with lines title 'numerical t={t}'"
        ));
        if with_exact {
            plot_lines.push(format!(
                "'snapshot_t{t}.csv' using 1:3 with points pointtype 6 pointsize 0.4 title 'exact t={t}'"
            ));
        }
    }
    writeln!(
        w,
        "set datafile separator ','\nset key outside\nset xlabel 'x'\nset ylabel 'u'\nplot \\\n  {}",
        plot_lines.join(", \\\n  ")
    )
    .map_err(|e| Failure::usage(e.to_string()))?;
    finish(w, &path)?;
    Ok(path)
}
