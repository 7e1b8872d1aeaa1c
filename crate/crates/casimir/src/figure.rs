//! Deterministic CSV and SVG emission: the IR-window figure and parameter
//! sweeps.
//!
//! Everything here renders to `String`s with fixed formatting (period
//! decimal separator, `\n` newlines) so identical inputs produce identical
//! bytes; file I/O is left to callers.

use crate::abelplana::ir_truncated_pressure;
use crate::cutoffs::{Cutoff, ReducedParams};
use crate::error::{Error, Result};
use crate::modesum::{PressureMethod, PressureResult};
use std::f64::consts::PI;

/// Default α range of the IR-window figure.
pub const FIG2_DEFAULT_ALPHA_MAX: f64 = 1.58;
/// Default number of samples of the IR-window figure.
pub const FIG2_DEFAULT_POINTS: usize = 100;

/// Uniform samples of the IR-truncated pressure P(α) on [0, alpha_max].
pub fn fig2_rows(alpha_max: f64, points: usize) -> Result<Vec<(f64, f64)>> {
    if !(alpha_max.is_finite() && alpha_max > 0.0) {
        return Err(Error::Domain(format!(
            "alpha_max must be positive, got {alpha_max}"
        )));
    }
    if points < 2 {
        return Err(Error::Domain(format!(
            "need at least 2 points, got {points}"
        )));
    }
    (0..points)
        .map(|i| {
            let alpha = alpha_max * i as f64 / (points - 1) as f64;
            ir_truncated_pressure(alpha).map(|p| (alpha, p.reduced_pressure))
        })
        .collect()
}

/// CSV rendering of [`fig2_rows`]: header `alpha,reduced_pressure`, six
/// decimal places, one row per sample.
pub fn fig2_csv(rows: &[(f64, f64)]) -> String {
    let mut out = String::with_capacity(32 * (rows.len() + 1));
    out.push_str("alpha,reduced_pressure\n");
    for &(alpha, p) in rows {
        out.push_str(&format!("{alpha:.6},{p:.6}\n"));
    }
    out
}

/// Standalone SVG 1.1 line chart of [`fig2_rows`].
pub fn fig2_svg(rows: &[(f64, f64)]) -> String {
    const W: f64 = 720.0;
    const H: f64 = 480.0;
    const LEFT: f64 = 90.0;
    const RIGHT: f64 = 20.0;
    const TOP: f64 = 20.0;
    const BOTTOM: f64 = 60.0;

    let (x_min, x_max) = rows
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| {
            (lo.min(r.0), hi.max(r.0))
        });
    let (y_lo, y_hi) = rows
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| {
            (lo.min(r.1), hi.max(r.1))
        });
    let pad = 0.05 * (y_hi - y_lo).max(1e-12);
    let (y_min, y_max) = (y_lo - pad, y_hi + pad);

    let px = |alpha: f64| LEFT + (alpha - x_min) / (x_max - x_min) * (W - LEFT - RIGHT);
    let py = |p: f64| H - BOTTOM - (p - y_min) / (y_max - y_min) * (H - TOP - BOTTOM);

    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{W}\" height=\"{H}\" \
         viewBox=\"0 0 {W} {H}\">\n"
    ));
    svg.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

    // Axes.
    svg.push_str(&format!(
        "<line x1=\"{LEFT}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"black\"/>\n",
        H - BOTTOM,
        W - RIGHT,
        H - BOTTOM
    ));
    svg.push_str(&format!(
        "<line x1=\"{LEFT}\" y1=\"{TOP}\" x2=\"{LEFT}\" y2=\"{:.2}\" stroke=\"black\"/>\n",
        H - BOTTOM
    ));

    // Dashed zero line when the pressure changes sign.
    if y_min < 0.0 && y_max > 0.0 {
        svg.push_str(&format!(
            "<line x1=\"{LEFT}\" y1=\"{0:.2}\" x2=\"{1:.2}\" y2=\"{0:.2}\" stroke=\"gray\" \
             stroke-dasharray=\"4 3\"/>\n",
            py(0.0),
            W - RIGHT
        ));
    }

    // Ticks and numeric labels.
    for i in 0..=5 {
        let alpha = x_min + (x_max - x_min) * i as f64 / 5.0;
        let x = px(alpha);
        svg.push_str(&format!(
            "<line x1=\"{x:.2}\" y1=\"{0:.2}\" x2=\"{x:.2}\" y2=\"{1:.2}\" stroke=\"black\"/>\n",
            H - BOTTOM,
            H - BOTTOM + 5.0
        ));
        svg.push_str(&format!(
            "<text x=\"{x:.2}\" y=\"{:.2}\" font-size=\"12\" text-anchor=\"middle\" \
             font-family=\"sans-serif\">{alpha:.2}</text>\n",
            H - BOTTOM + 18.0
        ));
    }
    for i in 0..=5 {
        let p = y_min + (y_max - y_min) * i as f64 / 5.0;
        let y = py(p);
        svg.push_str(&format!(
            "<line x1=\"{0:.2}\" y1=\"{y:.2}\" x2=\"{LEFT}\" y2=\"{y:.2}\" stroke=\"black\"/>\n",
            LEFT - 5.0
        ));
        svg.push_str(&format!(
            "<text x=\"{0:.2}\" y=\"{1:.2}\" font-size=\"12\" text-anchor=\"end\" \
             font-family=\"sans-serif\">{p:.4}</text>\n",
            LEFT - 8.0,
            y + 4.0
        ));
    }

    // Axis labels, matching the figure this plot reproduces.
    svg.push_str(&format!(
        "<text x=\"{:.2}\" y=\"{:.2}\" font-size=\"14\" text-anchor=\"middle\" \
         font-family=\"sans-serif\">Parameter α</text>\n",
        LEFT + (W - LEFT - RIGHT) / 2.0,
        H - 15.0
    ));
    svg.push_str(&format!(
        "<text x=\"20\" y=\"{0:.2}\" font-size=\"14\" text-anchor=\"middle\" \
         font-family=\"sans-serif\" transform=\"rotate(-90 20 {0:.2})\">Casimir pressure in \
         units of d⁻⁴</text>\n",
        TOP + (H - TOP - BOTTOM) / 2.0
    ));

    let points: Vec<String> = rows
        .iter()
        .map(|&(alpha, p)| format!("{:.2},{:.2}", px(alpha), py(p)))
        .collect();
    svg.push_str(&format!(
        "<polyline fill=\"none\" stroke=\"#2a7fb8\" stroke-width=\"2\" points=\"{}\"/>\n",
        points.join(" ")
    ));
    svg.push_str("</svg>\n");
    svg
}

/// Which parameter a sweep varies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepVariable {
    X,
    Alpha,
    Nu,
}

impl SweepVariable {
    pub fn name(self) -> &'static str {
        match self {
            SweepVariable::X => "x",
            SweepVariable::Alpha => "alpha",
            SweepVariable::Nu => "nu",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepScale {
    Linear,
    Log,
}

/// Sweep grid: `points` values of `variable` from `start` to `stop`.
#[derive(Debug, Clone, Copy)]
pub struct SweepGrid {
    pub variable: SweepVariable,
    pub start: f64,
    pub stop: f64,
    pub points: usize,
    pub scale: SweepScale,
}

impl SweepGrid {
    pub fn validate(&self) -> Result<()> {
        if !(self.start.is_finite() && self.stop.is_finite() && self.start < self.stop) {
            return Err(Error::Domain(format!(
                "sweep requires start < stop, got [{}, {}]",
                self.start, self.stop
            )));
        }
        if self.points < 2 {
            return Err(Error::Domain(format!(
                "sweep needs at least 2 points, got {}",
                self.points
            )));
        }
        if self.scale == SweepScale::Log && self.start <= 0.0 {
            return Err(Error::Domain("log-scale sweep requires start > 0".into()));
        }
        Ok(())
    }

    /// Grid values in index order.
    pub fn values(&self) -> Vec<f64> {
        let n = self.points;
        (0..n)
            .map(|i| {
                let t = i as f64 / (n - 1) as f64;
                match self.scale {
                    SweepScale::Linear => self.start + t * (self.stop - self.start),
                    SweepScale::Log => {
                        (self.start.ln() + t * (self.stop.ln() - self.start.ln())).exp()
                    }
                }
            })
            .collect()
    }
}

/// One evaluated sweep point; failures are recorded, not propagated.
#[derive(Debug, Clone)]
pub struct SweepRow {
    pub value: f64,
    pub pressure: Result<PressureResult>,
}

/// Evaluates a sweep, optionally across `threads` worker threads. Rows come
/// back keyed by grid index, never by completion order.
pub fn run_sweep(
    grid: &SweepGrid,
    cutoff: Cutoff,
    base: &ReducedParams,
    method: PressureMethod,
    threads: usize,
) -> Result<Vec<SweepRow>> {
    grid.validate()?;
    let values = grid.values();
    let evaluate = |v: f64| -> SweepRow {
        let params = match grid.variable {
            SweepVariable::X => ReducedParams::with(v, base.kappa, base.nu),
            SweepVariable::Alpha => ReducedParams::with(base.x, v / PI, base.nu),
            SweepVariable::Nu => ReducedParams::with(base.x, base.kappa, v),
        };
        let pressure = params.and_then(|p| crate::reduced_pressure(cutoff, &p, method));
        SweepRow { value: v, pressure }
    };

    let threads = threads.clamp(1, values.len());
    if threads == 1 {
        return Ok(values.into_iter().map(evaluate).collect());
    }

    let mut rows: Vec<Option<SweepRow>> = vec![None; values.len()];
    std::thread::scope(|scope| {
        let chunk = values.len().div_ceil(threads);
        let mut pending: Vec<_> = Vec::new();
        for (t, value_chunk) in values.chunks(chunk).enumerate() {
            let eval = &evaluate;
            pending.push((
                t * chunk,
                scope.spawn(move || value_chunk.iter().map(|&v| eval(v)).collect::<Vec<_>>()),
            ));
        }
        for (offset, handle) in pending {
            for (i, row) in handle
                .join()
                .expect("sweep worker panicked")
                .into_iter()
                .enumerate()
            {
                rows[offset + i] = Some(row);
            }
        }
    });
    Ok(rows
        .into_iter()
        .map(|r| r.expect("all rows filled"))
        .collect())
}

fn error_code(e: &Error) -> &'static str {
    match e {
        Error::Domain(_) => "domain",
        Error::Unsupported(_) => "unsupported",
        Error::NonConvergence { .. } => "non-convergence",
        Error::IllConditioned { .. } => "ill-conditioned",
        Error::InvalidSamples(_) => "invalid-samples",
    }
}

/// CSV rendering of a sweep: `variable,value,reduced_pressure,abs_error,error`
/// with nine significant digits; failed points leave the numeric fields
/// empty and carry an error code.
pub fn sweep_csv(variable: SweepVariable, rows: &[SweepRow]) -> String {
    let mut out = String::with_capacity(48 * (rows.len() + 1));
    out.push_str("variable,value,reduced_pressure,abs_error,error\n");
    for row in rows {
        match &row.pressure {
            Ok(p) => out.push_str(&format!(
                "{},{:.8e},{:.8e},{:.8e},\n",
                variable.name(),
                row.value,
                p.reduced_pressure,
                p.abs_error
            )),
            Err(e) => out.push_str(&format!(
                "{},{:.8e},,,{}\n",
                variable.name(),
                row.value,
                error_code(e)
            )),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn fig2_defaults() {
        let rows = fig2_rows(FIG2_DEFAULT_ALPHA_MAX, FIG2_DEFAULT_POINTS).unwrap();
        assert_eq!(rows.len(), 100);
        let csv = fig2_csv(&rows);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("alpha,reduced_pressure"));
        assert_eq!(lines.next(), Some("0.000000,-0.041123"));
        // Last row at α = 1.58, negative pressure; α = 1 row positive.
        let last = rows.last().unwrap();
        assert_abs_diff_eq!(last.0, 1.58, epsilon = 1e-12);
        assert!(last.1 < 0.0);
        let near_one = rows
            .iter()
            .min_by(|a, b| (a.0 - 1.0).abs().total_cmp(&(b.0 - 1.0).abs()))
            .unwrap();
        assert!(near_one.1 > 0.0);
    }

    #[test]
    fn fig2_two_points() {
        let rows = fig2_rows(1.58, 2).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].0, 0.0);
        assert_abs_diff_eq!(rows[1].0, 1.58, epsilon = 1e-12);
        assert!(fig2_rows(-1.0, 10).is_err());
        assert!(fig2_rows(1.0, 1).is_err());
    }

    #[test]
    fn fig2_output_is_deterministic() {
        let rows = fig2_rows(1.58, 100).unwrap();
        assert_eq!(fig2_csv(&rows), fig2_csv(&rows));
        let svg = fig2_svg(&rows);
        assert_eq!(svg, fig2_svg(&rows));
        assert!(svg.starts_with("<?xml version=\"1.0\""));
        assert!(svg.contains("Parameter α"));
        assert!(svg.contains("Casimir pressure in units of d⁻⁴"));
        assert!(svg.contains("<polyline"));
    }

    #[test]
    fn grid_validation() {
        let bad_range = SweepGrid {
            variable: SweepVariable::X,
            start: 5.0,
            stop: 2.0,
            points: 10,
            scale: SweepScale::Linear,
        };
        assert!(bad_range.validate().is_err());
        let bad_log = SweepGrid {
            variable: SweepVariable::Alpha,
            start: 0.0,
            stop: 2.0,
            points: 10,
            scale: SweepScale::Log,
        };
        assert!(bad_log.validate().is_err());
        let ok = SweepGrid {
            variable: SweepVariable::X,
            start: 1.0,
            stop: 100.0,
            points: 5,
            scale: SweepScale::Log,
        };
        ok.validate().unwrap();
        let v = ok.values();
        assert_eq!(v.len(), 5);
        assert_abs_diff_eq!(v[0], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(v[2], 10.0, epsilon = 1e-9);
        assert_abs_diff_eq!(v[4], 100.0, epsilon = 1e-9);
    }

    #[test]
    fn alpha_sweep_matches_fig2() {
        let grid = SweepGrid {
            variable: SweepVariable::Alpha,
            start: 0.0,
            stop: 1.58,
            points: 20,
            scale: SweepScale::Linear,
        };
        let base = ReducedParams::new(50.0).unwrap();
        let rows = run_sweep(&grid, Cutoff::None, &base, PressureMethod::ClosedForm, 1).unwrap();
        let fig = fig2_rows(1.58, 20).unwrap();
        for (row, f) in rows.iter().zip(&fig) {
            assert_abs_diff_eq!(row.value, f.0, epsilon = 1e-12);
            assert_abs_diff_eq!(
                row.pressure.as_ref().unwrap().reduced_pressure,
                f.1,
                epsilon = 1e-14
            );
        }
    }

    #[test]
    fn sweep_is_thread_invariant() {
        let grid = SweepGrid {
            variable: SweepVariable::X,
            start: 5.0,
            stop: 50.0,
            points: 9,
            scale: SweepScale::Log,
        };
        let base = ReducedParams::new(50.0).unwrap();
        let one = run_sweep(&grid, Cutoff::Exponential, &base, PressureMethod::Direct, 1).unwrap();
        let four = run_sweep(&grid, Cutoff::Exponential, &base, PressureMethod::Direct, 4).unwrap();
        assert_eq!(
            sweep_csv(grid.variable, &one),
            sweep_csv(grid.variable, &four)
        );
    }

    #[test]
    fn tanh_nu_sweep_deviation_grows() {
        let grid = SweepGrid {
            variable: SweepVariable::Nu,
            start: 0.5,
            stop: 2.0,
            points: 4,
            scale: SweepScale::Linear,
        };
        let base = ReducedParams::new(10.0).unwrap();
        let rows = run_sweep(&grid, Cutoff::TanhHard, &base, PressureMethod::AbelPlana, 2).unwrap();
        let ideal = -PI * PI / 240.0;
        let devs: Vec<f64> = rows
            .iter()
            .map(|r| (r.pressure.as_ref().unwrap().reduced_pressure - ideal).abs())
            .collect();
        for w in devs.windows(2) {
            assert!(w[1] > w[0], "deviation should grow with nu: {devs:?}");
        }
    }

    #[test]
    fn x_sweep_approaches_ideal_monotonically() {
        let grid = SweepGrid {
            variable: SweepVariable::X,
            start: 5.0,
            stop: 200.0,
            points: 10,
            scale: SweepScale::Log,
        };
        let base = ReducedParams::new(50.0).unwrap();
        let rows = run_sweep(&grid, Cutoff::Exponential, &base, PressureMethod::Direct, 2).unwrap();
        let ideal = -PI * PI / 240.0;
        let devs: Vec<f64> = rows
            .iter()
            .map(|r| (r.pressure.as_ref().unwrap().reduced_pressure - ideal).abs())
            .collect();
        for w in devs.windows(2) {
            assert!(w[1] < w[0], "not monotone: {devs:?}");
        }
    }

    #[test]
    fn sweep_records_per_point_failures() {
        // An x sweep reaching into x ≤ 0 must fail per-point, not globally.
        let grid = SweepGrid {
            variable: SweepVariable::Nu,
            start: -1.0,
            stop: 1.0,
            points: 3,
            scale: SweepScale::Linear,
        };
        let base = ReducedParams::new(10.0).unwrap();
        let rows = run_sweep(&grid, Cutoff::TanhHard, &base, PressureMethod::AbelPlana, 1).unwrap();
        assert!(rows[0].pressure.is_err());
        assert!(rows[2].pressure.is_ok());
        let csv = sweep_csv(grid.variable, &rows);
        assert!(csv.lines().nth(1).unwrap().ends_with(",domain"));
    }
}
