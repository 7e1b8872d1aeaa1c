//! Euler-Maclaurin estimation of sum-minus-integral differences, extraction
//! of asymptotic-series coefficients, and exponential decay-rate fits.

use crate::cutoffs::{maclaurin_coeffs, Cutoff, ReducedParams};
use crate::error::{Error, Result};
use crate::modesum::{PressureMethod, PressureResult};
use nalgebra::{DMatrix, DVector};
use std::f64::consts::PI;

/// Correction terms of the Euler-Maclaurin formula rearranged for Σ − ∫,
/// as exact integer rationals (derivative order, numerator, denominator):
///
/// Σ_{j≥0} G − ∫₀^∞ G = G(0)/2 − G′(0)/12 + G‴(0)/(30·4!) − G⁽⁵⁾(0)/(42·6!)
///                      + G⁽⁷⁾(0)/(30·8!) − 5·G⁽⁹⁾(0)/(66·10!)
///
/// assuming all derivatives vanish at infinity. The table ends at the 9th
/// derivative; higher orders are refused rather than extrapolated.
pub const EULER_MACLAURIN_TERMS: [(u32, i64, i64); 5] = [
    (1, -1, 12),
    (3, 1, 720),
    (5, -1, 30_240),
    (7, 1, 1_209_600),
    (9, -5, 239_500_800),
];

fn factorial(n: u32) -> f64 {
    (1..=n as u64).product::<u64>() as f64
}

// Derivative G^{(k)}(0) = k!·c_k from a Maclaurin coefficient list.
fn derivative_at_zero(coeffs: &[f64], k: u32) -> Option<f64> {
    coeffs.get(k as usize).map(|c| c * factorial(k))
}

/// Σ_{j≥0} G − ∫₀^∞ G from the Maclaurin coefficients of G, truncated at
/// derivative `order`. Returns the estimate and its error bound (the
/// magnitude of the first omitted term, or of the last included one when the
/// table is exhausted).
pub fn em_difference(coeffs: &[f64], order: u32) -> Result<(f64, f64)> {
    if order > 9 {
        return Err(Error::Unsupported(format!(
            "Euler-Maclaurin order {order} > 9: the correction table ends at the 9th derivative"
        )));
    }
    let endpoint = derivative_at_zero(coeffs, 0)
        .ok_or_else(|| Error::Domain("empty Maclaurin coefficient list".into()))?;

    let mut value = endpoint / 2.0;
    let mut last_term = value;
    for &(k, num, den) in &EULER_MACLAURIN_TERMS {
        if k > order {
            // First omitted term, if the coefficients reach it.
            let bound = derivative_at_zero(coeffs, k)
                .map(|d| (num as f64 * d / den as f64).abs())
                .unwrap_or(last_term.abs());
            return Ok((value, bound));
        }
        let d = derivative_at_zero(coeffs, k).ok_or_else(|| {
            Error::Domain(format!(
                "Maclaurin coefficients end at order {}, need derivative {k}",
                coeffs.len() - 1
            ))
        })?;
        let term = num as f64 * d / den as f64;
        value += term;
        if term != 0.0 {
            last_term = term;
        }
    }
    // Table exhausted (order = 9): asymptotic-series heuristic.
    Ok((value, last_term.abs()))
}

/// `em_difference` truncated at the smallest-magnitude term, the standard
/// stopping point for an asymptotic series.
pub fn em_difference_auto(coeffs: &[f64]) -> Result<(f64, f64)> {
    let endpoint = derivative_at_zero(coeffs, 0)
        .ok_or_else(|| Error::Domain("empty Maclaurin coefficient list".into()))?;
    let mut value = endpoint / 2.0;
    let mut prev_mag = f64::INFINITY;
    let mut bound = endpoint.abs() / 2.0;
    for &(k, num, den) in &EULER_MACLAURIN_TERMS {
        let Some(d) = derivative_at_zero(coeffs, k) else {
            break;
        };
        let term = num as f64 * d / den as f64;
        if term == 0.0 {
            continue;
        }
        if term.abs() >= prev_mag {
            return Ok((value, term.abs()));
        }
        value += term;
        prev_mag = term.abs();
        bound = term.abs();
    }
    Ok((value, bound))
}

/// Reduced pressure via the Euler-Maclaurin route; defined for the analytic
/// cutoff families at κ = 0 (the correction terms are endpoint data at
/// j = 0).
pub fn reduced_pressure_em(cutoff: Cutoff, params: &ReducedParams) -> Result<PressureResult> {
    if params.kappa != 0.0 {
        return Err(Error::Unsupported(
            "the Euler-Maclaurin route requires kappa = 0".into(),
        ));
    }
    let coeffs = maclaurin_coeffs(cutoff, params, 12)?;
    let (diff, bound) = em_difference_auto(&coeffs)?;
    Ok(PressureResult {
        reduced_pressure: -0.5 * PI * PI * diff,
        method: PressureMethod::EulerMaclaurin,
        abs_error: 0.5 * PI * PI * bound,
    })
}

/// One term of a fitted expansion in inverse powers of x.
#[derive(Debug, Clone, Copy)]
pub struct SeriesTerm {
    pub power: u32,
    pub coefficient: f64,
    /// Standard error of the coefficient from the least-squares residuals.
    pub sigma: f64,
}

/// Fitted asymptotic series Σ c_p x^{−p}; the expansion variable is 1/x.
#[derive(Debug, Clone)]
pub struct AsymptoticSeries {
    /// Terms in strictly increasing power order.
    pub terms: Vec<SeriesTerm>,
    pub residual_rms: f64,
}

impl AsymptoticSeries {
    pub fn coefficient(&self, power: u32) -> Option<f64> {
        self.terms
            .iter()
            .find(|t| t.power == power)
            .map(|t| t.coefficient)
    }

    pub fn evaluate(&self, x: f64) -> f64 {
        self.terms
            .iter()
            .map(|t| t.coefficient * x.powi(-(t.power as i32)))
            .sum()
    }
}

/// Least-squares fit of `value ≈ Σ c_p x^{−p}` over the given powers.
///
/// Requires at least `powers.len() + 2` samples with distinct positive x
/// spanning at least one decade. The design matrix is column-scaled before
/// the SVD; a condition estimate above 1e12 is reported as an error rather
/// than silently producing noise.
pub fn fit_series(samples: &[(f64, f64)], powers: &[u32]) -> Result<AsymptoticSeries> {
    if powers.is_empty() || powers.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Domain(
            "fit powers must be non-empty and strictly increasing".into(),
        ));
    }
    if samples.len() < powers.len() + 2 {
        return Err(Error::InvalidSamples(format!(
            "need at least {} samples for {} powers, got {}",
            powers.len() + 2,
            powers.len(),
            samples.len()
        )));
    }
    let mut xs: Vec<f64> = samples.iter().map(|s| s.0).collect();
    if xs.iter().any(|&x| !(x.is_finite() && x > 0.0)) {
        return Err(Error::InvalidSamples(
            "sample x values must be positive and finite".into(),
        ));
    }
    xs.sort_by(f64::total_cmp);
    if xs.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidSamples(
            "sample x values must be distinct".into(),
        ));
    }
    // Slack of a few ulps so a grid built to span exactly a decade passes.
    if xs[xs.len() - 1] / xs[0] < 10.0 * (1.0 - 1e-12) {
        return Err(Error::InvalidSamples(
            "sample x values must span at least one decade".into(),
        ));
    }

    let n = samples.len();
    let p = powers.len();
    let mut design = DMatrix::zeros(n, p);
    for (i, &(x, _)) in samples.iter().enumerate() {
        for (k, &pow) in powers.iter().enumerate() {
            design[(i, k)] = x.powi(-(pow as i32));
        }
    }
    // Column scaling keeps the condition estimate about the geometry of the
    // fit rather than the raw magnitudes of x^{-p}.
    let scales: Vec<f64> = (0..p)
        .map(|k| {
            let norm = design.column(k).norm();
            if norm > 0.0 {
                norm
            } else {
                1.0
            }
        })
        .collect();
    for (k, &s) in scales.iter().enumerate() {
        let mut col = design.column_mut(k);
        col /= s;
    }

    let rhs = DVector::from_iterator(n, samples.iter().map(|s| s.1));
    let svd = design.clone().svd(true, true);
    let smax = svd.singular_values.max();
    let smin = svd.singular_values.min();
    let condition = if smin > 0.0 {
        smax / smin
    } else {
        f64::INFINITY
    };
    if condition > 1e12 {
        return Err(Error::IllConditioned { condition });
    }
    let scaled_coeffs = svd
        .solve(&rhs, 0.0)
        .map_err(|e| Error::InvalidSamples(format!("SVD solve failed: {e}")))?;

    let coeffs: Vec<f64> = (0..p).map(|k| scaled_coeffs[k] / scales[k]).collect();

    let mut ss = 0.0;
    for &(x, v) in samples {
        let fit: f64 = powers
            .iter()
            .zip(&coeffs)
            .map(|(&pow, &c)| c * x.powi(-(pow as i32)))
            .sum();
        ss += (v - fit) * (v - fit);
    }
    let residual_rms = (ss / n as f64).sqrt();
    let dof = (n - p).max(1) as f64;
    let sigma2 = ss / dof;

    // Coefficient covariance diag(V Σ⁻² Vᵀ)·σ², undone through the scaling.
    let v_t = svd.v_t.as_ref().expect("svd computed with V");
    let sigmas: Vec<f64> = (0..p)
        .map(|k| {
            let mut var = 0.0;
            for l in 0..p {
                let s = svd.singular_values[l];
                if s > 0.0 {
                    let vkl = v_t[(l, k)];
                    var += vkl * vkl / (s * s);
                }
            }
            (var * sigma2).sqrt() / scales[k]
        })
        .collect();

    Ok(AsymptoticSeries {
        terms: powers
            .iter()
            .zip(coeffs.iter().zip(&sigmas))
            .map(|(&power, (&coefficient, &sigma))| SeriesTerm {
                power,
                coefficient,
                sigma,
            })
            .collect(),
        residual_rms,
    })
}

/// Fitted exponential decay |delta| ≈ e^{log_prefactor − rate·x}.
#[derive(Debug, Clone, Copy)]
pub struct DecayFit {
    pub rate: f64,
    pub log_prefactor: f64,
    pub residual_rms: f64,
}

/// Fitted power law |delta| ≈ e^{log_prefactor}·x^{−exponent}.
#[derive(Debug, Clone, Copy)]
pub struct PowerLawFit {
    pub exponent: f64,
    pub log_prefactor: f64,
    pub residual_rms: f64,
}

fn linear_regression(points: &[(f64, f64)]) -> (f64, f64, f64) {
    let n = points.len() as f64;
    let sx: f64 = points.iter().map(|p| p.0).sum();
    let sy: f64 = points.iter().map(|p| p.1).sum();
    let sxx: f64 = points.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = points.iter().map(|p| p.0 * p.1).sum();
    let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    let intercept = (sy - slope * sx) / n;
    let ss: f64 = points
        .iter()
        .map(|p| {
            let r = p.1 - (intercept + slope * p.0);
            r * r
        })
        .sum();
    (slope, intercept, (ss / n).sqrt())
}

fn check_decay_samples(samples: &[(f64, f64)], min_len: usize) -> Result<()> {
    if samples.len() < min_len {
        return Err(Error::InvalidSamples(format!(
            "need at least {min_len} samples, got {}",
            samples.len()
        )));
    }
    if samples.iter().any(|s| s.1 == 0.0 || !s.1.is_finite()) {
        return Err(Error::InvalidSamples(
            "deltas must be finite and non-zero".into(),
        ));
    }
    let first_sign = samples[0].1.signum();
    if samples.iter().any(|s| s.1.signum() != first_sign) {
        return Err(Error::InvalidSamples(
            "sign-alternating deltas: the decay is oscillatory here; sample at the \
             modulation period"
                .into(),
        ));
    }
    Ok(())
}

/// Linear regression of ln|delta| against x; `rate` is the decay exponent
/// per unit x. Requires ≥ 4 samples of uniform sign.
pub fn fit_decay(samples: &[(f64, f64)]) -> Result<DecayFit> {
    check_decay_samples(samples, 4)?;
    let pts: Vec<(f64, f64)> = samples.iter().map(|&(x, d)| (x, d.abs().ln())).collect();
    let (slope, intercept, rms) = linear_regression(&pts);
    Ok(DecayFit {
        rate: -slope,
        log_prefactor: intercept,
        residual_rms: rms,
    })
}

/// Linear regression of ln|delta| against ln x; the power-law counterpart of
/// [`fit_decay`], used to discriminate exponential from power-law decay.
pub fn fit_power_law(samples: &[(f64, f64)]) -> Result<PowerLawFit> {
    check_decay_samples(samples, 3)?;
    if samples.iter().any(|s| s.0 <= 0.0) {
        return Err(Error::InvalidSamples("x values must be positive".into()));
    }
    let pts: Vec<(f64, f64)> = samples
        .iter()
        .map(|&(x, d)| (x.ln(), d.abs().ln()))
        .collect();
    let (slope, intercept, rms) = linear_regression(&pts);
    Ok(PowerLawFit {
        exponent: -slope,
        log_prefactor: intercept,
        residual_rms: rms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modesum::{sum_minus_integral, IrConvention};
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn params(x: f64) -> ReducedParams {
        ReducedParams::new(x).unwrap()
    }

    #[test]
    fn table_denominators_are_the_exact_products() {
        assert_eq!(EULER_MACLAURIN_TERMS[0], (1, -1, 12));
        assert_eq!(EULER_MACLAURIN_TERMS[1].2, 30 * 24); // 30·4!
        assert_eq!(EULER_MACLAURIN_TERMS[2].2, 42 * 720); // 42·6!
        assert_eq!(EULER_MACLAURIN_TERMS[3].2, 30 * 40_320); // 30·8!
        assert_eq!(EULER_MACLAURIN_TERMS[4].2, 66 * 3_628_800); // 66·10!
        assert_eq!(EULER_MACLAURIN_TERMS[4].1, -5);
    }

    #[test]
    fn exponential_difference_through_order_five() {
        let x = 10.0;
        let a = PI / x;
        let coeffs = maclaurin_coeffs(Cutoff::Exponential, &params(x), 12).unwrap();
        let (value, bound) = em_difference(&coeffs, 5).unwrap();
        assert_relative_eq!(value, 1.0 / 120.0 - a * a / 504.0, max_relative = 1e-14);
        // First omitted term: G⁽⁷⁾(0)/(30·8!) = 210 a⁴ / 1209600.
        assert_relative_eq!(bound, 210.0 * a.powi(4) / 1_209_600.0, max_relative = 1e-12);
    }

    #[test]
    fn exponential_constant_term_is_exact() {
        // c₃ = 1 regardless of x, so the x⁰ part is exactly 6/720 = 1/120.
        for x in [2.0, 17.0, 129.0] {
            let coeffs = maclaurin_coeffs(Cutoff::Exponential, &params(x), 3).unwrap();
            let (value, _) = em_difference(&coeffs, 3).unwrap();
            assert_eq!(value, 6.0 / 720.0);
        }
    }

    #[test]
    fn quartic_difference_through_order_seven() {
        let x = 20.0;
        let b = (PI / x).powi(4);
        let coeffs =
            maclaurin_coeffs(Cutoff::PowerExponential { power: 4 }, &params(x), 12).unwrap();
        // G⁽⁷⁾(0) = 7!·c₇ = −5040 b, so the order-7 term is −5040b/1209600 = −b/240.
        let (value, _) = em_difference(&coeffs, 7).unwrap();
        assert_relative_eq!(value, 1.0 / 120.0 - b / 240.0, max_relative = 1e-13);
        // Pressure correction +π⁶/(480 x⁴) follows from −(π²/2)·(−b/240).
        let correction = -0.5 * PI * PI * (value - 1.0 / 120.0);
        assert_relative_eq!(
            correction,
            PI.powi(6) / (480.0 * x.powi(4)),
            max_relative = 1e-12
        );
    }

    #[test]
    fn zero_coefficients_give_zero() {
        assert_eq!(em_difference(&[0.0; 10], 9).unwrap().0, 0.0);
    }

    #[test]
    fn order_limits() {
        let coeffs = maclaurin_coeffs(Cutoff::Exponential, &params(5.0), 12).unwrap();
        assert!(em_difference(&coeffs, 10).is_err());
        assert!(em_difference(&coeffs[..4], 5).is_err());
    }

    #[test]
    fn em_matches_direct_difference_within_bound() {
        for x in [5.0, 20.0, 200.0] {
            let p = params(x);
            let coeffs = maclaurin_coeffs(Cutoff::Exponential, &p, 12).unwrap();
            let (em, bound) = em_difference_auto(&coeffs).unwrap();
            let direct =
                sum_minus_integral(Cutoff::Exponential, &p, 0.0, IrConvention::Continuum).unwrap();
            assert!(
                (em - direct.value).abs() <= bound + direct.abs_error,
                "x = {x}: |{em} - {}| > {bound}",
                direct.value
            );
        }
    }

    #[test]
    fn fit_recovers_synthetic_coefficients() {
        // Known series plus 1e-12 deterministic pseudo-noise.
        let samples: Vec<(f64, f64)> = (0..20)
            .map(|i| {
                let x = 10.0 * 1.3f64.powi(i);
                let noise = 1e-12 * ((i as u64 * 2654435761) % 1000) as f64 / 1000.0;
                (x, 0.25 - 3.0 / (x * x) + 7.0 / x.powi(4) + noise)
            })
            .collect();
        let fit = fit_series(&samples, &[0, 2, 4]).unwrap();
        assert_relative_eq!(fit.coefficient(0).unwrap(), 0.25, max_relative = 1e-8);
        assert_relative_eq!(fit.coefficient(2).unwrap(), -3.0, max_relative = 1e-8);
        assert!(fit.residual_rms < 1e-11);
        for t in &fit.terms {
            assert!(t.sigma.is_finite());
        }
    }

    #[test]
    fn fit_constant_samples() {
        let samples: Vec<(f64, f64)> = (1..=8).map(|i| (2.0f64.powi(i), 42.0)).collect();
        let fit = fit_series(&samples, &[0]).unwrap();
        assert_relative_eq!(fit.coefficient(0).unwrap(), 42.0, max_relative = 1e-14);
        assert_abs_diff_eq!(fit.residual_rms, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn fit_precondition_errors() {
        let ok: Vec<(f64, f64)> = (0..10).map(|i| (10.0 * 1.5f64.powi(i), 1.0)).collect();
        assert!(fit_series(&ok[..2], &[0, 2]).is_err());
        let narrow: Vec<(f64, f64)> = (0..10).map(|i| (10.0 + i as f64 * 0.1, 1.0)).collect();
        assert!(matches!(
            fit_series(&narrow, &[0]),
            Err(Error::InvalidSamples(_))
        ));
        assert!(fit_series(&ok, &[2, 0]).is_err());
    }

    #[test]
    fn fit_reports_ill_conditioning() {
        // Five consecutive high powers over one decade: after column
        // scaling the columns are nearly parallel.
        let samples: Vec<(f64, f64)> = (0..8)
            .map(|i| {
                let x = 10.0 * (10.0f64).powf(i as f64 / 7.0);
                (x, 1.0 / x)
            })
            .collect();
        match fit_series(&samples, &[18, 19, 20, 21, 22]) {
            Err(Error::IllConditioned { condition }) => assert!(condition > 1e12),
            other => panic!("expected IllConditioned, got {other:?}"),
        }
    }

    #[test]
    fn decay_fit_synthetic() {
        let pure: Vec<(f64, f64)> = (4..12)
            .map(|i| (i as f64, (-3.0 * i as f64).exp()))
            .collect();
        let f = fit_decay(&pure).unwrap();
        assert_relative_eq!(f.rate, 3.0, max_relative = 1e-12);
        assert_abs_diff_eq!(f.residual_rms, 0.0, epsilon = 1e-10);

        let scaled: Vec<(f64, f64)> = (4..12)
            .map(|i| (i as f64, 5.0 * (-(i as f64)).exp()))
            .collect();
        let f = fit_decay(&scaled).unwrap();
        assert_relative_eq!(f.rate, 1.0, max_relative = 1e-12);
        assert_relative_eq!(f.log_prefactor, 5.0f64.ln(), max_relative = 1e-10);
    }

    #[test]
    fn decay_fit_rejects_bad_samples() {
        let alternating: Vec<(f64, f64)> = (4..12)
            .map(|i| (i as f64, (-1.0f64).powi(i) * (-(i as f64)).exp()))
            .collect();
        assert!(matches!(
            fit_decay(&alternating),
            Err(Error::InvalidSamples(_))
        ));
        assert!(fit_decay(&[(1.0, 0.5), (2.0, 0.2), (3.0, 0.1)]).is_err());
    }

    #[test]
    fn power_law_fit_synthetic() {
        let samples: Vec<(f64, f64)> = (1..8)
            .map(|i| {
                let x = 5.0 * i as f64;
                (x, 7.0 / (x * x))
            })
            .collect();
        let f = fit_power_law(&samples).unwrap();
        assert_relative_eq!(f.exponent, 2.0, max_relative = 1e-12);
        assert_relative_eq!(f.log_prefactor, 7.0f64.ln(), max_relative = 1e-10);
    }

    #[test]
    fn em_pressure_route() {
        let p = reduced_pressure_em(Cutoff::Exponential, &params(50.0)).unwrap();
        assert_eq!(p.method, PressureMethod::EulerMaclaurin);
        // The x⁻⁴ term omitted from the reference value is ≈ −1.3e-8.
        assert_abs_diff_eq!(
            p.reduced_pressure,
            -PI * PI / 240.0 + PI.powi(4) / (1008.0 * 2500.0),
            epsilon = 2e-8
        );
        let truncated = ReducedParams::with(50.0, 0.4, 1.0).unwrap();
        assert!(reduced_pressure_em(Cutoff::Exponential, &truncated).is_err());
        assert!(reduced_pressure_em(Cutoff::TanhHard, &params(50.0)).is_err());
    }
}
