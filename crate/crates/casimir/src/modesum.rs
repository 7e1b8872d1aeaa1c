//! Discrete mode sums, continuum integrals, and their difference.
//!
//! The reduced Casimir pressure is P = −(π²/2)(Σ − ∫) with
//! G(j) = j³·f(πj/x) summed over modes and integrated over the continuum.
//! Σ and ∫ both grow like 6x⁴/π⁴ while their difference stays O(1/120), so
//! the difference is never formed by subtracting the two totals: it is
//! accumulated interval by interval as Σ_j [G(j) − ∫_j^{j+1} G], which keeps
//! the absolute rounding floor at the scale of the difference itself.

use crate::cutoffs::{weight_unchecked, Cutoff, ReducedParams};
use crate::error::{Error, Result};
use crate::kahan::KahanSum;
use crate::quad;
use std::f64::consts::PI;

/// Default relative tolerance of the summation stopping rule. The stop
/// criterion compares the analytic tail bound against this fraction of the
/// running sum; near machine precision the truncation bias stays below the
/// accumulated rounding for every x this crate targets.
pub const SUM_REL_TOL: f64 = 1e-15;
/// Default relative tolerance of continuum quadratures.
pub const QUAD_REL_TOL: f64 = 1e-12;
/// Hard cap on the number of summed modes.
pub const J_MAX: usize = 10_000_000;

/// How a mode sum or integral was evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumMethod {
    Direct,
    ClosedForm,
    Quadrature,
}

/// Value of a mode sum, integral, or sum-minus-integral difference.
///
/// `abs_error` is a rigorous rounding bound for closed forms and a
/// tail-plus-rounding estimate for direct summation.
#[derive(Debug, Clone, Copy)]
pub struct ModeSumResult {
    pub value: f64,
    pub abs_error: f64,
    pub terms_used: usize,
    pub method: SumMethod,
}

/// Route that produced a pressure value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PressureMethod {
    Direct,
    EulerMaclaurin,
    AbelPlana,
    ClosedForm,
}

impl std::fmt::Display for PressureMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PressureMethod::Direct => write!(f, "direct"),
            PressureMethod::EulerMaclaurin => write!(f, "euler-maclaurin"),
            PressureMethod::AbelPlana => write!(f, "abel-plana"),
            PressureMethod::ClosedForm => write!(f, "closed-form"),
        }
    }
}

/// Reduced pressure P = p·d⁴ with an error estimate.
#[derive(Debug, Clone, Copy)]
pub struct PressureResult {
    pub reduced_pressure: f64,
    pub method: PressureMethod,
    pub abs_error: f64,
}

/// Treatment of a non-integer IR truncation point.
///
/// The closed forms treat the lower summation limit κ = d·k_c/π as a
/// continuum value: the "sum" runs over κ, κ+1, κ+2, …. `Continuum`
/// reproduces those closed forms exactly and is the default. `IntegerStart`
/// sums over the physical integer lattice from ⌈κ⌉ instead, exposing the
/// staircase deviation between the two conventions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IrConvention {
    #[default]
    Continuum,
    IntegerStart,
}

fn check_decaying(cutoff: Cutoff, what: &str) -> Result<()> {
    if !cutoff.is_decaying() {
        return Err(Error::Domain(format!(
            "{what} diverges without a decaying cutoff"
        )));
    }
    Ok(())
}

fn check_j_start(j_start: f64) -> Result<()> {
    if !(j_start.is_finite() && j_start >= 0.0) {
        return Err(Error::Domain(format!(
            "summation start must be finite and non-negative, got {j_start}"
        )));
    }
    Ok(())
}

/// Compensated summation of j³·f(πj/x) over j = j_start, j_start+1, …
/// (continuum convention).
pub fn sum_modes(cutoff: Cutoff, params: &ReducedParams, j_start: f64) -> Result<ModeSumResult> {
    sum_modes_with(cutoff, params, j_start, IrConvention::Continuum)
}

/// `sum_modes` with an explicit IR convention; `IntegerStart` begins the
/// lattice at ⌈j_start⌉ instead of j_start itself.
pub fn sum_modes_with(
    cutoff: Cutoff,
    params: &ReducedParams,
    j_start: f64,
    convention: IrConvention,
) -> Result<ModeSumResult> {
    check_decaying(cutoff, "mode sum")?;
    check_j_start(j_start)?;

    let j0 = match convention {
        IrConvention::Continuum => j_start,
        IrConvention::IntegerStart => j_start.ceil(),
    };
    // Index past which every family's term ratio is decreasing.
    let settle = settle_index(cutoff, params);

    let mut sum = KahanSum::new();
    let mut abs_sum = 0.0;
    let mut m: usize = 0;
    loop {
        let j = j0 + m as f64;
        let term = j.powi(3) * weight_unchecked(cutoff, j, params);
        sum.add(term);
        abs_sum += term.abs();
        m += 1;

        if j > settle {
            if term == 0.0 {
                break;
            }
            let next = (j + 1.0).powi(3) * weight_unchecked(cutoff, j + 1.0, params);
            if let Some(tail) = tail_bound(cutoff, params, j, term, next) {
                if tail <= SUM_REL_TOL * sum.value().abs() {
                    let value = sum.value();
                    return Ok(ModeSumResult {
                        value,
                        abs_error: tail + 4.0 * f64::EPSILON * abs_sum,
                        terms_used: m,
                        method: SumMethod::Direct,
                    });
                }
            }
        }
        if m >= J_MAX {
            return Err(Error::NonConvergence {
                what: format!("mode sum ({cutoff} cutoff, x = {})", params.x),
                achieved: f64::INFINITY,
                required: SUM_REL_TOL,
            });
        }
    }
    // Terms underflowed to zero: the remaining tail is below 1e-300.
    Ok(ModeSumResult {
        value: sum.value(),
        abs_error: 4.0 * f64::EPSILON * abs_sum + 1e-300,
        terms_used: m,
        method: SumMethod::Direct,
    })
}

// Smallest index past the last local maximum of j³ f(πj/x).
fn settle_index(cutoff: Cutoff, params: &ReducedParams) -> f64 {
    match cutoff {
        Cutoff::Exponential => 3.0 * params.x / PI + 1.0,
        Cutoff::PowerExponential { power } => {
            let p = power as f64;
            params.x / PI * (3.0 / p).powf(1.0 / p) + 1.0
        }
        Cutoff::TanhHard => (params.x + 2.0 * params.nu) / PI + 1.0,
        Cutoff::None => f64::INFINITY,
    }
}

// Upper bound on the remaining tail Σ_{i>j} i³ f after the term at j.
fn tail_bound(
    cutoff: Cutoff,
    params: &ReducedParams,
    j: f64,
    term: f64,
    next_term: f64,
) -> Option<f64> {
    match cutoff {
        Cutoff::Exponential => {
            // Ratios (1+1/j)³ q decrease in j, so the tail is bounded by the
            // geometric series started at the next term.
            let q = (-PI / params.x).exp();
            let ratio = q * ((j + 1.0) / j).powi(3);
            (ratio < 1.0).then(|| next_term / (1.0 - ratio))
        }
        _ => {
            // Ratio test with a safety factor; valid once the ratio
            // decreases, which `settle_index` guarantees.
            if term <= 0.0 {
                return Some(0.0);
            }
            let ratio = next_term / term;
            (ratio < 0.999).then(|| 10.0 * next_term / (1.0 - ratio))
        }
    }
}

/// Closed form of Σ_{j = j_start, j_start+1, …} j³ e^{−πj/x}: the geometric
/// moment sums q^κ [κ³/(1−q) + (3κ²+3κ+1)q/(1−q)² + (6κ+6)q²/(1−q)³ +
/// 6q³/(1−q)⁴] with q = e^{−π/x}, valid for any real lower limit κ ≥ 0.
pub fn closed_sum_exponential(params: &ReducedParams, j_start: f64) -> Result<ModeSumResult> {
    check_j_start(j_start)?;
    if params.x < 1e-3 {
        return Err(Error::Domain(format!(
            "x = {} too small for the closed form (e^{{π/x}} overflows)",
            params.x
        )));
    }
    let k = j_start;
    let q = (-PI / params.x).exp();
    let omq = -(-PI / params.x).exp_m1(); // 1 − q without cancellation
    let qk = (-PI * k / params.x).exp();

    let value = qk
        * (k.powi(3) / omq
            + (3.0 * k * k + 3.0 * k + 1.0) * q / (omq * omq)
            + (6.0 * k + 6.0) * q * q / (omq * omq * omq)
            + 6.0 * q * q * q / (omq * omq * omq * omq));
    // Rounding only; the (1−q)⁻⁴ powers amplify the rounding of q.
    let abs_error = f64::EPSILON * value.abs() * (2.0 + 8.0 * q / omq);
    Ok(ModeSumResult {
        value,
        abs_error,
        terms_used: 0,
        method: SumMethod::ClosedForm,
    })
}

/// Continuum integral ∫_{j_start}^∞ dj j³ f(πj/x): closed form for the
/// exponential family, adaptive quadrature otherwise.
pub fn integral_modes(
    cutoff: Cutoff,
    params: &ReducedParams,
    j_start: f64,
) -> Result<ModeSumResult> {
    check_decaying(cutoff, "mode integral")?;
    check_j_start(j_start)?;

    if cutoff == Cutoff::Exponential {
        let u = PI * j_start / params.x;
        let value = (params.x / PI).powi(4) * (-u).exp() * (6.0 + u * (6.0 + u * (3.0 + u)));
        return Ok(ModeSumResult {
            value,
            abs_error: 8.0 * f64::EPSILON * value,
            terms_used: 0,
            method: SumMethod::ClosedForm,
        });
    }

    let upper = integrand_support_end(cutoff, params);
    if j_start >= upper {
        return Ok(ModeSumResult {
            value: 0.0,
            abs_error: 1e-300,
            terms_used: 0,
            method: SumMethod::Quadrature,
        });
    }
    let pts = breakpoints(cutoff, params, j_start, upper);
    let r = quad::adaptive_segmented(
        |j| j.powi(3) * weight_unchecked(cutoff, j, params),
        &pts,
        QUAD_REL_TOL,
    )?;
    Ok(ModeSumResult {
        value: r.value,
        abs_error: r.abs_error,
        terms_used: r.evaluations,
        method: SumMethod::Quadrature,
    })
}

// Point past which j³ f(πj/x) has fallen below ~1e-300.
fn integrand_support_end(cutoff: Cutoff, params: &ReducedParams) -> f64 {
    let decades = 708.0; // -ln(1e-300) with margin for the j³ factor
    match cutoff {
        Cutoff::Exponential => params.x / PI * (decades + 30.0),
        Cutoff::PowerExponential { power } => {
            let p = power as f64;
            let mut j = params.x / PI * decades.powf(1.0 / p);
            for _ in 0..3 {
                j = params.x / PI * (decades + 3.0 * j.max(1.0).ln()).powf(1.0 / p);
            }
            j
        }
        Cutoff::TanhHard => {
            let mut j = (params.x + params.nu * decades / 2.0) / PI;
            for _ in 0..3 {
                j = (params.x + params.nu * (decades + 3.0 * j.max(1.0).ln()) / 2.0) / PI;
            }
            j
        }
        Cutoff::None => f64::INFINITY,
    }
}

fn breakpoints(cutoff: Cutoff, params: &ReducedParams, lo: f64, hi: f64) -> Vec<f64> {
    let mut pts = vec![lo];
    let interior: Vec<f64> = match cutoff {
        Cutoff::TanhHard => {
            let center = params.x / PI;
            let w = params.nu / PI;
            vec![
                center - 3.0 * w,
                center - w,
                center,
                center + w,
                center + 3.0 * w,
            ]
        }
        _ => {
            let peak = settle_index(cutoff, params);
            vec![0.5 * peak, peak, 2.0 * peak, 4.0 * peak]
        }
    };
    for p in interior {
        if p > lo && p < hi {
            pts.push(p);
        }
    }
    pts.push(hi);
    pts
}

/// The difference Σ − ∫ evaluated without forming the two large totals.
///
/// Both the sum and the integral start at `j_start` (continuum convention);
/// with `IntegerStart` the lattice begins at ⌈j_start⌉ and the integral head
/// over [j_start, ⌈j_start⌉] is subtracted explicitly.
pub fn sum_minus_integral(
    cutoff: Cutoff,
    params: &ReducedParams,
    j_start: f64,
    convention: IrConvention,
) -> Result<ModeSumResult> {
    check_decaying(cutoff, "sum-minus-integral")?;
    check_j_start(j_start)?;

    let j0 = match convention {
        IrConvention::Continuum => j_start,
        IrConvention::IntegerStart => j_start.ceil(),
    };

    let mut result = match cutoff {
        Cutoff::Exponential => exponential_difference(params, j0),
        _ => generic_difference(cutoff, params, j0),
    }?;

    if convention == IrConvention::IntegerStart && j0 > j_start {
        let head = quad::adaptive(
            |j| j.powi(3) * weight_unchecked(cutoff, j, params),
            j_start,
            j0,
            1e-13,
        )?;
        result.value -= head.value;
        result.abs_error += head.abs_error;
    }
    Ok(result)
}

// Exponential family: G(j) − ∫_j^{j+1} G = e^{−aj} [j³B₁ − 3j²A₁ − 3jA₂ − A₃]
// with a = π/x and the unit-interval moments A_m = ∫₀¹ s^m e^{−as} ds,
// B₁ = 1 − A₀. The x⁴-sized parts of the sum and integral cancel inside the
// bracket analytically, so the per-term rounding is proportional to the
// bracket, not to G.
fn exponential_difference(params: &ReducedParams, j0: f64) -> Result<ModeSumResult> {
    let a = PI / params.x;
    let (b1, a1, a2, a3) = unit_moments(a);
    let q = (-a).exp();

    let mut sum = KahanSum::new();
    let mut mag = 0.0; // rounding scale: Σ of the bracket's largest component
    let mut last3 = [f64::INFINITY; 3];
    let settle = 4.0 * params.x / PI + 4.0;

    let mut m: usize = 0;
    loop {
        let j = j0 + m as f64;
        let bracket = ((j * b1 - 3.0 * a1) * j - 3.0 * a2) * j - a3;
        let scale = (j * j * j * b1).abs().max(3.0 * j * j * a1) + 3.0 * j * a2 + a3;
        let damp = (-a * j).exp();
        let term = damp * bracket;
        sum.add(term);
        mag += damp * scale;
        last3[m % 3] = term.abs();
        m += 1;

        if j > settle {
            if damp == 0.0 {
                break;
            }
            let ratio = q * ((j + 1.0) / j).powi(3);
            if ratio < 1.0 {
                let biggest = last3.iter().cloned().fold(0.0f64, f64::max);
                let tail = biggest * ratio / (1.0 - ratio);
                if tail <= SUM_REL_TOL * sum.value().abs().max(1e-12) {
                    return Ok(ModeSumResult {
                        value: sum.value(),
                        abs_error: tail + 4.0 * f64::EPSILON * mag,
                        terms_used: m,
                        method: SumMethod::Direct,
                    });
                }
            }
        }
        if m >= J_MAX {
            return Err(Error::NonConvergence {
                what: format!("sum-minus-integral (exp cutoff, x = {})", params.x),
                achieved: f64::INFINITY,
                required: SUM_REL_TOL,
            });
        }
    }
    Ok(ModeSumResult {
        value: sum.value(),
        abs_error: 4.0 * f64::EPSILON * mag + 1e-300,
        terms_used: m,
        method: SumMethod::Direct,
    })
}

// Unit-interval moments of e^{−as}. The alternating closed forms cancel
// badly for small a, so a ≤ 1 uses the everywhere-convergent series
// A_m = Σ_k (−a)^k / (k! (m+k+1)) and B₁ = Σ_{k≥1} (−1)^{k+1} a^k/(k+1)!.
fn unit_moments(a: f64) -> (f64, f64, f64, f64) {
    if a <= 1.0 {
        let series = |m: i32| -> f64 {
            let mut term = 1.0;
            let mut total = 1.0 / (m as f64 + 1.0);
            let mut k = 0;
            loop {
                k += 1;
                term *= -a / k as f64;
                let delta = term / (m as f64 + k as f64 + 1.0);
                total += delta;
                if delta.abs() < 1e-20 * total.abs() {
                    return total;
                }
            }
        };
        let mut b1_term = a / 2.0;
        let mut b1 = b1_term;
        let mut k = 1;
        loop {
            k += 1;
            b1_term *= -a / (k as f64 + 1.0);
            b1 += b1_term;
            if b1_term.abs() < 1e-20 * b1.abs() {
                break;
            }
        }
        (b1, series(1), series(2), series(3))
    } else {
        let e = (-a).exp();
        let a0 = (1.0 - e) / a;
        let a1 = (1.0 - (1.0 + a) * e) / (a * a);
        let a2 = (2.0 - (2.0 + a * (2.0 + a)) * e) / (a * a * a);
        let a3 = (6.0 - (6.0 + a * (6.0 + a * (3.0 + a))) * e) / (a * a * a * a);
        (1.0 - a0, a1, a2, a3)
    }
}

// Generic families: per-interval difference with an adaptive quadrature on
// each unit slice.
fn generic_difference(cutoff: Cutoff, params: &ReducedParams, j0: f64) -> Result<ModeSumResult> {
    let g = |j: f64| j.powi(3) * weight_unchecked(cutoff, j, params);
    let transition = settle_index(cutoff, params);
    let support_end = integrand_support_end(cutoff, params);

    let mut sum = KahanSum::new();
    let mut quad_err = 0.0;
    let mut mag = 0.0;
    let mut evaluations = 0;
    let mut m: usize = 0;
    loop {
        let j = j0 + m as f64;
        let term = g(j);
        let slice = quad::adaptive(g, j, j + 1.0, 1e-14)?;
        sum.add(term - slice.value);
        quad_err += slice.abs_error;
        mag += term.abs().max(slice.value.abs());
        evaluations += slice.evaluations + 1;
        m += 1;

        let next = g(j + 1.0);
        if j > transition
            && (next == 0.0
                || j > support_end
                || next.max(term) <= 1e-17 * sum.value().abs().max(1e-4))
        {
            break;
        }
        if m >= J_MAX {
            return Err(Error::NonConvergence {
                what: format!("sum-minus-integral ({cutoff} cutoff)"),
                achieved: f64::INFINITY,
                required: SUM_REL_TOL,
            });
        }
    }
    Ok(ModeSumResult {
        value: sum.value(),
        abs_error: quad_err + 4.0 * f64::EPSILON * mag + 1e-300,
        terms_used: evaluations,
        method: SumMethod::Direct,
    })
}

/// Reduced pressure by direct mode summation: P = −(π²/2)(Σ − ∫), both
/// limits starting at κ (continuum IR convention).
pub fn reduced_pressure_direct(cutoff: Cutoff, params: &ReducedParams) -> Result<PressureResult> {
    reduced_pressure_direct_with(cutoff, params, IrConvention::Continuum)
}

/// `reduced_pressure_direct` with an explicit IR convention.
pub fn reduced_pressure_direct_with(
    cutoff: Cutoff,
    params: &ReducedParams,
    convention: IrConvention,
) -> Result<PressureResult> {
    let diff = sum_minus_integral(cutoff, params, params.kappa, convention)?;
    Ok(PressureResult {
        reduced_pressure: -0.5 * PI * PI * diff.value,
        method: PressureMethod::Direct,
        abs_error: 0.5 * PI * PI * diff.abs_error,
    })
}

/// Ideal Casimir value −π²/240 in reduced units.
pub fn ideal_reduced_pressure() -> f64 {
    -PI * PI / 240.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn params(x: f64) -> ReducedParams {
        ReducedParams::new(x).unwrap()
    }

    #[test]
    fn sum_matches_geometric_closed_form_oracle() {
        // Σ j³ q^j = q(1+4q+q²)/(1−q)⁴ with q = e^{−π}; brute-force cross
        // check of the same value: 0.060575884562940365.
        let q = (-PI).exp();
        let oracle = q * (1.0 + 4.0 * q + q * q) / (1.0 - q).powi(4);
        let s = sum_modes(Cutoff::Exponential, &params(1.0), 0.0).unwrap();
        assert_relative_eq!(s.value, oracle, max_relative = 1e-13);
        assert_relative_eq!(s.value, 0.060575884562940365, max_relative = 1e-13);
    }

    #[test]
    fn sum_matches_large_x_expansion() {
        let x = 50.0;
        let s = sum_modes(Cutoff::Exponential, &params(x), 0.0).unwrap();
        let expansion = 6.0 * x.powi(4) / PI.powi(4) + 1.0 / 120.0 - PI * PI / (504.0 * x * x)
            + PI.powi(4) / (5760.0 * x.powi(4));
        assert_abs_diff_eq!(s.value, expansion, epsilon = 1e-9);
    }

    #[test]
    fn sum_with_underflowed_weights_is_zero() {
        let s = sum_modes(Cutoff::Exponential, &params(1.0), 300.0).unwrap();
        assert_eq!(s.value, 0.0);
    }

    #[test]
    fn sum_rejects_no_cutoff() {
        assert!(sum_modes(Cutoff::None, &params(1.0), 0.0).is_err());
    }

    #[test]
    fn sum_non_convergence_is_reported() {
        // At x = 1e9 the terms decay only after ~1e9 modes, past the cap.
        let err = sum_modes(Cutoff::Exponential, &params(1e9), 0.0);
        assert!(matches!(err, Err(Error::NonConvergence { .. })));
    }

    #[test]
    fn closed_sum_matches_direct_sum() {
        for (x, k) in [
            (50.0, 0.0),
            (50.0, 0.2),
            (5.0, 0.7),
            (200.0, 1.0),
            (1.0, 0.05),
        ] {
            let p = params(x);
            let closed = closed_sum_exponential(&p, k).unwrap();
            let direct = sum_modes(Cutoff::Exponential, &p, k).unwrap();
            assert_relative_eq!(closed.value, direct.value, max_relative = 1e-12);
        }
    }

    #[test]
    fn closed_sum_matches_widetext_expansion() {
        // x = 50, κ = 0.2; the remainder of the displayed expansion is
        // O(x⁻³) ≈ 1.5e-7 here.
        let (x, k) = (50.0, 0.2);
        let closed = closed_sum_exponential(&params(x), k).unwrap();
        let expansion = 6.0 * x.powi(4) / PI.powi(4)
            + (1.0 / 120.0) * (1.0 - 30.0 * k.powi(2) + 60.0 * k.powi(3) - 30.0 * k.powi(4))
            - (k / 30.0) * (1.0 - 10.0 * k.powi(2) + 15.0 * k.powi(3) - 6.0 * k.powi(4)) * (PI / x)
            - PI * PI / (504.0 * x * x)
                * (1.0 - 21.0 * k.powi(2) + 105.0 * k.powi(4) - 126.0 * k.powi(5)
                    + 42.0 * k.powi(6));
        assert_abs_diff_eq!(closed.value, expansion, epsilon = 5e-7);
    }

    #[test]
    fn closed_sum_leading_term() {
        let x = 1e4;
        let closed = closed_sum_exponential(&params(x), 0.0).unwrap();
        assert_relative_eq!(
            closed.value,
            6.0 * x.powi(4) / PI.powi(4),
            max_relative = 1e-12
        );
    }

    #[test]
    fn closed_sum_overflow_guard() {
        assert!(closed_sum_exponential(&params(5e-4), 0.0).is_err());
    }

    #[test]
    fn integral_closed_forms() {
        // ∫_0^∞ j³ e^{−πj} dj = 6/π⁴ at x = 1.
        let i = integral_modes(Cutoff::Exponential, &params(1.0), 0.0).unwrap();
        assert_relative_eq!(i.value, 6.0 / PI.powi(4), max_relative = 1e-14);

        // Exponential closed form against a quadrature done here, with the
        // integrand written out independently.
        let (x, k) = (50.0, 0.2);
        let i = integral_modes(Cutoff::Exponential, &params(x), k).unwrap();
        let q = quad::adaptive_segmented(
            |j: f64| j.powi(3) * (-PI * j / x).exp(),
            &[k, x, 5.0 * x, 300.0 * x],
            1e-13,
        )
        .unwrap();
        assert_relative_eq!(i.value, q.value, max_relative = 1e-10);

        // Quartic cutoff: substitution t = (πj/x)⁴ gives x⁴/(4π⁴).
        let x = 7.0;
        let i = integral_modes(Cutoff::PowerExponential { power: 4 }, &params(x), 0.0).unwrap();
        assert_relative_eq!(
            i.value,
            x.powi(4) / (4.0 * PI.powi(4)),
            max_relative = 1e-10
        );
    }

    #[test]
    fn bracket_and_generic_paths_agree() {
        // The exponential fast path and the per-slice quadrature path are
        // independent evaluations of the same difference.
        for (x, k) in [(5.0, 0.0), (20.0, 0.0), (20.0, 0.35)] {
            let p = params(x);
            let fast = exponential_difference(&p, k).unwrap();
            let generic = generic_difference(Cutoff::Exponential, &p, k).unwrap();
            assert_abs_diff_eq!(fast.value, generic.value, epsilon = 1e-12);
        }
    }

    #[test]
    fn pressure_reaches_ideal_limit_exponential() {
        // Ideal value plus the leading π⁴/(1008 x²) scheme correction.
        let p = reduced_pressure_direct(Cutoff::Exponential, &params(50.0)).unwrap();
        let expected = ideal_reduced_pressure() + PI.powi(4) / (1008.0 * 2500.0);
        assert_abs_diff_eq!(p.reduced_pressure, expected, epsilon = 2e-8);
    }

    #[test]
    fn pressure_reaches_ideal_limit_quartic() {
        // The x⁻⁴ correction is π⁶/480; the residual is the next expansion
        // term, ≈ −2e-8 at x = 20.
        let p =
            reduced_pressure_direct(Cutoff::PowerExponential { power: 4 }, &params(20.0)).unwrap();
        let expected = ideal_reduced_pressure() + PI.powi(6) / (480.0 * 20.0f64.powi(4));
        assert_abs_diff_eq!(p.reduced_pressure, expected, epsilon = 3e-8);
    }

    #[test]
    fn pressure_with_ir_truncation_matches_expansion() {
        // −(π²/240)(1 − 30κ² + 60κ³) + (π³κ/60)(1 − 10κ² + 15κ³)/x, with an
        // O(x⁻²) remainder ≈ 1.1e-5 at x = 50, κ = 0.2.
        let (x, k) = (50.0, 0.2);
        let p = ReducedParams::with(x, k, 1.0).unwrap();
        let got = reduced_pressure_direct(Cutoff::Exponential, &p).unwrap();
        let expected = -PI * PI / 240.0 * (1.0 - 30.0 * k.powi(2) + 60.0 * k.powi(3))
            + PI.powi(3) * k / 60.0 * (1.0 - 10.0 * k.powi(2) + 15.0 * k.powi(3)) / x;
        assert_abs_diff_eq!(got.reduced_pressure, expected, epsilon = 2e-5);
    }

    #[test]
    fn scheme_independent_limit_is_monotone() {
        for cutoff in [Cutoff::Exponential, Cutoff::PowerExponential { power: 4 }] {
            let mut prev = f64::INFINITY;
            for x in [10.0, 20.0, 40.0, 80.0] {
                let p = reduced_pressure_direct(cutoff, &params(x)).unwrap();
                let dev = (p.reduced_pressure - ideal_reduced_pressure()).abs();
                assert!(
                    dev < prev,
                    "{cutoff} deviation not decreasing at x = {x}: {dev} vs {prev}"
                );
                prev = dev;
            }
            // Exponential family deviation at x = 80 is π⁴/(1008·6400) ≈ 1.5e-5.
            assert!(prev < 1e-4);
        }
    }

    #[test]
    fn integer_start_staircase_differs_from_continuum() {
        let p = ReducedParams::with(50.0, 0.3, 1.0).unwrap();
        let cont =
            reduced_pressure_direct_with(Cutoff::Exponential, &p, IrConvention::Continuum).unwrap();
        let int = reduced_pressure_direct_with(Cutoff::Exponential, &p, IrConvention::IntegerStart)
            .unwrap();
        assert!((cont.reduced_pressure - int.reduced_pressure).abs() > 1e-4);
    }

    #[test]
    fn tanh_direct_pressure_is_finite_and_large_nu_behaves() {
        // With the transition spread over many lattice sites the direct
        // difference approaches the ideal value.
        let p = ReducedParams::with(30.0, 0.0, 10.0).unwrap();
        let got = reduced_pressure_direct(Cutoff::TanhHard, &p).unwrap();
        assert_abs_diff_eq!(
            got.reduced_pressure,
            -PI * PI / 2.0 * 0.008314586949,
            epsilon = 1e-7
        );
    }
}
