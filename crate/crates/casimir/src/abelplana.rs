//! Abel-Plana evaluation of sum-minus-integral differences, the IR-truncated
//! closed pressure, the tanh hard-cutoff pressure, Bose-type integrals, the
//! repulsive-window root finder, and the shifted-distance series.

use crate::cutoffs::{Cutoff, ReducedParams};
use crate::error::{Error, Result};
use crate::modesum::{ModeSumResult, PressureMethod, PressureResult, SumMethod};
use crate::quad;
use num_complex::Complex64;
use std::f64::consts::PI;

// ζ(2)..ζ(10); even entries are exact multiples of π-powers, odd entries are
// the usual decimal constants.
#[allow(clippy::excessive_precision)]
fn zeta(n: u32) -> f64 {
    match n {
        2 => PI * PI / 6.0,
        3 => 1.202_056_903_159_594_3,
        4 => PI.powi(4) / 90.0,
        5 => 1.036_927_755_143_369_9,
        6 => PI.powi(6) / 945.0,
        7 => 1.008_349_277_381_922_8,
        8 => PI.powi(8) / 9450.0,
        9 => 1.002_008_392_826_082_2,
        10 => PI.powi(10) / 93_555.0,
        _ => unreachable!("zeta table covers 2..=10"),
    }
}

fn check_bose_range(n: u32) -> Result<()> {
    if !(1..=9).contains(&n) {
        return Err(Error::Domain(format!(
            "bose integral order must be in 1..=9, got {n}"
        )));
    }
    Ok(())
}

/// ∫₀^∞ yⁿ/(e^{2πy}−1) dy by adaptive quadrature, 1 ≤ n ≤ 9.
pub fn bose_integral(n: u32) -> Result<f64> {
    check_bose_range(n)?;
    let r = quad::adaptive_segmented(
        |y: f64| y.powi(n as i32) / (2.0 * PI * y).exp_m1(),
        &[0.0, 1.0, 3.0, 10.0, 40.0],
        1e-13,
    )?;
    Ok(r.value)
}

/// Closed form n!·ζ(n+1)/(2π)^{n+1} of [`bose_integral`]; the independent
/// side of the quadrature/closed-form pair.
pub fn bose_integral_closed(n: u32) -> Result<f64> {
    check_bose_range(n)?;
    let factorial: f64 = (1..=n as u64).product::<u64>() as f64;
    Ok(factorial * zeta(n + 1) / (2.0 * PI).powi(n as i32 + 1))
}

/// IR-truncated reduced pressure in the Λ → ∞ limit:
/// P(α) = −π²/240 + α²/8 − α³/(4π) with α = k_c·d.
pub fn ir_truncated_pressure(alpha: f64) -> Result<PressureResult> {
    if !(alpha.is_finite() && alpha >= 0.0) {
        return Err(Error::Domain(format!(
            "alpha = k_c·d must be non-negative, got {alpha}"
        )));
    }
    let value = -PI * PI / 240.0 + alpha * alpha / 8.0 - alpha.powi(3) / (4.0 * PI);
    let magnitude = PI * PI / 240.0 + alpha * alpha / 8.0 + alpha.powi(3) / (4.0 * PI);
    Ok(PressureResult {
        reduced_pressure: value,
        method: PressureMethod::ClosedForm,
        abs_error: 4.0 * f64::EPSILON * magnitude,
    })
}

/// Abel-Plana difference
///
/// Σ_{j=j1}^{j2} G − ∫_{j1}^{j2} G dj
///   = G(j1)/2 + G(j2)/2 + 2∫₀^∞ Im[G(j2+iy) − G(j1+iy)]/(e^{2πy}−1) dy.
///
/// Pass `f64::INFINITY` for `j2` to take the usual G(j2) → 0 limit. The
/// caller is responsible for G being analytic on the integration strip; the
/// 1/(e^{2πy}−1) kernel is evaluated through `exp_m1`, which keeps the
/// removable y → 0 limit finite without a special case.
pub fn abel_plana_difference<G>(g: G, j1: f64, j2: f64) -> Result<ModeSumResult>
where
    G: Fn(Complex64) -> Complex64,
{
    if !j1.is_finite() || (j2.is_finite() && j2 <= j1) {
        return Err(Error::Domain(format!(
            "need finite j1 and j2 > j1 (or j2 = ∞), got j1 = {j1}, j2 = {j2}"
        )));
    }
    let endpoint = |j: f64| -> Result<f64> {
        let v = g(Complex64::new(j, 0.0));
        if !v.re.is_finite() {
            return Err(Error::Domain(format!(
                "G returned a non-finite value at j = {j}"
            )));
        }
        Ok(v.re)
    };
    let mut boundary = endpoint(j1)? / 2.0;
    if j2.is_finite() {
        boundary += endpoint(j2)? / 2.0;
    }

    let integrand = |y: f64| {
        let upper = if j2.is_finite() {
            g(Complex64::new(j2, y)).im
        } else {
            0.0
        };
        let lower = g(Complex64::new(j1, y)).im;
        2.0 * (upper - lower) / (2.0 * PI * y).exp_m1()
    };
    let r = quad::adaptive_segmented(
        integrand,
        &[0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 40.0],
        1e-13,
    )?;

    Ok(ModeSumResult {
        value: boundary + r.value,
        abs_error: r.abs_error + 4.0 * f64::EPSILON * boundary.abs(),
        terms_used: r.evaluations,
        method: SumMethod::Quadrature,
    })
}

// Complex continuation of j³·f(πj/x) for the analytic families.
pub(crate) fn complex_mode_fn(
    cutoff: Cutoff,
    params: &ReducedParams,
) -> impl Fn(Complex64) -> Complex64 {
    let a = PI / params.x;
    move |z: Complex64| {
        let cube = z * z * z;
        match cutoff {
            Cutoff::Exponential => cube * (-(a * z)).exp(),
            Cutoff::PowerExponential { power } => cube * (-((a * z).powu(power))).exp(),
            // The tanh continuation has poles in the strip; it is handled by
            // `tanh_pressure`, not by this generic contour.
            Cutoff::TanhHard | Cutoff::None => cube,
        }
    }
}

/// Reduced pressure of the smoothed hard cutoff, Abel-Plana route:
///
/// P = −π² ∫₀^∞ dy/(e^{2πy}−1) · (y³/2) ·
///     (1 + (1 − e^{−4x/ν}) / (1 + 2e^{−2x/ν} cos(2πy/ν) + e^{−4x/ν})).
///
/// Internally the integrand is split exactly: with r = e^{−2x/ν} and
/// c = cos(2πy/ν) the parenthesis equals 2(1 + rc)/(1+2rc+r²), so
/// P = −π²/240 + π²·r·∫ y³(r + c)/((e^{2πy}−1)(1+2rc+r²)) dy. Factoring out
/// r keeps the deviation from −π²/240 at full relative precision even when
/// r underflows toward 1e-300.
///
/// The closed integral assumes the step is smooth on the mode-lattice scale;
/// its correspondence with the direct lattice difference holds for ν well
/// above 1, while for ν ≲ 2 the lattice difference carries additional
/// oscillatory terms of order x³e^{−πν} that this integral does not see.
pub fn tanh_pressure(params: &ReducedParams) -> Result<PressureResult> {
    let r = (-2.0 * params.x / params.nu).exp();
    let nu = params.nu;

    // r scales the whole deviation and |J| ≤ 1/240·(1−r)⁻², so once r
    // underflows the result is the ideal value to the last bit; this also
    // sidesteps resolving cos(2πy/ν) for step widths below any sensible ν.
    if r == 0.0 {
        return Ok(PressureResult {
            reduced_pressure: -PI * PI / 240.0,
            method: PressureMethod::AbelPlana,
            abs_error: PI * PI * f64::EPSILON / 60.0,
        });
    }

    // cos(2πy/ν) has period ν: seed panels no wider than ν/4 out to y = 5,
    // then coarsen; beyond y = 60 the kernel has decayed past ~1e-163.
    let mut pts = Vec::new();
    let step = (nu / 4.0).min(1.25);
    let mut y = 0.0;
    while y < 5.0 {
        pts.push(y);
        y += step;
    }
    pts.extend_from_slice(&[5.0, 10.0, 20.0, 40.0, 60.0]);

    let integrand = |y: f64| {
        let c = (2.0 * PI * y / nu).cos();
        y.powi(3) * (r + c) / ((2.0 * PI * y).exp_m1() * (1.0 + 2.0 * r * c + r * r))
    };
    let j = quad::adaptive_segmented(integrand, &pts, 1e-12)?;

    let deviation = PI * PI * r * j.value;
    Ok(PressureResult {
        reduced_pressure: -PI * PI / 240.0 + deviation,
        method: PressureMethod::AbelPlana,
        abs_error: PI * PI * (r * j.abs_error + f64::EPSILON / 60.0),
    })
}

/// Reduced pressure via the Abel-Plana contour, with the IR truncation
/// entering as the lower limit j1 = κ.
pub fn reduced_pressure_abel_plana(
    cutoff: Cutoff,
    params: &ReducedParams,
) -> Result<PressureResult> {
    match cutoff {
        Cutoff::TanhHard => {
            if params.kappa != 0.0 {
                return Err(Error::Unsupported(
                    "the tanh Abel-Plana route is defined at kappa = 0".into(),
                ));
            }
            tanh_pressure(params)
        }
        _ => {
            let g = complex_mode_fn(cutoff, params);
            let diff = abel_plana_difference(g, params.kappa, f64::INFINITY)?;
            Ok(PressureResult {
                reduced_pressure: -0.5 * PI * PI * diff.value,
                method: PressureMethod::AbelPlana,
                abs_error: 0.5 * PI * PI * diff.abs_error,
            })
        }
    }
}

/// Interval of α = k_c·d on which the IR-truncated pressure is repulsive.
#[derive(Debug, Clone, Copy)]
pub struct RootWindow {
    pub alpha_low: f64,
    pub alpha_high: f64,
    pub bracket_tol: f64,
}

/// Brackets and bisects the two roots of P(α) = −π²/240 + α²/8 − α³/(4π)
/// on (0, 3). Plain bisection after a 0.01-step sign scan; the cubic's roots
/// are well separated, so nothing faster is warranted.
pub fn find_repulsive_window(tol: f64) -> Result<RootWindow> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let p = |alpha: f64| -PI * PI / 240.0 + alpha * alpha / 8.0 - alpha.powi(3) / (4.0 * PI);

    let mut brackets = Vec::new();
    let mut prev = p(0.0);
    let mut alpha = 0.0;
    while alpha < 3.0 {
        let next_alpha = alpha + 0.01;
        let next = p(next_alpha);
        if prev.signum() != next.signum() {
            brackets.push((alpha, next_alpha));
        }
        prev = next;
        alpha = next_alpha;
    }
    if brackets.len() != 2 {
        return Err(Error::Domain(format!(
            "expected 2 sign changes on (0, 3), found {}",
            brackets.len()
        )));
    }

    let bisect = |(mut lo, mut hi): (f64, f64)| -> f64 {
        let mut f_lo = p(lo);
        while hi - lo > tol {
            let mid = 0.5 * (lo + hi);
            let f_mid = p(mid);
            if f_mid == 0.0 {
                return mid;
            }
            if f_lo.signum() == f_mid.signum() {
                lo = mid;
                f_lo = f_mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    };

    Ok(RootWindow {
        alpha_low: bisect(brackets[0]),
        alpha_high: bisect(brackets[1]),
        bracket_tol: tol,
    })
}

/// Sign of the plate-separation shift d → d ± α/Λ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

/// Exact and truncated-series forms of the shifted-distance factor.
#[derive(Debug, Clone, Copy)]
pub struct ShiftFactors {
    pub exact: f64,
    pub series: f64,
}

/// Multiplier of the ideal pressure under a distance shift d → d ± α/Λ:
/// exact = (1 ± α/x)⁻⁴ and its binomial series
/// 1 ∓ 4(α/x) + 10(α/x)² ∓ 20(α/x)³, truncated at `order` ≤ 3.
/// Both factors multiply −π²/240.
pub fn shifted_distance_factor(
    alpha_shift: f64,
    x: f64,
    sign: Sign,
    order: u32,
) -> Result<ShiftFactors> {
    if order > 3 {
        return Err(Error::Unsupported(format!(
            "shifted-distance series is tabulated through order 3, got {order}"
        )));
    }
    if !(alpha_shift.is_finite() && x.is_finite() && x > alpha_shift.abs()) {
        return Err(Error::Domain(format!(
            "series regime requires x > |alpha|, got alpha = {alpha_shift}, x = {x}"
        )));
    }
    let s = sign.value() * alpha_shift / x;
    const COEFFS: [f64; 4] = [1.0, -4.0, 10.0, -20.0];
    let mut series = 0.0;
    let mut power = 1.0;
    for &c in COEFFS.iter().take(order as usize + 1) {
        series += c * power;
        power *= s;
    }
    Ok(ShiftFactors {
        exact: (1.0 + s).powi(-4),
        series,
    })
}
