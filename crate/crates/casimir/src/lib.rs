//! Numerical laboratory for IR/UV mode-cutoff corrections to the Casimir
//! pressure between parallel plates.
//!
//! The vacuum pressure of the plate geometry reduces to a regulated
//! mode-sum-minus-integral, P·d⁴ = −(π²/2)(Σ − ∫) j³ f(πj/x), where
//! `x = dΛ` sets the UV scale, `κ = d·k_c/π` an IR truncation, and `f` is a
//! cutoff weight. The crate evaluates that difference three independent
//! ways (direct compensated summation, Euler-Maclaurin asymptotics, and
//! Abel-Plana contour quadrature), extracts the asymptotic correction
//! coefficients, locates the repulsive window of the IR-truncated pressure,
//! and fits the exponential suppression law of the smoothed hard cutoff.
//!
//! # Examples directory
//!
//! Each major capability has a runnable example:
//!
//! ```text
//! examples/
//! ├── pressure_methods.rs        # one pressure, three independent routes
//! ├── cutoff_independence.rs     # the −π²/240 limit for every family
//! ├── expansion_coefficients.rs  # fitted 1/120, π²/504, π⁴/1008, π⁶/480
//! ├── ir_window.rs               # repulsive window of the truncated spectrum
//! ├── uv_suppression.rs          # e^{−2x/ν} decay of the hard-cutoff shift
//! ├── shifted_distance.rs        # (1 ± α/x)⁻⁴ factor vs its series
//! └── fig2_emit.rs               # CSV + SVG emission of the window figure
//! ```
//!
//! Run any of them with `cargo run -p casimir --example <name>`.
//!
//! # Quick start
//!
//! ```
//! use casimir::{reduced_pressure, Cutoff, PressureMethod, ReducedParams};
//!
//! let params = ReducedParams::new(50.0).unwrap(); // x = dΛ = 50
//! let p = reduced_pressure(Cutoff::Exponential, &params, PressureMethod::Direct).unwrap();
//! // Ideal value −π²/240 plus a π⁴/(1008 x²) scheme correction.
//! assert!((p.reduced_pressure + 0.0410847).abs() < 1e-6);
//! ```
//!
//! A thin CLI over the same routines lives in the `casimir-cli` crate
//! (binary name `casimir`).

pub mod abelplana;
pub mod asymptotics;
pub mod cutoffs;
mod error;
pub mod figure;
pub mod kahan;
pub mod modesum;
pub mod quad;
pub mod verify;

pub use abelplana::{RootWindow, ShiftFactors, Sign};
pub use asymptotics::{AsymptoticSeries, DecayFit, PowerLawFit, SeriesTerm};
pub use cutoffs::{Cutoff, ReducedParams};
pub use error::{Error, Result};
pub use modesum::{IrConvention, ModeSumResult, PressureMethod, PressureResult, SumMethod};

/// Reduced pressure by the requested route.
///
/// * `Direct`: compensated mode summation minus the continuum integral;
///   any decaying cutoff.
/// * `EulerMaclaurin`: endpoint-derivative asymptotics; analytic families
///   at κ = 0.
/// * `AbelPlana`: contour quadrature; exponential families with any κ, the
///   tanh step at κ = 0, and the formal f ≡ 1 limit (which reproduces the
///   IR-truncated closed form).
/// * `ClosedForm`: the exponential family's geometric closed forms, or the
///   IR polynomial P(α) = −π²/240 + α²/8 − α³/(4π) for `Cutoff::None`.
pub fn reduced_pressure(
    cutoff: Cutoff,
    params: &ReducedParams,
    method: PressureMethod,
) -> Result<PressureResult> {
    match method {
        PressureMethod::Direct => modesum::reduced_pressure_direct(cutoff, params),
        PressureMethod::EulerMaclaurin => asymptotics::reduced_pressure_em(cutoff, params),
        PressureMethod::AbelPlana => abelplana::reduced_pressure_abel_plana(cutoff, params),
        PressureMethod::ClosedForm => match cutoff {
            Cutoff::Exponential => {
                let sum = modesum::closed_sum_exponential(params, params.kappa)?;
                let integral = modesum::integral_modes(cutoff, params, params.kappa)?;
                let half_pi2 = 0.5 * std::f64::consts::PI.powi(2);
                Ok(PressureResult {
                    reduced_pressure: -half_pi2 * (sum.value - integral.value),
                    method: PressureMethod::ClosedForm,
                    // The two closed forms are subtracted as ~x⁴-sized
                    // totals, so their own rounding dominates here.
                    abs_error: half_pi2
                        * (sum.abs_error
                            + integral.abs_error
                            + f64::EPSILON * (sum.value.abs() + integral.value.abs())),
                })
            }
            Cutoff::None => abelplana::ir_truncated_pressure(params.alpha()),
            other => Err(Error::Unsupported(format!(
                "no closed pressure form for the {other} cutoff"
            ))),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn dispatch_routes_agree_for_exponential() {
        let params = ReducedParams::new(20.0).unwrap();
        let direct = reduced_pressure(Cutoff::Exponential, &params, PressureMethod::Direct)
            .unwrap()
            .reduced_pressure;
        for method in [
            PressureMethod::EulerMaclaurin,
            PressureMethod::AbelPlana,
            PressureMethod::ClosedForm,
        ] {
            let p = reduced_pressure(Cutoff::Exponential, &params, method).unwrap();
            assert_abs_diff_eq!(p.reduced_pressure, direct, epsilon = 1e-7);
            assert_eq!(p.method, method);
        }
    }

    #[test]
    fn dispatch_rejects_invalid_combinations() {
        let params = ReducedParams::new(20.0).unwrap();
        assert!(reduced_pressure(Cutoff::None, &params, PressureMethod::Direct).is_err());
        assert!(reduced_pressure(Cutoff::TanhHard, &params, PressureMethod::ClosedForm).is_err());
        assert!(
            reduced_pressure(Cutoff::TanhHard, &params, PressureMethod::EulerMaclaurin).is_err()
        );
        assert!(reduced_pressure(Cutoff::None, &params, PressureMethod::ClosedForm).is_ok());
    }
}
