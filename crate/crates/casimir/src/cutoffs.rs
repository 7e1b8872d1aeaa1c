//! UV cutoff families: mode weights and Taylor data.
//!
//! Everything is expressed in reduced variables. A mode with index `j`
//! carries momentum `πj/d`; with `x = dΛ` the weight argument `k/Λ` becomes
//! `πj/x`, so each family is a dimensionless function of `j` given `x` (and
//! the smoothing width `ν = dμ` for the hard tanh step).

use crate::error::{Error, Result};
use std::f64::consts::PI;

/// UV cutoff family attached to the mode sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cutoff {
    /// f(k/Λ) = exp(−k/Λ).
    Exponential,
    /// f(k/Λ) = exp(−(k/Λ)^p), p ≥ 1. `PowerExponential { power: 1 }`
    /// coincides with `Exponential` at every argument.
    PowerExponential { power: u32 },
    /// Smoothed hard cutoff ½(1 − tanh((k − Λ)/μ)): the weight drops from 1
    /// to 0 near k = Λ over a momentum range μ. In reduced form the argument
    /// is (πj − x)/ν with ν = dμ, so the transition sits at mode index
    /// j = x/π and spans ν/π index units.
    TanhHard,
    /// No cutoff, f ≡ 1. Only meaningful for closed-form paths; the raw mode
    /// sum diverges.
    None,
}

impl Cutoff {
    /// True for families whose weight decays to 0 as j → ∞.
    pub fn is_decaying(self) -> bool {
        !matches!(self, Cutoff::None)
    }
}

impl std::fmt::Display for Cutoff {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Cutoff::Exponential => write!(f, "exp"),
            Cutoff::PowerExponential { power } => write!(f, "exp{power}"),
            Cutoff::TanhHard => write!(f, "tanh"),
            Cutoff::None => write!(f, "none"),
        }
    }
}

/// Dimensionless problem parameters.
///
/// * `x = dΛ`: UV scale in units of the inverse plate separation (> 0);
/// * `kappa = d·k_c/π`: IR truncation as a mode-index offset (≥ 0);
/// * `nu = d·μ`: tanh smoothing width (> 0, default 1).
///
/// All pressures derived from these parameters are reduced pressures
/// P = p·d⁴.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedParams {
    pub x: f64,
    pub kappa: f64,
    pub nu: f64,
}

impl ReducedParams {
    /// Parameters with κ = 0 and ν = 1.
    pub fn new(x: f64) -> Result<Self> {
        Self::with(x, 0.0, 1.0)
    }

    pub fn with(x: f64, kappa: f64, nu: f64) -> Result<Self> {
        if !(x.is_finite() && x > 0.0) {
            return Err(Error::Domain(format!("x = dΛ must be positive, got {x}")));
        }
        if !(kappa.is_finite() && kappa >= 0.0) {
            return Err(Error::Domain(format!(
                "kappa = d·k_c/π must be non-negative, got {kappa}"
            )));
        }
        if !(nu.is_finite() && nu > 0.0) {
            return Err(Error::Domain(format!(
                "nu = d·μ must be positive, got {nu}"
            )));
        }
        Ok(Self { x, kappa, nu })
    }

    /// IR truncation as α = k_c·d; the conversion α = πκ is exact.
    pub fn alpha(&self) -> f64 {
        PI * self.kappa
    }

    /// Builds parameters from α = k_c·d instead of κ.
    pub fn with_alpha(x: f64, alpha: f64, nu: f64) -> Result<Self> {
        Self::with(x, alpha / PI, nu)
    }
}

/// Mode weight f at reduced momentum πj/x.
///
/// `j` may be fractional so the same evaluator serves the continuum
/// integral. Results lie in [0, 1] and are non-increasing in `j`.
pub fn weight(cutoff: Cutoff, j: f64, params: &ReducedParams) -> Result<f64> {
    if !(j.is_finite() && j >= 0.0) {
        return Err(Error::Domain(format!(
            "mode index must be finite and non-negative, got {j}"
        )));
    }
    Ok(weight_unchecked(cutoff, j, params))
}

/// `weight` without the domain check; used in inner loops after validation.
#[inline]
pub(crate) fn weight_unchecked(cutoff: Cutoff, j: f64, params: &ReducedParams) -> f64 {
    match cutoff {
        Cutoff::Exponential => (-PI * j / params.x).exp(),
        Cutoff::PowerExponential { power } => {
            let base = PI * j / params.x;
            (-base.powi(power as i32)).exp()
        }
        // ½(1 − tanh(t)) = 1/(1 + e^{2t}) exactly; the logistic form stays
        // accurate down to weights ~1e-300 where 1 − tanh(t) rounds to 0.
        Cutoff::TanhHard => {
            let t = (PI * j - params.x) / params.nu;
            1.0 / (1.0 + (2.0 * t).exp())
        }
        Cutoff::None => 1.0,
    }
}

/// Taylor coefficients c_0..c_order of G(j) = j³·f(πj/x) about j = 0,
/// from the closed power series of the cutoff, so the n-th derivative at 0
/// is n!·c_n exactly up to rounding.
///
/// Only the analytic families are supported: the Euler-Maclaurin engine
/// needs derivatives up to order 9, far beyond what numerical
/// differentiation can deliver, and the tanh step has no useful Maclaurin
/// data at the origin.
pub fn maclaurin_coeffs(cutoff: Cutoff, params: &ReducedParams, order: usize) -> Result<Vec<f64>> {
    if order > 12 {
        return Err(Error::Unsupported(format!("Maclaurin order {order} > 12")));
    }
    let power = match cutoff {
        Cutoff::Exponential => 1u32,
        Cutoff::PowerExponential { power } if power >= 1 => power,
        Cutoff::PowerExponential { power } => {
            return Err(Error::Domain(format!(
                "PowerExponential power must be ≥ 1, got {power}"
            )))
        }
        other => {
            return Err(Error::Unsupported(format!(
                "Maclaurin coefficients are not defined for the {other} cutoff"
            )))
        }
    };

    // j³·exp(−(πj/x)^p) = Σ_m (−1)^m (π/x)^{pm} j^{3+pm} / m!
    let a_pow = (PI / params.x).powi(power as i32);
    let mut coeffs = vec![0.0; order + 1];
    let mut term = 1.0;
    let mut m = 0u32;
    loop {
        let exponent = 3 + (power as usize) * (m as usize);
        if exponent > order {
            break;
        }
        coeffs[exponent] = term;
        m += 1;
        term *= -a_pow / m as f64;
    }
    Ok(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use proptest::prelude::*;

    fn params(x: f64) -> ReducedParams {
        ReducedParams::new(x).unwrap()
    }

    #[test]
    fn params_validation() {
        assert!(ReducedParams::new(-1.0).is_err());
        assert!(ReducedParams::new(0.0).is_err());
        assert!(ReducedParams::with(1.0, -0.1, 1.0).is_err());
        assert!(ReducedParams::with(1.0, 0.0, 0.0).is_err());
        let p = ReducedParams::with_alpha(5.0, 1.0, 1.0).unwrap();
        assert_relative_eq!(p.alpha(), 1.0, max_relative = 1e-15);
        assert_relative_eq!(p.kappa, 1.0 / PI, max_relative = 1e-15);
    }

    #[test]
    fn weight_examples() {
        // f(0) = 1 for the analytic families; the smoothed step sits a
        // residual e^{−2x/ν} below 1 at the origin.
        for c in [
            Cutoff::Exponential,
            Cutoff::PowerExponential { power: 4 },
            Cutoff::None,
        ] {
            assert_eq!(weight(c, 0.0, &params(7.0)).unwrap(), 1.0);
        }
        let w0 = weight(Cutoff::TanhHard, 0.0, &params(7.0)).unwrap();
        assert!(w0 < 1.0 && 1.0 - w0 < 2.0 * (-14.0f64).exp());
        // Exponential at j = 1, x = π: e^{-1}.
        assert_relative_eq!(
            weight(Cutoff::Exponential, 1.0, &params(PI)).unwrap(),
            (-1.0f64).exp(),
            max_relative = 1e-15
        );
        // Tanh step crosses 1/2 where the mode momentum πj/d equals Λ,
        // i.e. at j = x/π.
        let x = 9.0;
        assert_relative_eq!(
            weight(Cutoff::TanhHard, x / PI, &params(x)).unwrap(),
            0.5,
            max_relative = 1e-12
        );
        assert!(weight(Cutoff::Exponential, -0.5, &params(1.0)).is_err());
    }

    #[test]
    fn tanh_matches_tanh_form() {
        let p = ReducedParams::with(10.0, 0.0, 2.0).unwrap();
        for j in [0.0, 1.0, 2.5, 10.0 / PI, 4.0, 6.0] {
            let t = (PI * j - p.x) / p.nu;
            assert_relative_eq!(
                weight(Cutoff::TanhHard, j, &p).unwrap(),
                0.5 * (1.0 - t.tanh()),
                epsilon = 1e-15
            );
        }
    }

    #[test]
    fn weights_decay_to_zero() {
        let p = params(3.0);
        for c in [
            Cutoff::Exponential,
            Cutoff::PowerExponential { power: 4 },
            Cutoff::TanhHard,
        ] {
            assert_eq!(weight(c, 1e6, &p).unwrap(), 0.0);
        }
    }

    #[test]
    fn maclaurin_examples() {
        let p = params(7.0);
        let a = PI / 7.0;

        let c = maclaurin_coeffs(Cutoff::Exponential, &p, 4).unwrap();
        assert_eq!(&c[0..3], &[0.0, 0.0, 0.0]);
        assert_relative_eq!(c[3], 1.0);
        assert_relative_eq!(c[4], -a, max_relative = 1e-15);

        let c = maclaurin_coeffs(Cutoff::PowerExponential { power: 4 }, &p, 7).unwrap();
        assert_relative_eq!(c[3], 1.0);
        assert_eq!(&c[4..7], &[0.0, 0.0, 0.0]);
        assert_relative_eq!(c[7], -a.powi(4), max_relative = 1e-14);

        // Order 2: the j³ prefactor forces c0 = c1 = c2 = 0.
        let c = maclaurin_coeffs(Cutoff::Exponential, &p, 2).unwrap();
        assert_eq!(c, vec![0.0, 0.0, 0.0]);

        assert!(maclaurin_coeffs(Cutoff::TanhHard, &p, 4).is_err());
        assert!(maclaurin_coeffs(Cutoff::None, &p, 4).is_err());
        assert!(maclaurin_coeffs(Cutoff::Exponential, &p, 13).is_err());
    }

    // Independent oracle: n-th central finite difference of j³f(πj/x) with
    // two Richardson steps, using the analytic continuation of the cutoff
    // to negative arguments.
    fn central_derivative(g: &dyn Fn(f64) -> f64, n: u32, h: f64) -> f64 {
        let stencil = |h: f64| -> f64 {
            let mut sum = 0.0;
            let mut binom = 1.0;
            for k in 0..=n {
                let node = (n as f64 / 2.0 - k as f64) * h;
                sum += if k % 2 == 0 { binom } else { -binom } * g(node);
                binom = binom * (n - k) as f64 / (k + 1) as f64;
            }
            sum / h.powi(n as i32)
        };
        let (d1, d2, d4) = (stencil(h), stencil(h / 2.0), stencil(h / 4.0));
        let r1 = (4.0 * d2 - d1) / 3.0;
        let r2 = (4.0 * d4 - d2) / 3.0;
        (16.0 * r2 - r1) / 15.0
    }

    #[test]
    fn maclaurin_matches_finite_differences() {
        for x in [3.0, 10.0] {
            let p = params(x);
            let a = PI / x;
            #[allow(clippy::type_complexity)]
            let cases: Vec<(Cutoff, Box<dyn Fn(f64) -> f64>)> = vec![
                (
                    Cutoff::Exponential,
                    Box::new(move |j: f64| j.powi(3) * (-a * j).exp()),
                ),
                (
                    Cutoff::PowerExponential { power: 4 },
                    Box::new(move |j: f64| j.powi(3) * (-(a * j).powi(4)).exp()),
                ),
            ];
            for (cutoff, g) in cases {
                let coeffs = maclaurin_coeffs(cutoff, &p, 5).unwrap();
                let mut factorial = 1.0;
                for n in 0..=5u32 {
                    if n > 0 {
                        factorial *= n as f64;
                    }
                    let fd = central_derivative(g.as_ref(), n, 0.05) / factorial;
                    if coeffs[n as usize] == 0.0 {
                        assert_abs_diff_eq!(fd, 0.0, epsilon = 1e-7);
                    } else {
                        assert_relative_eq!(fd, coeffs[n as usize], max_relative = 1e-6);
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn weight_bounded_and_monotone(
            x in 0.5f64..100.0,
            j1 in 0.0f64..500.0,
            dj in 0.0f64..50.0,
            family in 0usize..3,
        ) {
            let p = params(x);
            let cutoff = [Cutoff::Exponential, Cutoff::PowerExponential { power: 4 }, Cutoff::TanhHard][family];
            let w1 = weight(cutoff, j1, &p).unwrap();
            let w2 = weight(cutoff, j1 + dj, &p).unwrap();
            prop_assert!((0.0..=1.0).contains(&w1));
            prop_assert!((0.0..=1.0).contains(&w2));
            prop_assert!(w2 <= w1 + 1e-15);
        }

        #[test]
        fn power_one_is_exponential(x in 0.5f64..100.0, j in 0.0f64..200.0) {
            let p = params(x);
            let exp = weight(Cutoff::Exponential, j, &p).unwrap();
            let pow1 = weight(Cutoff::PowerExponential { power: 1 }, j, &p).unwrap();
            prop_assert_eq!(exp.to_bits(), pow1.to_bits());
        }
    }
}
