//! The repulsive window of the IR-truncated spectrum.
//!
//! Removing modes below k_c = α/d leaves the closed-form pressure
//! P(α) = −π²/240 + α²/8 − α³/(4π). The force weakens as α grows from 0,
//! turns repulsive on a finite window, then turns attractive again. This
//! example locates the window roots and shows the sign pattern, plus the
//! staircase difference between the continuum and integer-lattice IR
//! conventions.
//!
//! ```bash
//! cargo run -p casimir --example ir_window
//! ```

use casimir::abelplana::{find_repulsive_window, ir_truncated_pressure};
use casimir::modesum::reduced_pressure_direct_with;
use casimir::{Cutoff, IrConvention, ReducedParams};

fn main() {
    let w = find_repulsive_window(1e-9).unwrap();
    println!("repulsive window of P(α) = -π²/240 + α²/8 - α³/(4π):");
    println!("  α_low  = {:.9}", w.alpha_low);
    println!("  α_high = {:.9}", w.alpha_high);

    println!("\nsign pattern:");
    for alpha in [0.0, 0.5, 0.842, 1.0, 1.228, 1.5] {
        let p = ir_truncated_pressure(alpha).unwrap().reduced_pressure;
        let label = if p > 1e-6 {
            "repulsive"
        } else if p < -1e-6 {
            "attractive"
        } else {
            "≈ 0 (root)"
        };
        println!("  P({alpha:>5.3}) = {p:+.6e}  {label}");
    }

    // The closed form treats the lower mode limit as a continuum value.
    // Summing over the actual integer lattice instead shifts the pressure
    // by a staircase term, visible at finite x:
    println!("\ncontinuum vs integer-lattice IR truncation (exp cutoff, x = 50, κ = 0.3):");
    let params = ReducedParams::with(50.0, 0.3, 1.0).unwrap();
    for (name, convention) in [
        ("continuum", IrConvention::Continuum),
        ("integer-start", IrConvention::IntegerStart),
    ] {
        let p = reduced_pressure_direct_with(Cutoff::Exponential, &params, convention).unwrap();
        println!("  {name:>14}: P = {:+.9e}", p.reduced_pressure);
    }
}
