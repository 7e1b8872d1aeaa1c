//! One pressure, three independent routes.
//!
//! Evaluates the reduced Casimir pressure for the exponential cutoff at a
//! few UV scales by direct mode summation, Euler-Maclaurin asymptotics, and
//! Abel-Plana contour quadrature, plus the geometric closed form. The routes
//! agree far below any physically meaningful scale.
//!
//! ```bash
//! cargo run -p casimir --example pressure_methods
//! ```

use casimir::{reduced_pressure, Cutoff, PressureMethod, ReducedParams};

fn main() {
    println!("reduced pressure P = p·d⁴, exponential cutoff, κ = 0");
    println!("ideal (x → ∞) value: -π²/240 = -4.1123351671e-2\n");
    println!(
        "{:>6}  {:>18}  {:>18}  {:>18}  {:>18}",
        "x", "direct", "euler-maclaurin", "abel-plana", "closed-form"
    );

    for x in [5.0, 10.0, 20.0, 50.0, 100.0] {
        let params = ReducedParams::new(x).unwrap();
        let row: Vec<String> = [
            PressureMethod::Direct,
            PressureMethod::EulerMaclaurin,
            PressureMethod::AbelPlana,
            PressureMethod::ClosedForm,
        ]
        .into_iter()
        .map(|method| {
            let p = reduced_pressure(Cutoff::Exponential, &params, method).unwrap();
            format!("{:>18.12e}", p.reduced_pressure)
        })
        .collect();
        println!("{x:>6}  {}", row.join("  "));
    }

    println!("\nerror estimates at x = 50:");
    for method in [
        PressureMethod::Direct,
        PressureMethod::EulerMaclaurin,
        PressureMethod::AbelPlana,
        PressureMethod::ClosedForm,
    ] {
        let params = ReducedParams::new(50.0).unwrap();
        let p = reduced_pressure(Cutoff::Exponential, &params, method).unwrap();
        println!(
            "  {:>16}: abs_error = {:.2e}",
            p.method.to_string(),
            p.abs_error
        );
    }
}
