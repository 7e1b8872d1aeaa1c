//! Emits the IR-window figure: `fig2.csv` and `fig2.svg` in the working
//! directory, sampling P(α) = −π²/240 + α²/8 − α³/(4π) on α ∈ [0, 1.58].
//! Output bytes are deterministic for identical arguments.
//!
//! ```bash
//! cargo run -p casimir --example fig2_emit
//! ```

use casimir::figure::{fig2_csv, fig2_rows, fig2_svg, FIG2_DEFAULT_ALPHA_MAX, FIG2_DEFAULT_POINTS};

fn main() -> std::io::Result<()> {
    let rows = fig2_rows(FIG2_DEFAULT_ALPHA_MAX, FIG2_DEFAULT_POINTS).expect("valid defaults");
    std::fs::write("fig2.csv", fig2_csv(&rows))?;
    std::fs::write("fig2.svg", fig2_svg(&rows))?;

    let positive = rows.iter().filter(|r| r.1 > 0.0).count();
    println!(
        "wrote fig2.csv and fig2.svg ({} samples, {} in the repulsive window)",
        rows.len(),
        positive
    );
    Ok(())
}
