//! The self-verification suites must pass end to end; the CLI `verify`
//! subcommand prints exactly these checks.

use casimir::verify;

#[test]
fn all_suites_pass() {
    let checks = verify::suite_all().expect("suites evaluate");
    let failed: Vec<String> = checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| c.to_string())
        .collect();
    assert!(failed.is_empty(), "failing checks:\n{}", failed.join("\n"));
    // The four suites together cover coefficients, roots, suppression, and
    // cross-method agreement.
    assert!(
        checks.len() >= 20,
        "expected a full check set, got {}",
        checks.len()
    );
}
