//! Runs every identity suite on small windows and prints a summary.

use doubleschur::verify::{run_all, VerifyConfig};

fn main() {
    let cfg = VerifyConfig {
        max_size: 4,
        order: 8,
        ..VerifyConfig::default()
    };
    let reports = run_all(&cfg);
    for r in &reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        println!("{status} {:<18} {:>6} cases", r.suite, r.cases);
    }
    if reports.iter().any(|r| !r.passed()) {
        std::process::exit(1);
    }
}
