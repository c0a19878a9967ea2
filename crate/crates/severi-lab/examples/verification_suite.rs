//! Running the named verification battery from library code.
//!
//! Run with: cargo run --release --example verification_suite

use severi_lab::suite::{run_all, run_check, CHECK_NAMES};
use severi_lab::Config;

fn main() {
    // Smaller working sizes than the CLI defaults keep this example
    // quick; every report records the precision it actually used.
    let config = Config {
        precision: 80,
        norm_cap: 20,
    };

    println!("registered checks: {}", CHECK_NAMES.join(", "));
    println!();

    let reports = run_all(&config);
    for report in &reports {
        println!("{report}");
    }
    assert!(reports.iter().all(|r| r.passed()));

    // Individual checks run by name and serialize to stable JSON.
    let ramanujan = run_check("ramanujan", &config).unwrap();
    println!("\nas JSON: {}", serde_json::to_string(&ramanujan).unwrap());
    assert!(run_check("no_such_check", &config).is_none());
}
