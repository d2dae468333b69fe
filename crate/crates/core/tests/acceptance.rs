//! Runs every acceptance criterion and prints one PASS/FAIL line each.
//! Exits non-zero if any criterion fails.

use altcoinv::selftest::{run_criterion, CRITERIA};

fn main() {
    let mut failed = Vec::new();
    for (id, _) in CRITERIA {
        let r = run_criterion(id);
        println!("{}", r.line());
        if !r.passed {
            failed.push(id);
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        CRITERIA.len() - failed.len(),
        CRITERIA.len()
    );
    if !failed.is_empty() {
        std::process::exit(1);
    }
}
