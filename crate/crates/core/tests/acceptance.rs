//! One line per criterion. Every criterion must pass except the single
//! tabulated row whose listed values no root produces; that line prints FAIL
//! and the run still succeeds only if nothing else changed.

use bottcalc::acceptance::{Criterion, Suite};

/// Criterion 4 fails on exactly this row; see the README.
const KNOWN_TABLE_FAILURE: &str = "OG(2,8) R*(x)(Rperp/R) [r=2,n>=4]";

fn main() {
    let suite = Suite::new();
    let mut unexpected = Vec::new();
    for c in Criterion::ALL {
        let res = suite.run(c);
        let verdict = if res.passed { "PASS" } else { "FAIL" };
        println!(
            "criterion {} {:<18} {verdict} {:>8} ms (budget {} ms)  {}",
            res.criterion, res.slug, res.elapsed_ms, res.budget_ms, res.detail
        );
        let as_recorded = if c == Criterion::IsotropicTables {
            !res.passed && res.detail.starts_with("1 of ") && res.detail.contains(KNOWN_TABLE_FAILURE)
        } else {
            res.passed
        };
        if !as_recorded {
            unexpected.push(res.slug);
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: all criteria as recorded (criterion 4: one known failing row)");
    } else {
        println!("acceptance: unexpected outcome in {unexpected:?}");
        std::process::exit(1);
    }
}
