//! Run every seeded verification suite with a small trial count.
//!
//! ```text
//! cargo run --release --example verify_suites -- 7
//! ```

use crossfam::verify::{self, SuiteConfig};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let cfg = SuiteConfig { seed, trials: 25, ..SuiteConfig::default() };
    let reports = [
        verify::three_coloring(&cfg),
        verify::dispatcher(&cfg),
        verify::edge_bound(&cfg),
        verify::intersection_sizes(&cfg),
        verify::four_coloring(&cfg),
        verify::flowers(&cfg),
    ];
    for r in &reports {
        println!("{r}");
    }
    if reports.iter().any(|r| !r.passed()) {
        std::process::exit(1);
    }
}
