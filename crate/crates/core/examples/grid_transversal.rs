//! Rows of an n×n grid against all of its n^n row transversals: critical,
//! three-chromatic, and exactly at the n^n size bound.
//!
//! ```text
//! cargo run --example grid_transversal -- 3
//! ```

use crossfam::generators::grid_transversal;
use crossfam::{AnalysisReport, Solver};

fn main() -> crossfam::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let family = grid_transversal(n)?;
    let solver = Solver::default();

    let report = AnalysisReport::full(&family, &solver);
    println!("|A| = {}, |B| = {}", report.edges_a, report.edges_b);
    println!("cross-intersecting: {}, critical: {}", report.is_cross_intersecting, report.is_critical);
    println!("chi = {:?}, tau(A) = {:?}, tau(B) = {:?}", report.chi, report.tau_a, report.tau_b);

    let bound = solver.check_theorem2(&family)?;
    println!("n^n = {}, margin = {}", bound.bound, bound.margin);
    Ok(())
}
