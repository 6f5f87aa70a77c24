//! Left-to-right paths against top-to-bottom paths in a triangulated grid.
//! Every pair crosses at a vertex, and the family is 3-chromatic.
//!
//! ```text
//! cargo run --example triangulation_percolation -- 3
//! ```

use crossfam::generators::triangulation_percolation;
use crossfam::predicates::is_cross_intersecting;
use crossfam::Solver;

fn main() -> crossfam::Result<()> {
    let k: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let family = triangulation_percolation(k)?;
    println!("{k}×{k} grid: |A| = {}, |B| = {}", family.side_a().len(), family.side_b().len());
    println!("cross-intersecting: {}", is_cross_intersecting(&family));
    let chi = Solver::default().chi(&family)?;
    println!("chi = {}", chi.value);
    for row in chi.coloring.colors().chunks(k) {
        println!("  {row:?}");
    }
    Ok(())
}
