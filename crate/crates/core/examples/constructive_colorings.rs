//! The explicit colorings next to the exact solver, on the padded family
//! and the grid family.
//!
//! ```text
//! cargo run --example constructive_colorings
//! ```

use crossfam::constructive::{color_with, Strategy};
use crossfam::generators::{grid_transversal, padded};
use crossfam::Solver;

fn main() -> crossfam::Result<()> {
    let solver = Solver::default();
    for (name, family) in [("padded(3, 4)", padded(3, 4)?), ("grid(3)", grid_transversal(3)?)] {
        println!("{name}:");
        for strategy in [Strategy::Prop4, Strategy::Thm3, Strategy::Auto, Strategy::Exact] {
            match color_with(&family, strategy, &solver) {
                Ok(c) => println!("  {strategy:?}: {} colors, {:?}", c.distinct_colors(), c.colors()),
                Err(e) => println!("  {strategy:?}: {e}"),
            }
        }
    }
    Ok(())
}
