//! The one Sperner cross-intersecting family that needs four colors.
//!
//! ```text
//! cargo run --example k4_exceptional
//! ```

use crossfam::constructive::color_cross_family;
use crossfam::predicates::exceptional_structure;
use crossfam::{Family, Solver};

fn main() -> crossfam::Result<()> {
    let k4 = Family::new(4, [vec![0, 1], vec![2, 3]], [vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]])?;
    let solver = Solver::default();

    let chi = solver.chi(&k4)?;
    println!("chi = {} via {:?}", chi.value, chi.coloring.colors());
    println!("lower bound: {:?}", chi.lower_bound);

    if let Some(ex) = exceptional_structure(&k4) {
        println!("exceptional: m = {}, l = {}, parts {} | {} on side {}", ex.m, ex.l, ex.parts.0, ex.parts.1, ex.parts_side);
    }

    let (coloring, verdict) = color_cross_family(&k4, &solver)?;
    println!("dispatcher: {verdict:?}, colors {:?}", coloring.colors());
    Ok(())
}
