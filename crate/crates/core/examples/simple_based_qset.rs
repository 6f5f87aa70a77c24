//! Attach one new vertex u_i to each edge of a simple 3-chromatic base:
//! the result stays 3-chromatic while pairwise intersections take only the
//! sizes {0, 1, 2, n − 1}.
//!
//! ```text
//! cargo run --example simple_based_qset
//! ```

use crossfam::generators::{disjoint_copies, fano, simple_based};
use crossfam::predicates::q_set;
use crossfam::Solver;

fn main() -> crossfam::Result<()> {
    let solver = Solver::default();
    for (name, base) in [("Fano", fano()), ("two Fano planes", disjoint_copies(&fano(), 2)?)] {
        let family = simple_based(&base, 4, &solver)?;
        println!(
            "{name}: {} vertices, |A| = {}, |B| = {}, Q = {:?}, chi = {}",
            family.vertex_count(),
            family.side_a().len(),
            family.side_b().len(),
            q_set(&family)?,
            solver.chi(&family)?.value
        );
    }
    Ok(())
}
