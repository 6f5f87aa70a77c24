//! Fano planes substituted into Fano planes: an intersecting 3^k-uniform
//! family with 7^((n−1)/2) edges.
//!
//! ```text
//! cargo run --release --example iterated_fano
//! ```

use std::time::Instant;

use crossfam::generators::iterated_fano;
use crossfam::predicates::{is_intersecting, uniformity};

fn main() -> crossfam::Result<()> {
    for k in 1..=2 {
        let start = Instant::now();
        let f = iterated_fano(k)?;
        println!(
            "level {k}: {} vertices, {} edges, uniform {:?}, intersecting {} ({:.1?})",
            f.vertex_count(),
            f.side_a().len(),
            uniformity(&f),
            is_intersecting(&f),
            start.elapsed()
        );
    }
    // Level 3 would have 7^13 edges.
    assert!(iterated_fano(3).is_err());
    Ok(())
}
