//! Any (k−1)^n + 1 edges of size at most n contain a flower with k petals:
//! a core whose deletion leaves covering number at least k.
//!
//! ```text
//! cargo run --example flower_lemma
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crossfam::family::restrict_edges;
use crossfam::generators::cycle;
use crossfam::random::edge_set;
use crossfam::{Edge, Solver};

fn show(solver: &Solver, name: &str, edges: &[Edge], k: usize) -> crossfam::Result<()> {
    let cert = solver.find_flower(edges, k)?.expect("non-empty edge set");
    cert.verify(edges, solver)?;
    let rest = solver.tau(&restrict_edges(edges, &cert.core))?;
    println!("{name}: tau = {}, core {} leaves tau = {}", solver.tau(edges)?.value, cert.core, rest.value);
    Ok(())
}

fn main() -> crossfam::Result<()> {
    let solver = Solver::default();

    let star: Vec<Edge> = (1..=5).map(|i| Edge::from([0, i])).collect();
    show(&solver, "star K1,5", &star, 3)?;
    show(&solver, "cycle C5", cycle(5)?.side_a(), 3)?;
    let cone: Vec<Edge> = (1..=5).flat_map(|i| (i + 1..=5).map(move |j| Edge::from([0, i, j]))).collect();
    show(&solver, "cone over K5", &cone, 3)?;

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for trial in 0..3 {
        show(&solver, &format!("random #{trial}"), &edge_set(&mut rng, 3, 9, 6), 3)?;
    }
    Ok(())
}
