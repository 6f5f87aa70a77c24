//! Seeded random families for property suites.

use std::ops::RangeInclusive;

use rand::seq::index::sample;
use rand::Rng;

use crate::family::Family;
use crate::generators::inclusion_minimal;
use crate::predicates::is_critical;
use crate::vertex_set::{Edge, VertexSet};

fn random_edge<R: Rng>(rng: &mut R, vertices: usize, sizes: &RangeInclusive<usize>) -> Edge {
    let hi = (*sizes.end()).min(vertices);
    let lo = (*sizes.start()).min(hi);
    let size = rng.random_range(lo..=hi);
    sample(rng, vertices, size).into_iter().collect()
}

/// Shape of the families drawn by [`cross_sperner`].
#[derive(Debug, Clone)]
pub struct CrossSpernerParams {
    pub vertices: RangeInclusive<usize>,
    pub edge_sizes: RangeInclusive<usize>,
    /// Candidate edges proposed after the first pair.
    pub attempts: usize,
}

impl CrossSpernerParams {
    pub fn new(vertices: RangeInclusive<usize>, edge_sizes: RangeInclusive<usize>) -> Self {
        CrossSpernerParams { vertices, edge_sizes, attempts: 40 }
    }
}

/// A cross-intersecting family whose union is Sperner and whose sides share
/// no edge. Edges are proposed at random and kept when they preserve all
/// three properties.
pub fn cross_sperner<R: Rng>(rng: &mut R, params: &CrossSpernerParams) -> Family {
    loop {
        let v = rng.random_range(params.vertices.clone());
        let mut a = vec![random_edge(rng, v, &params.edge_sizes)];
        let mut b: Vec<Edge> = Vec::new();
        for _ in 0..64 {
            let e = random_edge(rng, v, &params.edge_sizes);
            if e.intersects(&a[0]) && !e.is_subset(&a[0]) && !a[0].is_subset(&e) {
                b.push(e);
                break;
            }
        }
        if b.is_empty() {
            continue;
        }
        for _ in 0..params.attempts {
            let e = random_edge(rng, v, &params.edge_sizes);
            let to_a = rng.random_bool(0.5);
            let (own, other) = if to_a { (&a, &b) } else { (&b, &a) };
            let clashes = own
                .iter()
                .chain(other.iter())
                .any(|f| e.is_subset(f) || f.is_subset(&e));
            if clashes || !other.iter().all(|f| f.intersects(&e)) {
                continue;
            }
            if to_a {
                a.push(e);
            } else {
                b.push(e);
            }
        }
        return Family::from_edges(v, a, b).expect("edges drawn inside the universe");
    }
}

/// Minimal transversals of `edges` over `0..vertices`, by enumerating subsets.
fn blocker(edges: &[Edge], vertices: usize) -> Vec<Edge> {
    assert!(vertices < 20, "blocker enumeration is exponential");
    let transversals = (0u32..1 << vertices)
        .map(|mask| (0..vertices).filter(|&v| mask & (1 << v) != 0).collect::<VertexSet>())
        .filter(|t| edges.iter().all(|e| e.intersects(t)))
        .collect();
    inclusion_minimal(transversals)
}

/// A critical cross-intersecting family with every edge of size at most
/// `max_size`.
///
/// Draws a random clutter `A`, takes `B` as all of its minimal transversals
/// (rejecting the draw if one is larger than `max_size`), then discards
/// random `B` edges as long as the family stays critical.
pub fn critical<R: Rng>(rng: &mut R, max_size: usize, vertices: RangeInclusive<usize>) -> Family {
    assert!(max_size >= 1);
    loop {
        let v = rng.random_range(vertices.clone());
        let count = rng.random_range(1..=6);
        let raw: Vec<Edge> = (0..count).map(|_| random_edge(rng, v, &(1..=max_size))).collect();
        let a = inclusion_minimal(raw);
        let mut b = blocker(&a, v);
        if b.is_empty() || b.iter().any(|e| e.len() > max_size) {
            continue;
        }
        let family = Family::from_edges(v, a.clone(), b.clone()).expect("in range");
        if !is_critical(&family).unwrap_or(false) {
            continue;
        }
        let mut order: Vec<usize> = (0..b.len()).collect();
        for i in (1..order.len()).rev() {
            order.swap(i, rng.random_range(0..=i));
        }
        let mut keep = vec![true; b.len()];
        for i in order {
            keep[i] = false;
            let trial: Vec<Edge> =
                b.iter().zip(&keep).filter(|(_, &k)| k).map(|(e, _)| e.clone()).collect();
            let ok = !trial.is_empty()
                && is_critical(&Family::from_edges(v, a.clone(), trial).expect("in range"))
                    .unwrap_or(false);
            if !ok {
                keep[i] = true;
            }
        }
        b = b.into_iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| e).collect();
        return Family::from_edges(v, a, b).expect("in range");
    }
}

/// `count` distinct edges on `0..vertices` with sizes in `1..=max_size`; the
/// first has exactly `max_size` vertices so that the largest size is met.
pub fn edge_set<R: Rng>(rng: &mut R, max_size: usize, count: usize, vertices: usize) -> Vec<Edge> {
    assert!(max_size >= 1 && max_size <= vertices);
    let mut edges = vec![random_edge(rng, vertices, &(max_size..=max_size))];
    let mut tries = 0;
    while edges.len() < count {
        tries += 1;
        assert!(tries < 1_000_000, "universe too small for {count} distinct edges");
        let e = random_edge(rng, vertices, &(1..=max_size));
        if !edges.contains(&e) {
            edges.push(e);
        }
    }
    edges
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::predicates::{is_cross_intersecting, is_sperner};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn cross_sperner_properties() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let f = cross_sperner(&mut rng, &CrossSpernerParams::new(4..=8, 2..=4));
            assert!(is_cross_intersecting(&f));
            assert!(is_sperner(&f));
            assert!(f.side_a().iter().all(|e| !f.side_b().contains(e)));
        }
    }

    #[test]
    fn critical_families_are_critical() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let f = critical(&mut rng, 3, 3..=6);
            assert!(is_critical(&f).unwrap());
            assert!(f.max_edge_size() <= 3);
        }
    }

    #[test]
    fn blocker_of_triangle() {
        let tri: Vec<Edge> = vec![[0, 1].into(), [1, 2].into(), [0, 2].into()];
        let mut expected = tri.clone();
        expected.sort();
        assert_eq!(blocker(&tri, 3), expected);
    }

    #[test]
    fn edge_sets_are_distinct() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let edges = edge_set(&mut rng, 3, 9, 6);
        assert_eq!(edges.len(), 9);
        assert_eq!(edges.iter().map(Edge::len).max(), Some(3));
        let mut sorted = edges.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 9);
    }

    #[test]
    fn same_seed_same_family() {
        let draw = |seed| critical(&mut ChaCha8Rng::seed_from_u64(seed), 3, 3..=6);
        assert_eq!(draw(5), draw(5));
    }
}
