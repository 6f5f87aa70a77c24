mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crossfam::constructive::{color_cross_family, proposition_four_coloring, Verdict};
use crossfam::family::restrict_edges;
use crossfam::random::{self, CrossSpernerParams};
use crossfam::predicates::{is_critical, is_cross_intersecting, is_sperner, q_set};
use crossfam::{exact, io, Edge, Family, Solver, TauValue, VertexSet};

const V: usize = 7;

fn edge(max: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::btree_set(0..V, 1..=max).prop_map(|s| s.into_iter().collect())
}

fn side(max: usize) -> impl Strategy<Value = Vec<Vec<usize>>> {
    prop::collection::vec(edge(max), 0..7)
}

fn family() -> impl Strategy<Value = Family> {
    (side(4), side(4)).prop_map(|(a, b)| Family::new(V, a, b).unwrap())
}

fn edges(max: usize) -> impl Strategy<Value = Vec<Edge>> {
    side(max).prop_map(|s| s.iter().map(|e| e.as_slice().into()).collect())
}

/// Seeded cross-intersecting Sperner families; with `share` set, A-edges
/// meeting all of `A` are copied into `B` so the sides overlap.
fn cross_sperner() -> impl Strategy<Value = Family> {
    (any::<u64>(), 2usize..=4, any::<bool>()).prop_map(|(seed, max, share)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random::cross_sperner(&mut rng, &CrossSpernerParams::new(4..=V, 2..=max));
        if !share {
            return f;
        }
        let mut b = f.side_b().to_vec();
        b.extend(f.side_a().iter().filter(|e| f.side_a().iter().all(|g| g.intersects(e))).cloned());
        Family::from_edges(f.vertex_count(), f.side_a().to_vec(), b).unwrap()
    })
}

fn vset() -> impl Strategy<Value = VertexSet> {
    prop::collection::btree_set(0..V, 0..V).prop_map(|s| s.into_iter().collect())
}

proptest! {
    #[test]
    fn construction_is_idempotent(f in family()) {
        let again = Family::from_edges(f.vertex_count(), f.side_a().to_vec(), f.side_b().to_vec()).unwrap();
        prop_assert_eq!(&again, &f);
        prop_assert!(f.side_a().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn text_round_trip(f in family()) {
        let text = io::serialize(&f);
        let parsed = io::parse(&text).unwrap();
        prop_assert!(parsed.warnings.is_empty());
        prop_assert_eq!(&parsed.family, &f);
        prop_assert_eq!(io::serialize(&parsed.family), text);
    }

    #[test]
    fn restriction_shrinks(f in family(), w in vset()) {
        let r = f.restrict(&w).unwrap();
        prop_assert!(r.family.side_a().len() <= f.side_a().len());
        prop_assert!(r.family.side_b().len() <= f.side_b().len());
        prop_assert_eq!(r.family.vertex_count(), V - w.len());
        prop_assert_eq!(f.restrict(&VertexSet::new()).unwrap().family, f.clone());
    }

    #[test]
    fn tau_matches_brute_force(es in edges(4)) {
        let cert = exact::tau(&es).unwrap();
        prop_assert_eq!(cert.value.finite(), common::tau(&common::plain(&es), V));
        cert.verify(&es).unwrap();
    }

    #[test]
    fn tau_is_monotone_under_adding_edges(es in edges(4), extra in edge(4)) {
        let before = exact::tau(&es).unwrap().value;
        let mut more = es.clone();
        more.push(extra.as_slice().into());
        let after = exact::tau(&more).unwrap().value;
        prop_assert!(before <= after);
    }

    #[test]
    fn restricting_by_a_vertex_costs_at_most_one(es in edges(4), x in 0..V) {
        let full = exact::tau(&es).unwrap().value;
        let rest = exact::tau(&restrict_edges(&es, &VertexSet::singleton(x))).unwrap().value;
        match (full, rest) {
            (TauValue::Finite(a), TauValue::Finite(b)) => prop_assert!(b + 1 >= a && b >= a.saturating_sub(1)),
            (TauValue::Finite(_), TauValue::Infinite) => {}
            (TauValue::Infinite, r) => prop_assert_eq!(r, TauValue::Infinite),
        }
    }

    #[test]
    fn chi_matches_brute_force(f in family()) {
        let all = common::plain(&f.union_edges());
        match exact::chi(&f) {
            Ok(cert) => {
                prop_assert_eq!(cert.value, common::chi(&all, V));
                prop_assert!(cert.coloring.is_proper(&f));
            }
            Err(_) => prop_assert!(all.iter().any(|e| e.len() <= 1)),
        }
    }

    #[test]
    fn critical_implies_cross_intersecting(f in family()) {
        if let Ok(true) = is_critical(&f) {
            prop_assert!(is_cross_intersecting(&f));
        }
        let (a, b) = common::sides(&f);
        if !a.is_empty() && !b.is_empty() {
            prop_assert_eq!(is_critical(&f).unwrap(), common::critical(&a, &b));
        }
    }

    #[test]
    fn q_set_matches_scan(f in family()) {
        let (a, b) = common::sides(&f);
        match q_set(&f) {
            Ok(q) => prop_assert_eq!(q, common::q_set(&a, &b)),
            Err(_) => prop_assert!(f.union_edges().len() < 2),
        }
    }

    #[test]
    fn dispatcher_on_cross_intersecting_sperner(f in cross_sperner()) {
        prop_assert!(is_cross_intersecting(&f) && is_sperner(&f));
        let (c, verdict) = color_cross_family(&f, &Solver::default()).unwrap();
        prop_assert!(c.is_proper(&f));
        let chi = exact::chi(&f).unwrap().value;
        prop_assert_eq!(verdict == Verdict::ExceptionalChi4, chi == 4);
        if f.side_a().iter().all(|e| !f.side_b().contains(e)) {
            let p = proposition_four_coloring(&f).unwrap();
            prop_assert!(p.is_proper(&f));
        }
    }

    #[test]
    fn flowers_verify(es in edges(3), k in 1usize..4) {
        prop_assume!(!es.is_empty());
        let cert = exact::Solver::default().find_flower(&es, k).unwrap().unwrap();
        let rest = common::remove_core(&common::plain(&es), &cert.core.to_vec());
        prop_assert!(common::tau(&rest, V).is_none_or(|t| t >= k));
    }
}
