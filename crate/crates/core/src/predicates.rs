//! Structural predicates on families: intersecting, cross-intersecting,
//! Sperner, critical, the intersection-size spectrum `Q(H)` and the
//! recognizer for the exceptional `χ = 4` structure.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{Solver, TauValue};
use crate::family::{Family, Side};
use crate::vertex_set::{Edge, VertexSet};

/// Every two edges of `A ∪ B` share a vertex.
pub fn is_intersecting(family: &Family) -> bool {
    let edges = family.union_edges();
    edges
        .iter()
        .enumerate()
        .all(|(i, e)| edges[i..].iter().all(|f| e.intersects(f)))
}

/// `A` and `B` are non-empty and every `a ∈ A` meets every `b ∈ B`.
pub fn is_cross_intersecting(family: &Family) -> bool {
    !family.side_a().is_empty()
        && !family.side_b().is_empty()
        && family
            .side_a()
            .iter()
            .all(|a| family.side_b().iter().all(|b| a.intersects(b)))
}

/// No edge of `A ∪ B` strictly contains another.
pub fn is_sperner(family: &Family) -> bool {
    let edges = family.union_edges();
    !edges
        .iter()
        .any(|e| edges.iter().any(|f| e.is_strict_subset(f)))
}

/// `Some(n)` iff every edge of `A ∪ B` has exactly `n` vertices.
pub fn uniformity(family: &Family) -> Option<usize> {
    let mut sizes = family.side_a().iter().chain(family.side_b()).map(Edge::len);
    let n = sizes.next()?;
    sizes.all(|s| s == n).then_some(n)
}

/// An edge and a vertex of it with no partner on the other side meeting the
/// edge in exactly that vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalityViolation {
    pub side: Side,
    pub edge: usize,
    pub vertex: usize,
}

/// First `(edge, v)` pair breaking criticality, scanning `A` then `B`.
pub fn criticality_violation(family: &Family) -> Option<CriticalityViolation> {
    for (side, idx, e) in family.tagged_edges() {
        let partners = family.side(side.opposite());
        for v in e.iter() {
            let witnessed = partners
                .iter()
                .any(|p| p.contains(v) && e.intersection_len(p) == 1);
            if !witnessed {
                return Some(CriticalityViolation { side, edge: idx, vertex: v });
            }
        }
    }
    None
}

/// Critical cross-intersecting family: cross-intersecting, and every vertex
/// of every edge is the sole intersection with some edge of the other side.
pub fn is_critical(family: &Family) -> Result<bool> {
    for side in [Side::A, Side::B] {
        if family.side(side).is_empty() {
            return Err(Error::EmptySide(side));
        }
    }
    Ok(is_cross_intersecting(family) && criticality_violation(family).is_none())
}

/// `Q(H)`: the sizes `|e₁ ∩ e₂|` over distinct edges of `A ∪ B`.
pub fn q_set(family: &Family) -> Result<BTreeSet<usize>> {
    let edges = family.union_edges();
    if edges.len() < 2 {
        return Err(Error::TooFewEdges(edges.len()));
    }
    let mut q = BTreeSet::new();
    for (i, e) in edges.iter().enumerate() {
        for f in &edges[i + 1..] {
            q.insert(e.intersection_len(f));
        }
    }
    Ok(q)
}

/// The exceptional structure: one side is `{P, Q}` with `P`, `Q` disjoint,
/// `|P| = m ≥ 2`, `|Q| = l ≥ 2`, and the other side is every pair `{p, q}`.
/// Vertices outside `P ⊔ Q` lie in no edge and are ignored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Exceptional {
    pub m: usize,
    pub l: usize,
    /// Side holding the two large edges.
    pub parts_side: Side,
    /// `(P, Q)`, the lexicographically smaller part first.
    pub parts: (VertexSet, VertexSet),
}

pub fn exceptional_structure(family: &Family) -> Option<Exceptional> {
    [Side::A, Side::B]
        .into_iter()
        .find_map(|side| exceptional_oriented(family, side))
}

fn exceptional_oriented(family: &Family, parts_side: Side) -> Option<Exceptional> {
    let [p, q] = family.side(parts_side) else {
        return None;
    };
    let (m, l) = (p.len(), q.len());
    if m < 2 || l < 2 || p.intersects(q) {
        return None;
    }
    let pairs = family.side(parts_side.opposite());
    if pairs.len() != m * l {
        return None;
    }
    // Sides are duplicate-free, so m·l distinct cross pairs are all of them.
    let all_cross = pairs
        .iter()
        .all(|e| e.len() == 2 && e.intersection_len(p) == 1 && e.intersection_len(q) == 1);
    all_cross.then(|| Exceptional {
        m,
        l,
        parts_side,
        parts: (p.clone(), q.clone()),
    })
}

/// Every predicate and invariant of a family in one place.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub vertex_count: usize,
    pub edges_a: usize,
    pub edges_b: usize,
    pub is_intersecting: bool,
    pub is_cross_intersecting: bool,
    pub is_sperner: bool,
    pub is_uniform: Option<usize>,
    pub is_critical: bool,
    pub q_set: Option<BTreeSet<usize>>,
    pub max_edge_size: usize,
    pub exceptional: Option<Exceptional>,
    /// Exact invariants; `None` when not requested, not defined, or over budget.
    pub chi: Option<usize>,
    pub tau_a: Option<TauValue>,
    pub tau_b: Option<TauValue>,
}

impl AnalysisReport {
    /// Structural predicates only; no search.
    pub fn structural(family: &Family) -> Self {
        let both_sides = !family.side_a().is_empty() && !family.side_b().is_empty();
        AnalysisReport {
            vertex_count: family.vertex_count(),
            edges_a: family.side_a().len(),
            edges_b: family.side_b().len(),
            is_intersecting: is_intersecting(family),
            is_cross_intersecting: is_cross_intersecting(family),
            is_sperner: is_sperner(family),
            is_uniform: uniformity(family),
            is_critical: both_sides && is_critical(family).unwrap_or(false),
            q_set: q_set(family).ok(),
            max_edge_size: family.max_edge_size(),
            exceptional: exceptional_structure(family),
            chi: None,
            tau_a: None,
            tau_b: None,
        }
    }

    /// Structural predicates plus exact `χ` and `τ` per side.
    pub fn full(family: &Family, solver: &Solver) -> Self {
        let mut report = Self::structural(family);
        report.chi = solver.chi(family).ok().map(|c| c.value);
        let tau_of = |side: &[Edge]| {
            (!side.is_empty())
                .then(|| solver.tau(side).ok().map(|t| t.value))
                .flatten()
        };
        report.tau_a = tau_of(family.side_a());
        report.tau_b = tau_of(family.side_b());
        report
    }
}
