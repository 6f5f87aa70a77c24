//! Flowers and the edge-count bound for critical cross-intersecting families.
//!
//! An edge set `E` is a flower with `k` petals and core `W` when the
//! restriction `{e ∖ W : e ∈ E}` has covering number at least `k`. Whenever
//! `|E| > (k − 1)ⁿ` with `n` the largest edge size, a flower exists; the
//! search below follows the inductive argument for that fact: stop if
//! `τ ≥ k`, otherwise descend into the link of a vertex of maximum degree.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{Solver, TauCertificate};
use crate::family::{canonical_edges, restrict_edges, Family, Side};
use crate::predicates::{criticality_violation, is_critical, is_cross_intersecting, CriticalityViolation};
use crate::vertex_set::{Edge, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlowerCertificate {
    pub core: VertexSet,
    pub petals: usize,
    /// Exact `τ` of the restriction by `core`, computed on the full edge set.
    pub tau_witness: TauCertificate,
}

impl FlowerCertificate {
    /// Recomputes `τ(restrict(edges, core))` and checks it is at least `petals`.
    pub fn verify(&self, edges: &[Edge], solver: &Solver) -> Result<()> {
        let restricted = restrict_edges(&canonical_edges(edges), &self.core);
        let tau = solver.tau(&restricted)?;
        if tau.value.at_least(self.petals) {
            Ok(())
        } else {
            Err(Error::VerificationFailed(format!(
                "core {} leaves tau {} < {} petals",
                self.core, tau.value, self.petals
            )))
        }
    }
}

/// `{e ∖ {x} : x ∈ e ∈ edges}`.
pub fn link(edges: &[Edge], x: usize) -> Vec<Edge> {
    let mut out: Vec<Edge> = edges
        .iter()
        .filter(|e| e.contains(x))
        .map(|e| {
            let mut e = e.clone();
            e.remove(x);
            e
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Lowest-index vertex of maximum degree.
fn max_degree_vertex(edges: &[Edge]) -> Option<usize> {
    let top = edges.iter().filter_map(Edge::last).max()?;
    let mut degree = vec![0usize; top + 1];
    for e in edges {
        for v in e.iter() {
            degree[v] += 1;
        }
    }
    let best = *degree.iter().max()?;
    degree.iter().position(|&d| d == best)
}

impl Solver {
    /// Searches for a flower with `petals` petals.
    ///
    /// Returns `None` only for an empty edge set: each descent step keeps at
    /// least one edge, and an edge emptied by the core makes `τ` infinite.
    pub fn find_flower(&self, edges: &[Edge], petals: usize) -> Result<Option<FlowerCertificate>> {
        if petals == 0 {
            return Err(Error::InvalidParameter("a flower needs at least one petal".into()));
        }
        let edges = canonical_edges(edges);
        let mut current = edges.clone();
        let mut core = VertexSet::new();
        loop {
            if current.is_empty() {
                return Ok(None);
            }
            if self.tau(&current)?.value.at_least(petals) {
                break;
            }
            // τ ≤ petals − 1, so some vertex lies in at least |E| / (petals − 1)
            // edges; the maximum-degree vertex is one of them.
            let x = max_degree_vertex(&current).expect("non-empty edges");
            current = link(&current, x);
            core.insert(x);
        }
        let tau_witness = self.tau(&restrict_edges(&edges, &core))?;
        let cert = FlowerCertificate { core, petals, tau_witness };
        cert.verify(&edges, self)?;
        Ok(Some(cert))
    }

    /// Checks `max(|A|, |B|) ≤ nⁿ` for a cross-intersecting family and, when
    /// a side is larger, exhibits a flower with `n + 1` petals on it along
    /// with the resulting criticality violation.
    pub fn check_theorem2(&self, family: &Family) -> Result<BoundReport> {
        if !is_cross_intersecting(family) {
            return Err(Error::PreconditionViolated("family is not cross-intersecting".into()));
        }
        let n = family.max_edge_size();
        let bound = (n as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
        let (size_a, size_b) = (family.side_a().len(), family.side_b().len());
        let largest = size_a.max(size_b) as u128;
        let critical = is_critical(family)?;

        let oversized = [Side::A, Side::B]
            .into_iter()
            .find(|&s| family.side(s).len() as u128 > bound);
        let excess = match oversized {
            None => None,
            Some(side) => {
                let flower = self.find_flower(family.side(side), n + 1)?.ok_or_else(|| {
                    Error::InternalContradiction(format!(
                        "side {side} exceeds n^n but has no flower with {} petals",
                        n + 1
                    ))
                })?;
                let core_meets_every_opposite_edge = family
                    .side(side.opposite())
                    .iter()
                    .all(|e| e.intersects(&flower.core));
                let violation = criticality_violation(family).ok_or_else(|| {
                    Error::InternalContradiction(format!(
                        "side {side} exceeds n^n yet the family is critical"
                    ))
                })?;
                Some(Excess { side, flower, core_meets_every_opposite_edge, violation })
            }
        };
        Ok(BoundReport {
            n,
            size_a,
            size_b,
            bound,
            critical,
            margin: bound as i128 - largest as i128,
            bound_holds: largest <= bound,
            excess,
        })
    }
}

/// [`Solver::find_flower`] with the default budget.
pub fn find_flower(edges: &[Edge], petals: usize) -> Result<Option<FlowerCertificate>> {
    Solver::default().find_flower(edges, petals)
}

/// [`Solver::check_theorem2`] with the default budget.
pub fn check_theorem2(family: &Family) -> Result<BoundReport> {
    Solver::default().check_theorem2(family)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub size_a: usize,
    pub size_b: usize,
    /// `nⁿ`, saturating.
    pub bound: u128,
    pub critical: bool,
    /// `nⁿ − max(|A|, |B|)`.
    pub margin: i128,
    pub bound_holds: bool,
    pub excess: Option<Excess>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Excess {
    pub side: Side,
    pub flower: FlowerCertificate,
    pub core_meets_every_opposite_edge: bool,
    pub violation: CriticalityViolation,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::TauValue;

    fn sets(raw: &[&[usize]]) -> Vec<Edge> {
        raw.iter().map(|e| VertexSet::from(*e)).collect()
    }

    fn fano_lines() -> Vec<Edge> {
        sets(&[&[0, 1, 2], &[0, 3, 4], &[0, 5, 6], &[1, 3, 5], &[1, 4, 6], &[2, 3, 6], &[2, 4, 5]])
    }

    #[test]
    fn fano_is_a_three_petal_flower_with_empty_core() {
        let cert = find_flower(&fano_lines(), 3).unwrap().unwrap();
        assert!(cert.core.is_empty());
        assert_eq!(cert.tau_witness.value, TauValue::Finite(3));
    }

    #[test]
    fn disjoint_singletons() {
        let edges = sets(&[&[0], &[1], &[2], &[3]]);
        let cert = find_flower(&edges, 4).unwrap().unwrap();
        assert!(cert.core.is_empty());
        assert_eq!(cert.tau_witness.value, TauValue::Finite(4));
    }

    #[test]
    fn five_cycle_has_three_petals() {
        // |E| = 5 = (3 − 1)² + 1 with n = 2.
        let c5 = sets(&[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[0, 4]]);
        let cert = find_flower(&c5, 3).unwrap().unwrap();
        assert_eq!(cert.core, VertexSet::new());
        assert_eq!(cert.tau_witness.value, TauValue::Finite(3));
    }

    #[test]
    fn star_flower_has_centre_core() {
        let star = sets(&[&[0, 1], &[0, 2], &[0, 3]]);
        let cert = find_flower(&star, 3).unwrap().unwrap();
        assert_eq!(cert.core, VertexSet::from([0]));
    }

    #[test]
    fn edge_inside_link_gives_infinite_tau() {
        let edges = sets(&[&[0], &[0, 1]]);
        let cert = find_flower(&edges, 2).unwrap().unwrap();
        assert_eq!(cert.core, VertexSet::from([0]));
        assert_eq!(cert.tau_witness.value, TauValue::Infinite);
    }

    #[test]
    fn single_edge_is_its_own_core() {
        let edges = sets(&[&[0, 1]]);
        let cert = find_flower(&edges, 2).unwrap().unwrap();
        assert_eq!(cert.core, VertexSet::from([0, 1]));
        assert_eq!(cert.tau_witness.value, TauValue::Infinite);
        assert!(find_flower(&[], 1).unwrap().is_none());
        assert!(matches!(find_flower(&edges, 0), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn link_collapses_and_keeps_empty() {
        let edges = sets(&[&[0], &[0, 1], &[1, 2]]);
        assert_eq!(link(&edges, 0), sets(&[&[], &[1]]));
    }

    #[test]
    fn oversized_star_reports_violation() {
        // n = 2, |A| = 5 > 4.
        let a: Vec<Vec<usize>> = (1..6).map(|i| vec![0, i]).collect();
        let f = Family::new(6, a, [vec![0, 1]]).unwrap();
        let report = check_theorem2(&f).unwrap();
        assert!(!report.bound_holds);
        assert!(!report.critical);
        assert_eq!(report.margin, -1);
        let excess = report.excess.unwrap();
        assert_eq!(excess.side, Side::A);
        assert_eq!(excess.flower.core, VertexSet::from([0]));
        assert!(excess.core_meets_every_opposite_edge);
        assert_eq!(excess.violation, CriticalityViolation { side: Side::A, edge: 0, vertex: 0 });
    }

    #[test]
    fn k4_within_bound() {
        let f = Family::new(4, [vec![0, 1], vec![2, 3]], [vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]])
            .unwrap();
        let report = check_theorem2(&f).unwrap();
        assert!(report.critical && report.bound_holds);
        assert_eq!((report.n, report.bound, report.margin), (2, 4, 0));
        assert!(report.excess.is_none());
    }
}
