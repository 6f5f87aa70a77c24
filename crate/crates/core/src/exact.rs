//! Exact, certified solvers for k-colorability, the chromatic number and the
//! covering number of desk-scale hypergraphs.
//!
//! Every search is deterministic: branching always happens on the smallest
//! unresolved edge (lowest index on ties) and on its lowest-index free
//! vertex. Each call counts search nodes and fails with
//! [`Error::BudgetExhausted`] once the configured budget is spent.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::coloring::{Coloring, ColoringMethod};
use crate::error::{Error, Result};
use crate::family::{canonical_edges, Family};
use crate::vertex_set::{Edge, VertexSet};

pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

/// Search-node cap shared by all exact searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Solver {
    pub node_budget: u64,
}

impl Default for Solver {
    fn default() -> Self {
        Solver { node_budget: DEFAULT_NODE_BUDGET }
    }
}

/// `τ`, which is `+∞` when some edge is empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TauValue {
    Finite(usize),
    Infinite,
}

impl TauValue {
    pub fn at_least(self, k: usize) -> bool {
        match self {
            TauValue::Finite(t) => t >= k,
            TauValue::Infinite => true,
        }
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            TauValue::Finite(t) => Some(t),
            TauValue::Infinite => None,
        }
    }
}

impl fmt::Display for TauValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TauValue::Finite(t) => write!(f, "{t}"),
            TauValue::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for TauValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            TauValue::Finite(t) => serializer.serialize_u64(*t as u64),
            TauValue::Infinite => serializer.serialize_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TauCertificate {
    pub value: TauValue,
    /// A minimum transversal, present when `value` is finite.
    pub transversal: Option<VertexSet>,
    /// Index (in the input list) of an empty edge, present when `value` is infinite.
    pub infeasible_edge: Option<usize>,
    /// Branch-and-bound nodes visited; the search is exhaustive, so no
    /// transversal smaller than `value` exists.
    pub nodes: u64,
}

impl TauCertificate {
    /// Re-checks the witness against `edges`.
    pub fn verify(&self, edges: &[Edge]) -> Result<()> {
        match (self.value, &self.transversal, self.infeasible_edge) {
            (TauValue::Finite(t), Some(x), None) => {
                if x.len() != t {
                    return Err(Error::VerificationFailed(format!(
                        "transversal {x} has size {} but tau is {t}",
                        x.len()
                    )));
                }
                match edges.iter().find(|e| !e.intersects(x)) {
                    Some(e) => Err(Error::VerificationFailed(format!(
                        "transversal {x} misses edge {e}"
                    ))),
                    None => Ok(()),
                }
            }
            (TauValue::Infinite, None, Some(i)) if edges.get(i).is_some_and(Edge::is_empty) => {
                Ok(())
            }
            _ => Err(Error::VerificationFailed("inconsistent tau certificate".into())),
        }
    }
}

/// How the lower bound `χ ≥ value` is justified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LowerBoundWitness {
    /// `value ≤ 1`, or `value = 2` because some edge exists (one color
    /// leaves every non-empty edge monochromatic).
    Trivial,
    /// The exhaustive `(value − 1)`-coloring search found nothing.
    Exhausted { colors: usize, nodes: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChiCertificate {
    pub value: usize,
    pub coloring: Coloring,
    pub lower_bound: LowerBoundWitness,
}

impl Solver {
    pub fn with_budget(node_budget: u64) -> Self {
        Solver { node_budget }
    }

    /// A proper `k`-coloring of `A ∪ B`, or `None` if none exists.
    pub fn k_colorable(&self, family: &Family, k: usize) -> Result<Option<Coloring>> {
        self.k_colorable_counted(family, k).map(|(c, _)| c)
    }

    fn k_colorable_counted(&self, family: &Family, k: usize) -> Result<(Option<Coloring>, u64)> {
        if k == 0 {
            return Err(Error::InvalidParameter("k must be at least 1".into()));
        }
        let edges = family.union_edges();
        if edges.iter().any(|e| e.len() <= 1) {
            return Ok((None, 0));
        }
        let mut search = ColorSearch {
            edges: &edges,
            k,
            colors: vec![None; family.vertex_count()],
            classes: vec![VertexSet::new(); k],
            assigned: VertexSet::new(),
            nodes: 0,
            budget: self.node_budget,
        };
        let found = search.run(0)?;
        let nodes = search.nodes;
        if !found {
            return Ok((None, nodes));
        }
        let colors = search.colors.into_iter().map(|c| c.unwrap_or(0)).collect();
        Ok((Some(Coloring::new(colors, k, ColoringMethod::Exact)?), nodes))
    }

    /// The chromatic number with a proper coloring and a lower-bound record.
    ///
    /// Fails with [`Error::Uncolorable`] if an edge has fewer than two
    /// vertices.
    pub fn chi(&self, family: &Family) -> Result<ChiCertificate> {
        let edges = family.union_edges();
        if let Some((i, e)) = edges.iter().enumerate().find(|(_, e)| e.len() <= 1) {
            return Err(Error::Uncolorable { edge: i, size: e.len() });
        }
        let mut last_nodes = 0;
        for k in 1..=family.vertex_count().max(1) {
            let (found, nodes) = self.k_colorable_counted(family, k)?;
            if let Some(coloring) = found {
                let lower_bound = if k == 1 || (k == 2 && !edges.is_empty()) {
                    LowerBoundWitness::Trivial
                } else {
                    LowerBoundWitness::Exhausted { colors: k - 1, nodes: last_nodes }
                };
                return Ok(ChiCertificate { value: k, coloring, lower_bound });
            }
            last_nodes = nodes;
        }
        Err(Error::InternalContradiction(
            "no coloring with one color per vertex".into(),
        ))
    }

    /// Exact covering number of `edges` by branch and bound.
    pub fn tau(&self, edges: &[Edge]) -> Result<TauCertificate> {
        if let Some(i) = edges.iter().position(Edge::is_empty) {
            return Ok(TauCertificate {
                value: TauValue::Infinite,
                transversal: None,
                infeasible_edge: Some(i),
                nodes: 0,
            });
        }
        let edges = canonical_edges(edges);
        let mut search = TauSearch {
            edges: &edges,
            best: greedy_transversal(&edges),
            nodes: 0,
            budget: self.node_budget,
        };
        search.run(&VertexSet::new(), &VertexSet::new())?;
        Ok(TauCertificate {
            value: TauValue::Finite(search.best.len()),
            transversal: Some(search.best),
            infeasible_edge: None,
            nodes: search.nodes,
        })
    }
}

/// [`Solver::k_colorable`] with the default budget.
pub fn k_colorable(family: &Family, k: usize) -> Result<Option<Coloring>> {
    Solver::default().k_colorable(family, k)
}

/// [`Solver::chi`] with the default budget.
pub fn chi(family: &Family) -> Result<ChiCertificate> {
    Solver::default().chi(family)
}

/// [`Solver::tau`] with the default budget.
pub fn tau(edges: &[Edge]) -> Result<TauCertificate> {
    Solver::default().tau(edges)
}

struct ColorSearch<'a> {
    edges: &'a [Edge],
    k: usize,
    colors: Vec<Option<usize>>,
    classes: Vec<VertexSet>,
    assigned: VertexSet,
    nodes: u64,
    budget: u64,
}

enum Pick {
    Done,
    Dead,
    Branch(usize),
}

impl ColorSearch<'_> {
    /// Smallest edge that does not yet see two colors, measured by its
    /// number of uncolored vertices.
    fn pick(&self) -> Pick {
        let mut best: Option<(usize, usize)> = None;
        for (i, e) in self.edges.iter().enumerate() {
            let mut seen = 0;
            for class in &self.classes {
                if class.intersects(e) {
                    seen += 1;
                    if seen == 2 {
                        break;
                    }
                }
            }
            if seen >= 2 {
                continue;
            }
            let free = e.len() - e.intersection_len(&self.assigned);
            if free == 0 {
                return Pick::Dead;
            }
            if best.is_none_or(|(f, _)| free < f) {
                best = Some((free, i));
            }
        }
        match best {
            None => Pick::Done,
            Some((_, i)) => Pick::Branch(i),
        }
    }

    fn run(&mut self, used: usize) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExhausted { limit: self.budget });
        }
        let edge = match self.pick() {
            Pick::Done => return Ok(true),
            Pick::Dead => return Ok(false),
            Pick::Branch(i) => &self.edges[i],
        };
        let v = edge.iter().find(|&v| !self.assigned.contains(v)).expect("free vertex");
        // Colors beyond `used` are interchangeable, so only the first fresh
        // one is tried.
        for c in 0..self.k.min(used + 1) {
            self.colors[v] = Some(c);
            self.classes[c].insert(v);
            self.assigned.insert(v);
            if self.run(used.max(c + 1))? {
                return Ok(true);
            }
            self.assigned.remove(v);
            self.classes[c].remove(v);
            self.colors[v] = None;
        }
        Ok(false)
    }
}

fn greedy_transversal(edges: &[Edge]) -> VertexSet {
    let mut chosen = VertexSet::new();
    let mut open: Vec<&Edge> = edges.iter().collect();
    while !open.is_empty() {
        let mut degree = std::collections::BTreeMap::<usize, usize>::new();
        for e in &open {
            for v in e.iter() {
                *degree.entry(v).or_default() += 1;
            }
        }
        let (&v, _) = degree
            .iter()
            .max_by(|(va, da), (vb, db)| da.cmp(db).then(vb.cmp(va)))
            .expect("open edges are non-empty");
        chosen.insert(v);
        open.retain(|e| !e.contains(v));
    }
    chosen
}

struct TauSearch<'a> {
    edges: &'a [Edge],
    best: VertexSet,
    nodes: u64,
    budget: u64,
}

impl TauSearch<'_> {
    fn run(&mut self, chosen: &VertexSet, forbidden: &VertexSet) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExhausted { limit: self.budget });
        }
        // Uncovered edges, reduced to their still-allowed vertices.
        let mut open: Vec<(usize, Edge)> = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if e.intersects(chosen) {
                continue;
            }
            let allowed = e.difference(forbidden);
            if allowed.is_empty() {
                return Ok(());
            }
            open.push((i, allowed));
        }
        if open.is_empty() {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
            }
            return Ok(());
        }
        open.sort_by(|(i, a), (j, b)| a.len().cmp(&b.len()).then(i.cmp(j)));

        // Pairwise-disjoint open edges each need their own new vertex.
        let mut packed = VertexSet::new();
        let mut bound = 0;
        for (_, e) in &open {
            if !e.intersects(&packed) {
                packed = packed.union(e);
                bound += 1;
            }
        }
        if chosen.len() + bound >= self.best.len() {
            return Ok(());
        }

        let branch = open[0].1.clone();
        let mut forbidden = forbidden.clone();
        for v in branch.iter() {
            let mut next = chosen.clone();
            next.insert(v);
            self.run(&next, &forbidden)?;
            forbidden.insert(v);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vertex_set::VertexSet;

    fn fano_lines() -> Vec<Edge> {
        [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]]
            .into_iter()
            .map(VertexSet::from)
            .collect()
    }

    fn brute_tau(edges: &[Edge], n: usize) -> usize {
        (0u32..1 << n)
            .filter(|mask| {
                edges.iter().all(|e| e.iter().any(|v| mask & (1 << v) != 0))
            })
            .map(u32::count_ones)
            .min()
            .unwrap() as usize
    }

    #[test]
    fn fano_not_two_colorable_but_three_colorable() {
        let fano = Family::plain(7, fano_lines()).unwrap();
        assert!(k_colorable(&fano, 2).unwrap().is_none());
        let c = k_colorable(&fano, 3).unwrap().unwrap();
        assert!(c.is_proper(&fano));
        let cert = chi(&fano).unwrap();
        assert_eq!(cert.value, 3);
        assert!(matches!(cert.lower_bound, LowerBoundWitness::Exhausted { colors: 2, .. }));
    }

    #[test]
    fn single_edge_two_coloring() {
        let f = Family::plain(2, vec![[0, 1].into()]).unwrap();
        let c = k_colorable(&f, 2).unwrap().unwrap();
        assert_eq!(c.colors(), &[0, 1]);
    }

    #[test]
    fn k_zero_rejected() {
        let f = Family::plain(2, vec![[0, 1].into()]).unwrap();
        assert!(matches!(k_colorable(&f, 0), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn singleton_edge_is_uncolorable() {
        let f = Family::plain(2, vec![[0].into(), [0, 1].into()]).unwrap();
        assert!(k_colorable(&f, 5).unwrap().is_none());
        assert!(matches!(chi(&f), Err(Error::Uncolorable { size: 1, .. })));
        let g = Family::plain(2, vec![VertexSet::new()]).unwrap();
        assert!(matches!(chi(&g), Err(Error::Uncolorable { size: 0, .. })));
    }

    #[test]
    fn edgeless_family_needs_one_color() {
        let f = Family::plain(3, vec![]).unwrap();
        assert_eq!(chi(&f).unwrap().value, 1);
    }

    #[test]
    fn tau_of_fano_matches_brute_force() {
        let lines = fano_lines();
        assert_eq!(brute_tau(&lines, 7), 3);
        let cert = tau(&lines).unwrap();
        assert_eq!(cert.value, TauValue::Finite(3));
        cert.verify(&lines).unwrap();
    }

    #[test]
    fn tau_empty_edge_is_infinite() {
        let edges = vec![VertexSet::from([0]), VertexSet::new()];
        let cert = tau(&edges).unwrap();
        assert_eq!(cert.value, TauValue::Infinite);
        assert_eq!(cert.infeasible_edge, Some(1));
        cert.verify(&edges).unwrap();
        assert!(TauValue::Infinite.at_least(1000));
    }

    #[test]
    fn tau_of_no_edges_is_zero() {
        let cert = tau(&[]).unwrap();
        assert_eq!(cert.value, TauValue::Finite(0));
    }

    #[test]
    fn budget_is_enforced() {
        let fano = Family::plain(7, fano_lines()).unwrap();
        let tiny = Solver::with_budget(3);
        assert!(matches!(tiny.chi(&fano), Err(Error::BudgetExhausted { limit: 3 })));
    }
}
