//! Side-tagged set families `H = (V, A, B)`.
//!
//! A [`Family`] is always canonical: members of each edge are a bitset, each
//! side is sorted lexicographically and free of duplicates. A family whose
//! side `B` is empty stands for the plain hypergraph `(V, A)`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::vertex_set::{Edge, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::A => "a",
            Side::B => "b",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Family {
    vertex_count: usize,
    side_a: Vec<Edge>,
    side_b: Vec<Edge>,
    labels: Option<Vec<String>>,
}

/// Duplicate edges dropped while canonicalizing, per side.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Collapsed {
    pub a: usize,
    pub b: usize,
}

impl Collapsed {
    pub fn any(&self) -> bool {
        self.a + self.b > 0
    }
}

fn canonical_side(mut edges: Vec<Edge>) -> (Vec<Edge>, usize) {
    let before = edges.len();
    edges.sort();
    edges.dedup();
    let dropped = before - edges.len();
    (edges, dropped)
}

fn check_range(edges: &[Edge], vertex_count: usize) -> Result<()> {
    for e in edges {
        if let Some(v) = e.last().filter(|&v| v >= vertex_count) {
            return Err(Error::VertexOutOfRange { vertex: v, vertex_count });
        }
    }
    Ok(())
}

impl Family {
    /// Builds the canonical family from raw vertex lists.
    pub fn new<A, B, EA, EB>(vertex_count: usize, a: A, b: B) -> Result<Self>
    where
        A: IntoIterator<Item = EA>,
        B: IntoIterator<Item = EB>,
        EA: IntoIterator<Item = usize>,
        EB: IntoIterator<Item = usize>,
    {
        let a = a.into_iter().map(|e| e.into_iter().collect()).collect();
        let b = b.into_iter().map(|e| e.into_iter().collect()).collect();
        Self::from_edges(vertex_count, a, b)
    }

    pub fn from_edges(vertex_count: usize, a: Vec<Edge>, b: Vec<Edge>) -> Result<Self> {
        Self::from_edges_reporting(vertex_count, a, b).map(|(f, _)| f)
    }

    /// Like [`Family::from_edges`], also reporting how many duplicates were
    /// collapsed on each side.
    pub fn from_edges_reporting(
        vertex_count: usize,
        a: Vec<Edge>,
        b: Vec<Edge>,
    ) -> Result<(Self, Collapsed)> {
        check_range(&a, vertex_count)?;
        check_range(&b, vertex_count)?;
        let (side_a, da) = canonical_side(a);
        let (side_b, db) = canonical_side(b);
        let family = Family { vertex_count, side_a, side_b, labels: None };
        Ok((family, Collapsed { a: da, b: db }))
    }

    /// The plain hypergraph `(V, E)`.
    pub fn plain(vertex_count: usize, edges: Vec<Edge>) -> Result<Self> {
        Self::from_edges(vertex_count, edges, Vec::new())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertex_count {
            return Err(Error::InvalidParameter(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vertex_count
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn side_a(&self) -> &[Edge] {
        &self.side_a
    }

    pub fn side_b(&self) -> &[Edge] {
        &self.side_b
    }

    pub fn side(&self, side: Side) -> &[Edge] {
        match side {
            Side::A => &self.side_a,
            Side::B => &self.side_b,
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn is_plain(&self) -> bool {
        self.side_b.is_empty()
    }

    /// Every edge with its side, `A` first. An edge present on both sides is
    /// yielded twice.
    pub fn tagged_edges(&self) -> impl Iterator<Item = (Side, usize, &Edge)> {
        let a = self.side_a.iter().enumerate().map(|(i, e)| (Side::A, i, e));
        let b = self.side_b.iter().enumerate().map(|(i, e)| (Side::B, i, e));
        a.chain(b)
    }

    /// `A ∪ B` as one sorted, duplicate-free edge list.
    pub fn union_edges(&self) -> Vec<Edge> {
        let mut all: Vec<Edge> = self.side_a.iter().chain(&self.side_b).cloned().collect();
        all.sort();
        all.dedup();
        all
    }

    pub fn edge_count(&self) -> usize {
        self.side_a.len() + self.side_b.len()
    }

    /// `n := max |e|` over `A ∪ B`; zero for an edgeless family.
    pub fn max_edge_size(&self) -> usize {
        self.side_a.iter().chain(&self.side_b).map(Edge::len).max().unwrap_or(0)
    }

    pub fn min_edge_size(&self) -> Option<usize> {
        self.side_a.iter().chain(&self.side_b).map(Edge::len).min()
    }

    /// Empty edges, which make any transversal infeasible.
    pub fn empty_edges(&self) -> Vec<(Side, usize)> {
        self.tagged_edges()
            .filter(|(_, _, e)| e.is_empty())
            .map(|(s, i, _)| (s, i))
            .collect()
    }

    pub fn has_empty_edge(&self) -> bool {
        self.side_a.iter().chain(&self.side_b).any(Edge::is_empty)
    }

    /// The family `(V, B, A)`.
    pub fn swapped(&self) -> Family {
        Family {
            vertex_count: self.vertex_count,
            side_a: self.side_b.clone(),
            side_b: self.side_a.clone(),
            labels: self.labels.clone(),
        }
    }

    /// The plain hypergraph `(V, A ∪ B)`.
    pub fn union_sides(&self) -> Family {
        Family {
            vertex_count: self.vertex_count,
            side_a: self.union_edges(),
            side_b: Vec::new(),
            labels: self.labels.clone(),
        }
    }

    /// `H_W`: deletes `w` from the universe and from every edge, then
    /// reindexes the surviving vertices densely in increasing order.
    ///
    /// Images that coincide are collapsed; edges that become empty stay and
    /// show up in [`Family::empty_edges`].
    pub fn restrict(&self, w: &VertexSet) -> Result<Restriction> {
        if let Some(v) = w.last().filter(|&v| v >= self.vertex_count) {
            return Err(Error::VertexOutOfRange { vertex: v, vertex_count: self.vertex_count });
        }
        let mut forward = vec![None; self.vertex_count];
        let mut index_map = Vec::with_capacity(self.vertex_count - w.len());
        for v in (0..self.vertex_count).filter(|&v| !w.contains(v)) {
            forward[v] = Some(index_map.len());
            index_map.push(v);
        }
        let image = |side: &[Edge]| side.iter().map(|e| e.remap(&forward)).collect();
        let mut family =
            Family::from_edges(index_map.len(), image(&self.side_a), image(&self.side_b))?;
        if let Some(labels) = &self.labels {
            family.labels = Some(index_map.iter().map(|&v| labels[v].clone()).collect());
        }
        Ok(Restriction { family, index_map })
    }
}

/// Result of [`Family::restrict`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Restriction {
    pub family: Family,
    /// `index_map[new] = old`.
    pub index_map: Vec<usize>,
}

impl Restriction {
    pub fn original_vertex(&self, v: usize) -> usize {
        self.index_map[v]
    }
}

/// `{e ∖ W : e ∈ edges}` in the original indexing, collapsed and sorted.
pub fn restrict_edges(edges: &[Edge], w: &VertexSet) -> Vec<Edge> {
    let mut out: Vec<Edge> = edges.iter().map(|e| e.difference(w)).collect();
    out.sort();
    out.dedup();
    out
}

/// Sorted, duplicate-free copy of an edge list.
pub fn canonical_edges(edges: &[Edge]) -> Vec<Edge> {
    canonical_side(edges.to_vec()).0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Family {
        Family::new(4, [vec![0, 1], vec![2, 3]], [vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]])
            .unwrap()
    }

    #[test]
    fn duplicates_collapse_within_side() {
        let (f, collapsed) = Family::from_edges_reporting(
            4,
            vec![[0, 1].into(), [1, 0].into()],
            vec![[2, 3].into()],
        )
        .unwrap();
        assert_eq!(f.side_a(), &[VertexSet::from([0, 1])]);
        assert_eq!(f.side_b(), &[VertexSet::from([2, 3])]);
        assert_eq!(collapsed, Collapsed { a: 1, b: 0 });
    }

    #[test]
    fn empty_family() {
        let f = Family::new(0, Vec::<Vec<usize>>::new(), Vec::<Vec<usize>>::new()).unwrap();
        assert_eq!(f.vertex_count(), 0);
        assert_eq!(f.edge_count(), 0);
        assert!(f.is_plain());
        assert_eq!(f.max_edge_size(), 0);
    }

    #[test]
    fn out_of_range_rejected() {
        let err = Family::new(3, [vec![0, 3]], Vec::<Vec<usize>>::new()).unwrap_err();
        assert!(matches!(err, Error::VertexOutOfRange { vertex: 3, vertex_count: 3 }));
        assert!(k4().restrict(&VertexSet::from([4])).is_err());
    }

    #[test]
    fn k4_has_six_edges_in_union() {
        let f = k4();
        assert_eq!(f.edge_count(), 6);
        let u = f.union_sides();
        assert!(u.is_plain());
        assert_eq!(u.side_a().len(), 6);
    }

    #[test]
    fn union_of_equal_sides_is_idempotent() {
        let e = vec![vec![0, 1, 2], vec![2, 3, 4]];
        let f = Family::new(5, e.clone(), e).unwrap();
        assert_eq!(f.union_sides().side_a().len(), 2);
    }

    #[test]
    fn restrict_single_edge() {
        let f = Family::plain(3, vec![[0, 1, 2].into()]).unwrap();
        let r = f.restrict(&VertexSet::from([0])).unwrap();
        assert_eq!(r.family.vertex_count(), 2);
        assert_eq!(r.family.side_a(), &[VertexSet::from([0, 1])]);
        assert_eq!(r.index_map, vec![1, 2]);
    }

    #[test]
    fn restrict_by_empty_set_is_identity() {
        let f = k4();
        let r = f.restrict(&VertexSet::new()).unwrap();
        assert_eq!(r.family, f);
        assert_eq!(r.index_map, vec![0, 1, 2, 3]);
    }

    #[test]
    fn restrict_keeps_and_flags_empty_edges() {
        let f = Family::new(3, [vec![0], vec![1, 2]], [vec![0, 1]]).unwrap();
        let r = f.restrict(&VertexSet::from([0])).unwrap();
        assert_eq!(r.family.empty_edges(), vec![(Side::A, 0)]);
        assert!(r.family.has_empty_edge());
    }

    #[test]
    fn restrict_preserves_labels() {
        let f = Family::plain(3, vec![[0, 2].into()])
            .unwrap()
            .with_labels(vec!["x".into(), "y".into(), "z".into()])
            .unwrap();
        let r = f.restrict(&VertexSet::from([1])).unwrap();
        assert_eq!(r.family.labels().unwrap(), &["x".to_string(), "z".to_string()]);
    }

    #[test]
    fn same_edge_may_sit_on_both_sides() {
        let f = Family::new(3, [vec![0, 1]], [vec![0, 1], vec![1, 2]]).unwrap();
        assert_eq!(f.edge_count(), 3);
        assert_eq!(f.union_edges().len(), 2);
    }
}
