//! Deterministic constructions of the example families.
//!
//! Every generator returns a canonical [`Family`]; equal parameters give
//! identical families.

use crate::error::{Error, Result};
use crate::exact::Solver;
use crate::family::Family;
use crate::predicates::uniformity;
use crate::vertex_set::{Edge, VertexSet};

/// Refuse constructions with more edges than this.
pub const MAX_GENERATED_EDGES: usize = 1_000_000;

/// Default cap on simple paths explored by [`triangulation_percolation`].
pub const DEFAULT_PATH_CAP: usize = 1_000_000;

/// The seven lines of the Fano plane on points `0..7`.
pub const FANO_LINES: [[usize; 3]; 7] =
    [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]];

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

/// Edge set of a plain hypergraph; for a two-sided family, `A ∪ B`.
fn base_edges(h0: &Family) -> Vec<Edge> {
    if h0.is_plain() {
        h0.side_a().to_vec()
    } else {
        h0.union_edges()
    }
}

pub fn fano() -> Family {
    Family::plain(7, FANO_LINES.iter().map(|l| VertexSet::from(*l)).collect())
        .expect("Fano lines are in range")
}

/// The cycle `C_len` as a 2-uniform hypergraph; `cycle(3)` is `K₃`.
pub fn cycle(len: usize) -> Result<Family> {
    if len < 3 {
        return Err(invalid(format!("a cycle needs at least 3 vertices, got {len}")));
    }
    let edges = (0..len).map(|i| VertexSet::from([i, (i + 1) % len])).collect();
    Family::plain(len, edges)
}

/// `copies` vertex-disjoint copies of a plain hypergraph; copy `i` occupies
/// vertices `i·|V| .. (i+1)·|V|`.
pub fn disjoint_copies(h: &Family, copies: usize) -> Result<Family> {
    if copies < 1 {
        return Err(invalid("need at least one copy"));
    }
    let n = h.vertex_count();
    let base = base_edges(h);
    let edges = (0..copies)
        .flat_map(|i| base.iter().map(move |e| e.shifted(i * n)))
        .collect();
    Family::plain(n * copies, edges)
}

/// `A := E₀`, `B := {V₀}`.
pub fn wrap(h0: &Family) -> Result<Family> {
    let edges = base_edges(h0);
    if edges.is_empty() {
        return Err(invalid("base hypergraph has no edges"));
    }
    Family::from_edges(h0.vertex_count(), edges, vec![VertexSet::full(h0.vertex_count())])
}

/// Rows of an `n × n` grid against all `nⁿ` transversals (one vertex per
/// row). Vertex `v_ij` (0-based) has index `i·n + j`.
pub fn grid_transversal(n: usize) -> Result<Family> {
    if n < 2 {
        return Err(invalid(format!("grid-transversal needs n ≥ 2, got {n}")));
    }
    let count = (n as u32)
        .checked_pow(n as u32)
        .map(|c| c as usize)
        .filter(|&c| c <= MAX_GENERATED_EDGES)
        .ok_or_else(|| invalid(format!("n^n transversals for n = {n} exceed the edge cap")))?;
    let rows = (0..n).map(|i| (i * n..(i + 1) * n).collect()).collect();
    let mut transversals = Vec::with_capacity(count);
    let mut choice = vec![0usize; n];
    loop {
        transversals.push(choice.iter().enumerate().map(|(i, &j)| i * n + j).collect());
        // Odometer over (j₀, …, j_{n−1}), last coordinate fastest.
        let mut i = n;
        loop {
            if i == 0 {
                return Family::from_edges(n * n, rows, transversals);
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < n {
                break;
            }
            choice[i] = 0;
        }
    }
}

/// All `size`-subsets of `0..n` in lexicographic order.
fn subsets(n: usize, size: usize) -> Vec<Edge> {
    let mut out = Vec::new();
    let mut pick: Vec<usize> = (0..size).collect();
    if size > n {
        return out;
    }
    loop {
        out.push(pick.iter().collect());
        let Some(i) = (0..size).rev().find(|&i| pick[i] < n - size + i) else {
            return out;
        };
        pick[i] += 1;
        for j in i + 1..size {
            pick[j] = pick[j - 1] + 1;
        }
    }
}

/// The padded family on `v₁..v_{2n−1}` (indices `0..2n−1`) and `u₁..u_m`
/// (indices `2n−1..2n−1+m`).
///
/// `A₂`, `B₂` hold `{v₁..v_{n−1}, u_i}` and `{v₁, v_n..v_{2n−3}, u_i}` for
/// every `i`. Every `n`-subset of the `v`'s goes to `A₁` if it meets the
/// `v`-part of the `B₂` edges and to `B₁` if it meets that of the `A₂` edges,
/// which is what makes each padded edge meet every opposite edge.
pub fn padded(n: usize, m: usize) -> Result<Family> {
    if n < 3 {
        return Err(invalid(format!("padded family needs n ≥ 3, got {n}")));
    }
    let core = 2 * n - 1;
    let a_key: VertexSet = (0..n - 1).collect();
    let b_key: VertexSet = std::iter::once(0).chain(n - 1..2 * n - 3).collect();
    let all = subsets(core, n);
    let mut a: Vec<Edge> = all.iter().filter(|e| e.intersects(&b_key)).cloned().collect();
    let mut b: Vec<Edge> = all.iter().filter(|e| e.intersects(&a_key)).cloned().collect();
    for i in 0..m {
        let u = core + i;
        let mut ea = a_key.clone();
        ea.insert(u);
        a.push(ea);
        let mut eb = b_key.clone();
        eb.insert(u);
        b.push(eb);
    }
    Family::from_edges(core + m, a, b)
}

fn is_simple(edges: &[Edge]) -> bool {
    edges
        .iter()
        .enumerate()
        .all(|(i, e)| edges[i + 1..].iter().all(|f| e.intersection_len(f) <= 1))
}

/// `B := {{u₁..u_n}}`, `A := {e ∪ {u_i}}` over a simple `(n−1)`-uniform
/// base hypergraph with chromatic number at least 3. The `u`'s are appended
/// after the base vertices.
pub fn simple_based(h0: &Family, n: usize, solver: &Solver) -> Result<Family> {
    let base = base_edges(h0);
    if n < 3 {
        return Err(invalid(format!("simple-based family needs n ≥ 3, got {n}")));
    }
    let plain = Family::plain(h0.vertex_count(), base.clone())?;
    if uniformity(&plain) != Some(n - 1) {
        return Err(Error::PreconditionViolated(format!("base is not {}-uniform", n - 1)));
    }
    if !is_simple(&base) {
        return Err(Error::PreconditionViolated("base is not simple".into()));
    }
    if solver.k_colorable(&plain, 2)?.is_some() {
        return Err(Error::PreconditionViolated("base is 2-colorable".into()));
    }
    let v0 = h0.vertex_count();
    let us: VertexSet = (v0..v0 + n).collect();
    let a = base
        .iter()
        .flat_map(|e| (v0..v0 + n).map(move |u| {
            let mut e = e.clone();
            e.insert(u);
            e
        }))
        .collect();
    Family::from_edges(v0 + n, a, vec![us])
}

/// Level-`k` iterated Fano plane: level 1 is the Fano plane; level `k+1`
/// puts a disjoint level-`k` copy on each Fano point (copy `i` on point `i`)
/// and takes `e₁ ∪ e₂ ∪ e₃` for every line and every choice of one edge from
/// each of the line's three copies. `3ᵏ`-uniform on `7ᵏ` vertices.
pub fn iterated_fano(k: usize) -> Result<Family> {
    if k < 1 {
        return Err(invalid("iterated Fano needs k ≥ 1"));
    }
    let mut vertices = 7usize;
    let mut edges: Vec<Edge> = fano().side_a().to_vec();
    for _ in 1..k {
        let count = edges.len();
        let next_count = count
            .checked_pow(3)
            .and_then(|c| c.checked_mul(7))
            .filter(|&c| c <= MAX_GENERATED_EDGES)
            .ok_or_else(|| invalid(format!("iterated Fano level {k} exceeds the edge cap")))?;
        let copy = |point: usize, e: &Edge| e.shifted(point * vertices);
        let mut next = Vec::with_capacity(next_count);
        for [p, q, r] in FANO_LINES {
            for e1 in &edges {
                let e1 = copy(p, e1);
                for e2 in &edges {
                    let e12 = e1.union(&copy(q, e2));
                    for e3 in &edges {
                        next.push(e12.union(&copy(r, e3)));
                    }
                }
            }
        }
        edges = next;
        vertices *= 7;
    }
    Family::plain(vertices, edges)
}

/// The four boundary sides of a `k × k` grid, clockwise from the top. Each
/// side is a full row or column, so consecutive sides share a corner.
pub fn grid_sides(k: usize) -> [Vec<usize>; 4] {
    let top = (0..k).collect();
    let right = (0..k).map(|r| r * k + k - 1).collect();
    let bottom = (0..k).rev().map(|c| (k - 1) * k + c).collect();
    let left = (0..k).rev().map(|r| r * k).collect();
    [top, right, bottom, left]
}

/// Adjacency of the `k × k` grid triangulated by the `(r, c)–(r+1, c+1)`
/// diagonals; vertex `(r, c)` has index `r·k + c`.
pub fn grid_triangulation(k: usize) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); k * k];
    let mut link = |a: usize, b: usize| {
        adj[a].push(b);
        adj[b].push(a);
    };
    for r in 0..k {
        for c in 0..k {
            let v = r * k + c;
            if c + 1 < k {
                link(v, v + 1);
            }
            if r + 1 < k {
                link(v, v + k);
            }
            if r + 1 < k && c + 1 < k {
                link(v, v + k + 1);
            }
        }
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    adj
}

struct PathSearch<'a> {
    adj: &'a [Vec<usize>],
    start: VertexSet,
    target: VertexSet,
    cap: usize,
    visited: usize,
    found: Vec<Edge>,
}

impl PathSearch<'_> {
    fn extend(&mut self, v: usize, on_path: &mut VertexSet) -> Result<()> {
        self.visited += 1;
        if self.visited > self.cap {
            return Err(invalid(format!("path enumeration exceeded the cap of {}", self.cap)));
        }
        if self.target.contains(v) {
            // Continuing past the first target vertex only adds supersets.
            self.found.push(on_path.clone());
            return Ok(());
        }
        for &w in &self.adj[v] {
            // Re-entering the start side also only yields supersets.
            if on_path.contains(w) || self.start.contains(w) {
                continue;
            }
            on_path.insert(w);
            self.extend(w, on_path)?;
            on_path.remove(w);
        }
        Ok(())
    }
}

/// Inclusion-minimal vertex sets of simple paths from `start` to `target`.
fn minimal_paths(adj: &[Vec<usize>], start: &[usize], target: &[usize], cap: usize) -> Result<Vec<Edge>> {
    let mut search = PathSearch {
        adj,
        start: start.iter().collect(),
        target: target.iter().collect(),
        cap,
        visited: 0,
        found: Vec::new(),
    };
    for &s in start {
        let mut on_path = VertexSet::singleton(s);
        search.extend(s, &mut on_path)?;
    }
    Ok(inclusion_minimal(search.found))
}

/// Members of `sets` with no proper subset in `sets`, sorted and deduplicated.
pub fn inclusion_minimal(mut sets: Vec<Edge>) -> Vec<Edge> {
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<Edge> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(&s)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// Percolation family of the triangulated `grid_k × grid_k` grid: `A` holds
/// the minimal top-to-bottom paths, `B` the minimal right-to-left paths.
pub fn triangulation_percolation(grid_k: usize) -> Result<Family> {
    triangulation_percolation_capped(grid_k, DEFAULT_PATH_CAP)
}

pub fn triangulation_percolation_capped(grid_k: usize, path_cap: usize) -> Result<Family> {
    if grid_k < 2 {
        return Err(invalid(format!("triangulation needs grid ≥ 2, got {grid_k}")));
    }
    let adj = grid_triangulation(grid_k);
    let [top, right, bottom, left] = grid_sides(grid_k);
    let a = minimal_paths(&adj, &top, &bottom, path_cap)?;
    let b = minimal_paths(&adj, &right, &left, path_cap)?;
    Family::from_edges(grid_k * grid_k, a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fano_lines_meet_once() {
        let f = fano();
        for (i, e) in f.side_a().iter().enumerate() {
            for g in &f.side_a()[i + 1..] {
                assert_eq!(e.intersection_len(g), 1);
            }
        }
    }

    #[test]
    fn subsets_enumerates_binomial() {
        assert_eq!(subsets(5, 3).len(), 10);
        assert_eq!(subsets(4, 0), vec![VertexSet::new()]);
        assert!(subsets(2, 3).is_empty());
        let s = subsets(4, 2);
        assert!(s.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn wrap_single_edge() {
        let h0 = Family::plain(2, vec![[0, 1].into()]).unwrap();
        let f = wrap(&h0).unwrap();
        assert_eq!(f.side_a(), &[VertexSet::from([0, 1])]);
        assert_eq!(f.side_b(), &[VertexSet::from([0, 1])]);
        assert!(wrap(&Family::plain(2, vec![]).unwrap()).is_err());
    }

    #[test]
    fn grid_transversal_counts() {
        assert!(grid_transversal(1).is_err());
        let f = grid_transversal(2).unwrap();
        assert_eq!(
            f,
            Family::new(4, [vec![0, 1], vec![2, 3]], [vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]])
                .unwrap()
        );
        let f = grid_transversal(4).unwrap();
        assert_eq!((f.side_a().len(), f.side_b().len()), (4, 256));
    }

    #[test]
    fn padded_sizes() {
        assert!(padded(2, 0).is_err());
        let f = padded(3, 0).unwrap();
        assert_eq!(f.union_edges().len(), 10);
        assert_eq!(f.vertex_count(), 5);
        let g = padded(3, 5).unwrap();
        assert_eq!(g.union_edges().len(), 20);
        assert_eq!(g.vertex_count(), 10);
    }

    #[test]
    fn simple_based_rejects_bad_bases() {
        let solver = Solver::default();
        // C₄ is 2-colorable.
        assert!(matches!(
            simple_based(&cycle(4).unwrap(), 3, &solver),
            Err(Error::PreconditionViolated(_))
        ));
        // Fano is 3-uniform, not 2-uniform.
        assert!(simple_based(&fano(), 3, &solver).is_err());
        // Two triples sharing two points are not simple.
        let thick = Family::plain(4, vec![[0, 1, 2].into(), [0, 1, 3].into()]).unwrap();
        assert!(simple_based(&thick, 4, &solver).is_err());
    }

    #[test]
    fn simple_based_on_fano() {
        let f = simple_based(&fano(), 4, &Solver::default()).unwrap();
        assert_eq!((f.side_a().len(), f.side_b().len(), f.vertex_count()), (28, 1, 11));
        assert_eq!(uniformity(&f), Some(4));
    }

    #[test]
    fn copies() {
        assert!(disjoint_copies(&fano(), 0).is_err());
        assert_eq!(disjoint_copies(&fano(), 1).unwrap(), fano());
        let two = disjoint_copies(&fano(), 2).unwrap();
        assert_eq!((two.vertex_count(), two.side_a().len()), (14, 14));
    }

    #[test]
    fn iterated_fano_levels() {
        assert!(iterated_fano(0).is_err());
        assert_eq!(iterated_fano(1).unwrap(), fano());
        assert!(iterated_fano(3).is_err());
    }

    #[test]
    fn triangulation_two_by_two() {
        // Paths top {0,1} → bottom {2,3} and right {1,3} → left {0,2} on the
        // square with diagonal 0–3.
        let f = triangulation_percolation(2).unwrap();
        let sets = |raw: &[[usize; 2]]| raw.iter().map(|e| VertexSet::from(*e)).collect::<Vec<_>>();
        assert_eq!(f.side_a(), sets(&[[0, 2], [0, 3], [1, 3]]).as_slice());
        assert_eq!(f.side_b(), sets(&[[0, 1], [0, 3], [2, 3]]).as_slice());
    }

    #[test]
    fn minimal_filter() {
        let sets = vec![
            VertexSet::from([0, 1, 2]),
            VertexSet::from([0, 1]),
            VertexSet::from([3]),
            VertexSet::from([0, 1]),
            VertexSet::from([1, 3]),
        ];
        assert_eq!(inclusion_minimal(sets), vec![VertexSet::from([0, 1]), VertexSet::from([3])]);
    }

    #[test]
    fn path_cap_is_enforced() {
        assert!(triangulation_percolation_capped(3, 5).is_err());
    }
}
