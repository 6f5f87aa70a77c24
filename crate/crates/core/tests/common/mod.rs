//! Brute-force oracles over plain vectors, independent of the library's
//! bitsets and search code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use crossfam::{Edge, Family};

pub fn plain(edges: &[Edge]) -> Vec<Vec<usize>> {
    edges.iter().map(|e| e.to_vec()).collect()
}

pub fn sides(family: &Family) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    (plain(family.side_a()), plain(family.side_b()))
}

fn meets(e: &[usize], mask: u64) -> bool {
    e.iter().any(|&v| mask & (1 << v) != 0)
}

/// Minimum transversal size by scanning subsets in order of size; `None`
/// when some edge is empty.
pub fn tau(edges: &[Vec<usize>], vertices: usize) -> Option<usize> {
    assert!(vertices < 30);
    if edges.iter().any(Vec::is_empty) {
        return None;
    }
    (0..=vertices).find(|&size| {
        (0u64..1 << vertices)
            .filter(|m| m.count_ones() as usize == size)
            .any(|m| edges.iter().all(|e| meets(e, m)))
    })
}

/// Whether some assignment of `k` colors leaves no edge monochromatic.
pub fn colorable(edges: &[Vec<usize>], vertices: usize, k: usize) -> bool {
    let total = (k as u64).pow(vertices as u32);
    assert!(total <= 50_000_000, "oracle too large");
    let mut colors = vec![0usize; vertices];
    for code in 0..total {
        let mut c = code;
        for slot in colors.iter_mut() {
            *slot = (c % k as u64) as usize;
            c /= k as u64;
        }
        if edges.iter().all(|e| e.iter().any(|&v| colors[v] != colors[e[0]])) {
            return true;
        }
    }
    false
}

pub fn chi(edges: &[Vec<usize>], vertices: usize) -> usize {
    (1..=vertices).find(|&k| colorable(edges, vertices, k)).expect("colorable with n colors")
}

pub fn is_proper(edges: &[Vec<usize>], colors: &[usize]) -> bool {
    edges.iter().all(|e| e.iter().any(|&v| colors[v] != colors[e[0]]))
}

fn inter(a: &[usize], b: &[usize]) -> usize {
    a.iter().filter(|v| b.contains(v)).count()
}

pub fn cross_intersecting(a: &[Vec<usize>], b: &[Vec<usize>]) -> bool {
    a.iter().all(|x| b.iter().all(|y| inter(x, y) > 0))
}

pub fn intersecting(edges: &[Vec<usize>]) -> bool {
    cross_intersecting(edges, edges)
}

/// Every vertex `v` of every edge has an opposite edge meeting it only in `v`.
pub fn critical(a: &[Vec<usize>], b: &[Vec<usize>]) -> bool {
    let witnessed = |own: &[Vec<usize>], other: &[Vec<usize>]| {
        own.iter().all(|e| e.iter().all(|v| other.iter().any(|f| f.contains(v) && inter(e, f) == 1)))
    };
    !a.is_empty() && !b.is_empty() && cross_intersecting(a, b) && witnessed(a, b) && witnessed(b, a)
}

pub fn q_set(a: &[Vec<usize>], b: &[Vec<usize>]) -> BTreeSet<usize> {
    let distinct: BTreeSet<&Vec<usize>> = a.iter().chain(b).collect();
    let list: Vec<_> = distinct.into_iter().collect();
    let mut q = BTreeSet::new();
    for i in 0..list.len() {
        for j in i + 1..list.len() {
            q.insert(inter(list[i], list[j]));
        }
    }
    q
}

pub fn remove_core(edges: &[Vec<usize>], core: &[usize]) -> Vec<Vec<usize>> {
    edges.iter().map(|e| e.iter().copied().filter(|v| !core.contains(v)).collect()).collect()
}

pub fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
