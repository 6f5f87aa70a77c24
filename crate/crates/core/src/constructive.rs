//! Explicit colorings of cross-intersecting families.
//!
//! Each construction fixes its free choices lexicographically and re-checks
//! the result against every edge before returning it.

use serde::Serialize;

use crate::coloring::{Coloring, ColoringMethod};
use crate::error::{Error, Result};
use crate::exact::Solver;
use crate::family::Family;
use crate::predicates::{exceptional_structure, is_cross_intersecting, is_sperner};
use crate::vertex_set::Edge;

fn require_cross_intersecting(family: &Family) -> Result<()> {
    if is_cross_intersecting(family) {
        Ok(())
    } else {
        Err(Error::PreconditionViolated("family is not cross-intersecting".into()))
    }
}

fn require_sperner(family: &Family) -> Result<()> {
    if is_sperner(family) {
        Ok(())
    } else {
        Err(Error::PreconditionViolated("A ∪ B is not a Sperner system".into()))
    }
}

/// First edge of `side` with no proper sub-edge anywhere in `A ∪ B`.
fn first_minimal<'a>(side: &'a [Edge], all: &[Edge]) -> Option<&'a Edge> {
    side.iter().find(|e| !all.iter().any(|f| f.is_strict_subset(e)))
}

/// Four-coloring from a pair of inclusion-minimal edges `a ∈ A`, `b ∈ B`:
/// `a ∩ b ↦ 0`, `a ∖ b ↦ 1`, `b ∖ a ↦ 2`, everything else `↦ 3`.
///
/// When the chosen `a` and `b` are the same edge the construction leaves it
/// monochromatic and this returns [`Error::VerificationFailed`].
pub fn proposition_four_coloring(family: &Family) -> Result<Coloring> {
    require_cross_intersecting(family)?;
    let all = family.union_edges();
    let (Some(a), Some(b)) = (
        first_minimal(family.side_a(), &all),
        first_minimal(family.side_b(), &all),
    ) else {
        return Err(Error::PreconditionViolated(
            "no inclusion-minimal edge on one of the sides".into(),
        ));
    };
    let colors = (0..family.vertex_count())
        .map(|v| match (a.contains(v), b.contains(v)) {
            (true, true) => 0,
            (true, false) => 1,
            (false, true) => 2,
            (false, false) => 3,
        })
        .collect();
    let coloring = Coloring::new(colors, 4, ColoringMethod::Proposition4)?;
    coloring.verify(family)?;
    Ok(coloring)
}

/// Three-coloring for Sperner cross-intersecting families without edges of
/// size at most two.
///
/// Takes the pair `(a, b)` of distinct edges minimizing `|a ∪ b|` (first in
/// index order on ties), the lowest vertices `v_a ∈ a ∖ b` and `v_b ∈ b ∖ a`, and colors
/// `{v_a, v_b} ↦ 0`, `(a ∪ b) ∖ {v_a, v_b} ↦ 1`, the rest `↦ 2`.
pub fn theorem_three_coloring(family: &Family) -> Result<Coloring> {
    require_cross_intersecting(family)?;
    require_sperner(family)?;
    if let Some(small) = family.min_edge_size().filter(|&s| s < 3) {
        return Err(Error::PreconditionViolated(format!(
            "an edge of size {small} is present; all edges must have at least 3 vertices"
        )));
    }
    let (a, b) = family
        .side_a()
        .iter()
        .flat_map(|a| family.side_b().iter().map(move |b| (a, b)))
        .filter(|(a, b)| a != b)
        .min_by_key(|(a, b)| a.len() + b.len() - a.intersection_len(b))
        .ok_or_else(|| {
            Error::PreconditionViolated("no pair of distinct edges a ∈ A, b ∈ B".into())
        })?;
    let (Some(va), Some(vb)) = (a.difference(b).first(), b.difference(a).first()) else {
        return Err(Error::PreconditionViolated(format!(
            "minimizing pair {a}, {b} is nested, so one of a∖b, b∖a is empty"
        )));
    };
    let span = a.union(b);
    let colors = (0..family.vertex_count())
        .map(|v| {
            if v == va || v == vb {
                0
            } else if span.contains(v) {
                1
            } else {
                2
            }
        })
        .collect();
    let coloring = Coloring::new(colors, 3, ColoringMethod::Theorem3)?;
    coloring.verify(family)?;
    Ok(coloring)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    ChiLe3,
    ExceptionalChi4,
}

/// Colors a Sperner cross-intersecting family: an optimal four-coloring for
/// the exceptional structure, the explicit three-coloring when every edge has
/// at least three vertices (unless `A = B` is a single edge), and an exact
/// three-coloring search otherwise.
///
/// A failed three-coloring search on a non-exceptional input is reported as
/// [`Error::InternalContradiction`].
pub fn color_cross_family(family: &Family, solver: &Solver) -> Result<(Coloring, Verdict)> {
    require_cross_intersecting(family)?;
    require_sperner(family)?;
    if let Some(small) = family.min_edge_size().filter(|&s| s < 2) {
        return Err(Error::PreconditionViolated(format!("an edge of size {small} is present")));
    }
    if let Some(ex) = exceptional_structure(family) {
        let (p, q) = &ex.parts;
        let (p0, q0) = (p.first().expect("|P| ≥ 2"), q.first().expect("|Q| ≥ 2"));
        let colors = (0..family.vertex_count())
            .map(|v| {
                if p.contains(v) {
                    usize::from(v != p0)
                } else {
                    2 + usize::from(v != q0)
                }
            })
            .collect();
        let coloring = Coloring::new(colors, 4, ColoringMethod::Exceptional)?;
        coloring.verify(family)?;
        return Ok((coloring, Verdict::ExceptionalChi4));
    }
    if family.min_edge_size().is_some_and(|s| s >= 3) {
        match theorem_three_coloring(family) {
            Ok(coloring) => return Ok((coloring, Verdict::ChiLe3)),
            // A = B = {e}: no distinct pair to build from.
            Err(Error::PreconditionViolated(_)) => {}
            Err(e) => return Err(e),
        }
    }
    match solver.k_colorable(family, 3)? {
        Some(coloring) => {
            coloring.verify(family)?;
            Ok((coloring, Verdict::ChiLe3))
        }
        None => Err(Error::InternalContradiction(
            "non-exceptional Sperner cross-intersecting family is not 3-colorable".into(),
        )),
    }
}

/// Coloring strategies offered on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Exact,
    Prop4,
    Thm3,
    Auto,
}

pub fn color_with(family: &Family, strategy: Strategy, solver: &Solver) -> Result<Coloring> {
    match strategy {
        Strategy::Exact => Ok(solver.chi(family)?.coloring),
        Strategy::Prop4 => proposition_four_coloring(family),
        Strategy::Thm3 => theorem_three_coloring(family),
        Strategy::Auto => color_cross_family(family, solver).map(|(c, _)| c),
    }
}
