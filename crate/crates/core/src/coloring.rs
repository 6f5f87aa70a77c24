use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{Family, Side};

/// Which procedure produced a coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ColoringMethod {
    Exact,
    Proposition4,
    Theorem3,
    Exceptional,
}

impl fmt::Display for ColoringMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ColoringMethod::Exact => "exact",
            ColoringMethod::Proposition4 => "proposition4",
            ColoringMethod::Theorem3 => "theorem3",
            ColoringMethod::Exceptional => "exceptional",
        })
    }
}

/// A total vertex coloring with colors in `0..color_count`.
///
/// `color_count` is either the number of colors actually used or the bound
/// the producing procedure promises; [`Coloring::distinct_colors`] gives the
/// former.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coloring {
    colors: Vec<usize>,
    color_count: usize,
    method: ColoringMethod,
}

impl Coloring {
    pub fn new(colors: Vec<usize>, color_count: usize, method: ColoringMethod) -> Result<Self> {
        if let Some(&c) = colors.iter().find(|&&c| c >= color_count) {
            return Err(Error::InvalidParameter(format!(
                "color {c} outside 0..{color_count}"
            )));
        }
        Ok(Coloring { colors, color_count, method })
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color_of(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn color_count(&self) -> usize {
        self.color_count
    }

    pub fn method(&self) -> ColoringMethod {
        self.method
    }

    pub fn distinct_colors(&self) -> usize {
        let mut seen = vec![false; self.color_count];
        for &c in &self.colors {
            seen[c] = true;
        }
        seen.into_iter().filter(|&s| s).count()
    }

    /// Sizes of the color classes, indexed by color.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.color_count];
        for &c in &self.colors {
            sizes[c] += 1;
        }
        sizes
    }

    /// First monochromatic edge of `family`, if any.
    pub fn monochromatic_edge(&self, family: &Family) -> Option<(Side, usize)> {
        family
            .tagged_edges()
            .find(|(_, _, e)| {
                let mut it = e.iter().map(|v| self.colors[v]);
                match it.next() {
                    Some(first) => it.all(|c| c == first),
                    None => true,
                }
            })
            .map(|(s, i, _)| (s, i))
    }

    pub fn is_proper(&self, family: &Family) -> bool {
        self.colors.len() == family.vertex_count() && self.monochromatic_edge(family).is_none()
    }

    /// Errors with [`Error::VerificationFailed`] unless the coloring is total
    /// and proper for `family`.
    pub fn verify(&self, family: &Family) -> Result<()> {
        if self.colors.len() != family.vertex_count() {
            return Err(Error::VerificationFailed(format!(
                "{} coloring covers {} of {} vertices",
                self.method,
                self.colors.len(),
                family.vertex_count()
            )));
        }
        match self.monochromatic_edge(family) {
            None => Ok(()),
            Some((side, i)) => Err(Error::VerificationFailed(format!(
                "{} coloring leaves edge {} of side {side} monochromatic",
                self.method,
                family.side(side)[i]
            ))),
        }
    }
}
