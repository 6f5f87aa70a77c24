//! Intersecting and cross-intersecting set families.
//!
//! A family `H = (V, A, B)` is a vertex universe with two edge lists; it is
//! cross-intersecting when every edge of `A` meets every edge of `B`. This
//! crate provides
//!
//! - [`Family`] and [`VertexSet`], the canonical bitset representation;
//! - structural [`predicates`] (Sperner, critical, `Q(H)`, the exceptional
//!   `χ = 4` structure);
//! - certified [`exact`] solvers for `χ`, k-colorability and `τ`;
//! - the explicit [`constructive`] colorings and the three-way dispatcher;
//! - [`flowers`]: flower search and the `max(|A|, |B|) ≤ nⁿ` check for
//!   critical families;
//! - [`generators`] for every example family, and [`random`] families for
//!   property suites;
//! - the canonical text format in [`io`] and seeded suites in [`verify`].
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod coloring;
pub mod constructive;
pub mod error;
pub mod exact;
pub mod family;
pub mod flowers;
pub mod generators;
pub mod io;
pub mod predicates;
pub mod random;
pub mod verify;
mod vertex_set;

pub use coloring::{Coloring, ColoringMethod};
pub use error::{Error, Result};
pub use exact::{ChiCertificate, Solver, TauCertificate, TauValue};
pub use family::{Family, Restriction, Side};
pub use flowers::FlowerCertificate;
pub use predicates::AnalysisReport;
pub use vertex_set::{Edge, VertexSet};
