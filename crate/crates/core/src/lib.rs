//! Signless Laplacian spectral radius of graphs, the extremal graphs for
//! fixed size with prescribed girth or circumference, and exhaustive
//! small-case verification of those extremal results.
//!
//! ```
//! use spex_core::{constructions::g_extremal, spectral::q_radius};
//!
//! let g = g_extremal(6, 4).unwrap();
//! let q = q_radius(&g, 1e-12).unwrap().q;
//! assert!((q - (3.0 + 5f64.sqrt())).abs() < 1e-9);
//! ```

pub mod canon;
pub mod certificates;
pub mod constructions;
pub mod decimal;

pub mod enumeration;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod harness;

pub mod spectral;
pub mod structure;
pub mod transforms;

pub use canon::{are_isomorphic, canonical_form, canonical_graph6, CanonicalForm};
pub use enumeration::{Constraint, EnumConfig, EnumerationStats, Enumerator, Family, FamilySpec};
pub use error::{Error, Result};
pub use graph::{Graph, MAX_VERTICES};
pub use graph6::{parse_graph6, to_graph6};
pub use spectral::{q_radius, SolverConfig, SpectralResult};
