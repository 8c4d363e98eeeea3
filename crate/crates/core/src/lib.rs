//! k-defect polynomials and k-defect numbers of small multigraphs.
//!
//! For a graph G and λ colors, φ_k(G; λ) counts the vertex colorings with
//! exactly k monochromatic ("bad") edges, and φ_k(G) is the least λ for
//! which such a coloring exists (0 if none does). The crate computes both
//! through four independent engines (see [`engine`]), evaluates closed
//! forms for standard families (see [`families`]) and replays known
//! results over exhaustive corpora (see [`verifier`]).

pub mod canon;
pub mod engine;
pub mod error;
pub mod families;
pub mod format;
pub mod graph;
pub mod poly;
pub mod verifier;

pub use canon::canonical_key;
pub use error::{Error, Result};
pub use graph::{Edge, EdgeMap, Graph};
pub use poly::Poly;
