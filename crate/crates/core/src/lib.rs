//! Verification toolkit for distance-spectral conditions on spanning
//! k-trees: graph construction, distance spectra, equitable quotients,
//! extremal split-join families, exact spanning k-tree decisions and the
//! verification campaigns built on top of them.

pub mod error;
pub mod extremal;
pub mod graph;
pub mod harness;
pub mod io;
pub mod ktree;
pub mod poly;
pub mod quotient;
pub mod spectra;

pub use error::{Error, Result};
pub use graph::{canonical_code, CanonicalCode, Graph, VertexSet};
