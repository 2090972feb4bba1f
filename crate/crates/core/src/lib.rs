//! Vertex-minor toolkit: graphs with local complementation and pivoting,
//! exact linear rank-width, the delta-composition family of excluded
//! vertex-minors, and split decompositions of marked graphs.

pub mod bits;
pub mod corpus;
pub mod delta;
pub mod error;
pub mod graph;
pub mod io;
pub mod iso;
pub mod rank;
pub mod report;
pub mod split;
pub mod vm;

pub use bits::VSet;
pub use error::{Error, Result};
pub use graph::{Graph, RootedGraph};
pub use iso::{automorphism_orbits, canonical_form, isomorphic, rooted_isomorphic, CanonicalForm};
pub use rank::{cutrank, layout_width, linear_rankwidth_exact, lrw_at_most, Layout};
pub use report::{Check, Report};
pub use vm::{delete, local_complement, pivot, VertexMinorStep};
pub use split::{canonical_decomposition, find_split, BagKind, MarkedGraph, Split};
