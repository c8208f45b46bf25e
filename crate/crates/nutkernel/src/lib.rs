//! Exact classification, construction and enumeration of nut digraphs.
//!
//! A digraph is a *dextro-nut* if the kernel of its adjacency matrix is
//! one-dimensional and spanned by a vector with no zero entry, a
//! *laevo-nut* if the same holds for the cokernel, a *bi-nut* if both hold,
//! an *ambi-nut* if moreover kernel and cokernel coincide, and an
//! *inter-nut* if their intersection is one-dimensional and spanned by a
//! full vector. All linear algebra is exact.

pub mod constructions;
pub mod digraph;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod fastpath;
pub mod io;
pub mod linalg;
pub mod spectral;
pub mod tables;

pub use digraph::{Digraph, UndirectedGraph, VertexId};
pub use error::{Error, Result};
