//! Pfaffian orientations of bipartite graphs: decision procedure,
//! certificate construction, and the classical equivalent problems
//! (Polya's permanent-as-determinant matrices, even directed circuits,
//! sign-nonsingular matrices).

pub mod apps;
pub mod decompose;
pub mod error;
pub mod graph;
pub mod io;
pub mod matching;
pub mod oracle;
pub mod orient;
pub mod planar;

pub use error::{Error, Result};
