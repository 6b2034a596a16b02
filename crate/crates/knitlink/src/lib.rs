//! Links in the thickened torus arising from weft-knitting motifs.
//!
//! The crate models two-periodic knitting motifs as links in T²×I, compiles
//! a small pattern language into planar diagrams by annulus-sum composition,
//! Dehn-fills them into links in S³, and computes exact link invariants
//! (multivariable Alexander polynomial, Jones polynomial, linking data,
//! link determinant) together with a bounded Reidemeister-move simplifier.

pub mod diagram;
pub mod error;
pub mod freegroup;
pub mod geometry;
pub mod laurent;
pub mod moves;
pub mod web;

pub use error::{Error, Result};
