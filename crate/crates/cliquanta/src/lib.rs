//! Exact clique enumeration and clique-weight analytics on graphs with
//! bounded maximum degree, plus a verification harness that certifies the
//! counting identities, gadget lemmas, and extremal theorems (Cutler and
//! Radcliffe; Kahn and Zhao) at desk scale using exact arithmetic and
//! isomorph-free exhaustive search.

pub mod bitset;
pub mod bounds;
pub mod canon;
pub mod cliques;
pub mod decompose;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Edge, Graph};
