//! Enhanced power graphs of finite groups and exact (total) domination.
//!
//! Groups are dense multiplication tables ([`group::FiniteGroup`]). From a
//! group we build its enhanced power graph and the proper variant with the
//! dominating vertices removed ([`graph`]), solve minimum dominating and
//! total dominating set exactly ([`solver`]), evaluate the closed-form
//! values known for nilpotent groups ([`formulas`]) and compare the two in a
//! verification pipeline ([`harness`]).

pub mod arith;
pub mod bitset;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod harness;
pub mod group;
pub mod solver;

pub use bitset::VertexSet;
pub use error::{Error, Result};
