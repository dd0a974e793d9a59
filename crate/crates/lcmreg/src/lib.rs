//! Exact-arithmetic computation of lcm-lattices, order-complex homology,
//! multigraded Betti numbers and Castelnuovo-Mumford regularity of edge
//! ideals and their powers, with a theorem-level verification harness over
//! small graph families.

pub mod betti;
pub mod complex;
pub mod error;
pub mod field;
pub mod graph;
pub mod homology;
pub mod lattice;
pub mod linalg;
pub mod monomial;
pub mod report;
pub mod verify;

pub use error::{Budgets, Error, Result};
