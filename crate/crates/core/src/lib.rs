//! Depth and Castelnuovo–Mumford regularity of tableau ideals.
//!
//! A tableau is a Young diagram with a positive integer weight in every box;
//! its ideal is generated by `(x_i y_j)^{w(i,j)}`. The [`formulas`] module
//! evaluates depth and regularity combinatorially, and [`oracle`] recomputes
//! them from graded Betti tables of arbitrary monomial ideals so the two can
//! be checked against each other.

pub mod cli;
pub mod error;
pub mod formulas;
pub mod ideal;
pub mod oracle;
pub mod tableau;

pub use error::{Error, Result};
pub use formulas::{
    depth, extremes_via_collections, ferrers_invariants, recursive_invariants, regularity,
    FerrersInvariants, InvariantReport, Method,
};
pub use ideal::{EdgeWeightedGraph, Monomial, MonomialIdeal, VariableSet};
pub use oracle::{oracle_invariants, FieldChoice, Guards};
pub use tableau::{AdmissibleCollection, Cell, Mark, MarkedBox, Partition, Tableau};
