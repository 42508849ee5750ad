//! Executable constructive set theory at desk scale.
//!
//! Formulas and the Fleischmann–Lévy hierarchy, hereditarily finite sets with
//! a compiler from bounded formulas to fundamental operations, finite formal
//! topologies and their Heyting frames, Heyting-valued names, the double
//! negation translation, and a G3i sequent prover.

pub mod budget;
pub mod cli;
pub mod corpus;
pub mod formula;
pub mod hf;
pub mod hierarchy;
pub mod names;
pub mod prover;
pub mod topology;
pub mod translation;

pub use budget::{Budget, BudgetExceeded};
