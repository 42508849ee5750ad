//! The hereditarily finite universe: sets, the satisfaction oracle, the
//! fundamental operations and their compiler, truncated constructible
//! stages, inductive definitions, and finite large-set checkers.

mod compile;
mod constructible;
mod embedding;
mod inductive;
pub mod mv;
mod ops;
mod regular;
mod satisfy;
mod set;

pub use compile::{arg_names, compile_bounded, CompileError};
pub use constructible::{closure_step, def_stage, def_step, hereditary_add, l_stage, l_stages};
pub use embedding::{
    check_critical_point, check_elementary, check_elementary_with, ElementarityFailure, EmbeddingError, EmbeddingMap,
    ELEMENTARITY_PARAMS,
};
pub use inductive::{lfp_inductive, lfp_stages, InductiveDef, NotARule};
pub use mv::{adjust_mv, is_full, is_mv, mv_space, Direction, MvError, MvRelation};
pub use ops::{eval_opterm, fundamental_op, OpError, OpNode, OpSymbol, OpTerm, ALL_OPS};
pub use regular::{
    bcst_axioms, check_regular, regular_counterexample, Clause, RegularError, RegularityLevel, RegularityReport,
    RegularityWitness,
};
pub use satisfy::{satisfies, Env, SatError};
pub use set::{HfParseError, HfSet};
