//! Symbolic gamma-matrix expressions: parser, canonicalizer onto the Clifford
//! basis, commutation queries and the monomial constraint solver.

pub mod canonical;
pub mod expr;
pub mod parse;
pub mod random;
pub mod search;

pub use canonical::{canonicalize, to_expr, CanonicalForm, IndexSubset};
pub use expr::GammaExpr;
pub use parse::parse;
pub use search::{monomial_search, relation, relation_forms, CommutationConstraint, Relation};
