//! Exact engine for skew Schur function identities.
//!
//! The crate multiplies skew Schur functions by power sums, quantum power
//! sums and their relatives, and checks the resulting skew Pieri and skew
//! Murnaghan-Nakayama type expansions exactly, in monomial coordinates.
//! Alongside the algebra it implements the combinatorics that proves those
//! expansions: skew row insertion, the sign-reversing involutions on skew
//! tableaux, colored tableaux, and jeu de taquin. A Hall-Littlewood module
//! evaluates several open conjectured skew rules at desk scale.
//!
//! All arithmetic is over `Z[q]` ([`QPoly`]); nothing is approximate.

pub mod colored;
pub mod error;
pub mod hallittlewood;
pub mod jdt;
pub mod qpoly;
pub mod shapes;
pub mod sweep;
pub mod symfunc;
pub mod tableaux;

pub use colored::{CancelOutcome, ColoredTableau};
pub use error::{ParseError, ShapeError, SymError};
pub use hallittlewood::{CaseVerdict, Conjecture, ConjectureReport};
pub use jdt::{JdtError, SlidePath, StandardTableau};
pub use qpoly::{q_binomial, QPoly};
pub use shapes::{Cell, Partition, SkewShape, StripKind};
pub use sweep::{Bounds, Outcome, Rule, Summary};
pub use symfunc::{SkewSchurSum, SymFunc, SymRing};
pub use tableaux::{InsertionOutcome, SkewTableau};
