//! Exact computation of Hilbert functions, Hilbert coefficients, postulation
//! numbers and Castelnuovo-Mumford regularity of associated graded modules
//! `G_I(M)` of one-dimensional modules, for two families where everything is
//! monomial and therefore exactly computable:
//!
//! * numerical semigroup rings `k[[t^S]]` with value-set modules and monomial
//!   ideals ([`semigroup`]);
//! * quotients `k[[x,y]]/J` by monomial ideals, possibly of depth zero
//!   ([`staircase`]).
//!
//! The [`theorems`] module evaluates the regularity bound
//! `reg G_I(M) <= C(e0 - b + 2, 2) - e1 - 1` and its extremal
//! characterizations on the resulting [`analysis::AnalysisReport`]s.

pub mod analysis;
pub mod cohomology;
pub mod corpus;
pub mod degree;
pub mod error;
pub mod explore;
pub mod instance;
pub mod oracle;
pub mod semigroup;
pub mod series;
pub mod staircase;
pub mod theorems;

pub use analysis::{analyze, AnalysisReport, AnalyzeOptions};
pub use degree::Degree;
pub use error::{Error, Result};
pub use instance::{parse_instance, Instance};
pub use series::{HilbertData, HilbertSeries};
