//! Exact checks for the Lovász Local Lemma in its lopsided form, specialised
//! to the space of uniformly random injections, together with constructive
//! search for the objects the lemma proves exist.
//!
//! The crate is organised bottom-up:
//!
//! - [`prob`]: uniform probability over enumerated spaces of injections,
//!   events as dense bitsets, exact rational probabilities.
//! - [`lll`]: dependency graphs, the local lemma condition and its symmetric
//!   form, weight search, and exhaustive verification of the conclusion.
//! - [`injection`]: matchings, canonical events, the conflict relation and
//!   the conflict graph.
//! - [`hypergraph`]: r-uniform hypergraphs, packing instances and perfect
//!   packings.
//! - [`latin`]: Latin transversals of integer matrices.
//! - [`solver`]: exhaustive and randomized search for outcomes avoiding a
//!   family of canonical events, with independently checked certificates.
//! - [`formats`], [`report`], [`cli`]: text input formats, the JSON report and
//!   the command-line front end.
//!
//! Indices are 0-based throughout the library. Text formats and reports are
//! 1-based.

pub mod cli;
pub mod error;
pub mod formats;
pub mod hypergraph;
pub mod injection;
pub mod latin;
pub mod lll;
pub mod prob;
pub mod rational;
pub mod report;
pub mod solver;

pub use error::{Error, MatchingError, Result};
pub use hypergraph::{Hypergraph, PackingInstance};
pub use injection::{CanonicalEvent, Matching};
pub use latin::{IntMatrix, LatinEventFamily};
pub use lll::{EInterval, Graph, TriState, WeightVector};
pub use prob::{Event, Limits, SampleSpace};
pub use rational::Rational;
pub use solver::{AvoidanceProblem, Certificate};
