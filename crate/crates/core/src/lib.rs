//! Diminished Sombor (DSO) index toolkit.
//!
//! Evaluates degree-based indices on simple graphs, builds the extremal
//! families for the DSO minimum over molecular graphs with given order and
//! cyclomatic number, enumerates those graph classes exhaustively at desk
//! scale, and checks the closed-form bound against brute force.

pub mod canon;
pub mod constructors;
pub mod enumerator;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod indices;
pub mod verifier;

pub use canon::{canonical_form, CanonicalForm};
pub use enumerator::{enumerate, minimize_index, DegreeCap, InstanceParams, Limits};
pub use error::{Error, Result};
pub use graph::{DegreeProfile, EdgeType, EdgeTypeCounts, Graph};
pub use indices::{evaluate_index, EdgeWeight, Weight};
pub use verifier::{verify_theorem1, Verdict, VerificationReport};
