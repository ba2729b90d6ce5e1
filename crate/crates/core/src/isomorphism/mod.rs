//! Labelled-graph isomorphism, twist-equivalence and the edge-2 gate.
//!
//! A twist move along a separating odd-labelled edge `{a, b}` exchanges `a`
//! and `b` on one side of the splitting `G = G1 ∪ G2`, `G1 ∩ G2 = {a, b}`.
//! Twists produce isomorphic Artin groups, and for large-type graphs they
//! account for every isomorphism, so the isomorphism problem reduces to a
//! search over the finite twist class.

mod canonical;
mod gate;
mod twist;

use thiserror::Error;

pub use canonical::{canonical_form, graphs_isomorphic, is_isomorphism, CanonicalGraph};
pub use gate::{large_type_gate, GateVerdict, SeparatingProperty};
pub use twist::{
    apply_twist, is_rigid, large_type_isomorphic, rigidity_report, twist_class, twist_moves,
    Certificate, IsomorphismDecision, RigidityReport, TwistMove,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsomorphismError {
    #[error("invalid twist `{0}`: {1}")]
    InvalidTwist(String, String),
    #[error("the {0} graph is not of large type")]
    NotLargeType(&'static str),
}
