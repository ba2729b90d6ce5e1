//! Algebraic invariants of Artin groups given by labelled presentation graphs.
//!
//! * [`graph`]: presentation graphs, type predicates, cut graphs, the edge
//!   trichotomy and the even-leaf retraction.
//! * [`centraliser`]: symbolic centraliser shapes of standard generators and
//!   of the other element classes of large-type Artin groups.
//! * [`dihedral`]: an exact word engine for dihedral Artin groups (Garside
//!   normal forms, centre, central quotient, conjugacy to generator powers).
//! * [`isomorphism`]: canonical labelling, twist moves, rigidity, the
//!   large-type isomorphism decision and the edge-2 classification gate.
//! * [`deligne`]: truncated Deligne complexes of dihedral Artin groups and
//!   their standard trees.

pub mod centraliser;
pub mod deligne;
pub mod dihedral;
pub mod graph;
pub mod isomorphism;
mod util;

pub use graph::{parse_graph, serialize_graph, EdgeKind, PresentationGraph};
