//! Classical invariants of Legendrian fronts and the upper bounds on
//! `tb + |r|` that come from genus, signature, the concordance invariant
//! tau and the HOMFLY / Kauffman polynomials.

pub mod bounds;
pub mod corpus;
pub mod diagram;
pub mod error;
pub mod front;
pub mod matrix;
pub mod metadata;
pub mod pd;
pub mod poly;
pub mod skein;
pub mod tau;
pub mod topo;

pub use bounds::{bound_table, BoundEntry, BoundReport, Quantity};
pub use error::{Error, Result};
pub use front::{
    classical_invariants, connect_sum, orient, reverse_orientation, stabilize, validate, ClassicalInvariants,
    FrontDiagram, FrontEvent, OrientedFront, StabilizationSign,
};
pub use metadata::KnotMetadata;
pub use pd::{front_to_pd, mirror, PDCode};
pub use poly::LaurentPoly2;
pub use skein::{homfly, homfly_bound, kauffman, kauffman_bound, SkeinConfig};
pub use tau::{sandwich, tau_alternating, tau_connected_sum, tau_mirror, tau_torus, whitehead_double_tau, TauEstimate};
pub use topo::{determinant, seifert_genus_upper, signature};
