//! Exact computation of the local integral obstruction group E of a normal
//! surface singularity.
//!
//! E is computed through three independent realizations and cross-checked:
//!
//! * the discriminant group Λ∨/Λ of the resolution lattice ([`lattice`],
//!   [`graph`]);
//! * the torsion of H²(L, ℤ) for the link L ([`link`]);
//! * the torsion of coker(T − id) for the Milnor monodromy T ([`monodromy`]).
//!
//! [`report::compute_report`] runs every route that applies to a
//! [`spec::SingularitySpec`] and returns a verdict; [`tables`] reproduces the
//! reference tables of worked examples.

pub mod corpus;
mod decimal;
pub mod error;
pub mod graph;
pub mod group;
pub mod lattice;
pub mod linalg;
pub mod link;
pub mod monodromy;
pub mod report;
pub mod spec;
pub mod tables;

pub use error::{Error, Result};
pub use graph::{ade_graph, hirzebruch_jung, AdeKind, ContinuedFraction, ResolutionGraph, Vertex};
pub use group::FiniteAbelianGroup;
pub use lattice::Lattice;
pub use linalg::{Cokernel, IntMatrix, SmithDecomposition};
pub use link::{brieskorn_h1_order, lens_space_h1, link_from_plumbing, LinkHomology};
pub use monodromy::{
    brieskorn_pham_operator, coxeter_operator, variation, MonodromyOperator, VariationResult,
};
pub use num_bigint::BigInt;
pub use report::{compute_report, ObstructionReport, Realization, Route, Verdict};
pub use spec::{parse_spec, SingularitySpec};
pub use tables::{reproduce_tables, TableDocument};
