//! Exact structure-constant engine for Hom-algebras.
//!
//! Finite-dimensional Hom-Malcev, Hom-pre-Malcev, Hom-M-dendriform,
//! Hom-alternative, Hom-pre-alternative and Hom-alternative quadri-algebras
//! are stored as sparse rational structure constants together with a twist
//! map. Every defining identity is checked exactly by sweeping all basis
//! tuples, and the constructions between these classes (twists, duals,
//! semidirect products, Rota-Baxter and O-operator splittings) are provided
//! as pure functions whose outputs can be re-checked the same way.

pub mod bundle;
pub mod error;
pub mod exact;
pub mod fixtures;
pub mod functors;
pub mod operators;
pub mod report;
pub mod reps;
pub mod structures;
pub mod sweep;

pub use error::{Error, Result};
pub use exact::{Matrix, Rational, SparseVec, StructureTensor};
pub use operators::{BilinearForm, OperatorKind, OperatorWitness};
pub use reps::{ActionRole, DualVariant, RepKind, Representation};
pub use structures::{CheckOptions, CheckReport, HomStructure, ProductRole, StructureClass, Violation};
