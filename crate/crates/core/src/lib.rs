#![allow(clippy::needless_range_loop)]
//! Exact computations in extended affine Weyl groups, the extended nil-Hecke
//! ring and the homology of the adjoint affine Grassmannian.

pub mod affine_homology;
pub mod affine_weyl;
pub mod context;
pub mod error;
pub mod json;
pub mod lattice;
pub mod linalg;
pub mod nilhecke;
pub mod peterson;
pub mod root_data;
pub mod scalars;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use lattice::{AffineRoot, Coweight, Root, Weight, MAX_RANK};
pub use root_data::{CartanType, RootSystem, Series};
pub use scalars::{Monomial, Polynomial, Rational, RationalFunction};
pub use weyl::{WeylElement, WeylGroup};
pub use affine_weyl::{ExtendedAffineElement, ZElement};
pub use context::Context;
pub use nilhecke::{DeltaElement, NilHeckeElement};
pub use affine_homology::{ClassViews, HomologyElement};
pub use peterson::QuantumClass;
