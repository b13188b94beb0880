//! Exact computer algebra for parafermion coset modules.
//!
//! The crate computes, with exact rational arithmetic wherever an identity is
//! exact: root systems and their lattices (root, long-root and weight
//! lattices with Smith-normal-form quotients), finite-dimensional weight
//! multiplicities and tensor products, level-k affine fusion rings
//! (Kac-Walton, with a Verlinde-formula numeric cross-check), quantum and
//! global dimensions, and the classification and fusion products of
//! parafermion coset modules labelled by pairs (Lambda, Lambda + beta).
//!
//! Entry points mirror that pipeline: [`liealg`] -> [`lattice`] ->
//! [`repdata`] -> [`affine`] -> [`parafermion`], with [`verify`] bundling
//! the identity checks the whole construction is expected to satisfy.

pub mod affine;
pub mod error;
pub mod lattice;
pub mod liealg;
pub mod linalg;
pub mod parafermion;
pub mod qnum;
pub mod repdata;
pub mod serialize;
pub mod verify;

pub use error::{Error, Result};
pub use liealg::{build_root_system, Family, RootSystem, SimpleType, WeightVec, WeylElement};
pub use linalg::{Rat, RatMat};
