//! Exact combinatorics of biclosed sets in the positive systems of the
//! rank-3 affine Weyl groups Ã₂, B̃₂ and G̃₂.
//!
//! The crate computes, with no floating point anywhere:
//!
//! - the finite rank-2 root systems and their biclosed subsets ([`roots`]);
//! - affine roots α+nδ, an exact closure engine over eventually periodic
//!   sets, and level-truncated brute-force oracles ([`affine`]);
//! - canonical forms w·Φ̂⁺_{L,K} for biclosed sets of the affine positive
//!   system, the W-action, and the finitely-generated classification
//!   ([`canonical`]);
//! - the poset of finite and infinite reduced words under weak order:
//!   inversion sets, products, meets, bounded joins and maximal elements
//!   ([`words`]);
//! - the complete ortholattice of biclosed sets ([`lattice`]);
//! - the braid graph on restrictions of reflection orders, with a
//!   constructive connectivity procedure ([`braid`]);
//! - independent brute-force verifier suites ([`oracle`]).
//!
//! Every runnable capability has a matching example under `examples/`; the
//! `biclosed` binary exposes the same operations to scripts.

pub mod affine;
pub mod braid;
pub mod canonical;
pub mod error;
pub mod lattice;
pub mod oracle;
pub mod roots;
pub mod weyl;
pub mod wire;
pub mod words;

pub use error::{Error, Result};
pub use roots::{Root, RootSystem, RootSystemType, SimpleSet};
