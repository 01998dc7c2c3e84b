//! Clique decompositions of the complete `k`-partite graph `G(k, n)`.
//!
//! An `l`-decomposition is a set of transversal `K_k` copies (blocks) such
//! that every `K_l` lies in exactly one of them; equivalently an orthogonal
//! array of strength `l` and index one. This crate builds them for every
//! order with no prime factor below `k`, checks them, converts them to and
//! from systems of mutually invertible Latin cubes, and produces small
//! coverings when no exact decomposition is available.

pub mod cli;
pub mod construct;
pub mod cover;
pub mod cubes;
pub mod error;
pub mod family;
pub mod format;
pub mod latin;
pub mod params;
pub mod verify;

pub use construct::{
    construct, factorize, product_decomposition, vandermonde_blocks, PrimeFactorization,
};
pub use cover::{
    build_covering, exact_cover_size, fuse, next_admissible_order, Covering, SearchOutcome,
};
pub use cubes::{blocks_to_mols, extract_cubes, lift_cubes, mols_to_blocks};
pub use error::{DesignError, Result};
pub use family::{Block, BlockFamily};
pub use latin::{CubeSet, LatinCube};
pub use params::{enumerate_index_sets, validate_params, IndexSet, Params};
pub use verify::{
    are_mutually_orthogonal, is_covering, is_decomposition, is_l_extendable, is_latin,
    is_mutually_invertible, Verdict, VerifyReport, Witness,
};
