//! Exact computations in the generalized symmetric groups `Z_k ≀ S_n`.
//!
//! The crate computes, entirely in exact arithmetic over the `k`-th
//! cyclotomic field:
//!
//! - conjugacy classes and `Z_k ≀ S_{n-1}`-conjugacy classes (indexed by
//!   `k`-partite and marked `k`-partite partitions),
//! - irreducible character tables via a Murnaghan–Nakayama hook recursion,
//! - zonal spherical functions of the pair
//!   `(Z_k ≀ S_n × Z_k ≀ S_{n-1}, diag(Z_k ≀ S_{n-1}))` and the generalized
//!   characters they induce,
//! - for the hyperoctahedral case `k = 2`, the generalized characters by a
//!   content-based Murnaghan–Nakayama rule as well,
//! - exhaustive desk-scale verification suites (symmetric-Gelfand-pair
//!   structure, orthogonality, rule-vs-definition equivalence).
//!
//! The `wreathchar` binary exposes all of this as CLI subcommands with
//! deterministic text/CSV/JSON output; see the crate README.

pub mod cli;
pub mod exactnum;
pub mod gelfand;
pub mod irrchar;
pub mod shapes;
pub mod wreath;

use thiserror::Error;

/// Errors surfaced by the library. Anything that depends on user input or
/// configurable caps reports through this type; violated internal
/// invariants panic instead.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("enumeration would visit {size} elements, above the cap {cap}")]
    CapExceeded { size: num_bigint::BigUint, cap: u64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
