//! Exact toolkit for quantum error-correcting codes built from hypergraph
//! states.
//!
//! Everything in this crate is integer arithmetic: states are vectors of
//! ±1 signs (stored one bit per sign), scalar products are integers over a
//! power-of-two denominator, and code-distance questions reduce to exact
//! equality checks. There is no floating point anywhere.
//!
//! The crate is organised around a few layers:
//!
//! - [`hypergraph`] / [`state`]: hypergraphs, their ±1-signed states,
//!   generalized controlled-Z gates and the edge-level Pauli actions.
//! - [`symmetric`]: permutation-invariant hypergraphs and states, which
//!   compress to a set of edge cardinalities / a sign per basis-weight.
//! - [`pauli`] / [`kl`]: Pauli strings with exact phase tracking, and the
//!   Knill-Laflamme recovery condition (generic dense checker plus a
//!   counting-based fast path for symmetric codes that scales to 30 qubits).
//! - [`search`]: classification of two-word symmetric hypergraph codes by
//!   binomial identities, and the pruned enumeration of all distance-2
//!   codes.
//! - [`protected`]: codes for error models where some qubits are protected,
//!   built by attaching outer vertices to a balanced inner hypergraph.
//!
//! # Example
//!
//! The triangle with one 3-edge carries a symmetric code; reading off its
//! tuple and checking it densely shows a single Z gate is not enough for
//! distance 2:
//!
//! ```
//! use hypercode::{CodeTuple, Hypergraph};
//!
//! let graph =
//!     Hypergraph::from_vertex_sets(3, &[&[1, 2], &[1, 3], &[2, 3], &[1, 2, 3]])?;
//! let tuple = CodeTuple::from_code(&graph, &[1])?;
//! assert_eq!(tuple.weights().iter().copied().collect::<Vec<_>>(), vec![1, 2]);
//! assert!(!tuple.distance2_binomial());
//! assert_eq!(hypercode::kl::distance(&tuple.dense_code()?, 2)?, 1);
//!
//! // The smallest codes that are not plain graphs live on 8 qubits.
//! let found = hypercode::search::enumerate_distance2(8, true)?;
//! assert!(!found.is_empty());
//! # Ok::<(), hypercode::Error>(())
//! ```

pub mod binom;
pub mod error;
pub mod hypergraph;
pub mod kl;
pub mod pauli;
pub mod protected;
pub mod scalar;
pub mod search;
pub mod state;
pub mod symmetric;

pub use error::{Error, Result};
pub use hypergraph::Hypergraph;
pub use kl::{distance, kl_check, symmetric_inner, CodeBasis, KlVerdict, KlWitness};
pub use pauli::PauliString;
pub use scalar::{Phase, Scalar};
pub use search::CodeTuple;
pub use state::{SignVector, DENSE_CAP};
pub use symmetric::{SymmetricHypergraph, SymmetricState};
