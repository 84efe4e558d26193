//! Compositions of `n` and circulant digraphs of order `n`.
//!
//! A connection set `{0 = a_1 < ... < a_t} ⊆ Z_n` is determined by its
//! cyclic gaps, which form a composition of `n`. This crate implements that
//! correspondence ([`bijection`]), its restriction to symmetric sets and
//! palindromes, the pairing of aperiodic palindromes with connected
//! circulant graphs, and exact Möbius-inversion counts ([`enumeration`])
//! backed by exhaustive enumerators and a traversal-based connectivity
//! oracle ([`circulant::traversal`]).
//!
//! ```
//! use circomp::{bijection, ConnectionSet};
//!
//! let set: ConnectionSet = "5: 0,2,3".parse().unwrap();
//! assert_eq!(bijection::composition_of(&set).to_string(), "2,1,2");
//! ```

pub mod bijection;
pub mod circulant;
pub mod composition;
pub mod enumeration;
mod error;
pub mod verify;

pub use circulant::{CirculantDigraph, CirculantGraph, ConnectionSet};
pub use composition::Composition;
pub use enumeration::{BigCount, CountTable, Family};
pub use error::{Error, Result};
