//! Divisible design digraph toolkit.
//!
//! A divisible design digraph (DDD) is a k-regular asymmetric digraph whose
//! vertex set splits into `m` classes of size `n` such that two distinct
//! vertices have exactly `l1` common dominators and `l1` common dominated
//! vertices when they share a class, and exactly `l2` of each otherwise.
//! This crate provides:
//!
//! * a concrete finite-group engine with the complete catalog of groups of
//!   order at most 27 ([`group`], [`catalog`]),
//! * arithmetic in the small Galois fields the constructions need ([`gf`]),
//! * dense digraphs, the DDD verification oracle, digraph6 serialization and
//!   canonical labeling ([`digraph`], [`ddd`], [`d6`], [`canon`]),
//! * the explicit DDD constructions from Paley designs, circulants and skew
//!   balanced generalized weighing matrices ([`constructions`]),
//! * an exhaustive, symmetry-aware search for connection sets `S` making
//!   `Cay(G, S)` a DDD, and the classification of all such digraphs on at
//!   most 27 vertices up to isomorphism ([`search`], [`classify`]).
//!
//! ```
//! use dddforge_core::{cayley_digraph, ddd_check, Group};
//!
//! // the quaternion units {i, j, k} generate the smallest proper example
//! let q8 = Group::dicyclic(2);
//! let digraph = cayley_digraph(&q8, &[1, 4, 5]).unwrap();
//! assert!(ddd_check(&digraph).matches([8, 3, 0, 1, 4, 2]));
//! ```

pub mod canon;
pub mod catalog;
pub mod classify;
pub mod connset;
pub mod constructions;
pub mod d6;
pub mod ddd;
pub mod digraph;
pub mod gf;
pub mod group;
pub mod matrix;
pub mod report;
pub mod search;

pub use canon::{are_isomorphic, canonical_form, canonical_label, CanonicalLabel};
pub use ddd::{ddd_check, DddCheck, DddParams, NotDddReason};
pub use digraph::{cayley_digraph, Digraph};
pub use group::Group;
