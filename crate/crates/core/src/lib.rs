//! Exact arithmetic for primitive Pythagorean triples and the Berggren tree.
//!
//! Every primitive Pythagorean triple descends uniquely from (3, 4, 5) under
//! the three unimodular matrices A, B, C. This crate provides:
//!
//! - validated triples and both classical parametrizations ([`ppt`]),
//! - the ring Z[√2] that powers the exact closed form of Bⁿ ([`quad`]),
//! - tree navigation, closed-form matrix powers and bounded breadth-first
//!   enumeration ([`tree`]),
//! - inradius/circumradius recurrences and chain formulas ([`radii`]),
//! - enumeration of all triples with a prescribed inradius ([`inradius`]),
//! - the exact geometry of the triangle whose vertices are a triple's three
//!   children read as points of Z³ ([`geometry`]),
//! - brute-force reference implementations ([`oracle`]) and the cross-check
//!   suite comparing the two routes ([`verify`]).
//!
//! All integers are arbitrary precision and every advertised quantity is
//! exact; floating-point values appear only as clearly labelled
//! approximations of exact forms.
//!
//! ```
//! use berggren_core::tree::{descend_path, path_of};
//! use berggren_core::TreePath;
//!
//! let path: TreePath = "BB".parse().unwrap();
//! let node = descend_path(&path);
//! assert_eq!(node.to_string(), "(119,120,169)");
//! assert_eq!(node.inradius().to_string(), "35");
//! assert_eq!(node.circumradius().to_string(), "169/2");
//! assert_eq!(path_of(&node).unwrap(), path);
//! ```

pub mod geometry;
pub mod inradius;
pub mod oracle;
pub mod ppt;
pub mod quad;
pub mod radii;
pub mod tree;
pub mod verify;

mod bigfloat;

pub use ppt::{EuclidPair, Ppt};
pub use tree::{Letter, TreePath};

use thiserror::Error;

/// Exact rational number. Circumradii of primitive triples are always half
/// an odd integer, so they never collapse to plain integers.
pub type Rational = num_rational::BigRational;

/// A mathematically impossible state was observed. For well-formed inputs
/// none of the operations returning this can fail; seeing it means the input
/// data or the build itself is corrupted.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invariant violation: {0}")]
pub struct InvariantViolation(pub String);
