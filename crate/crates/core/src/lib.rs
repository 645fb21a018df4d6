//! Kauffman bracket and Jones polynomials of Chebyshev billiard table diagrams.
//!
//! The crate has two evaluation routes that are checked against each other:
//!
//! * [`oracle`] builds the combinatorial diagram of a billiard table
//!   ([`diagram`]) and sums over every smoothing state.
//! * [`recursions`] produces the compressed tuple expansions for the
//!   `T(3,b)`, `T(5,b)` and bumpered `a = 5` families, written in the
//!   executable tuple notation of [`terms`].
//!
//! [`tiling`] carries the domino-tiling reading of the `T(3,b)` expansion.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod diagram;
mod error;
pub mod laurent;
pub mod oracle;
pub mod recursions;
pub mod sign;
pub mod terms;
pub mod tiling;
mod union_find;

pub use diagram::{BilliardDiagram, Bumpers, Side, SignedDiagram, TableSpec};
pub use error::{Error, Result};
pub use laurent::{LaurentPoly, QuarterPoly};
pub use sign::{Sign, SignSequence};
pub use terms::{Block, SlotFactor, SlotTerm, TermSum};
