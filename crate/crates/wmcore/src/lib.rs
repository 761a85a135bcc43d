//! Exact combinatorial machinery for classifying weighing matrices through
//! self-orthogonal codes over `Z_m` (`m` an odd prime or 4).
//!
//! The crate is organised around the pipeline
//!
//! ```text
//! codes over Z_m  ->  compatibility graph  ->  n-cliques  ->  weighing
//! (classified up      (weight-k words,         (up to          matrices
//!  to monomial         integer-orthogonal       Aut(C))        (deduplicated
//!  equivalence)        lifts)                                   by incidence
//!                                                               structure)
//! ```
//!
//! and is `no_std` + `alloc`: all operations are pure functions over immutable
//! values, so callers are free to fan work out across threads and merge
//! results in a canonical order.

#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod algebra;
pub mod bits;
pub mod canon;
pub mod codeclass;
pub mod codes;
pub mod equiv;
pub mod search;
pub mod wm;
