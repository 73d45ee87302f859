//! Exact computation and bound verification for the list color function of
//! complete bipartite graphs `K_{2,n}` (with limited `K_{l,n}` support).
//!
//! The crate is `no_std` and only needs `alloc`. Everything that touches the
//! file system, threads or wall clocks lives in the `lcf` companion crate.
//!
//! Layout:
//!
//! * [`model`]: colour sets, explicit and canonical list assignments, closed
//!   form chromatic polynomials.
//! * [`exact`]: exact evaluation of `P(G, L)`, a brute-force oracle and the
//!   exhaustive minimizer computing `P_ℓ(K_{2,n}, m)`.
//! * [`bounds`]: the pair-counting lemma, AM-GM lower bounds, the first-bad-n
//!   scanners, and the analytic machinery behind the linear upper bound on
//!   the threshold.
//! * [`constructions`]: extremal list assignments and their closed forms.
//! * [`casework`]: per-`(n, m)` equality certificates combining the above.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod casework;
pub mod constructions;
mod count;
mod error;
pub mod exact;
pub mod model;

pub use count::ExactCount;
pub use error::{Error, Result};
