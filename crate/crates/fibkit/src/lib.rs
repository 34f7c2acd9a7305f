//! # fibkit
//!
//! Exact-arithmetic toolkit for Fibonacci-like sequences over all integer
//! indices, together with a registry of evaluable identities and a grid-sweep
//! verification harness.
//!
//! A Fibonacci-like (gibonacci) sequence is any `G` with
//! `G(n) = G(n-1) + G(n-2)` and integer seeds `(G(0), G(1)) != (0, 0)`;
//! the Fibonacci and Lucas numbers are the seeds `(0, 1)` and `(2, 1)`.
//! Everything here is computed in arbitrary-precision integers (or exact
//! rationals for the reciprocal sums) — no floating point anywhere.
//!
//! Module map:
//! - [`sequences`] — `F`, `L`, and seeded `G` over all of ℤ, with both a
//!   logarithmic-time doubling path and a term-by-term reference path.
//! - [`combinators`] — generic binomial-transform, telescoping, and
//!   reciprocal-sum evaluators over an abstract three-term recurrence.
//! - [`catalog`] — every supported identity as a named, evaluable entry
//!   behind the [`catalog::Identity`] trait, selected by string key.
//! - [`harness`] — the brute-force oracle, parameter-grid sweeps, and
//!   machine-readable JSON reports.

pub mod catalog;
pub mod combinators;
pub mod harness;
pub mod sequences;

mod error;

pub use error::Error;
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
