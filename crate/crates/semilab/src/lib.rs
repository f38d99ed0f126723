//! semilab: an exact-arithmetic laboratory for factorization theory in
//! semisubtractive semidomains.
//!
//! A semidomain here is a subsemiring of an integral domain; it is
//! semisubtractive when every element of the ambient domain or its negative
//! lies inside. The crate builds a small catalog of such instances,
//! computes divisors, atoms, primes, factorization sets and length sets
//! with three-valued verdicts and explicit completeness flags, probes
//! ascending chain conditions, verifies length functions, and machine
//! checks the structural transfer statements between a semidomain and its
//! ambient on reproducible desk-scale corpora.
//!
//! Everything is exact: arbitrary-precision integers, rationals, and
//! Gaussian rationals; no floating point anywhere.
//!
//! Start with the runnable programs under `examples/`, one per capability,
//! or the `semilab` binary for the JSON-reporting command line.

pub mod bounds;
pub mod cli;
pub mod error;
pub mod exact;
pub mod lab;
pub mod monoid;
pub mod parse;
pub mod poly;
pub mod report;
pub mod semidomain;
pub mod zx;

pub use bounds::Bounds;
pub use error::{Error, Result};
pub use lab::{FactorizationZ, Lab, LengthSet};
pub use semidomain::{Element, SemidomainInstance, Verdict, Witness};
