//! Factorization theory of the multiplicative monoid of non-zero polynomials with
//! non-negative integer coefficients.
//!
//! The crate computes, with exact arithmetic throughout:
//!
//! * divisibility and all factorizations into atoms, using the base-`a` digit
//!   method ([`nnfactor`]);
//! * length sets, elasticity, distances and catenary degrees ([`invariants`]);
//! * factorization in `Z[x]` and the induced coordinates ([`zx`]);
//! * prime elements, non-primality witnesses and prime ideals ([`primes`]);
//! * the Weyl-algebra description of the monoid by derivations ([`weyl`]);
//! * the finite-poset counterexample to Krull-Schmidt ([`poset`]).

pub mod config;
pub mod corpus;
pub mod error;
pub mod intfactor;
pub mod invariants;
pub mod json;
pub mod nnfactor;
pub mod poly;
pub mod poset;
pub mod primes;
pub mod weyl;
pub mod zx;

pub use error::{Error, Result};
pub use poly::{NNPoly, ZPoly};
