//! Exact arithmetic for continuous piecewise polynomial functions on the
//! real line, defined by polynomials with rational coefficients.
//!
//! Every such function has a unique normal form
//!
//! ```text
//! f = F0 + F1 * C[u1](P1) + ... + FN * C[uN](PN)
//! ```
//!
//! where `C[u](P)` is the continuous function that vanishes left of the
//! `u`-th real root of `P` and agrees with `P` right of it, each `Pi` is
//! monic irreducible, and the `(Pi, ui)` pairs are distinct. The crate
//! provides the normal form itself ([`canonical::CanonicalForm`]), the
//! conversions to and from plain piecewise lists, ring operations,
//! composition, differentiation, and two exact evaluation schemes.
//!
//! The crate is `no_std` (it allocates, but performs no IO); parsing,
//! printing and the command line front end live in the companion
//! `cpwp-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod canonical;
mod error;
pub mod factor;
mod fppoly;
pub mod poly;
pub mod rat;
pub mod realalg;
pub mod semipoly;
mod zpoly;

pub use canonical::{CanonicalForm, StandardPiecewise, Term};
pub use error::Error;
pub use poly::Poly;
pub use rat::Rat;
pub use realalg::{AlgebraicNumber, IsolatingInterval};
pub use semipoly::SemiPolyExpr;
