//! Exact point counting over finite fields and a computable model of the
//! Grothendieck ring of numerical motives through Frobenius spectra.
//!
//! The crate is organized bottom-up:
//!
//! * [`field`]: prime fields and extensions, projective enumeration;
//! * [`variety`]: polynomial systems, point counts and count combinators;
//! * [`algebraic`]: rational polynomials, factorization, Galois orbits of
//!   Weil numbers;
//! * [`motive`]: virtual motives, the point-count homomorphisms, Lefschetz
//!   splitting and zeta functions;
//! * [`zeta_fit`]: from counts back to a rational zeta function and a
//!   spectrum;
//! * [`report`]: JSON reports backing the `weilmot` binary.

pub mod algebraic;
pub mod error;
pub mod field;
pub mod motive;
pub mod report;
pub mod variety;
pub mod zeta_fit;

pub use error::{Error, Result};
