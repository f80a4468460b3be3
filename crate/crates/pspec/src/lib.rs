//! Poisson brackets defined by Jacobian determinants on polynomial rings.
//!
//! Given coprime pairs (s_1, t_1), ..., (s_{n-2}, t_{n-2}) in Q[x_1, ..., x_n],
//! the bracket
//!
//! ```text
//! {f, g} = (t_1 ... t_{n-2})^2 * Jac(f, g, s_1/t_1, ..., s_{n-2}/t_{n-2})
//! ```
//!
//! is a Poisson bracket on the polynomial ring. This crate constructs such
//! structures exactly over the rationals, verifies their defining identities
//! (Jacobi, Plücker, Leibniz, centrality of the s_i/t_i), and mechanizes the
//! decision procedures built on top of them: Poisson ideals, residually null
//! ideals, gamma partition data, pencil ideals, Poisson point classification,
//! smoothness of fibers, and scaling-torus Poisson automorphisms.
//!
//! The `pspec` binary exposes all of this on the command line over a small
//! line-oriented structure-file format (`.psn`).

pub mod error;
pub mod poly;
pub mod matrix;
pub mod parse;
pub mod bracket;
pub mod groebner;
pub mod ideals;
pub mod torus;
pub mod cli;
pub mod report;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[cfg(test)]
pub(crate) mod testfix;

