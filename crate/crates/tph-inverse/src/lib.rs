//! Exact generalized inverses of block Toeplitz-plus-Hankel matrices.
//!
//! A `T + H` (or `T - H`) matrix with `p`-by-`q` blocks is inverted in closed
//! form through the essential-polynomial method, entirely over the rationals:
//!
//! 1. interleave the Toeplitz and Hankel coefficients into one generating
//!    sequence of `2p`-by-`2q` blocks ([`sequence`]);
//! 2. compute the kernel-dimension staircase of the associated block Toeplitz
//!    family, its defects and its indices ([`indices`]);
//! 3. extract a deterministic full set of right essential polynomials from
//!    the complement spaces at the staircase jumps ([`essential`]);
//! 4. conform: split `A(z) R(z)`, stack, invert the unimodular matrix
//!    polynomial exactly and read off the left essential matrix
//!    ([`conformation`]);
//! 5. assemble band factors and the 0/1 selection matrix into the closed-form
//!    inverse, directly or blockwise ([`assembly`], [`pi`]).
//!
//! The [`mosaic`] module carries the structural identities tying the stacked
//! block Toeplitz matrix to the plus/minus pair, and [`oracle`] provides an
//! independent dense one-inverse used to cross-check every pipeline output.
//! The result is a true inverse whenever the input is invertible, with no
//! side condition on the opposite-sign matrix.
//!
//! Entry points: [`assembly::pinv_tph`] for the full pipeline,
//! [`assembly::run_pipeline`] plus [`assembly::pinv_tph_from_essentials`] to
//! share analysis between both signs, and the file-driven [`cli`] used by the
//! `tph` binary. Runnable walkthroughs of each capability live in
//! `examples/`.

pub mod assembly;
pub mod cli;
pub mod conformation;
pub mod error;
pub mod essential;
pub mod indices;
pub mod io;
pub mod laurent;
pub mod matrix;
pub mod mosaic;
pub mod oracle;
pub mod pi;
pub mod problem;
pub mod rational;
pub mod sequence;

#[cfg(test)]
pub(crate) mod testdata;

pub use assembly::{pinv_tph, PinvOptions, TphResult};
pub use error::{Error, Result};
pub use matrix::ExactMatrix;
pub use problem::{Sign, TphProblem};
pub use rational::Rational;
