//! Probabilistic verification of polynomial products.
//!
//! `polyproof` checks identities such as `H = F·G` or `H = (F·G) mod P` without
//! computing the right-hand side. Each verifier is a one-sided Monte Carlo
//! algorithm: a true identity is always accepted, a false one is accepted with
//! probability at most a caller-chosen `epsilon`. Each verifier returns a
//! [`VerifyReport`] with the verdict and every random choice it made, so a
//! failed check can be replayed from its seed.
//!
//! The crate is organised bottom-up:
//!
//! - [`rings`]: coefficient domains (ℤ, 𝔽_q, 𝔽_{q^d}), random primes and
//!   random irreducible polynomials.
//! - [`poly`]: dense and sparse polynomials, reference arithmetic, reduction,
//!   evaluation, and the growth bounds used by the verifiers.
//! - [`modeval`]: evaluation of `(F·G) mod P` at a point, or on a companion
//!   matrix, without forming `F·G`.
//! - [`modverify`]: verification of modular products.
//! - [`prodverify`]: verification of plain products (dense, integer,
//!   Kronecker, sparse).
//! - [`oracle`]: slow reference implementations used as ground truth.
//! - [`cli`]: the command-line front end and the benchmark harness.

pub mod cli;
pub mod error;
pub mod instrument;
pub mod modeval;
pub mod modverify;
pub mod oracle;
pub mod poly;
pub mod prodverify;
pub mod report;
pub mod rings;

pub use error::{Error, Result};
pub use poly::{DensePoly, Poly, SparsePoly};
pub use report::{VerifyReport, Witness};
pub use rings::{ExtField, Fp64, FpBig, Integers, RingCtx, RngStream};
