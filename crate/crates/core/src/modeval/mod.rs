//! Evaluation of `(F·G) mod P` without forming `F·G`.
//!
//! Write `F^[i] = (X^i·F) mod P`. Then `F^[i+1] = X·F^[i] − f^[i]_{n−1}·P`, so
//! once the leading coefficients `f^[i]_{n−1}` are known, the values
//! `F^[i](α)` follow from `F(α)` and `P(α)` by a linear recurrence, and
//! `((F·G) mod P)(α) = Σ g_i·F^[i](α)`.
//!
//! The point `α` may live in the coefficient ring, in an extension of it, or
//! be a companion matrix; see [`companion`].

mod binomial;
pub mod companion;
mod index_map;
mod leading;
mod modular;

pub use binomial::{eval_mod_binomial_dense, eval_mod_binomial_sparse};
pub use companion::{
    eval_modprod_companion_sparse, eval_sparse_on_companion, project_modprod_companion, project_modprod_companion_with,
    project_poly_companion, CompanionOperator,
};
pub use index_map::SparseIndexMap;
pub use leading::{leading_coefficients, sparse_leading_coefficients};
pub use modular::{eval_mod_p_dense, eval_mod_p_dense_with, eval_mod_p_sparse};

use crate::error::{Error, Result};
use crate::poly::SparsePoly;
use crate::rings::{Algebra, Ring};

/// Multiplication by powers of the evaluation point.
///
/// The generic implementation uses square-and-multiply in the algebra;
/// companion matrices supply a cheaper multiplication by `C_R`.
pub(crate) trait PointOps<A: Ring> {
    fn alg(&self) -> &A;

    /// `α^t · x`.
    fn times_alpha_pow(&self, x: &A::Elem, t: u64) -> A::Elem;

    fn times_alpha(&self, x: &A::Elem) -> A::Elem {
        self.times_alpha_pow(x, 1)
    }

    fn alpha_pow(&self, t: u64) -> A::Elem {
        self.times_alpha_pow(&self.alg().one(), t)
    }
}

pub(crate) struct Point<'a, A: Ring> {
    pub alg: &'a A,
    pub alpha: &'a A::Elem,
}

impl<A: Ring> PointOps<A> for Point<'_, A> {
    fn alg(&self) -> &A {
        self.alg
    }

    fn times_alpha_pow(&self, x: &A::Elem, t: u64) -> A::Elem {
        match t {
            0 => x.clone(),
            1 => self.alg.mul(self.alpha, x),
            _ => self.alg.mul(&self.alg.pow(self.alpha, t), x),
        }
    }
}

/// `S(α)` for sparse `S`, by a Horner scheme over the gaps between exponents.
pub(crate) fn eval_sparse_at<R: Ring, A: Algebra<R>, O: PointOps<A>>(s: &SparsePoly<R>, ops: &O) -> A::Elem {
    let alg = ops.alg();
    let mut acc = alg.zero();
    let mut prev: Option<u64> = None;
    for (e, c) in s.terms().iter().rev() {
        if let Some(p) = prev {
            acc = ops.times_alpha_pow(&acc, p - e);
        }
        acc = alg.add(&acc, &alg.embed(c));
        prev = Some(*e);
    }
    match prev {
        Some(p) => ops.times_alpha_pow(&acc, p),
        None => acc,
    }
}

/// Checks that `P` is monic of degree `n ≥ 1` and that every operand degree is
/// below `n`; returns `n`.
pub(crate) fn check_operands<R: Ring>(p: &SparsePoly<R>, degrees: &[Option<u64>]) -> Result<u64> {
    let n = p.degree()?;
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    if n == 0 {
        return Err(Error::ConstantModulus);
    }
    check_below(n, degrees)?;
    Ok(n)
}

pub(crate) fn check_below(n: u64, degrees: &[Option<u64>]) -> Result<()> {
    if n == 0 {
        return Err(Error::ConstantModulus);
    }
    match degrees.iter().flatten().find(|&&d| d >= n) {
        Some(d) => Err(Error::degree(format!("operand degree {d} is not below {n}"))),
        None => Ok(()),
    }
}
