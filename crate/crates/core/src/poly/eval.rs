use super::{DensePoly, Poly, SparsePoly};
use crate::rings::{Algebra, Ring};

/// `F(α)` for `α` in any algebra over the coefficient ring.
pub fn eval<R: Ring, A: Algebra<R>>(f: &Poly<R>, alg: &A, alpha: &A::Elem) -> A::Elem {
    match f {
        Poly::Dense(d) => eval_dense(d, alg, alpha),
        Poly::Sparse(s) => eval_sparse(s, alg, alpha),
    }
}

/// Horner's scheme.
pub fn eval_dense<R: Ring, A: Algebra<R>>(f: &DensePoly<R>, alg: &A, alpha: &A::Elem) -> A::Elem {
    f.coeffs().iter().rev().fold(alg.zero(), |acc, c| alg.add(&alg.mul(&acc, alpha), &alg.embed(c)))
}

/// Sum of `f_e·α^e` with each power computed by square-and-multiply.
pub fn eval_sparse<R: Ring, A: Algebra<R>>(f: &SparsePoly<R>, alg: &A, alpha: &A::Elem) -> A::Elem {
    f.terms().iter().fold(alg.zero(), |acc, (e, c)| alg.add(&acc, &alg.scale(&alg.pow(alpha, *e), c)))
}
