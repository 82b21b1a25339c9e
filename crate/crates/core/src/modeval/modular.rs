//! Evaluation of `(F·G) mod P` for a general monic sparse `P`.

use super::{check_operands, eval_sparse_at, leading_coefficients, sparse_leading_coefficients, Point, PointOps};
use crate::error::{Error, Result};
use crate::poly::{eval_dense, DensePoly, SparsePoly};
use crate::rings::{Algebra, Ring};

/// Dense inputs: `O(n·#P)` ring operations for the leading coefficients and
/// `O(n)` operations at the point.
pub fn eval_mod_p_dense<R: Ring, A: Algebra<R>>(
    p: &SparsePoly<R>,
    f: &DensePoly<R>,
    g: &DensePoly<R>,
    alg: &A,
    alpha: &A::Elem,
) -> Result<A::Elem> {
    check_operands(p, &[g.deg().map(|d| d as u64)])?;
    let lead = leading_coefficients(p, f)?;
    eval_mod_p_dense_with(p, &lead, f, g, alg, alpha)
}

/// As [`eval_mod_p_dense`], reusing leading coefficients from
/// [`leading_coefficients`]`(P, F)`.
pub fn eval_mod_p_dense_with<R: Ring, A: Algebra<R>>(
    p: &SparsePoly<R>,
    lead: &[R::Elem],
    f: &DensePoly<R>,
    g: &DensePoly<R>,
    alg: &A,
    alpha: &A::Elem,
) -> Result<A::Elem> {
    let n = check_operands(p, &[f.deg().map(|d| d as u64), g.deg().map(|d| d as u64)])?;
    if lead.len() as u64 != n - 1 {
        return Err(Error::param("leading coefficient table has the wrong length"));
    }
    if g.is_zero() {
        return Ok(alg.zero());
    }
    let ring = f.ring();
    let p_alpha = eval_sparse_at(p, &Point { alg, alpha });
    let mut f_i = eval_dense(f, alg, alpha);
    let mut beta = alg.scale(&f_i, &g.coeffs()[0]);
    for (i, gi) in g.coeffs().iter().enumerate().skip(1) {
        // F^[i](α) = α·F^[i−1](α) − L_{i−1}·P(α)
        f_i = alg.sub(&alg.mul(alpha, &f_i), &alg.scale(&p_alpha, &lead[i - 1]));
        if !ring.is_zero(gi) {
            beta = alg.add(&beta, &alg.scale(&f_i, gi));
        }
    }
    Ok(beta)
}

/// Sparse inputs: the roles of `F` and `G` are swapped when `#G < #F`, then
/// `F^[j](α)` is produced only for `j ∈ supp(G)` by jumping between the
/// indices where `L_j ≠ 0`.
pub fn eval_mod_p_sparse<R: Ring, A: Algebra<R>>(
    p: &SparsePoly<R>,
    f: &SparsePoly<R>,
    g: &SparsePoly<R>,
    alg: &A,
    alpha: &A::Elem,
) -> Result<A::Elem> {
    eval_mod_p_sparse_with_ops(p, f, g, &Point { alg, alpha })
}

pub(crate) fn eval_mod_p_sparse_with_ops<R: Ring, A: Algebra<R>, O: PointOps<A>>(
    p: &SparsePoly<R>,
    f: &SparsePoly<R>,
    g: &SparsePoly<R>,
    ops: &O,
) -> Result<A::Elem> {
    check_operands(p, &[f.deg(), g.deg()])?;
    let (f, g) = if g.sparsity() < f.sparsity() { (g, f) } else { (f, g) };
    let alg = ops.alg();
    if g.is_zero() || f.is_zero() {
        return Ok(alg.zero());
    }
    let lead = sparse_leading_coefficients(p, f)?;
    let p_alpha = eval_sparse_at(p, ops);

    // Invariant: F^[j](α) = α^{j−s}·w for s ≤ j up to the next index in `lead`.
    let mut s = 0u64;
    let mut w = eval_sparse_at(f, ops);
    let mut beta = alg.zero();
    let (mut a, mut b) = (0usize, 0usize);
    let gterms = g.terms();
    while b < gterms.len() {
        let next_lead = lead.get(a).map(|t| t.0);
        let (j, gj) = (&gterms[b].0, &gterms[b].1);
        if next_lead.is_some_and(|i| i < *j) {
            let (i, v) = &lead[a];
            let fi = ops.times_alpha_pow(&w, i - s);
            w = alg.sub(&ops.times_alpha(&fi), &alg.scale(&p_alpha, v));
            s = i + 1;
            a += 1;
        } else {
            let fj = ops.times_alpha_pow(&w, j - s);
            beta = alg.add(&beta, &alg.scale(&fj, gj));
            b += 1;
        }
    }
    Ok(beta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modeval::{eval_mod_binomial_dense, eval_mod_binomial_sparse};
    use crate::oracle::oracle_mod_product;
    use crate::poly::{eval, Poly};
    use crate::rings::{ExtField, FiniteField, Fp64, RngStream};

    fn random_sparse(field: Fp64, n: u64, t: u64, rng: &mut RngStream) -> SparsePoly<Fp64> {
        let q = field.q();
        let terms = (0..t).map(|_| (rng.below(n), rng.below(q))).collect();
        SparsePoly::from_unsorted(field, terms).unwrap()
    }

    #[test]
    fn matches_oracle_over_f13() {
        let f13 = Fp64::new(13).unwrap();
        let p = SparsePoly::from_i64s(f13, &[(0, 1), (1, 1), (4, 1)]).unwrap();
        let mut rng = RngStream::new(21);
        for _ in 0..100 {
            let f = random_sparse(f13, 4, 4, &mut rng);
            let g = random_sparse(f13, 4, 4, &mut rng);
            let alpha = rng.below(13);
            let truth = eval(
                &oracle_mod_product(&Poly::Sparse(f.clone()), &Poly::Sparse(g.clone()), &p).unwrap(),
                &f13,
                &alpha,
            );
            assert_eq!(eval_mod_p_dense(&p, &f.to_dense(), &g.to_dense(), &f13, &alpha).unwrap(), truth);
            assert_eq!(eval_mod_p_sparse(&p, &f, &g, &f13, &alpha).unwrap(), truth);
        }
    }

    #[test]
    fn specializes_to_binomial() {
        let field = Fp64::new(10007).unwrap();
        let mut rng = RngStream::new(2);
        let n = 300;
        let p = SparsePoly::binomial(field, n).unwrap();
        for _ in 0..20 {
            let f = random_sparse(field, n, 10, &mut rng);
            let g = random_sparse(field, n, 10, &mut rng);
            let alpha = rng.below(10007);
            let (fd, gd) = (f.to_dense(), g.to_dense());
            assert_eq!(
                eval_mod_p_dense(&p, &fd, &gd, &field, &alpha).unwrap(),
                eval_mod_binomial_dense(&fd, &gd, n, &field, &alpha).unwrap()
            );
            assert_eq!(
                eval_mod_p_sparse(&p, &f, &g, &field, &alpha).unwrap(),
                eval_mod_binomial_sparse(&f, &g, n, &field, &alpha).unwrap()
            );
        }
    }

    #[test]
    fn unit_factor_and_extension_points() {
        let f2 = Fp64::new(2).unwrap();
        let k = ExtField::from_coeffs(f2, vec![1, 1, 0, 1, 1, 0, 0, 0, 1]).unwrap();
        let mut rng = RngStream::new(6);
        let p = SparsePoly::from_i64s(f2, &[(0, 1), (5, 1), (40, 1)]).unwrap();
        let one = SparsePoly::from_i64s(f2, &[(0, 1)]).unwrap();
        for _ in 0..20 {
            let f = random_sparse(f2, 40, 12, &mut rng);
            let alpha = k.random_elem(&mut rng);
            let f_alpha = eval(&Poly::Sparse(f.clone()), &k, &alpha);
            assert_eq!(eval_mod_p_sparse(&p, &f, &one, &k, &alpha).unwrap(), f_alpha);
            assert_eq!(eval_mod_p_dense(&p, &f.to_dense(), &one.to_dense(), &k, &alpha).unwrap(), f_alpha);
        }
    }
}
