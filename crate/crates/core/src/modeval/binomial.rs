//! The binomial modulus `X^n − 1`, where `f^[j]_{n−1} = f_{n−1−j}` needs no
//! precomputation.

use super::{check_below, Point, PointOps};
use crate::error::Result;
use crate::poly::{eval_dense, DensePoly, SparsePoly};
use crate::rings::{Algebra, Ring};

/// `((F·G) mod (X^n − 1))(α)` in `O(n)` operations.
///
/// `c_j = ((X^j·F) mod (X^n − 1))(α)` satisfies `c_0 = F(α)` and
/// `c_j = α·c_{j−1} − (α^n − 1)·f_{n−j}`; the result is `Σ g_j·c_j`.
pub fn eval_mod_binomial_dense<R: Ring, A: Algebra<R>>(
    f: &DensePoly<R>,
    g: &DensePoly<R>,
    n: u64,
    alg: &A,
    alpha: &A::Elem,
) -> Result<A::Elem> {
    check_below(n, &[f.deg().map(|d| d as u64), g.deg().map(|d| d as u64)])?;
    if g.is_zero() {
        return Ok(alg.zero());
    }
    let n = n as usize;
    let p_alpha = alg.sub(&alg.pow(alpha, n as u64), &alg.one());
    let mut c = eval_dense(f, alg, alpha);
    let mut beta = alg.scale(&c, &g.coeffs()[0]);
    for (j, gj) in g.coeffs().iter().enumerate().skip(1) {
        let lead = f.coeff(n - j);
        c = alg.sub(&alg.mul(alpha, &c), &alg.scale(&p_alpha, &lead));
        if !f.ring().is_zero(gj) {
            beta = alg.add(&beta, &alg.scale(&c, gj));
        }
    }
    Ok(beta)
}

/// `((F·G) mod (X^n − 1))(α)` in `O((#F + #G)·log n)` operations.
///
/// Only the `c_j` with `j ∈ supp(G)` are computed. Between consecutive
/// support points `j < j + D`,
/// `c_{j+D} = α^D·c_j − (α^n − 1)·Σ_{t=1..D} α^{D−t}·f_{n−j−t}`,
/// and each term of `F` enters exactly one of these windows.
pub fn eval_mod_binomial_sparse<R: Ring, A: Algebra<R>>(
    f: &SparsePoly<R>,
    g: &SparsePoly<R>,
    n: u64,
    alg: &A,
    alpha: &A::Elem,
) -> Result<A::Elem> {
    check_below(n, &[f.deg(), g.deg()])?;
    let Some((j0, g0)) = g.terms().first() else {
        return Ok(alg.zero());
    };
    let ops = Point { alg, alpha };
    let p_alpha = alg.sub(&ops.alpha_pow(n), &alg.one());

    // c_{j0} = Σ f_e α^{(e + j0) mod n}
    let mut c =
        f.terms().iter().fold(alg.zero(), |acc, (e, fe)| alg.add(&acc, &alg.scale(&ops.alpha_pow((e + j0) % n), fe)));
    let mut beta = alg.scale(&c, g0);
    let fterms = f.terms();
    let mut prev = *j0;
    for (j, gj) in &g.terms()[1..] {
        let d = j - prev;
        // F exponents e = n − prev − t with 1 ≤ t ≤ D, i.e. e ∈ [n − j, n − prev − 1].
        let lo = fterms.partition_point(|t| t.0 < n - j);
        let hi = fterms.partition_point(|t| t.0 < n - prev);
        let mut window = alg.zero();
        for (e, fe) in &fterms[lo..hi] {
            let t = n - prev - e;
            window = alg.add(&window, &alg.scale(&ops.alpha_pow(d - t), fe));
        }
        c = alg.sub(&ops.times_alpha_pow(&c, d), &alg.mul(&p_alpha, &window));
        beta = alg.add(&beta, &alg.scale(&c, gj));
        prev = *j;
    }
    Ok(beta)
}
