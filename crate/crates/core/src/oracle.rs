//! Slow reference implementations.
//!
//! Nothing here calls into the fast evaluators or verifiers, nor into
//! [`crate::poly::mul_oracle`]: products are schoolbook and reductions are
//! plain long division, written out locally.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::instrument::record_poly_mul;
use crate::poly::{DensePoly, Poly, SparsePoly};
use crate::rings::{Matrix, Ring};

/// `(F·G) mod P` by schoolbook product and long division by the monic `P`.
/// The result is sparse when both factors are sparse.
pub fn oracle_mod_product<R: Ring>(f: &Poly<R>, g: &Poly<R>, p: &SparsePoly<R>) -> Result<Poly<R>> {
    check_monic(p)?;
    if f.ring() != g.ring() || f.ring() != p.ring() {
        return Err(Error::MixedRings);
    }
    let ring = f.ring();
    let prod = schoolbook_terms(ring, &f.to_sparse(), &g.to_sparse());
    let rem = long_division_remainder(ring, prod, p);
    let sparse = SparsePoly::new(ring.clone(), rem.into_iter().collect())?;
    Ok(if f.is_sparse() && g.is_sparse() { Poly::Sparse(sparse) } else { Poly::Dense(sparse.to_dense()) })
}

/// `H(C_R)` by Horner's scheme on explicit `k × k` matrices, with `C_R` the
/// companion matrix of the monic `R` (ones below the diagonal, last column
/// `−r_0, …, −r_{k−1}`).
pub fn oracle_matrix_eval<R: Ring>(h: &DensePoly<R>, r: &DensePoly<R>) -> Result<Matrix<R::Elem>> {
    if !r.is_monic() {
        return Err(Error::NotMonic);
    }
    let ring = h.ring();
    let k = r.deg().expect("monic");
    if k == 0 {
        return Err(Error::ConstantModulus);
    }
    let c = companion_matrix(ring, r.coeffs());
    let mut acc = Matrix::filled(k, ring.zero());
    for coeff in h.coeffs().iter().rev() {
        acc = naive_matmul(ring, &acc, &c);
        for i in 0..k {
            let v = ring.add(acc.get(i, i), coeff);
            acc.set(i, i, v);
        }
    }
    Ok(acc)
}

/// Whether the monic `B` divides `A`.
pub fn oracle_divides<R: Ring>(a: &Poly<R>, b: &Poly<R>) -> Result<bool> {
    let b = b.to_sparse();
    if b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    check_monic(&b)?;
    let ring = a.ring();
    let terms: BTreeMap<u64, R::Elem> = a.to_sparse().terms().iter().cloned().collect();
    Ok(long_division_remainder(ring, terms, &b).is_empty())
}

/// The explicit companion matrix of a monic coefficient vector.
pub fn companion_matrix<R: Ring>(ring: &R, r: &[R::Elem]) -> Matrix<R::Elem> {
    let k = r.len() - 1;
    let mut c = Matrix::filled(k, ring.zero());
    for i in 1..k {
        c.set(i, i - 1, ring.one());
    }
    for (i, ri) in r[..k].iter().enumerate() {
        c.set(i, k - 1, ring.neg(ri));
    }
    c
}

fn check_monic<R: Ring>(p: &SparsePoly<R>) -> Result<()> {
    match p.deg() {
        None => Err(Error::ZeroPolynomial),
        Some(_) if !p.is_monic() => Err(Error::NotMonic),
        Some(0) => Err(Error::ConstantModulus),
        Some(_) => Ok(()),
    }
}

fn schoolbook_terms<R: Ring>(ring: &R, f: &SparsePoly<R>, g: &SparsePoly<R>) -> BTreeMap<u64, R::Elem> {
    let mut out: BTreeMap<u64, R::Elem> = BTreeMap::new();
    if f.is_zero() || g.is_zero() {
        return out;
    }
    record_poly_mul();
    for (ea, ca) in f.terms() {
        for (eb, cb) in g.terms() {
            let term = ring.mul(ca, cb);
            let slot = out.entry(ea + eb).or_insert_with(|| ring.zero());
            *slot = ring.add(slot, &term);
        }
    }
    out.retain(|_, c| !ring.is_zero(c));
    out
}

/// Remainder of the term map modulo a monic `P`, eliminating the highest
/// term at each step.
fn long_division_remainder<R: Ring>(
    ring: &R,
    mut a: BTreeMap<u64, R::Elem>,
    p: &SparsePoly<R>,
) -> BTreeMap<u64, R::Elem> {
    let n = p.deg().expect("nonzero");
    while let Some((&e, _)) = a.last_key_value() {
        if e < n {
            break;
        }
        let c = a.remove(&e).expect("present");
        if ring.is_zero(&c) {
            continue;
        }
        for (k, pk) in p.lower_terms() {
            let idx = e - n + k;
            let slot = a.entry(idx).or_insert_with(|| ring.zero());
            *slot = ring.sub(slot, &ring.mul(&c, pk));
            if ring.is_zero(slot) {
                a.remove(&idx);
            }
        }
    }
    a
}

fn naive_matmul<R: Ring>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    let k = a.size();
    let mut out = Matrix::filled(k, ring.zero());
    for i in 0..k {
        for j in 0..k {
            let mut s = ring.zero();
            for t in 0..k {
                s = ring.add(&s, &ring.mul(a.get(i, t), b.get(t, j)));
            }
            out.set(i, j, s);
        }
    }
    out
}
