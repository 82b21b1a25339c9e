//! Reduction modulo a monic sparse polynomial and modulo `X^i − 1`.

use super::{merge_sorted, mul_sparse, same_ring, DensePoly, Poly, SparsePoly};
use crate::error::{Error, Result};
use crate::rings::Ring;

/// Remainder of `Q` modulo the monic `P`, in the representation of `Q`.
///
/// With `n = deg P`, each step replaces `Q` by `(Q mod X^n) + (Q quo X^n)·(X^n − P)`,
/// which lowers the degree by at least `n − k` for `k` the second degree of `P`.
/// Sparse inputs apply the step to all high terms at once; dense inputs apply
/// it one coefficient at a time from the top.
pub fn mod_reduce<R: Ring>(q: &Poly<R>, p: &SparsePoly<R>) -> Result<Poly<R>> {
    check_modulus(p)?;
    same_ring(q.ring(), p.ring())?;
    Ok(match q {
        Poly::Dense(d) => Poly::Dense(reduce_dense(d, p)),
        Poly::Sparse(s) => Poly::Sparse(reduce_sparse(s, p)?),
    })
}

pub(crate) fn check_modulus<R: Ring>(p: &SparsePoly<R>) -> Result<u64> {
    let n = p.degree()?;
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    if n == 0 {
        return Err(Error::ConstantModulus);
    }
    Ok(n)
}

fn reduce_dense<R: Ring>(q: &DensePoly<R>, p: &SparsePoly<R>) -> DensePoly<R> {
    let ring = q.ring();
    let n = p.deg().expect("checked") as usize;
    if q.coeffs().len() <= n {
        return q.clone();
    }
    let mut c = q.coeffs().to_vec();
    let tail = p.lower_terms();
    for e in (n..c.len()).rev() {
        if ring.is_zero(&c[e]) {
            continue;
        }
        let top = std::mem::replace(&mut c[e], ring.zero());
        let shift = e - n;
        for (k, pk) in tail {
            let idx = shift + *k as usize;
            c[idx] = ring.sub(&c[idx], &ring.mul(&top, pk));
        }
    }
    c.truncate(n);
    DensePoly::new(ring.clone(), c)
}

fn reduce_sparse<R: Ring>(q: &SparsePoly<R>, p: &SparsePoly<R>) -> Result<SparsePoly<R>> {
    let ring = q.ring();
    let n = p.deg().expect("checked");
    // X^n − P
    let tail = SparsePoly::new(ring.clone(), p.lower_terms().iter().map(|(e, c)| (*e, ring.neg(c))).collect())?;
    let mut cur = q.clone();
    loop {
        let split = cur.terms().partition_point(|t| t.0 < n);
        if split == cur.sparsity() {
            return Ok(cur);
        }
        let (lo, hi) = cur.terms().split_at(split);
        let lo = SparsePoly::new(ring.clone(), lo.to_vec())?;
        let quo = SparsePoly::new(ring.clone(), hi.iter().map(|(e, c)| (e - n, c.clone())).collect())?;
        cur = lo.add(&mul_sparse(&quo, &tail)?)?;
    }
}

/// `F mod (X^i − 1)`: every exponent `e` becomes `e mod i`.
pub fn reduce_mod_binomial<R: Ring>(f: &Poly<R>, i: u64) -> Result<Poly<R>> {
    Ok(match f {
        Poly::Dense(d) => Poly::Dense(fold_dense(d, i)?),
        Poly::Sparse(s) => Poly::Sparse(fold_sparse(s, i)?),
    })
}

pub fn fold_dense<R: Ring>(f: &DensePoly<R>, i: u64) -> Result<DensePoly<R>> {
    if i == 0 {
        return Err(Error::param("cannot fold modulo X^0 − 1"));
    }
    let ring = f.ring();
    let len = (f.coeffs().len() as u64).min(i) as usize;
    let mut out = vec![ring.zero(); len];
    for (e, c) in f.coeffs().iter().enumerate() {
        let slot = (e as u64 % i) as usize;
        out[slot] = ring.add(&out[slot], c);
    }
    Ok(DensePoly::new(ring.clone(), out))
}

pub fn fold_sparse<R: Ring>(f: &SparsePoly<R>, i: u64) -> Result<SparsePoly<R>> {
    if i == 0 {
        return Err(Error::param("cannot fold modulo X^0 − 1"));
    }
    let ring = f.ring();
    let mut terms: Vec<(u64, R::Elem)> = f.terms().iter().map(|(e, c)| (e % i, c.clone())).collect();
    terms.sort_by_key(|t| t.0);
    SparsePoly::new(ring.clone(), merge_sorted(ring, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{Fp64, Integers};
    use num_bigint::BigUint;

    fn z_sparse(terms: &[(u64, i64)]) -> SparsePoly<Integers> {
        SparsePoly::from_i64s(Integers, terms).unwrap()
    }

    #[test]
    fn worked_reduction() {
        let p = z_sparse(&[(0, 3), (56, 1), (59, -8), (61, 2), (65, 7), (80, 1)]);
        let q = z_sparse(&[(32, 5), (71, 1), (80, -3), (108, -3), (118, 8), (120, 4), (131, 1)]);
        let r = mod_reduce(&Poly::Sparse(q.clone()), &p).unwrap();
        assert_eq!(r.degree(), Ok(79));
        assert_eq!(r.sparsity(), 53);
        assert_eq!(r.norm(), BigUint::from(11912u32));
        let rd = mod_reduce(&Poly::Dense(q.to_dense()), &p).unwrap();
        assert!(rd.same_as(&r));
    }

    #[test]
    fn small_cases() {
        let p = SparsePoly::binomial(Integers, 2).unwrap();
        let x5 = Poly::Sparse(z_sparse(&[(5, 1)]));
        assert!(mod_reduce(&x5, &p).unwrap().same_as(&Poly::Sparse(z_sparse(&[(1, 1)]))));
        let low = Poly::Sparse(z_sparse(&[(0, 4), (1, 1)]));
        assert_eq!(mod_reduce(&low, &p).unwrap(), low);
        let not_monic = z_sparse(&[(0, 1), (2, 2)]);
        assert_eq!(mod_reduce(&low, &not_monic), Err(Error::NotMonic));
    }

    #[test]
    fn folding() {
        let f = Poly::Sparse(z_sparse(&[(0, 2), (7, 2), (14, 1)]));
        let folded = reduce_mod_binomial(&f, 7).unwrap();
        assert_eq!(folded, Poly::Sparse(z_sparse(&[(0, 5)])));
        let via_reduce = mod_reduce(&f, &SparsePoly::binomial(Integers, 7).unwrap()).unwrap();
        assert!(via_reduce.same_as(&folded));
        assert!(reduce_mod_binomial(&f, 0).is_err());

        let c = Poly::Dense(DensePoly::from_i64s(Integers, &[9]));
        assert_eq!(reduce_mod_binomial(&c, 3).unwrap(), c);

        let f5 = Fp64::new(5).unwrap();
        let b = SparsePoly::binomial(f5, 11).unwrap();
        assert!(fold_sparse(&b, 11).unwrap().is_zero());
        assert!(fold_dense(&b.to_dense(), 11).unwrap().is_zero());
    }
}
