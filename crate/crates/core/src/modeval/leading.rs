//! Leading coefficients `f^[i]_{n−1}` of `F^[i] = (X^i·F) mod P`.
//!
//! With `L_i = f^[i]_{n−1}`, unrolling `F^[i+1] = X·F^[i] − L_i·P` gives
//! `L_i = f_{n−1−i} − Σ_{t<i} L_t·p_{n−i+t}`: the term `p_k` of `P` feeds
//! `L_t` forward into `L_{t+n−k}`.

use super::{check_operands, SparseIndexMap};
use crate::error::Result;
use crate::poly::{DensePoly, SparsePoly};
use crate::rings::Ring;

/// `[L_0, …, L_{n−2}]` in `O(n·#P)` operations.
pub fn leading_coefficients<R: Ring>(p: &SparsePoly<R>, f: &DensePoly<R>) -> Result<Vec<R::Elem>> {
    let n = check_operands(p, &[f.deg().map(|d| d as u64)])? as usize;
    let ring = f.ring();
    let len = n - 1;
    let mut v: Vec<R::Elem> = (0..len).map(|i| f.coeff(n - 1 - i)).collect();
    let tail = p.lower_terms();
    for t in 0..len {
        if ring.is_zero(&v[t]) {
            continue;
        }
        let lt = v[t].clone();
        // Target t + n − k ≤ n − 2 requires k ≥ t + 2; the tail is sorted ascending.
        for (k, pk) in tail.iter().rev() {
            let k = *k as usize;
            if k < t + 2 {
                break;
            }
            let idx = t + n - k;
            v[idx] = ring.sub(&v[idx], &ring.mul(pk, &lt));
        }
    }
    Ok(v)
}

/// The nonzero pairs `(i, L_i)` for `0 ≤ i ≤ n − 2`, ascending in `i`.
///
/// Pending contributions are kept in a [`SparseIndexMap`]; the smallest index
/// is final when extracted, and entries that cancel to zero are removed at
/// once.
pub fn sparse_leading_coefficients<R: Ring>(p: &SparsePoly<R>, f: &SparsePoly<R>) -> Result<Vec<(u64, R::Elem)>> {
    let n = check_operands(p, &[f.deg()])?;
    let ring = f.ring();
    let mut map = SparseIndexMap::new(n - 1);
    for (e, c) in f.terms() {
        // L_{n−1−e} starts at f_e; e = 0 would land on index n − 1.
        if *e >= 1 {
            map.insert(n - 1 - e, c.clone());
        }
    }
    let tail = p.lower_terms();
    let mut out = Vec::new();
    while let Some((t, lt)) = map.extract_min() {
        for (k, pk) in tail.iter().rev() {
            if *k < t + 2 {
                break;
            }
            let idx = t + n - k;
            let delta = ring.mul(pk, &lt);
            match map.search_mut(idx) {
                Some(slot) => {
                    *slot = ring.sub(slot, &delta);
                    if ring.is_zero(slot) {
                        map.remove(idx);
                    }
                }
                None => {
                    map.insert(idx, ring.neg(&delta));
                }
            }
        }
        out.push((t, lt));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{mod_reduce, Poly};
    use crate::rings::{Fp64, Integers, RngStream};
    use num_bigint::BigInt;

    fn by_long_division<R: Ring>(p: &SparsePoly<R>, f: &DensePoly<R>) -> Vec<R::Elem> {
        let n = p.deg().unwrap() as usize;
        (0..n - 1)
            .map(|i| {
                let shifted = DensePoly::monomial(f.ring().clone(), f.ring().one(), i);
                let prod = crate::poly::mul_dense(&shifted, f).unwrap();
                mod_reduce(&Poly::Dense(prod), p).unwrap().to_dense().coeff(n - 1)
            })
            .collect()
    }

    #[test]
    fn worked_case_over_f2() {
        let f2 = Fp64::new(2).unwrap();
        let p = SparsePoly::from_i64s(f2, &[(0, 1), (1, 1), (4, 1)]).unwrap();
        let f = DensePoly::from_i64s(f2, &[1, 0, 0, 1]);
        // X·(1 + X^3) ≡ 1 mod X^4 + X + 1
        assert_eq!(leading_coefficients(&p, &f).unwrap(), vec![1, 0, 0]);
        assert_eq!(by_long_division(&p, &f), vec![1, 0, 0]);
        let sparse = sparse_leading_coefficients(&p, &f.to_sparse()).unwrap();
        assert_eq!(sparse, vec![(0, 1)]);
        let g = DensePoly::from_i64s(f2, &[0, 1, 1, 1]);
        assert_eq!(leading_coefficients(&p, &g).unwrap(), vec![1, 1, 1]);
        assert_eq!(by_long_division(&p, &g), vec![1, 1, 1]);
    }

    #[test]
    fn binomial_reverses_coefficients() {
        let z = Integers;
        let p = SparsePoly::binomial(z, 5).unwrap();
        let f = DensePoly::from_i64s(z, &[9, 1, 2, 3, 4]);
        let expected: Vec<BigInt> = [4, 3, 2, 1].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(leading_coefficients(&p, &f).unwrap(), expected);
        let one = DensePoly::from_i64s(z, &[1]);
        assert!(leading_coefficients(&p, &one).unwrap().iter().all(|c| *c == BigInt::from(0)));
        assert!(sparse_leading_coefficients(&p, &SparsePoly::zero(z)).unwrap().is_empty());
        assert!(sparse_leading_coefficients(&p, &f.to_sparse()).unwrap().len() <= f.sparsity());
    }

    #[test]
    fn sparse_matches_dense_and_long_division() {
        let q = 65537;
        let field = Fp64::new(q).unwrap();
        let mut rng = RngStream::new(4);
        for _ in 0..40 {
            let n = 2 + rng.below(60);
            let mut pt: Vec<(u64, u64)> = (0..rng.below(5)).map(|_| (rng.below(n), rng.below(q))).collect();
            pt.push((n, 1));
            let p = SparsePoly::from_unsorted(field, pt).unwrap();
            let ft: Vec<(u64, u64)> = (0..1 + rng.below(8)).map(|_| (rng.below(n), rng.below(q))).collect();
            let f = SparsePoly::from_unsorted(field, ft).unwrap();
            let dense = leading_coefficients(&p, &f.to_dense()).unwrap();
            assert_eq!(dense, by_long_division(&p, &f.to_dense()));
            let mut densified = vec![0; n as usize - 1];
            for (i, v) in sparse_leading_coefficients(&p, &f).unwrap() {
                assert_ne!(v, 0);
                densified[i as usize] = v;
            }
            assert_eq!(densified, dense);
        }
    }
}
