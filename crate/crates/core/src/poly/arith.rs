//! Reference multiplication.

use super::{merge_sorted, same_ring, DensePoly, Poly, SparsePoly, MAX_EXPONENT};
use crate::error::{Error, Result};
use crate::instrument::record_poly_mul;
use crate::rings::Ring;

/// Operand length below which dense products use the schoolbook method.
pub const KARATSUBA_THRESHOLD: usize = 32;

/// Exact product. Two sparse operands give a sparse product; otherwise both
/// are densified.
pub fn mul_oracle<R: Ring>(f: &Poly<R>, g: &Poly<R>) -> Result<Poly<R>> {
    match (f, g) {
        (Poly::Sparse(a), Poly::Sparse(b)) => mul_sparse(a, b).map(Poly::Sparse),
        _ => mul_dense(&f.to_dense(), &g.to_dense()).map(Poly::Dense),
    }
}

/// Dense product: schoolbook below [`KARATSUBA_THRESHOLD`], Karatsuba above.
pub fn mul_dense<R: Ring>(f: &DensePoly<R>, g: &DensePoly<R>) -> Result<DensePoly<R>> {
    same_ring(f.ring(), g.ring())?;
    let ring = f.ring();
    if f.is_zero() || g.is_zero() {
        return Ok(DensePoly::zero(ring.clone()));
    }
    record_poly_mul();
    let coeffs = karatsuba(ring, f.coeffs(), g.coeffs());
    Ok(DensePoly::new(ring.clone(), coeffs))
}

/// Sparse product: all `#F·#G` term products, sorted and merged.
pub fn mul_sparse<R: Ring>(f: &SparsePoly<R>, g: &SparsePoly<R>) -> Result<SparsePoly<R>> {
    same_ring(f.ring(), g.ring())?;
    let ring = f.ring();
    if f.is_zero() || g.is_zero() {
        return Ok(SparsePoly::zero(ring.clone()));
    }
    record_poly_mul();
    let top = f.deg().unwrap_or(0) as u128 + g.deg().unwrap_or(0) as u128;
    if top > MAX_EXPONENT as u128 {
        return Err(Error::ExponentOverflow(top));
    }
    let mut terms = Vec::with_capacity(f.sparsity() * g.sparsity());
    for (ea, ca) in f.terms() {
        for (eb, cb) in g.terms() {
            terms.push((ea + eb, ring.mul(ca, cb)));
        }
    }
    terms.sort_by_key(|t| t.0);
    let terms = merge_sorted(ring, terms);
    SparsePoly::new(ring.clone(), terms)
}

fn schoolbook<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    let mut out = vec![ring.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if ring.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = ring.add(&out[i + j], &ring.mul(x, y));
        }
    }
    out
}

/// Product of two nonempty coefficient slices, of length `a.len() + b.len() − 1`.
fn karatsuba<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    let (a, b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    if b.len() < KARATSUBA_THRESHOLD {
        return schoolbook(ring, a, b);
    }
    if a.len() >= 2 * b.len() {
        // Unbalanced: multiply b by consecutive chunks of a.
        let mut out = vec![ring.zero(); a.len() + b.len() - 1];
        for (idx, chunk) in a.chunks(b.len()).enumerate() {
            let part = karatsuba(ring, chunk, b);
            add_into(ring, &mut out[idx * b.len()..], &part);
        }
        return out;
    }
    let m = a.len() / 2;
    let (a0, a1) = a.split_at(m);
    let (b0, b1) = b.split_at(m.min(b.len()));
    let z0 = karatsuba(ring, a0, b0);
    let z2 = if b1.is_empty() { Vec::new() } else { karatsuba(ring, a1, b1) };
    let sa = sum_slices(ring, a0, a1);
    let sb = sum_slices(ring, b0, b1);
    let mut z1 = karatsuba(ring, &sa, &sb);
    sub_from(ring, &mut z1, &z0);
    sub_from(ring, &mut z1, &z2);

    let mut out = vec![ring.zero(); a.len() + b.len() - 1];
    add_into(ring, &mut out, &z0);
    add_into(ring, &mut out[m..], &z1);
    if !z2.is_empty() {
        add_into(ring, &mut out[2 * m..], &z2);
    }
    out
}

fn sum_slices<R: Ring>(ring: &R, lo: &[R::Elem], hi: &[R::Elem]) -> Vec<R::Elem> {
    let (long, short) = if lo.len() >= hi.len() { (lo, hi) } else { (hi, lo) };
    let mut out = long.to_vec();
    add_into(ring, &mut out, short);
    out
}

fn add_into<R: Ring>(ring: &R, dst: &mut [R::Elem], src: &[R::Elem]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d = ring.add(d, s);
    }
}

// Entries of `src` past the end of `dst` are zero by construction.
fn sub_from<R: Ring>(ring: &R, dst: &mut [R::Elem], src: &[R::Elem]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d = ring.sub(d, s);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{Fp64, Integers, RngStream};

    fn example_f() -> SparsePoly<Integers> {
        SparsePoly::from_i64s(Integers, &[(0, 2), (7, 2), (14, 1)]).unwrap()
    }

    #[test]
    fn worked_products() {
        let f = example_f();
        let g = SparsePoly::from_i64s(Integers, &[(0, 3), (8, 5), (13, 3)]).unwrap();
        let h = SparsePoly::from_i64s(Integers, &[(0, 2), (7, -2), (14, 1)]).unwrap();
        let fg = SparsePoly::from_i64s(
            Integers,
            &[(0, 6), (7, 6), (8, 10), (13, 6), (14, 3), (15, 10), (20, 6), (22, 5), (27, 3)],
        )
        .unwrap();
        assert_eq!(mul_sparse(&f, &g).unwrap(), fg);
        let fh = SparsePoly::from_i64s(Integers, &[(0, 4), (28, 1)]).unwrap();
        assert_eq!(mul_sparse(&f, &h).unwrap(), fh);
        assert_eq!(mul_dense(&f.to_dense(), &h.to_dense()).unwrap(), fh.to_dense());
    }

    #[test]
    fn zero_factor() {
        let f = example_f();
        let zero = SparsePoly::zero(Integers);
        assert!(mul_sparse(&f, &zero).unwrap().is_zero());
        assert!(mul_oracle(&Poly::Dense(zero.to_dense()), &Poly::Sparse(f)).unwrap().is_zero());
    }

    #[test]
    fn karatsuba_matches_schoolbook() {
        let field = Fp64::new(65537).unwrap();
        let mut rng = RngStream::new(3);
        for (la, lb) in [(1, 1), (31, 33), (32, 32), (100, 37), (257, 64), (64, 300), (513, 512)] {
            let a: Vec<u64> = (0..la).map(|_| rng.below(65537)).collect();
            let b: Vec<u64> = (0..lb).map(|_| rng.below(65537)).collect();
            assert_eq!(karatsuba(&field, &a, &b), schoolbook(&field, &a, &b), "{la}x{lb}");
        }
    }

    #[test]
    fn exponent_overflow() {
        let big = SparsePoly::from_i64s(Integers, &[(MAX_EXPONENT - 1, 1)]).unwrap();
        assert!(matches!(mul_sparse(&big, &big), Err(Error::ExponentOverflow(_))));
    }
}
