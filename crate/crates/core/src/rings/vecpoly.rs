//! Coefficient-vector helpers shared by extension fields and the
//! irreducibility test. Index = degree; vectors are kept trimmed.

use num_bigint::BigUint;

use super::Ring;
use crate::error::{Error, Result};
use crate::instrument::record_poly_mul;

pub(crate) fn trim<R: Ring>(ring: &R, v: &mut Vec<R::Elem>) {
    while v.last().is_some_and(|c| ring.is_zero(c)) {
        v.pop();
    }
}

/// Schoolbook product of two coefficient vectors.
pub(crate) fn mul<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    record_poly_mul();
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

/// Remainder of `a` modulo the monic vector `m`, in place; the result is
/// trimmed.
pub(crate) fn rem_monic_in_place<R: Ring>(ring: &R, a: &mut Vec<R::Elem>, m: &[R::Elem]) {
    let d = m.len() - 1;
    while a.len() > d {
        let top = a.pop().expect("nonempty");
        if ring.is_zero(&top) {
            continue;
        }
        let shift = a.len() - d;
        for (j, mj) in m[..d].iter().enumerate() {
            a[shift + j] = ring.sub(&a[shift + j], &ring.mul(&top, mj));
        }
    }
    trim(ring, a);
}

pub(crate) fn mulmod<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem], m: &[R::Elem]) -> Vec<R::Elem> {
    let mut p = mul(ring, a, b);
    rem_monic_in_place(ring, &mut p, m);
    p
}

/// `a^e mod m` for a monic `m`.
pub(crate) fn powmod<R: Ring>(ring: &R, a: &[R::Elem], e: &BigUint, m: &[R::Elem]) -> Vec<R::Elem> {
    let mut acc = vec![ring.one()];
    rem_monic_in_place(ring, &mut acc, m);
    let mut base = a.to_vec();
    rem_monic_in_place(ring, &mut base, m);
    for i in (0..e.bits()).rev() {
        acc = mulmod(ring, &acc, &acc, m);
        if e.bit(i) {
            acc = mulmod(ring, &acc, &base, m);
        }
    }
    acc
}

/// Division with remainder over a field.
pub(crate) fn divrem<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Result<(Vec<R::Elem>, Vec<R::Elem>)> {
    let lead_inv = ring.inv(b.last().ok_or(Error::ZeroPolynomial)?)?;
    let mut r = a.to_vec();
    trim(ring, &mut r);
    if r.len() < b.len() {
        return Ok((Vec::new(), r));
    }
    let mut q = vec![ring.zero(); r.len() - b.len() + 1];
    let db = b.len() - 1;
    while r.len() > db {
        let top = r.pop().expect("nonempty");
        if ring.is_zero(&top) {
            continue;
        }
        let c = ring.mul(&top, &lead_inv);
        let shift = r.len() - db;
        q[shift] = c.clone();
        for (j, bj) in b[..db].iter().enumerate() {
            r[shift + j] = ring.sub(&r[shift + j], &ring.mul(&c, bj));
        }
    }
    trim(ring, &mut r);
    trim(ring, &mut q);
    Ok((q, r))
}

/// Monic gcd over a field.
pub(crate) fn gcd<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Result<Vec<R::Elem>> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(ring, &mut x);
    trim(ring, &mut y);
    while !y.is_empty() {
        let (_, r) = divrem(ring, &x, &y)?;
        x = std::mem::replace(&mut y, r);
    }
    make_monic(ring, &mut x)?;
    Ok(x)
}

pub(crate) fn make_monic<R: Ring>(ring: &R, v: &mut [R::Elem]) -> Result<()> {
    if let Some(lead) = v.last() {
        let inv = ring.inv(lead)?;
        for c in v.iter_mut() {
            *c = ring.mul(c, &inv);
        }
    }
    Ok(())
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm.
pub(crate) fn inv_mod<R: Ring>(ring: &R, a: &[R::Elem], m: &[R::Elem]) -> Result<Vec<R::Elem>> {
    // Invariant: s_i * a ≡ r_i (mod m).
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    trim(ring, &mut r1);
    let mut s0: Vec<R::Elem> = Vec::new();
    let mut s1 = vec![ring.one()];
    while !r1.is_empty() {
        let (q, r) = divrem(ring, &r0, &r1)?;
        let qs = mul(ring, &q, &s1);
        let s = sub(ring, &s0, &qs);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if r0.len() != 1 {
        return Err(Error::NotInvertible);
    }
    let c = ring.inv(&r0[0])?;
    let mut out: Vec<R::Elem> = s0.iter().map(|x| ring.mul(x, &c)).collect();
    rem_monic_in_place(ring, &mut out, m);
    Ok(out)
}

pub(crate) fn sub<R: Ring>(ring: &R, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
    let n = a.len().max(b.len());
    let zero = ring.zero();
    let mut out: Vec<R::Elem> =
        (0..n).map(|i| ring.sub(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero))).collect();
    trim(ring, &mut out);
    out
}
