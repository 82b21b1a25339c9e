//! Univariate polynomials in dense and sparse representation.
//!
//! Both representations carry their coefficient ring. The zero polynomial is
//! the empty coefficient vector or term list, and has no degree:
//! [`DensePoly::degree`] and [`SparsePoly::degree`] return
//! [`Error::ZeroPolynomial`] for it.

mod arith;
mod eval;
mod gap;
mod reduce;
pub mod text;

use num_bigint::{BigInt, BigUint};
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::rings::{Integers, Ring};

pub use arith::{mul_dense, mul_oracle, mul_sparse, KARATSUBA_THRESHOLD};
pub use eval::{eval, eval_dense, eval_sparse};
pub use gap::{gap_info, norm_bound, product_norm_bound, sparsity_bound, GapInfo};
pub use reduce::{fold_dense, fold_sparse, mod_reduce, reduce_mod_binomial};

/// Largest exponent a sparse polynomial may carry.
pub const MAX_EXPONENT: u64 = (1 << 63) - 1;

/// Coefficient vector, index = degree, with no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct DensePoly<R: Ring> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

impl<R: Ring> DensePoly<R> {
    /// Builds a polynomial from low-to-high coefficients, dropping trailing zeros.
    pub fn new(ring: R, mut coeffs: Vec<R::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| ring.is_zero(c)) {
            coeffs.pop();
        }
        Self { ring, coeffs }
    }

    pub fn from_i64s(ring: R, coeffs: &[i64]) -> Self {
        let c = coeffs.iter().map(|&x| ring.from_i64(x)).collect();
        Self::new(ring, c)
    }

    pub fn zero(ring: R) -> Self {
        Self { ring, coeffs: Vec::new() }
    }

    pub fn one(ring: R) -> Self {
        let one = ring.one();
        Self::new(ring, vec![one])
    }

    /// `c·X^e`.
    pub fn monomial(ring: R, c: R::Elem, e: usize) -> Self {
        let mut coeffs = vec![ring.zero(); e];
        coeffs.push(c);
        Self::new(ring, coeffs)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R::Elem> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Result<u64> {
        self.deg().map(|d| d as u64).ok_or(Error::ZeroPolynomial)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `X^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> R::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn leading(&self) -> Option<&R::Elem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(&self.ring.one())
    }

    /// Number of nonzero coefficients.
    pub fn sparsity(&self) -> usize {
        self.coeffs.iter().filter(|c| !self.ring.is_zero(c)).count()
    }

    pub fn to_sparse(&self) -> SparsePoly<R> {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.ring.is_zero(c))
            .map(|(i, c)| (i as u64, c.clone()))
            .collect();
        SparsePoly { ring: self.ring.clone(), terms }
    }

    /// Coefficient-wise image in another ring, e.g. reduction ℤ → 𝔽_q.
    pub fn map<S: Ring>(&self, ring: &S, f: impl Fn(&R::Elem) -> S::Elem) -> DensePoly<S> {
        DensePoly::new(ring.clone(), self.coeffs.iter().map(f).collect())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |r, a, b| r.add(a, b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |r, a, b| r.sub(a, b))
    }

    pub fn neg(&self) -> Self {
        self.map(&self.ring, |c| self.ring.neg(c))
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        self.map(&self.ring, |x| self.ring.mul(x, c))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&R, &R::Elem, &R::Elem) -> R::Elem) -> Result<Self> {
        same_ring(&self.ring, &other.ring)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = self.ring.zero();
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&zero);
                let b = other.coeffs.get(i).unwrap_or(&zero);
                f(&self.ring, a, b)
            })
            .collect();
        Ok(Self::new(self.ring.clone(), coeffs))
    }
}

impl DensePoly<Integers> {
    /// Height `‖F‖`: the largest absolute value of a coefficient.
    pub fn norm(&self) -> BigUint {
        max_abs(self.coeffs.iter())
    }
}

/// Strictly increasing `(exponent, nonzero coefficient)` pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct SparsePoly<R: Ring> {
    ring: R,
    terms: Vec<(u64, R::Elem)>,
}

impl<R: Ring> SparsePoly<R> {
    /// Builds a polynomial from terms with strictly increasing exponents.
    /// Zero coefficients are dropped.
    pub fn new(ring: R, terms: Vec<(u64, R::Elem)>) -> Result<Self> {
        for w in terms.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(Error::param(format!(
                    "exponents must be strictly increasing ({} then {})",
                    w[0].0, w[1].0
                )));
            }
        }
        if let Some((e, _)) = terms.last() {
            if *e > MAX_EXPONENT {
                return Err(Error::ExponentOverflow(*e as u128));
            }
        }
        let terms = terms.into_iter().filter(|(_, c)| !ring.is_zero(c)).collect();
        Ok(Self { ring, terms })
    }

    /// Builds a polynomial from terms in any order, summing repeated exponents.
    pub fn from_unsorted(ring: R, mut terms: Vec<(u64, R::Elem)>) -> Result<Self> {
        if let Some(e) = terms.iter().map(|t| t.0).find(|&e| e > MAX_EXPONENT) {
            return Err(Error::ExponentOverflow(e as u128));
        }
        terms.sort_by_key(|t| t.0);
        let terms = merge_sorted(&ring, terms);
        Ok(Self { ring, terms })
    }

    pub fn from_i64s(ring: R, terms: &[(u64, i64)]) -> Result<Self> {
        let t = terms.iter().map(|&(e, c)| (e, ring.from_i64(c))).collect();
        Self::from_unsorted(ring, t)
    }

    pub fn zero(ring: R) -> Self {
        Self { ring, terms: Vec::new() }
    }

    /// `c·X^e`.
    pub fn monomial(ring: R, c: R::Elem, e: u64) -> Result<Self> {
        Self::new(ring, vec![(e, c)])
    }

    /// `X^n − 1`.
    pub fn binomial(ring: R, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ConstantModulus);
        }
        let (one, minus_one) = (ring.one(), ring.neg(&ring.one()));
        Self::new(ring, vec![(0, minus_one), (n, one)])
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn terms(&self) -> &[(u64, R::Elem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(u64, R::Elem)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `#F`, the number of nonzero terms.
    pub fn sparsity(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> Result<u64> {
        self.deg().ok_or(Error::ZeroPolynomial)
    }

    pub fn deg(&self) -> Option<u64> {
        self.terms.last().map(|t| t.0)
    }

    pub fn support(&self) -> impl Iterator<Item = u64> + '_ {
        self.terms.iter().map(|t| t.0)
    }

    pub fn coeff(&self, e: u64) -> R::Elem {
        match self.terms.binary_search_by_key(&e, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => self.ring.zero(),
        }
    }

    pub fn leading(&self) -> Option<&R::Elem> {
        self.terms.last().map(|t| &t.1)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(&self.ring.one())
    }

    /// All terms but the leading one.
    pub fn lower_terms(&self) -> &[(u64, R::Elem)] {
        &self.terms[..self.terms.len().saturating_sub(1)]
    }

    pub fn to_dense(&self) -> DensePoly<R> {
        let len = self.deg().map_or(0, |d| d as usize + 1);
        let mut coeffs = vec![self.ring.zero(); len];
        for (e, c) in &self.terms {
            coeffs[*e as usize] = c.clone();
        }
        DensePoly { ring: self.ring.clone(), coeffs }
    }

    pub fn map<S: Ring>(&self, ring: &S, f: impl Fn(&R::Elem) -> S::Elem) -> SparsePoly<S> {
        let terms = self.terms.iter().map(|(e, c)| (*e, f(c))).filter(|(_, c)| !ring.is_zero(c)).collect();
        SparsePoly { ring: ring.clone(), terms }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        same_ring(&self.ring, &other.ring)?;
        Ok(self.merge(&other.terms, |c| c.clone()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        same_ring(&self.ring, &other.ring)?;
        Ok(self.merge(&other.terms, |c| self.ring.neg(c)))
    }

    pub fn neg(&self) -> Self {
        self.map(&self.ring, |c| self.ring.neg(c))
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        self.map(&self.ring, |x| self.ring.mul(x, c))
    }

    fn merge(&self, other: &[(u64, R::Elem)], sign: impl Fn(&R::Elem) -> R::Elem) -> Self {
        let ring = &self.ring;
        let mut out = Vec::with_capacity(self.terms.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.len() {
            let a = self.terms.get(i);
            let b = other.get(j);
            match (a, b) {
                (Some((ea, ca)), Some((eb, _))) if ea < eb => {
                    out.push((*ea, ca.clone()));
                    i += 1;
                }
                (Some((ea, ca)), Some((eb, cb))) if ea == eb => {
                    let c = ring.add(ca, &sign(cb));
                    if !ring.is_zero(&c) {
                        out.push((*ea, c));
                    }
                    i += 1;
                    j += 1;
                }
                (Some((ea, ca)), None) => {
                    out.push((*ea, ca.clone()));
                    i += 1;
                }
                (_, Some((eb, cb))) => {
                    out.push((*eb, sign(cb)));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Self { ring: ring.clone(), terms: out }
    }
}

impl SparsePoly<Integers> {
    /// Height `‖F‖`: the largest absolute value of a coefficient.
    pub fn norm(&self) -> BigUint {
        max_abs(self.terms.iter().map(|t| &t.1))
    }
}

/// A polynomial in either representation.
#[derive(Clone, Debug, PartialEq)]
pub enum Poly<R: Ring> {
    Dense(DensePoly<R>),
    Sparse(SparsePoly<R>),
}

impl<R: Ring> Poly<R> {
    pub fn ring(&self) -> &R {
        match self {
            Poly::Dense(p) => p.ring(),
            Poly::Sparse(p) => p.ring(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Poly::Dense(p) => p.is_zero(),
            Poly::Sparse(p) => p.is_zero(),
        }
    }

    pub fn is_sparse(&self) -> bool {
        matches!(self, Poly::Sparse(_))
    }

    pub fn degree(&self) -> Result<u64> {
        self.deg().ok_or(Error::ZeroPolynomial)
    }

    pub fn deg(&self) -> Option<u64> {
        match self {
            Poly::Dense(p) => p.deg().map(|d| d as u64),
            Poly::Sparse(p) => p.deg(),
        }
    }

    pub fn sparsity(&self) -> usize {
        match self {
            Poly::Dense(p) => p.sparsity(),
            Poly::Sparse(p) => p.sparsity(),
        }
    }

    pub fn to_sparse(&self) -> SparsePoly<R> {
        match self {
            Poly::Dense(p) => p.to_sparse(),
            Poly::Sparse(p) => p.clone(),
        }
    }

    pub fn to_dense(&self) -> DensePoly<R> {
        match self {
            Poly::Dense(p) => p.clone(),
            Poly::Sparse(p) => p.to_dense(),
        }
    }

    pub fn map<S: Ring>(&self, ring: &S, f: impl Fn(&R::Elem) -> S::Elem) -> Poly<S> {
        match self {
            Poly::Dense(p) => Poly::Dense(p.map(ring, f)),
            Poly::Sparse(p) => Poly::Sparse(p.map(ring, f)),
        }
    }

    /// Equality of the underlying polynomials, ignoring representation.
    pub fn same_as(&self, other: &Self) -> bool {
        match (self, other) {
            (Poly::Dense(a), Poly::Dense(b)) => a == b,
            _ => self.to_sparse() == other.to_sparse(),
        }
    }
}

impl Poly<Integers> {
    pub fn norm(&self) -> BigUint {
        match self {
            Poly::Dense(p) => p.norm(),
            Poly::Sparse(p) => p.norm(),
        }
    }
}

impl<R: Ring> From<DensePoly<R>> for Poly<R> {
    fn from(p: DensePoly<R>) -> Self {
        Poly::Dense(p)
    }
}

impl<R: Ring> From<SparsePoly<R>> for Poly<R> {
    fn from(p: SparsePoly<R>) -> Self {
        Poly::Sparse(p)
    }
}

pub(crate) fn same_ring<R: Ring>(a: &R, b: &R) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::MixedRings)
    }
}

/// Sums runs of equal exponents in an exponent-sorted list and drops zeros.
pub(crate) fn merge_sorted<R: Ring>(ring: &R, terms: Vec<(u64, R::Elem)>) -> Vec<(u64, R::Elem)> {
    let mut out: Vec<(u64, R::Elem)> = Vec::with_capacity(terms.len());
    for (e, c) in terms {
        match out.last_mut() {
            Some((le, lc)) if *le == e => *lc = ring.add(lc, &c),
            _ => {
                if out.last().is_some_and(|(_, lc)| ring.is_zero(lc)) {
                    out.pop();
                }
                out.push((e, c));
            }
        }
    }
    if out.last().is_some_and(|(_, lc)| ring.is_zero(lc)) {
        out.pop();
    }
    out
}

fn max_abs<'a>(coeffs: impl Iterator<Item = &'a BigInt>) -> BigUint {
    coeffs.map(|c| c.abs().to_biguint().expect("nonnegative")).max().unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::Fp64;

    #[test]
    fn dense_normalizes() {
        let z = Integers;
        let p = DensePoly::from_i64s(z, &[1, 2, 0, 0]);
        assert_eq!(p.degree(), Ok(1));
        assert!(DensePoly::from_i64s(z, &[0, 0]).is_zero());
        assert_eq!(DensePoly::zero(z).degree(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn sparse_validation() {
        let z = Integers;
        assert!(SparsePoly::from_i64s(z, &[(3, 1), (1, 2)]).is_ok());
        let bad = vec![(3, BigInt::from(1)), (1, BigInt::from(2))];
        assert!(SparsePoly::new(z, bad).is_err());
        let merged = SparsePoly::from_i64s(z, &[(2, 1), (2, -1), (5, 3)]).unwrap();
        assert_eq!(merged.terms(), &[(5, BigInt::from(3))]);
        let over = vec![(MAX_EXPONENT + 1, BigInt::from(1))];
        assert_eq!(SparsePoly::new(z, over), Err(Error::ExponentOverflow(1 << 63)));
    }

    #[test]
    fn representations_agree() {
        let f7 = Fp64::new(7).unwrap();
        let d = DensePoly::from_i64s(f7, &[0, 3, 0, 0, 6]);
        let s = d.to_sparse();
        assert_eq!(s.terms(), &[(1, 3), (4, 6)]);
        assert_eq!(s.to_dense(), d);
        assert!(Poly::Dense(d).same_as(&Poly::Sparse(s)));
    }

    #[test]
    fn sparse_arithmetic() {
        let z = Integers;
        let a = SparsePoly::from_i64s(z, &[(0, 1), (10, 2)]).unwrap();
        let b = SparsePoly::from_i64s(z, &[(10, 2), (20, 1)]).unwrap();
        let diff = a.sub(&b).unwrap();
        assert_eq!(diff, SparsePoly::from_i64s(z, &[(0, 1), (20, -1)]).unwrap());
        assert_eq!(a.add(&a.neg()).unwrap(), SparsePoly::zero(z));
        assert_eq!(a.norm(), BigUint::from(2u8));
    }

    #[test]
    fn mixed_rings_rejected() {
        let a = DensePoly::from_i64s(Fp64::new(5).unwrap(), &[1]);
        let b = DensePoly::from_i64s(Fp64::new(7).unwrap(), &[1]);
        assert_eq!(a.add(&b), Err(Error::MixedRings));
    }
}
