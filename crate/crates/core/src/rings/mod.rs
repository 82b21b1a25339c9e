//! Coefficient domains.
//!
//! A [`Ring`] is a value describing the domain (the modulus of a prime field,
//! the defining polynomial of an extension); elements are plain data and every
//! operation goes through the ring value. [`Algebra`] connects a base ring to
//! a ring its polynomials can be evaluated in: every ring is an algebra over
//! itself, an extension field is an algebra over its prime field, and the
//! companion-matrix algebra is an algebra over its field.

mod ctx;
mod ext_field;
mod integers;
mod irreducible;
mod matrix;
mod prime_field;
mod primes;
mod rng;
pub(crate) mod vecpoly;

use std::fmt::Debug;

use num_bigint::{BigInt, BigUint};

use crate::error::Result;

pub use ctx::RingCtx;
pub use ext_field::ExtField;
pub use integers::Integers;
pub use irreducible::{is_irreducible, random_irreducible, random_monic};
pub use matrix::{Matrix, MatrixAlgebra};
pub use prime_field::{Fp64, FpBig, WORD_MODULUS_LIMIT};
pub use primes::{is_probable_prime, is_probable_prime_with, miller_rabin_rounds, random_prime};
pub use rng::RngStream;

/// A commutative ring with identity.
pub trait Ring: Clone + PartialEq + Debug {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Multiplicative inverse. Fails on zero and on non-units.
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    /// Image of an integer under the canonical map ℤ → ring.
    fn from_int(&self, n: &BigInt) -> Self::Elem;

    /// Human-readable rendering used in reports.
    fn render(&self, a: &Self::Elem) -> String;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_int(&BigInt::from(n))
    }

    /// `Σ a_i b_i`. Rings with cheap lazy reduction override this.
    fn dot(&self, a: &[Self::Elem], b: &[Self::Elem]) -> Self::Elem {
        a.iter().zip(b).fold(self.zero(), |acc, (x, y)| self.add(&acc, &self.mul(x, y)))
    }

    /// `a^e` by square-and-multiply.
    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// A ring with finitely many elements that can be sampled uniformly.
pub trait FiniteField: Ring {
    fn order(&self) -> BigUint;
    fn random_elem(&self, rng: &mut RngStream) -> Self::Elem;
}

/// 𝔽_q for a (probable) prime q.
pub trait PrimeField: FiniteField {
    fn modulus(&self) -> BigUint;
    fn to_biguint(&self, a: &Self::Elem) -> BigUint;
    fn from_biguint(&self, n: &BigUint) -> Self::Elem;
}

/// A ring `A` together with a ring homomorphism `R → A`.
///
/// `scale` is multiplication of an `A` element by the image of an `R` element;
/// implementations make it cheaper than a full product where they can.
pub trait Algebra<R: Ring>: Ring {
    fn embed(&self, c: &R::Elem) -> Self::Elem;

    fn scale(&self, a: &Self::Elem, c: &R::Elem) -> Self::Elem {
        self.mul(a, &self.embed(c))
    }
}

impl<R: Ring> Algebra<R> for R {
    fn embed(&self, c: &R::Elem) -> R::Elem {
        c.clone()
    }

    fn scale(&self, a: &R::Elem, c: &R::Elem) -> R::Elem {
        self.mul(a, c)
    }
}

/// Natural logarithm of a big unsigned integer; `ln 0` is reported as 0.
pub(crate) fn ln_biguint(n: &BigUint) -> f64 {
    let bits = n.bits();
    if bits == 0 {
        return 0.0;
    }
    if bits <= 1000 {
        let f: f64 = num_traits::ToPrimitive::to_f64(n).unwrap_or(f64::MAX);
        return f.ln();
    }
    let shift = bits - 64;
    let top: f64 = num_traits::ToPrimitive::to_f64(&(n >> shift)).unwrap_or(f64::MAX);
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Smallest `d ≥ 1` with `q^d ≥ threshold`.
pub(crate) fn min_degree_for_size(q: &BigUint, threshold: &BigUint) -> u32 {
    let mut d = 1u32;
    let mut size = q.clone();
    while &size < threshold {
        size *= q;
        d += 1;
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn ln_of_large_values() {
        let n = BigUint::one() << 5000u32;
        let expected = 5000.0 * std::f64::consts::LN_2;
        assert!((ln_biguint(&n) - expected).abs() < 1e-6 * expected);
        assert_eq!(ln_biguint(&BigUint::from(0u8)), 0.0);
        assert!((ln_biguint(&BigUint::from(1000u32)) - 1000f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn minimal_extension_degree() {
        // 2^10 = 1024 >= 792 > 512 = 2^9
        assert_eq!(min_degree_for_size(&BigUint::from(2u8), &BigUint::from(792u32)), 10);
        assert_eq!(min_degree_for_size(&BigUint::from(101u8), &BigUint::from(50u32)), 1);
    }
}
