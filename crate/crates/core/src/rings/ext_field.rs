use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use super::{vecpoly, Algebra, FiniteField, Ring, RngStream};
use crate::error::{Error, Result};
use crate::instrument::record_poly_mul;
use crate::poly::DensePoly;

/// `F[X]/(R)` for a monic `R` of degree `d ≥ 1`.
///
/// When `R` is irreducible this is the field 𝔽_{q^d}. Elements are coefficient
/// vectors of length exactly `d`. `R` produced by a Monte Carlo generator may
/// be reducible; the quotient is then still a ring, and only `inv` can fail.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtField<F: Ring> {
    base: F,
    modulus: Arc<Vec<F::Elem>>,
}

impl<F: Ring> ExtField<F> {
    pub fn new(modulus: &DensePoly<F>) -> Result<Self> {
        Self::from_coeffs(modulus.ring().clone(), modulus.coeffs().to_vec())
    }

    /// `modulus` lists coefficients from degree 0 up; it must be monic.
    pub fn from_coeffs(base: F, modulus: Vec<F::Elem>) -> Result<Self> {
        match modulus.last() {
            None => return Err(Error::ZeroPolynomial),
            Some(lead) if *lead != base.one() => return Err(Error::NotMonic),
            _ => {}
        }
        if modulus.len() < 2 {
            return Err(Error::ConstantModulus);
        }
        Ok(Self { base, modulus: Arc::new(modulus) })
    }

    pub fn base(&self) -> &F {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> DensePoly<F> {
        DensePoly::new(self.base.clone(), self.modulus.to_vec())
    }

    /// The element with the given low-to-high coefficients, reduced mod `R`.
    pub fn elem(&self, coeffs: &[F::Elem]) -> Vec<F::Elem> {
        let mut v = coeffs.to_vec();
        vecpoly::rem_monic_in_place(&self.base, &mut v, &self.modulus);
        self.pad(v)
    }

    /// The class of `X`.
    pub fn generator(&self) -> Vec<F::Elem> {
        self.elem(&[self.base.zero(), self.base.one()])
    }

    fn constant(&self, c: F::Elem) -> Vec<F::Elem> {
        let mut v = vec![self.base.zero(); self.degree()];
        v[0] = c;
        v
    }

    fn pad(&self, mut v: Vec<F::Elem>) -> Vec<F::Elem> {
        v.resize(self.degree(), self.base.zero());
        v
    }
}

impl<F: Ring> Ring for ExtField<F> {
    type Elem = Vec<F::Elem>;

    fn zero(&self) -> Vec<F::Elem> {
        vec![self.base.zero(); self.degree()]
    }

    fn one(&self) -> Vec<F::Elem> {
        self.constant(self.base.one())
    }

    fn add(&self, a: &Vec<F::Elem>, b: &Vec<F::Elem>) -> Vec<F::Elem> {
        a.iter().zip(b).map(|(x, y)| self.base.add(x, y)).collect()
    }

    fn sub(&self, a: &Vec<F::Elem>, b: &Vec<F::Elem>) -> Vec<F::Elem> {
        a.iter().zip(b).map(|(x, y)| self.base.sub(x, y)).collect()
    }

    fn neg(&self, a: &Vec<F::Elem>) -> Vec<F::Elem> {
        a.iter().map(|x| self.base.neg(x)).collect()
    }

    fn mul(&self, a: &Vec<F::Elem>, b: &Vec<F::Elem>) -> Vec<F::Elem> {
        record_poly_mul();
        let d = self.degree();
        let base = &self.base;
        let mut prod = vec![base.zero(); 2 * d - 1];
        for (i, x) in a.iter().enumerate() {
            if base.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                prod[i + j] = base.add(&prod[i + j], &base.mul(x, y));
            }
        }
        vecpoly::rem_monic_in_place(base, &mut prod, &self.modulus);
        self.pad(prod)
    }

    fn inv(&self, a: &Vec<F::Elem>) -> Result<Vec<F::Elem>> {
        let r = vecpoly::inv_mod(&self.base, a, &self.modulus)?;
        Ok(self.pad(r))
    }

    fn from_int(&self, n: &BigInt) -> Vec<F::Elem> {
        self.constant(self.base.from_int(n))
    }

    fn render(&self, a: &Vec<F::Elem>) -> String {
        let parts: Vec<String> = a.iter().map(|c| self.base.render(c)).collect();
        format!("[{}]", parts.join(","))
    }

    fn is_zero(&self, a: &Vec<F::Elem>) -> bool {
        a.iter().all(|c| self.base.is_zero(c))
    }
}

impl<F: FiniteField> FiniteField for ExtField<F> {
    fn order(&self) -> BigUint {
        let q = self.base.order();
        (0..self.degree()).fold(BigUint::one(), |acc, _| acc * &q)
    }

    fn random_elem(&self, rng: &mut RngStream) -> Vec<F::Elem> {
        (0..self.degree()).map(|_| self.base.random_elem(rng)).collect()
    }
}

impl<F: Ring> Algebra<F> for ExtField<F> {
    fn embed(&self, c: &F::Elem) -> Vec<F::Elem> {
        self.constant(c.clone())
    }

    fn scale(&self, a: &Vec<F::Elem>, c: &F::Elem) -> Vec<F::Elem> {
        a.iter().map(|x| self.base.mul(x, c)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::Fp64;

    fn gf4() -> ExtField<Fp64> {
        let f2 = Fp64::new(2).unwrap();
        ExtField::from_coeffs(f2, vec![1, 1, 1]).unwrap()
    }

    #[test]
    fn defining_relation() {
        let k = gf4();
        let x = k.generator();
        assert_eq!(k.mul(&x, &x), vec![1, 1]);
    }

    #[test]
    fn inverses_in_gf256() {
        let f2 = Fp64::new(2).unwrap();
        // X^8 + X^4 + X^3 + X + 1
        let k = ExtField::from_coeffs(f2, vec![1, 1, 0, 1, 1, 0, 0, 0, 1]).unwrap();
        let mut rng = RngStream::new(5);
        for _ in 0..100 {
            let a = k.random_elem(&mut rng);
            if k.is_zero(&a) {
                assert!(k.inv(&a).is_err());
                continue;
            }
            let b = k.inv(&a).unwrap();
            assert_eq!(k.mul(&a, &b), k.one());
        }
        assert_eq!(k.order(), BigUint::from(256u32));
    }

    #[test]
    fn reducible_modulus_has_non_units() {
        let f2 = Fp64::new(2).unwrap();
        // X^2 + 1 = (X + 1)^2 over 𝔽_2
        let k = ExtField::from_coeffs(f2, vec![1, 0, 1]).unwrap();
        assert_eq!(k.inv(&vec![1, 1]), Err(Error::NotInvertible));
    }

    #[test]
    fn constructor_checks() {
        let f5 = Fp64::new(5).unwrap();
        assert_eq!(ExtField::from_coeffs(f5, vec![2, 1]).map(|k| k.degree()), Ok(1));
        assert_eq!(ExtField::from_coeffs(f5, vec![1, 2, 3]), Err(Error::NotMonic));
        assert_eq!(ExtField::from_coeffs(f5, vec![1]), Err(Error::ConstantModulus));
        assert_eq!(ExtField::from_coeffs(f5, vec![]), Err(Error::ZeroPolynomial));
    }
}
