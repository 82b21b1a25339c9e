use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Ring;
use crate::error::{Error, Result};

/// The integers ℤ with exact arbitrary-precision arithmetic.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn inv(&self, a: &BigInt) -> Result<BigInt> {
        if a.abs().is_one() {
            Ok(a.clone())
        } else {
            Err(Error::NotInvertible)
        }
    }

    fn from_int(&self, n: &BigInt) -> BigInt {
        n.clone()
    }

    fn render(&self, a: &BigInt) -> String {
        a.to_string()
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_big_products() {
        let z = Integers;
        let a = BigInt::one() << 64u32;
        assert_eq!(z.mul(&a, &a), BigInt::one() << 128u32);
    }

    #[test]
    fn only_units_invert() {
        let z = Integers;
        assert_eq!(z.inv(&BigInt::from(-1)).unwrap(), BigInt::from(-1));
        assert_eq!(z.inv(&BigInt::from(2)), Err(Error::NotInvertible));
        assert_eq!(z.inv(&BigInt::zero()), Err(Error::NotInvertible));
    }
}
