use std::sync::Arc;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{FiniteField, PrimeField, Ring, RngStream};
use crate::error::{Error, Result};

/// Moduli below this bound use [`Fp64`]; larger ones use [`FpBig`].
pub const WORD_MODULUS_LIMIT: u64 = 1 << 63;

/// 𝔽_q for a word-sized modulus `q < 2^63`, elements stored as `u64` in `[0, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp64 {
    q: u64,
}

impl Fp64 {
    pub fn new(q: u64) -> Result<Self> {
        if !(2..WORD_MODULUS_LIMIT).contains(&q) {
            return Err(Error::param(format!("word modulus must lie in [2, 2^63), got {q}")));
        }
        Ok(Self { q })
    }

    pub fn q(&self) -> u64 {
        self.q
    }
}

impl Ring for Fp64 {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.q
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.q - b
        }
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.q - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.q as u128) as u64
    }

    fn inv(&self, a: &u64) -> Result<u64> {
        let (mut r0, mut r1) = (self.q as i128, *a as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let t = r0 / r1;
            (r0, r1) = (r1, r0 - t * r1);
            (s0, s1) = (s1, s0 - t * s1);
        }
        if r0 != 1 {
            return Err(Error::NotInvertible);
        }
        Ok(s0.rem_euclid(self.q as i128) as u64)
    }

    fn from_int(&self, n: &BigInt) -> u64 {
        n.mod_floor(&BigInt::from(self.q)).to_u64().expect("residue fits")
    }

    fn from_i64(&self, n: i64) -> u64 {
        (n as i128).rem_euclid(self.q as i128) as u64
    }

    fn render(&self, a: &u64) -> String {
        a.to_string()
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn dot(&self, a: &[u64], b: &[u64]) -> u64 {
        // Products are below 2^126, so two of them never overflow the
        // accumulator once it is kept below 2^127.
        let q = self.q as u128;
        let mut acc: u128 = 0;
        for (x, y) in a.iter().zip(b) {
            acc += *x as u128 * *y as u128;
            if acc >= 1 << 127 {
                acc %= q;
            }
        }
        (acc % q) as u64
    }
}

impl FiniteField for Fp64 {
    fn order(&self) -> BigUint {
        BigUint::from(self.q)
    }

    fn random_elem(&self, rng: &mut RngStream) -> u64 {
        rng.below(self.q)
    }
}

impl PrimeField for Fp64 {
    fn modulus(&self) -> BigUint {
        BigUint::from(self.q)
    }

    fn to_biguint(&self, a: &u64) -> BigUint {
        BigUint::from(*a)
    }

    fn from_biguint(&self, n: &BigUint) -> u64 {
        (n % self.q).to_u64().expect("residue fits")
    }
}

/// 𝔽_q for an arbitrary modulus, elements stored as `BigUint` in `[0, q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpBig {
    q: Arc<BigUint>,
}

impl FpBig {
    pub fn new(q: BigUint) -> Result<Self> {
        if q < BigUint::from(2u8) {
            return Err(Error::param(format!("modulus must be at least 2, got {q}")));
        }
        Ok(Self { q: Arc::new(q) })
    }

    pub fn q(&self) -> &BigUint {
        &self.q
    }
}

impl Ring for FpBig {
    type Elem = BigUint;

    fn zero(&self) -> BigUint {
        BigUint::zero()
    }

    fn one(&self) -> BigUint {
        BigUint::one() % &*self.q
    }

    fn add(&self, a: &BigUint, b: &BigUint) -> BigUint {
        let s = a + b;
        if s >= *self.q {
            s - &*self.q
        } else {
            s
        }
    }

    fn sub(&self, a: &BigUint, b: &BigUint) -> BigUint {
        if a >= b {
            a - b
        } else {
            a + &*self.q - b
        }
    }

    fn neg(&self, a: &BigUint) -> BigUint {
        if a.is_zero() {
            BigUint::zero()
        } else {
            &*self.q - a
        }
    }

    fn mul(&self, a: &BigUint, b: &BigUint) -> BigUint {
        (a * b) % &*self.q
    }

    fn inv(&self, a: &BigUint) -> Result<BigUint> {
        let q = BigInt::from_biguint(Sign::Plus, (*self.q).clone());
        let x = BigInt::from_biguint(Sign::Plus, a.clone());
        let g = x.extended_gcd(&q);
        if !g.gcd.is_one() {
            return Err(Error::NotInvertible);
        }
        Ok(g.x.mod_floor(&q).to_biguint().expect("nonnegative"))
    }

    fn from_int(&self, n: &BigInt) -> BigUint {
        let q = BigInt::from_biguint(Sign::Plus, (*self.q).clone());
        n.mod_floor(&q).to_biguint().expect("nonnegative")
    }

    fn render(&self, a: &BigUint) -> String {
        a.to_string()
    }

    fn is_zero(&self, a: &BigUint) -> bool {
        a.is_zero()
    }

    fn dot(&self, a: &[BigUint], b: &[BigUint]) -> BigUint {
        let acc: BigUint = a.iter().zip(b).map(|(x, y)| x * y).sum();
        acc % &*self.q
    }
}

impl FiniteField for FpBig {
    fn order(&self) -> BigUint {
        (*self.q).clone()
    }

    fn random_elem(&self, rng: &mut RngStream) -> BigUint {
        rng.below_big(&self.q)
    }
}

impl PrimeField for FpBig {
    fn modulus(&self) -> BigUint {
        (*self.q).clone()
    }

    fn to_biguint(&self, a: &BigUint) -> BigUint {
        a.clone()
    }

    fn from_biguint(&self, n: &BigUint) -> BigUint {
        n % &*self.q
    }
}
