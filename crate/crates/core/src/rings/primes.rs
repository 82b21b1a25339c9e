//! Miller–Rabin testing and random primes in `[λ, 2λ]`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{ln_biguint, RngStream};
use crate::error::{Error, Result};

const SMALL_PRIMES: [u64; 25] =
    [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97];

// Fixed stream for `is_probable_prime`, which takes no RNG argument.
const DEFAULT_BASE_SEED: u64 = 0x6d69_6c6c_6572_7261;

/// Miller–Rabin rounds giving error at most `epsilon / 2`: `⌈log₂(2/ε)⌉`.
pub fn miller_rabin_rounds(epsilon: f64) -> u32 {
    ((2.0 / epsilon).log2().ceil() as u32).max(1)
}

/// Miller–Rabin with `rounds` random bases drawn from a fixed internal stream.
/// Primes are always accepted; a composite passes with probability at most
/// `4^-rounds`.
pub fn is_probable_prime(n: &BigUint, rounds: u32) -> bool {
    let low = n.iter_u64_digits().next().unwrap_or(0);
    let mut rng = RngStream::new(DEFAULT_BASE_SEED ^ low);
    is_probable_prime_with(n, rounds, &mut rng)
}

/// Miller–Rabin drawing its bases from `rng`.
pub fn is_probable_prime_with(n: &BigUint, rounds: u32, rng: &mut RngStream) -> bool {
    if let Some(small) = n.to_u64() {
        if small < 2 {
            return false;
        }
        for p in SMALL_PRIMES {
            if small == p {
                return true;
            }
            if small % p == 0 {
                return false;
            }
        }
        return (0..rounds).all(|_| {
            let a = rng.range(2, small - 1);
            witness_u64(small, a)
        });
    }
    if SMALL_PRIMES.iter().any(|&p| (n % p).is_zero()) {
        return false;
    }
    let two = BigUint::from(2u8);
    let bound = n - 3u8;
    (0..rounds).all(|_| {
        let a = rng.below_big(&bound) + &two;
        witness_big(n, &a)
    })
}

fn mulmod(a: u64, b: u64, n: u64) -> u64 {
    (a as u128 * b as u128 % n as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, n: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, n);
        }
        a = mulmod(a, a, n);
        e >>= 1;
    }
    acc
}

/// True when `a` does not witness the compositeness of odd `n`.
fn witness_u64(n: u64, a: u64) -> bool {
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    let mut x = powmod(a, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mulmod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

fn witness_big(n: &BigUint, a: &BigUint) -> bool {
    let n1 = n - 1u8;
    let s = n1.trailing_zeros().expect("n > 1");
    let d = &n1 >> s;
    let mut x = a.modpow(&d, n);
    if x.is_one() || x == n1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n1 {
            return true;
        }
    }
    false
}

/// An integer in `[λ, 2λ]` that is prime with probability at least `1 − ε`.
///
/// Candidates are uniform odd integers of the interval, each screened with
/// [`miller_rabin_rounds`]`(ε)` rounds. Fails with
/// [`Error::PrimeSearchExhausted`] after `64·⌈ln λ⌉` candidates.
pub fn random_prime(lambda: &BigUint, epsilon: f64, rng: &mut RngStream) -> Result<BigUint> {
    if *lambda < BigUint::from(21u8) {
        return Err(Error::param(format!("random_prime needs λ ≥ 21, got {lambda}")));
    }
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::param(format!("epsilon must lie in (0, 1), got {epsilon}")));
    }
    let rounds = miller_rabin_rounds(epsilon);
    let first = if lambda.is_odd() { lambda.clone() } else { lambda + 1u8 };
    let last: BigUint = (lambda << 1u8) - 1u8;
    let count: BigUint = ((&last - &first) >> 1u8) + 1u8;
    let attempts = 64 * ln_biguint(lambda).ceil() as u64;
    for _ in 0..attempts {
        let candidate = &first + (rng.below_big(&count) << 1u8);
        if is_probable_prime_with(&candidate, rounds, rng) {
            return Ok(candidate);
        }
    }
    Err(Error::PrimeSearchExhausted { lambda: lambda.to_string(), attempts })
}

#[cfg(test)]
mod tests {
    use super::*;

    // Deterministic for all n < 3.3e24 (bases are the first 13 primes).
    fn deterministic_prime(n: u64) -> bool {
        if n < 2 {
            return false;
        }
        for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
            if n.is_multiple_of(p) {
                return n == p;
            }
        }
        [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41].iter().all(|&a| witness_u64(n, a))
    }

    #[test]
    fn small_cases() {
        assert!(is_probable_prime(&BigUint::from(2u8), 10));
        assert!(!is_probable_prime(&BigUint::from(21u8), 10));
        assert!(!is_probable_prime(&BigUint::from(1u8), 10));
        assert!(!is_probable_prime(&BigUint::zero(), 10));
        assert!(is_probable_prime(&BigUint::from(101u8), 10));
    }

    #[test]
    fn mersenne_61() {
        let m = (1u64 << 61) - 1;
        assert!(deterministic_prime(m));
        assert!(is_probable_prime(&BigUint::from(m), 20));
    }

    #[test]
    fn agrees_with_trial_division_below_5000() {
        for n in 0u64..5000 {
            let trial = n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0);
            assert_eq!(is_probable_prime(&BigUint::from(n), 20), trial, "n = {n}");
        }
    }

    #[test]
    fn big_moduli() {
        let p = (BigUint::one() << 127u32) - 1u8;
        assert!(is_probable_prime(&p, 20));
        let q = (BigUint::one() << 128u32) - 159u8;
        assert!(is_probable_prime(&q, 20));
        assert!(!is_probable_prime(&(&p * &q), 20));
        // Carmichael number 561 = 3·11·17 and a large semiprime of Mersenne primes.
        assert!(!is_probable_prime(&BigUint::from(561u32), 20));
    }

    #[test]
    fn random_prime_ranges() {
        let mut rng = RngStream::new(0);
        let p = random_prime(&BigUint::from(21u8), 0.25, &mut rng).unwrap();
        assert!(p >= BigUint::from(21u8) && p <= BigUint::from(42u8));
        assert!(is_probable_prime(&p, 10));

        let mut rng = RngStream::new(1);
        let lambda = BigUint::from(1_000_000u32);
        let p = random_prime(&lambda, 2f64.powi(-20), &mut rng).unwrap();
        assert!(p >= lambda && p <= BigUint::from(2_000_000u32));
        assert!(deterministic_prime(p.to_u64().unwrap()));
    }

    #[test]
    fn random_prime_rejects_small_lambda() {
        let mut rng = RngStream::new(0);
        assert!(matches!(random_prime(&BigUint::from(20u8), 0.25, &mut rng), Err(Error::InvalidParameter(_))));
        assert!(random_prime(&BigUint::from(100u8), 0.0, &mut rng).is_err());
    }

    #[test]
    fn composite_rate_at_quarter() {
        let lambda = BigUint::from(1u64 << 40);
        let mut composite = 0;
        let trials = 2000;
        for seed in 0..trials {
            let mut rng = RngStream::new(seed);
            let p = random_prime(&lambda, 0.25, &mut rng).unwrap();
            let v = p.to_u64().unwrap();
            assert!((1 << 40..=1 << 41).contains(&v));
            if !deterministic_prime(v) {
                composite += 1;
            }
        }
        assert!(composite as f64 / trials as f64 <= 0.30);
    }

    #[test]
    fn rounds_formula() {
        assert_eq!(miller_rabin_rounds(0.25), 3);
        assert_eq!(miller_rabin_rounds(2f64.powi(-20)), 21);
    }
}
