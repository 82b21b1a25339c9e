use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use super::KaminskiParams;
use crate::error::Result;
use crate::modverify::{check_epsilon, VerifyConfig};
use crate::poly::{DensePoly, Poly};
use crate::report::{VerifyReport, Witness};
use crate::rings::{Integers, RngStream};

/// `x mod 2^i − 1`, by summing the `i`-bit chunks of `x` with end-around
/// carry. The result lies in `[0, 2^i − 1)`.
pub fn int_fold(x: &BigUint, i: u64) -> BigUint {
    assert!(i > 0, "fold width must be positive");
    let mask = (BigUint::one() << i) - 1u32;
    let mut acc = x.clone();
    while acc.bits() > i {
        acc = chunk_sum(&acc, i);
    }
    if acc == mask {
        BigUint::zero()
    } else {
        acc
    }
}

fn chunk_sum(x: &BigUint, i: u64) -> BigUint {
    let limbs = x.to_u64_digits();
    let words = i.div_ceil(64) as usize;
    let mut sum = BigUint::zero();
    let mut start = 0u64;
    while start < x.bits() {
        let mut chunk = Vec::with_capacity(words);
        for w in 0..words as u64 {
            let pos = start + 64 * w;
            let (k, r) = ((pos / 64) as usize, pos % 64);
            let lo = limbs.get(k).copied().unwrap_or(0) >> r;
            let hi = if r == 0 { 0 } else { limbs.get(k + 1).copied().unwrap_or(0) << (64 - r) };
            let take = (i - 64 * w).min(64);
            let m = if take == 64 { u64::MAX } else { (1u64 << take) - 1 };
            chunk.push((lo | hi) & m);
        }
        sum += BigUint::new(chunk.iter().flat_map(|&w| [w as u32, (w >> 32) as u32]).collect());
        start += i;
    }
    sum
}

/// Verifies `a·b = c` by comparing residues modulo random `2^i − 1`, with
/// `i` drawn from `[s^{1−e}, 2s^{1−e})` for `s` the larger bit length of the
/// factors. Signs and bit lengths are checked first; below
/// [`KaminskiParams::n_min`] bits the product is compared exactly.
pub fn verify_int_product(
    a: &BigInt,
    b: &BigInt,
    c: &BigInt,
    params: &KaminskiParams,
    cfg: &VerifyConfig,
) -> Result<VerifyReport> {
    const METHOD: &str = "int-product";
    check_epsilon(cfg.epsilon)?;
    let sign = match (a.sign(), b.sign()) {
        (Sign::NoSign, _) | (_, Sign::NoSign) => Sign::NoSign,
        (x, y) if x == y => Sign::Plus,
        _ => Sign::Minus,
    };
    if c.sign() != sign {
        return Ok(VerifyReport::precheck(METHOD, "sign of c differs from sign of a·b"));
    }
    if sign == Sign::NoSign {
        return Ok(VerifyReport::deterministic(METHOD, true, "a factor is zero"));
    }
    let (a, b, c) = (a.magnitude(), b.magnitude(), c.magnitude());
    if c.bits() > a.bits() + b.bits() {
        return Ok(VerifyReport::precheck(
            METHOD,
            format!("c has {} bits, more than {} + {}", c.bits(), a.bits(), b.bits()),
        ));
    }
    let s = a.bits().max(b.bits());
    let Some((rounds, bound)) = params.plan(s, cfg.epsilon, 0.0) else {
        let reason = format!("s = {s} bits is below n_min = {}", params.n_min());
        return Ok(VerifyReport::deterministic(METHOD, a * b == *c, reason));
    };
    let (lo, hi) = params.range(s);
    let mut rng = RngStream::new(cfg.seed);
    let mut report = VerifyReport::new(METHOD, bound);
    for _ in 0..rounds {
        let i = rng.range(lo, hi);
        report.rounds += 1;
        report.witnesses.push(Witness::Fold { i: i.to_string() });
        if int_fold(&(int_fold(a, i) * int_fold(b, i)), i) != int_fold(c, i) {
            return Ok(report.reject());
        }
    }
    Ok(report)
}

/// Bit width `b` of the evaluation point `2^b`: the least `b` with
/// `2^b > 2(nC² + C)`, where `n` is the number of coefficients of the longer
/// factor and `C` the largest norm among `F`, `G`, `H`.
pub fn kronecker_base_bits(n: u64, c: &BigUint) -> u64 {
    let bound = (BigUint::from(n) * c * c + c) * 2u32;
    bound.bits().max(1)
}

/// `f(2^b)`, assembled by placing each `|coefficient| < 2^b` at bit offset
/// `k·b` in a positive and a negative accumulator.
pub fn kronecker_pack(f: &DensePoly<Integers>, b: u64) -> BigInt {
    let len = (f.coeffs().len() as u64 * b).div_ceil(64) as usize + 1;
    let (mut pos, mut neg) = (vec![0u64; len], vec![0u64; len]);
    for (k, c) in f.coeffs().iter().enumerate() {
        let out = match c.sign() {
            Sign::NoSign => continue,
            Sign::Plus => &mut pos,
            Sign::Minus => &mut neg,
        };
        assert!(c.magnitude().bits() <= b, "coefficient wider than the base");
        place(out, k as u64 * b, c.magnitude());
    }
    let to_int =
        |v: Vec<u64>| BigInt::from(BigUint::new(v.iter().flat_map(|&w| [w as u32, (w >> 32) as u32]).collect()));
    to_int(pos) - to_int(neg)
}

fn place(out: &mut [u64], offset: u64, x: &BigUint) {
    let (k, r) = ((offset / 64) as usize, offset % 64);
    for (j, w) in x.iter_u64_digits().enumerate() {
        out[k + j] |= w << r;
        if r != 0 {
            out[k + j + 1] |= w >> (64 - r);
        }
    }
}

/// Verification over ℤ through Kronecker substitution: `H = F·G` exactly
/// when `H(2^b) = F(2^b)·G(2^b)` for `b` from [`kronecker_base_bits`], which
/// is then checked by [`verify_int_product`].
pub fn verify_product_kronecker(
    f: &Poly<Integers>,
    g: &Poly<Integers>,
    h: &Poly<Integers>,
    params: &KaminskiParams,
    cfg: &VerifyConfig,
) -> Result<VerifyReport> {
    const METHOD: &str = "kronecker";
    check_epsilon(cfg.epsilon)?;
    let (f, g, h) = (f.to_dense(), g.to_dense(), h.to_dense());
    if let (Some(df), Some(dg), Some(dh)) = (f.deg(), g.deg(), h.deg()) {
        if dh > df + dg {
            return Ok(VerifyReport::precheck(METHOD, format!("deg H = {dh} exceeds deg F + deg G = {}", df + dg)));
        }
    }
    let n = f.coeffs().len().max(g.coeffs().len()) as u64;
    let c = [f.norm(), g.norm(), h.norm()].into_iter().max().expect("nonempty");
    let b = kronecker_base_bits(n, &c);
    let (a, bb, cc) = (kronecker_pack(&f, b), kronecker_pack(&g, b), kronecker_pack(&h, b));
    let mut report = verify_int_product(&a, &bb, &cc, params, cfg)?;
    report.method = METHOD.to_string();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{mul_oracle, SparsePoly};
    use num_traits::Num;

    #[test]
    fn folding_matches_remainder() {
        let mut rng = RngStream::new(1);
        for i in [1u64, 3, 17, 63, 64, 65, 130] {
            let m = (BigUint::one() << i) - 1u32;
            for bits in [0u64, 5, 64, 200, 1000] {
                let x = rng.below_big(&(BigUint::one() << bits).max(BigUint::one()));
                assert_eq!(int_fold(&x, i), &x % &m, "i = {i}, bits = {bits}");
            }
            assert_eq!(int_fold(&m, i), BigUint::zero());
        }
    }

    #[test]
    fn packing_evaluates_at_power_of_two() {
        let f = DensePoly::from_i64s(Integers, &[-3, 0, 7, -1]);
        let b = 5;
        let expected = BigInt::from(-3) + BigInt::from(7) * 1024 - BigInt::from(1) * (1 << 15);
        assert_eq!(kronecker_pack(&f, b), expected);
        // 2(nC² + C) = 2(3·4 + 2) = 28 < 32
        assert_eq!(kronecker_base_bits(3, &BigUint::from(2u8)), 5);
    }

    #[test]
    fn integer_products() {
        let p = KaminskiParams::default();
        let cfg = VerifyConfig::new(0.25, 3).unwrap();
        let one = BigInt::from(1);
        assert!(!verify_int_product(&one, &one, &BigInt::from(2), &p, &cfg).unwrap().verdict);
        let a = BigInt::from_str_radix("123456789012345678901234567890", 10).unwrap();
        let b = -BigInt::from_str_radix("987654321098765432109876543210", 10).unwrap();
        assert!(verify_int_product(&a, &b, &(&a * &b), &p, &cfg).unwrap().verdict);
        assert!(!verify_int_product(&a, &b, &-(&a * &b), &p, &cfg).unwrap().verdict);
        let forced = p.with_rounds(8);
        let r = verify_int_product(&a, &b, &(&a * &b), &forced, &cfg).unwrap();
        assert!(r.verdict && r.rounds == 8);
        let off = &a * &b - (BigInt::one() << 40u32);
        assert!(!verify_int_product(&a, &b, &off, &forced, &cfg).unwrap().verdict);
    }

    #[test]
    fn example_one_by_kronecker() {
        let f: Poly<Integers> = SparsePoly::from_i64s(Integers, &[(0, 2), (7, 2), (14, 1)]).unwrap().into();
        let g: Poly<Integers> = SparsePoly::from_i64s(Integers, &[(0, 3), (8, 5), (13, 3)]).unwrap().into();
        let h = mul_oracle(&f, &g).unwrap();
        let p = KaminskiParams::default();
        let cfg = VerifyConfig::new(0.25, 0).unwrap();
        assert!(verify_product_kronecker(&f, &g, &h, &p, &cfg).unwrap().verdict);
        let bad = h.to_dense().add(&DensePoly::from_i64s(Integers, &[1])).unwrap().into();
        assert!(!verify_product_kronecker(&f, &g, &bad, &p, &cfg).unwrap().verdict);
        let neg = h.to_dense().neg().into();
        assert!(!verify_product_kronecker(&f, &g, &neg, &p, &cfg).unwrap().verdict);
    }
}
