use num_bigint::BigUint;

use super::{biguint_ceil, check_epsilon, check_inputs, sparsity_precheck, verify_mod_in, VerifyConfig};
use crate::error::Result;
use crate::poly::{gap_info, Poly, SparsePoly};
use crate::report::{VerifyReport, Witness};
use crate::rings::{ln_biguint, random_prime, Fp64, FpBig, Integers, RngStream, WORD_MODULUS_LIMIT};

/// `Δ∞ = ‖H‖ + min(#F, #G)·‖F‖·‖G‖·(#P·‖P‖)^⌈1/γ⌉`, a bound on the
/// coefficients of `H − (F·G) mod P`.
///
/// The value can have `Θ(n)` digits; the verifier itself only needs its
/// logarithm.
pub fn delta_norm_bound(
    f: &Poly<Integers>,
    g: &Poly<Integers>,
    h: &Poly<Integers>,
    p: &SparsePoly<Integers>,
) -> Result<BigUint> {
    let c = gap_info(p)?.ceil_inv_gamma();
    let base = BigUint::from(p.sparsity()) * p.norm();
    let prod = BigUint::from(f.sparsity().min(g.sparsity())) * f.norm() * g.norm();
    Ok(h.norm() + prod * num_traits::pow::pow(base, c as usize))
}

/// An upper bound on `ln Δ∞` computed in floating point with an upward margin.
fn ln_delta_upper(f: &Poly<Integers>, g: &Poly<Integers>, h: &Poly<Integers>, p: &SparsePoly<Integers>) -> Result<f64> {
    let c = gap_info(p)?.ceil_inv_gamma() as f64;
    let (fnorm, gnorm, hnorm) = (f.norm(), g.norm(), h.norm());
    let ln_h = (hnorm.bits() > 0).then(|| ln_biguint(&hnorm));
    let ln_prod = (fnorm.bits() > 0 && gnorm.bits() > 0).then(|| {
        let base = BigUint::from(p.sparsity()) * p.norm();
        (f.sparsity().min(g.sparsity()) as f64).ln() + ln_biguint(&fnorm) + ln_biguint(&gnorm) + c * ln_biguint(&base)
    });
    let ln = match (ln_h, ln_prod) {
        (None, None) => return Ok(0.0),
        (Some(a), None) | (None, Some(a)) => a,
        (Some(a), Some(b)) => a.max(b) + std::f64::consts::LN_2,
    };
    Ok(ln * (1.0 + 1e-9) + 1e-9)
}

/// Verification over ℤ: all inputs are reduced modulo a random prime
/// `q ∈ [λ, 2λ]` large enough that `q` is unlikely to divide every
/// coefficient of a nonzero `H − (F·G) mod P`, then checked at a point of
/// `𝔽_q`. Each of the two stages gets half of `epsilon`.
pub fn verify_mod_over_z(
    f: &Poly<Integers>,
    g: &Poly<Integers>,
    h: &Poly<Integers>,
    p: &SparsePoly<Integers>,
    cfg: &VerifyConfig,
) -> Result<VerifyReport> {
    const METHOD: &str = "over-z";
    let epsilon = cfg.epsilon;
    check_epsilon(epsilon)?;
    let n = check_inputs(f, g, h, p)?;
    if let Some(reason) = sparsity_precheck(f, g, h, p)? {
        return Ok(VerifyReport::precheck(METHOD, reason));
    }
    let mut rng = RngStream::new(cfg.seed);
    let ln_delta = ln_delta_upper(f, g, h, p)?;
    let lambda =
        [BigUint::from(21u8), biguint_ceil(2.0 * n as f64 / epsilon), biguint_ceil(20.0 / (3.0 * epsilon) * ln_delta)]
            .into_iter()
            .max()
            .expect("nonempty");
    let q = random_prime(&lambda, epsilon / 2.0, &mut rng)?;
    let mut report = VerifyReport::new(METHOD, epsilon);
    report.witnesses.push(Witness::Prime { p: q.to_string() });
    let inner = if q < BigUint::from(WORD_MODULUS_LIMIT) {
        let field = Fp64::new(u64::try_from(&q).expect("below the word limit"))?;
        reduce_and_verify(f, g, h, p, &field, epsilon / 2.0, &mut rng)?
    } else {
        let field = FpBig::new(q)?;
        reduce_and_verify(f, g, h, p, &field, epsilon / 2.0, &mut rng)?
    };
    report.absorb(inner);
    Ok(report)
}

fn reduce_and_verify<K: crate::rings::FiniteField>(
    f: &Poly<Integers>,
    g: &Poly<Integers>,
    h: &Poly<Integers>,
    p: &SparsePoly<Integers>,
    field: &K,
    epsilon: f64,
    rng: &mut RngStream,
) -> Result<VerifyReport> {
    let red = |x: &Poly<Integers>| x.map(field, |c| field.from_int(c));
    let pq = p.map(field, |c| field.from_int(c));
    verify_mod_in(&red(f), &red(g), &red(h), &pq, field, epsilon, rng, "over-z")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::oracle_mod_product;
    use crate::poly::{mul_oracle, DensePoly};
    use num_bigint::BigInt;

    fn example1() -> (Poly<Integers>, Poly<Integers>) {
        let f = SparsePoly::from_i64s(Integers, &[(0, 2), (7, 2), (14, 1)]).unwrap();
        let g = SparsePoly::from_i64s(Integers, &[(0, 3), (8, 5), (13, 3)]).unwrap();
        (f.into(), g.into())
    }

    #[test]
    fn delta_bound_for_worked_example() {
        let (f, g) = example1();
        let p = SparsePoly::binomial(Integers, 15).unwrap();
        let h = oracle_mod_product(&f, &g, &p).unwrap();
        let hn = h.norm();
        assert_eq!(delta_norm_bound(&f, &g, &h, &p).unwrap(), hn + 60u32);
        let ln = ln_delta_upper(&f, &g, &h, &p).unwrap();
        assert!(ln >= (delta_norm_bound(&f, &g, &h, &p).unwrap().bits() as f64 - 1.0) * 2f64.ln());
    }

    #[test]
    fn accepts_truth_and_rejects_shifted_coefficient() {
        let (f, g) = example1();
        let p = SparsePoly::binomial(Integers, 15).unwrap();
        let h = oracle_mod_product(&f, &g, &p).unwrap();
        let bad = h.to_dense().add(&DensePoly::monomial(Integers, BigInt::from(1), 4)).unwrap().into();
        let mut accepted_bad = 0;
        for seed in 0..200 {
            let cfg = VerifyConfig::new(0.25, seed).unwrap();
            let r = verify_mod_over_z(&f, &g, &h, &p, &cfg).unwrap();
            assert!(r.verdict);
            assert!(matches!(r.witnesses[0], Witness::Prime { .. }));
            accepted_bad += verify_mod_over_z(&f, &g, &bad, &p, &cfg).unwrap().verdict as u32;
        }
        assert!(accepted_bad <= 60);
    }

    #[test]
    fn large_coefficients_use_big_prime() {
        let big = BigInt::from(1) << 400u32;
        let f: Poly<Integers> = DensePoly::new(Integers, vec![big.clone(), BigInt::from(1)]).into();
        let g: Poly<Integers> = DensePoly::new(Integers, vec![big, BigInt::from(-1)]).into();
        let p = SparsePoly::from_i64s(Integers, &[(0, 1), (3, 1)]).unwrap();
        let h = mul_oracle(&f, &g).unwrap();
        let cfg = VerifyConfig::new(1e-16, 5).unwrap();
        let r = verify_mod_over_z(&f, &g, &h, &p, &cfg).unwrap();
        assert!(r.verdict);
        let Witness::Prime { p: q } = &r.witnesses[0] else { panic!() };
        assert!(q.parse::<BigUint>().unwrap().bits() > 64);
    }
}
