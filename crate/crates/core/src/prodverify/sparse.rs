use num_bigint::BigUint;
use rand::RngCore;

use crate::error::{Error, Result};
use crate::modverify::{check_epsilon, ModularDomain, VerifyConfig};
use crate::poly::{fold_sparse, SparsePoly};
use crate::report::{VerifyReport, Witness};
use crate::rings::{random_prime, RngStream};

/// Error split for [`verify_sparse_product`]: a random prime `p` fails to
/// separate a nonzero difference with probability at most `10ε₁/3`, and the
/// modular check modulo `X^p − 1` errs with probability at most `ε₂`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SparseVerifyParams {
    pub epsilon: f64,
    pub eps1: f64,
    pub eps2: f64,
}

impl SparseVerifyParams {
    /// `ε₁ = 3ε/20`, `ε₂ = ε/2`.
    pub fn new(epsilon: f64) -> Result<Self> {
        Self::with_split(epsilon, 3.0 * epsilon / 20.0, epsilon / 2.0)
    }

    pub fn with_split(epsilon: f64, eps1: f64, eps2: f64) -> Result<Self> {
        check_epsilon(epsilon)?;
        if !(eps1 > 0.0 && eps1 < 0.3) || !(eps2 > 0.0 && eps2 < 1.0) {
            return Err(Error::param(format!("invalid split ε₁ = {eps1}, ε₂ = {eps2}")));
        }
        let a = 10.0 * eps1 / 3.0;
        if a + (1.0 - a) * eps2 > epsilon * (1.0 + 1e-12) {
            return Err(Error::param(format!("split ε₁ = {eps1}, ε₂ = {eps2} exceeds ε = {epsilon}")));
        }
        Ok(Self { epsilon, eps1, eps2 })
    }

    /// `λ = max(21, ⌈(#F·#G + #H)·ln n / ε₁⌉)`, with `ln n` rounded up.
    pub fn lambda(&self, tf: usize, tg: usize, th: usize, n: u64) -> BigUint {
        let ln_n = if n < 2 { 0.0 } else { (n as f64).ln() * (1.0 + 1e-12) };
        let terms = (tf as f64) * (tg as f64) + th as f64;
        let raw = (terms * ln_n / self.eps1).ceil();
        BigUint::from(21u8).max(BigUint::from(raw as u128))
    }
}

/// Verification of a product of sparse polynomials: the exponents are
/// reduced modulo a random prime `p` and `H ≡ F·G (mod X^p − 1)` is checked by
/// [`ModularDomain::verify_mod_auto`].
pub fn verify_sparse_product<R: ModularDomain>(
    f: &SparsePoly<R>,
    g: &SparsePoly<R>,
    h: &SparsePoly<R>,
    params: &SparseVerifyParams,
    seed: u64,
) -> Result<VerifyReport> {
    const METHOD: &str = "sparse";
    let (df, dg) = match (f.deg(), g.deg()) {
        (Some(df), Some(dg)) => (df, dg),
        _ => return Ok(VerifyReport::deterministic(METHOD, h.is_zero(), "a factor is zero")),
    };
    let (tf, tg, th) = (f.sparsity(), g.sparsity(), h.sparsity());
    if th > tf * tg {
        return Ok(VerifyReport::precheck(METHOD, format!("#H = {th} exceeds #F·#G = {}", tf * tg)));
    }
    let n = df + dg;
    if h.deg() != Some(n) {
        let dh = h.deg().map_or("-∞".to_string(), |d| d.to_string());
        return Ok(VerifyReport::precheck(METHOD, format!("deg H = {dh} differs from deg F + deg G = {n}")));
    }
    let mut rng = RngStream::new(seed);
    let lambda = params.lambda(tf, tg, th, n);
    let p = random_prime(&lambda, 5.0 * params.eps1 / 3.0, &mut rng)?;
    let p = u64::try_from(&p).map_err(|_| Error::param(format!("prime {p} does not fit an exponent")))?;
    let mut report = VerifyReport::new(METHOD, params.epsilon);
    report.witnesses.push(Witness::Fold { i: p.to_string() });
    let modulus = SparsePoly::binomial(f.ring().clone(), p)?;
    let (fp, gp, hp) = (fold_sparse(f, p)?, fold_sparse(g, p)?, fold_sparse(h, p)?);
    let cfg = VerifyConfig::new(params.eps2, rng.next_u64())?;
    let inner = R::verify_mod_auto(&fp.into(), &gp.into(), &hp.into(), &modulus, &cfg)?;
    report.absorb(inner);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::mul_sparse;
    use crate::rings::{Fp64, Integers, Ring};

    fn example1() -> (SparsePoly<Integers>, SparsePoly<Integers>, SparsePoly<Integers>) {
        let f = SparsePoly::from_i64s(Integers, &[(0, 2), (7, 2), (14, 1)]).unwrap();
        let g = SparsePoly::from_i64s(Integers, &[(0, 3), (8, 5), (13, 3)]).unwrap();
        let h = SparsePoly::from_i64s(Integers, &[(0, 2), (7, -2), (14, 1)]).unwrap();
        (f, g, h)
    }

    #[test]
    fn split_and_lambda() {
        let p = SparseVerifyParams::new(0.25).unwrap();
        assert!((p.eps1 - 0.0375).abs() < 1e-15 && p.eps2 == 0.125);
        assert!(SparseVerifyParams::with_split(0.25, 0.1, 0.2).is_err());
        assert_eq!(p.lambda(1, 1, 1, 1), BigUint::from(21u8));
        // (9 + 3)·ln 28 / 0.0375 ≈ 1066.3
        assert_eq!(p.lambda(3, 3, 3, 28), BigUint::from(1067u32));
    }

    #[test]
    fn example_one_products() {
        let (f, g, h) = example1();
        let params = SparseVerifyParams::new(0.25).unwrap();
        let fh = mul_sparse(&f, &h).unwrap();
        assert_eq!(fh, SparsePoly::from_i64s(Integers, &[(0, 4), (28, 1)]).unwrap());
        let fg = mul_sparse(&f, &g).unwrap();
        for seed in 0..20 {
            assert!(verify_sparse_product(&f, &h, &fh, &params, seed).unwrap().verdict);
            assert!(verify_sparse_product(&f, &g, &fg, &params, seed).unwrap().verdict);
        }
        let bad = fh.add(&SparsePoly::from_i64s(Integers, &[(27, 1)]).unwrap()).unwrap();
        let r = verify_sparse_product(&f, &h, &bad, &params, 1).unwrap();
        assert!(!r.verdict);
        let high = fh.add(&SparsePoly::from_i64s(Integers, &[(29, 1)]).unwrap()).unwrap();
        let r = verify_sparse_product(&f, &h, &high, &params, 1).unwrap();
        assert!(!r.verdict);
        assert!(matches!(r.witnesses[..], [Witness::Precheck { .. }]));
    }

    #[test]
    fn example_two_over_fields() {
        let t = 10u64;
        let field = Fp64::new(3).unwrap();
        let f = SparsePoly::from_i64s(field, &(0..t).map(|i| (i, 1)).collect::<Vec<_>>()).unwrap();
        let g_terms: Vec<_> = (0..t).flat_map(|i| [(i * t, -1), (i * t + 1, 1)]).collect();
        let g =
            SparsePoly::from_unsorted(field, g_terms.iter().map(|&(e, c)| (e, field.from_i64(c))).collect()).unwrap();
        let h = SparsePoly::binomial(field, t * t).unwrap();
        let params = SparseVerifyParams::new(0.25).unwrap();
        let r = verify_sparse_product(&f, &g, &h, &params, 7).unwrap();
        assert!(r.verdict);
        let bad = h.add(&SparsePoly::from_i64s(field, &[(50, 1)]).unwrap()).unwrap();
        assert!(!verify_sparse_product(&f, &g, &bad, &params, 7).unwrap().verdict);
    }

    #[test]
    fn zero_factors() {
        let (f, _, _) = example1();
        let z = SparsePoly::zero(Integers);
        let params = SparseVerifyParams::new(0.25).unwrap();
        assert!(verify_sparse_product(&f, &z, &z, &params, 0).unwrap().verdict);
        assert!(!verify_sparse_product(&z, &f, &f, &params, 0).unwrap().verdict);
        assert!(!verify_sparse_product(&f, &f, &z, &params, 0).unwrap().verdict);
    }
}
