//! Random monic and probably-irreducible polynomials over prime fields.

use super::{vecpoly, PrimeField, RngStream};
use crate::error::{Error, Result};
use crate::poly::DensePoly;

/// A uniformly random monic polynomial of degree `d`. Performs no
/// polynomial multiplication.
pub fn random_monic<F: PrimeField>(field: &F, d: usize, rng: &mut RngStream) -> DensePoly<F> {
    let mut coeffs: Vec<F::Elem> = (0..d).map(|_| field.random_elem(rng)).collect();
    coeffs.push(field.one());
    DensePoly::new(field.clone(), coeffs)
}

/// Ben-Or's test: a monic `f` of degree `d` is irreducible iff
/// `gcd(X^{q^i} − X, f) = 1` for every `1 ≤ i ≤ d/2`.
///
/// Uses schoolbook products modulo `f` only.
pub fn is_irreducible<F: PrimeField>(f: &DensePoly<F>) -> bool {
    let field = f.ring();
    let mut m = f.coeffs().to_vec();
    if m.len() < 2 || vecpoly::make_monic(field, &mut m).is_err() {
        return false;
    }
    let d = m.len() - 1;
    let q = field.modulus();
    let x = vec![field.zero(), field.one()];
    let mut h = x.clone();
    vecpoly::rem_monic_in_place(field, &mut h, &m);
    for _ in 0..d / 2 {
        h = vecpoly::powmod(field, &h, &q, &m);
        let diff = vecpoly::sub(field, &h, &x);
        match vecpoly::gcd(field, &diff, &m) {
            Ok(g) if g.len() == 1 => {}
            _ => return false,
        }
    }
    true
}

/// A monic polynomial of degree `d` that is irreducible with probability at
/// least `1 − ε`.
///
/// Tries up to `⌈2d·ln(1/ε)⌉` uniform monic candidates and returns the first
/// that passes [`is_irreducible`]; if none does, the last candidate is
/// returned.
pub fn random_irreducible<F: PrimeField>(
    field: &F,
    d: usize,
    epsilon: f64,
    rng: &mut RngStream,
) -> Result<DensePoly<F>> {
    if d == 0 {
        return Err(Error::param("irreducible polynomials need degree ≥ 1"));
    }
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::param(format!("epsilon must lie in (0, 1), got {epsilon}")));
    }
    let attempts = ((2.0 * d as f64 * (1.0 / epsilon).ln()).ceil() as usize).max(1);
    let mut candidate = random_monic(field, d, rng);
    for _ in 1..attempts {
        if is_irreducible(&candidate) {
            return Ok(candidate);
        }
        candidate = random_monic(field, d, rng);
    }
    Ok(candidate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::Fp64;

    // Exhaustive factor search: f is reducible iff some monic g with
    // 1 ≤ deg g ≤ deg f / 2 divides it.
    fn reducible_by_search(f: &[u64], q: u64) -> bool {
        let field = Fp64::new(q).unwrap();
        let d = f.len() - 1;
        for dg in 1..=d / 2 {
            let count = q.pow(dg as u32);
            for idx in 0..count {
                let mut g: Vec<u64> = (0..dg).map(|j| (idx / q.pow(j as u32)) % q).collect();
                g.push(1);
                let (_, r) = vecpoly::divrem(&field, f, &g).unwrap();
                if r.is_empty() {
                    return true;
                }
            }
        }
        false
    }

    #[test]
    fn degree_one_over_f2() {
        let f2 = Fp64::new(2).unwrap();
        let mut rng = RngStream::new(0);
        let p = random_irreducible(&f2, 1, 0.5, &mut rng).unwrap();
        assert!(p.coeffs() == [0, 1] || p.coeffs() == [1, 1]);
    }

    #[test]
    fn degree_four_over_f2() {
        let f2 = Fp64::new(2).unwrap();
        let mut rng = RngStream::new(7);
        let p = random_irreducible(&f2, 4, 2f64.powi(-10), &mut rng).unwrap();
        let c = p.coeffs();
        assert_eq!(c.len(), 5);
        assert_eq!(c[4], 1);
        assert_ne!(c[0], 0, "root at 0");
        assert_ne!(c.iter().sum::<u64>() % 2, 0, "root at 1");
        // (X^2 + X + 1)^2 = X^4 + X^2 + 1
        assert_ne!(c, [1, 0, 1, 0, 1]);
        assert!(!reducible_by_search(c, 2));
    }

    #[test]
    fn degree_two_over_f5() {
        let f5 = Fp64::new(5).unwrap();
        let mut rng = RngStream::new(3);
        let p = random_irreducible(&f5, 2, 2f64.powi(-10), &mut rng).unwrap();
        let c = p.coeffs();
        assert_eq!(c.len(), 3);
        for x in 0..5u64 {
            assert_ne!((c[0] + c[1] * x + c[2] * x * x) % 5, 0, "root {x}");
        }
    }

    #[test]
    fn ben_or_matches_search() {
        let f3 = Fp64::new(3).unwrap();
        let mut rng = RngStream::new(11);
        for d in 1..=5 {
            for _ in 0..30 {
                let p = random_monic(&f3, d, &mut rng);
                assert_eq!(is_irreducible(&p), !reducible_by_search(p.coeffs(), 3), "{p:?}");
            }
        }
    }

    #[test]
    fn reducible_rate_at_quarter() {
        let f2 = Fp64::new(2).unwrap();
        let trials = 2000;
        let mut reducible = 0;
        for seed in 0..trials {
            let mut rng = RngStream::new(seed);
            let d = 1 + (seed % 8) as usize;
            let p = random_irreducible(&f2, d, 0.25, &mut rng).unwrap();
            if reducible_by_search(p.coeffs(), 2) {
                reducible += 1;
            }
        }
        assert!(reducible as f64 / trials as f64 <= 0.30, "{reducible}");
    }

    #[test]
    fn monic_sampling_does_not_multiply() {
        let f2 = Fp64::new(2).unwrap();
        let mut rng = RngStream::new(1);
        let (_, muls) = crate::instrument::count_poly_muls(|| random_monic(&f2, 20, &mut rng));
        assert_eq!(muls, 0);
    }
}
