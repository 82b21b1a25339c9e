use num_bigint::BigUint;

use super::{check_epsilon, check_inputs, render_poly, sparsity_precheck, Method, VerifyConfig};
use crate::error::Result;
use crate::modeval::{
    eval_modprod_companion_sparse, eval_sparse_on_companion, leading_coefficients, project_modprod_companion_with,
    project_poly_companion, CompanionOperator,
};
use crate::poly::{DensePoly, Poly, SparsePoly};
use crate::report::{VerifyReport, Witness};
use crate::rings::{min_degree_for_size, random_irreducible, random_monic, PrimeField, RngStream};

/// Per-round failure budget for drawing `R`.
const EPSILON_1: f64 = 1.0 / 8.0;

/// How [`verify_mod_companion`] draws its companion moduli.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompanionMode {
    /// One probably-irreducible `R` per round.
    Freivalds,
    /// `⌈2d·ln 8⌉` uniformly random monic `R` per round, so that no
    /// irreducibility test (and hence no polynomial multiplication) runs.
    NoPolymul,
}

/// Smallest `d` with `q^d ≥ 2n/ε₁ = 16n`.
pub(crate) fn companion_degree(q: &BigUint, n: u64) -> usize {
    let threshold = BigUint::from(n) * ((2.0 / EPSILON_1) as u64);
    min_degree_for_size(q, &threshold) as usize
}

/// `⌈ln(1/ε)/ln(4/3)⌉`: each round accepts a false identity with
/// probability at most `1/2 + 2ε₁ = 3/4`.
pub(crate) fn companion_rounds(epsilon: f64) -> u64 {
    ((1.0 / epsilon).ln() / (4.0f64 / 3.0).ln()).ceil().max(1.0) as u64
}

/// Small-field verification on companion matrices, projected onto random
/// 0/1 row vectors.
///
/// Each round compares `u·H(C_R)` with `u·((F·G) mod P)(C_R)` for a random
/// monic `R` of degree `d = ⌈log_q 16n⌉` and `u ∈ {0,1}^d`; the leading
/// coefficients of `F` are computed once for all rounds. In
/// [`CompanionMode::NoPolymul`] no polynomial multiplication is performed.
pub fn verify_mod_companion<F: PrimeField>(
    f: &Poly<F>,
    g: &Poly<F>,
    h: &Poly<F>,
    p: &SparsePoly<F>,
    cfg: &VerifyConfig,
    mode: CompanionMode,
) -> Result<VerifyReport> {
    let method = match mode {
        CompanionMode::Freivalds => Method::CompanionFreivalds.name(),
        CompanionMode::NoPolymul => Method::CompanionNoPolymul.name(),
    };
    check_epsilon(cfg.epsilon)?;
    let n = check_inputs(f, g, h, p)?;
    if let Some(reason) = sparsity_precheck(f, g, h, p)? {
        return Ok(VerifyReport::precheck(method, reason));
    }
    let field = p.ring();
    let (f, g, h) = (f.to_dense(), g.to_dense(), h.to_dense());
    let d = companion_degree(&field.modulus(), n);
    let rounds = companion_rounds(cfg.epsilon);
    let draws = match mode {
        CompanionMode::Freivalds => 1,
        CompanionMode::NoPolymul => (2.0 * d as f64 * (1.0 / EPSILON_1).ln()).ceil() as u64,
    };
    let lead = leading_coefficients(p, &f)?;
    let mut rng = RngStream::new(cfg.seed);
    let mut report = VerifyReport::new(method, cfg.epsilon);
    for _ in 0..rounds {
        report.rounds += 1;
        for _ in 0..draws {
            let r = match mode {
                CompanionMode::Freivalds => random_irreducible(field, d, EPSILON_1, &mut rng)?,
                CompanionMode::NoPolymul => random_monic(field, d, &mut rng),
            };
            let u: Vec<F::Elem> = (0..d).map(|_| field.from_i64(rng.bit() as i64)).collect();
            report
                .witnesses
                .push(Witness::Companion { modulus: render_poly(&r), u: u.iter().map(|x| field.render(x)).collect() });
            let op = CompanionOperator::new(&r)?;
            let lhs = project_poly_companion(&h, &op, &u)?;
            let rhs = project_modprod_companion_with(p, &lead, &f, &g, &op, &u)?;
            if lhs != rhs {
                return Ok(report.reject());
            }
        }
    }
    Ok(report)
}

/// `⌈log₂(n/ε)·log₂(1/ε)⌉`.
pub(crate) fn companion_sparse_draws(n: u64, epsilon: f64) -> u64 {
    ((n as f64 / epsilon).log2() * (1.0 / epsilon).log2()).ceil().max(1.0) as u64
}

/// Small-field verification of sparse inputs by comparing the full matrices
/// `H(C_R)` and `((F·G) mod P)(C_R)` for random monic `R`.
pub fn verify_mod_companion_sparse<F: PrimeField>(
    f: &SparsePoly<F>,
    g: &SparsePoly<F>,
    h: &SparsePoly<F>,
    p: &SparsePoly<F>,
    cfg: &VerifyConfig,
) -> Result<VerifyReport> {
    const METHOD: &str = "companion-sparse";
    check_epsilon(cfg.epsilon)?;
    let (pf, pg, ph): (Poly<F>, Poly<F>, Poly<F>) = (f.clone().into(), g.clone().into(), h.clone().into());
    let n = check_inputs(&pf, &pg, &ph, p)?;
    if let Some(reason) = sparsity_precheck(&pf, &pg, &ph, p)? {
        return Ok(VerifyReport::precheck(METHOD, reason));
    }
    let field = p.ring();
    let d = companion_degree(&field.modulus(), n);
    let mut rng = RngStream::new(cfg.seed);
    let mut report = VerifyReport::new(METHOD, cfg.epsilon);
    for _ in 0..companion_sparse_draws(n, cfg.epsilon) {
        report.rounds += 1;
        let r: DensePoly<F> = random_monic(field, d, &mut rng);
        report.witnesses.push(Witness::CompanionMatrix { modulus: render_poly(&r) });
        let op = CompanionOperator::new(&r)?;
        if eval_sparse_on_companion(h, &op) != eval_modprod_companion_sparse(p, f, g, &op)? {
            return Ok(report.reject());
        }
    }
    Ok(report)
}
