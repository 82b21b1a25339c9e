use num_bigint::BigUint;

use super::{
    biguint_ceil, check_epsilon, check_inputs, render_poly, required_size, sparsity_precheck, verify_mod_companion,
    verify_mod_companion_sparse, verify_mod_in, CompanionMode, Method, VerifyConfig,
};
use crate::error::Result;
use crate::poly::{Poly, SparsePoly};
use crate::report::{VerifyReport, Witness};
use crate::rings::{min_degree_for_size, random_irreducible, ExtField, PrimeField, RngStream};

/// Verification over `𝔽_q` for any `q`.
///
/// With [`Method::Auto`] a point of `𝔽_q` is used when `q ≥ (n − 1)/ε`, and a
/// point of a random extension `𝔽_{q^d}` with `q^d ≥ 2(n − 1)/ε` otherwise.
/// The companion methods delegate to [`verify_mod_companion`], or to
/// [`verify_mod_companion_sparse`] when `F`, `G` and `H` are all sparse.
pub fn verify_mod_ff<F: PrimeField>(
    f: &Poly<F>,
    g: &Poly<F>,
    h: &Poly<F>,
    p: &SparsePoly<F>,
    cfg: &VerifyConfig,
) -> Result<VerifyReport> {
    check_epsilon(cfg.epsilon)?;
    let n = check_inputs(f, g, h, p)?;
    let field = p.ring();
    let all_sparse = f.is_sparse() && g.is_sparse() && h.is_sparse();
    let large = field.order() >= required_size(n, cfg.epsilon);
    match cfg.method {
        Method::Auto if large => direct(f, g, h, p, cfg),
        Method::DirectEval => direct(f, g, h, p, cfg),
        Method::Auto | Method::Extension => extension(f, g, h, p, cfg),
        Method::CompanionFreivalds | Method::CompanionNoPolymul if all_sparse => {
            verify_mod_companion_sparse(&f.to_sparse(), &g.to_sparse(), &h.to_sparse(), p, cfg)
        }
        Method::CompanionFreivalds => verify_mod_companion(f, g, h, p, cfg, CompanionMode::Freivalds),
        Method::CompanionNoPolymul => verify_mod_companion(f, g, h, p, cfg, CompanionMode::NoPolymul),
    }
}

fn direct<F: PrimeField>(
    f: &Poly<F>,
    g: &Poly<F>,
    h: &Poly<F>,
    p: &SparsePoly<F>,
    cfg: &VerifyConfig,
) -> Result<VerifyReport> {
    let mut rng = RngStream::new(cfg.seed);
    verify_mod_in(f, g, h, p, p.ring(), cfg.epsilon, &mut rng, Method::DirectEval.name())
}

/// Smallest `d` with `q^d ≥ 2(n − 1)/ε`.
pub(crate) fn extension_degree(q: &BigUint, n: u64, epsilon: f64) -> usize {
    let threshold = biguint_ceil(2.0 * (n - 1) as f64 / epsilon);
    min_degree_for_size(q, &threshold) as usize
}

fn extension<F: PrimeField>(
    f: &Poly<F>,
    g: &Poly<F>,
    h: &Poly<F>,
    p: &SparsePoly<F>,
    cfg: &VerifyConfig,
) -> Result<VerifyReport> {
    let method = Method::Extension.name();
    if let Some(reason) = sparsity_precheck(f, g, h, p)? {
        return Ok(VerifyReport::precheck(method, reason));
    }
    let field = p.ring();
    let n = p.degree()?;
    let half = cfg.epsilon / 2.0;
    let d = extension_degree(&field.modulus(), n, cfg.epsilon);
    let mut rng = RngStream::new(cfg.seed);
    let modulus = random_irreducible(field, d, half, &mut rng)?;
    let mut report = VerifyReport::new(method, cfg.epsilon);
    report.witnesses.push(Witness::Extension { modulus: render_poly(&modulus) });
    let ext = ExtField::new(&modulus)?;
    report.absorb(verify_mod_in(f, g, h, p, &ext, half, &mut rng, method)?);
    Ok(report)
}
