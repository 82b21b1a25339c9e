//! Probabilistic verification of `H = (F·G) mod P`.
//!
//! All verifiers are one-sided: a true identity is accepted for every seed.
//! A false one is accepted with probability at most `epsilon`.
//!
//! - [`verify_mod`]: one random point of a large enough finite field.
//! - [`verify_mod_over_z`]: integer inputs, reduced modulo a random prime.
//! - [`verify_mod_ff`]: finite fields of any size, by field extension or
//!   companion matrices when the field is small.
//! - [`verify_mod_companion`] and [`verify_mod_companion_sparse`]: companion
//!   matrix points, the former optionally without any polynomial
//!   multiplication.

mod companion;
mod ff;
mod over_z;

pub use companion::{verify_mod_companion, verify_mod_companion_sparse, CompanionMode};
pub use ff::verify_mod_ff;
pub use over_z::{delta_norm_bound, verify_mod_over_z};

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::FromPrimitive;

use crate::error::{Error, Result};
use crate::modeval::{
    check_operands, eval_mod_binomial_dense, eval_mod_binomial_sparse, eval_mod_p_dense, eval_mod_p_sparse,
};
use crate::poly::{eval, gap_info, same_ring, DensePoly, Poly, SparsePoly};
use crate::report::{VerifyReport, Witness};
use crate::rings::{Algebra, FiniteField, Fp64, FpBig, Integers, PrimeField, Ring, RngStream};

/// How a finite-field verification picks its evaluation point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Method {
    /// Direct evaluation when the field is large enough, otherwise an
    /// extension field.
    #[default]
    Auto,
    DirectEval,
    Extension,
    CompanionFreivalds,
    CompanionNoPolymul,
}

impl Method {
    pub const ALL: [Method; 5] =
        [Method::Auto, Method::DirectEval, Method::Extension, Method::CompanionFreivalds, Method::CompanionNoPolymul];

    pub fn name(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::DirectEval => "direct-eval",
            Method::Extension => "extension",
            Method::CompanionFreivalds => "companion-freivalds",
            Method::CompanionNoPolymul => "companion-no-polymul",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL.into_iter().find(|m| m.name() == s).ok_or_else(|| Error::param(format!("unknown method {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VerifyConfig {
    pub epsilon: f64,
    pub method: Method,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { epsilon: 1.0 / (1u64 << 20) as f64, method: Method::Auto, seed: 0 }
    }
}

impl VerifyConfig {
    pub fn new(epsilon: f64, seed: u64) -> Result<Self> {
        let cfg = Self { epsilon, seed, ..Self::default() };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_method(mut self, method: Method) -> Self {
        self.method = method;
        self
    }

    pub fn validate(&self) -> Result<()> {
        check_epsilon(self.epsilon)
    }
}

pub(crate) fn check_epsilon(epsilon: f64) -> Result<()> {
    if epsilon > 0.0 && epsilon < 1.0 {
        Ok(())
    } else {
        Err(Error::param(format!("epsilon must lie in (0, 1), got {epsilon}")))
    }
}

/// Verification in a finite field with at least `(n − 1)/ε` elements, using
/// one uniform point of the field.
pub fn verify_mod<R: FiniteField>(
    f: &Poly<R>,
    g: &Poly<R>,
    h: &Poly<R>,
    p: &SparsePoly<R>,
    cfg: &VerifyConfig,
) -> Result<VerifyReport> {
    cfg.validate()?;
    let mut rng = RngStream::new(cfg.seed);
    verify_mod_in(f, g, h, p, p.ring(), cfg.epsilon, &mut rng, Method::DirectEval.name())
}

/// Checks ring agreement and `deg F, deg G, deg H < deg P`; returns `n`.
pub(crate) fn check_inputs<R: Ring>(f: &Poly<R>, g: &Poly<R>, h: &Poly<R>, p: &SparsePoly<R>) -> Result<u64> {
    for x in [f, g, h] {
        same_ring(x.ring(), p.ring())?;
    }
    check_operands(p, &[f.deg(), g.deg(), h.deg()])
}

/// `Some(reason)` if `#H` exceeds the largest possible sparsity of
/// `(F·G) mod P`.
pub(crate) fn sparsity_precheck<R: Ring>(
    f: &Poly<R>,
    g: &Poly<R>,
    h: &Poly<R>,
    p: &SparsePoly<R>,
) -> Result<Option<String>> {
    let gap = gap_info(p)?;
    let target = BigUint::from(h.sparsity());
    let base = BigUint::from(p.sparsity().saturating_sub(1).max(1));
    let mut bound = BigUint::from(f.sparsity()) * g.sparsity();
    if base > BigUint::from(1u8) {
        for _ in 0..gap.ceil_inv_gamma() {
            if bound >= target {
                break;
            }
            bound *= &base;
        }
    }
    Ok((target > bound).then(|| format!("#H = {} exceeds the sparsity bound {bound}", h.sparsity())))
}

pub(crate) fn is_binomial<R: Ring>(p: &SparsePoly<R>) -> bool {
    let ring = p.ring();
    match p.terms() {
        [(0, c0), (n, c1)] => *n >= 1 && *c0 == ring.neg(&ring.one()) && *c1 == ring.one(),
        _ => false,
    }
}

pub(crate) fn biguint_ceil(x: f64) -> BigUint {
    BigUint::from_f64(x.ceil()).unwrap_or_default()
}

/// `⌈(n − 1)/ε⌉`.
pub(crate) fn required_size(n: u64, epsilon: f64) -> BigUint {
    biguint_ceil((n - 1) as f64 / epsilon)
}

pub(crate) fn render_poly<R: Ring>(p: &DensePoly<R>) -> String {
    let parts: Vec<String> = p.coeffs().iter().map(|c| p.ring().render(c)).collect();
    format!("[{}]", parts.join(", "))
}

/// `((F·G) mod P)(α)` through the cheapest applicable evaluator.
pub(crate) fn eval_rhs<R: Ring, A: Algebra<R>>(
    f: &Poly<R>,
    g: &Poly<R>,
    p: &SparsePoly<R>,
    alg: &A,
    alpha: &A::Elem,
) -> Result<A::Elem> {
    let sparse = f.is_sparse() && g.is_sparse();
    match (is_binomial(p), sparse) {
        (true, true) => eval_mod_binomial_sparse(&f.to_sparse(), &g.to_sparse(), p.degree()?, alg, alpha),
        (true, false) => eval_mod_binomial_dense(&f.to_dense(), &g.to_dense(), p.degree()?, alg, alpha),
        (false, true) => eval_mod_p_sparse(p, &f.to_sparse(), &g.to_sparse(), alg, alpha),
        (false, false) => eval_mod_p_dense(p, &f.to_dense(), &g.to_dense(), alg, alpha),
    }
}

/// One random point of `alg`, which must have at least `(n − 1)/ε` elements.
#[allow(clippy::too_many_arguments)]
pub(crate) fn verify_mod_in<R: Ring, A: FiniteField + Algebra<R>>(
    f: &Poly<R>,
    g: &Poly<R>,
    h: &Poly<R>,
    p: &SparsePoly<R>,
    alg: &A,
    epsilon: f64,
    rng: &mut RngStream,
    method: &str,
) -> Result<VerifyReport> {
    check_epsilon(epsilon)?;
    let n = check_inputs(f, g, h, p)?;
    if let Some(reason) = sparsity_precheck(f, g, h, p)? {
        return Ok(VerifyReport::precheck(method, reason));
    }
    let needed = required_size(n, epsilon);
    let size = alg.order();
    if size < needed {
        return Err(Error::FieldTooSmall { size: size.to_string(), needed: needed.to_string() });
    }
    let alpha = alg.random_elem(rng);
    let mut report = VerifyReport::new(method, epsilon);
    report.rounds = 1;
    report.witnesses.push(Witness::Point { alpha: alg.render(&alpha) });
    let lhs = eval(h, alg, &alpha);
    let rhs = eval_rhs(f, g, p, alg, &alpha)?;
    report.verdict = lhs == rhs;
    Ok(report)
}

/// Coefficient domains with an automatic choice of modular verifier.
pub trait ModularDomain: Ring + Sized {
    /// The verifier selected by `cfg.method` for this domain.
    fn verify_mod_auto(
        f: &Poly<Self>,
        g: &Poly<Self>,
        h: &Poly<Self>,
        p: &SparsePoly<Self>,
        cfg: &VerifyConfig,
    ) -> Result<VerifyReport>;

    /// A verifier that performs no polynomial multiplication.
    fn verify_mod_nomul(
        f: &Poly<Self>,
        g: &Poly<Self>,
        h: &Poly<Self>,
        p: &SparsePoly<Self>,
        cfg: &VerifyConfig,
    ) -> Result<VerifyReport>;
}

impl ModularDomain for Integers {
    fn verify_mod_auto(
        f: &Poly<Self>,
        g: &Poly<Self>,
        h: &Poly<Self>,
        p: &SparsePoly<Self>,
        cfg: &VerifyConfig,
    ) -> Result<VerifyReport> {
        verify_mod_over_z(f, g, h, p, cfg)
    }

    fn verify_mod_nomul(
        f: &Poly<Self>,
        g: &Poly<Self>,
        h: &Poly<Self>,
        p: &SparsePoly<Self>,
        cfg: &VerifyConfig,
    ) -> Result<VerifyReport> {
        verify_mod_over_z(f, g, h, p, cfg)
    }
}

fn nomul_prime_field<F: PrimeField>(
    f: &Poly<F>,
    g: &Poly<F>,
    h: &Poly<F>,
    p: &SparsePoly<F>,
    cfg: &VerifyConfig,
) -> Result<VerifyReport> {
    let n = check_inputs(f, g, h, p)?;
    let method =
        if p.ring().order() >= required_size(n, cfg.epsilon) { Method::DirectEval } else { Method::CompanionNoPolymul };
    verify_mod_ff(f, g, h, p, &cfg.with_method(method))
}

macro_rules! prime_field_domain {
    ($t:ty) => {
        impl ModularDomain for $t {
            fn verify_mod_auto(
                f: &Poly<Self>,
                g: &Poly<Self>,
                h: &Poly<Self>,
                p: &SparsePoly<Self>,
                cfg: &VerifyConfig,
            ) -> Result<VerifyReport> {
                verify_mod_ff(f, g, h, p, cfg)
            }

            fn verify_mod_nomul(
                f: &Poly<Self>,
                g: &Poly<Self>,
                h: &Poly<Self>,
                p: &SparsePoly<Self>,
                cfg: &VerifyConfig,
            ) -> Result<VerifyReport> {
                nomul_prime_field(f, g, h, p, cfg)
            }
        }
    };
}

prime_field_domain!(Fp64);
prime_field_domain!(FpBig);
