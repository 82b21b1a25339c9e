use crate::error::{Error, Result};
use crate::modverify::{check_epsilon, ModularDomain, VerifyConfig};
use crate::oracle::oracle_divides;
use crate::poly::{fold_dense, mul_dense, mul_oracle, DensePoly, Poly, SparsePoly};
use crate::report::{VerifyReport, Witness};
use crate::rings::{Ring, RngStream};
use rand::RngCore;

/// Parameters of the reduction modulo `X^i − 1`.
///
/// For a nonzero `Δ` of degree at most `2n`, at most `k − 1` of the
/// binomials `X^i − 1` with `n^{1−e} ≤ i < 2n^{1−e}` divide `Δ`, where
/// `k = ⌈2δ·n^e·ln ln(n^{1−e})⌉`. One round therefore errs with probability at
/// most `ρ = (k − 1)/n^{1−e}`. This is below `1/2` only for very large `n`
/// (about `10^13` at `e = 9/20`); below [`n_min`](Self::n_min) the verifiers
/// decide exactly.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KaminskiParams {
    pub e: f64,
    pub delta: f64,
    /// Forces this many randomized rounds at every size, regardless of
    /// `n_min` and the target error.
    pub rounds: Option<u64>,
}

impl Default for KaminskiParams {
    fn default() -> Self {
        Self { e: 0.45, delta: 1.78107, rounds: None }
    }
}

impl KaminskiParams {
    pub fn new(e: f64) -> Result<Self> {
        if !(e > 0.0 && e < 0.5) {
            return Err(Error::param(format!("e must lie in (0, 1/2), got {e}")));
        }
        Ok(Self { e, ..Self::default() })
    }

    pub fn with_rounds(mut self, rounds: u64) -> Self {
        self.rounds = Some(rounds);
        self
    }

    /// `k = max(1, ⌈2δ·n^e·ln ln(n^{1−e})⌉)`.
    pub fn k(&self, n: u64) -> u64 {
        let n = n as f64;
        let raw = 2.0 * self.delta * n.powf(self.e) * n.powf(1.0 - self.e).ln().ln();
        if raw.is_finite() && raw > 1.0 {
            raw.ceil() as u64
        } else {
            1
        }
    }

    /// Per-round error bound `(k − 1)/n^{1−e}`.
    pub fn rho(&self, n: u64) -> f64 {
        (self.k(n) - 1) as f64 / (n as f64).powf(1.0 - self.e)
    }

    /// The candidate range `[⌈n^{1−e}⌉, ⌈2n^{1−e}⌉)` for `i`.
    pub fn range(&self, n: u64) -> (u64, u64) {
        let x = (n as f64).powf(1.0 - self.e);
        let lo = (x.ceil() as u64).max(1);
        let hi = ((2.0 * x).ceil() as u64).max(lo + 1);
        (lo, hi)
    }

    /// Smallest `n` past the peak of `ρ` with `ρ(n) ≤ 1/2`.
    pub fn n_min(&self) -> u64 {
        let peak =
            (4..63).map(|b| 1u64 << b).fold(16u64, |best, n| if self.rho(n) > self.rho(best) { n } else { best });
        let (mut lo, mut hi) = (peak, u64::MAX >> 1);
        if self.rho(hi) > 0.5 {
            return hi;
        }
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if self.rho(mid) <= 0.5 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        hi
    }

    /// Randomized rounds at size `n` for target `epsilon`, with an extra
    /// per-round error `extra`; `None` when the exact check is used instead.
    pub(crate) fn plan(&self, n: u64, epsilon: f64, extra: f64) -> Option<(u64, f64)> {
        let per_round = (self.rho(n) + extra).min(1.0);
        if let Some(r) = self.rounds {
            return Some((r, per_round.powf(r as f64)));
        }
        if n < self.n_min() || per_round >= 1.0 {
            return None;
        }
        let rounds = ((1.0 / epsilon).ln() / (1.0 / per_round).ln()).ceil().max(1.0) as u64;
        Some((rounds, per_round.powf(rounds as f64)))
    }
}

/// One round with a given `i`: whether `F_i·G_i ≡ H_i (mod X^i − 1)`.
pub fn kaminski_round<R: Ring>(f: &DensePoly<R>, g: &DensePoly<R>, h: &DensePoly<R>, i: u64) -> Result<bool> {
    let (fi, gi, hi) = (fold_dense(f, i)?, fold_dense(g, i)?, fold_dense(h, i)?);
    let m = fold_dense(&mul_dense(&fi, &gi)?, i)?;
    Ok(m == hi)
}

/// Checks shared by both Kaminski verifiers. `Err(report)` is a final verdict.
fn triage<R: Ring>(
    method: &str,
    f: &DensePoly<R>,
    g: &DensePoly<R>,
    h: &DensePoly<R>,
) -> std::result::Result<u64, VerifyReport> {
    match (f.deg(), g.deg(), h.deg()) {
        (None, _, hd) | (_, None, hd) => Err(VerifyReport::deterministic(method, hd.is_none(), "a factor is zero")),
        (Some(_), Some(_), None) => Err(VerifyReport::precheck(method, "H = 0 but F, G ≠ 0")),
        (Some(df), Some(dg), Some(dh)) if dh > df + dg => {
            Err(VerifyReport::precheck(method, format!("deg H = {dh} exceeds deg F + deg G = {}", df + dg)))
        }
        (Some(df), Some(dg), Some(_)) => Ok(df.max(dg) as u64),
    }
}

/// Reduction modulo random binomials `X^i − 1` followed by a reduced
/// multiplication.
pub fn verify_product_kaminski<R: Ring>(
    f: &Poly<R>,
    g: &Poly<R>,
    h: &Poly<R>,
    params: &KaminskiParams,
    cfg: &VerifyConfig,
) -> Result<VerifyReport> {
    const METHOD: &str = "kaminski";
    check_epsilon(cfg.epsilon)?;
    let (f, g, h) = (f.to_dense(), g.to_dense(), h.to_dense());
    let n = match triage(METHOD, &f, &g, &h) {
        Ok(n) => n,
        Err(report) => return Ok(report),
    };
    let Some((rounds, bound)) = params.plan(n, cfg.epsilon, 0.0) else {
        let product = mul_oracle(&Poly::Dense(f), &Poly::Dense(g))?;
        let reason = format!("n = {n} is below n_min = {}", params.n_min());
        return Ok(VerifyReport::deterministic(METHOD, product.same_as(&Poly::Dense(h)), reason));
    };
    let (lo, hi) = params.range(n);
    let mut rng = RngStream::new(cfg.seed);
    let mut report = VerifyReport::new(METHOD, bound);
    for _ in 0..rounds {
        let i = rng.range(lo, hi);
        report.rounds += 1;
        report.witnesses.push(Witness::Fold { i: i.to_string() });
        if !kaminski_round(&f, &g, &h, i)? {
            return Ok(report.reject());
        }
    }
    Ok(report)
}

/// As [`verify_product_kaminski`], with each reduced identity checked by
/// [`ModularDomain::verify_mod_nomul`] at error `1/n`, so that no polynomial
/// multiplication is performed.
///
/// Below `n_min` the reduction uses `i = 2n + 1`, which leaves the identity
/// unchanged, and the modular check runs at the full `epsilon`.
pub fn verify_product_kaminski_nomul<R: ModularDomain>(
    f: &Poly<R>,
    g: &Poly<R>,
    h: &Poly<R>,
    params: &KaminskiParams,
    cfg: &VerifyConfig,
) -> Result<VerifyReport> {
    const METHOD: &str = "kaminski-nomul";
    check_epsilon(cfg.epsilon)?;
    let (f, g, h) = (f.to_dense(), g.to_dense(), h.to_dense());
    let n = match triage(METHOD, &f, &g, &h) {
        Ok(n) => n,
        Err(report) => return Ok(report),
    };
    let mut rng = RngStream::new(cfg.seed);
    let inner_eps = 1.0 / (n.max(2) as f64);
    let (rounds, bound, draw, eps) = match params.plan(n, cfg.epsilon, inner_eps) {
        Some((rounds, bound)) => (rounds, bound, true, inner_eps),
        None => (1, cfg.epsilon, false, cfg.epsilon),
    };
    let (lo, hi) = params.range(n);
    let mut report = VerifyReport::new(METHOD, bound);
    for _ in 0..rounds {
        let i = if draw { rng.range(lo, hi) } else { 2 * n + 1 };
        report.witnesses.push(Witness::Fold { i: i.to_string() });
        let ring = f.ring().clone();
        let p = SparsePoly::binomial(ring, i)?;
        let (fi, gi, hi) = (fold_dense(&f, i)?, fold_dense(&g, i)?, fold_dense(&h, i)?);
        let sub = VerifyConfig::new(eps, rng.next_u64())?;
        let inner = R::verify_mod_nomul(&fi.into(), &gi.into(), &hi.into(), &p, &sub)?;
        report.absorb(inner);
        if !report.verdict {
            return Ok(report);
        }
    }
    Ok(report)
}

/// Number of `i ∈ [⌈n^{1−e}⌉, ⌈2n^{1−e}⌉)` with `(X^i − 1) | Δ`, by long
/// division.
pub fn count_binomial_divisors<R: Ring>(delta: &DensePoly<R>, n: u64, params: &KaminskiParams) -> Result<u64> {
    if delta.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (lo, hi) = params.range(n);
    let a = Poly::Dense(delta.clone());
    let mut count = 0;
    for i in lo..hi {
        let b = Poly::Sparse(SparsePoly::binomial(delta.ring().clone(), i)?);
        count += oracle_divides(&a, &b)? as u64;
    }
    Ok(count)
}

/// `X^L − 1` for the `L ≤ 2n` that is a multiple of the most `i` in the
/// candidate range, which makes it divisible by the most binomials `X^i − 1`.
pub fn lcm_adversarial_delta<R: Ring>(ring: R, n: u64, params: &KaminskiParams) -> Result<DensePoly<R>> {
    let (lo, hi) = params.range(n);
    let best =
        (1..=2 * n).max_by_key(|l| ((lo..hi).filter(|i| l % i == 0).count(), std::cmp::Reverse(*l))).expect("n ≥ 1");
    Ok(SparsePoly::binomial(ring, best)?.to_dense())
}
