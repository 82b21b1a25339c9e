//! Gap parameter of a monic modulus and the growth bounds derived from it.

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::One;

use super::SparsePoly;
use crate::error::{Error, Result};
use crate::poly::reduce::check_modulus;
use crate::rings::Ring;

/// Degree `n`, second degree `k` and gap `γ = (n − k)/n` of a monic modulus.
///
/// For a monomial `X^n` the second degree is taken to be 0, so `γ = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GapInfo {
    pub n: u64,
    pub second_degree: u64,
    pub gamma: Ratio<u64>,
}

impl GapInfo {
    /// `⌈excess / (γn)⌉ = ⌈excess / (n − k)⌉`: the number of reduction rounds
    /// for a dividend of degree at most `n − 1 + excess`.
    pub fn rounds_for_excess(&self, excess: u64) -> u64 {
        excess.div_ceil(self.n - self.second_degree)
    }

    /// `⌈1/γ⌉`.
    pub fn ceil_inv_gamma(&self) -> u64 {
        self.n.div_ceil(self.n - self.second_degree)
    }
}

pub fn gap_info<R: Ring>(p: &SparsePoly<R>) -> Result<GapInfo> {
    let n = check_modulus(p)?;
    let second_degree = match p.lower_terms().last() {
        Some((k, _)) => *k,
        None => 0,
    };
    if second_degree >= n {
        return Err(Error::degree("second degree must be below the degree"));
    }
    Ok(GapInfo { n, second_degree, gamma: Ratio::new(n - second_degree, n) })
}

/// `#Q·(#P − 1)^⌈k/γn⌉`, an upper bound on `#(Q mod P)` when
/// `deg Q ≤ n − 1 + k`. `#P = 1` is treated as `#P = 2`.
pub fn sparsity_bound(q_sparsity: u64, p_sparsity: u64, excess: u64, gap: &GapInfo) -> BigUint {
    let t = gap.rounds_for_excess(excess);
    let base = BigUint::from(p_sparsity.saturating_sub(1).max(1));
    BigUint::from(q_sparsity) * pow_big(&base, t)
}

/// `‖Q‖·(#P·‖P‖)^⌈k/γn⌉`, an upper bound on `‖Q mod P‖` when
/// `deg Q ≤ n − 1 + k`.
pub fn norm_bound(q_norm: &BigUint, p_sparsity: u64, p_norm: &BigUint, excess: u64, gap: &GapInfo) -> BigUint {
    let t = gap.rounds_for_excess(excess);
    let base = BigUint::from(p_sparsity) * p_norm;
    q_norm * pow_big(&base, t)
}

/// `min(#F, #G)·‖F‖·‖G‖`, an upper bound on `‖F·G‖`.
pub fn product_norm_bound(f_sparsity: u64, g_sparsity: u64, f_norm: &BigUint, g_norm: &BigUint) -> BigUint {
    BigUint::from(f_sparsity.min(g_sparsity)) * f_norm * g_norm
}

fn pow_big(base: &BigUint, e: u64) -> BigUint {
    let mut acc = BigUint::one();
    let mut b = base.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}
