use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use super::{is_probable_prime, ExtField, Fp64, FpBig, Integers, PrimeField, WORD_MODULUS_LIMIT};
use crate::error::{Error, Result};

/// Which domain a polynomial's coefficients live in, as data.
///
/// Polynomials carry a concrete ring type; `RingCtx` is the runtime tag used
/// by file headers and the command line to pick one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingCtx {
    Integers,
    PrimeField {
        q: BigUint,
    },
    /// 𝔽_q[X]/(R) with `modulus` the coefficients of monic `R`, low to high.
    ExtField {
        q: BigUint,
        modulus: Vec<BigUint>,
    },
}

impl RingCtx {
    pub fn prime(q: impl Into<BigUint>) -> Self {
        RingCtx::PrimeField { q: q.into() }
    }

    /// Checks that the modulus is at least 2 and passes Miller–Rabin.
    pub fn validate(&self) -> Result<()> {
        match self {
            RingCtx::Integers => Ok(()),
            RingCtx::PrimeField { q } | RingCtx::ExtField { q, .. } => {
                if !is_probable_prime(q, 32) {
                    return Err(Error::param(format!("{q} is not prime")));
                }
                if let RingCtx::ExtField { modulus, .. } = self {
                    if modulus.len() < 2 || modulus.last() != Some(&BigUint::from(1u8)) {
                        return Err(Error::NotMonic);
                    }
                }
                Ok(())
            }
        }
    }

    /// `Some(q)` when the characteristic fits a machine word.
    pub fn word_modulus(&self) -> Option<u64> {
        match self {
            RingCtx::Integers => None,
            RingCtx::PrimeField { q } | RingCtx::ExtField { q, .. } => {
                u64::try_from(q).ok().filter(|&q| q < WORD_MODULUS_LIMIT)
            }
        }
    }

    pub fn of_fp64(f: &Fp64) -> Self {
        RingCtx::prime(f.q())
    }

    pub fn of_fpbig(f: &FpBig) -> Self {
        RingCtx::prime(f.q().clone())
    }

    pub fn of_ext<F: PrimeField>(k: &ExtField<F>) -> Self {
        let base = k.base();
        RingCtx::ExtField {
            q: base.modulus(),
            modulus: k.modulus().coeffs().iter().map(|c| base.to_biguint(c)).collect(),
        }
    }

    pub fn of_integers(_: &Integers) -> Self {
        RingCtx::Integers
    }
}

impl fmt::Display for RingCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingCtx::Integers => write!(f, "Z"),
            RingCtx::PrimeField { q } => write!(f, "GF {q}"),
            RingCtx::ExtField { q, modulus } => {
                let m: Vec<String> = modulus.iter().map(|c| c.to_string()).collect();
                write!(f, "GF {q} [{}]", m.join(","))
            }
        }
    }
}

/// Accepts `Z`, `GF <q>`, `GF:<q>` and `GF<q>`.
impl FromStr for RingCtx {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Z" {
            return Ok(RingCtx::Integers);
        }
        let rest =
            s.strip_prefix("GF").ok_or_else(|| Error::param(format!("unknown ring {s:?}; expected Z or GF <q>")))?;
        let rest = rest.trim_start_matches([' ', ':']);
        let q: BigUint = rest.parse().map_err(|_| Error::param(format!("bad field size {rest:?}")))?;
        let ctx = RingCtx::PrimeField { q };
        ctx.validate()?;
        Ok(ctx)
    }
}
