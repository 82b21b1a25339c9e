//! Plain-text polynomial files.
//!
//! ```text
//! ring GF 65537
//! sparse 0:3 8:5 13:3
//! ```
//!
//! The first line is `ring Z` or `ring GF <q>`. The second is either
//! `dense <c0> <c1> ...` or `sparse <e>:<c> ...` with strictly increasing
//! exponents and nonzero coefficients. Over 𝔽_q every coefficient must be a
//! canonical residue in `[0, q)`. Blank lines and lines starting with `#` are
//! ignored.

use std::fmt::Write as _;

use num_bigint::{BigInt, Sign};
use num_traits::Zero;

use super::{DensePoly, Poly, SparsePoly, MAX_EXPONENT};
use crate::error::{Error, Result};
use crate::rings::{Fp64, FpBig, Integers, PrimeField, Ring, RingCtx};

/// Coefficients exactly as written in a file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coeffs {
    Dense(Vec<BigInt>),
    Sparse(Vec<(u64, BigInt)>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyFile {
    pub ring: RingCtx,
    pub coeffs: Coeffs,
}

/// Rings whose elements have a canonical integer representative.
pub trait TextRing: Ring {
    fn ctx(&self) -> RingCtx;
    fn to_bigint(&self, a: &Self::Elem) -> BigInt;
}

impl TextRing for Integers {
    fn ctx(&self) -> RingCtx {
        RingCtx::Integers
    }

    fn to_bigint(&self, a: &BigInt) -> BigInt {
        a.clone()
    }
}

impl TextRing for Fp64 {
    fn ctx(&self) -> RingCtx {
        RingCtx::of_fp64(self)
    }

    fn to_bigint(&self, a: &u64) -> BigInt {
        BigInt::from(*a)
    }
}

impl TextRing for FpBig {
    fn ctx(&self) -> RingCtx {
        RingCtx::of_fpbig(self)
    }

    fn to_bigint(&self, a: &num_bigint::BigUint) -> BigInt {
        BigInt::from_biguint(Sign::Plus, self.to_biguint(a))
    }
}

impl PolyFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing ring header".into() })?;
        let ring_text = header
            .strip_prefix("ring")
            .ok_or_else(|| Error::Parse { line: hline, msg: "expected `ring Z` or `ring GF <q>`".into() })?;
        let ring: RingCtx =
            ring_text.trim().parse().map_err(|e: Error| Error::Parse { line: hline, msg: e.to_string() })?;
        let (bline, body) =
            lines.next().ok_or(Error::Parse { line: hline + 1, msg: "missing `dense` or `sparse` line".into() })?;
        if let Some((extra, _)) = lines.next() {
            return Err(Error::Parse { line: extra, msg: "one polynomial per file".into() });
        }
        let err = |msg: String| Error::Parse { line: bline, msg };
        let mut tokens = body.split_whitespace();
        let kind = tokens.next().unwrap_or_default();
        let check = |c: &BigInt| -> Result<()> {
            if let RingCtx::PrimeField { q } = &ring {
                if c.sign() == Sign::Minus || c.magnitude() >= q {
                    return Err(err(format!("coefficient {c} is not a canonical residue mod {q}")));
                }
            }
            Ok(())
        };
        let coeffs = match kind {
            "dense" => {
                let mut cs = Vec::new();
                for t in tokens {
                    let c: BigInt = t.parse().map_err(|_| err(format!("bad coefficient {t:?}")))?;
                    check(&c)?;
                    cs.push(c);
                }
                while cs.last().is_some_and(Zero::is_zero) {
                    cs.pop();
                }
                Coeffs::Dense(cs)
            }
            "sparse" => {
                let mut ts: Vec<(u64, BigInt)> = Vec::new();
                for t in tokens {
                    let (e, c) = t.split_once(':').ok_or_else(|| err(format!("expected e:c, got {t:?}")))?;
                    let e: u64 = e.parse().map_err(|_| err(format!("bad exponent {e:?}")))?;
                    if e > MAX_EXPONENT {
                        return Err(err(format!("exponent {e} exceeds 2^63 - 1")));
                    }
                    let c: BigInt = c.parse().map_err(|_| err(format!("bad coefficient {c:?}")))?;
                    check(&c)?;
                    if c.is_zero() {
                        return Err(err(format!("zero coefficient at exponent {e}")));
                    }
                    if ts.last().is_some_and(|(prev, _)| *prev >= e) {
                        return Err(err(format!("exponent {e} is not strictly increasing")));
                    }
                    ts.push((e, c));
                }
                Coeffs::Sparse(ts)
            }
            other => return Err(err(format!("expected `dense` or `sparse`, got {other:?}"))),
        };
        Ok(Self { ring, coeffs })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "ring {}", self.ring);
        match &self.coeffs {
            Coeffs::Dense(cs) => {
                out.push_str("dense");
                for c in cs {
                    let _ = write!(out, " {c}");
                }
            }
            Coeffs::Sparse(ts) => {
                out.push_str("sparse");
                for (e, c) in ts {
                    let _ = write!(out, " {e}:{c}");
                }
            }
        }
        out.push('\n');
        out
    }

    pub fn is_sparse(&self) -> bool {
        matches!(self.coeffs, Coeffs::Sparse(_))
    }

    /// The polynomial with coefficients mapped into `ring`.
    pub fn to_poly<R: Ring>(&self, ring: &R) -> Result<Poly<R>> {
        Ok(match &self.coeffs {
            Coeffs::Dense(cs) => {
                Poly::Dense(DensePoly::new(ring.clone(), cs.iter().map(|c| ring.from_int(c)).collect()))
            }
            Coeffs::Sparse(ts) => {
                Poly::Sparse(SparsePoly::new(ring.clone(), ts.iter().map(|(e, c)| (*e, ring.from_int(c))).collect())?)
            }
        })
    }

    pub fn from_poly<R: TextRing>(p: &Poly<R>) -> Self {
        let ring = p.ring();
        let coeffs = match p {
            Poly::Dense(d) => Coeffs::Dense(d.coeffs().iter().map(|c| ring.to_bigint(c)).collect()),
            Poly::Sparse(s) => Coeffs::Sparse(s.terms().iter().map(|(e, c)| (*e, ring.to_bigint(c))).collect()),
        };
        Self { ring: ring.ctx(), coeffs }
    }
}
