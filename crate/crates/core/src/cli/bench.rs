use std::io::Write;
use std::time::Instant;

use clap::ValueEnum;
use rand::RngCore;

use super::{err, BenchArgs, CliRing, CmdResult, EXIT_TRUE};
use crate::error::Result;
use crate::modverify::{verify_mod_ff, verify_mod_over_z, Method, VerifyConfig};
use crate::poly::text::TextRing;
use crate::poly::{mod_reduce, mul_oracle, DensePoly, Poly, SparsePoly};
use crate::prodverify::{
    verify_product_kaminski, verify_product_kaminski_nomul, verify_product_kronecker, verify_sparse_product,
    KaminskiParams, SparseVerifyParams,
};
use crate::report::VerifyReport;
use crate::rings::{Fp64, Integers, RngStream};

pub const BENCH_HEADER: &str = "method,ring,n,T,q_or_C_bits,trials,mean_verify_s,mean_multiply_s,acceptance_rate";

/// Word-size Mersenne prime `2^61 − 1`.
const WORD_PRIME: u64 = (1 << 61) - 1;
const COEFF_BITS: u64 = 16;
const EPSILON: f64 = 1.0 / 1_048_576.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Modverify,
    Prodverify,
}

/// One CSV line: mean times over `trials` oracle-true instances.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub method: String,
    pub ring: String,
    pub n: u64,
    pub t: u64,
    pub q_or_c_bits: u64,
    pub trials: u64,
    pub mean_verify_s: f64,
    pub mean_multiply_s: f64,
    pub acceptance_rate: f64,
}

impl BenchRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{:.6e},{:.6e},{:.4}",
            self.method,
            self.ring,
            self.n,
            self.t,
            self.q_or_c_bits,
            self.trials,
            self.mean_verify_s,
            self.mean_multiply_s,
            self.acceptance_rate
        )
    }
}

/// Accepts a decimal size or `2^k`.
pub(super) fn parse_size(s: &str) -> std::result::Result<u64, String> {
    let n = match s.trim().split_once('^') {
        Some(("2", k)) => {
            let k: u32 = k.parse().map_err(|_| format!("bad exponent in {s:?}"))?;
            1u64.checked_shl(k).filter(|_| k < 40).ok_or_else(|| format!("{s} is too large"))?
        }
        Some(_) => return Err(format!("only powers of 2 may use ^, got {s:?}")),
        None => s.trim().parse().map_err(|_| format!("bad size {s:?}"))?,
    };
    if n < 2 {
        return Err(format!("size must be at least 2, got {n}"));
    }
    Ok(n)
}

pub(super) fn run(args: &BenchArgs, out: &mut dyn Write) -> CmdResult {
    let rows = if args.trials == 0 {
        Vec::new()
    } else {
        let mut rng = RngStream::new(args.seed);
        let mut rows = Vec::new();
        for &n in &args.sizes {
            let seeds: Vec<u64> = (0..args.trials).map(|_| rng.next_u64()).collect();
            rows.extend(
                match args.suite {
                    Suite::Modverify => modverify_rows(n, &seeds),
                    Suite::Prodverify => prodverify_rows(n, &seeds),
                }
                .map_err(err)?,
            );
        }
        rows
    };
    let mut csv = String::from(BENCH_HEADER);
    csv.push('\n');
    for row in &rows {
        csv.push_str(&row.to_csv());
        csv.push('\n');
    }
    out.write_all(csv.as_bytes()).map_err(err)?;
    if let Some(path) = &args.csv {
        std::fs::write(path, &csv).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(EXIT_TRUE)
}

struct Tally {
    verify: f64,
    multiply: f64,
    accepted: u64,
    trials: u64,
}

impl Tally {
    fn new() -> Self {
        Self { verify: 0.0, multiply: 0.0, accepted: 0, trials: 0 }
    }

    fn add(&mut self, verify: f64, multiply: f64, report: &VerifyReport) {
        self.verify += verify;
        self.multiply += multiply;
        self.accepted += report.verdict as u64;
        self.trials += 1;
    }

    fn row(&self, method: &str, ring: String, n: u64, t: u64, bits: u64) -> BenchRow {
        let k = self.trials.max(1) as f64;
        BenchRow {
            method: method.into(),
            ring,
            n,
            t,
            q_or_c_bits: bits,
            trials: self.trials,
            mean_verify_s: self.verify / k,
            mean_multiply_s: self.multiply / k,
            acceptance_rate: self.accepted as f64 / k,
        }
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_secs_f64())
}

fn dense<R: CliRing>(ring: &R, n: u64, rng: &mut RngStream) -> Poly<R> {
    DensePoly::new(ring.clone(), (0..n).map(|_| ring.random_coeff(COEFF_BITS, rng)).collect()).into()
}

fn sparse<R: CliRing>(ring: &R, n: u64, t: u64, rng: &mut RngStream) -> Result<Poly<R>> {
    let mut support = std::collections::BTreeSet::new();
    while (support.len() as u64) < t {
        support.insert(rng.below(n));
    }
    let terms = support
        .into_iter()
        .map(|e| loop {
            let c = ring.random_coeff(COEFF_BITS, rng);
            if !ring.is_zero(&c) {
                break (e, c);
            }
        })
        .collect();
    Ok(SparsePoly::new(ring.clone(), terms)?.into())
}

/// Modular rows use `P = X^n + X + 1` and dense `F`, `G` with `n`
/// coefficients; the multiply column times `(F·G) mod P` by Karatsuba
/// multiplication and reduction.
fn modverify_rows(n: u64, seeds: &[u64]) -> Result<Vec<BenchRow>> {
    fn run_ring<R: CliRing>(
        ring: R,
        n: u64,
        seeds: &[u64],
        verify: impl Fn(&Poly<R>, &Poly<R>, &Poly<R>, &SparsePoly<R>, &VerifyConfig) -> Result<VerifyReport>,
    ) -> Result<Tally> {
        let p = SparsePoly::new(ring.clone(), vec![(0, ring.one()), (1, ring.one()), (n, ring.one())])?;
        let mut tally = Tally::new();
        for &seed in seeds {
            let mut rng = RngStream::new(seed);
            let (f, g) = (dense(&ring, n, &mut rng), dense(&ring, n, &mut rng));
            let (h, mul_s) = timed(|| mul_oracle(&f, &g).and_then(|q| mod_reduce(&q, &p)));
            let h = h?;
            let cfg = VerifyConfig::new(EPSILON, rng.next_u64())?;
            let (report, verify_s) = timed(|| verify(&f, &g, &h, &p, &cfg));
            tally.add(verify_s, mul_s, &report?);
        }
        Ok(tally)
    }
    let word = Fp64::new(WORD_PRIME)?;
    let f2 = Fp64::new(2)?;
    let bits = |q: u64| 64 - q.leading_zeros() as u64;
    Ok(vec![
        run_ring(word, n, seeds, |f, g, h, p, c| verify_mod_ff(f, g, h, p, &c.with_method(Method::DirectEval)))?.row(
            "direct-eval",
            word.ctx().to_string(),
            n,
            n,
            bits(WORD_PRIME),
        ),
        run_ring(f2, n, seeds, |f, g, h, p, c| verify_mod_ff(f, g, h, p, &c.with_method(Method::Extension)))?.row(
            "extension",
            f2.ctx().to_string(),
            n,
            n,
            1,
        ),
        run_ring(Integers, n, seeds, verify_mod_over_z)?.row("over-z", "Z".into(), n, n, COEFF_BITS),
    ])
}

/// Product rows: dense `F`, `G` with `n` coefficients, or sparse ones with
/// `T = ⌈√n⌉` terms of degree below `n`.
fn prodverify_rows(n: u64, seeds: &[u64]) -> Result<Vec<BenchRow>> {
    fn run_ring<R: CliRing>(
        ring: R,
        n: u64,
        t: Option<u64>,
        seeds: &[u64],
        verify: impl Fn(&Poly<R>, &Poly<R>, &Poly<R>, &VerifyConfig) -> Result<VerifyReport>,
    ) -> Result<Tally> {
        let mut tally = Tally::new();
        for &seed in seeds {
            let mut rng = RngStream::new(seed);
            let (f, g) = match t {
                Some(t) => (sparse(&ring, n, t, &mut rng)?, sparse(&ring, n, t, &mut rng)?),
                None => (dense(&ring, n, &mut rng), dense(&ring, n, &mut rng)),
            };
            let (h, mul_s) = timed(|| mul_oracle(&f, &g));
            let h = h?;
            let cfg = VerifyConfig::new(EPSILON, rng.next_u64())?;
            let (report, verify_s) = timed(|| verify(&f, &g, &h, &cfg));
            tally.add(verify_s, mul_s, &report?);
        }
        Ok(tally)
    }
    let word = Fp64::new(WORD_PRIME)?;
    let wbits = 64 - WORD_PRIME.leading_zeros() as u64;
    let wring = word.ctx().to_string();
    let exact = KaminskiParams::default();
    let one_round = KaminskiParams::default().with_rounds(1);
    let t = ((n as f64).sqrt().ceil() as u64).max(2);
    let sp = SparseVerifyParams::new(EPSILON)?;
    Ok(vec![
        run_ring(word, n, None, seeds, |f, g, h, c| verify_product_kaminski(f, g, h, &exact, c))?.row(
            "kaminski",
            wring.clone(),
            n,
            n,
            wbits,
        ),
        run_ring(word, n, None, seeds, |f, g, h, c| verify_product_kaminski(f, g, h, &one_round, c))?.row(
            "kaminski-1-round",
            wring.clone(),
            n,
            n,
            wbits,
        ),
        run_ring(word, n, None, seeds, |f, g, h, c| verify_product_kaminski_nomul(f, g, h, &exact, c))?.row(
            "kaminski-nomul",
            wring.clone(),
            n,
            n,
            wbits,
        ),
        run_ring(Integers, n, None, seeds, |f, g, h, c| verify_product_kronecker(f, g, h, &exact, c))?.row(
            "kronecker",
            "Z".into(),
            n,
            n,
            COEFF_BITS,
        ),
        run_ring(Integers, n, Some(t), seeds, |f, g, h, c| {
            verify_sparse_product(&f.to_sparse(), &g.to_sparse(), &h.to_sparse(), &sp, c.seed)
        })?
        .row("sparse", "Z".into(), n, t, COEFF_BITS),
    ])
}
