//! Command-line front end.
//!
//! ```text
//! polyproof verify-mod  --F f.poly --G g.poly --H h.poly --P p.poly [--method M] [--epsilon E] [--seed S]
//! polyproof verify-prod --F f.poly --G g.poly --H h.poly [--method M] [--epsilon E] [--seed S]
//! polyproof gen   --ring GF:65537 --n 1000 [--T 20] --out-prefix inst [--adversarial KIND]
//! polyproof bench --suite modverify --sizes 1024,2^16 --trials 5
//! ```
//!
//! Verification commands print one JSON report per line and exit with 0 when
//! the identity is accepted, 1 when it is rejected and 2 on any usage or
//! input error. `POLYPROOF_SEED` supplies the seed when `--seed` is absent.

mod bench;
mod gen;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::error::Error;
use crate::modverify::{verify_mod_over_z, Method, ModularDomain, VerifyConfig};
use crate::poly::text::{PolyFile, TextRing};
use crate::poly::Poly;
use crate::prodverify::{
    verify_product_kaminski, verify_product_kaminski_nomul, verify_product_kronecker, verify_sparse_product,
    KaminskiParams, SparseVerifyParams,
};
use crate::report::VerifyReport;
use crate::rings::{FiniteField, Fp64, FpBig, Integers, RingCtx, RngStream};

pub use bench::{BenchRow, Suite, BENCH_HEADER};
pub use gen::Adversarial;

/// Exit code for an accepted identity.
pub const EXIT_TRUE: i32 = 0;
/// Exit code for a rejected identity.
pub const EXIT_FALSE: i32 = 1;
/// Exit code for usage, parse and parameter errors.
pub const EXIT_ERROR: i32 = 2;

const DEFAULT_EPSILON: f64 = 1.0 / 1_048_576.0;

#[derive(Debug, Parser)]
#[command(name = "polyproof", version, about = "Probabilistic verification of polynomial products")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check H = (F·G) mod P.
    VerifyMod(VerifyModArgs),
    /// Check H = F·G.
    VerifyProd(VerifyProdArgs),
    /// Write a random instance F, G, H = F·G (or a perturbed H).
    Gen(GenArgs),
    /// Time verifiers against multiplication and print CSV.
    Bench(BenchArgs),
}

#[derive(Debug, clap::Args)]
pub struct Common {
    #[arg(long = "F", value_name = "FILE")]
    pub f: PathBuf,
    #[arg(long = "G", value_name = "FILE")]
    pub g: PathBuf,
    #[arg(long = "H", value_name = "FILE")]
    pub h: PathBuf,
    /// Target error probability.
    #[arg(long, default_value_t = DEFAULT_EPSILON)]
    pub epsilon: f64,
    #[arg(long, env = "POLYPROOF_SEED", default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, clap::Args)]
pub struct VerifyModArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long = "P", value_name = "FILE")]
    pub p: PathBuf,
    /// auto, direct-eval, extension, companion-freivalds or companion-no-polymul.
    #[arg(long, default_value = "auto")]
    pub method: Method,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProdMethod {
    Auto,
    Kaminski,
    KaminskiNomul,
    Kronecker,
    Sparse,
}

#[derive(Debug, clap::Args)]
pub struct VerifyProdArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum, default_value_t = ProdMethod::Auto)]
    pub method: ProdMethod,
    /// Exponent e in (0, 1/2) of the Kaminski reduction.
    #[arg(long, default_value_t = 0.45)]
    pub kaminski_e: f64,
    /// Force this many randomized Kaminski rounds instead of the exact check
    /// used below the size threshold.
    #[arg(long)]
    pub rounds: Option<u64>,
}

#[derive(Debug, clap::Args)]
pub struct GenArgs {
    /// Z or GF:<q>.
    #[arg(long, default_value = "Z")]
    pub ring: RingCtx,
    /// Number of coefficients (dense) or exponent bound (sparse) of F and G.
    #[arg(long, default_value_t = 64)]
    pub n: u64,
    /// Sparsity of F and G; sparse files are written when given.
    #[arg(long = "T")]
    pub t: Option<u64>,
    /// Coefficient size over Z: entries lie in (-2^b, 2^b).
    #[arg(long, default_value_t = 16)]
    pub coeff_bits: u64,
    #[arg(long, env = "POLYPROOF_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out_prefix: PathBuf,
    #[arg(long, value_enum)]
    pub adversarial: Option<Adversarial>,
}

#[derive(Debug, clap::Args)]
pub struct BenchArgs {
    #[arg(long, value_enum, default_value_t = Suite::Modverify)]
    pub suite: Suite,
    /// Comma-separated sizes; `2^k` is accepted.
    #[arg(long, default_value = "1024", value_parser = bench::parse_size, value_delimiter = ',')]
    pub sizes: Vec<u64>,
    #[arg(long, default_value_t = 3)]
    pub trials: u64,
    #[arg(long, env = "POLYPROOF_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Also write the CSV to this file.
    #[arg(long, value_name = "FILE")]
    pub csv: Option<PathBuf>,
}

/// Parses `args` (including the program name) and runs the command, writing
/// to standard output and standard error. Returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// [`run`] with explicit output streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_TRUE };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_ERROR
        }
    }
}

type CmdResult = std::result::Result<i32, String>;

fn execute(command: Command, out: &mut dyn Write) -> CmdResult {
    match command {
        Command::VerifyMod(args) => verify_mod_cmd(&args, out),
        Command::VerifyProd(args) => verify_prod_cmd(&args, out),
        Command::Gen(args) => gen::run(&args, out),
        Command::Bench(args) => bench::run(&args, out),
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn load(path: &Path) -> std::result::Result<PolyFile, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    PolyFile::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn common_ring(files: &[&PolyFile]) -> std::result::Result<RingCtx, String> {
    let ring = files[0].ring.clone();
    if files.iter().any(|f| f.ring != ring) {
        return Err(err(Error::MixedRings));
    }
    Ok(ring)
}

/// Coefficient domains reachable from the command line.
pub(crate) trait CliRing: ModularDomain + TextRing {
    fn random_coeff(&self, bits: u64, rng: &mut RngStream) -> Self::Elem;

    fn verify_mod_method(
        f: &Poly<Self>,
        g: &Poly<Self>,
        h: &Poly<Self>,
        p: &crate::poly::SparsePoly<Self>,
        cfg: &VerifyConfig,
    ) -> crate::Result<VerifyReport> {
        Self::verify_mod_auto(f, g, h, p, cfg)
    }

    fn kronecker(
        _f: &Poly<Self>,
        _g: &Poly<Self>,
        _h: &Poly<Self>,
        _params: &KaminskiParams,
        _cfg: &VerifyConfig,
    ) -> crate::Result<VerifyReport> {
        Err(Error::Unsupported("kronecker verification needs ring Z".into()))
    }

    /// Whether Kronecker substitution is the preferred automatic method.
    fn prefers_kronecker(_f: &Poly<Self>, _g: &Poly<Self>, _h: &Poly<Self>) -> bool {
        false
    }
}

impl CliRing for Integers {
    fn random_coeff(&self, bits: u64, rng: &mut RngStream) -> BigInt {
        let bound = BigUint::one() << bits;
        let m = BigInt::from(rng.below_big(&bound));
        if rng.bit() {
            -m
        } else {
            m
        }
    }

    fn verify_mod_method(
        f: &Poly<Self>,
        g: &Poly<Self>,
        h: &Poly<Self>,
        p: &crate::poly::SparsePoly<Self>,
        cfg: &VerifyConfig,
    ) -> crate::Result<VerifyReport> {
        if cfg.method != Method::Auto {
            return Err(Error::Unsupported(format!("method {} needs a prime field", cfg.method)));
        }
        verify_mod_over_z(f, g, h, p, cfg)
    }

    fn kronecker(
        f: &Poly<Self>,
        g: &Poly<Self>,
        h: &Poly<Self>,
        params: &KaminskiParams,
        cfg: &VerifyConfig,
    ) -> crate::Result<VerifyReport> {
        verify_product_kronecker(f, g, h, params, cfg)
    }

    /// Kronecker substitution when `log₂ n` does not exceed the coefficient
    /// size in bits.
    fn prefers_kronecker(f: &Poly<Self>, g: &Poly<Self>, h: &Poly<Self>) -> bool {
        let n = f.deg().max(g.deg()).unwrap_or(0) + 1;
        let c = [f.norm(), g.norm(), h.norm()].into_iter().max().unwrap_or_default();
        (64 - n.leading_zeros()) as u64 <= c.bits().max(1)
    }
}

impl CliRing for Fp64 {
    fn random_coeff(&self, _bits: u64, rng: &mut RngStream) -> u64 {
        self.random_elem(rng)
    }
}

impl CliRing for FpBig {
    fn random_coeff(&self, _bits: u64, rng: &mut RngStream) -> BigUint {
        self.random_elem(rng)
    }
}

/// Binds `$r` to the concrete ring for `$ctx` and evaluates `$body`.
macro_rules! with_ring {
    ($ctx:expr, $r:ident => $body:expr) => {
        match $ctx {
            RingCtx::Integers => {
                let $r = Integers;
                $body
            }
            RingCtx::PrimeField { q } => {
                match u64::try_from(q).ok().filter(|&w| w < crate::rings::WORD_MODULUS_LIMIT) {
                    Some(w) => {
                        let $r = Fp64::new(w).map_err(err)?;
                        $body
                    }
                    None => {
                        let $r = FpBig::new(q.clone()).map_err(err)?;
                        $body
                    }
                }
            }
            RingCtx::ExtField { .. } => Err(err(crate::error::Error::Unsupported("extension-field files".into()))),
        }
    };
}
pub(crate) use with_ring;

fn emit(report: &VerifyReport, out: &mut dyn Write) -> CmdResult {
    writeln!(out, "{}", report.to_json_line()).map_err(err)?;
    Ok(if report.verdict { EXIT_TRUE } else { EXIT_FALSE })
}

fn verify_mod_cmd(args: &VerifyModArgs, out: &mut dyn Write) -> CmdResult {
    let c = &args.common;
    let files = [load(&c.f)?, load(&c.g)?, load(&c.h)?, load(&args.p)?];
    let ring = common_ring(&files.iter().collect::<Vec<_>>())?;
    let cfg = VerifyConfig::new(c.epsilon, c.seed).map_err(err)?.with_method(args.method);
    with_ring!(&ring, r => {
        let [f, g, h, p] = files.each_ref().map(|x| x.to_poly(&r));
        let (f, g, h, p) = (f.map_err(err)?, g.map_err(err)?, h.map_err(err)?, p.map_err(err)?.to_sparse());
        let report = CliRing::verify_mod_method(&f, &g, &h, &p, &cfg).map_err(err)?;
        emit(&report, out)
    })
}

fn verify_prod_cmd(args: &VerifyProdArgs, out: &mut dyn Write) -> CmdResult {
    let c = &args.common;
    let files = [load(&c.f)?, load(&c.g)?, load(&c.h)?];
    let ring = common_ring(&files.iter().collect::<Vec<_>>())?;
    let cfg = VerifyConfig::new(c.epsilon, c.seed).map_err(err)?;
    let mut params = KaminskiParams::new(args.kaminski_e).map_err(err)?;
    params.rounds = args.rounds;
    let all_sparse = files.iter().all(PolyFile::is_sparse);
    with_ring!(&ring, r => {
        let [f, g, h] = files.each_ref().map(|x| x.to_poly(&r));
        let (f, g, h) = (f.map_err(err)?, g.map_err(err)?, h.map_err(err)?);
        let report = verify_prod_in(&f, &g, &h, args.method, all_sparse, &params, &cfg).map_err(err)?;
        emit(&report, out)
    })
}

fn verify_prod_in<R: CliRing>(
    f: &Poly<R>,
    g: &Poly<R>,
    h: &Poly<R>,
    method: ProdMethod,
    all_sparse: bool,
    params: &KaminskiParams,
    cfg: &VerifyConfig,
) -> crate::Result<VerifyReport> {
    let method = match method {
        ProdMethod::Auto if all_sparse => ProdMethod::Sparse,
        ProdMethod::Auto if R::prefers_kronecker(f, g, h) => ProdMethod::Kronecker,
        ProdMethod::Auto => ProdMethod::Kaminski,
        m => m,
    };
    match method {
        ProdMethod::Kaminski | ProdMethod::Auto => verify_product_kaminski(f, g, h, params, cfg),
        ProdMethod::KaminskiNomul => verify_product_kaminski_nomul(f, g, h, params, cfg),
        ProdMethod::Kronecker => R::kronecker(f, g, h, params, cfg),
        ProdMethod::Sparse => {
            let sp = SparseVerifyParams::new(cfg.epsilon)?;
            verify_sparse_product(&f.to_sparse(), &g.to_sparse(), &h.to_sparse(), &sp, cfg.seed)
        }
    }
}
