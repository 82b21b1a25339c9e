use std::collections::BTreeSet;
use std::io::Write;
use std::path::PathBuf;

use clap::ValueEnum;
use serde_json::json;

use super::{err, with_ring, CliRing, CmdResult, GenArgs, EXIT_TRUE};
use crate::error::Result;
use crate::poly::text::PolyFile;
use crate::poly::{mul_oracle, DensePoly, Poly, SparsePoly};
use crate::prodverify::{lcm_adversarial_delta, KaminskiParams};
use crate::rings::{Fp64, FpBig, Integers, RingCtx, RngStream};

/// Perturbations written by `gen --adversarial`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Adversarial {
    /// `H = F·G + c·X^j` for random `j` and nonzero `c`.
    SingleCoeff,
    /// `H = F·G + X^L − 1` with `L ≤ 2n` divisible by many `i` of the
    /// Kaminski range.
    Lcm,
    /// The fixed triple `F = X^14 + 2X^7 + 2`, `G = 3X^13 + 5X^8 + 3`, `H = F·G`.
    Example1,
    /// `F = Σ X^i`, `G = Σ (X^{iT+1} − X^{iT})`, `H = X^{T²} − 1` for `i < T`.
    Example2,
}

impl Adversarial {
    fn name(self) -> &'static str {
        match self {
            Adversarial::SingleCoeff => "single-coeff",
            Adversarial::Lcm => "lcm",
            Adversarial::Example1 => "example1",
            Adversarial::Example2 => "example2",
        }
    }
}

struct Instance<R: CliRing> {
    f: Poly<R>,
    g: Poly<R>,
    h: Poly<R>,
    expected: bool,
}

pub(super) fn run(args: &GenArgs, out: &mut dyn Write) -> CmdResult {
    if args.n == 0 {
        return Err("--n must be positive".into());
    }
    let fixed = matches!(args.adversarial, Some(Adversarial::Example1 | Adversarial::Example2));
    if args.t.is_some_and(|t| t == 0 || (!fixed && t > args.n)) {
        return Err(format!("--T must lie in [1, n = {}]", args.n));
    }
    if args.coeff_bits == 0 || args.coeff_bits > 1 << 16 {
        return Err("--coeff-bits must lie in [1, 65536]".into());
    }
    let files = with_ring!(&args.ring, r => write_instance(generate(r, args).map_err(err)?, args))?;
    let manifest = json!({
        "ring": args.ring.to_string(),
        "n": args.n,
        "T": args.t,
        "coeff_bits": args.coeff_bits,
        "seed": args.seed,
        "adversarial": args.adversarial.map(Adversarial::name),
        "expected": files.1,
        "files": {
            "F": files.0[0].display().to_string(),
            "G": files.0[1].display().to_string(),
            "H": files.0[2].display().to_string(),
        },
    });
    writeln!(out, "{manifest}").map_err(err)?;
    Ok(EXIT_TRUE)
}

fn write_instance<R: CliRing>(inst: Instance<R>, args: &GenArgs) -> std::result::Result<([PathBuf; 3], bool), String> {
    let mut paths = Vec::new();
    for (name, p) in [("F", &inst.f), ("G", &inst.g), ("H", &inst.h)] {
        let mut path = args.out_prefix.clone().into_os_string();
        path.push(format!(".{name}.poly"));
        let path = PathBuf::from(path);
        std::fs::write(&path, PolyFile::from_poly(p).render()).map_err(|e| format!("{}: {e}", path.display()))?;
        paths.push(path);
    }
    Ok((paths.try_into().expect("three files"), inst.expected))
}

fn generate<R: CliRing>(ring: R, args: &GenArgs) -> Result<Instance<R>> {
    let mut rng = RngStream::new(args.seed);
    let sparse = |x: Vec<(u64, i64)>| {
        SparsePoly::from_unsorted(ring.clone(), x.into_iter().map(|(e, c)| (e, ring.from_i64(c))).collect())
    };
    match args.adversarial {
        Some(Adversarial::Example1) => {
            let f = sparse(vec![(0, 2), (7, 2), (14, 1)])?;
            let g = sparse(vec![(0, 3), (8, 5), (13, 3)])?;
            let h = mul_oracle(&f.clone().into(), &g.clone().into())?;
            return Ok(Instance { f: f.into(), g: g.into(), h: h.to_sparse().into(), expected: true });
        }
        Some(Adversarial::Example2) => {
            let t = args.t.unwrap_or(10);
            let f = sparse((0..t).map(|i| (i, 1)).collect())?;
            let g = sparse((0..t).flat_map(|i| [(i * t, -1), (i * t + 1, 1)]).collect())?;
            let h = SparsePoly::binomial(ring.clone(), t * t)?;
            return Ok(Instance { f: f.into(), g: g.into(), h: h.into(), expected: true });
        }
        _ => {}
    }
    let (f, g) = (random_poly(&ring, args, &mut rng)?, random_poly(&ring, args, &mut rng)?);
    let product = mul_oracle(&f, &g)?;
    let delta: Option<Poly<R>> = match args.adversarial {
        Some(Adversarial::SingleCoeff) => {
            let j = rng.below(product.deg().unwrap_or(0) + 1);
            Some(SparsePoly::monomial(ring.clone(), nonzero(&ring, args.coeff_bits, &mut rng), j)?.into())
        }
        Some(Adversarial::Lcm) => {
            let n = f.deg().max(g.deg()).unwrap_or(0).max(1);
            Some(lcm_adversarial_delta(ring.clone(), n, &KaminskiParams::default())?.into())
        }
        _ => None,
    };
    let h = match &delta {
        Some(d) => Poly::Sparse(product.to_sparse().add(&d.to_sparse())?),
        None => product,
    };
    let h = if args.t.is_some() { Poly::Sparse(h.to_sparse()) } else { Poly::Dense(h.to_dense()) };
    let expected = delta.is_none_or(|d| d.is_zero());
    Ok(Instance { f, g, h, expected })
}

fn nonzero<R: CliRing>(ring: &R, bits: u64, rng: &mut RngStream) -> R::Elem {
    loop {
        let c = ring.random_coeff(bits, rng);
        if !ring.is_zero(&c) {
            return c;
        }
    }
}

fn random_poly<R: CliRing>(ring: &R, args: &GenArgs, rng: &mut RngStream) -> Result<Poly<R>> {
    match args.t {
        Some(t) => {
            let mut support = BTreeSet::new();
            while (support.len() as u64) < t {
                support.insert(rng.below(args.n));
            }
            let terms = support.into_iter().map(|e| (e, nonzero(ring, args.coeff_bits, rng))).collect();
            Ok(SparsePoly::new(ring.clone(), terms)?.into())
        }
        None => {
            let coeffs = (0..args.n).map(|_| ring.random_coeff(args.coeff_bits, rng)).collect();
            Ok(DensePoly::new(ring.clone(), coeffs).into())
        }
    }
}
