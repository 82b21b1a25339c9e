//! Verifying `H = (F·G) mod P` over a large prime field, and rejecting a
//! single wrong coefficient.

use polyproof::modverify::{verify_mod, VerifyConfig};
use polyproof::oracle::oracle_mod_product;
use polyproof::rings::FiniteField;
use polyproof::{DensePoly, Fp64, Poly, RngStream, SparsePoly};

fn main() -> polyproof::Result<()> {
    let field = Fp64::new((1 << 61) - 1)?;
    let mut rng = RngStream::new(7);
    let n = 4096;
    let p = SparsePoly::from_i64s(field, &[(0, 1), (1, 1), (n, 1)])?;
    let f: Poly<Fp64> = DensePoly::new(field, (0..n).map(|_| field.random_elem(&mut rng)).collect()).into();
    let g: Poly<Fp64> = DensePoly::new(field, (0..n).map(|_| field.random_elem(&mut rng)).collect()).into();
    let h = oracle_mod_product(&f, &g, &p)?;

    let cfg = VerifyConfig::new(1e-9, 1)?;
    println!("{}", verify_mod(&f, &g, &h, &p, &cfg)?.to_json_line());

    let bad: Poly<Fp64> = h.to_dense().add(&DensePoly::monomial(field, 1, 1000))?.into();
    println!("{}", verify_mod(&f, &g, &bad, &p, &cfg)?.to_json_line());
    Ok(())
}
