//! Verification over 𝔽_2, where no point of the field suffices: through an
//! extension field, and through companion matrices with no polynomial
//! multiplication at all.

use polyproof::instrument::count_poly_muls;
use polyproof::modverify::{verify_mod_companion, verify_mod_ff, CompanionMode, Method, VerifyConfig};
use polyproof::oracle::oracle_mod_product;
use polyproof::rings::FiniteField;
use polyproof::{DensePoly, Fp64, Poly, RngStream, SparsePoly};

fn main() -> polyproof::Result<()> {
    let f2 = Fp64::new(2)?;
    let mut rng = RngStream::new(3);
    let p = SparsePoly::from_i64s(f2, &[(0, 1), (3, 1), (200, 1)])?;
    let f: Poly<Fp64> = DensePoly::new(f2, (0..200).map(|_| f2.random_elem(&mut rng)).collect()).into();
    let g: Poly<Fp64> = DensePoly::new(f2, (0..200).map(|_| f2.random_elem(&mut rng)).collect()).into();
    let h = oracle_mod_product(&f, &g, &p)?;
    let bad: Poly<Fp64> = h.to_dense().add(&DensePoly::monomial(f2, 1, 17))?.into();

    for method in [Method::Extension, Method::CompanionFreivalds, Method::CompanionNoPolymul] {
        let cfg = VerifyConfig::new(0.001, 11)?.with_method(method);
        let good = verify_mod_ff(&f, &g, &h, &p, &cfg)?;
        let wrong = verify_mod_ff(&f, &g, &bad, &p, &cfg)?;
        println!("{method:<22} true: {}  perturbed: {}  rounds: {}", good.verdict, wrong.verdict, good.rounds);
    }

    let cfg = VerifyConfig::new(0.001, 12)?;
    let (report, muls) = count_poly_muls(|| verify_mod_companion(&f, &g, &h, &p, &cfg, CompanionMode::NoPolymul));
    println!("companion-no-polymul made {muls} polynomial multiplications; verdict {}", report?.verdict);
    Ok(())
}
