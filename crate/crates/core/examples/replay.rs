//! Reports are reproducible from their seed, and polynomial files round-trip
//! through the text format used by the command line.

use polyproof::modverify::{verify_mod_ff, Method, VerifyConfig};
use polyproof::oracle::oracle_mod_product;
use polyproof::poly::text::PolyFile;
use polyproof::{DensePoly, Fp64, Poly, SparsePoly};

fn main() -> polyproof::Result<()> {
    let field = Fp64::new(5)?;
    let f: Poly<Fp64> = DensePoly::from_i64s(field, &[1, 2, 3, 4, 0, 1]).into();
    let g: Poly<Fp64> = DensePoly::from_i64s(field, &[4, 4, 0, 1]).into();
    let p = SparsePoly::from_i64s(field, &[(0, 2), (6, 1)])?;
    let h = oracle_mod_product(&f, &g, &p)?;
    let bad: Poly<Fp64> = h.to_dense().add(&DensePoly::from_i64s(field, &[0, 1]))?.into();

    let cfg = VerifyConfig::new(0.05, 2024)?.with_method(Method::CompanionFreivalds);
    let first = verify_mod_ff(&f, &g, &bad, &p, &cfg)?.to_json_line();
    let again = verify_mod_ff(&f, &g, &bad, &p, &cfg)?.to_json_line();
    println!("{first}");
    assert_eq!(first, again);

    let text = PolyFile::from_poly(&h).render();
    print!("{text}");
    assert_eq!(PolyFile::parse(&text)?.render(), text);
    Ok(())
}
