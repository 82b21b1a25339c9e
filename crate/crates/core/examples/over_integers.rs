//! Verification over ℤ with large coefficients: inputs are reduced modulo a
//! random prime first.

use num_bigint::BigInt;
use polyproof::modverify::{delta_norm_bound, verify_mod_over_z, VerifyConfig};
use polyproof::oracle::oracle_mod_product;
use polyproof::{DensePoly, Integers, Poly, SparsePoly};

fn main() -> polyproof::Result<()> {
    let big = BigInt::from(1) << 200u32;
    let f: Poly<Integers> = DensePoly::new(Integers, (0..50).map(|i| &big + i).collect()).into();
    let g: Poly<Integers> = DensePoly::new(Integers, (0..50).map(|i| &big - 3 * i).collect()).into();
    let p = SparsePoly::from_i64s(Integers, &[(0, -1), (7, 2), (50, 1)])?;
    let h = oracle_mod_product(&f, &g, &p)?;
    println!("coefficient bound has {} bits", delta_norm_bound(&f, &g, &h, &p)?.bits());

    let cfg = VerifyConfig::new(1e-6, 5)?;
    println!("{}", verify_mod_over_z(&f, &g, &h, &p, &cfg)?.to_json_line());
    let bad: Poly<Integers> = h.to_dense().add(&DensePoly::from_i64s(Integers, &[0, 0, 1]))?.into();
    println!("{}", verify_mod_over_z(&f, &g, &bad, &p, &cfg)?.to_json_line());
    Ok(())
}
