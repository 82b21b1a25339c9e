//! Integer products checked modulo `2^i − 1`, and integer polynomial products
//! reduced to one integer product by Kronecker substitution.

use num_bigint::BigInt;
use polyproof::modverify::VerifyConfig;
use polyproof::poly::mul_oracle;
use polyproof::prodverify::{kronecker_base_bits, verify_int_product, verify_product_kronecker, KaminskiParams};
use polyproof::{DensePoly, Integers, Poly};

fn main() -> polyproof::Result<()> {
    let params = KaminskiParams::default().with_rounds(4);
    let cfg = VerifyConfig::new(0.25, 9)?;
    let a: BigInt = "31415926535897932384626433832795028841971693993751".parse().unwrap();
    let b: BigInt = "-27182818284590452353602874713526624977572470936999".parse().unwrap();
    let c = &a * &b;
    println!("a·b = c:     {}", verify_int_product(&a, &b, &c, &params, &cfg)?.verdict);
    println!("a·b = c + 1: {}", verify_int_product(&a, &b, &(&c + 1), &params, &cfg)?.verdict);

    let f: Poly<Integers> = DensePoly::from_i64s(Integers, &[3, -1, 4, -1, 5, -9, 2, 6]).into();
    let g: Poly<Integers> = DensePoly::from_i64s(Integers, &[-2, 7, 1, -8, 2, 8]).into();
    let h = mul_oracle(&f, &g)?;
    let c_max = h.norm().max(f.norm()).max(g.norm());
    println!("evaluation point 2^{}", kronecker_base_bits(8, &c_max));
    let exact = KaminskiParams::default();
    println!("{}", verify_product_kronecker(&f, &g, &h, &exact, &cfg)?.to_json_line());
    let bad: Poly<Integers> = h.to_dense().add(&DensePoly::from_i64s(Integers, &[1]))?.into();
    println!("{}", verify_product_kronecker(&f, &g, &bad, &exact, &cfg)?.to_json_line());
    Ok(())
}
