//! Plain product verification by reduction modulo a random `X^i − 1`, and
//! the divisor count that bounds its error.

use polyproof::modverify::VerifyConfig;
use polyproof::poly::mul_dense;
use polyproof::prodverify::{
    count_binomial_divisors, lcm_adversarial_delta, verify_product_kaminski, verify_product_kaminski_nomul,
    KaminskiParams,
};
use polyproof::rings::FiniteField;
use polyproof::{DensePoly, Fp64, Integers, Poly, RngStream};

fn main() -> polyproof::Result<()> {
    let params = KaminskiParams::default();
    for n in [256u64, 1024, 4096] {
        let delta = lcm_adversarial_delta(Integers, n, &params)?;
        let count = count_binomial_divisors(&delta, n, &params)?;
        println!(
            "n = {n:>4}: k = {:>3}, worst-case divisors found = {count}, range = {:?}",
            params.k(n),
            params.range(n)
        );
    }
    println!("exact check below n = {}", params.n_min());

    let field = Fp64::new(65537)?;
    let mut rng = RngStream::new(8);
    let f = DensePoly::new(field, (0..3000).map(|_| field.random_elem(&mut rng)).collect());
    let g = DensePoly::new(field, (0..3000).map(|_| field.random_elem(&mut rng)).collect());
    let h = mul_dense(&f, &g)?;
    let (f, g, h): (Poly<Fp64>, Poly<Fp64>, Poly<Fp64>) = (f.into(), g.into(), h.into());
    let cfg = VerifyConfig::new(0.25, 2)?;
    let forced = params.with_rounds(3);
    println!("{}", verify_product_kaminski(&f, &g, &h, &forced, &cfg)?.to_json_line());
    println!("{}", verify_product_kaminski(&f, &g, &h, &params, &cfg)?.to_json_line());
    let nomul = verify_product_kaminski_nomul(&f, &g, &h, &params, &cfg)?;
    println!("no-multiplication variant: verdict {}, method {}", nomul.verdict, nomul.method);
    Ok(())
}
