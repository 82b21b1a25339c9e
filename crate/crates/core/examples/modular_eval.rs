//! Evaluating `(F·G) mod P` at a point without forming `F·G`, checked against
//! the reference product.

use polyproof::modeval::{eval_mod_binomial_sparse, eval_mod_p_dense, eval_mod_p_sparse};
use polyproof::oracle::oracle_mod_product;
use polyproof::poly::eval;
use polyproof::rings::{FiniteField, Ring};
use polyproof::{DensePoly, Fp64, Poly, RngStream, SparsePoly};

fn main() -> polyproof::Result<()> {
    let field = Fp64::new(65537)?;
    let mut rng = RngStream::new(42);
    let p = SparsePoly::from_i64s(field, &[(0, 5), (3, 1), (500, 1)])?;
    let f = DensePoly::new(field, (0..500).map(|_| field.random_elem(&mut rng)).collect());
    let g = DensePoly::new(field, (0..500).map(|_| field.random_elem(&mut rng)).collect());
    let alpha = field.random_elem(&mut rng);

    let fast = eval_mod_p_dense(&p, &f, &g, &field, &alpha)?;
    let slow = eval(&oracle_mod_product(&f.clone().into(), &g.clone().into(), &p)?, &field, &alpha);
    println!("dense:  {} (reference {})", field.render(&fast), field.render(&slow));

    let fs = SparsePoly::from_i64s(field, &[(0, 1), (10_000, 3), (999_999, 2)])?;
    let gs = SparsePoly::from_i64s(field, &[(7, 4), (123_456, 1)])?;
    let big = SparsePoly::from_i64s(field, &[(0, 1), (17, 2), (1_000_000, 1)])?;
    let fast = eval_mod_p_sparse(&big, &fs, &gs, &field, &alpha)?;
    let slow = eval(&oracle_mod_product(&Poly::Sparse(fs.clone()), &Poly::Sparse(gs.clone()), &big)?, &field, &alpha);
    println!("sparse: {} (reference {})", field.render(&fast), field.render(&slow));

    let x_n = SparsePoly::binomial(field, 1_000_000)?;
    let fast = eval_mod_binomial_sparse(&fs, &gs, 1_000_000, &field, &alpha)?;
    let slow = eval(&oracle_mod_product(&Poly::Sparse(fs), &Poly::Sparse(gs), &x_n)?, &field, &alpha);
    println!("X^n-1:  {} (reference {})", field.render(&fast), field.render(&slow));
    Ok(())
}
