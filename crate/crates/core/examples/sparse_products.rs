//! Sparse product verification: exponents are folded modulo a random prime.

use polyproof::poly::mul_sparse;
use polyproof::prodverify::{verify_sparse_product, SparseVerifyParams};
use polyproof::{Integers, SparsePoly};

fn main() -> polyproof::Result<()> {
    let params = SparseVerifyParams::new(0.01)?;
    let f = SparsePoly::from_i64s(Integers, &[(0, 2), (7, 2), (14, 1)])?;
    let g = SparsePoly::from_i64s(Integers, &[(0, 3), (8, 5), (13, 3)])?;
    let h = SparsePoly::from_i64s(Integers, &[(0, 2), (7, -2), (14, 1)])?;
    println!("F·G = {:?}", mul_sparse(&f, &g)?.terms());
    let fh = mul_sparse(&f, &h)?;
    println!("F·H = {:?}", fh.terms());
    println!("{}", verify_sparse_product(&f, &h, &fh, &params, 1)?.to_json_line());

    let t = 10;
    let f = SparsePoly::from_i64s(Integers, &(0..t).map(|i| (i, 1)).collect::<Vec<_>>())?;
    let g_terms: Vec<_> = (0..t).flat_map(|i| [(i * t, -1), (i * t + 1, 1)]).collect();
    let g = SparsePoly::from_i64s(Integers, &g_terms)?;
    let h = SparsePoly::binomial(Integers, t * t)?;
    println!("#F = {}, #G = {}, #H = {}", f.sparsity(), g.sparsity(), h.sparsity());
    println!("{}", verify_sparse_product(&f, &g, &h, &params, 2)?.to_json_line());

    let wide = SparsePoly::from_i64s(Integers, &[(0, 1), (1 << 40, -4), (1 << 50, 3)])?;
    let prod = mul_sparse(&wide, &wide)?;
    let off = prod.add(&SparsePoly::from_i64s(Integers, &[(12_345, 1)])?)?;
    println!("degree 2^51 true:  {}", verify_sparse_product(&wide, &wide, &prod, &params, 3)?.verdict);
    println!("degree 2^51 wrong: {}", verify_sparse_product(&wide, &wide, &off, &params, 3)?.verdict);
    Ok(())
}
