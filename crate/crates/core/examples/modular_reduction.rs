//! Sparse reduction modulo a monic polynomial and the growth bounds that
//! control it.

use num_bigint::BigUint;
use polyproof::poly::{gap_info, mod_reduce, norm_bound, sparsity_bound};
use polyproof::{Integers, Poly, SparsePoly};

fn main() -> polyproof::Result<()> {
    let p = SparsePoly::from_i64s(Integers, &[(0, 3), (56, 1), (59, -8), (61, 2), (65, 7), (80, 1)])?;
    let q = SparsePoly::from_i64s(Integers, &[(32, 5), (71, 1), (80, -3), (108, -3), (118, 8), (120, 4), (131, 1)])?;
    let r = mod_reduce(&Poly::Sparse(q.clone()), &p)?;
    println!("deg = {}, sparsity = {}, norm = {}", r.degree()?, r.sparsity(), r.norm());

    let gap = gap_info(&p)?;
    let excess = q.degree()? + 1 - gap.n;
    println!("gap γ = {}, reduction rounds = {}", gap.gamma, gap.rounds_for_excess(excess));
    let sb = sparsity_bound(q.sparsity() as u64, p.sparsity() as u64, excess, &gap);
    let nb = norm_bound(&q.norm(), p.sparsity() as u64, &p.norm(), excess, &gap);
    println!("sparsity bound = {sb}, norm bound = {nb}");
    assert!(BigUint::from(r.sparsity()) <= sb && r.norm() <= nb);
    Ok(())
}
