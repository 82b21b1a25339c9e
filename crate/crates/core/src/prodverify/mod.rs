//! Probabilistic verification of plain products `H = F·G`.
//!
//! - [`verify_product_kaminski`]: reduce modulo a random `X^i − 1` with
//!   `i ≈ n^{1−e}` and compare the reduced product.
//! - [`verify_product_kaminski_nomul`]: the same reduction, with the reduced
//!   identity checked by a modular verifier instead of a multiplication.
//! - [`verify_int_product`] and [`verify_product_kronecker`]: integers, and
//!   integer polynomials through evaluation at a power of two.
//! - [`verify_sparse_product`]: sparse inputs, through a random prime `p`
//!   and a modular verification modulo `X^p − 1`.

mod integer;
mod kaminski;
mod sparse;

pub use integer::{int_fold, kronecker_base_bits, kronecker_pack, verify_int_product, verify_product_kronecker};
pub use kaminski::{
    count_binomial_divisors, kaminski_round, lcm_adversarial_delta, verify_product_kaminski,
    verify_product_kaminski_nomul, KaminskiParams,
};
pub use sparse::{verify_sparse_product, SparseVerifyParams};
