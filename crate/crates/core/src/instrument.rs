//! Per-thread counter of polynomial multiplications.
//!
//! Every routine that multiplies two polynomials (dense schoolbook, Karatsuba,
//! sparse term products, extension-field products, modular powering inside the
//! irreducibility test) bumps this counter. Verifiers that claim to avoid
//! polynomial multiplication are tested by reading it before and after a call.

use std::cell::Cell;

thread_local! {
    static POLY_MULS: Cell<u64> = const { Cell::new(0) };
}

pub(crate) fn record_poly_mul() {
    POLY_MULS.with(|c| c.set(c.get() + 1));
}

/// Number of polynomial multiplications performed on this thread so far.
pub fn poly_mul_count() -> u64 {
    POLY_MULS.with(Cell::get)
}

/// Runs `f` and returns its result together with the number of polynomial
/// multiplications it performed on this thread.
pub fn count_poly_muls<T>(f: impl FnOnce() -> T) -> (T, u64) {
    let before = poly_mul_count();
    let out = f();
    (out, poly_mul_count() - before)
}
