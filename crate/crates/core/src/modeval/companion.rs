//! Evaluation at the companion matrix `C_R` of a monic `R ∈ 𝔽[X]` of degree `k`.
//!
//! `𝔽[C_R] ≅ 𝔽[X]/(R)`, so a matrix point behaves like a point of the
//! extension `𝔽[X]/(R)` even when `R` is reducible, while every operation
//! stays a vector or matrix operation over `𝔽`. The projections `u·H(C_R)`
//! only ever multiply a row vector by `C_R`, which costs `O(k)`.
//!
//! `C_R` has ones on the subdiagonal and `−r_0, …, −r_{k−1}` in the last column.

use super::modular::eval_mod_p_sparse_with_ops;
use super::{check_operands, eval_sparse_at, leading_coefficients, PointOps};
use crate::error::{Error, Result};
use crate::poly::{DensePoly, SparsePoly};
use crate::rings::{Matrix, MatrixAlgebra, Ring};

/// Multiplication by `C_R` without materializing it.
#[derive(Clone, Debug)]
pub struct CompanionOperator<F: Ring> {
    ring: F,
    r: Vec<F::Elem>,
}

impl<F: Ring> CompanionOperator<F> {
    pub fn new(r: &DensePoly<F>) -> Result<Self> {
        match r.deg() {
            None => return Err(Error::ZeroPolynomial),
            Some(0) => return Err(Error::ConstantModulus),
            Some(_) if !r.is_monic() => return Err(Error::NotMonic),
            Some(_) => {}
        }
        Ok(Self { ring: r.ring().clone(), r: r.coeffs().to_vec() })
    }

    pub fn ring(&self) -> &F {
        &self.ring
    }

    /// `k = deg R`.
    pub fn degree(&self) -> usize {
        self.r.len() - 1
    }

    pub fn modulus(&self) -> DensePoly<F> {
        DensePoly::new(self.ring.clone(), self.r.clone())
    }

    pub fn algebra(&self) -> MatrixAlgebra<F> {
        MatrixAlgebra::new(self.ring.clone(), self.degree())
    }

    /// `u·C_R` in `O(k)` operations.
    pub fn row_mul(&self, u: &[F::Elem]) -> Vec<F::Elem> {
        let k = self.degree();
        let mut out = Vec::with_capacity(k);
        out.extend_from_slice(&u[1..k]);
        out.push(self.ring.neg(&self.ring.dot(u, &self.r[..k])));
        out
    }

    /// `M·C_R` in `O(k²)` operations.
    pub fn right_mul(&self, m: &Matrix<F::Elem>) -> Matrix<F::Elem> {
        Matrix::from_rows((0..m.size()).map(|i| self.row_mul(m.row(i))).collect())
    }

    pub fn matrix(&self) -> Matrix<F::Elem> {
        self.right_mul(&self.algebra().one())
    }

    /// `C_R^t`, built from the coefficients of `X^t mod R` in `O(k² log t)`.
    pub fn pow(&self, t: u64) -> Matrix<F::Elem> {
        self.from_column(self.x_pow_mod(t))
    }

    /// `X·a mod R` for `deg a < k`.
    fn times_x(&self, a: &[F::Elem]) -> Vec<F::Elem> {
        let k = self.degree();
        let top = &a[k - 1];
        let mut out = Vec::with_capacity(k);
        out.push(self.ring.neg(&self.ring.mul(top, &self.r[0])));
        for i in 1..k {
            out.push(self.ring.sub(&a[i - 1], &self.ring.mul(top, &self.r[i])));
        }
        out
    }

    /// `a·b mod R` for `deg a, deg b < k`.
    fn mul_mod(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let k = self.degree();
        let ring = &self.ring;
        let mut prod = vec![ring.zero(); 2 * k - 1];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !ring.is_zero(x)) {
            for (j, y) in b.iter().enumerate() {
                prod[i + j] = ring.add(&prod[i + j], &ring.mul(x, y));
            }
        }
        for d in (k..2 * k - 1).rev() {
            let c = std::mem::replace(&mut prod[d], ring.zero());
            if !ring.is_zero(&c) {
                for (i, ri) in self.r[..k].iter().enumerate() {
                    prod[d - k + i] = ring.sub(&prod[d - k + i], &ring.mul(&c, ri));
                }
            }
        }
        prod.truncate(k);
        prod
    }

    fn x_pow_mod(&self, t: u64) -> Vec<F::Elem> {
        let k = self.degree();
        let mut acc = vec![self.ring.zero(); k];
        acc[0] = self.ring.one();
        for bit in (0..64 - t.leading_zeros()).rev() {
            acc = self.mul_mod(&acc, &acc);
            if (t >> bit) & 1 == 1 {
                acc = self.times_x(&acc);
            }
        }
        acc
    }

    /// `h(C_R)` from the coefficients of `h mod R`: its columns are
    /// `h, X·h, …, X^{k−1}·h` reduced modulo `R`.
    fn from_column(&self, h: Vec<F::Elem>) -> Matrix<F::Elem> {
        let mut cols = vec![h];
        while cols.len() < self.degree() {
            let next = self.times_x(cols.last().expect("nonempty"));
            cols.push(next);
        }
        Matrix::from_rows(cols).transpose()
    }

    fn scaled(&self, u: &[F::Elem], c: &F::Elem) -> Vec<F::Elem> {
        u.iter().map(|x| self.ring.mul(x, c)).collect()
    }

    fn axpy(&self, acc: &mut [F::Elem], u: &[F::Elem], c: &F::Elem) {
        for (a, x) in acc.iter_mut().zip(u) {
            *a = self.ring.add(a, &self.ring.mul(x, c));
        }
    }

    fn check_vector(&self, u: &[F::Elem]) -> Result<()> {
        if u.len() != self.degree() {
            return Err(Error::param(format!("projection vector has length {}, expected {}", u.len(), self.degree())));
        }
        Ok(())
    }
}

/// Every matrix passed to this point is a polynomial in `C_R`, so it is
/// determined by its first column.
struct CompanionPoint<'a, F: Ring> {
    alg: MatrixAlgebra<F>,
    op: &'a CompanionOperator<F>,
}

impl<F: Ring> PointOps<MatrixAlgebra<F>> for CompanionPoint<'_, F> {
    fn alg(&self) -> &MatrixAlgebra<F> {
        &self.alg
    }

    fn times_alpha_pow(&self, x: &Matrix<F::Elem>, t: u64) -> Matrix<F::Elem> {
        if t <= self.op.degree() as u64 {
            return (0..t).fold(x.clone(), |acc, _| self.op.right_mul(&acc));
        }
        let column: Vec<F::Elem> = (0..x.size()).map(|i| x.get(i, 0).clone()).collect();
        self.op.from_column(self.op.mul_mod(&column, &self.op.x_pow_mod(t)))
    }
}

/// `u·H(C_R)` by Horner's rule on row vectors.
pub fn project_poly_companion<F: Ring>(
    h: &DensePoly<F>,
    op: &CompanionOperator<F>,
    u: &[F::Elem],
) -> Result<Vec<F::Elem>> {
    op.check_vector(u)?;
    let ring = op.ring();
    let mut acc = vec![ring.zero(); op.degree()];
    for hi in h.coeffs().iter().rev() {
        acc = op.row_mul(&acc);
        if !ring.is_zero(hi) {
            op.axpy(&mut acc, u, hi);
        }
    }
    Ok(acc)
}

fn project_sparse<F: Ring>(s: &SparsePoly<F>, op: &CompanionOperator<F>, u: &[F::Elem]) -> Vec<F::Elem> {
    let mut acc = vec![op.ring().zero(); op.degree()];
    let mut prev: Option<u64> = None;
    for (e, c) in s.terms().iter().rev() {
        if let Some(p) = prev {
            for _ in 0..p - e {
                acc = op.row_mul(&acc);
            }
        }
        op.axpy(&mut acc, u, c);
        prev = Some(*e);
    }
    for _ in 0..prev.unwrap_or(0) {
        acc = op.row_mul(&acc);
    }
    acc
}

/// `u·((F·G) mod P)(C_R)` without multiplying polynomials.
pub fn project_modprod_companion<F: Ring>(
    p: &SparsePoly<F>,
    f: &DensePoly<F>,
    g: &DensePoly<F>,
    op: &CompanionOperator<F>,
    u: &[F::Elem],
) -> Result<Vec<F::Elem>> {
    check_operands(p, &[g.deg().map(|d| d as u64)])?;
    let lead = leading_coefficients(p, f)?;
    project_modprod_companion_with(p, &lead, f, g, op, u)
}

/// As [`project_modprod_companion`], reusing [`leading_coefficients`]`(P, F)`.
pub fn project_modprod_companion_with<F: Ring>(
    p: &SparsePoly<F>,
    lead: &[F::Elem],
    f: &DensePoly<F>,
    g: &DensePoly<F>,
    op: &CompanionOperator<F>,
    u: &[F::Elem],
) -> Result<Vec<F::Elem>> {
    let n = check_operands(p, &[f.deg().map(|d| d as u64), g.deg().map(|d| d as u64)])?;
    if lead.len() as u64 != n - 1 {
        return Err(Error::param("leading coefficient table has the wrong length"));
    }
    let ring = op.ring();
    let mut x = project_poly_companion(f, op, u)?;
    let pu = project_sparse(p, op, u);
    let Some(g0) = g.coeffs().first() else {
        return Ok(vec![ring.zero(); op.degree()]);
    };
    let mut beta = op.scaled(&x, g0);
    for (i, gi) in g.coeffs().iter().enumerate().skip(1) {
        x = op.row_mul(&x);
        let li = &lead[i - 1];
        if !ring.is_zero(li) {
            op.axpy(&mut x, &pu, &ring.neg(li));
        }
        if !ring.is_zero(gi) {
            op.axpy(&mut beta, &x, gi);
        }
    }
    Ok(beta)
}

/// `((F·G) mod P)(C_R)` as a full matrix, for sparse inputs.
pub fn eval_modprod_companion_sparse<F: Ring>(
    p: &SparsePoly<F>,
    f: &SparsePoly<F>,
    g: &SparsePoly<F>,
    op: &CompanionOperator<F>,
) -> Result<Matrix<F::Elem>> {
    let point = CompanionPoint { alg: op.algebra(), op };
    eval_mod_p_sparse_with_ops(p, f, g, &point)
}

/// `H(C_R)` for sparse `H`.
pub fn eval_sparse_on_companion<F: Ring>(h: &SparsePoly<F>, op: &CompanionOperator<F>) -> Matrix<F::Elem> {
    let point = CompanionPoint { alg: op.algebra(), op };
    eval_sparse_at(h, &point)
}
