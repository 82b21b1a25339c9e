use num_bigint::BigInt;

use super::{Algebra, Ring};
use crate::error::{Error, Result};

/// A square `k × k` matrix in row-major order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<E> {
    k: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let k = rows.len();
        assert!(rows.iter().all(|r| r.len() == k), "matrix must be square");
        Self { k, data: rows.into_iter().flatten().collect() }
    }

    pub fn filled(k: usize, value: E) -> Self {
        Self { k, data: vec![value; k * k] }
    }

    pub fn size(&self) -> usize {
        self.k
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.k + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: E) {
        self.data[i * self.k + j] = value;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.k..(i + 1) * self.k]
    }

    pub fn entries(&self) -> &[E] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let k = self.k;
        let data = (0..k * k).map(|idx| self.data[(idx % k) * k + idx / k].clone()).collect();
        Self { k, data }
    }

    pub(crate) fn map(&self, f: impl Fn(&E) -> E) -> Self {
        Self { k: self.k, data: self.data.iter().map(f).collect() }
    }

    pub(crate) fn zip(&self, other: &Self, f: impl Fn(&E, &E) -> E) -> Self {
        Self { k: self.k, data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect() }
    }
}

/// The ring of `k × k` matrices over `F`, an `F`-algebra through scalar
/// matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixAlgebra<F: Ring> {
    field: F,
    k: usize,
}

impl<F: Ring> MatrixAlgebra<F> {
    pub fn new(field: F, k: usize) -> Self {
        Self { field, k }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn size(&self) -> usize {
        self.k
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, u: &[F::Elem], m: &Matrix<F::Elem>) -> Vec<F::Elem> {
        let t = m.transpose();
        (0..self.k).map(|j| self.field.dot(u, t.row(j))).collect()
    }

    fn scalar(&self, c: F::Elem) -> Matrix<F::Elem> {
        let mut m = Matrix::filled(self.k, self.field.zero());
        for i in 0..self.k {
            m.set(i, i, c.clone());
        }
        m
    }
}

impl<F: Ring> Ring for MatrixAlgebra<F> {
    type Elem = Matrix<F::Elem>;

    fn zero(&self) -> Matrix<F::Elem> {
        Matrix::filled(self.k, self.field.zero())
    }

    fn one(&self) -> Matrix<F::Elem> {
        self.scalar(self.field.one())
    }

    fn add(&self, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
        a.zip(b, |x, y| self.field.add(x, y))
    }

    fn sub(&self, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
        a.zip(b, |x, y| self.field.sub(x, y))
    }

    fn neg(&self, a: &Matrix<F::Elem>) -> Matrix<F::Elem> {
        a.map(|x| self.field.neg(x))
    }

    fn mul(&self, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
        let k = self.k;
        let bt = b.transpose();
        let data = (0..k * k).map(|idx| self.field.dot(a.row(idx / k), bt.row(idx % k))).collect();
        Matrix { k, data }
    }

    /// Gauss–Jordan elimination; fails if the matrix is singular or a pivot
    /// is not a unit of `F`.
    fn inv(&self, a: &Matrix<F::Elem>) -> Result<Matrix<F::Elem>> {
        let f = &self.field;
        let k = self.k;
        let mut m = a.clone();
        let mut out = self.one();
        for col in 0..k {
            let pivot = (col..k).find(|&r| f.inv(m.get(r, col)).is_ok()).ok_or(Error::NotInvertible)?;
            if pivot != col {
                for j in 0..k {
                    m.data.swap(pivot * k + j, col * k + j);
                    out.data.swap(pivot * k + j, col * k + j);
                }
            }
            let inv = f.inv(m.get(col, col))?;
            for j in 0..k {
                m.data[col * k + j] = f.mul(&m.data[col * k + j], &inv);
                out.data[col * k + j] = f.mul(&out.data[col * k + j], &inv);
            }
            for r in 0..k {
                if r == col || f.is_zero(m.get(r, col)) {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for j in 0..k {
                    m.data[r * k + j] = f.sub(&m.data[r * k + j], &f.mul(&factor, &m.data[col * k + j]));
                    out.data[r * k + j] = f.sub(&out.data[r * k + j], &f.mul(&factor, &out.data[col * k + j]));
                }
            }
        }
        Ok(out)
    }

    fn from_int(&self, n: &BigInt) -> Matrix<F::Elem> {
        self.scalar(self.field.from_int(n))
    }

    fn render(&self, a: &Matrix<F::Elem>) -> String {
        let rows: Vec<String> = (0..self.k)
            .map(|i| {
                let cells: Vec<String> = a.row(i).iter().map(|c| self.field.render(c)).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        format!("[{}]", rows.join(","))
    }

    fn is_zero(&self, a: &Matrix<F::Elem>) -> bool {
        a.data.iter().all(|c| self.field.is_zero(c))
    }
}

impl<F: Ring> Algebra<F> for MatrixAlgebra<F> {
    fn embed(&self, c: &F::Elem) -> Matrix<F::Elem> {
        self.scalar(c.clone())
    }

    fn scale(&self, a: &Matrix<F::Elem>, c: &F::Elem) -> Matrix<F::Elem> {
        a.map(|x| self.field.mul(x, c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::Fp64;

    #[test]
    fn products_and_inverse() {
        let f7 = Fp64::new(7).unwrap();
        let alg = MatrixAlgebra::new(f7, 2);
        let a = Matrix::from_rows(vec![vec![1, 2], vec![3, 4]]);
        let b = Matrix::from_rows(vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(alg.mul(&a, &b), Matrix::from_rows(vec![vec![2, 1], vec![4, 3]]));
        let inv = alg.inv(&a).unwrap();
        assert_eq!(alg.mul(&a, &inv), alg.one());
        let singular = Matrix::from_rows(vec![vec![1, 2], vec![2, 4]]);
        assert_eq!(alg.inv(&singular), Err(Error::NotInvertible));
        assert_eq!(alg.vec_mul(&[1, 1], &a), vec![4, 6]);
    }
}
