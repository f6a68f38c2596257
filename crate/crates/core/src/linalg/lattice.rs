//! Kernels, exact solving and lattice bases on top of the Smith normal form.

use super::matrix::Matrix;
use super::ring::Scalar;
use super::snf::{smith_normal_form, Snf};

/// Basis of `ker m` as the columns of the returned matrix (saturated: the
/// quotient of the domain by the kernel is torsion free).
pub fn kernel_basis<R: Scalar>(m: &Matrix<R>) -> Matrix<R> {
    if m.rows() == 0 {
        return Matrix::identity(m.cols());
    }
    let s = smith_normal_form(m);
    let idx: Vec<usize> = (s.rank()..m.cols()).collect();
    s.v.select_columns(&idx)
}

/// Cached factorization for repeated exact solves of `m x = b`.
#[derive(Clone, Debug)]
pub struct Solver<R: Scalar> {
    snf: Snf<R>,
    rows: usize,
    cols: usize,
}

impl<R: Scalar> Solver<R> {
    pub fn new(m: &Matrix<R>) -> Self {
        Solver {
            snf: smith_normal_form(m),
            rows: m.rows(),
            cols: m.cols(),
        }
    }

    pub fn rank(&self) -> usize {
        self.snf.rank()
    }

    /// Some solution of `m x = b`, or `None` when the system has no exact solution.
    pub fn solve(&self, b: &[R]) -> Option<Vec<R>> {
        assert_eq!(b.len(), self.rows, "right-hand side has the wrong length");
        let y = self.snf.u.mul_vec(b);
        let r = self.snf.rank();
        if y[r..].iter().any(|v| !v.is_zero()) {
            return None;
        }
        let mut x = vec![R::zero(); self.cols];
        for i in 0..r {
            let (q, rem) = y[i].div_rem(&self.snf.diagonal[i]);
            if !rem.is_zero() {
                return None;
            }
            x[i] = q;
        }
        Some(self.snf.v.mul_vec(&x))
    }

    pub fn contains(&self, b: &[R]) -> bool {
        self.solve(b).is_some()
    }
}

/// A basis (as columns) of the lattice spanned by the columns of `gens`.
pub fn lattice_basis<R: Scalar>(gens: &Matrix<R>) -> Matrix<R> {
    if gens.cols() == 0 {
        return Matrix::zeros(gens.rows(), 0);
    }
    let s = smith_normal_form(gens);
    // gens = U⁻¹ D V⁻¹, so span(gens) = span(U⁻¹ D).
    let mut out = Matrix::zeros(gens.rows(), s.rank());
    for (j, d) in s.diagonal.iter().enumerate() {
        for i in 0..gens.rows() {
            out.set(i, j, s.u_inv.get(i, j).mul(d));
        }
    }
    out
}

/// Whether every column of `sub` lies in the span of the columns of `lattice`.
pub fn span_contains<R: Scalar>(lattice: &Matrix<R>, sub: &Matrix<R>) -> bool {
    assert_eq!(lattice.rows(), sub.rows());
    if sub.cols() == 0 {
        return true;
    }
    let solver = Solver::new(lattice);
    (0..sub.cols()).all(|j| solver.contains(&sub.column(j)))
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;
    use crate::linalg::matrix::IntMatrix;

    #[test]
    fn kernel_of_circle_boundary() {
        // 4-gon: edges 01, 03, 12, 23 with vertex rows 0..3.
        let d1 = IntMatrix::from_i64(&[&[-1, -1, 0, 0], &[1, 0, -1, 0], &[0, 0, 1, -1], &[0, 1, 0, 1]]);
        let k = kernel_basis(&d1);
        assert_eq!(k.cols(), 1);
        assert!(d1.mul(&k).is_zero());
    }

    #[test]
    fn solve_detects_divisibility() {
        let m = IntMatrix::from_i64(&[&[2, 0], &[0, 3]]);
        let s = Solver::new(&m);
        assert_eq!(
            s.solve(&[BigInt::from(4), BigInt::from(9)]),
            Some(vec![BigInt::from(2), BigInt::from(3)])
        );
        assert_eq!(s.solve(&[BigInt::from(1), BigInt::from(0)]), None);
    }

    #[test]
    fn lattice_basis_spans_same_lattice() {
        let g = IntMatrix::from_i64(&[&[2, 4, 6], &[0, 2, 2]]);
        let b = lattice_basis(&g);
        assert_eq!(b.cols(), 2);
        assert!(span_contains(&b, &g));
        assert!(span_contains(&g, &b));
    }
}
