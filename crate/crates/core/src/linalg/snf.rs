//! Smith normal form by unimodular row and column elimination.
//!
//! The pivot is always the nonzero entry of least norm in the remaining
//! submatrix, ties broken by the lowest (row, column) index in row-major
//! order, so the transforms are a deterministic function of the input.

use super::matrix::Matrix;
use super::ring::Scalar;

/// `D = U * M * V` with `U`, `V` unimodular and `D` diagonal.
///
/// The inverses of both transforms are tracked alongside, so that
/// `M = U⁻¹ * D * V⁻¹` is available without a separate inversion.
#[derive(Clone, Debug)]
pub struct Snf<R: Scalar> {
    pub u: Matrix<R>,
    pub u_inv: Matrix<R>,
    pub d: Matrix<R>,
    pub v: Matrix<R>,
    pub v_inv: Matrix<R>,
    /// Nonzero diagonal entries `d₁ | d₂ | …`, all in canonical (nonnegative) form.
    pub diagonal: Vec<R>,
}

impl<R: Scalar> Snf<R> {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }
}

struct Elimination<R> {
    a: Matrix<R>,
    u: Matrix<R>,
    u_inv: Matrix<R>,
    v: Matrix<R>,
    v_inv: Matrix<R>,
}

impl<R: Scalar> Elimination<R> {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    /// row[dst] -= q * row[src]
    fn row_sub(&mut self, dst: usize, src: usize, q: &R, from: usize) {
        self.a.row_sub_from(dst, src, q, from);
        self.u.row_sub_from(dst, src, q, 0);
        // U⁻¹ ← U⁻¹ E⁻¹ : col[src] += q * col[dst]
        let neg = q.neg();
        self.u_inv.col_sub_from(src, dst, &neg, 0);
    }

    /// col[dst] -= q * col[src]
    fn col_sub(&mut self, dst: usize, src: usize, q: &R, from: usize) {
        self.a.col_sub_from(dst, src, q, from);
        self.v.col_sub_from(dst, src, q, 0);
        // V⁻¹ ← F⁻¹ V⁻¹ : row[src] += q * row[dst]
        let neg = q.neg();
        self.v_inv.row_sub_from(src, dst, &neg, 0);
    }

    fn scale_row(&mut self, i: usize, unit: &R) {
        self.a.scale_row(i, unit);
        self.u.scale_row(i, unit);
        // units here are self-inverse (±1 or 1)
        self.u_inv.scale_col(i, unit);
    }

    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = self.a.get(i, j);
                if x.is_zero() {
                    continue;
                }
                if x.is_unit() {
                    return Some((i, j));
                }
                match best {
                    Some((bi, bj)) if x.cmp_norm(self.a.get(bi, bj)).is_ge() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }

    /// Least-norm nonzero entry in column `t` below the pivot or row `t`
    /// right of it, lowest index first (column entries scanned before row entries).
    fn find_line_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        let cells = (t + 1..self.a.rows())
            .map(|i| (i, t))
            .chain((t + 1..self.a.cols()).map(|j| (t, j)));
        for (i, j) in cells {
            let x = self.a.get(i, j);
            if x.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if x.cmp_norm(self.a.get(bi, bj)).is_ge() => {}
                _ => best = Some((i, j)),
            }
        }
        best
    }

    fn reduce_at(&mut self, t: usize) {
        loop {
            let mut remainder = false;
            for i in t + 1..self.a.rows() {
                if self.a.get(i, t).is_zero() {
                    continue;
                }
                let (q, r) = self.a.get(i, t).div_rem(self.a.get(t, t));
                if !q.is_zero() {
                    self.row_sub(i, t, &q, t);
                }
                remainder |= !r.is_zero();
            }
            for j in t + 1..self.a.cols() {
                if self.a.get(t, j).is_zero() {
                    continue;
                }
                let (q, r) = self.a.get(t, j).div_rem(self.a.get(t, t));
                if !q.is_zero() {
                    self.col_sub(j, t, &q, t);
                }
                remainder |= !r.is_zero();
            }
            if remainder {
                if let Some((i, j)) = self.find_line_pivot(t) {
                    if j == t {
                        self.swap_rows(t, i);
                    } else {
                        self.swap_cols(t, j);
                    }
                }
                continue;
            }
            if self.a.get(t, t).is_unit() {
                return;
            }
            // Row and column t are clear; enforce divisibility on the rest.
            let pivot = self.a.get(t, t).clone();
            let offender = (t + 1..self.a.rows()).find(|&i| {
                (t + 1..self.a.cols()).any(|j| {
                    let x = self.a.get(i, j);
                    !x.is_zero() && !x.div_rem(&pivot).1.is_zero()
                })
            });
            match offender {
                Some(i) => {
                    // row[t] += row[i]
                    let minus_one = R::one().neg();
                    self.row_sub(t, i, &minus_one, t);
                }
                None => return,
            }
        }
    }
}

/// Smith normal form of `m`. Empty matrices are allowed and give an empty diagonal.
pub fn smith_normal_form<R: Scalar>(m: &Matrix<R>) -> Snf<R> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut e = Elimination {
        a: m.clone(),
        u: Matrix::identity(rows),
        u_inv: Matrix::identity(rows),
        v: Matrix::identity(cols),
        v_inv: Matrix::identity(cols),
    };
    let mut diagonal = Vec::new();
    for t in 0..rows.min(cols) {
        let Some((i, j)) = e.find_pivot(t) else { break };
        e.swap_rows(t, i);
        e.swap_cols(t, j);
        e.reduce_at(t);
        let unit = e.a.get(t, t).normalizing_unit();
        if unit != R::one() {
            e.scale_row(t, &unit);
        }
        diagonal.push(e.a.get(t, t).clone());
    }
    Snf {
        u: e.u,
        u_inv: e.u_inv,
        d: e.a,
        v: e.v,
        v_inv: e.v_inv,
        diagonal,
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    use super::smith_normal_form;
    use crate::linalg::matrix::IntMatrix;
    use crate::linalg::ring::Gf2;

    fn det(m: &IntMatrix) -> BigInt {
        // Fraction-free Bareiss elimination; test-only.
        let n = m.rows();
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| m.row(i).to_vec()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }

    fn check_invariants(m: &IntMatrix) {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul(m).mul(&s.v), s.d);
        assert_eq!(s.u_inv.mul(&s.d).mul(&s.v_inv), *m);
        assert_eq!(det(&s.u).magnitude(), BigInt::one().magnitude());
        assert_eq!(det(&s.v).magnitude(), BigInt::one().magnitude());
        assert_eq!(s.u.mul(&s.u_inv), IntMatrix::identity(m.rows()));
        assert_eq!(s.v.mul(&s.v_inv), IntMatrix::identity(m.cols()));
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d.get(i, j).is_zero());
                }
            }
        }
        for w in s.diagonal.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]), "divisibility chain broken");
        }
        assert!(s.diagonal.iter().all(|d| d > &BigInt::zero()));
    }

    #[test]
    fn zero_one_by_one() {
        let s = smith_normal_form(&IntMatrix::from_i64(&[&[0]]));
        assert_eq!(s.d, IntMatrix::from_i64(&[&[0]]));
        assert!(s.diagonal.is_empty());
    }

    #[test]
    fn identity_is_fixed() {
        let s = smith_normal_form(&IntMatrix::identity(3));
        assert_eq!(s.d, IntMatrix::identity(3));
    }

    #[test]
    fn two_by_two_against_minors() {
        // d1 = gcd of entries = 2; d1*d2 = |det| = 12, so d2 = 6.
        let [a, b, c, d] = [2i64, 4, 0, 6];
        let m = IntMatrix::from_i64(&[&[a, b], &[c, d]]);
        let gcd_entries = [a, b, c, d].iter().fold(0i64, |g, &x| g.gcd(&x));
        let det_abs = (a * d - b * c).abs();
        let s = smith_normal_form(&m);
        assert_eq!(
            s.diagonal,
            vec![BigInt::from(gcd_entries), BigInt::from(det_abs / gcd_entries)]
        );
        assert_eq!(s.diagonal, vec![BigInt::from(2), BigInt::from(6)]);
        check_invariants(&m);
    }

    #[test]
    fn empty_matrices() {
        for (r, c) in [(0, 0), (0, 3), (4, 0)] {
            let s = smith_normal_form(&IntMatrix::zeros(r, c));
            assert!(s.diagonal.is_empty());
            assert_eq!((s.u.rows(), s.v.rows()), (r, c));
        }
    }

    #[test]
    fn coprime_entries_need_divisibility_fix() {
        // diag(2, 3) ~ diag(1, 6)
        let m = IntMatrix::from_i64(&[&[2, 0], &[0, 3]]);
        let s = smith_normal_form(&m);
        assert_eq!(s.diagonal, vec![BigInt::from(1), BigInt::from(6)]);
        check_invariants(&m);
    }

    #[test]
    fn large_entries_stay_exact() {
        let big = BigInt::from(u64::MAX) * BigInt::from(u64::MAX);
        let m = IntMatrix::from_rows(vec![
            vec![big.clone(), BigInt::from(0)],
            vec![BigInt::from(0), &big * 2],
        ]);
        let s = smith_normal_form(&m);
        assert_eq!(s.diagonal, vec![big.clone(), &big * 2]);
        check_invariants(&m);
    }

    #[test]
    fn gf2_rank() {
        let m = IntMatrix::from_i64(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]).to_gf2();
        let s = smith_normal_form(&m);
        assert_eq!(s.rank(), 2);
        assert_eq!(s.u.mul(&m).mul(&s.v), s.d);
        assert!(s.diagonal.iter().all(|d| *d == Gf2(true)));
    }

    #[test]
    fn deterministic() {
        let m = IntMatrix::from_i64(&[&[4, 6, 2], &[3, 9, 12], &[8, 1, 5]]);
        let a = smith_normal_form(&m);
        let b = smith_normal_form(&m);
        assert_eq!(a.u, b.u);
        assert_eq!(a.v, b.v);
    }

    proptest! {
        #[test]
        fn random_matrices_satisfy_invariants(
            rows in 0usize..5,
            cols in 0usize..5,
            seed in proptest::collection::vec(-9i64..10, 25),
        ) {
            let m = IntMatrix::from_rows(
                (0..rows)
                    .map(|i| (0..cols).map(|j| BigInt::from(seed[i * 5 + j])).collect())
                    .collect(),
            );
            let m = if rows == 0 { IntMatrix::zeros(0, cols) } else { m };
            check_invariants(&m);
        }
    }
}
