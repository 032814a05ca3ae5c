//! Smith normal form with unimodular transformations.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// `u * a * v == d` with `u`, `v` unimodular and `d` diagonal in divisor-chain
/// order (nonnegative, `d[i] | d[i+1]`, zeros last).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }
}

struct Reducer {
    m: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
    v_inv: Vec<Vec<BigInt>>,
    rows: usize,
    cols: usize,
}

impl Reducer {
    fn new(a: &IntMatrix) -> Self {
        Reducer {
            m: a.to_rows(),
            u: IntMatrix::identity(a.rows()).to_rows(),
            v: IntMatrix::identity(a.cols()).to_rows(),
            v_inv: IntMatrix::identity(a.cols()).to_rows(),
            rows: a.rows(),
            cols: a.cols(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            self.m.swap(a, b);
            self.u.swap(a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in self.m.iter_mut() {
            r.swap(a, b);
        }
        for r in self.v.iter_mut() {
            r.swap(a, b);
        }
        self.v_inv.swap(a, b);
    }

    /// row[dst] += c * row[src]
    fn add_row(&mut self, dst: usize, src: usize, c: &BigInt) {
        for j in 0..self.cols {
            let t = c * &self.m[src][j];
            self.m[dst][j] += t;
        }
        for j in 0..self.rows {
            let t = c * &self.u[src][j];
            self.u[dst][j] += t;
        }
    }

    /// col[dst] += c * col[src]
    fn add_col(&mut self, dst: usize, src: usize, c: &BigInt) {
        for i in 0..self.rows {
            let t = c * &self.m[i][src];
            self.m[i][dst] += t;
        }
        for i in 0..self.cols {
            let t = c * &self.v[i][src];
            self.v[i][dst] += t;
        }
        for j in 0..self.cols {
            let t = c * &self.v_inv[dst][j];
            self.v_inv[src][j] -= t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in self.m[i].iter_mut() {
            *x = -&*x;
        }
        for x in self.u[i].iter_mut() {
            *x = -&*x;
        }
    }

    fn min_in_block(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let e = &self.m[i][j];
                if e.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| e.abs() < self.m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    fn min_in_cross(&self, t: usize) -> (usize, usize) {
        let mut best = (t, t);
        let mut best_abs = self.m[t][t].abs();
        let mut consider = |i: usize, j: usize, e: &BigInt| {
            if !e.is_zero() && (best_abs.is_zero() || e.abs() < best_abs) {
                best = (i, j);
                best_abs = e.abs();
            }
        };
        for i in t + 1..self.rows {
            consider(i, t, &self.m[i][t]);
        }
        for j in t + 1..self.cols {
            consider(t, j, &self.m[t][j]);
        }
        best
    }

    fn run(&mut self) {
        let steps = self.rows.min(self.cols);
        for t in 0..steps {
            let Some((pi, pj)) = self.min_in_block(t) else {
                break;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let mut clean = true;
                for i in t + 1..self.rows {
                    if self.m[i][t].is_zero() {
                        continue;
                    }
                    let q = &self.m[i][t] / &self.m[t][t];
                    self.add_row(i, t, &-q);
                    if !self.m[i][t].is_zero() {
                        clean = false;
                    }
                }
                for j in t + 1..self.cols {
                    if self.m[t][j].is_zero() {
                        continue;
                    }
                    let q = &self.m[t][j] / &self.m[t][t];
                    self.add_col(j, t, &-q);
                    if !self.m[t][j].is_zero() {
                        clean = false;
                    }
                }
                if !clean {
                    let (bi, bj) = self.min_in_cross(t);
                    self.swap_rows(t, bi);
                    self.swap_cols(t, bj);
                    continue;
                }
                // Pivot row and column are clear; enforce divisibility of the
                // remaining block by folding an offending row into the pivot row.
                let pivot = self.m[t][t].clone();
                let offender = (t + 1..self.rows).find(|&i| {
                    (t + 1..self.cols).any(|j| !(&self.m[i][j] % &pivot).is_zero())
                });
                match offender {
                    Some(i) => self.add_row(t, i, &BigInt::one()),
                    None => break,
                }
            }
            if self.m[t][t].is_negative() {
                self.negate_row(t);
            }
        }
    }
}

fn from_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> IntMatrix {
    IntMatrix::from_big_rows(rows, cols).expect("reducer keeps shapes")
}

/// Smith normal form of `a` together with the inverse of the column transform.
pub(crate) fn smith_normal_form_with_inverse(a: &IntMatrix) -> (SnfResult, IntMatrix) {
    let mut r = Reducer::new(a);
    r.run();
    let (rows, cols) = (r.rows, r.cols);
    let result = SnfResult {
        u: from_rows(r.u, rows),
        d: from_rows(r.m, cols),
        v: from_rows(r.v, cols),
    };
    (result, from_rows(r.v_inv, cols))
}

/// Smith normal form by repeated pivoting on the entry of least absolute value.
pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    smith_normal_form_with_inverse(a).0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(a: &IntMatrix) -> Vec<i64> {
        smith_normal_form(a)
            .diagonal()
            .iter()
            .map(|x| i64::try_from(x).unwrap())
            .collect()
    }

    fn check(a: &IntMatrix) {
        let (snf, v_inv) = smith_normal_form_with_inverse(a);
        let uav = snf.u.mul(a).unwrap().mul(&snf.v).unwrap();
        assert_eq!(uav, snf.d);
        assert_eq!(snf.v.mul(&v_inv).unwrap(), IntMatrix::identity(a.cols()));
        assert_eq!(snf.u.determinant().unwrap().abs(), BigInt::one());
        assert_eq!(snf.v.determinant().unwrap().abs(), BigInt::one());
    }

    #[test]
    fn small_square() {
        let a = IntMatrix::from_rows(&[[2, 4], [6, 8]]);
        assert_eq!(diag(&a), vec![2, 4]);
        check(&a);
    }

    #[test]
    fn identity_and_zero() {
        let id = IntMatrix::identity(3);
        let snf = smith_normal_form(&id);
        assert_eq!(snf.d, id);
        assert_eq!(snf.u, id);
        assert_eq!(snf.v, id);
        let z = IntMatrix::zeros(2, 3);
        assert_eq!(smith_normal_form(&z).d, z);
    }

    #[test]
    fn empty_shapes() {
        for (r, c) in [(0, 0), (0, 3), (2, 0)] {
            let a = IntMatrix::zeros(r, c);
            let snf = smith_normal_form(&a);
            assert_eq!(snf.d.rows(), r);
            assert_eq!(snf.d.cols(), c);
            check(&a);
        }
    }

    #[test]
    fn divisibility_needs_row_folding() {
        // diag(2, 3) is diagonal but not in divisor-chain order.
        let a = IntMatrix::from_rows(&[[2, 0], [0, 3]]);
        assert_eq!(diag(&a), vec![1, 6]);
        check(&a);
        let a = IntMatrix::from_rows(&[[4, 0, 0], [0, 6, 0], [0, 0, 10]]);
        assert_eq!(diag(&a), vec![2, 2, 60]);
        check(&a);
    }

    #[test]
    fn rectangular_and_negative() {
        let a = IntMatrix::from_rows(&[[-3, 1, 0], [0, -3, 1]]);
        assert_eq!(diag(&a), vec![1, 1]);
        check(&a);
        let a = IntMatrix::from_rows(&[[0, 0], [0, -5], [0, 10]]);
        assert_eq!(diag(&a), vec![5, 0]);
        check(&a);
    }
}
