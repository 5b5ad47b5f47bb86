//! Smith normal form over the integers with unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// `s = u * m * v` with `s` diagonal, nonnegative, each diagonal entry
/// dividing the next, and `u`, `v` unimodular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Nonzero diagonal entries.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.s.diagonal_entries().into_iter().filter(|d| !d.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }

    /// Re-verifies every defining property.
    pub fn verify(&self, m: &IntMatrix) -> bool {
        let diag = self.s.diagonal_entries();
        let chain = diag.windows(2).all(|w| {
            if w[0].is_zero() {
                w[1].is_zero()
            } else {
                w[1].is_multiple_of(&w[0])
            }
        });
        self.s.is_diagonal()
            && diag.iter().all(|d| !d.is_negative())
            && chain
            && self.u.is_unimodular()
            && self.v.is_unimodular()
            && &(&self.u * m) * &self.v == self.s
    }
}

struct Reducer {
    s: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
}

impl Reducer {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.s.swap_rows(a, b);
        self.u.swap_rows(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.s.swap_cols(a, b);
        self.v.swap_cols(a, b);
    }

    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.s.add_row_multiple(dst, src, k);
        self.u.add_row_multiple(dst, src, k);
    }

    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.s.add_col_multiple(dst, src, k);
        self.v.add_col_multiple(dst, src, k);
    }

    /// Position of the nonzero entry of least absolute value in the
    /// trailing submatrix starting at `(t, t)`.
    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.s.rows() {
            for j in t..self.s.cols() {
                let v = &self.s[(i, j)];
                if v.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| v.abs() < self.s[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    /// Clears row and column `t` outside the pivot by floor division.
    /// Returns whether everything cleared.
    fn eliminate(&mut self, t: usize) -> bool {
        let pivot = self.s[(t, t)].clone();
        let mut clean = true;
        for i in t + 1..self.s.rows() {
            if !self.s[(i, t)].is_zero() {
                let q = self.s[(i, t)].div_floor(&pivot);
                self.add_row(i, t, &-q);
                clean &= self.s[(i, t)].is_zero();
            }
        }
        for j in t + 1..self.s.cols() {
            if !self.s[(t, j)].is_zero() {
                let q = self.s[(t, j)].div_floor(&pivot);
                self.add_col(j, t, &-q);
                clean &= self.s[(t, j)].is_zero();
            }
        }
        clean
    }

    /// A row whose trailing entries are not all divisible by the pivot.
    fn indivisible_row(&self, t: usize) -> Option<usize> {
        let pivot = &self.s[(t, t)];
        (t + 1..self.s.rows()).find(|&i| (t + 1..self.s.cols()).any(|j| !self.s[(i, j)].is_multiple_of(pivot)))
    }

    fn run(&mut self) {
        let n = self.s.rows().min(self.s.cols());
        for t in 0..n {
            loop {
                let Some((pi, pj)) = self.min_pivot(t) else {
                    return;
                };
                self.swap_rows(t, pi);
                self.swap_cols(t, pj);
                if !self.eliminate(t) {
                    continue;
                }
                match self.indivisible_row(t) {
                    Some(i) => self.add_row(t, i, &BigInt::from(1)),
                    None => break,
                }
            }
            if self.s[(t, t)].is_negative() {
                self.s.negate_row(t);
                self.u.negate_row(t);
            }
        }
    }
}

/// Smith normal form by repeated minimal-pivot elimination.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut r = Reducer {
        s: m.clone(),
        u: IntMatrix::identity(m.rows()),
        v: IntMatrix::identity(m.cols()),
    };
    r.run();
    SmithForm { s: r.s, u: r.u, v: r.v }
}
