//! Smith normal form over the integers.
//!
//! All arithmetic is on [`BigInt`], so there is no fixed-width overflow to
//! detect: every intermediate value is exact.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::matrix::IntMatrix;

/// The decomposition `u * a * v = d` of an integer matrix `a`.
///
/// `d` has the shape of `a` and is diagonal, with nonnegative entries
/// `d_1 | d_2 | ... | d_r` followed by zeros. `u` and `v` are unimodular and
/// their inverses are tracked alongside them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SmithForm {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        let n = self.d.rows().min(self.d.cols());
        (0..n).take_while(|&i| !self.d[(i, i)].is_zero()).count()
    }

    /// The nonzero diagonal entries, in order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank()).map(|i| self.d[(i, i)].clone()).collect()
    }

    /// Invariant factors greater than one: the torsion of the cokernel.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors()
            .into_iter()
            .filter(|d| !d.is_one())
            .collect()
    }
}

struct Reducer {
    a: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Reducer {
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

    /// row[dst] += c * row[src]
    fn add_row(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.a.add_row_multiple(dst, src, c);
        self.u.add_row_multiple(dst, src, c);
        self.u_inv.add_col_multiple(src, dst, &-c);
    }

    /// col[dst] += c * col[src]
    fn add_col(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.a.add_col_multiple(dst, src, c);
        self.v.add_col_multiple(dst, src, c);
        self.v_inv.add_row_multiple(src, dst, &-c);
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    /// Position of a nonzero entry of least absolute value in the trailing block.
    fn smallest_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| x.abs() < self.a[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    /// Clears row and column `t` outside the pivot. Returns false if a
    /// nonzero remainder appeared and a new pivot must be chosen.
    fn clear_cross(&mut self, t: usize) -> bool {
        let mut clean = true;
        for i in t + 1..self.a.rows() {
            if self.a[(i, t)].is_zero() {
                continue;
            }
            let q = &self.a[(i, t)] / &self.a[(t, t)];
            self.add_row(i, t, &-q);
            clean &= self.a[(i, t)].is_zero();
        }
        for j in t + 1..self.a.cols() {
            if self.a[(t, j)].is_zero() {
                continue;
            }
            let q = &self.a[(t, j)] / &self.a[(t, t)];
            self.add_col(j, t, &-q);
            clean &= self.a[(t, j)].is_zero();
        }
        clean
    }

    fn run(&mut self) {
        let n = self.a.rows().min(self.a.cols());
        for t in 0..n {
            loop {
                let Some((pi, pj)) = self.smallest_pivot(t) else {
                    return;
                };
                self.swap_rows(t, pi);
                self.swap_cols(t, pj);
                if !self.clear_cross(t) {
                    continue;
                }
                // The pivot must divide the whole trailing block; otherwise
                // fold an offending row in and reduce again.
                let pivot = self.a[(t, t)].clone();
                let offender = (t + 1..self.a.rows()).find(|&i| {
                    (t + 1..self.a.cols()).any(|j| !(&self.a[(i, j)] % &pivot).is_zero())
                });
                match offender {
                    Some(i) => self.add_row(t, i, &BigInt::one()),
                    None => break,
                }
            }
            if self.a[(t, t)].is_negative() {
                self.negate_row(t);
            }
        }
    }
}

/// Computes the Smith normal form of `a` together with the unimodular
/// transforms. Total on all integer matrices, including empty ones.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (m, n) = a.shape();
    let mut r = Reducer {
        a: a.clone(),
        u: IntMatrix::identity(m),
        u_inv: IntMatrix::identity(m),
        v: IntMatrix::identity(n),
        v_inv: IntMatrix::identity(n),
    };
    r.run();
    SmithForm {
        d: r.a,
        u: r.u,
        u_inv: r.u_inv,
        v: r.v,
        v_inv: r.v_inv,
    }
}
