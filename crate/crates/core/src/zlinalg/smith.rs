use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// `d = u · a · v` with `u`, `v` unimodular and `d` diagonal with `d_1 | d_2 | …`.
/// `v_inv` is kept alongside `v` because kernel and presentation code needs both.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SmithDecomposition {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|x| !x.is_zero()).count()
    }
}

struct Reducer {
    a: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        self.a.add_row_multiple(dst, src, q);
        self.u.add_row_multiple(dst, src, q);
    }

    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        self.a.add_col_multiple(dst, src, q);
        self.v.add_col_multiple(dst, src, q);
        // inverse of the column operation, applied on the left
        self.v_inv.add_row_multiple(src, dst, &-q);
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        self.u.negate_row(i);
    }

    /// Smallest nonzero entry by absolute value in the trailing block from `(t, t)`.
    fn min_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), BigInt)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = self.a[(i, j)].abs();
                if !x.is_zero() && best.as_ref().is_none_or(|(_, b)| x < *b) {
                    best = Some(((i, j), x));
                }
            }
        }
        best.map(|(pos, _)| pos)
    }

    /// Clears column and row `t` below/right of the pivot, each step leaving a
    /// remainder smaller than the pivot; returns false if the pivot changed.
    fn clear_cross(&mut self, t: usize) -> bool {
        let (rows, cols) = (self.a.rows(), self.a.cols());
        let mut clean = true;
        for i in t + 1..rows {
            if !self.a[(i, t)].is_zero() {
                let q = self.a[(i, t)].div_floor(&self.a[(t, t)]);
                self.add_row(i, t, &-q);
                clean &= self.a[(i, t)].is_zero();
            }
        }
        for j in t + 1..cols {
            if !self.a[(t, j)].is_zero() {
                let q = self.a[(t, j)].div_floor(&self.a[(t, t)]);
                self.add_col(j, t, &-q);
                clean &= self.a[(t, j)].is_zero();
            }
        }
        if clean {
            return true;
        }
        // move the smallest leftover in the cross onto the pivot
        let mut best: Option<(bool, usize, BigInt)> = None;
        for i in t + 1..rows {
            let x = self.a[(i, t)].abs();
            if !x.is_zero() && best.as_ref().is_none_or(|b| x < b.2) {
                best = Some((true, i, x));
            }
        }
        for j in t + 1..cols {
            let x = self.a[(t, j)].abs();
            if !x.is_zero() && best.as_ref().is_none_or(|b| x < b.2) {
                best = Some((false, j, x));
            }
        }
        match best {
            Some((true, i, _)) => self.swap_rows(t, i),
            Some((false, j, _)) => self.swap_cols(t, j),
            None => unreachable!("unclean cross without a nonzero entry"),
        }
        false
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (a.rows(), a.cols());
    let mut r = Reducer {
        a: a.clone(),
        u: IntMatrix::identity(rows),
        v: IntMatrix::identity(cols),
        v_inv: IntMatrix::identity(cols),
    };
    for t in 0..rows.min(cols) {
        let Some((i, j)) = r.min_entry(t) else { break };
        r.swap_rows(t, i);
        r.swap_cols(t, j);
        loop {
            if !r.clear_cross(t) {
                continue;
            }
            let pivot = r.a[(t, t)].clone();
            let offender = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !r.a[(i, j)].is_multiple_of(&pivot))
            });
            match offender {
                Some(i) => r.add_row(t, i, &BigInt::from(1)),
                None => break,
            }
        }
        if r.a[(t, t)].is_negative() {
            r.negate_row(t);
        }
    }
    SmithDecomposition {
        u: r.u,
        d: r.a,
        v: r.v,
        v_inv: r.v_inv,
    }
}
