use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Row-style Hermite normal form `h = u · a`.
///
/// The first `rank` rows of `h` are in echelon form with positive pivots at
/// `pivots`, entries above each pivot reduced into `[0, pivot)`; the remaining
/// rows are zero. `u` is unimodular.
#[derive(Clone, Debug)]
pub struct HermiteDecomposition {
    pub u: IntMatrix,
    pub h: IntMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl HermiteDecomposition {
    /// The nonzero rows: a basis of the row lattice of the input.
    pub fn basis(&self) -> Vec<Vec<BigInt>> {
        (0..self.rank).map(|i| self.h.row(i).to_vec()).collect()
    }
}

pub fn hermite_normal_form(a: &IntMatrix) -> HermiteDecomposition {
    let (rows, cols) = (a.rows(), a.cols());
    let mut h = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let best = (r..rows)
                .filter(|&i| !h[(i, col)].is_zero())
                .min_by_key(|&i| h[(i, col)].abs());
            let Some(best) = best else { break };
            h.swap_rows(r, best);
            u.swap_rows(r, best);
            let mut done = true;
            for i in r + 1..rows {
                if !h[(i, col)].is_zero() {
                    let q = -h[(i, col)].div_floor(&h[(r, col)]);
                    h.add_row_multiple(i, r, &q);
                    u.add_row_multiple(i, r, &q);
                    done &= h[(i, col)].is_zero();
                }
            }
            if done {
                break;
            }
        }
        if h[(r, col)].is_zero() {
            continue;
        }
        if h[(r, col)].is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = -h[(i, col)].div_floor(&h[(r, col)]);
            h.add_row_multiple(i, r, &q);
            u.add_row_multiple(i, r, &q);
        }
        pivots.push(col);
        r += 1;
    }
    HermiteDecomposition {
        u,
        h,
        rank: r,
        pivots,
    }
}
