//! Smith normal form over the integers with unimodular transforms.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// `u * input * v = d` with `u`, `v` unimodular and `d` diagonal,
/// `d[0][0] | d[1][1] | …`, diagonal entries nonnegative.
#[derive(Debug, Clone)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// Nonzero invariant factors, in divisibility order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.d
            .diagonal()
            .into_iter()
            .filter(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

fn min_nonzero_in_submatrix(d: &IntMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in k..d.rows() {
        for j in k..d.cols() {
            let v = d.get(i, j);
            if v.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if d.get(bi, bj).abs() <= v.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

fn reduce(d: &mut IntMatrix, mut u: Option<&mut IntMatrix>, mut v: Option<&mut IntMatrix>) {
    let rows = d.rows();
    let cols = d.cols();
    let mut k = 0;
    while k < rows.min(cols) {
        let Some((pi, pj)) = min_nonzero_in_submatrix(d, k) else {
            break; // remaining submatrix is zero
        };
        d.swap_rows(k, pi);
        if let Some(u) = u.as_deref_mut() {
            u.swap_rows(k, pi);
        }
        d.swap_cols(k, pj);
        if let Some(v) = v.as_deref_mut() {
            v.swap_cols(k, pj);
        }

        // Clear row and column k; truncating quotients leave remainders
        // strictly smaller than the pivot, so re-pivoting terminates.
        let mut dirty = false;
        for i in k + 1..rows {
            if d.get(i, k).is_zero() {
                continue;
            }
            let q = -(d.get(i, k) / d.get(k, k));
            d.row_axpy(i, &q, k);
            if let Some(u) = u.as_deref_mut() {
                u.row_axpy(i, &q, k);
            }
            if !d.get(i, k).is_zero() {
                dirty = true;
            }
        }
        for j in k + 1..cols {
            if d.get(k, j).is_zero() {
                continue;
            }
            let q = -(d.get(k, j) / d.get(k, k));
            d.col_axpy(j, &q, k);
            if let Some(v) = v.as_deref_mut() {
                v.col_axpy(j, &q, k);
            }
            if !d.get(k, j).is_zero() {
                dirty = true;
            }
        }
        if dirty {
            continue;
        }

        // Pivot cleared; enforce that it divides the rest of the submatrix.
        let mut fixed = true;
        'outer: for i in k + 1..rows {
            for j in k + 1..cols {
                if !(d.get(i, j) % d.get(k, k)).is_zero() {
                    let one = BigInt::from(1);
                    d.row_axpy(k, &one, i);
                    if let Some(u) = u.as_deref_mut() {
                        u.row_axpy(k, &one, i);
                    }
                    fixed = false;
                    break 'outer;
                }
            }
        }
        if !fixed {
            continue;
        }

        if d.get(k, k).is_negative() {
            d.negate_row(k);
            if let Some(u) = u.as_deref_mut() {
                u.negate_row(k);
            }
        }
        k += 1;
    }
}

pub fn smith_normal_form(input: &IntMatrix) -> SmithDecomposition {
    let mut d = input.clone();
    let mut u = IntMatrix::identity(input.rows());
    let mut v = IntMatrix::identity(input.cols());
    reduce(&mut d, Some(&mut u), Some(&mut v));
    SmithDecomposition { u, d, v }
}

/// Nonzero invariant factors without the transform bookkeeping — much
/// cheaper on large matrices where only ranks and torsion matter.
pub fn invariant_factors(input: &IntMatrix) -> Vec<BigInt> {
    let mut d = input.clone();
    reduce(&mut d, None, None);
    d.diagonal().into_iter().filter(|x| !x.is_zero()).collect()
}
