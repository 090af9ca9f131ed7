//! Exact linear algebra over the integers and rationals: dense matrices,
//! rational linear functionals, Smith normal form, and dual cone descriptions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

mod dual;
mod snf;

pub use dual::{cone_contains, dual_cone, dual_description, DualDescription};
pub use snf::{invariant_factors, smith_normal_form, SmithDecomposition};

pub type LatticeVector = Vec<BigInt>;

pub fn int_vec(entries: &[i64]) -> LatticeVector {
    entries.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn vec_add(a: &[BigInt], b: &[BigInt]) -> LatticeVector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[BigInt], b: &[BigInt]) -> LatticeVector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(c: &BigInt, a: &[BigInt]) -> LatticeVector {
    a.iter().map(|x| c * x).collect()
}

pub fn is_zero_vec(a: &[BigInt]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// Divides by the content so the entries are coprime. The zero vector is
/// returned unchanged; the sign is left as given.
pub fn primitive(v: &[BigInt]) -> LatticeVector {
    let mut g = BigInt::zero();
    for x in v {
        g = g.gcd(x);
    }
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Clears denominators and divides by the content; used to put facet normals
/// and rays into primitive integer form.
pub fn primitive_from_rational(v: &[BigRational]) -> LatticeVector {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    primitive(&ints)
}

/// Rank of the span of the given integer vectors (fraction-free elimination).
pub fn rank(vectors: &[LatticeVector]) -> usize {
    let mut rows: Vec<LatticeVector> = vectors
        .iter()
        .filter(|v| !is_zero_vec(v))
        .map(|v| primitive(v))
        .collect();
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let pivot = rows[rank][c].clone();
        for r in rank + 1..rows.len() {
            if rows[r][c].is_zero() {
                continue;
            }
            let factor = rows[r][c].clone();
            let scaled: Vec<BigInt> = rows[r]
                .iter()
                .zip(&rows[rank])
                .map(|(x, p)| x * &pivot - &factor * p)
                .collect();
            rows[r] = primitive(&scaled);
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Dense integer matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<LatticeVector>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols));
        IntMatrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        IntMatrix::from_rows(rows.iter().map(|r| int_vec(r)).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[target] += factor * row[source]
    pub(crate) fn row_axpy(&mut self, target: usize, factor: &BigInt, source: usize) {
        for c in 0..self.cols {
            let v = self.get(target, c) + factor * self.get(source, c);
            self.set(target, c, v);
        }
    }

    /// col[target] += factor * col[source]
    pub(crate) fn col_axpy(&mut self, target: usize, factor: &BigInt, source: usize) {
        for r in 0..self.rows {
            let v = self.get(r, target) + factor * self.get(r, source);
            self.set(r, target, v);
        }
    }

    pub(crate) fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self.get(r, c);
            self.set(r, c, v);
        }
    }
}

/// Dense rational matrix, row major. Represents linear maps on the ambient
/// rational vector space (face sections, homotopy transforms).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.data[r * self.cols + c] = v;
    }

    /// column ⊗ row outer product.
    pub fn outer(col: &[BigRational], row: &[BigRational]) -> Self {
        let mut m = RatMatrix::zero(col.len(), row.len());
        for (i, x) in col.iter().enumerate() {
            for (j, y) in row.iter().enumerate() {
                m.set(i, j, x * y);
            }
        }
        m
    }

    pub fn add(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: &BigRational) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = RatMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn apply_int(&self, v: &[BigInt]) -> Vec<BigRational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| self.get(r, c) * BigRational::from(v[c].clone()))
                    .sum()
            })
            .collect()
    }

    pub fn apply_rat(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c) * &v[c]).sum())
            .collect()
    }
}

/// A rational linear functional on the ambient space, given by its coefficient
/// vector: `eval(x) = Σ coeffs[i]·x[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunctional {
    coeffs: Vec<BigRational>,
}

impl RationalFunctional {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        RationalFunctional { coeffs }
    }

    pub fn from_int(coeffs: &[BigInt]) -> Self {
        RationalFunctional {
            coeffs: coeffs
                .iter()
                .map(|x| BigRational::from(x.clone()))
                .collect(),
        }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        RationalFunctional::from_int(&int_vec(coeffs))
    }

    pub fn zero(dim: usize) -> Self {
        RationalFunctional {
            coeffs: vec![BigRational::zero(); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn eval_int(&self, x: &[BigInt]) -> BigRational {
        assert_eq!(self.coeffs.len(), x.len());
        self.coeffs
            .iter()
            .zip(x)
            .map(|(c, v)| c * BigRational::from(v.clone()))
            .sum()
    }

    pub fn eval_rat(&self, x: &[BigRational]) -> BigRational {
        assert_eq!(self.coeffs.len(), x.len());
        self.coeffs.iter().zip(x).map(|(c, v)| c * v).sum()
    }

    pub fn add(&self, other: &RationalFunctional) -> RationalFunctional {
        RationalFunctional {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> RationalFunctional {
        RationalFunctional {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Composition with a linear map: `(self ∘ m)(x) = self(m·x)`, i.e. the
    /// row vector of coefficients multiplied by `m`.
    pub fn compose(&self, m: &RatMatrix) -> RationalFunctional {
        assert_eq!(self.coeffs.len(), m.rows());
        let coeffs = (0..m.cols())
            .map(|c| (0..m.rows()).map(|r| &self.coeffs[r] * m.get(r, c)).sum())
            .collect();
        RationalFunctional { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Primitive integer form of the coefficient vector.
    pub fn primitive_coeffs(&self) -> LatticeVector {
        primitive_from_rational(&self.coeffs)
    }
}

/// t^e for rational t > 0 and any integer exponent.
pub fn rational_pow(t: &BigRational, e: i64) -> BigRational {
    assert!(t.is_positive(), "rational_pow expects a positive base");
    let p = t.pow(e.unsigned_abs() as u32 as i32);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

pub fn rat_from_i64(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn check_dim(expected: usize, got: usize) -> Result<()> {
    if expected != got {
        return Err(Error::DimensionMismatch { expected, got });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_divides_content() {
        assert_eq!(primitive(&int_vec(&[4, -6, 8])), int_vec(&[2, -3, 4]));
        assert_eq!(primitive(&int_vec(&[0, 0])), int_vec(&[0, 0]));
    }

    #[test]
    fn primitive_from_rational_clears_denominators() {
        let v = vec![rat_from_i64(1, 2), rat_from_i64(-3, 4)];
        assert_eq!(primitive_from_rational(&v), int_vec(&[2, -3]));
    }

    #[test]
    fn rank_of_spanning_and_degenerate_sets() {
        assert_eq!(rank(&[int_vec(&[1, 0]), int_vec(&[0, 1])]), 2);
        assert_eq!(rank(&[int_vec(&[1, 2]), int_vec(&[2, 4])]), 1);
        assert_eq!(rank(&[int_vec(&[0, 0])]), 0);
        assert_eq!(
            rank(&[int_vec(&[1, 0, 1]), int_vec(&[0, 1, 1]), int_vec(&[1, 1, 2])]),
            2
        );
    }

    #[test]
    fn functional_composition_matches_direct_evaluation() {
        // f(x,y) = 2x + 3y composed with the projection (x,y) ↦ (x,0)
        let f = RationalFunctional::from_i64(&[2, 3]);
        let mut p = RatMatrix::zero(2, 2);
        p.set(0, 0, BigRational::one());
        let g = f.compose(&p);
        let v = int_vec(&[5, 7]);
        assert_eq!(g.eval_int(&v), f.eval_rat(&p.apply_int(&v)));
        assert_eq!(g.eval_int(&v), BigRational::from(BigInt::from(10)));
    }

    #[test]
    fn rational_pow_handles_negative_exponents() {
        let t = rat_from_i64(1, 2);
        assert_eq!(rational_pow(&t, 3), rat_from_i64(1, 8));
        assert_eq!(rational_pow(&t, -2), rat_from_i64(4, 1));
        assert_eq!(rational_pow(&t, 0), BigRational::one());
    }
}
