//! Independent reference implementations used by the test suite to
//! cross-check the main algorithms. Everything here favors transparent brute
//! force over efficiency and deliberately avoids the primary code paths:
//! membership and projection run through Fourier–Motzkin elimination, face
//! enumeration through an explicit face-property search, homology through
//! rational row reduction, and invariant factors through minor gcds.

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exactlin::{primitive_from_rational, IntMatrix, LatticeVector};
use crate::topology::SimplicialComplex;

/// Homogeneous system of inequalities `row · z ≥ 0`. Eliminates all variables
/// with index ≥ `keep` and returns the projected inequalities over the first
/// `keep` variables.
pub fn fourier_motzkin_project(
    rows: Vec<Vec<BigRational>>,
    keep: usize,
) -> Vec<Vec<BigRational>> {
    let width = rows.first().map_or(keep, |r| r.len());
    let mut rows = rows;
    for var in (keep..width).rev() {
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        let mut zero = Vec::new();
        for r in rows {
            match r[var].cmp(&BigRational::zero()) {
                std::cmp::Ordering::Greater => pos.push(r),
                std::cmp::Ordering::Less => neg.push(r),
                std::cmp::Ordering::Equal => zero.push(r),
            }
        }
        let mut next = zero;
        for p in &pos {
            for n in &neg {
                // p[var]·n − n[var]·p has a zero coefficient at `var`
                let combo: Vec<BigRational> = n
                    .iter()
                    .zip(p)
                    .map(|(nv, pv)| &p[var] * nv - &n[var] * pv)
                    .collect();
                next.push(combo);
            }
        }
        rows = next;
        rows.iter_mut().for_each(|r| {
            r.truncate(var);
        });
        // drop identically-zero rows to keep the system small
        rows.retain(|r| r.iter().any(|x| !x.is_zero()));
        rows.sort();
        rows.dedup();
    }
    rows
}

/// Is `x` a nonnegative rational combination of `gens`? Decided by projecting
/// the combination coefficients out of the homogenized system.
pub fn cone_member(gens: &[LatticeVector], x: &[BigRational]) -> bool {
    let d = x.len();
    let m = gens.len();
    // variables: (s, t_1..t_m); constraints: t_i ≥ 0, s ≥ 0, Σ t_i g_i = x·s
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for i in 0..=m {
        let mut r = vec![BigRational::zero(); m + 1];
        r[i] = BigRational::one();
        rows.push(r);
    }
    for k in 0..d {
        let mut eq = vec![BigRational::zero(); m + 1];
        eq[0] = -x[k].clone();
        for (i, g) in gens.iter().enumerate() {
            eq[i + 1] = BigRational::from(g[k].clone());
        }
        let neg: Vec<BigRational> = eq.iter().map(|v| -v).collect();
        rows.push(eq);
        rows.push(neg);
    }
    let projected = fourier_motzkin_project(rows, 1);
    // the projection is a cone in the scale variable; x is a member iff s = 1 fits
    projected.iter().all(|r| !r[0].is_negative())
}

pub fn cone_member_int(gens: &[LatticeVector], x: &[BigInt]) -> bool {
    let xr: Vec<BigRational> = x.iter().map(|v| BigRational::from(v.clone())).collect();
    cone_member(gens, &xr)
}

/// Inequality description of `cone(gens)` by eliminating the combination
/// coefficients, reduced to the irredundant facet list (primitive form).
/// Intended for full-dimensional salient cones at test scale.
pub fn facets_by_elimination(gens: &[LatticeVector], dim: usize) -> Vec<LatticeVector> {
    let m = gens.len();
    // variables: (x_1..x_d, t_1..t_m); constraints: t ≥ 0, x = Σ t_i g_i
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for i in 0..m {
        let mut r = vec![BigRational::zero(); dim + m];
        r[dim + i] = BigRational::one();
        rows.push(r);
    }
    for k in 0..dim {
        let mut eq = vec![BigRational::zero(); dim + m];
        eq[k] = BigRational::one();
        for (i, g) in gens.iter().enumerate() {
            eq[dim + i] = -BigRational::from(g[k].clone());
        }
        let neg: Vec<BigRational> = eq.iter().map(|v| -v).collect();
        rows.push(eq);
        rows.push(neg);
    }
    let mut ineqs: Vec<LatticeVector> = fourier_motzkin_project(rows, dim)
        .iter()
        .map(|r| primitive_from_rational(r))
        .collect();
    ineqs.sort();
    ineqs.dedup();
    // A valid inequality is redundant iff it is a nonnegative combination of
    // the others (Farkas); prune greedily until stable.
    loop {
        let mut removed = false;
        for i in 0..ineqs.len() {
            let others: Vec<LatticeVector> = ineqs
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, v)| v.clone())
                .collect();
            let target: Vec<BigRational> = ineqs[i]
                .iter()
                .map(|v| BigRational::from(v.clone()))
                .collect();
            if cone_member(&others, &target) {
                ineqs.remove(i);
                removed = true;
                break;
            }
        }
        if !removed {
            break;
        }
    }
    ineqs
}

/// All face supports of `cone(gens) ∩ ℤ^d` found by brute force: a generator
/// subset is a face support iff it is closed (contains every generator inside
/// its cone) and no sum of two monoid points lands in the subcone while a
/// summand stays outside. The search window covers lattice points with
/// coordinates up to twice the largest generator coordinate.
pub fn brute_force_face_supports(gens: &[LatticeVector], dim: usize) -> Vec<Vec<usize>> {
    let bound: i64 = gens
        .iter()
        .flat_map(|g| g.iter())
        .map(|x| {
            let (_, digits) = x.to_u64_digits();
            digits.first().copied().unwrap_or(0) as i64
        })
        .max()
        .unwrap_or(1)
        * 2;
    let bound = bound.max(2);

    let mut box_points: Vec<LatticeVector> = Vec::new();
    let mut current = vec![-bound; dim];
    'fill: loop {
        box_points.push(current.iter().map(|&v| BigInt::from(v)).collect());
        for i in 0..dim {
            if current[i] < bound {
                current[i] += 1;
                continue 'fill;
            }
            current[i] = -bound;
        }
        break;
    }

    let monoid_points: Vec<&LatticeVector> = box_points
        .iter()
        .filter(|p| cone_member_int(gens, p))
        .collect();

    let mut supports = Vec::new();
    for t in (0..gens.len()).powerset() {
        let sub: Vec<LatticeVector> = t.iter().map(|&i| gens[i].clone()).collect();
        // closed support: exactly the generators inside the subcone
        let closure: Vec<usize> = (0..gens.len())
            .filter(|&i| cone_member_int(&sub, &gens[i]))
            .collect();
        if closure != t {
            continue;
        }
        let in_sub: Vec<bool> = monoid_points
            .iter()
            .map(|p| cone_member_int(&sub, p))
            .collect();
        let mut is_face = true;
        'pairs: for (i, x) in monoid_points.iter().enumerate() {
            for (j, y) in monoid_points.iter().enumerate() {
                if in_sub[i] && in_sub[j] {
                    continue;
                }
                let sum: LatticeVector = x.iter().zip(y.iter()).map(|(a, b)| a + b).collect();
                if cone_member_int(&sub, &sum) {
                    is_face = false;
                    break 'pairs;
                }
            }
        }
        if is_face {
            supports.push(t);
        }
    }
    supports.sort();
    supports
}

/// Betti numbers over ℚ through plain row reduction of boundary matrices.
pub fn rational_betti(complex: &SimplicialComplex, max_degree: usize) -> Vec<usize> {
    let mut dims: Vec<usize> = Vec::new();
    let mut ranks: Vec<usize> = Vec::new();
    for k in 0..=max_degree + 1 {
        let simplices = complex.simplices_of_dim(k);
        let faces = if k == 0 {
            Vec::new()
        } else {
            complex.simplices_of_dim(k - 1)
        };
        dims.push(simplices.len());
        let mut rows: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); simplices.len()]; faces.len()];
        for (col, s) in simplices.iter().enumerate() {
            for drop in 0..s.len() {
                let mut f = s.clone();
                f.remove(drop);
                if let Ok(row) = faces.binary_search(&f) {
                    rows[row][col] = if drop % 2 == 0 {
                        BigRational::one()
                    } else {
                        -BigRational::one()
                    };
                }
            }
        }
        ranks.push(rational_rank(rows));
    }
    (0..=max_degree)
        .map(|k| dims[k].saturating_sub(ranks[k] + ranks[k + 1]))
        .collect()
}

fn rational_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for r in rank + 1..rows.len() {
            if rows[r][c].is_zero() {
                continue;
            }
            let f = &rows[r][c] / &pivot;
            for j in c..cols {
                let v = &rows[r][j] - &f * &rows[rank][j];
                rows[r][j] = v;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Fraction-free determinant (Bareiss).
pub fn determinant(m: &IntMatrix) -> BigInt {
    assert_eq!(m.rows(), m.cols());
    let n = m.rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|r| m.row(r).to_vec()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Invariant factors from gcds of k×k minors: `d_k = gcd_k / gcd_{k-1}`.
pub fn invariant_factors_by_minors(m: &IntMatrix) -> Vec<BigInt> {
    use num_integer::Integer;
    let max_k = m.rows().min(m.cols());
    let mut factors = Vec::new();
    let mut prev_gcd = BigInt::one();
    for k in 1..=max_k {
        let mut g = BigInt::zero();
        for rows in (0..m.rows()).combinations(k) {
            for cols in (0..m.cols()).combinations(k) {
                let mut sub = IntMatrix::zero(k, k);
                for (i, &r) in rows.iter().enumerate() {
                    for (j, &c) in cols.iter().enumerate() {
                        sub.set(i, j, m.get(r, c).clone());
                    }
                }
                g = g.gcd(&determinant(&sub));
            }
        }
        if g.is_zero() {
            break;
        }
        factors.push(&g / &prev_gcd);
        prev_gcd = g;
    }
    factors
}
