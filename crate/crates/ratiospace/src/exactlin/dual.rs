//! Dual cone computation by incremental double description.
//!
//! `dual_description` maintains a (lineality, extreme rays) pair for the set
//! of functionals nonnegative on all generators processed so far, starting
//! from the whole dual space. New rays are formed only from adjacent pairs,
//! adjacency decided combinatorially from zero sets.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{
    dot, is_zero_vec, primitive, primitive_from_rational, rank, LatticeVector,
    RationalFunctional,
};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct DualDescription {
    /// Extreme rays of the dual cone modulo its lineality space; these are the
    /// facet normals of the primal cone inside its span.
    pub rays: Vec<LatticeVector>,
    /// Basis of the lineality space of the dual cone, i.e. the functionals
    /// vanishing on the span of the primal cone.
    pub lineality: Vec<LatticeVector>,
}

impl DualDescription {
    /// Membership list for the primal cone: a point lies in the closed cone
    /// iff every returned functional is nonnegative on it.
    pub fn membership_functionals(&self) -> Vec<RationalFunctional> {
        let mut out: Vec<LatticeVector> = self.rays.clone();
        for l in &self.lineality {
            out.push(l.clone());
            out.push(l.iter().map(|x| -x).collect());
        }
        out.sort();
        out.iter().map(|v| RationalFunctional::from_int(v)).collect()
    }

    /// The primal cone is salient iff the dual generators span the full space.
    pub fn primal_is_salient(&self, dim: usize) -> bool {
        let mut all = self.rays.clone();
        all.extend(self.lineality.iter().cloned());
        rank(&all) == dim
    }
}

struct Ray {
    v: LatticeVector,
    zeros: Vec<bool>, // per processed constraint: value == 0
}

fn zeros_against(v: &LatticeVector, constraints: &[&LatticeVector]) -> Vec<bool> {
    constraints.iter().map(|c| dot(v, c).is_zero()).collect()
}

/// Reduced echelon form with primitive rows and positive leading entries;
/// canonical basis for a rational subspace given integer spanning vectors.
fn reduce_subspace_basis(vectors: &[LatticeVector]) -> Vec<LatticeVector> {
    let mut rows: Vec<Vec<BigRational>> = vectors
        .iter()
        .filter(|v| !is_zero_vec(v))
        .map(|v| v.iter().map(|x| BigRational::from(x.clone())).collect())
        .collect();
    if rows.is_empty() {
        return Vec::new();
    }
    let cols = rows[0].len();
    let mut pivot_rows: Vec<usize> = Vec::new();
    let mut next = 0;
    for c in 0..cols {
        let Some(p) = (next..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(next, p);
        let inv = rows[next][c].clone().recip();
        for x in rows[next].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..rows.len() {
            if r != next && !rows[r][c].is_zero() {
                let f = rows[r][c].clone();
                for j in 0..cols {
                    let v = &rows[r][j] - &f * &rows[next][j];
                    rows[r][j] = v;
                }
            }
        }
        pivot_rows.push(next);
        next += 1;
        if next == rows.len() {
            break;
        }
    }
    pivot_rows
        .into_iter()
        .map(|r| primitive_from_rational(&rows[r]))
        .collect()
}

/// Facet description of the dual cone `{λ : λ(g) ≥ 0 for all generators}`.
pub fn dual_description(generators: &[LatticeVector], dim: usize) -> DualDescription {
    for g in generators {
        assert_eq!(g.len(), dim, "generator dimension mismatch");
    }
    let mut lineality: Vec<LatticeVector> = (0..dim)
        .map(|i| {
            let mut e = vec![BigInt::zero(); dim];
            e[i] = BigInt::from(1);
            e
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();
    let mut processed: Vec<&LatticeVector> = Vec::new();

    for g in generators {
        if is_zero_vec(g) {
            processed.push(g);
            for r in rays.iter_mut() {
                r.zeros.push(true);
            }
            continue;
        }
        let hit = lineality.iter().position(|l| !dot(l, g).is_zero());
        if let Some(idx) = hit {
            // The constraint cuts the lineality space: one direction survives
            // as a new extreme ray, the rest is projected into the hyperplane.
            let mut l0 = lineality.remove(idx);
            if dot(&l0, g).is_negative() {
                l0 = l0.iter().map(|x| -x).collect();
            }
            let a0 = dot(&l0, g);
            for l in lineality.iter_mut() {
                let al = dot(l, g);
                let projected: LatticeVector = l
                    .iter()
                    .zip(&l0)
                    .map(|(x, y)| x * &a0 - &al * y)
                    .collect();
                *l = primitive(&projected);
            }
            for r in rays.iter_mut() {
                let ar = dot(&r.v, g);
                let projected: LatticeVector = r
                    .v
                    .iter()
                    .zip(&l0)
                    .map(|(x, y)| x * &a0 - &ar * y)
                    .collect();
                r.v = primitive(&projected);
                r.zeros.push(true);
            }
            let mut zeros = vec![true; processed.len()];
            zeros.push(false);
            rays.push(Ray { v: l0, zeros });
            processed.push(g);
            continue;
        }

        // The constraint vanishes on the lineality space: cut the pointed part.
        let signs: Vec<BigInt> = rays.iter().map(|r| dot(&r.v, g)).collect();
        if signs.iter().all(|s| !s.is_negative()) {
            processed.push(g);
            for (r, s) in rays.iter_mut().zip(&signs) {
                r.zeros.push(s.is_zero());
            }
            continue;
        }
        let mut new_rays: Vec<Ray> = Vec::new();
        for (i, (r, s)) in rays.iter().zip(&signs).enumerate() {
            if !s.is_negative() {
                let mut zeros = r.zeros.clone();
                zeros.push(s.is_zero());
                new_rays.push(Ray {
                    v: r.v.clone(),
                    zeros,
                });
            }
            if s.is_positive() {
                for (j, (r2, s2)) in rays.iter().zip(&signs).enumerate() {
                    if !s2.is_negative() {
                        continue;
                    }
                    let meet: Vec<bool> = r
                        .zeros
                        .iter()
                        .zip(&r2.zeros)
                        .map(|(a, b)| *a && *b)
                        .collect();
                    let adjacent = !rays.iter().enumerate().any(|(k, r3)| {
                        k != i
                            && k != j
                            && meet
                                .iter()
                                .zip(&r3.zeros)
                                .all(|(need, have)| !*need || *have)
                    });
                    if !adjacent {
                        continue;
                    }
                    // s·r2 − s2·r lies on the hyperplane and in the cone.
                    let combo: LatticeVector = r2
                        .v
                        .iter()
                        .zip(&r.v)
                        .map(|(x, y)| x * s - s2 * y)
                        .collect();
                    let v = primitive(&combo);
                    let mut zeros = zeros_against(&v, &processed);
                    zeros.push(true);
                    new_rays.push(Ray { v, zeros });
                }
            }
        }
        rays = new_rays;
        processed.push(g);
    }

    let mut ray_vecs: Vec<LatticeVector> = rays.into_iter().map(|r| r.v).collect();
    ray_vecs.sort();
    ray_vecs.dedup();
    DualDescription {
        rays: ray_vecs,
        lineality: reduce_subspace_basis(&lineality),
    }
}

/// Facet normals of a salient cone, in primitive integer form. The returned
/// functionals decide membership: `x ∈ cone(generators)` iff all are ≥ 0 at x.
pub fn dual_cone(generators: &[LatticeVector], dim: usize) -> Result<Vec<RationalFunctional>> {
    let desc = dual_description(generators, dim);
    if !desc.primal_is_salient(dim) {
        return Err(Error::NotSalient);
    }
    Ok(desc.membership_functionals())
}

/// Membership by facet evaluation.
pub fn cone_contains(facets: &[RationalFunctional], point: &[BigRational]) -> Result<bool> {
    for f in facets {
        super::check_dim(f.dim(), point.len())?;
        if f.eval_rat(point).is_negative() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int_vec;

    fn rays_of(gens: &[&[i64]], dim: usize) -> Vec<LatticeVector> {
        let g: Vec<LatticeVector> = gens.iter().map(|v| int_vec(v)).collect();
        dual_description(&g, dim).rays
    }

    #[test]
    fn quadrant_is_self_dual() {
        let rays = rays_of(&[&[1, 0], &[0, 1]], 2);
        assert_eq!(rays, vec![int_vec(&[0, 1]), int_vec(&[1, 0])]);
    }

    #[test]
    fn narrow_cone_facets() {
        // cone over (1,0) and (1,2): facets y ≥ 0 and 2x − y ≥ 0
        let rays = rays_of(&[&[1, 0], &[1, 2]], 2);
        assert_eq!(rays, vec![int_vec(&[0, 1]), int_vec(&[2, -1])]);
    }

    #[test]
    fn wide_cone_facets() {
        // cone over (1,0) and (−1,1): facets y ≥ 0 and x + y ≥ 0
        let rays = rays_of(&[&[1, 0], &[-1, 1]], 2);
        assert_eq!(rays, vec![int_vec(&[0, 1]), int_vec(&[1, 1])]);
    }

    #[test]
    fn redundant_generator_changes_nothing() {
        assert_eq!(
            rays_of(&[&[1, 0], &[1, 1], &[1, 2]], 2),
            rays_of(&[&[1, 0], &[1, 2]], 2)
        );
    }

    #[test]
    fn ray_in_the_plane_has_lineality() {
        let g = vec![int_vec(&[1, 0])];
        let desc = dual_description(&g, 2);
        assert_eq!(desc.rays, vec![int_vec(&[1, 0])]);
        assert_eq!(desc.lineality, vec![int_vec(&[0, 1])]);
        assert!(desc.primal_is_salient(2));
    }

    #[test]
    fn full_line_is_not_salient() {
        let g = vec![int_vec(&[1, 0]), int_vec(&[-1, 0]), int_vec(&[0, 1])];
        let desc = dual_description(&g, 2);
        assert!(!desc.primal_is_salient(2));
        assert!(dual_cone(&g, 2).is_err());
    }

    #[test]
    fn trivial_cone_dual_is_everything() {
        let desc = dual_description(&[], 2);
        assert!(desc.rays.is_empty());
        assert_eq!(desc.lineality.len(), 2);
        // membership functionals pin down exactly the origin
        let fs = desc.membership_functionals();
        let zero = vec![BigRational::zero(), BigRational::zero()];
        assert!(cone_contains(&fs, &zero).unwrap());
        let one = vec![BigRational::from(BigInt::from(1)), BigRational::zero()];
        assert!(!cone_contains(&fs, &one).unwrap());
    }

    #[test]
    fn square_cone_has_four_facets() {
        let rays = rays_of(&[&[1, 0, 1], &[0, 1, 1], &[-1, 0, 1], &[0, -1, 1]], 3);
        assert_eq!(rays.len(), 4);
        for g in [&[1, 0, 1], &[0, 1, 1], &[-1, 0, 1], &[0, -1, 1]] {
            let gv = int_vec(g);
            for r in &rays {
                assert!(!dot(r, &gv).is_negative());
            }
        }
    }

    #[test]
    fn membership_by_facets_on_the_quadrant() {
        let g = vec![int_vec(&[1, 0]), int_vec(&[0, 1])];
        let fs = dual_cone(&g, 2).unwrap();
        let p = |a: i64, b: i64| {
            vec![
                BigRational::from(BigInt::from(a)),
                BigRational::from(BigInt::from(b)),
            ]
        };
        assert!(cone_contains(&fs, &p(3, 5)).unwrap());
        assert!(cone_contains(&fs, &p(0, 0)).unwrap());
        assert!(!cone_contains(&fs, &p(-1, 0)).unwrap());
    }
}
