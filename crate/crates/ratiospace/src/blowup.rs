//! Log blowups along two-generator ideals and their combinatorial fibers.
//!
//! Blowing up the ideal generated by a pair of monoid elements (f, g)
//! subdivides the dual cone of the monoid into the region where f dominates
//! and the region where g dominates.  The fiber over the closed stratum is a
//! point exactly when one of f - g, g - f already lies in the monoid (the
//! ideal is principal after saturation); otherwise the two full-dimensional
//! pieces meet along a wall and the fiber is an interval.  More general
//! star subdivisions of a two-dimensional dual cone produce chains of
//! intervals; `fiber_complex` models any such fan as a simplicial complex
//! with one vertex per maximal cone and one edge per shared wall ray.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{check_dim, dot, dual_description, is_zero_vec, primitive, rank, vec_sub, LatticeVector};
use crate::monoid::SharpFsMonoid;
use crate::topology::SimplicialComplex;

/// One maximal cone of a subdivided dual cone, by its extreme rays modulo
/// the (shared) lineality space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualCone {
    pub rays: Vec<LatticeVector>,
    pub lineality: Vec<LatticeVector>,
}

impl DualCone {
    fn from_description(d: crate::exactlin::DualDescription) -> DualCone {
        let mut rays = d.rays;
        rays.sort();
        let mut lineality = d.lineality;
        lineality.sort();
        DualCone { rays, lineality }
    }

    /// Dimension of the linear span of the cone.
    pub fn dim(&self) -> usize {
        let mut all = self.rays.clone();
        all.extend(self.lineality.iter().cloned());
        rank(&all)
    }
}

#[derive(Debug, Clone)]
pub struct DualConeFan {
    pub dim: usize,
    pub cones: Vec<DualCone>,
}

impl DualConeFan {
    /// Rays shared by two maximal cones; these are the interior walls of the
    /// subdivision and index the components of the exceptional fiber.
    pub fn interior_rays(&self) -> Vec<LatticeVector> {
        let mut shared = Vec::new();
        for (i, a) in self.cones.iter().enumerate() {
            for b in self.cones.iter().skip(i + 1) {
                for r in &a.rays {
                    if b.rays.contains(r) && !shared.contains(r) {
                        shared.push(r.clone());
                    }
                }
            }
        }
        shared.sort();
        shared
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        out.push_str(&format!("graph {name} {{\n"));
        for (i, c) in self.cones.iter().enumerate() {
            let rays: Vec<String> = c.rays.iter().map(|r| format!("{r:?}")).collect();
            out.push_str(&format!("  C{i} [label=\"C{i}: {}\"];\n", rays.join(" ")));
        }
        for (i, a) in self.cones.iter().enumerate() {
            for (j, b) in self.cones.iter().enumerate().skip(i + 1) {
                if a.rays.iter().any(|r| b.rays.contains(r)) {
                    out.push_str(&format!("  C{i} -- C{j};\n"));
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiberKind {
    Point,
    Interval,
    Complex,
}

impl FiberKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            FiberKind::Point => "Point",
            FiberKind::Interval => "Interval",
            FiberKind::Complex => "Complex",
        }
    }
}

#[derive(Debug, Clone)]
pub struct BlowupFiber {
    pub kind: FiberKind,
    pub complex: SimplicialComplex,
}

/// The side of the subdivided dual cone on which `extra` is nonnegative.
/// Degenerate when `-extra` lies in the cone of the monoid: then the side is
/// contained in a wall and has positive codimension.
fn side(m: &SharpFsMonoid, extra: &LatticeVector) -> DualCone {
    let mut constraints: Vec<LatticeVector> = m.generators().to_vec();
    if !is_zero_vec(extra) {
        constraints.push(extra.clone());
    }
    DualCone::from_description(dual_description(&constraints, m.dim()))
}

/// Subdivide the dual cone of `m` along the ideal generated by the pair
/// (f, g) and model the exceptional fiber.  Both elements must lie in the
/// monoid.  The fiber is a `Point` exactly when f - g or g - f is itself in
/// the monoid, and an `Interval` otherwise.
pub fn blowup_pair(
    m: &SharpFsMonoid,
    f: &LatticeVector,
    g: &LatticeVector,
) -> Result<(DualConeFan, BlowupFiber)> {
    check_dim(m.dim(), f.len())?;
    check_dim(m.dim(), g.len())?;
    if !m.contains(f)? {
        return Err(Error::NotInMonoid(f.clone()));
    }
    if !m.contains(g)? {
        return Err(Error::NotInMonoid(g.clone()));
    }
    let fg = vec_sub(f, g);
    let gf = vec_sub(g, f);
    let mut cones = Vec::new();
    for extra in [&fg, &gf] {
        let piece = side(m, extra);
        if piece.dim() == m.dim() && !cones.contains(&piece) {
            cones.push(piece);
        }
    }
    let fan = DualConeFan {
        dim: m.dim(),
        cones,
    };
    let fiber = fiber_complex(&fan);
    Ok((fan, fiber))
}

fn cross(a: &LatticeVector, b: &LatticeVector) -> BigInt {
    &a[0] * &b[1] - &a[1] * &b[0]
}

/// Star-subdivide the dual cone of a two-dimensional monoid along the given
/// interior rays (functionals strictly positive on every generator).  The
/// rays are deduplicated and sorted by angle; k distinct rays produce k + 1
/// maximal cones.  An empty ray list leaves the dual cone whole and is
/// accepted in any dimension.
pub fn subdivide_dual_cone(m: &SharpFsMonoid, rays: &[LatticeVector]) -> Result<DualConeFan> {
    if m.is_trivial() {
        return Err(Error::TrivialMonoid);
    }
    if rays.is_empty() {
        return Ok(DualConeFan {
            dim: m.dim(),
            cones: vec![side(m, &vec![BigInt::zero(); m.dim()])],
        });
    }
    if m.dim() != 2 || rank(m.generators()) != 2 {
        return Err(Error::DimensionUnsupported(m.dim()));
    }
    let mut interior: Vec<LatticeVector> = Vec::new();
    for (index, ray) in rays.iter().enumerate() {
        check_dim(m.dim(), ray.len())?;
        if m.generators()
            .iter()
            .any(|g| !dot(ray, g).is_positive())
        {
            return Err(Error::RayOutsideCone { index });
        }
        let p = primitive(ray);
        if !interior.contains(&p) {
            interior.push(p);
        }
    }
    let normals = m.facet_normals();
    let mut first = normals[0].clone();
    let mut last = normals[1].clone();
    if cross(&first, &last).is_negative() {
        std::mem::swap(&mut first, &mut last);
    }
    // Every interior ray lies strictly between the two boundary normals, and
    // the sector is salient, so the pairwise cross product orders them.
    interior.sort_by(|a, b| {
        let c = cross(a, b);
        if c.is_positive() {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    });
    let mut walls = vec![first];
    walls.extend(interior);
    walls.push(last);
    let cones = walls
        .windows(2)
        .map(|w| {
            let mut rays = vec![w[0].clone(), w[1].clone()];
            rays.sort();
            DualCone {
                rays,
                lineality: Vec::new(),
            }
        })
        .collect();
    Ok(DualConeFan {
        dim: m.dim(),
        cones,
    })
}

/// The combinatorial exceptional fiber of a subdivided dual cone: one vertex
/// per maximal cone, one edge per pair of cones sharing a wall ray.
pub fn fiber_complex(fan: &DualConeFan) -> BlowupFiber {
    let labels: Vec<String> = (0..fan.cones.len()).map(|i| format!("C{i}")).collect();
    let mut maximal: Vec<Vec<usize>> = Vec::new();
    let mut touched = vec![false; fan.cones.len()];
    for (i, a) in fan.cones.iter().enumerate() {
        for (j, b) in fan.cones.iter().enumerate().skip(i + 1) {
            if a.rays.iter().any(|r| b.rays.contains(r)) {
                maximal.push(vec![i, j]);
                touched[i] = true;
                touched[j] = true;
            }
        }
    }
    let edges = maximal.len();
    for (i, t) in touched.iter().enumerate() {
        if !t {
            maximal.push(vec![i]);
        }
    }
    let complex = SimplicialComplex::from_maximal(labels, maximal);
    let kind = match (fan.cones.len(), edges) {
        (1, 0) => FiberKind::Point,
        (2, 1) => FiberKind::Interval,
        _ => FiberKind::Complex,
    };
    BlowupFiber { kind, complex }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int_vec;
    use crate::monoid::free_monoid;
    use crate::topology::homology;

    #[test]
    fn principal_pair_gives_a_point() {
        let m = free_monoid(2);
        let (fan, fiber) =
            blowup_pair(&m, &int_vec(&[2, 1]), &int_vec(&[1, 1])).unwrap();
        assert_eq!(fan.cones.len(), 1);
        assert_eq!(fiber.kind, FiberKind::Point);
        assert!(fan.interior_rays().is_empty());
    }

    #[test]
    fn equal_pair_gives_a_point() {
        let m = free_monoid(2);
        let (fan, fiber) =
            blowup_pair(&m, &int_vec(&[1, 1]), &int_vec(&[1, 1])).unwrap();
        assert_eq!(fan.cones.len(), 1);
        assert_eq!(fiber.kind, FiberKind::Point);
    }

    #[test]
    fn incomparable_pair_gives_an_interval() {
        let m = free_monoid(2);
        let (fan, fiber) =
            blowup_pair(&m, &int_vec(&[1, 0]), &int_vec(&[0, 1])).unwrap();
        assert_eq!(fan.cones.len(), 2);
        assert_eq!(fiber.kind, FiberKind::Interval);
        // The shared wall of x - y = 0 is the diagonal functional.
        assert_eq!(fan.interior_rays(), vec![int_vec(&[1, 1])]);
    }

    #[test]
    fn elements_outside_the_monoid_are_rejected() {
        let m = free_monoid(2);
        let err = blowup_pair(&m, &int_vec(&[-1, 0]), &int_vec(&[0, 1])).unwrap_err();
        assert!(matches!(err, Error::NotInMonoid(_)));
    }

    #[test]
    fn interval_in_a_singular_cone() {
        // Saturation of <(1,0),(1,2)>; (1,1) is in the monoid.
        let m = SharpFsMonoid::from_i64(2, &[&[1, 0], &[1, 2]]).unwrap();
        let (_, fiber) = blowup_pair(&m, &int_vec(&[1, 0]), &int_vec(&[1, 2])).unwrap();
        assert_eq!(fiber.kind, FiberKind::Interval);
        let (_, fiber) = blowup_pair(&m, &int_vec(&[2, 1]), &int_vec(&[1, 0])).unwrap();
        assert_eq!(fiber.kind, FiberKind::Point);
    }

    #[test]
    fn point_dichotomy_matches_difference_membership() {
        let m = SharpFsMonoid::from_i64(2, &[&[1, 0], &[1, 2]]).unwrap();
        for fx in 0..3i64 {
            for fy in 0..3i64 {
                for gx in 0..3i64 {
                    for gy in 0..3i64 {
                        let f = int_vec(&[fx, fy]);
                        let g = int_vec(&[gx, gy]);
                        if !m.contains(&f).unwrap() || !m.contains(&g).unwrap() {
                            continue;
                        }
                        let (_, fiber) = blowup_pair(&m, &f, &g).unwrap();
                        let principal = m.contains(&vec_sub(&f, &g)).unwrap()
                            || m.contains(&vec_sub(&g, &f)).unwrap();
                        assert_eq!(fiber.kind == FiberKind::Point, principal);
                    }
                }
            }
        }
    }

    #[test]
    fn subdivision_produces_a_chain_of_cones() {
        let m = free_monoid(2);
        let rays = vec![int_vec(&[2, 1]), int_vec(&[1, 1]), int_vec(&[1, 2])];
        let fan = subdivide_dual_cone(&m, &rays).unwrap();
        assert_eq!(fan.cones.len(), 4);
        assert_eq!(fan.interior_rays().len(), 3);
        let fiber = fiber_complex(&fan);
        assert_eq!(fiber.kind, FiberKind::Complex);
        assert_eq!(fiber.complex.simplices_of_dim(1).len(), 3);
        let h = homology(&fiber.complex, 1);
        assert!(h.is_acyclic());
    }

    #[test]
    fn subdivision_sorts_and_deduplicates_rays() {
        let m = free_monoid(2);
        let rays = vec![int_vec(&[1, 2]), int_vec(&[2, 4]), int_vec(&[2, 1])];
        let fan = subdivide_dual_cone(&m, &rays).unwrap();
        assert_eq!(fan.cones.len(), 3);
        assert_eq!(
            fan.interior_rays(),
            vec![int_vec(&[1, 2]), int_vec(&[2, 1])]
        );
    }

    #[test]
    fn boundary_rays_are_rejected() {
        let m = free_monoid(2);
        let err = subdivide_dual_cone(&m, &[int_vec(&[1, 0])]).unwrap_err();
        assert!(matches!(err, Error::RayOutsideCone { index: 0 }));
        let err = subdivide_dual_cone(&m, &[int_vec(&[1, 1]), int_vec(&[1, -1])]).unwrap_err();
        assert!(matches!(err, Error::RayOutsideCone { index: 1 }));
    }

    #[test]
    fn empty_subdivision_keeps_the_cone_whole() {
        let m = free_monoid(3);
        let fan = subdivide_dual_cone(&m, &[]).unwrap();
        assert_eq!(fan.cones.len(), 1);
        assert_eq!(fiber_complex(&fan).kind, FiberKind::Point);
    }

    #[test]
    fn higher_dimensional_subdivision_is_unsupported() {
        let m = free_monoid(3);
        let err = subdivide_dual_cone(&m, &[int_vec(&[1, 1, 1])]).unwrap_err();
        assert!(matches!(err, Error::DimensionUnsupported(3)));
    }

    #[test]
    fn pair_order_does_not_change_the_kind() {
        let m = SharpFsMonoid::from_i64(2, &[&[2, -1], &[-1, 2]]).unwrap();
        let pairs = [
            (int_vec(&[2, -1]), int_vec(&[-1, 2])),
            (int_vec(&[1, 1]), int_vec(&[2, -1])),
            (int_vec(&[0, 0]), int_vec(&[1, 1])),
        ];
        for (f, g) in &pairs {
            let (_, a) = blowup_pair(&m, f, g).unwrap();
            let (_, b) = blowup_pair(&m, g, f).unwrap();
            assert_eq!(a.kind, b.kind);
        }
    }
}
