//! Linear sections `p : S → F ⊗ ℚ≥0` restricting to the identity on the face
//! F. A section is assembled from codimension-1 steps down a saturated face
//! chain; each step projects along a chosen complement generator and then
//! adds a correction `c·l(x)·a` toward the inner point `a` of the smaller
//! face, with the least nonnegative integer `c` keeping every generator
//! image inside the target cone.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{LatticeVector, RatMatrix, RationalFunctional};
use crate::monoid::{FaceId, SharpFsMonoid};

#[derive(Debug, Clone)]
pub struct SectionStep {
    pub upper: FaceId,
    pub lower: FaceId,
    /// Supporting functional of the lower face; vanishes exactly there.
    pub functional: RationalFunctional,
    /// Generator index spanning the chosen complement (empty target: none).
    pub complement: Option<usize>,
    /// Inner point of the lower face scaled into the correction term.
    pub anchor: LatticeVector,
    /// Least nonnegative scaling constant admitting the step.
    pub scale: BigInt,
    pub matrix: RatMatrix,
}

#[derive(Debug, Clone)]
pub struct FaceSection {
    pub target: FaceId,
    pub matrix: RatMatrix,
    pub steps: Vec<SectionStep>,
}

impl FaceSection {
    pub fn scaling_constants(&self) -> Vec<BigInt> {
        self.steps.iter().map(|s| s.scale.clone()).collect()
    }

    pub fn apply_int(&self, x: &[BigInt]) -> Vec<BigRational> {
        self.matrix.apply_int(x)
    }
}

#[derive(Debug, Clone)]
pub struct SectionReport {
    /// Generators of the target face that are not fixed, with their images.
    pub identity_failures: Vec<(usize, Vec<BigRational>)>,
    /// Generators of the monoid whose image leaves the target cone.
    pub image_failures: Vec<(usize, Vec<BigRational>)>,
}

impl SectionReport {
    pub fn passed(&self) -> bool {
        self.identity_failures.is_empty() && self.image_failures.is_empty()
    }
}

/// One codimension-1 step from `upper` down to `lower`, with the complement
/// direction given explicitly. `l` must vanish exactly on `lower` within
/// `upper` and be nonnegative there; `w` must satisfy `l(w) > 0`.
pub(crate) fn section_step_with_splitting(
    m: &SharpFsMonoid,
    upper: FaceId,
    lower: FaceId,
    l: &RationalFunctional,
    w: &[BigRational],
) -> (RatMatrix, LatticeVector, BigInt, RatMatrix) {
    let d = m.dim();
    let lw = l.eval_rat(w);
    assert!(lw > BigRational::zero(), "complement must pair with l");
    // projection x ↦ x − (l(x)/l(w))·w
    let scaled: Vec<BigRational> = w.iter().map(|x| x / &lw).collect();
    let projection = RatMatrix::identity(d).sub(&RatMatrix::outer(&scaled, l.coeffs()));

    let lower_face = m.face(lower);
    if lower_face.is_zero() {
        return (
            projection,
            vec![BigInt::zero(); d],
            BigInt::zero(),
            RatMatrix::zero(d, d),
        );
    }
    let anchor = m.inner_point(lower).expect("nonzero face has an inner point");
    let anchor_rat: Vec<BigRational> = anchor
        .iter()
        .map(|x| BigRational::from(x.clone()))
        .collect();
    let correction = RatMatrix::outer(&anchor_rat, l.coeffs());

    let mut c = BigInt::zero();
    loop {
        let candidate = projection.add(&correction.scale(&BigRational::from(c.clone())));
        let ok = m.face(upper).support().iter().all(|&gi| {
            let img = candidate.apply_int(m.generator(gi));
            lower_face.cone_contains(&img)
        });
        if ok {
            return (projection, anchor, c, candidate);
        }
        c += BigInt::one();
        assert!(
            c < BigInt::from(1_000_000),
            "scaling constant search must terminate for a face section"
        );
    }
}

fn default_step(m: &SharpFsMonoid, upper: FaceId, lower: FaceId) -> SectionStep {
    let lower_face = m.face(lower);
    let l = lower_face.supporting_functional().clone();
    // complement: the generator of the upper face with the largest l-value,
    // ties broken by the lowest index
    let (complement, _) = m
        .face(upper)
        .support()
        .iter()
        .map(|&gi| (gi, l.eval_int(m.generator(gi))))
        .max_by(|(i, a), (j, b)| a.cmp(b).then(j.cmp(i)))
        .expect("upper face of a step has generators");
    let w: Vec<BigRational> = m
        .generator(complement)
        .iter()
        .map(|x| BigRational::from(x.clone()))
        .collect();
    let (_, anchor, scale, matrix) = section_step_with_splitting(m, upper, lower, &l, &w);
    SectionStep {
        upper,
        lower,
        functional: l,
        complement: Some(complement),
        anchor,
        scale,
        matrix,
    }
}

/// Saturated descent from the top face to `target`: at each step the
/// lexicographically smallest eligible face one dimension down.
fn descent_chain(m: &SharpFsMonoid, target: FaceId) -> Vec<FaceId> {
    let mut chain = vec![m.top()];
    let mut current = m.top();
    while current != target {
        let next = m
            .faces()
            .filter(|&g| {
                m.face_leq(target, g)
                    && m.face_leq(g, current)
                    && g != current
                    && m.face(g).dim() + 1 == m.face(current).dim()
            })
            .min_by(|a, b| m.face(*a).support().cmp(m.face(*b).support()))
            .expect("face lattice intervals are graded");
        chain.push(next);
        current = next;
    }
    chain
}

pub fn face_section(m: &SharpFsMonoid, target: FaceId) -> Result<FaceSection> {
    if target.index() >= m.face_count() {
        return Err(Error::NotAFace(vec![target.index()]));
    }
    let chain = descent_chain(m, target);
    let mut steps = Vec::new();
    let mut matrix = RatMatrix::identity(m.dim());
    for pair in chain.windows(2) {
        let step = default_step(m, pair[0], pair[1]);
        matrix = step.matrix.mul(&matrix);
        steps.push(step);
    }
    // the zero face forces the zero map regardless of the descent route
    if m.face(target).is_zero() {
        matrix = RatMatrix::zero(m.dim(), m.dim());
    }
    Ok(FaceSection {
        target,
        matrix,
        steps,
    })
}

/// Replays the section postconditions: identity on the face, images inside
/// the target cone.
pub fn verify_section(m: &SharpFsMonoid, section: &FaceSection) -> SectionReport {
    let target = m.face(section.target);
    let mut identity_failures = Vec::new();
    let mut image_failures = Vec::new();
    for &gi in target.support() {
        let img = section.apply_int(m.generator(gi));
        let fixed = img
            .iter()
            .zip(m.generator(gi))
            .all(|(a, b)| a == &BigRational::from(b.clone()));
        if !fixed {
            identity_failures.push((gi, img));
        }
    }
    for gi in 0..m.generators().len() {
        let img = section.apply_int(m.generator(gi));
        if !target.cone_contains(&img) {
            image_failures.push((gi, img));
        }
    }
    SectionReport {
        identity_failures,
        image_failures,
    }
}

/// Does `c − 1` break the step? Used to confirm minimality of the reported
/// scaling constants.
pub fn step_scale_is_minimal(m: &SharpFsMonoid, step: &SectionStep) -> bool {
    if step.scale.is_zero() {
        return true;
    }
    let lower_face = m.face(step.lower);
    let anchor_rat: Vec<BigRational> = step
        .anchor
        .iter()
        .map(|x| BigRational::from(x.clone()))
        .collect();
    let correction = RatMatrix::outer(&anchor_rat, step.functional.coeffs());
    let candidate = step.matrix.sub(&correction); // the step matrix at c−1
    m.face(step.upper).support().iter().any(|&gi| {
        let img = candidate.apply_int(m.generator(gi));
        !lower_face.cone_contains(&img)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{int_vec, rat_from_i64};
    use crate::monoid::free_monoid;

    fn rat_vec(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| rat_from_i64(x, 1)).collect()
    }

    #[test]
    fn quadrant_projects_onto_its_axis() {
        let m = free_monoid(2);
        let axis = m.face_by_support(&[0]).unwrap();
        let s = face_section(&m, axis).unwrap();
        assert_eq!(s.apply_int(&int_vec(&[3, 5])), rat_vec(&[3, 0]));
        assert_eq!(s.scaling_constants(), int_vec(&[0]));
        assert!(verify_section(&m, &s).passed());
    }

    #[test]
    fn octant_composes_two_zero_scale_steps() {
        let m = free_monoid(3);
        let axis = m.face_by_support(&[0]).unwrap();
        let s = face_section(&m, axis).unwrap();
        assert_eq!(s.steps.len(), 2);
        assert_eq!(s.scaling_constants(), int_vec(&[0, 0]));
        assert_eq!(s.apply_int(&int_vec(&[2, 7, 9])), rat_vec(&[2, 0, 0]));
        assert!(verify_section(&m, &s).passed());
    }

    #[test]
    fn explicit_splitting_needs_a_correction() {
        // On cone{(1,0),(−1,1)} with the coordinate splitting (x,y) ↦ (x,0),
        // the raw projection sends (−1,1) outside the ray; one correction by
        // the inner point (1,0) repairs it, giving (x,y) ↦ (x+y, 0).
        let m = SharpFsMonoid::from_i64(2, &[&[1, 0], &[-1, 1]]).unwrap();
        let ray = m.face_by_support(&[0]).unwrap();
        let l = RationalFunctional::from_i64(&[0, 1]);
        let w = rat_vec(&[0, 1]);
        let (_, anchor, scale, matrix) =
            section_step_with_splitting(&m, m.top(), ray, &l, &w);
        assert_eq!(anchor, int_vec(&[1, 0]));
        assert_eq!(scale, BigInt::one());
        assert_eq!(matrix.apply_int(&int_vec(&[-1, 1])), rat_vec(&[0, 0]));
        assert_eq!(matrix.apply_int(&int_vec(&[4, 2])), rat_vec(&[6, 0]));
    }

    #[test]
    fn default_splitting_on_the_wide_cone() {
        // The largest-l complement is (−1,1) itself, so no correction is
        // needed and the final map agrees with the explicit-splitting route.
        let m = SharpFsMonoid::from_i64(2, &[&[1, 0], &[-1, 1]]).unwrap();
        let ray = m.face_by_support(&[0]).unwrap();
        let s = face_section(&m, ray).unwrap();
        assert_eq!(s.scaling_constants(), int_vec(&[0]));
        assert_eq!(s.apply_int(&int_vec(&[4, 2])), rat_vec(&[6, 0]));
        assert!(verify_section(&m, &s).passed());
    }

    #[test]
    fn scale_two_section_and_minimality() {
        // cone{(1,0),(1,1),(−1,1)} onto ray (1,0): the projection along
        // (1,1) sends (−1,1) to (−2,0); two corrections are required.
        let m = SharpFsMonoid::from_i64(2, &[&[1, 0], &[1, 1], &[-1, 1]]).unwrap();
        let ray = m.face_by_support(&[0]).unwrap();
        let s = face_section(&m, ray).unwrap();
        assert_eq!(s.scaling_constants(), int_vec(&[2]));
        assert!(verify_section(&m, &s).passed());
        assert!(step_scale_is_minimal(&m, &s.steps[0]));
    }

    #[test]
    fn section_onto_the_zero_face_is_the_zero_map() {
        let m = free_monoid(2);
        let s = face_section(&m, m.bottom()).unwrap();
        assert_eq!(s.apply_int(&int_vec(&[3, 4])), rat_vec(&[0, 0]));
        assert!(verify_section(&m, &s).passed());
    }

    #[test]
    fn section_onto_the_top_face_is_the_identity() {
        let m = free_monoid(2);
        let s = face_section(&m, m.top()).unwrap();
        assert!(s.steps.is_empty());
        assert_eq!(s.apply_int(&int_vec(&[3, 4])), rat_vec(&[3, 4]));
    }

    #[test]
    fn every_corpus_section_verifies() {
        let monoids = vec![
            free_monoid(1),
            free_monoid(2),
            free_monoid(3),
            SharpFsMonoid::from_i64(2, &[&[1, 0], &[1, 2]]).unwrap(),
            SharpFsMonoid::from_i64(2, &[&[1, 0], &[1, 1], &[-1, 1]]).unwrap(),
            SharpFsMonoid::from_i64(3, &[&[1, 0, 1], &[0, 1, 1], &[-1, 0, 1], &[0, -1, 1]])
                .unwrap(),
        ];
        for m in &monoids {
            for id in m.faces() {
                let s = face_section(m, id).unwrap();
                assert!(verify_section(m, &s).passed());
                for step in &s.steps {
                    assert!(step_scale_is_minimal(m, step));
                }
            }
        }
    }

    #[test]
    fn matrix_is_identity_on_the_face_span() {
        let m = SharpFsMonoid::from_i64(3, &[&[1, 0, 1], &[0, 1, 1], &[-1, 0, 1], &[0, -1, 1]])
            .unwrap();
        for id in m.faces() {
            let s = face_section(&m, id).unwrap();
            for &gi in m.face(id).support() {
                assert_eq!(s.apply_int(m.generator(gi)), {
                    m.generator(gi)
                        .iter()
                        .map(|x| BigRational::from(x.clone()))
                        .collect::<Vec<_>>()
                });
            }
        }
    }
}
