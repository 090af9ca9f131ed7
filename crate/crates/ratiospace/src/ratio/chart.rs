//! Chart points of the space of ratios. A point of the chart at a chain
//! `Φ = (S⁽⁰⁾ ⊋ … ⊋ S⁽ⁿ⁾)` is a tuple of functionals `N_0, …, N_{n−1}` with
//!
//!   (i)   N_i(a_i) = 1,
//!   (ii)  the vanishing locus of N_i inside S⁽ⁱ⁾ is a deeper chain face,
//!   (iii) N_i restricted to S⁽ʲ⁾ equals N_i(a_j)·N_j for i < j < n.
//!
//! Functionals are stored as full-length coefficient vectors; only their
//! values on the corresponding face matter, so equality and distance are
//! always measured on generator values.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactlin::RationalFunctional;
use crate::monoid::{FaceId, SharpFsMonoid};
use crate::ratio::chain::FaceChain;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioChartPoint {
    functionals: Vec<RationalFunctional>,
}

impl RatioChartPoint {
    pub fn new(functionals: Vec<RationalFunctional>) -> Self {
        RatioChartPoint { functionals }
    }

    pub fn functionals(&self) -> &[RationalFunctional] {
        &self.functionals
    }

    pub fn functional(&self, i: usize) -> &RationalFunctional {
        &self.functionals[i]
    }

    pub fn len(&self) -> usize {
        self.functionals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functionals.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChartViolation {
    /// N_level(a_level) ≠ 1.
    AnchorNormalization { level: usize },
    /// N_level is negative on a generator of its face.
    NegativeOnFace { level: usize, generator: usize },
    /// The vanishing locus of N_level is not a deeper face of the chain.
    KernelNotInChain { level: usize, support: Vec<usize> },
    /// N_i and N_j disagree on a generator of level j.
    Incompatible {
        level_i: usize,
        level_j: usize,
        generator: usize,
    },
}

/// Generator support of the vanishing locus of `n` inside the face `f`.
/// Only meaningful once `n` is known to be nonnegative on `f`.
fn kernel_support(m: &SharpFsMonoid, f: FaceId, n: &RationalFunctional) -> Vec<usize> {
    m.face(f)
        .support()
        .iter()
        .copied()
        .filter(|&gi| n.eval_int(m.generator(gi)).is_zero())
        .collect()
}

/// The chain position whose face has exactly this support, if any.
fn chain_position_of_support(
    m: &SharpFsMonoid,
    chain: &FaceChain,
    support: &[usize],
) -> Option<usize> {
    chain
        .faces()
        .iter()
        .position(|&f| m.face(f).support() == support)
}

pub fn validate_chart_point(
    m: &SharpFsMonoid,
    chain: &FaceChain,
    point: &RatioChartPoint,
) -> Vec<ChartViolation> {
    let n = chain.len();
    let mut violations = Vec::new();
    if point.len() != n {
        // level-count mismatch reads as a normalization failure at the end
        violations.push(ChartViolation::AnchorNormalization {
            level: point.len().min(n),
        });
        return violations;
    }
    for i in 0..n {
        let ni = point.functional(i);
        if !ni.eval_int(chain.anchor(i)).is_one() {
            violations.push(ChartViolation::AnchorNormalization { level: i });
        }
        let mut nonnegative = true;
        for &gi in m.face(chain.face(i)).support() {
            if ni.eval_int(m.generator(gi)).is_negative() {
                violations.push(ChartViolation::NegativeOnFace {
                    level: i,
                    generator: gi,
                });
                nonnegative = false;
            }
        }
        if nonnegative {
            let support = kernel_support(m, chain.face(i), ni);
            match chain_position_of_support(m, chain, &support) {
                Some(j) if j > i => {}
                _ => violations.push(ChartViolation::KernelNotInChain { level: i, support }),
            }
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let scale = point.functional(i).eval_int(chain.anchor(j));
            for &gi in m.face(chain.face(j)).support() {
                let lhs = point.functional(i).eval_int(m.generator(gi));
                let rhs = &scale * point.functional(j).eval_int(m.generator(gi));
                if lhs != rhs {
                    violations.push(ChartViolation::Incompatible {
                        level_i: i,
                        level_j: j,
                        generator: gi,
                    });
                }
            }
        }
    }
    violations
}

pub fn is_valid_chart_point(
    m: &SharpFsMonoid,
    chain: &FaceChain,
    point: &RatioChartPoint,
) -> bool {
    validate_chart_point(m, chain, point).is_empty()
}

/// The stratum of a valid chart point: the chain positions reached by
/// iterating vanishing loci from the top. Always ends at the zero face.
pub fn kernel_positions(
    m: &SharpFsMonoid,
    chain: &FaceChain,
    point: &RatioChartPoint,
) -> Result<Vec<usize>> {
    let n = chain.len();
    let mut positions = Vec::new();
    let mut k = 0usize;
    while k < n {
        let support = kernel_support(m, chain.face(k), point.functional(k));
        let j = chain_position_of_support(m, chain, &support)
            .filter(|&j| j > k)
            .ok_or(Error::NotInChart(support))?;
        positions.push(j);
        k = j;
    }
    Ok(positions)
}

/// Chart-independent form of a point: the chain of vanishing-locus faces
/// `T_0 ⊋ T_1 ⊋ … ⊋ T_r = {0}` together with one functional per block,
/// normalized to value 1 at the inner point of its face.
#[derive(Debug, Clone)]
pub struct RatioPoint {
    faces: Vec<FaceId>,
    functionals: Vec<RationalFunctional>,
}

impl RatioPoint {
    pub fn faces(&self) -> &[FaceId] {
        &self.faces
    }

    pub fn functionals(&self) -> &[RationalFunctional] {
        &self.functionals
    }

    pub fn blocks(&self) -> usize {
        self.functionals.len()
    }
}

pub fn canonicalize(
    m: &SharpFsMonoid,
    chain: &FaceChain,
    point: &RatioChartPoint,
) -> Result<RatioPoint> {
    let positions = kernel_positions(m, chain, point)?;
    let mut faces = vec![chain.face(0)];
    let mut functionals = Vec::new();
    let mut k = 0usize;
    for &j in &positions {
        let face = chain.face(k);
        let inner = m.inner_point(face)?;
        let value = point.functional(k).eval_int(&inner);
        // the inner point is outside the vanishing locus, so value > 0
        functionals.push(point.functional(k).scale(&value.recip()));
        faces.push(chain.face(j));
        k = j;
    }
    Ok(RatioPoint { faces, functionals })
}

/// Two canonical points are equal when their face chains agree and the
/// block functionals agree on the generators of each block's face.
pub fn points_equal(m: &SharpFsMonoid, p: &RatioPoint, q: &RatioPoint) -> bool {
    if p.faces != q.faces {
        return false;
    }
    p.functionals
        .iter()
        .zip(&q.functionals)
        .zip(&p.faces)
        .all(|((a, b), &f)| {
            m.face(f)
                .support()
                .iter()
                .all(|&gi| a.eval_int(m.generator(gi)) == b.eval_int(m.generator(gi)))
        })
}

/// A canonical point lies in the chart of `chain` exactly when every face
/// of its vanishing chain occurs in `chain`.
pub fn in_chart(point: &RatioPoint, chain: &FaceChain) -> bool {
    point.faces.iter().all(|&f| chain.contains_face(f))
}

/// Coordinates of a canonical point in the chart of `chain`. Level `i`
/// reads off the deepest block functional whose face still contains
/// `S⁽ⁱ⁾`, rescaled to value 1 at the anchor `a_i`.
pub fn chart_coords(
    m: &SharpFsMonoid,
    point: &RatioPoint,
    chain: &FaceChain,
) -> Result<RatioChartPoint> {
    if !in_chart(point, chain) {
        let missing = point
            .faces
            .iter()
            .filter(|f| !chain.contains_face(**f))
            .map(|f| f.index())
            .collect();
        return Err(Error::NotInChart(missing));
    }
    let mut functionals = Vec::with_capacity(chain.len());
    for i in 0..chain.len() {
        let level = chain.face(i);
        let block = (0..point.blocks())
            .rev()
            .find(|&mm| m.face_leq(level, point.faces[mm]))
            .expect("the top block face contains every chain face");
        let nu = &point.functionals[block];
        let value = nu.eval_int(chain.anchor(i));
        if !value.is_positive() {
            return Err(Error::NotInChart(vec![level.index()]));
        }
        functionals.push(nu.scale(&value.recip()));
    }
    Ok(RatioChartPoint::new(functionals))
}

/// Chart metric: the largest deviation of functional values over all levels
/// and all generators of the level's face.
pub fn chart_distance(
    m: &SharpFsMonoid,
    chain: &FaceChain,
    p: &RatioChartPoint,
    q: &RatioChartPoint,
) -> BigRational {
    let mut best = BigRational::zero();
    for i in 0..chain.len() {
        for &gi in m.face(chain.face(i)).support() {
            let diff = (p.functional(i).eval_int(m.generator(gi))
                - q.functional(i).eval_int(m.generator(gi)))
            .abs();
            if diff > best {
                best = diff;
            }
        }
    }
    best
}
