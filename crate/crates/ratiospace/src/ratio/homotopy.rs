//! The contraction of a chart: π sends an interior homomorphism to its
//! normalized ratio tuple, `θ_t(N) = Σ tⁱ·(N_i ∘ p_i)` rebuilds an interior
//! homomorphism from a chart point, and the homotopy
//!
//!   f(N, t) = π(tⁿ·L + (1−t)·θ_t(N))
//!
//! slides every point toward π(L): f(·,1) = π(L), f(·,0) = identity by
//! continuous extension. All evaluations are exact rationals; convergence
//! is measured along t = 2^{−k}.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{rational_pow, RationalFunctional};
use crate::monoid::SharpFsMonoid;
use crate::ratio::chain::FaceChain;
use crate::ratio::chart::{chart_distance, RatioChartPoint};
use crate::retraction::{face_section, FaceSection};

/// A homomorphism `S → ℝ≥0` that vanishes only at 0, i.e. is strictly
/// positive on every generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveHom {
    functional: RationalFunctional,
}

impl PositiveHom {
    pub fn new(m: &SharpFsMonoid, functional: RationalFunctional) -> Result<Self> {
        for (i, g) in m.generators().iter().enumerate() {
            if !functional.eval_int(g).is_positive() {
                return Err(Error::NotInteriorHom(i));
            }
        }
        Ok(PositiveHom { functional })
    }

    pub fn functional(&self) -> &RationalFunctional {
        &self.functional
    }
}

/// Deterministic interior homomorphism with pairwise distinct prime
/// coefficients on the facet normals. The primes start high enough that no
/// positive combination drawn by the samplers can be proportional to it, so
/// homotopy distances to sampled interior points never degenerate to zero.
pub fn reference_interior_hom(m: &SharpFsMonoid) -> Result<PositiveHom> {
    if m.is_trivial() {
        return Err(Error::TrivialMonoid);
    }
    let mut h = RationalFunctional::zero(m.dim());
    let mut p = 17u64;
    for normal in m.facet_normals() {
        h = h.add(&RationalFunctional::from_int(normal).scale(&BigRational::from_integer(p.into())));
        p = next_prime(p);
    }
    PositiveHom::new(m, h)
}

fn next_prime(p: u64) -> u64 {
    let mut q = p + 1;
    loop {
        if (2..).take_while(|d| d * d <= q).all(|d| q % d != 0) {
            return q;
        }
        q += 1;
    }
}

/// π: the chart point `N_i = h / h(a_i)`. With `h` interior all kernels are
/// trivial, so the image lies in the open stratum of every chart.
pub fn pi_map(chain: &FaceChain, h: &PositiveHom) -> RatioChartPoint {
    let functionals = (0..chain.len())
        .map(|i| {
            let value = h.functional().eval_int(chain.anchor(i));
            h.functional().scale(&value.recip())
        })
        .collect();
    RatioChartPoint::new(functionals)
}

/// The sections `p_i` onto each chain face, `p_0 = identity`.
pub fn sections_for_chain(m: &SharpFsMonoid, chain: &FaceChain) -> Result<Vec<FaceSection>> {
    (0..chain.len()).map(|i| face_section(m, chain.face(i))).collect()
}

fn check_sections(chain: &FaceChain, sections: &[FaceSection]) -> Result<()> {
    if sections.len() != chain.len() {
        return Err(Error::SectionMismatch(sections.len()));
    }
    for (i, s) in sections.iter().enumerate() {
        if s.target != chain.face(i) {
            return Err(Error::SectionMismatch(i));
        }
    }
    Ok(())
}

/// `θ_t(N) = Σ_{i<n} tⁱ·(N_i ∘ p_i)`, an interior homomorphism for every
/// valid chart point and t > 0.
pub fn theta(
    m: &SharpFsMonoid,
    chain: &FaceChain,
    sections: &[FaceSection],
    point: &RatioChartPoint,
    t: &BigRational,
) -> Result<RationalFunctional> {
    check_sections(chain, sections)?;
    let mut total = RationalFunctional::zero(m.dim());
    for i in 0..chain.len() {
        let composed = point.functional(i).compose(&sections[i].matrix);
        total = total.add(&composed.scale(&rational_pow(t, i as i64)));
    }
    Ok(total)
}

/// The representative of `ell` normalized like a level-0 chart functional,
/// `L(a₀) = 1`. Blending with this representative makes the homotopy
/// independent of the scaling of the reference homomorphism, and the
/// homotopy distances decay linearly in t instead of being throttled by
/// `L(a₀)` early on.
fn normalized_reference(chain: &FaceChain, ell: &PositiveHom) -> RationalFunctional {
    let value = ell.functional().eval_int(chain.anchor(0));
    ell.functional().scale(&value.recip())
}

/// `f(N, t) = π(tⁿL + (1−t)θ_t(N))` for t ∈ (0,1]; the input point itself
/// at t = 0. `L` enters through its representative with `L(a₀) = 1`.
pub fn homotopy(
    m: &SharpFsMonoid,
    chain: &FaceChain,
    sections: &[FaceSection],
    ell: &PositiveHom,
    point: &RatioChartPoint,
    t: &BigRational,
) -> Result<RatioChartPoint> {
    if t.is_zero() {
        return Ok(point.clone());
    }
    let n = chain.len() as i64;
    let th = theta(m, chain, sections, point, t)?;
    let one = BigRational::one();
    let blend = normalized_reference(chain, ell)
        .scale(&rational_pow(t, n))
        .add(&th.scale(&(&one - t)));
    let h = PositiveHom::new(m, blend)?;
    Ok(pi_map(chain, &h))
}

/// The level-i coefficient `b_i(t) = (1−t)·Σ_{k≤i} t^{k−i}·N_k(a_i)`; always
/// ≥ 1−t because the k = i term is exactly 1.
pub fn level_bounds(
    chain: &FaceChain,
    point: &RatioChartPoint,
    t: &BigRational,
) -> Vec<BigRational> {
    let one = BigRational::one();
    (0..chain.len())
        .map(|i| {
            let sum: BigRational = (0..=i)
                .map(|k| {
                    rational_pow(t, k as i64 - i as i64) * point.functional(k).eval_int(chain.anchor(i))
                })
                .sum();
            (&one - t) * sum
        })
        .collect()
}

/// Exact per-level decomposition of the blended homomorphism: on the face at
/// level i,
///
///   tⁿL + (1−t)θ_t(N) = tⁱ·(b_i(t)·N_i + E_i(t))
///
/// with `E_i(t) = t^{n−i}·L + (1−t)·Σ_{k>i} t^{k−i}·N_k∘p_k`. Checked on the
/// generators of each level's face.
pub fn level_decomposition_holds(
    m: &SharpFsMonoid,
    chain: &FaceChain,
    sections: &[FaceSection],
    ell: &PositiveHom,
    point: &RatioChartPoint,
    t: &BigRational,
) -> Result<bool> {
    check_sections(chain, sections)?;
    let n = chain.len();
    let one = BigRational::one();
    let th = theta(m, chain, sections, point, t)?;
    let reference = normalized_reference(chain, ell);
    let blend = reference
        .scale(&rational_pow(t, n as i64))
        .add(&th.scale(&(&one - t)));
    let bounds = level_bounds(chain, point, t);
    for i in 0..n {
        let mut extra = reference.scale(&rational_pow(t, (n - i) as i64));
        for k in (i + 1)..n {
            let composed = point.functional(k).compose(&sections[k].matrix);
            extra = extra.add(
                &composed.scale(&((&one - t) * rational_pow(t, k as i64 - i as i64))),
            );
        }
        let ti = rational_pow(t, i as i64);
        for &gi in m.face(chain.face(i)).support() {
            let lhs = blend.eval_int(m.generator(gi));
            let rhs = &ti
                * (&bounds[i] * point.functional(i).eval_int(m.generator(gi))
                    + extra.eval_int(m.generator(gi)));
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Debug, Clone)]
pub struct ConvergenceReport {
    /// d_k = dist(f(p, 2^{−k}), p) for k = 1..=max_k.
    pub distances: Vec<BigRational>,
    /// f(p, 1) coincides with π(L) (distance zero in the chart).
    pub endpoint_one_exact: bool,
    /// f(p, 0) returns p itself.
    pub endpoint_zero_exact: bool,
    /// d_last is 100× below the peak sampled distance (the peak equals d_1
    /// for generic points), or the homotopy is exactly constant.
    pub contraction_ok: bool,
    /// d_k ≤ d_{k−1} from this index on (1-based k).
    pub monotone_from: usize,
    pub monotone_ok: bool,
    /// b_i(t) ≥ 1−t at every sampled level and t.
    pub lower_bound_ok: bool,
    /// The per-level decomposition identity holds at every sampled t.
    pub decomposition_ok: bool,
}

impl ConvergenceReport {
    pub fn passed(&self) -> bool {
        self.endpoint_one_exact
            && self.endpoint_zero_exact
            && self.contraction_ok
            && self.monotone_ok
            && self.lower_bound_ok
            && self.decomposition_ok
    }
}

pub fn convergence_report(
    m: &SharpFsMonoid,
    chain: &FaceChain,
    sections: &[FaceSection],
    ell: &PositiveHom,
    point: &RatioChartPoint,
    max_k: usize,
) -> Result<ConvergenceReport> {
    check_sections(chain, sections)?;
    let one = BigRational::one();
    let half = BigRational::new(1.into(), 2.into());
    let monotone_from = 4usize.min(max_k.max(1));

    let mut distances = Vec::with_capacity(max_k);
    let mut lower_bound_ok = true;
    let mut decomposition_ok = true;
    let mut t = one.clone();
    for _ in 1..=max_k {
        t = &t * &half;
        let image = homotopy(m, chain, sections, ell, point, &t)?;
        distances.push(chart_distance(m, chain, &image, point));
        let bound = &one - &t;
        if level_bounds(chain, point, &t).iter().any(|b| b < &bound) {
            lower_bound_ok = false;
        }
        if !level_decomposition_holds(m, chain, sections, ell, point, &t)? {
            decomposition_ok = false;
        }
    }

    let at_one = homotopy(m, chain, sections, ell, point, &one)?;
    let target = pi_map(chain, ell);
    let endpoint_one_exact = chart_distance(m, chain, &at_one, &target).is_zero();
    let at_zero = homotopy(m, chain, sections, ell, point, &BigRational::zero())?;
    let endpoint_zero_exact = chart_distance(m, chain, &at_zero, point).is_zero();

    // Contraction is measured against the peak sampled distance. For generic
    // points the peak is d_1, but t ↦ d(t) can pass through an accidental
    // zero near an early sample (each level contributes one effective
    // coordinate, so a single root crossing collapses d_1 without meaning
    // anything about convergence); the peak is immune to that.
    let contraction_ok = match distances.iter().max() {
        None => true,
        Some(peak) if peak.is_zero() => true, // the point is the fixed center
        Some(peak) => {
            *distances.last().unwrap() < peak / BigRational::from_integer(100.into())
        }
    };
    let monotone_ok = distances
        .windows(2)
        .enumerate()
        .all(|(idx, w)| idx + 2 < monotone_from || w[1] <= w[0]);

    Ok(ConvergenceReport {
        distances,
        endpoint_one_exact,
        endpoint_zero_exact,
        contraction_ok,
        monotone_from,
        monotone_ok,
        lower_bound_ok,
        decomposition_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{rat_from_i64, RationalFunctional};
    use crate::monoid::free_monoid;
    use crate::ratio::chart::is_valid_chart_point;

    fn quadrant_chain() -> (SharpFsMonoid, FaceChain) {
        let m = free_monoid(2);
        let r0 = m.face_by_support(&[0]).unwrap();
        let chain = FaceChain::new(&m, vec![m.top(), r0, m.bottom()]).unwrap();
        (m, chain)
    }

    #[test]
    fn pi_of_a_weighted_functional() {
        let (m, chain) = quadrant_chain();
        let h = PositiveHom::new(&m, RationalFunctional::from_i64(&[2, 3])).unwrap();
        let p = pi_map(&chain, &h);
        assert_eq!(p.functional(0).coeffs(), &[rat_from_i64(2, 5), rat_from_i64(3, 5)]);
        assert_eq!(p.functional(1).coeffs(), &[rat_from_i64(1, 1), rat_from_i64(3, 2)]);
        // N_1(a_1) = N_1(e_1) = 1, and only values on the ray matter
        assert!(is_valid_chart_point(&m, &chain, &p));
    }

    #[test]
    fn pi_roundtrip_when_normalized_at_the_top_anchor() {
        let (m, chain) = quadrant_chain();
        let h = RationalFunctional::new(vec![rat_from_i64(2, 5), rat_from_i64(3, 5)]);
        let hom = PositiveHom::new(&m, h.clone()).unwrap();
        assert!(hom.functional().eval_int(chain.anchor(0)).is_one());
        let p = pi_map(&chain, &hom);
        assert_eq!(p.functional(0), &h);
    }

    #[test]
    fn interior_homs_reject_boundary_functionals() {
        let m = free_monoid(2);
        assert_eq!(
            PositiveHom::new(&m, RationalFunctional::from_i64(&[1, 0])).unwrap_err(),
            Error::NotInteriorHom(1)
        );
    }

    #[test]
    fn theta_on_a_single_level_chain_is_the_identity_on_points() {
        let m = free_monoid(2);
        let chain = FaceChain::new(&m, vec![m.top(), m.bottom()]).unwrap();
        let sections = sections_for_chain(&m, &chain).unwrap();
        let h = PositiveHom::new(&m, RationalFunctional::from_i64(&[1, 1])).unwrap();
        let p = pi_map(&chain, &h);
        for t in [rat_from_i64(1, 2), rat_from_i64(3, 4), rat_from_i64(1, 1)] {
            let th = theta(&m, &chain, &sections, &p, &t).unwrap();
            assert_eq!(&th, p.functional(0));
        }
    }

    #[test]
    fn theta_is_interior_even_at_boundary_points() {
        let (m, chain) = quadrant_chain();
        let sections = sections_for_chain(&m, &chain).unwrap();
        // boundary point: N_0 = (0,1) kills the ray e1, N_1 = x
        let p = RatioChartPoint::new(vec![
            RationalFunctional::from_i64(&[0, 1]),
            RationalFunctional::from_i64(&[1, 0]),
        ]);
        let t = rat_from_i64(1, 2);
        let th = theta(&m, &chain, &sections, &p, &t).unwrap();
        // θ_t at e1 = t·N_1(p_1(e1)) = t
        assert_eq!(th.eval_int(&crate::exactlin::int_vec(&[1, 0])), t);
        assert!(th.eval_int(&crate::exactlin::int_vec(&[0, 1])).is_positive());
    }

    #[test]
    fn mismatched_sections_are_rejected() {
        let (m, chain) = quadrant_chain();
        let mut sections = sections_for_chain(&m, &chain).unwrap();
        sections.reverse();
        let h = PositiveHom::new(&m, RationalFunctional::from_i64(&[1, 1])).unwrap();
        let p = pi_map(&chain, &h);
        assert!(matches!(
            theta(&m, &chain, &sections, &p, &BigRational::one()),
            Err(Error::SectionMismatch(_))
        ));
    }

    #[test]
    fn homotopy_endpoints_are_exact() {
        let (m, chain) = quadrant_chain();
        let sections = sections_for_chain(&m, &chain).unwrap();
        let ell = PositiveHom::new(&m, RationalFunctional::from_i64(&[1, 1])).unwrap();
        let p = RatioChartPoint::new(vec![
            RationalFunctional::from_i64(&[0, 1]),
            RationalFunctional::from_i64(&[1, 0]),
        ]);
        let at_one = homotopy(&m, &chain, &sections, &ell, &p, &BigRational::one()).unwrap();
        let target = pi_map(&chain, &ell);
        assert_eq!(chart_distance(&m, &chain, &at_one, &target), BigRational::zero());
        let at_zero = homotopy(&m, &chain, &sections, &ell, &p, &BigRational::zero()).unwrap();
        assert_eq!(chart_distance(&m, &chain, &at_zero, &p), BigRational::zero());
    }

    #[test]
    fn boundary_distance_shrinks_between_sampled_times() {
        // For the boundary point N_0 = (0,1) with L = x+y (entering as the
        // normalized representative (1/2, 1/2)) the blend at the top anchor
        // is exactly 1 and the distance to p at time t is t(2−t)/2 at the e1
        // coordinate of level 0: d(1/2) = 3/8, d(3/4) = 15/32.
        let (m, chain) = quadrant_chain();
        let sections = sections_for_chain(&m, &chain).unwrap();
        let ell = PositiveHom::new(&m, RationalFunctional::from_i64(&[1, 1])).unwrap();
        let p = RatioChartPoint::new(vec![
            RationalFunctional::from_i64(&[0, 1]),
            RationalFunctional::from_i64(&[1, 0]),
        ]);
        let d = |t: BigRational| {
            let img = homotopy(&m, &chain, &sections, &ell, &p, &t).unwrap();
            chart_distance(&m, &chain, &img, &p)
        };
        assert_eq!(d(rat_from_i64(1, 2)), rat_from_i64(3, 8));
        assert_eq!(d(rat_from_i64(3, 4)), rat_from_i64(15, 32));
        assert!(d(rat_from_i64(1, 2)) < d(rat_from_i64(3, 4)));
        // scale invariance: 10·L produces the identical path
        let scaled = PositiveHom::new(&m, RationalFunctional::from_i64(&[10, 10])).unwrap();
        let t = rat_from_i64(1, 2);
        let a = homotopy(&m, &chain, &sections, &ell, &p, &t).unwrap();
        let b = homotopy(&m, &chain, &sections, &scaled, &p, &t).unwrap();
        assert_eq!(chart_distance(&m, &chain, &a, &b), BigRational::zero());
    }

    #[test]
    fn level_bounds_dominate_one_minus_t() {
        let (_m, chain) = quadrant_chain();
        let p = RatioChartPoint::new(vec![
            RationalFunctional::from_i64(&[0, 1]),
            RationalFunctional::from_i64(&[1, 0]),
        ]);
        for t in [rat_from_i64(1, 2), rat_from_i64(1, 4), rat_from_i64(7, 8)] {
            let bound = BigRational::one() - &t;
            for b in level_bounds(&chain, &p, &t) {
                assert!(b >= bound);
            }
        }
    }

    #[test]
    fn convergence_report_passes_for_interior_and_boundary_points() {
        let (m, chain) = quadrant_chain();
        let sections = sections_for_chain(&m, &chain).unwrap();
        let ell = reference_interior_hom(&m).unwrap();
        let interior = pi_map(
            &chain,
            &PositiveHom::new(&m, RationalFunctional::from_i64(&[2, 3])).unwrap(),
        );
        let boundary = RatioChartPoint::new(vec![
            RationalFunctional::from_i64(&[0, 1]),
            RationalFunctional::from_i64(&[1, 0]),
        ]);
        for p in [interior, boundary] {
            let report = convergence_report(&m, &chain, &sections, &ell, &p, 12).unwrap();
            assert!(report.passed(), "{:?}", report.distances);
            assert_eq!(report.distances.len(), 12);
        }
    }

    #[test]
    fn reference_hom_assigns_consecutive_primes_to_the_facet_normals() {
        let m = free_monoid(3);
        let ell = reference_interior_hom(&m).unwrap();
        // facet normals are sorted lexicographically: e3*, e2*, e1*
        let mut values: Vec<BigRational> = m
            .generators()
            .iter()
            .map(|g| ell.functional().eval_int(g))
            .collect();
        values.sort();
        assert_eq!(values, vec![rat_from_i64(17, 1), rat_from_i64(19, 1), rat_from_i64(23, 1)]);
        assert_eq!(next_prime(17), 19);
        assert_eq!(next_prime(23), 29);
    }
}
