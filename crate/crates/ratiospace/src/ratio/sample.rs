//! Deterministic sampling of valid chart points, stratum by stratum. A
//! stratum of the chart at a chain of length n is the set of points whose
//! iterated vanishing chain hits a fixed subset of {1, …, n} containing n.
//! Points are built blockwise: on each block the functional is the sum of
//! the facet normals of the block's face that vanish on the next block,
//! plus a random positive perturbation of the same normals — this pins the
//! vanishing locus exactly. Every sample is validated before it is returned.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactlin::{dot, RationalFunctional};
use crate::monoid::SharpFsMonoid;
use crate::ratio::chain::FaceChain;
use crate::ratio::chart::{is_valid_chart_point, kernel_positions, RatioChartPoint};
use crate::ratio::homotopy::PositiveHom;

/// Splitmix-style fold of a root seed, a context tag, and a sample index
/// into an independent stream seed.
pub fn derive_seed(root: u64, tag: &str, index: u64) -> u64 {
    let mut state = splitmix(root ^ 0x9e37_79b9_7f4a_7c15);
    for b in tag.bytes() {
        state = splitmix(state ^ u64::from(b));
    }
    splitmix(state ^ index)
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stratum {
    positions: Vec<usize>,
}

impl Stratum {
    pub fn new(chain: &FaceChain, positions: Vec<usize>) -> Result<Self> {
        let n = chain.len();
        let ok = positions.last() == Some(&n)
            && positions.windows(2).all(|w| w[0] < w[1])
            && positions.iter().all(|&p| p >= 1 && p <= n);
        if !ok {
            return Err(Error::InvalidParameter(format!(
                "stratum positions {positions:?} are not an increasing subset of 1..={n} ending at {n}"
            )));
        }
        Ok(Stratum { positions })
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    /// The open stratum: vanishing chain S ⊋ {0} with no intermediate face.
    pub fn is_interior(&self) -> bool {
        self.positions.len() == 1
    }

    pub fn label(&self) -> String {
        let inner: Vec<String> = self.positions.iter().map(|p| p.to_string()).collect();
        format!("{{{}}}", inner.join(","))
    }
}

/// All 2^{n−1} strata of a chain of length n, ordered from the interior
/// stratum upward by the subset bitmask on {1, …, n−1}.
pub fn enumerate_strata(chain: &FaceChain) -> Vec<Stratum> {
    let n = chain.len();
    let free = n.saturating_sub(1);
    (0..(1u64 << free))
        .map(|mask| {
            let mut positions: Vec<usize> =
                (1..n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            positions.push(n);
            Stratum { positions }
        })
        .collect()
}

/// One chart point of the given stratum, with block coefficients drawn from
/// `perturb` (1 + perturbation per facet normal; the zero closure gives the
/// deterministic base point).
pub(crate) fn stratum_point(
    m: &SharpFsMonoid,
    chain: &FaceChain,
    stratum: &Stratum,
    perturb: &mut dyn FnMut() -> BigRational,
) -> Result<RatioChartPoint> {
    let mut boundaries = vec![0usize];
    boundaries.extend_from_slice(stratum.positions());
    let mut functionals: Vec<Option<RationalFunctional>> = vec![None; chain.len()];
    for pair in boundaries.windows(2) {
        let (start, end) = (pair[0], pair[1]);
        let block_face = m.face(chain.face(start));
        let next_support: Vec<usize> = m.face(chain.face(end)).support().to_vec();
        let mut nu = RationalFunctional::zero(m.dim());
        let mut used = 0usize;
        for ray in block_face.dual_rays() {
            let vanishes = next_support
                .iter()
                .all(|&gi| dot(ray, m.generator(gi)) == BigInt::from(0));
            if vanishes {
                let c = BigRational::from_integer(1.into()) + perturb();
                nu = nu.add(&RationalFunctional::from_int(ray).scale(&c));
                used += 1;
            }
        }
        if used == 0 {
            return Err(Error::EmptyStratum(0));
        }
        for i in start..end {
            let value = nu.eval_int(chain.anchor(i));
            if !value.is_positive() {
                return Err(Error::EmptyStratum(0));
            }
            functionals[i] = Some(nu.scale(&value.recip()));
        }
    }
    Ok(RatioChartPoint::new(
        functionals.into_iter().map(|f| f.expect("blocks cover all levels")).collect(),
    ))
}

const MAX_ATTEMPTS: usize = 32;

/// `count` validated points of the stratum; deterministic in `seed`.
pub fn sample_chart_points(
    m: &SharpFsMonoid,
    chain: &FaceChain,
    stratum: &Stratum,
    count: usize,
    seed: u64,
) -> Result<Vec<RatioChartPoint>> {
    let tag = format!(
        "stratum-sample:{:?}:{}",
        chain.faces().iter().map(|f| f.index()).collect::<Vec<_>>(),
        stratum.label()
    );
    let mut out = Vec::with_capacity(count);
    for idx in 0..count {
        let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, &tag, idx as u64));
        let mut found = None;
        for _ in 0..MAX_ATTEMPTS {
            let mut draw = || random_positive(&mut rng);
            let candidate = stratum_point(m, chain, stratum, &mut draw)?;
            if is_valid_chart_point(m, chain, &candidate)
                && kernel_positions(m, chain, &candidate)
                    .map(|p| p == stratum.positions())
                    .unwrap_or(false)
            {
                found = Some(candidate);
                break;
            }
        }
        out.push(found.ok_or(Error::EmptyStratum(MAX_ATTEMPTS))?);
    }
    Ok(out)
}

/// Small positive rationals n/d with n ∈ 1..=9, d ∈ 1..=4. Together with
/// the +1 base this keeps every block coefficient's reduced numerator below
/// 17, so no sample can be proportional to the prime-weighted reference
/// homomorphism of `reference_interior_hom`.
fn random_positive(rng: &mut ChaCha8Rng) -> BigRational {
    let n: i64 = rng.gen_range(1..=9);
    let d: i64 = rng.gen_range(1..=4);
    BigRational::new(n.into(), d.into())
}

/// Seeded interior homomorphisms: positive random combinations of the facet
/// normals, normalized to value 1 at the anchor `a₀` of the chain.
pub fn sample_interior_homs(
    m: &SharpFsMonoid,
    chain: &FaceChain,
    count: usize,
    seed: u64,
) -> Result<Vec<PositiveHom>> {
    if m.is_trivial() {
        return Err(Error::TrivialMonoid);
    }
    let tag = "interior-hom";
    let mut out = Vec::with_capacity(count);
    for idx in 0..count {
        let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, tag, idx as u64));
        let mut h = RationalFunctional::zero(m.dim());
        for normal in m.facet_normals() {
            let c = BigRational::from_integer(1.into()) + random_positive(&mut rng);
            h = h.add(&RationalFunctional::from_int(normal).scale(&c));
        }
        let value = h.eval_int(chain.anchor(0));
        out.push(PositiveHom::new(m, h.scale(&value.recip()))?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::free_monoid;
    use crate::ratio::chain::maximal_chains;
    use crate::ratio::chart::canonicalize;
    use num_traits::One;

    #[test]
    fn strata_enumeration_counts() {
        let m = free_monoid(3);
        for chain in maximal_chains(&m).unwrap() {
            let strata = enumerate_strata(&chain);
            assert_eq!(strata.len(), 4); // n = 3 → 2^{n−1}
            assert!(strata[0].is_interior());
            for s in &strata {
                assert_eq!(*s.positions().last().unwrap(), 3);
            }
        }
        let total: usize = crate::ratio::chain::enumerate_chains(&m)
            .unwrap()
            .iter()
            .map(|c| enumerate_strata(c).len())
            .sum();
        // 13 chains of ℕ³: one of length 1, six of length 2, six of length 3
        assert_eq!(total, 1 + 6 * 2 + 6 * 4);
    }

    #[test]
    fn strata_total_for_dimension_four() {
        let m = free_monoid(4);
        let total: usize = crate::ratio::chain::enumerate_chains(&m)
            .unwrap()
            .iter()
            .map(|c| enumerate_strata(c).len())
            .sum();
        assert_eq!(total, 365);
    }

    #[test]
    fn interior_samples_are_valid_and_distinct() {
        let m = free_monoid(2);
        let chain = FaceChain::new(&m, vec![m.top(), m.bottom()]).unwrap();
        let stratum = &enumerate_strata(&chain)[0];
        let pts = sample_chart_points(&m, &chain, stratum, 5, 0).unwrap();
        assert_eq!(pts.len(), 5);
        for (i, p) in pts.iter().enumerate() {
            assert!(is_valid_chart_point(&m, &chain, p));
            for q in &pts[i + 1..] {
                assert_ne!(p, q);
            }
        }
    }

    #[test]
    fn boundary_samples_hit_their_stratum_exactly() {
        let m = free_monoid(2);
        let chains = maximal_chains(&m).unwrap();
        let chain = &chains[0];
        for stratum in enumerate_strata(chain) {
            let pts = sample_chart_points(&m, chain, &stratum, 4, 7).unwrap();
            for p in pts {
                assert_eq!(
                    kernel_positions(&m, chain, &p).unwrap(),
                    stratum.positions()
                );
                let c = canonicalize(&m, chain, &p).unwrap();
                assert_eq!(c.blocks(), stratum.positions().len());
            }
        }
    }

    #[test]
    fn deepest_stratum_of_the_octant_has_three_blocks() {
        let m = free_monoid(3);
        let chain = &maximal_chains(&m).unwrap()[0];
        let deepest = enumerate_strata(chain).into_iter().last().unwrap();
        assert_eq!(deepest.positions(), &[1, 2, 3]);
        let pts = sample_chart_points(&m, chain, &deepest, 3, 0).unwrap();
        for p in pts {
            let c = canonicalize(&m, chain, &p).unwrap();
            assert_eq!(c.blocks(), 3);
            assert_eq!(c.faces().len(), 4);
        }
    }

    #[test]
    fn sampling_is_deterministic_in_the_seed() {
        let m = free_monoid(2);
        let chain = FaceChain::new(&m, vec![m.top(), m.bottom()]).unwrap();
        let stratum = &enumerate_strata(&chain)[0];
        let a = sample_chart_points(&m, &chain, stratum, 3, 42).unwrap();
        let b = sample_chart_points(&m, &chain, stratum, 3, 42).unwrap();
        let c = sample_chart_points(&m, &chain, stratum, 3, 43).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn interior_homs_are_normalized_at_the_top_anchor() {
        let m = free_monoid(2);
        let chain = FaceChain::new(&m, vec![m.top(), m.bottom()]).unwrap();
        let homs = sample_interior_homs(&m, &chain, 10, 0).unwrap();
        assert_eq!(homs.len(), 10);
        for h in homs {
            assert!(h
                .functional()
                .eval_int(chain.anchor(0))
                .is_one());
        }
    }

    #[test]
    fn seed_derivation_separates_tags_and_indices() {
        let a = derive_seed(0, "alpha", 0);
        let b = derive_seed(0, "alpha", 1);
        let c = derive_seed(0, "beta", 0);
        let d = derive_seed(1, "alpha", 0);
        assert!(a != b && a != c && a != d && b != c);
    }
}
