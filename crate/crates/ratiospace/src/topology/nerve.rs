//! Nerve of the chart cover of the space of ratios. Vertices are the
//! maximal chains; a set of vertices spans a simplex when the corresponding
//! charts share a point. Every chart contains the interior points, so the
//! nerve is always a full simplex — but this is proved per instance by
//! constructing witness points, never assumed.

use num_rational::BigRational;
use num_traits::One;

use crate::error::Result;
use crate::exactlin::RationalFunctional;
use crate::monoid::{FaceId, SharpFsMonoid};
use crate::ratio::{
    canonicalize, enumerate_strata, in_chart, maximal_chains, pi_map, stratum_point, FaceChain,
    PositiveHom, RatioPoint,
};
use crate::topology::complex::SimplicialComplex;

#[derive(Debug, Clone)]
pub struct EdgeWitness {
    pub chain_a: usize,
    pub chain_b: usize,
    /// Faces common to both chains; the witness lives on exactly these.
    pub shared_faces: Vec<FaceId>,
    pub point: RatioPoint,
    pub verified: bool,
}

#[derive(Debug, Clone)]
pub struct NerveReport {
    pub complex: SimplicialComplex,
    pub chain_labels: Vec<String>,
    /// A single interior point lying in every chart at once; witnesses the
    /// top simplex and hence the entire nerve.
    pub interior_witness: RatioPoint,
    pub interior_in_all: bool,
    pub edge_witnesses: Vec<EdgeWitness>,
    pub edges_verified: bool,
}

impl NerveReport {
    pub fn is_full_simplex(&self) -> bool {
        self.complex.is_full_simplex()
    }
}

/// The all-ones interior homomorphism: the sum of the facet normals.
fn unit_interior_hom(m: &SharpFsMonoid) -> Result<PositiveHom> {
    let mut h = RationalFunctional::zero(m.dim());
    for normal in m.facet_normals() {
        h = h.add(&RationalFunctional::from_int(normal));
    }
    PositiveHom::new(m, h)
}

/// The deterministic point of the deepest stratum of a chain: every block
/// functional is the plain sum of the vanishing facet normals.
fn deepest_point(m: &SharpFsMonoid, chain: &FaceChain) -> Result<RatioPoint> {
    let strata = enumerate_strata(chain);
    let deepest = strata.last().expect("chains have at least one stratum");
    let mut unit = || BigRational::one();
    let p = stratum_point(m, chain, deepest, &mut unit)?;
    canonicalize(m, chain, &p)
}

pub fn nerve_of_ratio_cover(m: &SharpFsMonoid) -> Result<NerveReport> {
    let chains = maximal_chains(m)?;
    let chain_labels: Vec<String> = chains.iter().map(|c| c.label(m)).collect();

    let h = unit_interior_hom(m)?;
    let interior_chart = pi_map(&chains[0], &h);
    let interior_witness = canonicalize(m, &chains[0], &interior_chart)?;
    let interior_in_all = chains.iter().all(|c| in_chart(&interior_witness, c));

    let mut edge_witnesses = Vec::new();
    for a in 0..chains.len() {
        for b in (a + 1)..chains.len() {
            let meet = chains[a].intersect(m, &chains[b])?;
            let point = deepest_point(m, &meet)?;
            let verified = in_chart(&point, &chains[a]) && in_chart(&point, &chains[b]);
            edge_witnesses.push(EdgeWitness {
                chain_a: a,
                chain_b: b,
                shared_faces: meet.faces().to_vec(),
                point,
                verified,
            });
        }
    }
    let edges_verified = edge_witnesses.iter().all(|w| w.verified);

    let complex = if interior_in_all {
        SimplicialComplex::full_simplex(chain_labels.clone())
    } else {
        // fall back to the witnessed edges only; reaching this path means a
        // witness failed to validate, which the certificate reports as FAIL
        let edges: Vec<Vec<usize>> = edge_witnesses
            .iter()
            .filter(|w| w.verified)
            .map(|w| vec![w.chain_a, w.chain_b])
            .collect();
        let mut simplices: Vec<Vec<usize>> = (0..chains.len()).map(|v| vec![v]).collect();
        simplices.extend(edges);
        SimplicialComplex::from_maximal(chain_labels.clone(), simplices)
    };

    Ok(NerveReport {
        complex,
        chain_labels,
        interior_witness,
        interior_in_all,
        edge_witnesses,
        edges_verified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::free_monoid;

    #[test]
    fn quadrant_nerve_is_an_edge() {
        let m = free_monoid(2);
        let report = nerve_of_ratio_cover(&m).unwrap();
        assert_eq!(report.complex.vertex_count(), 2);
        assert!(report.is_full_simplex());
        assert!(report.interior_in_all);
        assert!(report.edges_verified);
        assert_eq!(report.edge_witnesses.len(), 1);
        // the shared faces of the two maximal chains are exactly top and bottom
        assert_eq!(report.edge_witnesses[0].shared_faces.len(), 2);
    }

    #[test]
    fn line_monoid_nerve_is_a_point() {
        let m = free_monoid(1);
        let report = nerve_of_ratio_cover(&m).unwrap();
        assert_eq!(report.complex.vertex_count(), 1);
        assert!(report.is_full_simplex());
        assert!(report.edge_witnesses.is_empty());
        assert!(report.edges_verified);
    }

    #[test]
    fn octant_nerve_is_the_full_simplex_on_six_vertices() {
        let m = free_monoid(3);
        let report = nerve_of_ratio_cover(&m).unwrap();
        assert_eq!(report.complex.vertex_count(), 6);
        assert!(report.is_full_simplex());
        assert_eq!(report.edge_witnesses.len(), 15);
        assert!(report.edges_verified);
    }

    #[test]
    fn edge_witnesses_live_on_the_shared_faces_exactly() {
        let m = free_monoid(3);
        let report = nerve_of_ratio_cover(&m).unwrap();
        for w in &report.edge_witnesses {
            assert_eq!(w.point.faces(), &w.shared_faces[..]);
        }
    }

    #[test]
    fn singular_cone_nerve() {
        let m = SharpFsMonoid::from_i64(2, &[&[1, 0], &[1, 2]]).unwrap();
        let report = nerve_of_ratio_cover(&m).unwrap();
        assert_eq!(report.complex.vertex_count(), 2);
        assert!(report.is_full_simplex());
        assert!(report.edges_verified);
    }
}
