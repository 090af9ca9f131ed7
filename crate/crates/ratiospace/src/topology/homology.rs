//! Simplicial homology over ℤ via Smith normal form of boundary matrices.

use num_bigint::BigInt;
use num_traits::One;

use super::SimplicialComplex;
use crate::exactlin::{invariant_factors, IntMatrix};

/// Betti numbers and torsion coefficients per degree. `betti[0]` counts
/// connected components, so a nonempty acyclic complex reports `betti = [1,
/// 0, …]` with no torsion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyReport {
    pub max_degree: usize,
    pub betti: Vec<usize>,
    pub torsion: Vec<Vec<BigInt>>,
}

impl HomologyReport {
    /// Trivial reduced homology in every computed degree.
    pub fn is_acyclic(&self) -> bool {
        self.betti.first().copied().unwrap_or(0) == 1
            && self.betti.iter().skip(1).all(|&b| b == 0)
            && self.torsion.iter().all(|t| t.is_empty())
    }
}

/// Oriented boundary matrix ∂_k: rows index (k−1)-simplices, columns index
/// k-simplices, both in lexicographic order.
pub fn boundary_matrix(complex: &SimplicialComplex, k: usize) -> IntMatrix {
    let simplices = complex.simplices_of_dim(k);
    if k == 0 {
        return IntMatrix::zero(0, simplices.len());
    }
    let faces = complex.simplices_of_dim(k - 1);
    let mut m = IntMatrix::zero(faces.len(), simplices.len());
    for (col, s) in simplices.iter().enumerate() {
        for drop in 0..s.len() {
            let mut f = s.clone();
            f.remove(drop);
            let row = faces
                .binary_search(&f)
                .expect("faces of a simplex belong to the complex");
            let sign = if drop % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            m.set(row, col, sign);
        }
    }
    m
}

pub fn homology(complex: &SimplicialComplex, max_degree: usize) -> HomologyReport {
    let mut chain_dims = Vec::new();
    let mut ranks = Vec::new();
    let mut factors = Vec::new();
    for k in 0..=max_degree + 1 {
        chain_dims.push(complex.simplices_of_dim(k).len());
        let f = invariant_factors(&boundary_matrix(complex, k));
        ranks.push(f.len());
        factors.push(f);
    }
    let betti = (0..=max_degree)
        .map(|k| chain_dims[k].saturating_sub(ranks[k] + ranks[k + 1]))
        .collect();
    let torsion = (0..=max_degree)
        .map(|k| {
            factors[k + 1]
                .iter()
                .filter(|d| !d.is_one())
                .cloned()
                .collect()
        })
        .collect();
    HomologyReport {
        max_degree,
        betti,
        torsion,
    }
}
