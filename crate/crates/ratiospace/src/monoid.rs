//! Sharp fs monoids: saturated submonoids `cone(generators) ∩ ℤ^d` of a
//! lattice, with no invertible element other than 0. Faces, the face lattice,
//! and inner points are computed eagerly at construction; a face is identified
//! by the set of generator indices lying on it.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{
    check_dim, dot, dual_description, is_zero_vec, rank, vec_add, LatticeVector,
    RationalFunctional,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceId(pub(crate) usize);

impl FaceId {
    pub fn index(&self) -> usize {
        self.0
    }
}

#[derive(Debug, Clone)]
pub struct Face {
    /// Generator indices lying on the face, sorted. This is the face identity.
    support: Vec<usize>,
    /// Maximal set of facet indices vanishing on the face.
    zero_facets: Vec<usize>,
    /// Sum of the vanishing facet normals; zero exactly on the face.
    supporting: RationalFunctional,
    dim: usize,
    /// Facet normals of `cone(support)` inside its span.
    dual_rays: Vec<LatticeVector>,
    /// Functionals vanishing on the span of the face.
    dual_lineality: Vec<LatticeVector>,
}

impl Face {
    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn zero_facets(&self) -> &[usize] {
        &self.zero_facets
    }

    pub fn supporting_functional(&self) -> &RationalFunctional {
        &self.supporting
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn dual_rays(&self) -> &[LatticeVector] {
        &self.dual_rays
    }

    pub fn dual_lineality(&self) -> &[LatticeVector] {
        &self.dual_lineality
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    /// Membership of a rational point in `cone(support) ⊗ ℚ`.
    pub fn cone_contains(&self, point: &[BigRational]) -> bool {
        self.dual_rays
            .iter()
            .all(|r| !RationalFunctional::from_int(r).eval_rat(point).is_negative())
            && self
                .dual_lineality
                .iter()
                .all(|l| RationalFunctional::from_int(l).eval_rat(point).is_zero())
    }
}

#[derive(Debug, Clone)]
pub struct SharpFsMonoid {
    dim: usize,
    generators: Vec<LatticeVector>,
    /// Facet normals of the cone inside its span, primitive integer form.
    facet_normals: Vec<LatticeVector>,
    /// Full membership list: facet normals plus ± a basis of span constraints.
    membership: Vec<RationalFunctional>,
    faces: Vec<Face>,
    /// Hasse diagram of the face lattice: (lower, upper) covering pairs.
    covers: Vec<(FaceId, FaceId)>,
}

impl SharpFsMonoid {
    /// Builds the monoid `cone(generators) ∩ ℤ^dim`. The generator list may be
    /// redundant; an empty list yields the trivial monoid `{0}`.
    pub fn new(dim: usize, generators: Vec<LatticeVector>) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            check_dim(dim, g.len())?;
            if is_zero_vec(g) {
                return Err(Error::ZeroGenerator(i));
            }
        }
        let desc = dual_description(&generators, dim);
        if !desc.primal_is_salient(dim) {
            return Err(Error::NotSalient);
        }
        let facet_normals = desc.rays.clone();
        let membership = desc.membership_functionals();

        // Every face is the intersection of the facets containing it;
        // enumerate facet subsets and dedupe by generator support.
        let mut supports: Vec<Vec<usize>> = Vec::new();
        for mask in 0u64..(1u64 << facet_normals.len()) {
            let support: Vec<usize> = (0..generators.len())
                .filter(|&i| {
                    (0..facet_normals.len()).all(|z| {
                        mask & (1 << z) == 0 || dot(&facet_normals[z], &generators[i]).is_zero()
                    })
                })
                .collect();
            supports.push(support);
        }
        supports.sort();
        supports.dedup();

        let mut faces: Vec<Face> = supports
            .into_iter()
            .map(|support| {
                let sub: Vec<LatticeVector> =
                    support.iter().map(|&i| generators[i].clone()).collect();
                let zero_facets: Vec<usize> = (0..facet_normals.len())
                    .filter(|&z| sub.iter().all(|g| dot(&facet_normals[z], g).is_zero()))
                    .collect();
                let mut supporting = vec![BigInt::zero(); dim];
                for &z in &zero_facets {
                    supporting = vec_add(&supporting, &facet_normals[z]);
                }
                let sub_desc = dual_description(&sub, dim);
                Face {
                    dim: rank(&sub),
                    support,
                    zero_facets,
                    supporting: RationalFunctional::from_int(&supporting),
                    dual_rays: sub_desc.rays,
                    dual_lineality: sub_desc.lineality,
                }
            })
            .collect();
        faces.sort_by(|a, b| (a.dim, &a.support).cmp(&(b.dim, &b.support)));

        let mut covers = Vec::new();
        for (lo, f) in faces.iter().enumerate() {
            for (hi, g) in faces.iter().enumerate() {
                if !strict_subset(&f.support, &g.support) {
                    continue;
                }
                let between = faces.iter().enumerate().any(|(mid, h)| {
                    mid != lo
                        && mid != hi
                        && strict_subset(&f.support, &h.support)
                        && strict_subset(&h.support, &g.support)
                });
                if !between {
                    covers.push((FaceId(lo), FaceId(hi)));
                }
            }
        }

        Ok(SharpFsMonoid {
            dim,
            generators,
            facet_normals,
            membership,
            faces,
            covers,
        })
    }

    pub fn from_i64(dim: usize, gens: &[&[i64]]) -> Result<Self> {
        SharpFsMonoid::new(dim, gens.iter().map(|g| crate::exactlin::int_vec(g)).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[LatticeVector] {
        &self.generators
    }

    pub fn generator(&self, i: usize) -> &LatticeVector {
        &self.generators[i]
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn facet_normals(&self) -> &[LatticeVector] {
        &self.facet_normals
    }

    /// Membership functionals: x lies in the monoid's cone iff all are ≥ 0.
    pub fn membership_functionals(&self) -> &[RationalFunctional] {
        &self.membership
    }

    /// Saturation makes lattice membership a pure facet check.
    pub fn contains(&self, x: &[BigInt]) -> Result<bool> {
        check_dim(self.dim, x.len())?;
        Ok(self
            .membership
            .iter()
            .all(|f| !f.eval_int(x).is_negative()))
    }

    pub fn cone_contains_rational(&self, x: &[BigRational]) -> Result<bool> {
        check_dim(self.dim, x.len())?;
        Ok(self
            .membership
            .iter()
            .all(|f| !f.eval_rat(x).is_negative()))
    }

    pub fn faces(&self) -> impl Iterator<Item = FaceId> + '_ {
        (0..self.faces.len()).map(FaceId)
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn face(&self, id: FaceId) -> &Face {
        &self.faces[id.0]
    }

    /// The monoid itself as the top face.
    pub fn top(&self) -> FaceId {
        FaceId(self.faces.len() - 1)
    }

    /// The zero face.
    pub fn bottom(&self) -> FaceId {
        FaceId(0)
    }

    pub fn face_by_support(&self, support: &[usize]) -> Result<FaceId> {
        let mut key = support.to_vec();
        key.sort_unstable();
        key.dedup();
        self.faces
            .iter()
            .position(|f| f.support == key)
            .map(FaceId)
            .ok_or(Error::NotAFace(key))
    }

    /// Face inclusion is generator-support inclusion.
    pub fn face_leq(&self, a: FaceId, b: FaceId) -> bool {
        subset(&self.faces[a.0].support, &self.faces[b.0].support)
    }

    /// Covering pairs (lower, upper) of the face lattice.
    pub fn covers(&self) -> &[(FaceId, FaceId)] {
        &self.covers
    }

    /// Sum of the generators on the face; lies in the relative interior.
    pub fn inner_point(&self, id: FaceId) -> Result<LatticeVector> {
        let face = &self.faces[id.0];
        if face.support.is_empty() {
            return Err(Error::ZeroFace);
        }
        let mut sum = vec![BigInt::zero(); self.dim];
        for &i in &face.support {
            sum = vec_add(&sum, &self.generators[i]);
        }
        Ok(sum)
    }

    /// The smallest face whose cone contains the given monoid element; the
    /// support is exactly the generators vanishing under every facet that
    /// vanishes at x.
    pub fn face_of_element(&self, x: &[BigInt]) -> Result<FaceId> {
        if !self.contains(x)? {
            return Err(Error::NotInMonoid(x.to_vec()));
        }
        let vanishing: Vec<usize> = (0..self.facet_normals.len())
            .filter(|&z| dot(&self.facet_normals[z], x).is_zero())
            .collect();
        let support: Vec<usize> = (0..self.generators.len())
            .filter(|&i| {
                vanishing
                    .iter()
                    .all(|&z| dot(&self.facet_normals[z], &self.generators[i]).is_zero())
            })
            .collect();
        self.face_by_support(&support)
    }

    /// GraphViz rendering of the Hasse diagram, bottom face at the bottom.
    pub fn face_lattice_dot(&self) -> String {
        let mut out = String::from("digraph face_lattice {\n  rankdir=BT;\n");
        for (i, f) in self.faces.iter().enumerate() {
            out.push_str(&format!(
                "  f{} [label=\"{}\"];\n",
                i,
                support_label(&f.support)
            ));
        }
        for (lo, hi) in &self.covers {
            out.push_str(&format!("  f{} -> f{};\n", lo.0, hi.0));
        }
        out.push_str("}\n");
        out
    }
}

pub fn support_label(support: &[usize]) -> String {
    let inner = support
        .iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(",");
    format!("{{{inner}}}")
}

fn subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

fn strict_subset(a: &[usize], b: &[usize]) -> bool {
    a.len() < b.len() && subset(a, b)
}

/// ℕ^d with the standard basis generators.
pub fn free_monoid(d: usize) -> SharpFsMonoid {
    let gens: Vec<LatticeVector> = (0..d)
        .map(|i| {
            let mut e = vec![BigInt::zero(); d];
            e[i] = BigInt::from(1);
            e
        })
        .collect();
    SharpFsMonoid::new(d, gens).expect("free monoid is salient")
}
