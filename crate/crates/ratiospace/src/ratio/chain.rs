//! Descending face chains `S = S⁽⁰⁾ ⊋ S⁽¹⁾ ⊋ … ⊋ S⁽ⁿ⁾ = {0}` with one
//! anchor point per non-terminal face. Chains index the charts of the space
//! of ratios; maximal chains index the covering used by the nerve.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactlin::LatticeVector;
use crate::monoid::{support_label, FaceId, SharpFsMonoid};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceChain {
    faces: Vec<FaceId>,
    /// Anchor `a_i ∈ S⁽ⁱ⁾ ∖ S⁽ⁱ⁺¹⁾` for each level except the last.
    anchors: Vec<LatticeVector>,
}

impl FaceChain {
    /// Builds the chain with default anchors (the inner point of each face).
    pub fn new(m: &SharpFsMonoid, faces: Vec<FaceId>) -> Result<Self> {
        validate_faces(m, &faces)?;
        let anchors = faces[..faces.len() - 1]
            .iter()
            .map(|&f| m.inner_point(f))
            .collect::<Result<Vec<_>>>()?;
        Ok(FaceChain { faces, anchors })
    }

    pub fn with_anchors(
        m: &SharpFsMonoid,
        faces: Vec<FaceId>,
        anchors: Vec<LatticeVector>,
    ) -> Result<Self> {
        validate_faces(m, &faces)?;
        if anchors.len() + 1 != faces.len() {
            return Err(Error::InvalidChain(format!(
                "expected {} anchors, got {}",
                faces.len() - 1,
                anchors.len()
            )));
        }
        for (i, a) in anchors.iter().enumerate() {
            if !m.contains(a)? {
                return Err(Error::InvalidChain(format!(
                    "anchor {i} is not a monoid element"
                )));
            }
            let fa = m.face_of_element(a)?;
            if !m.face_leq(fa, faces[i]) {
                return Err(Error::InvalidChain(format!(
                    "anchor {i} lies outside level {i}"
                )));
            }
            if m.face_leq(fa, faces[i + 1]) {
                return Err(Error::InvalidChain(format!(
                    "anchor {i} lies in level {}",
                    i + 1
                )));
            }
        }
        Ok(FaceChain { faces, anchors })
    }

    /// Number of strict inclusions; the chart at this chain carries
    /// functionals `N_0, …, N_{len−1}`.
    pub fn len(&self) -> usize {
        self.faces.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn faces(&self) -> &[FaceId] {
        &self.faces
    }

    pub fn face(&self, i: usize) -> FaceId {
        self.faces[i]
    }

    pub fn anchors(&self) -> &[LatticeVector] {
        &self.anchors
    }

    pub fn anchor(&self, i: usize) -> &[BigInt] {
        &self.anchors[i]
    }

    pub fn contains_face(&self, f: FaceId) -> bool {
        self.faces.contains(&f)
    }

    /// Position of `f` in the chain, if present.
    pub fn position(&self, f: FaceId) -> Option<usize> {
        self.faces.iter().position(|&g| g == f)
    }

    /// A chain is maximal when every inclusion is a covering step.
    pub fn is_maximal(&self, m: &SharpFsMonoid) -> bool {
        self.faces
            .windows(2)
            .all(|w| m.face(w[1]).dim() + 1 == m.face(w[0]).dim())
    }

    pub fn label(&self, m: &SharpFsMonoid) -> String {
        self.faces
            .iter()
            .map(|&f| support_label(m.face(f).support()))
            .collect::<Vec<_>>()
            .join(" > ")
    }

    /// The faces common to both chains, still a valid chain (top and bottom
    /// are always shared). Anchors are rebuilt as defaults.
    pub fn intersect(&self, m: &SharpFsMonoid, other: &FaceChain) -> Result<FaceChain> {
        let faces: Vec<FaceId> = self
            .faces
            .iter()
            .copied()
            .filter(|f| other.contains_face(*f))
            .collect();
        FaceChain::new(m, faces)
    }
}

fn validate_faces(m: &SharpFsMonoid, faces: &[FaceId]) -> Result<()> {
    if faces.is_empty() {
        return Err(Error::InvalidChain("chain must be nonempty".into()));
    }
    for &f in faces {
        if f.index() >= m.face_count() {
            return Err(Error::NotAFace(vec![f.index()]));
        }
    }
    if faces[0] != m.top() {
        return Err(Error::InvalidChain(
            "chain must start at the whole monoid".into(),
        ));
    }
    if *faces.last().unwrap() != m.bottom() {
        return Err(Error::InvalidChain("chain must end at the zero face".into()));
    }
    for w in faces.windows(2) {
        if !(m.face_leq(w[1], w[0]) && w[0] != w[1]) {
            return Err(Error::InvalidChain(
                "chain faces must strictly decrease".into(),
            ));
        }
    }
    Ok(())
}

/// All descending chains from the whole monoid to the zero face, in a
/// deterministic order (depth-first over the face list, which is itself
/// sorted by dimension and support). The trivial monoid has no chains.
pub fn enumerate_chains(m: &SharpFsMonoid) -> Result<Vec<FaceChain>> {
    if m.is_trivial() {
        return Err(Error::TrivialMonoid);
    }
    let mut out = Vec::new();
    let mut stack = vec![m.top()];
    descend(m, &mut stack, &mut out);
    Ok(out)
}

fn descend(m: &SharpFsMonoid, stack: &mut Vec<FaceId>, out: &mut Vec<FaceChain>) {
    let current = *stack.last().unwrap();
    if current == m.bottom() {
        out.push(FaceChain::new(m, stack.clone()).expect("descent builds valid chains"));
        return;
    }
    for next in m.faces() {
        if next != current && m.face_leq(next, current) {
            stack.push(next);
            descend(m, stack, out);
            stack.pop();
        }
    }
}

pub fn maximal_chains(m: &SharpFsMonoid) -> Result<Vec<FaceChain>> {
    Ok(enumerate_chains(m)?
        .into_iter()
        .filter(|c| c.is_maximal(m))
        .collect())
}
