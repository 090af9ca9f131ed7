//! Simplicial complexes, integer homology, the nerve of the chart cover of a
//! ratio space, and machine-checkable contractibility certificates.

mod certificate;
mod complex;
mod homology;
mod nerve;

pub use certificate::{contractibility_certificate, Certificate, CertificateParams};
pub use complex::SimplicialComplex;
pub use homology::{homology, HomologyReport};
pub use nerve::{nerve_of_ratio_cover, EdgeWitness, NerveReport};
