//! Machine-checkable contractibility evidence for a space of ratios: for
//! every stratum of every chain, sampled points flow to the reference point
//! under the contraction homotopy with exact endpoint identities; the nerve
//! of the maximal-chart cover is a witnessed full simplex; and its integral
//! homology is trivial in the checked degrees. The certificate records all
//! of it and a single PASS/FAIL verdict.

use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::Result;
use crate::json;
use crate::monoid::SharpFsMonoid;
use crate::ratio::{
    convergence_report, enumerate_chains, enumerate_strata, reference_interior_hom,
    sample_chart_points, sections_for_chain,
};
use crate::retraction::{step_scale_is_minimal, verify_section};
use crate::topology::homology::homology;
use crate::topology::nerve::nerve_of_ratio_cover;

#[derive(Debug, Clone, Copy)]
pub struct CertificateParams {
    pub samples_per_stratum: usize,
    pub max_k: usize,
    pub seed: u64,
}

impl Default for CertificateParams {
    fn default() -> Self {
        CertificateParams {
            samples_per_stratum: 3,
            max_k: 12,
            seed: 0,
        }
    }
}

/// Nerves up to this many vertices get their homology checked in every
/// degree; larger nerves are checked in degrees ≤ 1 plus the exact
/// structural full-simplex test (the simplex on the whole vertex set is
/// present as a single maximal face).
const FULL_HOMOLOGY_VERTEX_LIMIT: usize = 12;

#[derive(Debug, Clone)]
pub struct StratumEvidence {
    pub positions: Vec<usize>,
    pub samples: usize,
    pub max_first_distance: BigRational,
    pub max_last_distance: BigRational,
    pub all_passed: bool,
}

#[derive(Debug, Clone)]
pub struct ChartEvidence {
    pub label: String,
    pub maximal: bool,
    pub sections_verified: bool,
    pub strata: Vec<StratumEvidence>,
}

impl ChartEvidence {
    pub fn passed(&self) -> bool {
        self.sections_verified && self.strata.iter().all(|s| s.all_passed)
    }
}

#[derive(Debug, Clone)]
pub struct NerveEvidence {
    pub vertex_count: usize,
    pub full_simplex: bool,
    pub interior_witness_in_all: bool,
    pub edge_witnesses_verified: bool,
    pub degrees_checked: usize,
    pub betti: Vec<usize>,
    pub torsion_free: bool,
}

impl NerveEvidence {
    pub fn passed(&self) -> bool {
        self.full_simplex
            && self.interior_witness_in_all
            && self.edge_witnesses_verified
            && self.betti.first().copied().unwrap_or(0) == 1
            && self.betti.iter().skip(1).all(|&b| b == 0)
            && self.torsion_free
    }
}

#[derive(Debug, Clone)]
pub struct Certificate {
    pub dim: usize,
    pub generators: Vec<Vec<String>>,
    pub params_samples: usize,
    pub params_max_k: usize,
    pub params_seed: u64,
    pub charts: Vec<ChartEvidence>,
    pub nerve: NerveEvidence,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.charts.iter().all(|c| c.passed()) && self.nerve.passed()
    }

    pub fn to_json(&self) -> Value {
        let charts: Vec<Value> = self
            .charts
            .iter()
            .map(|c| {
                let strata: Vec<Value> = c
                    .strata
                    .iter()
                    .map(|s| {
                        json!({
                            "stratum": s.positions,
                            "samples": s.samples,
                            "d_first_max": json::rational_value(&s.max_first_distance),
                            "d_last_max": json::rational_value(&s.max_last_distance),
                            "passed": s.all_passed,
                        })
                    })
                    .collect();
                json!({
                    "chain": c.label,
                    "maximal": c.maximal,
                    "sections_verified": c.sections_verified,
                    "strata": strata,
                    "passed": c.passed(),
                })
            })
            .collect();
        json::report(vec![
            ("kind", json!("contractibility-certificate")),
            (
                "monoid",
                json!({ "dim": self.dim, "generators": self.generators }),
            ),
            (
                "params",
                json!({
                    "samples_per_stratum": self.params_samples,
                    "max_k": self.params_max_k,
                    "seed": self.params_seed,
                }),
            ),
            ("charts", Value::Array(charts)),
            (
                "nerve",
                json!({
                    "vertices": self.nerve.vertex_count,
                    "full_simplex": self.nerve.full_simplex,
                    "interior_witness_in_all_charts": self.nerve.interior_witness_in_all,
                    "edge_witnesses_verified": self.nerve.edge_witnesses_verified,
                    "degrees_checked": self.nerve.degrees_checked,
                    "betti": self.nerve.betti,
                    "torsion_free": self.nerve.torsion_free,
                    "passed": self.nerve.passed(),
                }),
            ),
            ("verdict", json!(if self.passed() { "PASS" } else { "FAIL" })),
        ])
    }
}

pub fn contractibility_certificate(
    m: &SharpFsMonoid,
    params: CertificateParams,
) -> Result<Certificate> {
    let ell = reference_interior_hom(m)?;
    let mut charts = Vec::new();
    for chain in enumerate_chains(m)? {
        let sections = sections_for_chain(m, &chain)?;
        let sections_verified = sections.iter().all(|s| {
            verify_section(m, s).passed() && s.steps.iter().all(|st| step_scale_is_minimal(m, st))
        });
        let mut strata = Vec::new();
        for stratum in enumerate_strata(&chain) {
            let points = sample_chart_points(
                m,
                &chain,
                &stratum,
                params.samples_per_stratum,
                params.seed,
            )?;
            let mut max_first = BigRational::zero();
            let mut max_last = BigRational::zero();
            let mut all_passed = true;
            for p in &points {
                let report = convergence_report(m, &chain, &sections, &ell, p, params.max_k)?;
                if !report.passed() {
                    all_passed = false;
                }
                if let Some(first) = report.distances.first() {
                    if *first > max_first {
                        max_first = first.clone();
                    }
                }
                if let Some(last) = report.distances.last() {
                    if *last > max_last {
                        max_last = last.clone();
                    }
                }
            }
            strata.push(StratumEvidence {
                positions: stratum.positions().to_vec(),
                samples: points.len(),
                max_first_distance: max_first,
                max_last_distance: max_last,
                all_passed,
            });
        }
        charts.push(ChartEvidence {
            label: chain.label(m),
            maximal: chain.is_maximal(m),
            sections_verified,
            strata,
        });
    }

    let nerve = nerve_of_ratio_cover(m)?;
    let vertex_count = nerve.complex.vertex_count();
    let degrees_checked = if vertex_count <= FULL_HOMOLOGY_VERTEX_LIMIT {
        nerve.complex.dim().max(1)
    } else {
        1
    };
    let h = homology(&nerve.complex, degrees_checked);
    let nerve_evidence = NerveEvidence {
        vertex_count,
        full_simplex: nerve.is_full_simplex(),
        interior_witness_in_all: nerve.interior_in_all,
        edge_witnesses_verified: nerve.edges_verified,
        degrees_checked,
        betti: h.betti.clone(),
        torsion_free: h.torsion.iter().all(|t| t.is_empty()),
    };

    Ok(Certificate {
        dim: m.dim(),
        generators: m
            .generators()
            .iter()
            .map(|g| g.iter().map(|x| x.to_string()).collect())
            .collect(),
        params_samples: params.samples_per_stratum,
        params_max_k: params.max_k,
        params_seed: params.seed,
        charts,
        nerve: nerve_evidence,
    })
}
