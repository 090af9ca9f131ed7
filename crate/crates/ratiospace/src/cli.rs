//! Command-line front end.  Every verb reads a single JSON object (inline or
//! from a file), runs one pipeline, and writes a JSON report (or GraphViz DOT
//! with `--dot`).  Exit codes: 0 on success or PASS, 1 when a verification
//! verb reports FAIL, 2 on malformed input, with a machine-readable error
//! object written instead of the report.  All randomness derives from
//! `--seed`, so reports are byte-identical across runs.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::blowup::{blowup_pair, fiber_complex, subdivide_dual_cone, DualConeFan};
use crate::error::{Error, Result};
use crate::json;
use crate::monoid::SharpFsMonoid;
use crate::ratio::{
    convergence_report, enumerate_chains, enumerate_strata, maximal_chains, pi_map,
    reference_interior_hom, sample_chart_points, sections_for_chain, validate_chart_point,
    ChartViolation, PositiveHom, RatioPoint,
};
use crate::retraction::{face_section, step_scale_is_minimal, verify_section};
use crate::topology::{
    contractibility_certificate, homology, nerve_of_ratio_cover, CertificateParams,
    SimplicialComplex,
};

#[derive(Parser)]
#[command(
    name = "ratiospace",
    about = "Exact-arithmetic toolkit for spaces of ratios of sharp monoids",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args)]
struct Common {
    /// Inline JSON (starting with '{') or a path to a JSON file.
    #[arg(long)]
    input: String,
    /// Write the report to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Root seed; all sampling is derived from it deterministically.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Convergence depth: homotopy distances are evaluated at t = 2^-k, k <= max-k.
    #[arg(long, default_value_t = 12)]
    max_k: usize,
    /// Number of sampled points per stratum.
    #[arg(long, default_value_t = 3)]
    samples: usize,
    /// Emit GraphViz DOT instead of JSON (faces, blowup, fiber, nerve).
    #[arg(long)]
    dot: bool,
}

#[derive(Subcommand)]
enum Verb {
    /// List the face lattice of a sharp monoid.
    Faces(Common),
    /// Enumerate chains of faces from the top face down to the zero face.
    Chains {
        #[command(flatten)]
        common: Common,
        /// Only chains that refine no further.
        #[arg(long)]
        maximal: bool,
    },
    /// Build and verify the linear section onto a face.
    Section(Common),
    /// Check the chart conditions for a tuple of functionals.
    RatioValidate(Common),
    /// Project a positive functional to a chart point.
    Pi(Common),
    /// Sample every stratum of a chain and verify the contraction homotopy.
    HomotopyVerify(Common),
    /// Produce the full contractibility certificate for a monoid.
    Certificate(Common),
    /// Subdivide the dual cone along a pair of monoid elements.
    Blowup(Common),
    /// Star-subdivide the dual cone along interior rays and model the fiber.
    Fiber(Common),
    /// Compute the nerve of the maximal-chart cover with witnesses.
    Nerve(Common),
}

#[derive(Debug)]
enum Rendered {
    Json(Value),
    Dot(String),
}

#[derive(Debug)]
struct Outcome {
    body: Rendered,
    code: i32,
}

impl Outcome {
    fn json(code: i32, value: Value) -> Outcome {
        Outcome {
            body: Rendered::Json(value),
            code,
        }
    }

    fn dot(text: String) -> Outcome {
        Outcome {
            body: Rendered::Dot(text),
            code: 0,
        }
    }
}

pub fn run() -> i32 {
    run_from(std::env::args_os())
}

pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    dispatch(&cli)
}

fn dispatch(cli: &Cli) -> i32 {
    let (common, result) = match &cli.verb {
        Verb::Faces(c) => (c, cmd_faces(c)),
        Verb::Chains { common, maximal } => (common, cmd_chains(common, *maximal)),
        Verb::Section(c) => (c, cmd_section(c)),
        Verb::RatioValidate(c) => (c, cmd_ratio_validate(c)),
        Verb::Pi(c) => (c, cmd_pi(c)),
        Verb::HomotopyVerify(c) => (c, cmd_homotopy_verify(c)),
        Verb::Certificate(c) => (c, cmd_certificate(c)),
        Verb::Blowup(c) => (c, cmd_blowup(c)),
        Verb::Fiber(c) => (c, cmd_fiber(c)),
        Verb::Nerve(c) => (c, cmd_nerve(c)),
    };
    let outcome = result.unwrap_or_else(|err| Outcome::json(2, error_report(&err)));
    let text = match &outcome.body {
        Rendered::Json(v) => json::render(v),
        Rendered::Dot(s) => s.clone(),
    };
    if let Err(e) = write_output(common.output.as_deref(), &text) {
        eprintln!("cannot write output: {e}");
        return 2;
    }
    outcome.code
}

fn write_output(path: Option<&Path>, text: &str) -> io::Result<()> {
    match path {
        Some(p) => fs::write(p, text),
        None => io::stdout().write_all(text.as_bytes()),
    }
}

fn load_input(source: &str) -> Result<Value> {
    let text = if source.trim_start().starts_with('{') {
        source.to_string()
    } else {
        fs::read_to_string(source).map_err(|e| {
            Error::InvalidParameter(format!("cannot read input file {source:?}: {e}"))
        })?
    };
    serde_json::from_str(&text)
        .map_err(|e| Error::InvalidParameter(format!("malformed JSON input: {e}")))
}

fn input_field<'a>(v: &'a Value, name: &str) -> Result<&'a Value> {
    v.get(name)
        .ok_or_else(|| Error::InvalidParameter(format!("missing field {name:?}")))
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::NotSalient => "NotSalient",
        Error::ZeroGenerator(_) => "ZeroGenerator",
        Error::DimensionMismatch { .. } => "DimensionMismatch",
        Error::NotAFace(_) => "NotAFace",
        Error::TrivialMonoid => "TrivialMonoid",
        Error::ZeroFace => "ZeroFace",
        Error::NotInteriorHom(_) => "NotInteriorHom",
        Error::NotInChart(_) => "NotInChart",
        Error::SectionMismatch(_) => "SectionMismatch",
        Error::EmptyStratum(_) => "EmptyStratum",
        Error::DimensionUnsupported(_) => "DimensionUnsupported",
        Error::RayOutsideCone { .. } => "RayOutsideCone",
        Error::NotInMonoid(_) => "NotInMonoid",
        Error::InvalidChain(_) => "InvalidChain",
        Error::InvalidParameter(_) => "InvalidParameter",
    }
}

fn error_report(e: &Error) -> Value {
    json::report(vec![(
        "error",
        json!({ "kind": error_kind(e), "message": e.to_string() }),
    )])
}

fn generators_value(m: &SharpFsMonoid) -> Value {
    Value::Array(m.generators().iter().map(|g| json::int_vec_value(g)).collect())
}

fn complex_value(cx: &SimplicialComplex) -> Value {
    json!({
        "vertices": cx.vertex_labels(),
        "maximal": cx.maximal_simplices(),
    })
}

fn fan_value(fan: &DualConeFan) -> Value {
    Value::Array(
        fan.cones
            .iter()
            .map(|c| {
                json!({
                    "rays": Value::Array(c.rays.iter().map(|r| json::int_vec_value(r)).collect()),
                    "lineality": Value::Array(
                        c.lineality.iter().map(|r| json::int_vec_value(r)).collect()
                    ),
                })
            })
            .collect(),
    )
}

fn rays_value(rays: &[Vec<num_bigint::BigInt>]) -> Value {
    Value::Array(rays.iter().map(|r| json::int_vec_value(r)).collect())
}

fn ratio_point_value(m: &SharpFsMonoid, p: &RatioPoint) -> Value {
    let faces: Vec<Value> = p
        .faces()
        .iter()
        .map(|&id| json!(m.face(id).support()))
        .collect();
    json!({
        "faces": faces,
        "functionals": Value::Array(
            p.functionals().iter().map(json::functional_value).collect()
        ),
    })
}

fn violation_value(v: &ChartViolation) -> Value {
    match v {
        ChartViolation::AnchorNormalization { level } => {
            json!({ "type": "AnchorNormalization", "level": level })
        }
        ChartViolation::NegativeOnFace { level, generator } => {
            json!({ "type": "NegativeOnFace", "level": level, "generator": generator })
        }
        ChartViolation::KernelNotInChain { level, support } => {
            json!({ "type": "KernelNotInChain", "level": level, "support": support })
        }
        ChartViolation::Incompatible {
            level_i,
            level_j,
            generator,
        } => {
            json!({
                "type": "Incompatible",
                "level_i": level_i,
                "level_j": level_j,
                "generator": generator,
            })
        }
    }
}

fn cmd_faces(c: &Common) -> Result<Outcome> {
    let v = load_input(&c.input)?;
    let m = json::parse_monoid(&v)?;
    if c.dot {
        return Ok(Outcome::dot(m.face_lattice_dot()));
    }
    let faces: Vec<Value> = m
        .faces()
        .map(|id| {
            let f = m.face(id);
            json!({
                "index": id.index(),
                "support": f.support(),
                "dim": f.dim(),
            })
        })
        .collect();
    Ok(Outcome::json(
        0,
        json::report(vec![
            ("command", json!("faces")),
            ("dim", json!(m.dim())),
            ("generators", generators_value(&m)),
            ("count", json!(m.face_count())),
            ("faces", Value::Array(faces)),
        ]),
    ))
}

fn cmd_chains(c: &Common, maximal: bool) -> Result<Outcome> {
    let v = load_input(&c.input)?;
    let m = json::parse_monoid(&v)?;
    let chains = if maximal {
        maximal_chains(&m)?
    } else {
        enumerate_chains(&m)?
    };
    let items: Vec<Value> = chains
        .iter()
        .map(|chain| {
            let faces: Vec<Value> = chain
                .faces()
                .iter()
                .map(|&id| json!(m.face(id).support()))
                .collect();
            let anchors: Vec<Value> =
                chain.anchors().iter().map(|a| json::int_vec_value(a)).collect();
            json!({
                "label": chain.label(&m),
                "faces": faces,
                "anchors": anchors,
                "maximal": chain.is_maximal(&m),
            })
        })
        .collect();
    Ok(Outcome::json(
        0,
        json::report(vec![
            ("command", json!("chains")),
            ("dim", json!(m.dim())),
            ("generators", generators_value(&m)),
            ("maximal_only", json!(maximal)),
            ("count", json!(items.len())),
            ("chains", Value::Array(items)),
        ]),
    ))
}

fn cmd_section(c: &Common) -> Result<Outcome> {
    let v = load_input(&c.input)?;
    let m = json::parse_monoid(&v)?;
    let support = json::parse_usize_vec(input_field(&v, "face")?)?;
    let target = m.face_by_support(&support)?;
    let section = face_section(&m, target)?;
    let report = verify_section(&m, &section);
    let minimal = section
        .steps
        .iter()
        .all(|s| step_scale_is_minimal(&m, s));
    let steps: Vec<Value> = section
        .steps
        .iter()
        .map(|s| {
            json!({
                "upper": m.face(s.upper).support(),
                "lower": m.face(s.lower).support(),
                "functional": json::functional_value(&s.functional),
                "complement": s.complement,
                "anchor": json::int_vec_value(&s.anchor),
                "scale": json::int_value(&s.scale),
            })
        })
        .collect();
    let verified = report.passed();
    let code = if verified && minimal { 0 } else { 1 };
    Ok(Outcome::json(
        code,
        json::report(vec![
            ("command", json!("section")),
            ("target", json!(m.face(target).support())),
            ("steps", Value::Array(steps)),
            ("matrix", json::matrix_value(&section.matrix)),
            ("verified", json!(verified)),
            ("scales_minimal", json!(minimal)),
        ]),
    ))
}

fn cmd_ratio_validate(c: &Common) -> Result<Outcome> {
    let v = load_input(&c.input)?;
    let m = json::parse_monoid(&v)?;
    let chain = json::parse_chain(&m, input_field(&v, "chain")?, v.get("anchors"))?;
    let point = json::parse_chart_point(input_field(&v, "point")?)?;
    let violations = validate_chart_point(&m, &chain, &point);
    let valid = violations.is_empty();
    let code = if valid { 0 } else { 1 };
    Ok(Outcome::json(
        code,
        json::report(vec![
            ("command", json!("ratio-validate")),
            ("chain", json!(chain.label(&m))),
            ("valid", json!(valid)),
            (
                "violations",
                Value::Array(violations.iter().map(violation_value).collect()),
            ),
        ]),
    ))
}

fn cmd_pi(c: &Common) -> Result<Outcome> {
    let v = load_input(&c.input)?;
    let m = json::parse_monoid(&v)?;
    let chain = json::parse_chain(&m, input_field(&v, "chain")?, v.get("anchors"))?;
    let h = json::parse_functional(input_field(&v, "h")?)?;
    let hom = PositiveHom::new(&m, h)?;
    let point = pi_map(&chain, &hom);
    Ok(Outcome::json(
        0,
        json::report(vec![
            ("command", json!("pi")),
            ("chain", json!(chain.label(&m))),
            ("h", json::functional_value(hom.functional())),
            ("point", json::chart_point_value(&point)),
        ]),
    ))
}

fn cmd_homotopy_verify(c: &Common) -> Result<Outcome> {
    let v = load_input(&c.input)?;
    let m = json::parse_monoid(&v)?;
    let chain = json::parse_chain(&m, input_field(&v, "chain")?, v.get("anchors"))?;
    let sections = sections_for_chain(&m, &chain)?;
    let ell = reference_interior_hom(&m)?;
    let mut all_passed = true;
    let mut strata_items = Vec::new();
    for stratum in enumerate_strata(&chain) {
        let points = sample_chart_points(&m, &chain, &stratum, c.samples, c.seed)?;
        let mut passed = true;
        let mut d_first = BigRational::zero();
        let mut d_last = BigRational::zero();
        for p in &points {
            let report = convergence_report(&m, &chain, &sections, &ell, p, c.max_k)?;
            if !report.passed() {
                passed = false;
            }
            if let Some(d) = report.distances.first() {
                if *d > d_first {
                    d_first = d.clone();
                }
            }
            if let Some(d) = report.distances.last() {
                if *d > d_last {
                    d_last = d.clone();
                }
            }
        }
        if !passed {
            all_passed = false;
        }
        strata_items.push(json!({
            "stratum": stratum.positions(),
            "samples": points.len(),
            "d_first_max": json::rational_value(&d_first),
            "d_last_max": json::rational_value(&d_last),
            "passed": passed,
        }));
    }
    let code = if all_passed { 0 } else { 1 };
    Ok(Outcome::json(
        code,
        json::report(vec![
            ("command", json!("homotopy-verify")),
            ("chain", json!(chain.label(&m))),
            ("seed", json!(c.seed)),
            ("samples", json!(c.samples)),
            ("max_k", json!(c.max_k)),
            ("strata", Value::Array(strata_items)),
            ("passed", json!(all_passed)),
        ]),
    ))
}

fn cmd_certificate(c: &Common) -> Result<Outcome> {
    let v = load_input(&c.input)?;
    let m = json::parse_monoid(&v)?;
    let params = CertificateParams {
        samples_per_stratum: c.samples,
        max_k: c.max_k,
        seed: c.seed,
    };
    let cert = contractibility_certificate(&m, params)?;
    let mut body = cert.to_json();
    if let Value::Object(map) = &mut body {
        map.insert("command".into(), json!("certificate"));
    }
    let code = if cert.passed() { 0 } else { 1 };
    Ok(Outcome::json(code, body))
}

fn cmd_blowup(c: &Common) -> Result<Outcome> {
    let v = load_input(&c.input)?;
    let m = json::parse_monoid(&v)?;
    let f = json::parse_int_vec(input_field(&v, "f")?)?;
    let g = json::parse_int_vec(input_field(&v, "g")?)?;
    let (fan, fiber) = blowup_pair(&m, &f, &g)?;
    if c.dot {
        return Ok(Outcome::dot(fan.to_dot("blowup_fan")));
    }
    Ok(Outcome::json(
        0,
        json::report(vec![
            ("command", json!("blowup")),
            ("f", json::int_vec_value(&f)),
            ("g", json::int_vec_value(&g)),
            ("kind", json!(fiber.kind.as_str())),
            ("cones", fan_value(&fan)),
            ("interior_rays", rays_value(&fan.interior_rays())),
            ("fiber", complex_value(&fiber.complex)),
        ]),
    ))
}

fn cmd_fiber(c: &Common) -> Result<Outcome> {
    let v = load_input(&c.input)?;
    let m = json::parse_monoid(&v)?;
    let rays = input_field(&v, "rays")?
        .as_array()
        .ok_or_else(|| Error::InvalidParameter("\"rays\" must be an array of vectors".into()))?
        .iter()
        .map(json::parse_int_vec)
        .collect::<Result<Vec<_>>>()?;
    let fan = subdivide_dual_cone(&m, &rays)?;
    let fiber = fiber_complex(&fan);
    if c.dot {
        return Ok(Outcome::dot(fiber.complex.to_dot("fiber")));
    }
    let h = homology(&fiber.complex, fiber.complex.dim().max(1));
    Ok(Outcome::json(
        0,
        json::report(vec![
            ("command", json!("fiber")),
            ("kind", json!(fiber.kind.as_str())),
            ("cones", fan_value(&fan)),
            ("interior_rays", rays_value(&fan.interior_rays())),
            ("complex", complex_value(&fiber.complex)),
            (
                "homology",
                json!({
                    "betti": h.betti,
                    "torsion_free": h.torsion.iter().all(|t| t.is_empty()),
                }),
            ),
            ("acyclic", json!(h.is_acyclic())),
        ]),
    ))
}

fn cmd_nerve(c: &Common) -> Result<Outcome> {
    let v = load_input(&c.input)?;
    let m = json::parse_monoid(&v)?;
    let nerve = nerve_of_ratio_cover(&m)?;
    if c.dot {
        return Ok(Outcome::dot(nerve.complex.to_dot("nerve")));
    }
    let witnesses: Vec<Value> = nerve
        .edge_witnesses
        .iter()
        .map(|w| {
            let shared: Vec<Value> = w
                .shared_faces
                .iter()
                .map(|&id| json!(m.face(id).support()))
                .collect();
            json!({
                "chains": [w.chain_a, w.chain_b],
                "shared": shared,
                "point": ratio_point_value(&m, &w.point),
                "verified": w.verified,
            })
        })
        .collect();
    let full = nerve.is_full_simplex();
    let code = if full { 0 } else { 1 };
    Ok(Outcome::json(
        code,
        json::report(vec![
            ("command", json!("nerve")),
            ("vertices", json!(nerve.chain_labels)),
            ("full_simplex", json!(full)),
            ("interior_in_all", json!(nerve.interior_in_all)),
            (
                "interior_witness",
                ratio_point_value(&m, &nerve.interior_witness),
            ),
            ("edges_verified", json!(nerve.edges_verified)),
            ("witnesses", Value::Array(witnesses)),
            ("complex", complex_value(&nerve.complex)),
        ]),
    ))
}
