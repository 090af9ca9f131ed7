#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

use ratiospace::monoid::free_monoid;
use ratiospace::SharpFsMonoid;

/// The shared monoid corpus: dimensions ≤ 3, at most 6 generators, free and
/// singular cones, a redundant generating set, and two non-simplicial cones
/// (square and pentagon bases).
pub fn corpus() -> Vec<(&'static str, SharpFsMonoid)> {
    vec![
        ("line", free_monoid(1)),
        ("quadrant", free_monoid(2)),
        ("octant", free_monoid(3)),
        (
            "singular-half",
            SharpFsMonoid::from_i64(2, &[&[1, 0], &[1, 2]]).unwrap(),
        ),
        (
            "redundant-gen",
            SharpFsMonoid::from_i64(2, &[&[1, 0], &[1, 1], &[1, 2]]).unwrap(),
        ),
        (
            "sheared",
            SharpFsMonoid::from_i64(2, &[&[1, 0], &[-1, 1]]).unwrap(),
        ),
        (
            "steep",
            SharpFsMonoid::from_i64(2, &[&[1, 0], &[1, 3]]).unwrap(),
        ),
        (
            "symmetric-singular",
            SharpFsMonoid::from_i64(2, &[&[2, -1], &[-1, 2]]).unwrap(),
        ),
        (
            "wide-split",
            SharpFsMonoid::from_i64(2, &[&[1, 0], &[1, 1], &[-1, 1]]).unwrap(),
        ),
        (
            "square-cone",
            SharpFsMonoid::from_i64(3, &[&[1, 0, 1], &[0, 1, 1], &[-1, 0, 1], &[0, -1, 1]])
                .unwrap(),
        ),
        (
            "skew-octant",
            SharpFsMonoid::from_i64(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 2]]).unwrap(),
        ),
        (
            "pentagon-cone",
            SharpFsMonoid::from_i64(
                3,
                &[&[2, 0, 1], &[1, 2, 1], &[-1, 2, 1], &[-2, 0, 1], &[0, -2, 1]],
            )
            .unwrap(),
        ),
    ]
}

pub struct GoldenCase {
    pub name: &'static str,
    pub args: Vec<String>,
    pub expect_exit: i32,
}

fn case(name: &'static str, args: &[&str], expect_exit: i32) -> GoldenCase {
    GoldenCase {
        name,
        args: args.iter().map(|s| s.to_string()).collect(),
        expect_exit,
    }
}

const QUADRANT: &str = r#"{"dim":2,"generators":[[1,0],[0,1]]}"#;
const OCTANT: &str = r#"{"dim":3,"generators":[[1,0,0],[0,1,0],[0,0,1]]}"#;
const SINGULAR: &str = r#"{"dim":2,"generators":[[1,0],[1,2]]}"#;

/// The full deterministic command matrix: every verb, both output formats,
/// inline and file input, and each documented exit code.
pub fn golden_cases() -> Vec<GoldenCase> {
    let fixture = golden_dir().join("input_quadrant.json");
    let fixture = fixture.to_str().unwrap().to_string();
    vec![
        case("01_faces_octant", &["faces", "--input", OCTANT], 0),
        case("02_faces_singular", &["faces", "--input", SINGULAR], 0),
        case("03_faces_dot", &["faces", "--input", QUADRANT, "--dot"], 0),
        case("04_chains_quadrant", &["chains", "--input", QUADRANT], 0),
        case(
            "05_chains_maximal_octant",
            &["chains", "--input", OCTANT, "--maximal"],
            0,
        ),
        case(
            "06_section_axis",
            &[
                "section",
                "--input",
                r#"{"dim":3,"generators":[[1,0,0],[0,1,0],[0,0,1]],"face":[0]}"#,
            ],
            0,
        ),
        case(
            "07_section_splitting",
            &[
                "section",
                "--input",
                r#"{"dim":2,"generators":[[1,0],[1,1],[-1,1]],"face":[0]}"#,
            ],
            0,
        ),
        case(
            "08_validate_ok",
            &[
                "ratio-validate",
                "--input",
                r#"{"dim":2,"generators":[[1,0],[0,1]],"chain":[[0,1],[0],[]],"point":[[0,1],[1,0]]}"#,
            ],
            0,
        ),
        case(
            "09_validate_bad",
            &[
                "ratio-validate",
                "--input",
                r#"{"dim":2,"generators":[[1,0],[0,1]],"chain":[[0,1],[0],[]],"point":[[1,2],[1,0]]}"#,
            ],
            1,
        ),
        case(
            "10_pi_quadrant",
            &[
                "pi",
                "--input",
                r#"{"dim":2,"generators":[[1,0],[0,1]],"chain":[[0,1],[0],[]],"h":[2,3]}"#,
            ],
            0,
        ),
        case(
            "11_homotopy_quadrant",
            &[
                "homotopy-verify",
                "--input",
                r#"{"dim":2,"generators":[[1,0],[0,1]],"chain":[[0,1],[0],[]]}"#,
            ],
            0,
        ),
        case(
            "12_certificate_quadrant",
            &["certificate", "--input", QUADRANT],
            0,
        ),
        case(
            "13_certificate_singular",
            &["certificate", "--input", SINGULAR],
            0,
        ),
        case(
            "14_blowup_interval",
            &[
                "blowup",
                "--input",
                r#"{"dim":2,"generators":[[1,0],[0,1]],"f":[1,0],"g":[0,1]}"#,
            ],
            0,
        ),
        case(
            "15_blowup_point",
            &[
                "blowup",
                "--input",
                r#"{"dim":2,"generators":[[1,0],[0,1]],"f":[2,1],"g":[1,1]}"#,
            ],
            0,
        ),
        case(
            "16_fiber_interval",
            &[
                "fiber",
                "--input",
                r#"{"dim":2,"generators":[[1,0],[0,1]],"rays":[[1,1]]}"#,
            ],
            0,
        ),
        case(
            "17_fiber_chain",
            &[
                "fiber",
                "--input",
                r#"{"dim":2,"generators":[[1,0],[0,1]],"rays":[[2,1],[1,1],[1,2]]}"#,
            ],
            0,
        ),
        case(
            "18_fiber_dot",
            &[
                "fiber",
                "--input",
                r#"{"dim":2,"generators":[[1,0],[0,1]],"rays":[[1,1]]}"#,
                "--dot",
            ],
            0,
        ),
        case("19_nerve_quadrant", &["nerve", "--input", QUADRANT], 0),
        case(
            "20_nerve_dot",
            &["nerve", "--input", QUADRANT, "--dot"],
            0,
        ),
        case("21_file_input", &["faces", "--input", &fixture], 0),
        case("22_error_malformed", &["faces", "--input", "{oops"], 2),
        case(
            "23_error_ray_outside",
            &[
                "fiber",
                "--input",
                r#"{"dim":2,"generators":[[1,0],[0,1]],"rays":[[1,0]]}"#,
            ],
            2,
        ),
        case(
            "24_error_not_in_monoid",
            &[
                "blowup",
                "--input",
                r#"{"dim":2,"generators":[[1,0],[0,1]],"f":[-1,0],"g":[0,1]}"#,
            ],
            2,
        ),
        case(
            "25_error_bad_chain",
            &[
                "pi",
                "--input",
                r#"{"dim":2,"generators":[[1,0],[0,1]],"chain":[[0],[]],"h":[2,3]}"#,
            ],
            2,
        ),
    ]
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn run_case(case: &GoldenCase) -> (Vec<u8>, i32) {
    let exe = env!("CARGO_BIN_EXE_ratiospace");
    let out = Command::new(exe)
        .args(&case.args)
        .output()
        .expect("binary runs");
    (out.stdout, out.status.code().unwrap_or(-1))
}

/// Compare a case against its golden file byte for byte, or rewrite the
/// golden file when UPDATE_GOLDEN is set. Exit codes are always enforced.
pub fn check_golden(case: &GoldenCase) -> Result<(), String> {
    let (stdout, code) = run_case(case);
    if code != case.expect_exit {
        return Err(format!(
            "{}: exit code {code}, expected {}",
            case.name, case.expect_exit
        ));
    }
    let path = golden_dir().join(format!("{}.golden", case.name));
    if std::env::var("UPDATE_GOLDEN").is_ok() {
        std::fs::write(&path, &stdout).map_err(|e| format!("{}: write: {e}", case.name))?;
        return Ok(());
    }
    let want = std::fs::read(&path).map_err(|_| {
        format!(
            "{}: missing golden file {}; regenerate with UPDATE_GOLDEN=1",
            case.name,
            path.display()
        )
    })?;
    if stdout != want {
        return Err(format!(
            "{}: output differs from {} ({} vs {} bytes)",
            case.name,
            path.display(),
            stdout.len(),
            want.len()
        ));
    }
    Ok(())
}
