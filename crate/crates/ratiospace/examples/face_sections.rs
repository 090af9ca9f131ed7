// Build the linear section p : S → F onto each face of a monoid whose
// middle generator forces a scaling constant c = 2, then verify that every
// generator image stays in the target cone and that c is minimal.

use num_rational::BigRational;
use ratiospace::monoid::support_label;
use ratiospace::retraction::{face_section, step_scale_is_minimal, verify_section};
use ratiospace::SharpFsMonoid;

fn show(coeffs: &[BigRational]) -> String {
    let inner: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
    format!("({})", inner.join(", "))
}

fn main() -> ratiospace::Result<()> {
    let m = SharpFsMonoid::from_i64(2, &[&[1, 0], &[1, 1], &[-1, 1]])?;
    println!("monoid generators: (1,0), (1,1), (-1,1)\n");

    for id in m.faces() {
        let support = support_label(m.face(id).support());
        let section = face_section(&m, id)?;
        let report = verify_section(&m, &section);
        println!("section onto {support}:");
        for step in &section.steps {
            println!(
                "  step {} -> {}: functional {}, scale c = {}, minimal = {}",
                support_label(m.face(step.upper).support()),
                support_label(m.face(step.lower).support()),
                show(step.functional.coeffs()),
                step.scale,
                step_scale_is_minimal(&m, step),
            );
        }
        println!("  verified: {}", report.passed());
        for (i, g) in m.generators().iter().enumerate() {
            println!("  p({g:?}) = {}  (generator {i})", show(&section.apply_int(g)));
        }
        println!();
    }
    Ok(())
}
