// Produce a machine-checkable contractibility certificate: per-chart
// section and convergence evidence plus the nerve of the chart cover with
// its homology. The JSON form is what the CLI's `certificate` verb emits.

use ratiospace::monoid::free_monoid;
use ratiospace::topology::{contractibility_certificate, nerve_of_ratio_cover, CertificateParams};
use ratiospace::SharpFsMonoid;

fn main() -> ratiospace::Result<()> {
    for (name, m) in [
        ("quadrant", free_monoid(2)),
        ("cone <(2,-1),(-1,2)>", SharpFsMonoid::from_i64(2, &[&[2, -1], &[-1, 2]])?),
    ] {
        let nerve = nerve_of_ratio_cover(&m)?;
        println!("{name}:");
        println!(
            "  nerve: {} vertices, full simplex = {}, interior witness in all charts = {}, edges verified = {}",
            nerve.complex.vertex_count(),
            nerve.is_full_simplex(),
            nerve.interior_in_all,
            nerve.edges_verified
        );

        let cert = contractibility_certificate(&m, CertificateParams::default())?;
        println!(
            "  certificate: {} charts, nerve betti {:?}, verdict {}",
            cert.charts.len(),
            cert.nerve.betti,
            if cert.passed() { "PASS" } else { "FAIL" }
        );
        for chart in cert.charts.iter().take(3) {
            println!(
                "    chart {:<22} sections ok = {}, strata checked = {}",
                chart.label,
                chart.sections_verified,
                chart.strata.len()
            );
        }
        println!("    …");
    }

    let cert = contractibility_certificate(&free_monoid(2), CertificateParams::default())?;
    println!(
        "\nfull JSON for the quadrant:\n{}",
        serde_json::to_string_pretty(&cert.to_json()).expect("certificate serializes")
    );
    Ok(())
}
