// Chains of faces index the charts of the space of ratios. Sample points
// from every stratum of every chart of the octant and validate them.

use num_rational::BigRational;
use ratiospace::monoid::free_monoid;
use ratiospace::ratio::{
    canonicalize, enumerate_chains, enumerate_strata, is_valid_chart_point, sample_chart_points,
    validate_chart_point,
};

fn show(coeffs: &[BigRational]) -> String {
    let inner: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
    format!("({})", inner.join(", "))
}

fn main() -> ratiospace::Result<()> {
    let m = free_monoid(3);
    let chains = enumerate_chains(&m)?;
    println!("octant: {} chains of faces\n", chains.len());

    for chain in &chains {
        println!("chart at {}:", chain.label(&m));
        for stratum in enumerate_strata(chain) {
            let pts = sample_chart_points(&m, chain, &stratum, 2, 0)?;
            for p in &pts {
                assert!(is_valid_chart_point(&m, chain, p));
                let canonical = canonicalize(&m, chain, p)?;
                println!(
                    "  stratum {:<7} blocks {}  N_0 = {}",
                    stratum.label(),
                    canonical.blocks(),
                    show(p.functional(0).coeffs()),
                );
            }
        }
    }

    // the three validity conditions, shown failing one at a time
    let chain = &chains[1];
    let good = sample_chart_points(&m, chain, &enumerate_strata(chain)[0], 1, 0)?.remove(0);
    let mut bad = good.functionals().to_vec();
    bad[0] = bad[0].scale(&num_rational::BigRational::from_integer(3.into()));
    let violations = validate_chart_point(&m, chain, &ratiospace::ratio::RatioChartPoint::new(bad));
    println!("\nrescaling N_0 by 3 violates: {violations:?}");
    Ok(())
}
