// The contraction homotopy f(p, t) slides any chart point to the image of
// the reference interior homomorphism: identity at t = 0, pi(L) at t = 1,
// with exact rational distances along the dyadic sweep t = 2^-k.

use num_rational::BigRational;
use num_traits::{One, Zero};
use ratiospace::monoid::free_monoid;
use ratiospace::ratio::{
    chart_distance, convergence_report, enumerate_strata, homotopy, maximal_chains, pi_map,
    reference_interior_hom, sample_chart_points, sections_for_chain,
};

fn show(coeffs: &[BigRational]) -> String {
    let inner: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
    format!("({})", inner.join(", "))
}

fn main() -> ratiospace::Result<()> {
    let m = free_monoid(2);
    let chain = maximal_chains(&m)?.remove(0);
    let sections = sections_for_chain(&m, &chain)?;
    let ell = reference_interior_hom(&m)?;
    println!("chain {}", chain.label(&m));
    println!("reference hom L = {}", show(ell.functional().coeffs()));

    let stratum = enumerate_strata(&chain).into_iter().last().unwrap();
    let p = sample_chart_points(&m, &chain, &stratum, 1, 0)?.remove(0);
    println!("start point (deepest stratum {}):", stratum.label());
    for i in 0..p.len() {
        println!("  N_{i} = {}", show(p.functional(i).coeffs()));
    }

    let mut t = BigRational::one();
    let half = BigRational::new(1.into(), 2.into());
    println!("\n  k   t = 2^-k      d_k = dist(f(p, t), p)");
    for k in 1..=12 {
        t = &t * &half;
        let image = homotopy(&m, &chain, &sections, &ell, &p, &t)?;
        println!("  {k:<3} {t:<12} {}", chart_distance(&m, &chain, &image, &p));
    }

    let at_one = homotopy(&m, &chain, &sections, &ell, &p, &BigRational::one())?;
    let center = pi_map(&chain, &ell);
    println!(
        "\nf(p, 1) lands on pi(L) exactly: {}",
        chart_distance(&m, &chain, &at_one, &center).is_zero()
    );

    let report = convergence_report(&m, &chain, &sections, &ell, &p, 12)?;
    println!(
        "report: contraction {}, monotone from k={} {}, level bounds {}, decomposition {}",
        report.contraction_ok,
        report.monotone_from,
        report.monotone_ok,
        report.lower_bound_ok,
        report.decomposition_ok
    );
    Ok(())
}
