// Charts glue along chain intersections: a canonical point lies in the
// charts of two chains exactly when it lies in the chart of their common
// subchain, and chart coordinates roundtrip exactly.

use ratiospace::monoid::free_monoid;
use ratiospace::ratio::{
    canonicalize, chart_coords, enumerate_strata, in_chart, maximal_chains, points_equal,
    sample_chart_points,
};

fn main() -> ratiospace::Result<()> {
    let m = free_monoid(3);
    let chains = maximal_chains(&m)?;
    println!("octant: {} maximal chains", chains.len());

    let a = &chains[0];
    let b = &chains[1];
    let meet = a.intersect(&m, b)?;
    println!("A = {}", a.label(&m));
    println!("B = {}", b.label(&m));
    println!("A ∩ B = {}", meet.label(&m));

    for stratum in enumerate_strata(a) {
        let p = sample_chart_points(&m, a, &stratum, 1, 0)?.remove(0);
        let canonical = canonicalize(&m, a, &p)?;
        let in_a = in_chart(&canonical, a);
        let in_b = in_chart(&canonical, b);
        let in_meet = in_chart(&canonical, &meet);
        println!(
            "stratum {:<9} in A: {in_a:<5}  in B: {in_b:<5}  in A∩B: {in_meet:<5}  law holds: {}",
            stratum.label(),
            (in_a && in_b) == in_meet
        );
        if in_b {
            // express the same point in the other chart and come back
            let coords_b = chart_coords(&m, &canonical, b)?;
            let back = canonicalize(&m, b, &coords_b)?;
            println!(
                "          transported through B and back: points equal = {}",
                points_equal(&m, &canonical, &back)
            );
        }
    }
    Ok(())
}
