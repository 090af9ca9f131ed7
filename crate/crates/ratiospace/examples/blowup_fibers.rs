// Blow up monomial ideals (x^f, x^g): the dual cone subdivides along f - g
// and the exceptional fiber is a point exactly when f and g are comparable
// in the monoid order. Multi-ray subdivisions give interval chains.

use ratiospace::blowup::{blowup_pair, fiber_complex, subdivide_dual_cone};
use ratiospace::exactlin::int_vec;
use ratiospace::monoid::free_monoid;
use ratiospace::topology::homology;

fn main() -> ratiospace::Result<()> {
    let m = free_monoid(2);

    for (f, g) in [([2, 1], [1, 1]), ([1, 0], [0, 1]), ([3, 0], [0, 2])] {
        let (fan, fiber) = blowup_pair(&m, &int_vec(&f), &int_vec(&g))?;
        println!(
            "blowup of (x^{f:?}, x^{g:?}): {} maximal cones, fiber = {}",
            fan.cones.len(),
            fiber.kind.as_str()
        );
        for cone in &fan.cones {
            println!("  cone with rays {:?}", cone.rays);
        }
    }

    // iterated subdivision: three interior rays chain four cones in a path
    let rays = vec![int_vec(&[2, 1]), int_vec(&[1, 1]), int_vec(&[1, 2])];
    let fan = subdivide_dual_cone(&m, &rays)?;
    let fiber = fiber_complex(&fan);
    println!(
        "\nsubdivision along {:?}: {} cones, fiber = {}",
        [[2, 1], [1, 1], [1, 2]],
        fan.cones.len(),
        fiber.kind.as_str()
    );
    println!("interior rays: {:?}", fan.interior_rays());
    let h = homology(&fiber.complex, 1);
    println!(
        "fiber homology: betti {:?}, acyclic = {}",
        h.betti,
        h.is_acyclic()
    );
    println!("\nfiber graph (GraphViz):\n{}", fiber.complex.to_dot("fiber"));
    Ok(())
}
