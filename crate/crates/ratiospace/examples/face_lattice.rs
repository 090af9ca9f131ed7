// Enumerate face lattices of sharp fs monoids: free monoids, a singular
// cone, and a non-simplicial square cone whose lattice is not boolean.

use ratiospace::monoid::{free_monoid, support_label};
use ratiospace::SharpFsMonoid;

fn main() -> ratiospace::Result<()> {
    let square = SharpFsMonoid::from_i64(
        3,
        &[&[1, 0, 1], &[0, 1, 1], &[-1, 0, 1], &[0, -1, 1]],
    )?;
    let monoids = [
        ("quadrant".to_string(), free_monoid(2)),
        ("octant".to_string(), free_monoid(3)),
        (
            "cone <(1,0),(1,2)>".to_string(),
            SharpFsMonoid::from_i64(2, &[&[1, 0], &[1, 2]])?,
        ),
        ("square cone".to_string(), square.clone()),
    ];

    for (name, m) in &monoids {
        println!("{name}: {} faces", m.face_count());
        for id in m.faces() {
            let f = m.face(id);
            println!(
                "  dim {}  support {:<9}  facet normals {:?}",
                f.dim(),
                support_label(f.support()),
                f.dual_rays()
            );
        }
    }

    println!("\ncovering relations of the square cone:");
    for (lower, upper) in square.covers() {
        println!(
            "  {} < {}",
            support_label(square.face(*lower).support()),
            support_label(square.face(*upper).support())
        );
    }

    println!("\nHasse diagram (GraphViz):\n{}", square.face_lattice_dot());
    Ok(())
}
