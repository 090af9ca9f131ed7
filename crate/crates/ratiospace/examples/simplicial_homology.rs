// Integral simplicial homology via Smith normal form: Betti numbers and
// torsion coefficients for a sphere, a torus, and the projective plane
// (whose H_1 torsion the rational rank oracle cannot see).

use ratiospace::oracle;
use ratiospace::topology::{homology, SimplicialComplex};

fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

fn main() {
    let sphere = SimplicialComplex::from_maximal(
        labels(4),
        vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
    );

    let mut torus_faces = Vec::new();
    for i in 0..7usize {
        let mut a = vec![i, (i + 1) % 7, (i + 3) % 7];
        let mut b = vec![i, (i + 2) % 7, (i + 3) % 7];
        a.sort();
        b.sort();
        torus_faces.push(a);
        torus_faces.push(b);
    }
    let torus = SimplicialComplex::from_maximal(labels(7), torus_faces);

    let projective_plane = SimplicialComplex::from_maximal(
        labels(6),
        vec![
            vec![0, 1, 4],
            vec![0, 1, 5],
            vec![0, 2, 3],
            vec![0, 2, 5],
            vec![0, 3, 4],
            vec![1, 2, 3],
            vec![1, 2, 4],
            vec![1, 3, 5],
            vec![2, 4, 5],
            vec![3, 4, 5],
        ],
    );

    for (name, complex) in [
        ("boundary of the 3-simplex (S^2)", sphere),
        ("7-vertex torus", torus),
        ("6-vertex projective plane", projective_plane),
    ] {
        let report = homology(&complex, complex.dim());
        println!(
            "{name}: {} simplices, dim {}",
            complex.simplex_count(),
            complex.dim()
        );
        println!("  betti   {:?}", report.betti);
        println!("  torsion {:?}", report.torsion);
        println!(
            "  rational-rank oracle agrees: {}",
            oracle::rational_betti(&complex, complex.dim()) == report.betti
        );
    }
}
