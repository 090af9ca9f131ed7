//! Finite abstract simplicial complexes, stored by their maximal simplices.
//! The family of simplices is downward closed by construction; per-dimension
//! enumeration materializes only what a computation needs, so large full
//! simplices stay cheap to represent.

use itertools::Itertools;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_labels: Vec<String>,
    /// Sorted vertex lists, mutually non-contained, sorted lexicographically.
    maximal: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    pub fn from_maximal(vertex_labels: Vec<String>, simplices: Vec<Vec<usize>>) -> Self {
        let n = vertex_labels.len();
        let mut cleaned: Vec<Vec<usize>> = simplices
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s.dedup();
                assert!(s.iter().all(|&v| v < n), "vertex index out of range");
                s
            })
            .collect();
        // isolated vertices not listed in any simplex are still part of the complex
        let covered: Vec<bool> = {
            let mut seen = vec![false; n];
            for s in &cleaned {
                for &v in s {
                    seen[v] = true;
                }
            }
            seen
        };
        for (v, seen) in covered.iter().enumerate() {
            if !seen {
                cleaned.push(vec![v]);
            }
        }
        cleaned.sort();
        cleaned.dedup();
        let maximal: Vec<Vec<usize>> = cleaned
            .iter()
            .filter(|s| {
                !cleaned
                    .iter()
                    .any(|t| t.len() > s.len() && s.iter().all(|v| t.binary_search(v).is_ok()))
            })
            .cloned()
            .collect();
        SimplicialComplex {
            vertex_labels,
            maximal,
        }
    }

    pub fn point(label: &str) -> Self {
        SimplicialComplex::from_maximal(vec![label.to_string()], vec![vec![0]])
    }

    /// The full simplex on the given vertices.
    pub fn full_simplex(vertex_labels: Vec<String>) -> Self {
        let all: Vec<usize> = (0..vertex_labels.len()).collect();
        SimplicialComplex::from_maximal(vertex_labels, vec![all])
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_labels.len()
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertex_labels
    }

    pub fn maximal_simplices(&self) -> &[Vec<usize>] {
        &self.maximal
    }

    pub fn dim(&self) -> usize {
        self.maximal
            .iter()
            .map(|s| s.len().saturating_sub(1))
            .max()
            .unwrap_or(0)
    }

    pub fn is_full_simplex(&self) -> bool {
        self.maximal.len() == 1 && self.maximal[0].len() == self.vertex_count()
    }

    /// All simplices with `k+1` vertices, sorted lexicographically.
    pub fn simplices_of_dim(&self, k: usize) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self
            .maximal
            .iter()
            .filter(|s| s.len() > k)
            .flat_map(|s| s.iter().copied().combinations(k + 1))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Total number of nonempty simplices; only sensible at small scale.
    pub fn simplex_count(&self) -> usize {
        (0..=self.dim()).map(|k| self.simplices_of_dim(k).len()).sum()
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {name} {{\n");
        for (i, l) in self.vertex_labels.iter().enumerate() {
            out.push_str(&format!("  v{} [label=\"{}\"];\n", i, l));
        }
        for e in self.simplices_of_dim(1) {
            out.push_str(&format!("  v{} -- v{};\n", e[0], e[1]));
        }
        out.push_str("}\n");
        out
    }
}
