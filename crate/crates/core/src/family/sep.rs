use std::collections::BTreeSet;

use super::check_n;
use crate::error::Result;
use crate::exact::{int_vector, RatVector};
use crate::matroid::Digraph;
use crate::polytope::VPolytope;

/// `conv{±(e_i − e_j) : ij ∈ E}`, written in the coordinates
/// `x_1, …, x_{n-1}` of the hyperplane `Σ x_i = 0`. For a connected graph
/// this is full-dimensional with the origin in its interior.
pub fn symmetric_edge_polytope(g: &Digraph) -> Result<VPolytope> {
    let n = g.node_count();
    let mut seen = BTreeSet::new();
    let mut vertices: Vec<RatVector> = Vec::new();
    for &(t, h) in g.edges() {
        if t == h {
            continue;
        }
        let mut v = vec![0i64; n];
        v[t] += 1;
        v[h] -= 1;
        v.pop();
        for w in [v.clone(), v.iter().map(|x| -x).collect()] {
            if seen.insert(w.clone()) {
                vertices.push(int_vector(&w));
            }
        }
    }
    VPolytope::new(n.saturating_sub(1), vertices)
}

/// The symmetric edge polytope of `K_n`.
pub fn symmetric_edge_polytope_complete(n: usize) -> Result<VPolytope> {
    check_n(n, 2)?;
    symmetric_edge_polytope(&Digraph::complete(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::build_family_polytope;
    use crate::polytope::polar_dual;

    #[test]
    fn complete_graph_sep_is_dual_to_the_family() {
        for n in 2..=4 {
            let sep = symmetric_edge_polytope_complete(n).unwrap();
            assert_eq!(sep.vertex_count(), n * (n - 1));
            let dual = polar_dual(&sep).unwrap();
            assert!(dual.same_vertex_set(&build_family_polytope(n).unwrap()), "n = {n}");
        }
    }

    #[test]
    fn sep_is_reflexive() {
        let sep = symmetric_edge_polytope_complete(4).unwrap();
        let back = polar_dual(&polar_dual(&sep).unwrap()).unwrap();
        assert!(back.same_vertex_set(&sep));
    }
}
