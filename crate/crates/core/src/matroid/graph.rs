use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::signed::{CircuitSet, SignedSet};
use crate::error::{Error, Result};
use crate::exact::{rat, RatMatrix};

/// A directed multigraph on nodes `0..node_count`. Loops and parallel edges
/// are allowed; edge order is the coordinate order of the ground set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Digraph {
    node_count: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct DigraphJson {
    nodes: usize,
    edges: Vec<[usize; 2]>,
}

impl Digraph {
    pub fn new(node_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(t, h)) = edges.iter().find(|&&(t, h)| t >= node_count || h >= node_count) {
            return Err(Error::OutOfRange(format!(
                "edge ({}, {}) on a graph with {node_count} nodes",
                t + 1,
                h + 1
            )));
        }
        Ok(Self { node_count, edges })
    }

    /// Edges given with one-based node labels.
    pub fn from_one_based(node_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if edges.iter().any(|&(t, h)| t == 0 || h == 0) {
            return Err(Error::OutOfRange("node labels are 1-based".into()));
        }
        Self::new(node_count, edges.iter().map(|&(t, h)| (t - 1, h - 1)).collect())
    }

    /// `{"nodes": n, "edges": [[tail, head], ...]}` with 1-based nodes.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let raw: DigraphJson = serde_json::from_str(text)?;
        let edges: Vec<(usize, usize)> = raw.edges.iter().map(|e| (e[0], e[1])).collect();
        Self::from_one_based(raw.nodes, &edges)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(DigraphJson {
            nodes: self.node_count,
            edges: self.edges.iter().map(|&(t, h)| [t + 1, h + 1]).collect(),
        })
        .expect("plain struct serializes")
    }

    /// `K_n` with edges `i → j` for `i < j` in lexicographic order.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Self { node_count: n, edges }
    }

    /// The cycle `C_n` with edges `1→2, 2→3, …, n→1`.
    pub fn cycle(n: usize) -> Self {
        let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self { node_count: n, edges }
    }

    /// A single node carrying `loops` loops.
    pub fn bouquet(loops: usize) -> Self {
        Self { node_count: 1, edges: vec![(0, 0); loops] }
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|(t, h)| t == h)
    }

    pub fn without_edge(&self, e: usize) -> Self {
        let mut edges = self.edges.clone();
        edges.remove(e);
        Self { node_count: self.node_count, edges }
    }

    /// Node-by-edge matrix whose column for `t → h` is `e_t − e_h`; loops
    /// give zero columns.
    pub fn incidence_matrix(&self) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.node_count, self.edges.len());
        for (k, &(t, h)) in self.edges.iter().enumerate() {
            if t != h {
                m.set(t, k, rat(1));
                m.set(h, k, rat(-1));
            }
        }
        m
    }

    fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.node_count];
        for (k, &(t, h)) in self.edges.iter().enumerate() {
            if t != h {
                adj[t].push((h, k));
                adj[h].push((t, k));
            }
        }
        adj
    }

    /// Connected components as sorted node lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.node_count];
        let mut out = Vec::new();
        for start in 0..self.node_count {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &(w, _) in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn is_bridge(&self, e: usize) -> bool {
        let (t, h) = self.edges[e];
        t != h && self.without_edge(e).component_count() > self.component_count()
    }

    pub fn bridges(&self) -> Vec<usize> {
        (0..self.edges.len()).filter(|&e| self.is_bridge(e)).collect()
    }

    fn induces_connected(&self, adj: &[Vec<(usize, usize)>], nodes: &BTreeSet<usize>) -> bool {
        let Some(&start) = nodes.iter().next() else {
            return false;
        };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &(w, _) in &adj[v] {
                if nodes.contains(&w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == nodes.len()
    }

    /// Bonds as `(V₁, V₂)` splits of a component, `V₁` holding the
    /// component's smallest node.
    pub fn bonds(&self) -> Vec<(BTreeSet<usize>, BTreeSet<usize>)> {
        let adj = self.adjacency();
        let mut out = Vec::new();
        for comp in self.components() {
            let (root, rest) = comp.split_first().expect("components are nonempty");
            assert!(rest.len() < usize::BITS as usize, "component too large for bond enumeration");
            // V₁ = {root} ∪ (subset of rest); V₂ must be nonempty.
            for mask in 0..(1usize << rest.len()) - 1 {
                let mut side1 = BTreeSet::from([*root]);
                let mut side2 = BTreeSet::new();
                for (i, &v) in rest.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        side1.insert(v);
                    } else {
                        side2.insert(v);
                    }
                }
                if self.induces_connected(&adj, &side1) && self.induces_connected(&adj, &side2) {
                    out.push((side1, side2));
                }
            }
        }
        out
    }
}

/// Circuits of the graphic oriented matroid: one `±` pair per simple cycle
/// of the underlying multigraph (loops and parallel pairs included).
pub fn circuits_from_digraph(g: &Digraph) -> CircuitSet {
    let m = g.edge_count();
    let adj = g.adjacency();
    let mut found = BTreeSet::new();

    for (k, &(t, h)) in g.edges.iter().enumerate() {
        if t == h {
            found.insert(SignedSet::new(m, vec![k], vec![]).expect("valid loop"));
        }
    }

    // Backtracking over edge sequences from the smallest node of each cycle.
    struct Search<'a> {
        g: &'a Digraph,
        adj: &'a [Vec<(usize, usize)>],
        root: usize,
        on_path: Vec<bool>,
        // (edge, traversed forward)
        path: Vec<(usize, bool)>,
        found: &'a mut BTreeSet<SignedSet>,
    }

    impl Search<'_> {
        fn record(&mut self) {
            let m = self.g.edge_count();
            let (mut pos, mut neg) = (Vec::new(), Vec::new());
            for &(e, forward) in &self.path {
                if forward {
                    pos.push(e);
                } else {
                    neg.push(e);
                }
            }
            let c = SignedSet::new(m, pos, neg).expect("simple cycle uses distinct edges");
            self.found.insert(c.canonical());
        }

        fn extend(&mut self, v: usize) {
            for &(w, e) in &self.adj[v] {
                if self.path.iter().any(|&(used, _)| used == e) {
                    continue;
                }
                let forward = self.g.edges[e].0 == v;
                if w == self.root {
                    self.path.push((e, forward));
                    self.record();
                    self.path.pop();
                } else if w > self.root && !self.on_path[w] {
                    self.on_path[w] = true;
                    self.path.push((e, forward));
                    self.extend(w);
                    self.path.pop();
                    self.on_path[w] = false;
                }
            }
        }
    }

    for root in 0..g.node_count() {
        let mut search = Search {
            g,
            adj: &adj,
            root,
            on_path: vec![false; g.node_count()],
            path: Vec::new(),
            found: &mut found,
        };
        search.on_path[root] = true;
        search.extend(root);
    }

    CircuitSet::from_pairs(m, found).expect("all cycles share the ground set")
}

/// Cocircuits of the graphic oriented matroid: one `±` pair per bond, with
/// `C⁺` the edges directed from `V₁` to `V₂`.
pub fn cocircuits_from_digraph(g: &Digraph) -> CircuitSet {
    let m = g.edge_count();
    let reps = g.bonds().into_iter().map(|(side1, _)| {
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for (k, &(t, h)) in g.edges.iter().enumerate() {
            match (side1.contains(&t), side1.contains(&h)) {
                (true, false) => pos.push(k),
                (false, true) => neg.push(k),
                _ => {}
            }
        }
        SignedSet::new(m, pos, neg).expect("bond edges are distinct")
    });
    CircuitSet::from_pairs(m, reps).expect("all bonds share the ground set")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4_minus_24() -> Digraph {
        Digraph::from_one_based(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (3, 4)]).unwrap()
    }

    #[test]
    fn k3_circuits() {
        let c = circuits_from_digraph(&Digraph::complete(3));
        let expected = CircuitSet::from_pairs(3, [SignedSet::from_signs(&[1, -1, 1])]).unwrap();
        assert_eq!(c, expected);
    }

    #[test]
    fn forest_has_no_circuits() {
        let g = Digraph::from_one_based(5, &[(1, 2), (2, 3), (4, 5)]).unwrap();
        assert!(circuits_from_digraph(&g).is_empty());
    }

    #[test]
    fn bouquet_circuits_are_unit_vectors() {
        let c = circuits_from_digraph(&Digraph::bouquet(3));
        assert_eq!(c.len(), 6);
        for e in 0..3 {
            let mut signs = [0i8; 3];
            signs[e] = 1;
            assert!(c.contains(&SignedSet::from_signs(&signs)));
        }
    }

    #[test]
    fn parallel_edges_form_two_cycles() {
        // same direction: traversal uses one forward and one backward
        let g = Digraph::from_one_based(2, &[(1, 2), (1, 2)]).unwrap();
        let c = circuits_from_digraph(&g);
        assert_eq!(c, CircuitSet::from_pairs(2, [SignedSet::from_signs(&[1, -1])]).unwrap());
        // antiparallel: both forward
        let g = Digraph::from_one_based(2, &[(1, 2), (2, 1)]).unwrap();
        let c = circuits_from_digraph(&g);
        assert_eq!(c, CircuitSet::from_pairs(2, [SignedSet::from_signs(&[1, 1])]).unwrap());
    }

    #[test]
    fn k3_cocircuits() {
        let c = cocircuits_from_digraph(&Digraph::complete(3));
        let expected = ["(+,+,0)", "(-,-,0)", "(+,0,-)", "(-,0,+)", "(0,+,+)", "(0,-,-)"];
        assert_eq!(c.len(), 6);
        for s in expected {
            assert!(c.contains(&SignedSet::parse_signs(s).unwrap()), "{s}");
        }
    }

    #[test]
    fn single_edge_is_a_bridge() {
        let g = Digraph::from_one_based(2, &[(1, 2)]).unwrap();
        let c = cocircuits_from_digraph(&g);
        assert_eq!(c, CircuitSet::from_pairs(1, [SignedSet::from_signs(&[1])]).unwrap());
        assert_eq!(g.bridges(), vec![0]);
    }

    #[test]
    fn k4_minus_edge_has_six_bonds() {
        let g = k4_minus_24();
        assert_eq!(g.bonds().len(), 6);
        assert_eq!(cocircuits_from_digraph(&g).len(), 12);
    }

    #[test]
    fn json_round_trip() {
        let g = Digraph::from_json_str(r#"{"nodes": 3, "edges": [[1,2],[1,3],[2,3]]}"#).unwrap();
        assert_eq!(g, Digraph::complete(3));
        assert_eq!(Digraph::from_json_str(&g.to_json_value().to_string()).unwrap(), g);
        assert!(Digraph::from_json_str(r#"{"nodes": 2, "edges": [[0,1]]}"#).is_err());
        assert!(Digraph::from_json_str(r#"{"nodes": 2, "edges": [[1,3]]}"#).is_err());
    }
}
