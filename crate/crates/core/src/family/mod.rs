//! The cocircuit polytopes `P_{n-1}` of the complete graphs `K_n`.
//!
//! Vertices are indexed by proper nonempty subsets `I ⊂ [n]` (the side of
//! the cut containing the tails). In the edge coordinates `x_ij` of
//! `R^{C(n,2)}` the vertex is `û_I`; projecting to the coordinates
//! `x_{1n}, …, x_{n-1,n}` gives `u_I = Σ_{i∈I} u_i` with `u_i = e_i` for
//! `i < n` and `u_n = -𝟙`, so the projected polytope is the zonotope of
//! `e_1, …, e_{n-1}, -𝟙`.

mod closed;
mod faces;
mod sep;

use std::fmt;

use num::Zero;

use crate::error::{Error, Result};
use crate::exact::{int_vector, rat, RatMatrix, RatVector, Rational};
use crate::polytope::{Constraint, VPolytope};

pub use closed::{eulerian_number, eulerian_polynomial, f_polynomial, family_ehrhart};
pub use faces::{
    face_from_label, face_lattice_poset, graphic_face_vertices, CycleDirection, FaceLabel,
    FacePoset, FlatOrientation,
};
pub use sep::{symmetric_edge_polytope, symmetric_edge_polytope_complete};

/// Largest `n` accepted by the family constructors.
pub const MAX_FAMILY_N: usize = 16;

fn check_n(n: usize, min: usize) -> Result<()> {
    if n < min || n > MAX_FAMILY_N {
        return Err(Error::OutOfRange(format!("n = {n}, expected {min} ≤ n ≤ {MAX_FAMILY_N}")));
    }
    Ok(())
}

/// A proper nonempty subset of `[n]`, stored 1-based and sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetLabel {
    n: usize,
    members: Vec<usize>,
}

impl SubsetLabel {
    pub fn new(n: usize, mut members: Vec<usize>) -> Result<Self> {
        check_n(n, 2)?;
        members.sort_unstable();
        members.dedup();
        if members.is_empty() || members.len() == n {
            return Err(Error::InvalidLabel(format!("{members:?} is not a proper nonempty subset of [{n}]")));
        }
        if let Some(&bad) = members.iter().find(|&&i| i == 0 || i > n) {
            return Err(Error::InvalidLabel(format!("element {bad} outside [{n}]")));
        }
        Ok(Self { n, members })
    }

    pub(crate) fn from_mask(n: usize, mask: u64) -> Self {
        Self { n, members: (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn complement(&self) -> Self {
        Self { n: self.n, members: (1..=self.n).filter(|i| !self.contains(*i)).collect() }
    }
}

impl fmt::Display for SubsetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// All labels for `n`, in increasing bitmask order. This is the vertex order
/// of [`build_family_polytope`].
pub fn subset_labels(n: usize) -> Result<Vec<SubsetLabel>> {
    check_n(n, 2)?;
    Ok((1..(1u64 << n) - 1).map(|m| SubsetLabel::from_mask(n, m)).collect())
}

/// Lexicographic list of the pairs `(i, j)`, `1 ≤ i < j ≤ n`.
pub fn edge_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect()
}

/// `û_I` in the edge coordinates `x_ij`: `+1` when the edge leaves `I`,
/// `-1` when it enters `I`.
pub fn vertex_u_hat(label: &SubsetLabel) -> RatVector {
    edge_pairs(label.n)
        .into_iter()
        .map(|(i, j)| match (label.contains(i), label.contains(j)) {
            (true, false) => rat(1),
            (false, true) => rat(-1),
            _ => Rational::zero(),
        })
        .collect()
}

/// `u_i` of the projected coordinates.
pub fn generator_u(n: usize, i: usize) -> RatVector {
    let mut v = vec![Rational::zero(); n - 1];
    if i == n {
        v.iter_mut().for_each(|x| *x = rat(-1));
    } else {
        v[i - 1] = rat(1);
    }
    v
}

/// `u_I = Σ_{i∈I} u_i`.
pub fn vertex_u(label: &SubsetLabel) -> RatVector {
    let n = label.n;
    label.members.iter().fold(vec![Rational::zero(); n - 1], |acc, &i| {
        crate::exact::add_vectors(&acc, &generator_u(n, i))
    })
}

/// Position (1-based) of the coordinate `x_{in}` in the lexicographic edge
/// order: `i·n − C(i+1, 2)`.
pub fn pi_column(n: usize, i: usize) -> usize {
    i * n - i * (i + 1) / 2
}

/// The `(n-1) × C(n,2)` coordinate projection keeping `x_{1n}, …, x_{n-1,n}`.
pub fn pi_matrix(n: usize) -> RatMatrix {
    let cols = n * (n - 1) / 2;
    let mut m = RatMatrix::zeros(n - 1, cols);
    for i in 1..n {
        m.set(i - 1, pi_column(n, i) - 1, rat(1));
    }
    m
}

/// Keeps the coordinates `x_{1n}, …, x_{n-1,n}` of a vector in `R^{C(n,2)}`.
pub fn project_pi(n: usize, v: &[Rational]) -> Result<RatVector> {
    if v.len() != n * (n - 1) / 2 {
        return Err(Error::Shape(format!("vector of length {} for n = {n}", v.len())));
    }
    Ok((1..n).map(|i| v[pi_column(n, i) - 1].clone()).collect())
}

/// `P_{n-1}` in `R^{n-1}`, with the `2^n - 2` vertices `u_I` ordered as in
/// [`subset_labels`].
pub fn build_family_polytope(n: usize) -> Result<VPolytope> {
    let vertices = subset_labels(n)?.iter().map(vertex_u).collect();
    VPolytope::new(n - 1, vertices)
}

/// `P_{n-1}` in its native coordinates `R^{C(n,2)}`.
pub fn build_family_polytope_embedded(n: usize) -> Result<VPolytope> {
    let vertices = subset_labels(n)?.iter().map(vertex_u_hat).collect();
    VPolytope::new(n * (n - 1) / 2, vertices)
}

/// `x_ij − x_in + x_jn = 0` for `1 ≤ i < j ≤ n−1`.
pub fn affine_hull_equations(n: usize) -> Result<Vec<Constraint>> {
    check_n(n, 2)?;
    let pairs = edge_pairs(n);
    let col = |i: usize, j: usize| pairs.iter().position(|&p| p == (i, j)).expect("edge exists");
    Ok(edge_pairs(n - 1)
        .into_iter()
        .map(|(i, j)| {
            let mut a = vec![Rational::zero(); pairs.len()];
            a[col(i, j)] = rat(1);
            a[col(i, n)] = rat(-1);
            a[col(j, n)] = rat(1);
            Constraint { normal: a, bound: Rational::zero() }
        })
        .collect())
}

/// `φ(x) = (−x_1 + 1, x_1 − x_2 + 1, …, x_{n−2} − x_{n−1} + 1, x_{n−1} + 1)`.
pub fn phi_to_graphic_zonotope(x: &[Rational]) -> RatVector {
    let m = x.len();
    let one = rat(1);
    (0..=m)
        .map(|k| {
            let prev = if k == 0 { Rational::zero() } else { x[k - 1].clone() };
            let next = if k == m { Rational::zero() } else { x[k].clone() };
            prev - next + &one
        })
        .collect()
}

/// Edge directions `e_{j+1} − e_j` (indices mod `n`) of the cycle `C_n`.
pub fn cycle_edge_generators(n: usize) -> Vec<RatVector> {
    (0..n)
        .map(|j| {
            let mut v = vec![0i64; n];
            v[j] -= 1;
            v[(j + 1) % n] += 1;
            int_vector(&v)
        })
        .collect()
}

/// The graphic zonotope `Σ_j [e_j, e_{j+1}]` of `C_n`.
pub fn cycle_graphic_zonotope(n: usize) -> Result<VPolytope> {
    check_n(n, 2)?;
    let z = crate::polytope::zonotope(&cycle_edge_generators(n))?;
    let shift = vec![rat(1); n];
    VPolytope::new(n, z.vertices().iter().map(|v| crate::exact::add_vectors(v, &shift)).collect())
}
