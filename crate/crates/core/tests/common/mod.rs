#![allow(dead_code)]

use itertools::Itertools;
use num::{BigInt, Signed, Zero};
use omclab::exact::{determinant, dot, rank_of_vectors, rat, solve_unique, sub_vectors, RatMatrix, RatVector, Rational};
use omclab::matroid::{CircuitSet, Digraph, SignedSet};
use omclab::polytope::VPolytope;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x6f6d_636c_6162;

pub fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED ^ salt)
}

/// Connected simple digraphs on 3 to 6 nodes with at least as many edges as
/// nodes (so each has a cycle), random orientations. Edge counts stay at
/// most `|V| + 3` to keep circuit counts small.
pub fn graph_corpus(count: usize) -> Vec<Digraph> {
    let mut rng = rng(1);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(3..=6);
        let mut pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
        let max_edges = pairs.len().min(n + 3);
        let m = rng.gen_range(n..=max_edges);
        // A random spanning tree first, then extra edges.
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let mut chosen: Vec<(usize, usize)> = (1..n)
            .map(|i| {
                let j = order[rng.gen_range(0..i)];
                let (a, b) = (order[i].min(j), order[i].max(j));
                (a, b)
            })
            .collect();
        pairs.retain(|p| !chosen.contains(p));
        pairs.shuffle(&mut rng);
        chosen.extend(pairs.into_iter().take(m - (n - 1)));
        let edges = chosen
            .into_iter()
            .map(|(a, b)| if rng.gen_bool(0.5) { (a, b) } else { (b, a) })
            .collect();
        out.push(Digraph::new(n, edges).unwrap());
    }
    out
}

/// Random integer matrices with small entries.
pub fn matrix_corpus(count: usize) -> Vec<RatMatrix> {
    let mut rng = rng(2);
    (0..count)
        .map(|_| {
            let rows = rng.gen_range(1..=3);
            let cols = rng.gen_range(rows..=6);
            let entries: Vec<Vec<i64>> =
                (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-2..=2)).collect()).collect();
            RatMatrix::from_int_rows(&entries).unwrap()
        })
        .collect()
}

pub fn signed(ground: usize, pos: &[usize], neg: &[usize]) -> SignedSet {
    let shift = |v: &[usize]| v.iter().map(|e| e - 1).collect();
    SignedSet::new(ground, shift(pos), shift(neg)).unwrap()
}

pub fn first_example_matrix() -> RatMatrix {
    RatMatrix::from_int_rows(&[[0, -1, -1, 0, 0, 0], [14, -1, -9, 0, 0, 0], [1, 5, -1, 1, 0, 1]]).unwrap()
}

pub fn d3_matrix() -> RatMatrix {
    RatMatrix::from_int_rows(&[[1, 1, 1, 1, 0, 0], [1, -1, 0, 0, 1, 1], [0, 0, 1, -1, 1, -1]]).unwrap()
}

pub fn b3_matrix() -> RatMatrix {
    RatMatrix::from_int_rows(&[
        [1, 0, 0, 1, 1, 1, 1, 0, 0],
        [0, 1, 0, 1, -1, 0, 0, 1, 1],
        [0, 0, 1, 0, 0, 1, -1, 1, -1],
    ])
    .unwrap()
}

/// Circuit family of `[v_1 … v_k]` read straight from its sign-vector
/// definition: minimal column subsets whose kernel is a line with full
/// support, both signs of the spanning vector.
pub fn brute_force_circuits(m: &RatMatrix) -> CircuitSet {
    let n = m.cols();
    let mut found: Vec<SignedSet> = Vec::new();
    for size in 1..=n {
        for cols in (0..n).combinations(size) {
            if found.iter().any(|c| c.support().iter().all(|e| cols.contains(e))) {
                continue;
            }
            let sub = m.select_columns(&cols);
            let kernel = omclab::exact::kernel_basis(&sub);
            if kernel.len() != 1 || kernel[0].iter().any(Zero::is_zero) {
                continue;
            }
            let mut full = vec![Rational::zero(); n];
            for (k, &c) in cols.iter().enumerate() {
                full[c] = kernel[0][k].clone();
            }
            let x = SignedSet::from_vector(&full);
            found.push(x.negated());
            found.push(x);
        }
    }
    CircuitSet::new(n, found).unwrap()
}

/// Barycentric membership: `x ∈ conv(V)` iff some affinely independent
/// `(d+1)`-subset of `V` holds `x` with nonnegative weights. Each simplex
/// keeps the inverse of a square system picked from its coordinate rows
/// and `Σλ = 1`, plus the remaining rows to check consistency.
pub struct CaratheodoryOracle {
    ambient: usize,
    simplices: Vec<Simplex>,
}

struct Simplex {
    rows: Vec<RatVector>,
    basis: Vec<usize>,
    inverse: Vec<RatVector>,
}

impl Simplex {
    fn new(vertices: &[RatVector], ambient: usize) -> Option<Self> {
        let k = vertices.len();
        let mut rows: Vec<RatVector> = (0..ambient).map(|i| vertices.iter().map(|v| v[i].clone()).collect()).collect();
        rows.push(vec![rat(1); k]);
        let basis = (0..rows.len())
            .combinations(k)
            .find(|idx| rank_of_vectors(&idx.iter().map(|&i| rows[i].clone()).collect::<Vec<_>>()) == k)?;
        let pick: Vec<RatVector> = basis.iter().map(|&i| rows[i].clone()).collect();
        // Column j of the inverse solves pick · c = e_j.
        let columns: Vec<RatVector> = (0..k)
            .map(|j| {
                let e: Vec<Rational> = (0..k).map(|i| rat(i64::from(i == j))).collect();
                solve_unique(&pick, &e, k).expect("basis rows are independent")
            })
            .collect();
        let inverse = (0..k).map(|i| columns.iter().map(|c| c[i].clone()).collect()).collect();
        Some(Self { rows, basis, inverse })
    }

    fn contains(&self, x: &[Rational]) -> bool {
        let mut rhs: RatVector = x.to_vec();
        rhs.push(rat(1));
        let picked: RatVector = self.basis.iter().map(|&i| rhs[i].clone()).collect();
        let lambda: RatVector = self.inverse.iter().map(|row| dot(row, &picked)).collect();
        lambda.iter().all(|l| !l.is_negative()) && self.rows.iter().zip(&rhs).all(|(r, b)| dot(r, &lambda) == *b)
    }
}

impl CaratheodoryOracle {
    pub fn new(p: &VPolytope) -> Self {
        let d = p.dimension();
        let ambient = p.ambient_dim();
        let simplices = p
            .vertices()
            .iter()
            .cloned()
            .combinations(d + 1)
            .filter(|s| {
                let diffs: Vec<RatVector> = s[1..].iter().map(|v| sub_vectors(v, &s[0])).collect();
                rank_of_vectors(&diffs) == d
            })
            .filter_map(|s| Simplex::new(&s, ambient))
            .collect();
        Self { ambient, simplices }
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.simplices.iter().any(|s| s.contains(x))
    }

    /// Integer points `x` with `x / t ∈ P`, `t ≥ 1`, scanning the bounding
    /// box of `tP`.
    pub fn count(&self, p: &VPolytope, t: i64) -> u64 {
        assert!(t >= 1);
        let bounds: Vec<(i64, i64)> = (0..self.ambient)
            .map(|i| {
                let vals = p.vertices().iter().map(|v| &v[i] * rat(t));
                let lo = vals.clone().min().unwrap().floor().to_integer();
                let hi = vals.max().unwrap().ceil().to_integer();
                (i64::try_from(lo).unwrap(), i64::try_from(hi).unwrap())
            })
            .collect();
        let scale = Rational::new(1.into(), t.into());
        bounds
            .iter()
            .map(|&(lo, hi)| lo..=hi)
            .multi_cartesian_product()
            .filter(|x| self.contains(&x.iter().map(|&c| rat(c) * &scale).collect::<Vec<_>>()))
            .count() as u64
    }
}

/// Euclidean volume of the zonotope of `d`-dimensional generators:
/// `Σ |det(g_{i_1}, …, g_{i_d})|` over `d`-subsets.
pub fn zonotope_volume(generators: &[RatVector]) -> Rational {
    let d = generators[0].len();
    generators
        .iter()
        .cloned()
        .combinations(d)
        .map(|cols| determinant(&RatMatrix::from_columns(d, &cols).unwrap()).unwrap().abs())
        .sum()
}

pub fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::from(1), |a, i| a * i)
}
