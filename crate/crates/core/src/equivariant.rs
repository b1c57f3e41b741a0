//! The `S_n` action on `P_{n-1}`: action matrices, orbits, fixed
//! polytopes and the equivariant `H*`-series.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use num::BigInt;

use crate::error::{Error, Result};
use crate::exact::{determinant, rat, RatMatrix, RatVector, Rational};
use crate::family::{self, eulerian_polynomial, vertex_u, SubsetLabel};
use crate::poly::{IntPolynomial, RatPolynomial};
use crate::polytope::{h_star_from_counts, zonotope, VPolytope};

/// A permutation of `[n]` in one-line notation (1-based images).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &i in &images {
            if i == 0 || i > n || seen[i] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection of [{n}]")));
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self { images: (1..=n).collect() }
    }

    /// Cycle notation such as `(2 4)(1 3)`, `(24)` or `()`, or one-line
    /// notation such as `1 4 3 2`.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if !text.starts_with('(') {
            let images = text
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| Error::InvalidPermutation(format!("bad entry {s:?}"))))
                .collect::<Result<Vec<_>>>()?;
            if images.len() != n {
                return Err(Error::InvalidPermutation(format!(
                    "one-line notation has {} entries, expected {n}",
                    images.len()
                )));
            }
            return Self::from_images(images);
        }
        let mut images: Vec<usize> = (1..=n).collect();
        let mut used = BTreeSet::new();
        let mut rest = text;
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(Error::InvalidPermutation(format!("expected '(' in {text:?}")));
            };
            let close = body
                .find(')')
                .ok_or_else(|| Error::InvalidPermutation(format!("unclosed cycle in {text:?}")))?;
            let inner = &body[..close];
            rest = body[close + 1..].trim_start();
            let elements: Vec<usize> = if inner.contains(|c: char| c.is_whitespace() || c == ',') {
                inner
                    .split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|s| !s.is_empty())
                    .map(|s| s.parse().map_err(|_| Error::InvalidPermutation(format!("bad entry {s:?}"))))
                    .collect::<Result<_>>()?
            } else {
                inner
                    .chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or_else(|| Error::InvalidPermutation(format!("bad entry {c:?}")))
                    })
                    .collect::<Result<_>>()?
            };
            for (k, &a) in elements.iter().enumerate() {
                if a == 0 || a > n || !used.insert(a) {
                    return Err(Error::InvalidPermutation(format!("element {a} repeated or outside [{n}]")));
                }
                images[a - 1] = elements[(k + 1) % elements.len()];
            }
        }
        Self::from_images(images)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `σ(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&i| self.apply(i)).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// Cycles with fixed points as 1-cycles, each starting at its least
    /// element, ordered by least element except that the cycle containing
    /// `n` comes last.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut next = self.apply(start);
            while next != start {
                seen[next] = true;
                cycle.push(next);
                next = self.apply(next);
            }
            cycles.push(cycle);
        }
        if let Some(pos) = cycles.iter().position(|c| c.contains(&n)) {
            let last = cycles.remove(pos);
            cycles.push(last);
        }
        cycles
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    /// Cycle lengths in decreasing order, e.g. `[2, 1, 1]`.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    /// All of `S_n` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        (1..=n).permutations(n).map(|images| Permutation { images }).collect()
    }

    /// `σ·I = {σ(i) : i ∈ I}`.
    pub fn act_on(&self, label: &SubsetLabel) -> SubsetLabel {
        SubsetLabel::new(label.n(), label.members().iter().map(|&i| self.apply(i)).collect())
            .expect("image of a proper subset is proper")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let moved: Vec<String> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| format!("({})", c.iter().map(ToString::to_string).join(" ")))
            .collect();
        if moved.is_empty() {
            write!(f, "()")
        } else {
            write!(f, "{}", moved.concat())
        }
    }
}

/// `M_σ` on `R^{n-1}`: entry `(i, j)` is `1` if `σ(j) = i`, `-1` if
/// `σ(j) = n`, and `0` otherwise. It sends `u_I` to `u_{σ·I}`.
pub fn action_matrix(sigma: &Permutation) -> Result<RatMatrix> {
    let n = sigma.n();
    if n < 2 {
        return Err(Error::OutOfRange("the action needs n ≥ 2".into()));
    }
    let mut m = RatMatrix::zeros(n - 1, n - 1);
    for j in 1..n {
        let image = sigma.apply(j);
        for i in 1..n {
            if image == i {
                m.set(i - 1, j - 1, rat(1));
            } else if image == n {
                m.set(i - 1, j - 1, rat(-1));
            }
        }
    }
    Ok(m)
}

/// Orbits of the vertex labels under `S_n`, found by closing under the
/// action matrices of the generators `(1 2)` and `(1 2 … n)`.
pub fn orbits(n: usize) -> Result<Vec<Vec<SubsetLabel>>> {
    let labels = family::subset_labels(n)?;
    let by_vertex: BTreeMap<RatVector, usize> =
        labels.iter().enumerate().map(|(i, l)| (vertex_u(l), i)).collect();
    let mut swap: Vec<usize> = (1..=n).collect();
    swap.swap(0, 1);
    let rotate: Vec<usize> = (1..=n).map(|i| i % n + 1).collect();
    let generators = [swap, rotate]
        .into_iter()
        .map(|images| action_matrix(&Permutation::from_images(images)?))
        .collect::<Result<Vec<_>>>()?;

    let mut orbit_of = vec![usize::MAX; labels.len()];
    let mut orbits = Vec::new();
    for start in 0..labels.len() {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut members = vec![start];
        orbit_of[start] = id;
        let mut k = 0;
        while k < members.len() {
            let v = vertex_u(&labels[members[k]]);
            for g in &generators {
                let image = by_vertex
                    .get(&g.mul_vec(&v))
                    .copied()
                    .ok_or_else(|| Error::Mismatch("action left the vertex set".into()))?;
                if orbit_of[image] == usize::MAX {
                    orbit_of[image] = id;
                    members.push(image);
                }
            }
            k += 1;
        }
        members.sort_unstable();
        orbits.push(members.into_iter().map(|i| labels[i].clone()).collect());
    }
    Ok(orbits)
}

/// `Z(u_{α̃_1}, …, u_{α̃_k})` for the cycle supports `α̃_i` of `σ`.
pub fn fixed_polytope(sigma: &Permutation) -> Result<VPolytope> {
    let n = sigma.n();
    if n < 2 {
        return Err(Error::OutOfRange("the action needs n ≥ 2".into()));
    }
    let generators: Vec<RatVector> = sigma
        .cycles()
        .iter()
        .map(|c| {
            c.iter().fold(vec![Rational::from_integer(0.into()); n - 1], |acc, &i| {
                crate::exact::add_vectors(&acc, &family::generator_u(n, i))
            })
        })
        .collect();
    zonotope(&generators)
}

/// `(t+1)^k − t^k` for `k` cycles, the number of lattice points of
/// `(tP_{n-1})^σ`.
pub fn fixed_ehrhart(sigma: &Permutation) -> IntPolynomial {
    let k = sigma.cycle_count();
    let row: Vec<BigInt> = (0..k)
        .map(|j| (0..j).fold(BigInt::from(1), |acc, i| acc * (k - i) / (i + 1)))
        .collect();
    IntPolynomial::new(row)
}

/// `det(I − M_σ z)`, from exact determinants at `z = 0, …, n−1` and
/// interpolation.
pub fn character_det(sigma: &Permutation) -> Result<IntPolynomial> {
    let m = action_matrix(sigma)?;
    let d = m.rows();
    let mut nodes = Vec::with_capacity(d + 1);
    for z in 0..=d as i64 {
        let mut a = RatMatrix::identity(d);
        for i in 0..d {
            for j in 0..d {
                let v = a.get(i, j) - m.get(i, j) * rat(z);
                a.set(i, j, v);
            }
        }
        nodes.push((rat(z), determinant(&a)?));
    }
    RatPolynomial::interpolate(&nodes)
        .to_integer()
        .ok_or_else(|| Error::Mismatch("characteristic polynomial is not integral".into()))
}

/// `∏_i (1 − z^{|α̃_i|})`, the denominator of `Σ_t χ_{tP}(σ) z^t`. It
/// equals `(1 − z) det(I − M_σ z)`.
pub fn cycle_product(sigma: &Permutation) -> IntPolynomial {
    sigma.cycles().iter().map(|c| IntPolynomial::one_minus_power(c.len())).product()
}

/// The equivariant `H*`-series at one permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HStarSeries {
    pub sigma: Permutation,
    pub cycle_type: Vec<usize>,
    /// `H*[z](σ)`.
    pub numerator: IntPolynomial,
    /// `Σ_t χ_{tP}(σ) z^t = numerator / denominator`.
    pub denominator: IntPolynomial,
    /// Exponent `k` with `Ehr_{P^σ}(z) = A_k(z) / (1 − z)^k`.
    pub denominator_exponent: usize,
}

/// `H*[z](σ)` computed twice: from `A_k(z) ∏_j [|α̃_j|]_z`, and from
/// `(1 − z) det(I − M_σ z) · Ehr_{P^σ}(z)` with the Ehrhart series of the
/// fixed polytope taken from its lattice point counts. Disagreement is an
/// error.
pub fn hstar_series(sigma: &Permutation) -> Result<HStarSeries> {
    let cycles = sigma.cycles();
    let k = cycles.len();
    let closed = &eulerian_polynomial(k)?
        * &cycles.iter().map(|c| IntPolynomial::geometric(c.len())).product::<IntPolynomial>();

    let ehrhart = fixed_ehrhart(sigma);
    let counts: Vec<u64> = (0..k as u64)
        .map(|t| {
            let v = ehrhart.eval(&BigInt::from(t));
            u64::try_from(v).expect("lattice point counts are nonnegative")
        })
        .collect();
    let fixed_h_star = h_star_from_counts(&counts);
    let one_minus_z = IntPolynomial::one_minus_power(1);
    let det = character_det(sigma)?;
    let via_series = (&(&one_minus_z * &det) * &fixed_h_star)
        .div_exact(&one_minus_z.pow(k))
        .ok_or_else(|| Error::Mismatch(format!("H* for {sigma} is not a polynomial")))?;
    if via_series != closed {
        return Err(Error::Mismatch(format!(
            "H* for {sigma}: closed form {closed:#} but series gives {via_series:#}"
        )));
    }
    Ok(HStarSeries {
        sigma: sigma.clone(),
        cycle_type: sigma.cycle_type(),
        numerator: closed,
        denominator: cycle_product(sigma),
        denominator_exponent: k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::build_family_polytope;

    fn perm(n: usize, s: &str) -> Permutation {
        Permutation::parse(n, s).unwrap()
    }

    #[test]
    fn parsing() {
        assert_eq!(perm(4, "(2 4)").images(), &[1, 4, 3, 2]);
        assert_eq!(perm(4, "(24)"), perm(4, "1 4 3 2"));
        assert_eq!(perm(4, "(1 2)(3 4)").images(), &[2, 1, 4, 3]);
        assert_eq!(perm(3, "()"), Permutation::identity(3));
        assert!(Permutation::parse(4, "(1 1)").is_err());
        assert!(Permutation::parse(4, "1 2 3").is_err());
        assert!(Permutation::parse(4, "(1 5)").is_err());
        assert!(Permutation::parse(3, "1 1 2").is_err());
        assert_eq!(perm(4, "(1 2)(3 4)").to_string(), "(1 2)(3 4)");
    }

    #[test]
    fn cycle_decomposition_puts_n_last() {
        let s = perm(4, "(1 4)(2 3)");
        assert_eq!(s.cycles(), vec![vec![2, 3], vec![1, 4]]);
        assert_eq!(perm(4, "(2 4)").cycles(), vec![vec![1], vec![3], vec![2, 4]]);
        assert_eq!(perm(4, "(1 2 3)").cycle_type(), vec![3, 1]);
    }

    #[test]
    fn composition_and_inverse() {
        let a = perm(4, "(1 2 3 4)");
        assert_eq!(a.compose(&a.inverse()), Permutation::identity(4));
        assert_eq!(a.compose(&a), perm(4, "(1 3)(2 4)"));
    }

    #[test]
    fn action_matrix_examples() {
        assert_eq!(action_matrix(&Permutation::identity(4)).unwrap(), RatMatrix::identity(3));
        let m = action_matrix(&perm(3, "(2 3)")).unwrap();
        let u = |members: &[usize]| vertex_u(&SubsetLabel::new(3, members.to_vec()).unwrap());
        assert_eq!(m.mul_vec(&u(&[1])), u(&[1]));
        assert_eq!(m.mul_vec(&u(&[2, 3])), u(&[2, 3]));
        assert_eq!(m.mul_vec(&u(&[2])), u(&[3]));
        assert_eq!(m.mul_vec(&u(&[1, 2])), u(&[1, 3]));
    }

    #[test]
    fn action_permutes_labels() {
        for n in 2..=5 {
            let labels = family::subset_labels(n).unwrap();
            for sigma in Permutation::all(n) {
                let m = action_matrix(&sigma).unwrap();
                for l in &labels {
                    assert_eq!(m.mul_vec(&vertex_u(l)), vertex_u(&sigma.act_on(l)));
                }
            }
        }
    }

    #[test]
    fn orbit_sizes() {
        let sizes = |n| orbits(n).unwrap().iter().map(Vec::len).collect::<Vec<_>>();
        assert_eq!(sizes(2), vec![2]);
        assert_eq!(sizes(3), vec![3, 3]);
        let mut s4 = sizes(4);
        s4.sort_unstable();
        assert_eq!(s4, vec![4, 4, 6]);
        for orbit in orbits(5).unwrap() {
            let m = orbit[0].members().len();
            assert!(orbit.iter().all(|l| l.members().len() == m));
        }
    }

    #[test]
    fn fixed_polytope_examples() {
        let seg = fixed_polytope(&perm(3, "(2 3)")).unwrap();
        assert_eq!(seg.dimension(), 1);
        assert_eq!(seg.vertex_count(), 2);
        let hex = fixed_polytope(&perm(4, "(2 4)")).unwrap();
        assert_eq!(hex.vertex_count(), 6);
        assert_eq!(hex.dimension(), 2);
        let point = fixed_polytope(&perm(4, "(1 2 3 4)")).unwrap();
        assert_eq!(point.vertex_count(), 1);
        assert!(point.vertices()[0].iter().all(|x| *x == rat(0)));
    }

    #[test]
    fn fixed_polytope_matches_generic_oracle() {
        let p = build_family_polytope(4).unwrap();
        for sigma in Permutation::all(4) {
            let generic = crate::polytope::fixed_subpolytope(&p, &action_matrix(&sigma).unwrap()).unwrap();
            assert!(fixed_polytope(&sigma).unwrap().same_vertex_set(&generic), "{sigma}");
        }
    }

    #[test]
    fn fixed_ehrhart_rows() {
        assert_eq!(fixed_ehrhart(&perm(4, "(1 2)")), IntPolynomial::from_i64(&[1, 3, 3]));
        assert_eq!(fixed_ehrhart(&perm(4, "(1 2)(3 4)")), IntPolynomial::from_i64(&[1, 2]));
        assert_eq!(fixed_ehrhart(&perm(4, "(1 2 3 4)")), IntPolynomial::one());
        assert_eq!(fixed_ehrhart(&Permutation::identity(4)), IntPolynomial::from_i64(&[1, 4, 6, 4]));
    }

    #[test]
    fn determinant_and_cycle_product() {
        let one_minus_z = IntPolynomial::one_minus_power(1);
        assert_eq!(character_det(&Permutation::identity(4)).unwrap(), one_minus_z.pow(3));
        assert_eq!(character_det(&perm(4, "(1 2 3 4)")).unwrap(), IntPolynomial::geometric(4));
        for sigma in Permutation::all(4) {
            let det = character_det(&sigma).unwrap();
            assert_eq!(&one_minus_z * &det, cycle_product(&sigma), "{sigma}");
        }
        assert_eq!(cycle_product(&perm(4, "(1 2 3 4)")), IntPolynomial::one_minus_power(4));
        assert_eq!(cycle_product(&perm(4, "(1 2)(3 4)")), IntPolynomial::one_minus_power(2).pow(2));
    }

    #[test]
    fn hstar_table_rows() {
        let h = |s: &str| hstar_series(&perm(4, s)).unwrap().numerator;
        assert_eq!(h("()"), IntPolynomial::from_i64(&[1, 11, 11, 1]));
        assert_eq!(h("(1 2)"), IntPolynomial::from_i64(&[1, 5, 5, 1]));
        assert_eq!(h("(1 2)(3 4)"), IntPolynomial::from_i64(&[1, 3, 3, 1]));
        assert_eq!(h("(1 2 3)"), IntPolynomial::from_i64(&[1, 2, 2, 1]));
        assert_eq!(h("(1 2 3 4)"), IntPolynomial::from_i64(&[1, 1, 1, 1]));
    }
}
