use num::{BigInt, One};

use super::{lattice_count, VPolytope};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::poly::{IntPolynomial, RatPolynomial};

/// Ehrhart polynomial and `h*`-vector of a lattice polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhrhartData {
    pub dimension: usize,
    /// `L(0), …, L(dim)`.
    pub counts: Vec<u64>,
    pub polynomial: RatPolynomial,
    pub h_star: IntPolynomial,
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `h*_j = Σ_{i ≤ j} (-1)^i C(d+1, i) L(j - i)` for `j = 0..=d`, where
/// `counts` holds `L(0..=d)`.
pub fn h_star_from_counts(counts: &[u64]) -> IntPolynomial {
    let d = counts.len() - 1;
    let coefficients = (0..=d)
        .map(|j| {
            (0..=j).fold(BigInt::from(0), |acc, i| {
                let term = binomial(d + 1, i) * BigInt::from(counts[j - i]);
                if i % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect();
    IntPolynomial::new(coefficients)
}

/// Counts `L(0..=dim)`, interpolates the Ehrhart polynomial through them
/// and transforms to `h*`. Rational polytopes are refused.
pub fn ehrhart(p: &VPolytope) -> Result<EhrhartData> {
    if let Some(i) = p.vertices().iter().position(|v| !crate::exact::is_integral(v)) {
        return Err(Error::NotLattice(i));
    }
    let d = p.dimension();
    let counts: Vec<u64> = (0..=d as u64).map(|t| lattice_count(p, t)).collect();
    if counts[0] != 1 {
        return Err(Error::Mismatch(format!("L(0) = {}", counts[0])));
    }
    let nodes: Vec<(Rational, Rational)> = counts
        .iter()
        .enumerate()
        .map(|(t, &c)| (Rational::from_integer(t.into()), Rational::from_integer(c.into())))
        .collect();
    let polynomial = RatPolynomial::interpolate(&nodes);
    Ok(EhrhartData { dimension: d, h_star: h_star_from_counts(&counts), counts, polynomial })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};

    #[test]
    fn unit_segment() {
        let seg = VPolytope::from_int_points(&[[0], [1]]).unwrap();
        let e = ehrhart(&seg).unwrap();
        assert_eq!(e.polynomial, RatPolynomial::new(vec![rat(1), rat(1)]));
        assert_eq!(e.h_star, IntPolynomial::from_i64(&[1]));
    }

    #[test]
    fn hexagon() {
        let hex = VPolytope::from_int_points(&[[1, 0], [1, 1], [0, 1], [-1, 0], [-1, -1], [0, -1]])
            .unwrap();
        let e = ehrhart(&hex).unwrap();
        assert_eq!(e.counts, vec![1, 7, 19]);
        assert_eq!(e.polynomial, RatPolynomial::new(vec![rat(1), rat(3), rat(3)]));
        assert_eq!(e.h_star, IntPolynomial::from_i64(&[1, 4, 1]));
    }

    #[test]
    fn standard_triangle_has_half_volume() {
        let tri = VPolytope::from_int_points(&[[0, 0], [1, 0], [0, 1]]).unwrap();
        let e = ehrhart(&tri).unwrap();
        assert_eq!(e.polynomial.coefficient(2), ratio(1, 2));
        assert_eq!(e.h_star, IntPolynomial::one());
    }

    #[test]
    fn refuses_rational_vertices() {
        let p = VPolytope::new(1, vec![vec![rat(0)], vec![ratio(1, 2)]]).unwrap();
        assert!(matches!(ehrhart(&p), Err(Error::NotLattice(1))));
    }
}
