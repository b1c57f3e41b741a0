use std::collections::BTreeSet;

use itertools::Itertools;
use num::Zero;

use super::facets::{hyperplane_normal, primitive_oriented, Frame};
use super::VPolytope;
use crate::error::{Error, Result};
use crate::exact::{add_vectors, dot, rank_of_vectors, span_basis, RatVector, Rational};

/// Largest generator list [`zonotope`] accepts.
pub const MAX_ZONOTOPE_GENERATORS: usize = 16;

/// `Z(g_1, …, g_m) = {Σ λ_i g_i : 0 ≤ λ_i ≤ 1}`.
///
/// All `2^m` subset sums are formed; a sum is a vertex when the facets
/// through it have normals spanning the direction space. Facet normals of
/// a zonotope are orthogonal to some `dim - 1` generators, so only those
/// candidates are tested. Vertices keep the order of the first subset
/// (as a bitmask) producing them.
pub fn zonotope(generators: &[RatVector]) -> Result<VPolytope> {
    let Some(first) = generators.first() else {
        return Err(Error::Shape("zonotope needs at least one generator".into()));
    };
    let d = first.len();
    if generators.iter().any(|g| g.len() != d) {
        return Err(Error::Shape("generators have different lengths".into()));
    }
    if generators.len() > MAX_ZONOTOPE_GENERATORS {
        return Err(Error::GeneratorGuard { count: generators.len(), limit: MAX_ZONOTOPE_GENERATORS });
    }

    let m = generators.len();
    let mut seen = BTreeSet::new();
    let mut sums = Vec::new();
    for mask in 0u32..(1 << m) {
        let s = (0..m)
            .filter(|i| mask >> i & 1 == 1)
            .fold(vec![Rational::zero(); d], |acc, i| add_vectors(&acc, &generators[i]));
        if seen.insert(s.clone()) {
            sums.push(s);
        }
    }

    let directions = span_basis(generators);
    let dim = directions.len();
    if dim == 0 {
        return VPolytope::new(d, sums);
    }
    let origin = vec![Rational::zero(); d];
    let frame = Frame::new(generators, &origin, &directions);
    let mut normals: BTreeSet<RatVector> = BTreeSet::new();
    for subset in (0..m).combinations(dim - 1) {
        let rows: Vec<RatVector> = subset.iter().map(|&i| frame.coords[i].clone()).collect();
        if let Some(c) = hyperplane_normal(&rows, dim) {
            normals.insert(primitive_oriented(&frame.lift(&c)).expect("nonzero normal"));
        }
    }
    let extremes: Vec<(RatVector, Rational, Rational)> = normals
        .into_iter()
        .map(|c| {
            let (mut hi, mut lo) = (Rational::zero(), Rational::zero());
            for g in generators {
                let v = dot(&c, g);
                if v > Rational::zero() {
                    hi += v;
                } else {
                    lo += v;
                }
            }
            (c, hi, lo)
        })
        .collect();

    let vertices: Vec<RatVector> = sums
        .into_iter()
        .filter(|s| {
            let tight: Vec<RatVector> = extremes
                .iter()
                .filter(|(c, hi, lo)| {
                    let v = dot(c, s);
                    v == *hi || v == *lo
                })
                .map(|(c, _, _)| c.clone())
                .collect();
            rank_of_vectors(&tight) == dim
        })
        .collect();
    VPolytope::new(d, vertices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int_vector;

    #[test]
    fn unit_square() {
        let z = zonotope(&[int_vector(&[1, 0]), int_vector(&[0, 1])]).unwrap();
        assert_eq!(z.vertex_count(), 4);
        assert_eq!(z.dimension(), 2);
    }

    #[test]
    fn three_directions_give_a_hexagon() {
        let z = zonotope(&[int_vector(&[1, 0]), int_vector(&[0, 1]), int_vector(&[-1, -1])]).unwrap();
        let hex = VPolytope::from_int_points(&[[1, 0], [0, 1], [-1, -1], [1, 1], [-1, 0], [0, -1]])
            .unwrap();
        assert!(z.same_vertex_set(&hex));
    }

    #[test]
    fn parallel_generators_make_a_segment() {
        let z = zonotope(&[int_vector(&[1, 1]), int_vector(&[2, 2]), int_vector(&[0, 0])]).unwrap();
        assert_eq!(
            z.vertex_set(),
            [int_vector(&[0, 0]), int_vector(&[3, 3])].into_iter().collect()
        );
    }

    #[test]
    fn guard() {
        let gens = vec![int_vector(&[1]); 17];
        assert!(matches!(zonotope(&gens), Err(Error::GeneratorGuard { count: 17, limit: 16 })));
    }
}
