use itertools::Itertools;
use num::{Signed, Zero};

use super::{Constraint, HRep, VPolytope};
use crate::exact::{dot, kernel_basis, primitive, sub_vectors, RatMatrix, RatVector, Rational};

/// A facet inequality together with the indices of the vertices it is tight on.
#[derive(Clone, Debug)]
pub(crate) struct Facet {
    pub constraint: Constraint,
    pub tight: Vec<usize>,
}

/// Coordinates of points relative to a base point, in a basis of the
/// direction space of their affine hull. The map is injective on the hull,
/// so hyperplane questions inside the hull become full-dimensional ones.
pub(crate) struct Frame<'a> {
    pub directions: &'a [RatVector],
    pub coords: Vec<RatVector>,
}

impl<'a> Frame<'a> {
    pub fn new(points: &[RatVector], origin: &[Rational], directions: &'a [RatVector]) -> Self {
        let coords = points
            .iter()
            .map(|p| {
                let w = sub_vectors(p, origin);
                directions.iter().map(|l| dot(l, &w)).collect()
            })
            .collect();
        Frame { directions, coords }
    }

    /// Lifts frame coefficients `c` to the ambient functional `Σ c_k l_k`.
    pub fn lift(&self, c: &[Rational]) -> RatVector {
        let d = self.directions.first().map_or(0, Vec::len);
        let mut a = vec![Rational::zero(); d];
        for (ck, l) in c.iter().zip(self.directions) {
            if ck.is_zero() {
                continue;
            }
            for (ai, li) in a.iter_mut().zip(l) {
                *ai += ck * li;
            }
        }
        a
    }
}

/// The normal of the hyperplane through the origin of `Q^d` orthogonal to
/// `rows`, when it is unique up to scale.
pub(crate) fn hyperplane_normal(rows: &[RatVector], d: usize) -> Option<RatVector> {
    if rows.is_empty() {
        return (d == 1).then(|| vec![num::one()]);
    }
    let m = RatMatrix::from_rows(rows.to_vec()).expect("rows share a length");
    let kernel = kernel_basis(&m);
    match <[RatVector; 1]>::try_from(kernel) {
        Ok([c]) => Some(c),
        Err(_) => None,
    }
}

/// Primitive integer multiple of `v` pointing the same way.
pub(crate) fn primitive_oriented(v: &[Rational]) -> Option<RatVector> {
    let p = primitive(v)?;
    let lead = |x: &[Rational]| x.iter().find(|c| !c.is_zero()).map(Signed::is_positive);
    Some(if lead(v) == lead(&p) { p } else { p.into_iter().map(|x| -x).collect() })
}

/// Brute-force facet search over affinely independent `dim`-subsets of the
/// points, skipping subsets already covered by a known facet.
pub(crate) fn enumerate(p: &VPolytope) -> Vec<Facet> {
    let d = p.dimension();
    if d == 0 {
        return Vec::new();
    }
    let points = p.vertices();
    let frame = Frame::new(points, &points[0], p.directions());
    let y = &frame.coords;
    let n = points.len();
    let mut found: Vec<Facet> = Vec::new();
    let mut masks: Vec<Vec<bool>> = Vec::new();

    for subset in (0..n).combinations(d) {
        if masks.iter().any(|m| subset.iter().all(|&i| m[i])) {
            continue;
        }
        let base = &y[subset[0]];
        let rows: Vec<RatVector> = subset[1..].iter().map(|&i| sub_vectors(&y[i], base)).collect();
        let Some(c) = hyperplane_normal(&rows, d) else {
            continue;
        };
        let h = dot(&c, base);
        let values: Vec<Rational> = y.iter().map(|yi| dot(&c, yi)).collect();
        let c = if values.iter().all(|v| *v <= h) {
            c
        } else if values.iter().all(|v| *v >= h) {
            c.into_iter().map(|x| -x).collect()
        } else {
            continue;
        };
        let normal = primitive_oriented(&frame.lift(&c)).expect("lifted normal is nonzero");
        let bound = dot(&normal, &points[subset[0]]);
        let mask: Vec<bool> = points.iter().map(|v| dot(&normal, v) == bound).collect();
        let tight = (0..n).filter(|&i| mask[i]).collect();
        masks.push(mask);
        found.push(Facet { constraint: Constraint { normal, bound }, tight });
    }
    found
}

/// Facet inequalities and affine-hull equations of `P`.
///
/// Inequality normals are primitive integer vectors lying in the direction
/// space of the affine hull, so each facet has exactly one representation.
pub fn facets(p: &VPolytope) -> HRep {
    HRep {
        ambient_dim: p.ambient_dim(),
        inequalities: p.facet_list().iter().map(|f| f.constraint.clone()).collect(),
        equations: p.affine_hull_equations().to_vec(),
    }
}
