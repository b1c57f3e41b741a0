use super::VPolytope;
use crate::error::{Error, Result};
use crate::exact::{add_vectors, dot, rank_of_vectors, RatVector};
use crate::matroid::CircuitSet;

/// Convex hull of the signed incidence vectors of all circuits.
///
/// Every signed incidence vector of a circuit family is a vertex, so the
/// point list is used as is.
pub fn omc_polytope(circuits: &CircuitSet) -> Result<VPolytope> {
    if circuits.is_empty() {
        return Err(Error::NoCircuits);
    }
    VPolytope::new(circuits.ground_size(), circuits.incidence_vectors())
}

/// A linear functional maximized over the listed points only at `index`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCertificate {
    pub index: usize,
    pub functional: RatVector,
    /// True when the point itself serves as the functional.
    pub self_directed: bool,
}

fn strictly_maximized(p: &VPolytope, index: usize, c: &[crate::exact::Rational]) -> bool {
    let top = dot(c, &p.vertices()[index]);
    p.vertices().iter().enumerate().all(|(j, w)| j == index || dot(c, w) < top)
}

/// Certifies every listed point as a vertex.
///
/// The point's own direction is tried first; when that fails the sum of the
/// normals of the facets through the point is used. The first point for
/// which neither works is reported.
pub fn certify_vertices(p: &VPolytope) -> Result<Vec<VertexCertificate>> {
    let mut certificates = Vec::with_capacity(p.vertex_count());
    for (i, v) in p.vertices().iter().enumerate() {
        if strictly_maximized(p, i, v) {
            certificates.push(VertexCertificate { index: i, functional: v.clone(), self_directed: true });
            continue;
        }
        let c = p
            .facet_list()
            .iter()
            .filter(|f| f.tight.contains(&i))
            .fold(vec![num::zero(); p.ambient_dim()], |acc, f| add_vectors(&acc, &f.constraint.normal));
        if !strictly_maximized(p, i, &c) {
            return Err(Error::NotAVertex(i));
        }
        certificates.push(VertexCertificate { index: i, functional: c, self_directed: false });
    }
    Ok(certificates)
}

/// Indices of the points that are vertices of their convex hull: those on
/// facets whose normals span the direction space.
pub(crate) fn extreme_point_indices(p: &VPolytope) -> Result<Vec<usize>> {
    let d = p.dimension();
    if d == 0 {
        return Ok(vec![0]);
    }
    let facets = p.facet_list();
    Ok((0..p.vertex_count())
        .filter(|&i| {
            let normals: Vec<RatVector> = facets
                .iter()
                .filter(|f| f.tight.contains(&i))
                .map(|f| f.constraint.normal.clone())
                .collect();
            normals.len() >= d && rank_of_vectors(&normals) == d
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int_vector;
    use crate::matroid::{circuits_from_digraph, cocircuits_from_digraph, Digraph};

    #[test]
    fn empty_family_has_no_polytope() {
        assert!(matches!(omc_polytope(&CircuitSet::empty(3)), Err(Error::NoCircuits)));
    }

    #[test]
    fn k3_cocircuits_give_certified_hexagon() {
        let p = omc_polytope(&cocircuits_from_digraph(&Digraph::complete(3))).unwrap();
        assert_eq!(p.vertex_count(), 6);
        assert_eq!(p.dimension(), 2);
        let certs = certify_vertices(&p).unwrap();
        assert_eq!(certs.len(), 6);
        assert!(certs.iter().all(|c| c.self_directed));
    }

    #[test]
    fn bouquet_is_cross_polytope() {
        let p = omc_polytope(&circuits_from_digraph(&Digraph::bouquet(3))).unwrap();
        assert_eq!(p.vertex_count(), 6);
        assert_eq!(p.dimension(), 3);
        assert!(p.is_centrally_symmetric());
    }

    #[test]
    fn midpoint_fails_certification() {
        let p = VPolytope::from_int_points(&[[0, 0], [2, 0], [1, 0], [0, 2]]).unwrap();
        assert!(matches!(certify_vertices(&p), Err(Error::NotAVertex(2))));
    }

    #[test]
    fn fallback_certificate_for_off_center_vertex() {
        // (0,0) cannot certify itself, but the facet normals through it can.
        let p = VPolytope::from_int_points(&[[0, 0], [1, 0], [0, 1]]).unwrap();
        let certs = certify_vertices(&p).unwrap();
        assert!(!certs[0].self_directed);
        assert_eq!(certs[0].functional, int_vector(&[-1, -1]));
    }

    #[test]
    fn hull_drops_interior_points() {
        let pts = [[0, 0], [2, 0], [1, 1], [0, 2], [2, 2], [1, 0]];
        let h = VPolytope::hull_of(2, pts.iter().map(|p| int_vector(p)).collect()).unwrap();
        assert_eq!(h.vertex_count(), 4);
    }
}
