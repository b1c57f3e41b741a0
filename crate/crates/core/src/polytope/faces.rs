use std::collections::BTreeSet;

use serde::Serialize;

use super::VPolytope;
use crate::error::{Error, Result};
use crate::exact::{rank_of_vectors, sub_vectors, RatVector};

/// Largest dimension [`face_lattice`] accepts.
pub const DEFAULT_MAX_FACE_DIM: usize = 6;

/// A nonempty face, given by the vertices lying on it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct FaceRecord {
    pub dim: usize,
    pub vertex_indices: Vec<usize>,
}

fn affine_dimension(p: &VPolytope, indices: &[usize]) -> usize {
    let base = &p.vertices()[indices[0]];
    let diffs: Vec<RatVector> =
        indices[1..].iter().map(|&i| sub_vectors(&p.vertices()[i], base)).collect();
    rank_of_vectors(&diffs)
}

/// All nonempty faces of `P`, including `P`, sorted by dimension.
///
/// Faces are the closure of the facet vertex sets under intersection, so
/// the vertex list must be irredundant.
pub fn face_lattice(p: &VPolytope) -> Result<Vec<FaceRecord>> {
    face_lattice_with_limit(p, DEFAULT_MAX_FACE_DIM)
}

pub fn face_lattice_with_limit(p: &VPolytope, limit: usize) -> Result<Vec<FaceRecord>> {
    let dim = p.dimension();
    if dim > limit {
        return Err(Error::DimensionGuard { dim, limit });
    }
    let facet_sets: Vec<BTreeSet<usize>> =
        p.facet_list().iter().map(|f| f.tight.iter().copied().collect()).collect();
    let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut frontier: Vec<BTreeSet<usize>> = Vec::new();
    for f in &facet_sets {
        if faces.insert(f.iter().copied().collect()) {
            frontier.push(f.clone());
        }
    }
    while let Some(face) = frontier.pop() {
        for f in &facet_sets {
            let meet: BTreeSet<usize> = face.intersection(f).copied().collect();
            if !meet.is_empty() && faces.insert(meet.iter().copied().collect()) {
                frontier.push(meet);
            }
        }
    }
    faces.insert((0..p.vertex_count()).collect());
    let mut records: Vec<FaceRecord> = faces
        .into_iter()
        .map(|vertex_indices| FaceRecord { dim: affine_dimension(p, &vertex_indices), vertex_indices })
        .collect();
    records.sort();
    Ok(records)
}

/// `(f_0, …, f_dim)` of a face list.
pub fn f_vector(faces: &[FaceRecord]) -> Vec<usize> {
    let top = faces.iter().map(|f| f.dim).max().unwrap_or(0);
    let mut f = vec![0; top + 1];
    for face in faces {
        f[face.dim] += 1;
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hexagon_f_vector() {
        let hex = VPolytope::from_int_points(&[[1, 0], [1, 1], [0, 1], [-1, 0], [-1, -1], [0, -1]])
            .unwrap();
        assert_eq!(f_vector(&face_lattice(&hex).unwrap()), vec![6, 6, 1]);
    }

    #[test]
    fn cross_polytope_f_vector() {
        let cross = VPolytope::from_int_points(&[
            [1, 0, 0],
            [-1, 0, 0],
            [0, 1, 0],
            [0, -1, 0],
            [0, 0, 1],
            [0, 0, -1],
        ])
        .unwrap();
        assert_eq!(f_vector(&face_lattice(&cross).unwrap()), vec![6, 12, 8, 1]);
    }

    #[test]
    fn point_and_segment() {
        let pt = VPolytope::from_int_points(&[[3, 4]]).unwrap();
        assert_eq!(f_vector(&face_lattice(&pt).unwrap()), vec![1]);
        let seg = VPolytope::from_int_points(&[[1, -1, 1], [-1, 1, -1]]).unwrap();
        assert_eq!(f_vector(&face_lattice(&seg).unwrap()), vec![2, 1]);
    }

    #[test]
    fn guard_rejects_high_dimension() {
        let seg = VPolytope::from_int_points(&[[0, 0], [1, 0], [0, 1]]).unwrap();
        assert!(matches!(
            face_lattice_with_limit(&seg, 1),
            Err(Error::DimensionGuard { dim: 2, limit: 1 })
        ));
    }
}
