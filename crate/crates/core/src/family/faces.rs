use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::check_n;
use crate::error::{Error, Result};
use crate::exact::{rat, RatVector};
use crate::polytope::FaceRecord;

/// A pair `∅ ⊊ S ⊆ T ⊊ [n]` naming the face
/// `Σ_{j∈S} u_j + Σ_{j∈T∖S} [0, u_j]` of `P_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FaceLabel {
    #[serde(skip)]
    n: usize,
    #[serde(rename = "S")]
    s: Vec<usize>,
    #[serde(rename = "T")]
    t: Vec<usize>,
}

/// Direction of an edge of the planar cycle, whose labels increase
/// clockwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CycleDirection {
    Clockwise,
    Counterclockwise,
}

/// A flat of `C_n` (edges `e_j = {v_j, v_{j+1}}`) with an orientation of
/// the contracted cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlatOrientation {
    pub flat: Vec<usize>,
    pub orientation: Vec<(usize, CycleDirection)>,
}

impl FlatOrientation {
    /// The contraction is again a cycle; it is acyclic unless every edge
    /// points the same way.
    pub fn is_acyclic(&self) -> bool {
        let first = self.orientation.first().map(|o| o.1);
        self.orientation.iter().any(|o| Some(o.1) != first)
    }
}

fn mask_of(members: &[usize]) -> u64 {
    members.iter().fold(0, |m, i| m | 1 << (i - 1))
}

impl FaceLabel {
    pub fn new(n: usize, mut s: Vec<usize>, mut t: Vec<usize>) -> Result<Self> {
        check_n(n, 2)?;
        for v in [&mut s, &mut t] {
            v.sort_unstable();
            v.dedup();
        }
        if let Some(&bad) = s.iter().chain(&t).find(|&&i| i == 0 || i > n) {
            return Err(Error::InvalidLabel(format!("element {bad} outside [{n}]")));
        }
        if s.is_empty() || t.len() == n || !s.iter().all(|i| t.contains(i)) {
            return Err(Error::InvalidLabel(format!("need ∅ ⊊ S ⊆ T ⊊ [{n}], got S = {s:?}, T = {t:?}")));
        }
        Ok(Self { n, s, t })
    }

    fn from_masks(n: usize, s: u64, t: u64) -> Self {
        let members = |m: u64| (0..n).filter(|i| m >> i & 1 == 1).map(|i| i + 1).collect();
        Self { n, s: members(s), t: members(t) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> &[usize] {
        &self.s
    }

    pub fn t(&self) -> &[usize] {
        &self.t
    }

    /// `|T ∖ S|`.
    pub fn dim(&self) -> usize {
        self.t.len() - self.s.len()
    }

    /// `T_1 ⊆ T_2` and `S_2 ⊆ S_1`.
    pub fn precedes(&self, other: &FaceLabel) -> bool {
        let (s1, t1) = (mask_of(&self.s), mask_of(&self.t));
        let (s2, t2) = (mask_of(&other.s), mask_of(&other.t));
        t1 & !t2 == 0 && s2 & !s1 == 0
    }

    /// The flat `f_{T∖S}` and the orientation putting edges of `S`
    /// counterclockwise and the others clockwise.
    pub fn flat_orientation(&self) -> FlatOrientation {
        let free: Vec<usize> = self.t.iter().copied().filter(|i| !self.s.contains(i)).collect();
        let orientation = (1..=self.n)
            .filter(|j| !free.contains(j))
            .map(|j| {
                let dir = if self.s.contains(&j) {
                    CycleDirection::Counterclockwise
                } else {
                    CycleDirection::Clockwise
                };
                (j, dir)
            })
            .collect();
        FlatOrientation { flat: free, orientation }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain struct serializes")
    }
}

impl fmt::Display for FaceLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        write!(f, "({{{}}}, {{{}}})", join(&self.s), join(&self.t))
    }
}

/// The face `{u_J : S ⊆ J ⊆ T}`, with vertex indices in the order of
/// [`super::build_family_polytope`].
pub fn face_from_label(label: &FaceLabel) -> FaceRecord {
    let s = mask_of(&label.s);
    let free = mask_of(&label.t) & !s;
    let mut indices = Vec::with_capacity(1 << label.dim());
    let mut sub = free;
    loop {
        indices.push((s | sub) as usize - 1);
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & free;
    }
    indices.sort_unstable();
    FaceRecord { dim: label.dim(), vertex_indices: indices }
}

/// The proper faces of `P_{n-1}` as labels, ordered by
/// `(S_1,T_1) ⪯ (S_2,T_2)` iff `T_1 ⊆ T_2` and `S_2 ⊆ S_1`.
#[derive(Clone, Debug)]
pub struct FacePoset {
    n: usize,
    labels: Vec<FaceLabel>,
}

impl FacePoset {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Sorted by dimension, then `S`, then `T`.
    pub fn labels(&self) -> &[FaceLabel] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn leq(&self, a: &FaceLabel, b: &FaceLabel) -> bool {
        a.precedes(b)
    }

    /// Number of labels of each dimension.
    pub fn counts_by_dim(&self) -> Vec<usize> {
        let mut counts = vec![0; self.n - 1];
        for l in &self.labels {
            counts[l.dim()] += 1;
        }
        counts
    }
}

pub fn face_lattice_poset(n: usize) -> Result<FacePoset> {
    check_n(n, 2)?;
    let full = (1u64 << n) - 1;
    let mut labels = Vec::new();
    for t in 1..full {
        let mut s = t;
        while s != 0 {
            labels.push(FaceLabel::from_masks(n, s, t));
            s = (s - 1) & t;
        }
    }
    labels.sort_by(|a, b| (a.dim(), &a.s, &a.t).cmp(&(b.dim(), &b.s, &b.t)));
    Ok(FacePoset { n, labels })
}

/// Vertices of the face of the graphic zonotope of `C_n` matched to
/// `(S, T)`: `Σ_{j∈T∖S} [e_j, e_{j+1}] + Σ_{j∈S} e_{j+1} + Σ_{j∉T} e_j`.
pub fn graphic_face_vertices(label: &FaceLabel) -> Vec<RatVector> {
    let n = label.n;
    let next = |j: usize| j % n + 1;
    let mut base = vec![0i64; n];
    let mut free = Vec::new();
    for j in 1..=n {
        if label.s.contains(&j) {
            base[next(j) - 1] += 1;
        } else if label.t.contains(&j) {
            free.push(j);
        } else {
            base[j - 1] += 1;
        }
    }
    let mut out = BTreeSet::new();
    for choice in 0u64..1 << free.len() {
        let mut v = base.clone();
        for (k, &j) in free.iter().enumerate() {
            let target = if choice >> k & 1 == 1 { next(j) } else { j };
            v[target - 1] += 1;
        }
        out.insert(v.into_iter().map(rat).collect::<RatVector>());
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build_family_polytope, phi_to_graphic_zonotope};

    fn label(n: usize, s: &[usize], t: &[usize]) -> FaceLabel {
        FaceLabel::new(n, s.to_vec(), t.to_vec()).unwrap()
    }

    #[test]
    fn label_validation() {
        assert!(FaceLabel::new(3, vec![], vec![1]).is_err());
        assert!(FaceLabel::new(3, vec![1], vec![1, 2, 3]).is_err());
        assert!(FaceLabel::new(3, vec![2], vec![1]).is_err());
        assert_eq!(label(3, &[1], &[1, 2]).dim(), 1);
    }

    #[test]
    fn faces_from_labels() {
        // Vertex index of u_J is mask(J) - 1.
        assert_eq!(face_from_label(&label(3, &[1], &[1])).vertex_indices, vec![0]);
        assert_eq!(face_from_label(&label(3, &[1], &[1, 2])).vertex_indices, vec![0, 2]);
        let f = face_from_label(&label(4, &[1], &[1, 2, 3]));
        assert_eq!(f.dim, 2);
        assert_eq!(f.vertex_indices, vec![0, 2, 4, 6]);
    }

    #[test]
    fn poset_sizes_and_order() {
        let p3 = face_lattice_poset(3).unwrap();
        assert_eq!(p3.len(), 12);
        assert_eq!(p3.counts_by_dim(), vec![6, 6]);
        assert_eq!(face_lattice_poset(4).unwrap().counts_by_dim(), vec![14, 24, 12]);
        assert!(p3.leq(&label(3, &[1], &[1]), &label(3, &[1], &[1, 2])));
        assert!(!p3.leq(&label(3, &[1], &[1, 2]), &label(3, &[1], &[1])));
    }

    #[test]
    fn flats_and_orientations_are_acyclic_and_distinct() {
        for n in 2..=5 {
            let poset = face_lattice_poset(n).unwrap();
            let all: Vec<FlatOrientation> = poset.labels().iter().map(FaceLabel::flat_orientation).collect();
            assert!(all.iter().all(FlatOrientation::is_acyclic));
            for (i, a) in all.iter().enumerate() {
                assert!(all[i + 1..].iter().all(|b| b != a));
            }
        }
    }

    #[test]
    fn phi_carries_faces_to_graphic_faces() {
        for n in 2..=5 {
            let p = build_family_polytope(n).unwrap();
            for l in face_lattice_poset(n).unwrap().labels() {
                let image: BTreeSet<RatVector> = face_from_label(l)
                    .vertex_indices
                    .iter()
                    .map(|&i| phi_to_graphic_zonotope(&p.vertices()[i]))
                    .collect();
                assert_eq!(image, graphic_face_vertices(l).into_iter().collect(), "{l}");
            }
        }
    }

    #[test]
    fn json_shape() {
        assert_eq!(label(4, &[1], &[1, 3]).to_json().to_string(), r#"{"S":[1],"T":[1,3]}"#);
    }
}
