//! Exact V-polytopes: facets, faces, lattice points, Ehrhart data, polar
//! duals, fixed subpolytopes and zonotopes.
//!
//! Everything here is brute force over vertex or constraint subsets, sized
//! for polytopes of dimension at most about six with a few dozen vertices.

mod ehrhart;
mod faces;
mod facets;
mod fixed;
mod lattice;
mod omc;
mod polar;
mod zonotope;

use std::collections::BTreeSet;
use std::sync::OnceLock;

use num::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{
    dot, format_rational, kernel_basis, parse_rational, span_basis, sub_vectors, RatMatrix,
    RatVector, Rational,
};

pub use ehrhart::{ehrhart, h_star_from_counts, EhrhartData};
pub use faces::{f_vector, face_lattice, face_lattice_with_limit, FaceRecord, DEFAULT_MAX_FACE_DIM};
pub use facets::facets;
pub use fixed::fixed_subpolytope;
pub use lattice::lattice_count;
pub use omc::{certify_vertices, omc_polytope, VertexCertificate};
pub use polar::polar_dual;
pub use zonotope::{zonotope, MAX_ZONOTOPE_GENERATORS};

/// `normal · x ≤ bound` (inequality) or `normal · x = bound` (equation).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Constraint {
    pub normal: RatVector,
    pub bound: Rational,
}

impl Constraint {
    pub fn value(&self, x: &[Rational]) -> Rational {
        dot(&self.normal, x)
    }

    fn to_json(&self) -> Value {
        json!({
            "a": self.normal.iter().map(format_rational).collect::<Vec<_>>(),
            "b": format_rational(&self.bound),
        })
    }
}

/// Halfspace description: `ineqs` are facet inequalities, `eqs` cut out
/// the affine hull.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HRep {
    pub ambient_dim: usize,
    pub inequalities: Vec<Constraint>,
    pub equations: Vec<Constraint>,
}

impl HRep {
    pub fn contains(&self, x: &[Rational]) -> bool {
        self.equations.iter().all(|c| c.value(x) == c.bound)
            && self.inequalities.iter().all(|c| c.value(x) <= c.bound)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "dim": self.ambient_dim,
            "ineqs": self.inequalities.iter().map(Constraint::to_json).collect::<Vec<_>>(),
            "eqs": self.equations.iter().map(Constraint::to_json).collect::<Vec<_>>(),
        })
    }
}

#[derive(Clone, Debug)]
struct AffineHull {
    /// Basis of the linear space parallel to the affine hull.
    directions: Vec<RatVector>,
    equations: Vec<Constraint>,
}

/// Convex hull of a finite list of rational points.
#[derive(Clone, Debug)]
pub struct VPolytope {
    ambient_dim: usize,
    vertices: Vec<RatVector>,
    hull: OnceLock<AffineHull>,
    facets: OnceLock<Vec<facets::Facet>>,
}

impl PartialEq for VPolytope {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.vertices == other.vertices
    }
}

impl Eq for VPolytope {}

impl VPolytope {
    /// Takes the point list as given; see [`certify_vertices`] to check that
    /// every point is a vertex.
    pub fn new(ambient_dim: usize, vertices: Vec<RatVector>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyPolytope);
        }
        if let Some(bad) = vertices.iter().position(|v| v.len() != ambient_dim) {
            return Err(Error::Shape(format!(
                "point {} has length {}, expected {ambient_dim}",
                bad + 1,
                vertices[bad].len()
            )));
        }
        Ok(Self { ambient_dim, vertices, hull: OnceLock::new(), facets: OnceLock::new() })
    }

    /// Convex hull of `points`, keeping only the extreme points (in first
    /// occurrence order).
    pub fn hull_of(ambient_dim: usize, points: Vec<RatVector>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let unique: Vec<RatVector> = points.into_iter().filter(|p| seen.insert(p.clone())).collect();
        let all = Self::new(ambient_dim, unique)?;
        let keep = omc::extreme_point_indices(&all)?;
        Self::new(ambient_dim, keep.into_iter().map(|i| all.vertices[i].clone()).collect())
    }

    pub fn from_int_points<R: AsRef<[i64]>>(points: &[R]) -> Result<Self> {
        let vertices: Vec<RatVector> =
            points.iter().map(|p| crate::exact::int_vector(p.as_ref())).collect();
        let d = vertices.first().map_or(0, Vec::len);
        Self::new(d, vertices)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn vertices(&self) -> &[RatVector] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    fn hull(&self) -> &AffineHull {
        self.hull.get_or_init(|| {
            let v0 = &self.vertices[0];
            let diffs: Vec<RatVector> = self.vertices[1..].iter().map(|v| sub_vectors(v, v0)).collect();
            let directions = span_basis(&diffs);
            let equations = if directions.is_empty() {
                (0..self.ambient_dim)
                    .map(|i| {
                        let mut e = vec![Rational::zero(); self.ambient_dim];
                        e[i] = num::one();
                        Constraint { bound: v0[i].clone(), normal: e }
                    })
                    .collect()
            } else {
                let m = RatMatrix::from_rows(directions.clone()).expect("uniform length");
                kernel_basis(&m)
                    .into_iter()
                    .map(|a| Constraint { bound: dot(&a, v0), normal: a })
                    .collect()
            };
            AffineHull { directions, equations }
        })
    }

    /// Dimension of the affine hull.
    pub fn dimension(&self) -> usize {
        self.hull().directions.len()
    }

    /// Equations cutting out the affine hull.
    pub fn affine_hull_equations(&self) -> &[Constraint] {
        &self.hull().equations
    }

    pub(crate) fn directions(&self) -> &[RatVector] {
        &self.hull().directions
    }

    pub(crate) fn facet_list(&self) -> &[facets::Facet] {
        self.facets.get_or_init(|| facets::enumerate(self))
    }

    pub fn is_lattice(&self) -> bool {
        self.vertices.iter().all(|v| crate::exact::is_integral(v))
    }

    pub fn vertex_set(&self) -> BTreeSet<RatVector> {
        self.vertices.iter().cloned().collect()
    }

    pub fn same_vertex_set(&self, other: &VPolytope) -> bool {
        self.ambient_dim == other.ambient_dim && self.vertex_set() == other.vertex_set()
    }

    /// Vertex set closed under negation.
    pub fn is_centrally_symmetric(&self) -> bool {
        let set = self.vertex_set();
        set.iter().all(|v| set.contains(&crate::exact::negate_vector(v)))
    }

    pub fn map_linear(&self, m: &RatMatrix) -> Result<VPolytope> {
        if m.cols() != self.ambient_dim {
            return Err(Error::Shape(format!(
                "{}x{} map applied to a polytope in dimension {}",
                m.rows(),
                m.cols(),
                self.ambient_dim
            )));
        }
        VPolytope::new(m.rows(), self.vertices.iter().map(|v| m.mul_vec(v)).collect())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "dim": self.ambient_dim,
            "vertices": self
                .vertices
                .iter()
                .map(|v| v.iter().map(format_rational).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }

    /// `{"dim": d, "vertices": [[…rational strings…]]}`
    pub fn from_json_str(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text)?;
        let dim = value["dim"]
            .as_u64()
            .ok_or_else(|| Error::Parse("polytope JSON needs an integer \"dim\"".into()))?
            as usize;
        let rows = value["vertices"]
            .as_array()
            .ok_or_else(|| Error::Parse("polytope JSON needs a \"vertices\" array".into()))?;
        let mut vertices = Vec::with_capacity(rows.len());
        for row in rows {
            let cells = row
                .as_array()
                .ok_or_else(|| Error::Parse("each vertex must be an array".into()))?;
            let v = cells
                .iter()
                .map(|c| match c {
                    Value::String(s) => parse_rational(s),
                    Value::Number(n) if n.is_i64() => Ok(crate::exact::rat(n.as_i64().unwrap())),
                    other => Err(Error::Parse(format!("bad coordinate {other}"))),
                })
                .collect::<Result<RatVector>>()?;
            vertices.push(v);
        }
        Self::new(dim, vertices)
    }
}

/// Dimension of a polytope (rank of the vertex differences).
pub fn dimension(p: &VPolytope) -> usize {
    p.dimension()
}

pub fn is_centrally_symmetric(p: &VPolytope) -> bool {
    p.is_centrally_symmetric()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_and_hull_equations() {
        let seg = VPolytope::from_int_points(&[[1, -1, 1], [-1, 1, -1]]).unwrap();
        assert_eq!(seg.dimension(), 1);
        assert_eq!(seg.affine_hull_equations().len(), 2);
        let point = VPolytope::from_int_points(&[[2, 3]]).unwrap();
        assert_eq!(point.dimension(), 0);
        assert_eq!(point.affine_hull_equations().len(), 2);
    }

    #[test]
    fn central_symmetry() {
        let simplex = VPolytope::from_int_points(&[[0, 0], [1, 0], [0, 1]]).unwrap();
        assert!(!simplex.is_centrally_symmetric());
        let square = VPolytope::from_int_points(&[[1, 1], [1, -1], [-1, 1], [-1, -1]]).unwrap();
        assert!(square.is_centrally_symmetric());
    }

    #[test]
    fn json_round_trip() {
        let p = VPolytope::new(2, vec![vec![crate::exact::ratio(1, 2), crate::exact::rat(0)]]).unwrap();
        let text = p.to_json().to_string();
        assert_eq!(text, r#"{"dim":2,"vertices":[["1/2","0"]]}"#);
        assert_eq!(VPolytope::from_json_str(&text).unwrap(), p);
    }

    #[test]
    fn rejects_empty_and_ragged() {
        assert!(matches!(VPolytope::new(2, vec![]), Err(Error::EmptyPolytope)));
        assert!(VPolytope::new(2, vec![vec![crate::exact::rat(1)]]).is_err());
    }
}
