use std::collections::BTreeSet;

use itertools::Itertools;

use super::VPolytope;
use crate::error::{Error, Result};
use crate::exact::{rank_of_vectors, solve_unique, RatMatrix, RatVector, Rational};

/// `P ∩ ker(M - I)` for a linear map `M` with `M(P) ⊆ P`.
///
/// The fixed-space equations are appended to the H-description of `P` and
/// vertices are found by solving every square system made of the equations
/// and a choice of inequalities, keeping the feasible solutions. Vertices
/// come back sorted and may be rational.
pub fn fixed_subpolytope(p: &VPolytope, m: &RatMatrix) -> Result<VPolytope> {
    let d = p.ambient_dim();
    if m.rows() != d || m.cols() != d {
        return Err(Error::Shape(format!(
            "{}x{} matrix acting on dimension {d}",
            m.rows(),
            m.cols()
        )));
    }
    let hrep = super::facets(p);
    if let Some(i) = p.vertices().iter().position(|v| !hrep.contains(&m.mul_vec(v))) {
        return Err(Error::NotInvariant(i));
    }

    let mut eq_rows: Vec<RatVector> = hrep.equations.iter().map(|c| c.normal.clone()).collect();
    let mut eq_rhs: Vec<Rational> = hrep.equations.iter().map(|c| c.bound.clone()).collect();
    for r in 0..d {
        let mut row = m.row(r).to_vec();
        row[r] -= Rational::from_integer(1.into());
        eq_rows.push(row);
        eq_rhs.push(num::zero());
    }
    let free = d - rank_of_vectors(&eq_rows);

    let mut found = BTreeSet::new();
    for choice in (0..hrep.inequalities.len()).combinations(free) {
        let mut rows = eq_rows.clone();
        let mut rhs = eq_rhs.clone();
        for &k in &choice {
            rows.push(hrep.inequalities[k].normal.clone());
            rhs.push(hrep.inequalities[k].bound.clone());
        }
        if let Some(x) = solve_unique(&rows, &rhs, d) {
            if hrep.inequalities.iter().all(|c| c.value(&x) <= c.bound) {
                found.insert(x);
            }
        }
    }
    VPolytope::new(d, found.into_iter().collect())
}
