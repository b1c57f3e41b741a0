use num::{Signed, Zero};

use super::VPolytope;
use crate::error::{Error, Result};
use crate::exact::{scale_vector, RatVector};

/// `{u ∈ span P : u·x ≤ 1 for all x ∈ P}`, whose vertices are the facet
/// normals `a_i / b_i`. The origin must lie in the relative interior of `P`.
pub fn polar_dual(p: &VPolytope) -> Result<VPolytope> {
    if p.dimension() == 0 {
        return Err(Error::TooLowDimension(1));
    }
    if p.affine_hull_equations().iter().any(|c| !c.bound.is_zero())
        || p.facet_list().iter().any(|f| !f.constraint.bound.is_positive())
    {
        return Err(Error::OriginNotInterior);
    }
    let vertices: Vec<RatVector> = p
        .facet_list()
        .iter()
        .map(|f| scale_vector(&f.constraint.normal, &f.constraint.bound.recip()))
        .collect();
    VPolytope::new(p.ambient_dim(), vertices)
}
