use num::{BigInt, ToPrimitive, Zero};

use super::VPolytope;
use crate::exact::{rref, RatMatrix, Rational};

/// Number of integer points in the dilate `tP`.
///
/// Lower-dimensional polytopes are counted in `aff(tP) ∩ Z^d`: the affine
/// hull equations are solved for their pivot coordinates, the remaining
/// coordinates are scanned over the bounding box, and each candidate must
/// have integral pivot coordinates inside the box and satisfy every facet
/// inequality.
pub fn lattice_count(p: &VPolytope, t: u64) -> u64 {
    if t == 0 {
        return 1;
    }
    let d = p.ambient_dim();
    let scale = Rational::from_integer(BigInt::from(t));
    let bound = |pick: fn(&Rational, &Rational) -> bool, round: fn(&Rational) -> Rational| -> Vec<i64> {
        (0..d)
            .map(|i| {
                let mut best = p.vertices()[0][i].clone();
                for v in p.vertices() {
                    if pick(&v[i], &best) {
                        best = v[i].clone();
                    }
                }
                round(&(best * &scale)).to_integer().to_i64().expect("coordinate fits in i64")
            })
            .collect()
    };
    let lo = bound(|a, b| a < b, Rational::ceil);
    let hi = bound(|a, b| a > b, Rational::floor);
    if lo.iter().zip(&hi).any(|(l, h)| l > h) {
        return 0;
    }

    let equations = p.affine_hull_equations();
    let (reduced, pivots) = if equations.is_empty() {
        (RatMatrix::zeros(0, d + 1), Vec::new())
    } else {
        let rows = equations
            .iter()
            .map(|c| {
                let mut r = c.normal.clone();
                r.push(&c.bound * &scale);
                r
            })
            .collect();
        rref(&RatMatrix::from_rows(rows).expect("equations share a length"))
    };
    if pivots.contains(&d) {
        return 0;
    }
    let free: Vec<usize> = (0..d).filter(|j| !pivots.contains(j)).collect();
    let inequalities: Vec<(Vec<Rational>, Rational)> = p
        .facet_list()
        .iter()
        .map(|f| (f.constraint.normal.clone(), &f.constraint.bound * &scale))
        .collect();

    let mut x: Vec<Rational> = vec![Rational::zero(); d];
    let mut current: Vec<i64> = free.iter().map(|&j| lo[j]).collect();
    let mut count = 0u64;
    'scan: loop {
        for (k, &j) in free.iter().enumerate() {
            x[j] = Rational::from_integer(BigInt::from(current[k]));
        }
        let mut ok = true;
        for (r, &pc) in pivots.iter().enumerate() {
            let mut value = reduced.get(r, d).clone();
            for &j in &free {
                let coeff = reduced.get(r, j);
                if !coeff.is_zero() {
                    value -= coeff * &x[j];
                }
            }
            if !value.is_integer() {
                ok = false;
                break;
            }
            let vi = value.to_integer().to_i64();
            if vi.is_none_or(|v| v < lo[pc] || v > hi[pc]) {
                ok = false;
                break;
            }
            x[pc] = value;
        }
        if ok && inequalities.iter().all(|(a, b)| crate::exact::dot(a, &x) <= *b) {
            count += 1;
        }
        for k in 0..free.len() {
            if current[k] < hi[free[k]] {
                current[k] += 1;
                continue 'scan;
            }
            current[k] = lo[free[k]];
        }
        break;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dilation_zero_is_one_point() {
        let tri = VPolytope::from_int_points(&[[0, 0], [5, 0], [0, 5]]).unwrap();
        assert_eq!(lattice_count(&tri, 0), 1);
    }

    #[test]
    fn unit_square_and_hexagon() {
        let sq = VPolytope::from_int_points(&[[0, 0], [1, 0], [0, 1], [1, 1]]).unwrap();
        assert_eq!(lattice_count(&sq, 2), 9);
        let hex = VPolytope::from_int_points(&[[1, 0], [1, 1], [0, 1], [-1, 0], [-1, -1], [0, -1]])
            .unwrap();
        assert_eq!(lattice_count(&hex, 1), 7);
        assert_eq!(lattice_count(&hex, 2), 19);
    }

    #[test]
    fn embedded_counts_use_the_affine_lattice() {
        // The segment from (0,0,1) to (2,2,1) meets Z^3 in 3 points; its
        // relative lattice is generated by (1,1,0).
        let seg = VPolytope::from_int_points(&[[0, 0, 1], [2, 2, 1]]).unwrap();
        assert_eq!(lattice_count(&seg, 1), 3);
        assert_eq!(lattice_count(&seg, 3), 7);
        let tilted = VPolytope::from_int_points(&[[0, 0], [2, 1]]).unwrap();
        assert_eq!(lattice_count(&tilted, 1), 2);
        assert_eq!(lattice_count(&tilted, 2), 3);
    }

    #[test]
    fn rational_vertices() {
        let half = VPolytope::new(1, vec![vec![crate::exact::ratio(1, 2)], vec![crate::exact::ratio(5, 2)]])
            .unwrap();
        assert_eq!(lattice_count(&half, 1), 2);
        assert_eq!(lattice_count(&half, 2), 5);
    }
}
