use std::collections::BTreeSet;

use itertools::Itertools;
use num::Zero;

use super::signed::{CircuitSet, SignedSet};
use crate::exact::{kernel_basis, rank, solve_in_rowspace, RatMatrix};

/// Circuits of `M(M)`: sign patterns of the minimal linear dependencies
/// among the columns.
///
/// A column subset `S` is a circuit support exactly when the kernel of
/// `M[:, S]` is one-dimensional and its generator has full support on `S`;
/// such subsets have at most `rank + 1` elements.
pub fn circuits_from_matrix(m: &RatMatrix) -> CircuitSet {
    let n = m.cols();
    let max_size = (rank(m) + 1).min(n);
    let mut reps = BTreeSet::new();
    for size in 1..=max_size {
        for subset in (0..n).combinations(size) {
            let kernel = kernel_basis(&m.select_columns(&subset));
            let [lambda] = kernel.as_slice() else {
                continue;
            };
            if lambda.iter().any(Zero::is_zero) {
                continue;
            }
            let mut full = vec![num::zero(); n];
            for (k, &col) in subset.iter().enumerate() {
                full[col] = lambda[k].clone();
            }
            reps.insert(SignedSet::from_vector(&full).canonical());
        }
    }
    CircuitSet::from_pairs(n, reps).expect("signed supports share the ground set")
}

/// Circuits of the dual `M*(M)`: inclusion-minimal signed supports of
/// row-space vectors.
///
/// Every cocircuit is the signed support of a row-space vector vanishing on
/// some `rank - 1` columns spanning a hyperplane, so those subsets generate
/// all candidates; non-minimal candidates are then discarded.
pub fn cocircuits_from_matrix(m: &RatMatrix) -> CircuitSet {
    let n = m.cols();
    let r = rank(m);
    if r == 0 {
        return CircuitSet::empty(n);
    }
    let candidates: BTreeSet<SignedSet> = (0..n)
        .combinations(r - 1)
        .filter_map(|zero_on| solve_in_rowspace(m, &zero_on))
        .map(|u| SignedSet::from_vector(&u).canonical())
        .collect();
    let supports: Vec<BTreeSet<usize>> =
        candidates.iter().map(|c| c.support().into_iter().collect()).collect();
    let minimal = candidates.iter().enumerate().filter(|(i, _)| {
        !supports
            .iter()
            .enumerate()
            .any(|(j, s)| j != *i && s.len() < supports[*i].len() && s.is_subset(&supports[*i]))
    });
    CircuitSet::from_pairs(n, minimal.map(|(_, c)| c.clone()))
        .expect("signed supports share the ground set")
}
