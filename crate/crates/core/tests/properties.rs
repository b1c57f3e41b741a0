mod common;

use num::BigInt;
use omclab::equivariant::{action_matrix, Permutation};
use omclab::exact::{int_vector, kernel_basis, rank, rat, RatMatrix, RatVector, Rational};
use omclab::family::{build_family_polytope, generator_u, symmetric_edge_polytope};
use omclab::matroid::{
    circuits_from_digraph, circuits_from_matrix, cocircuits_from_digraph, cocircuits_from_matrix, Digraph,
};
use omclab::polytope::{
    certify_vertices, ehrhart, f_vector, face_lattice, facets, fixed_subpolytope, lattice_count, omc_polytope, polar_dual,
    zonotope, VPolytope,
};
use proptest::prelude::*;

use common::{brute_force_circuits, graph_corpus, zonotope_volume, CaratheodoryOracle};

fn small_matrix() -> impl Strategy<Value = RatMatrix> {
    (1usize..=3, 1usize..=5).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-3i64..=3, c), r)
            .prop_map(|rows| RatMatrix::from_int_rows(&rows).unwrap())
    })
}

fn small_digraph() -> impl Strategy<Value = Digraph> {
    (2usize..=5).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 1..=7)
            .prop_map(move |edges| Digraph::new(n, edges).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_plus_nullity(m in small_matrix()) {
        prop_assert_eq!(rank(&m) + kernel_basis(&m).len(), m.cols());
        prop_assert_eq!(rank(&m), rank(&m.transpose()));
    }

    #[test]
    fn kernel_vectors_are_annihilated(m in small_matrix()) {
        for v in kernel_basis(&m) {
            prop_assert!(m.mul_vec(&v).iter().all(|x| *x == rat(0)));
        }
    }

    #[test]
    fn matrix_circuits_match_the_sign_vector_definition(m in small_matrix()) {
        prop_assert_eq!(circuits_from_matrix(&m), brute_force_circuits(&m));
    }

    #[test]
    fn graph_circuits_match_the_incidence_matrix(g in small_digraph()) {
        let a = g.incidence_matrix();
        prop_assert_eq!(circuits_from_digraph(&g), circuits_from_matrix(&a));
        prop_assert_eq!(cocircuits_from_digraph(&g), cocircuits_from_matrix(&a));
    }

    #[test]
    fn small_zonotopes_count_and_measure(
        gens in prop::collection::vec(prop::collection::vec(-2i64..=2, 2), 2..=4)
    ) {
        let gens: Vec<RatVector> = gens.iter().map(|g| int_vector(g)).collect();
        let z = zonotope(&gens).unwrap();
        prop_assume!(z.dimension() == 2);
        let oracle = CaratheodoryOracle::new(&z);
        for t in 1..=2 {
            prop_assert_eq!(lattice_count(&z, t as u64), oracle.count(&z, t));
        }
        let data = ehrhart(&z).unwrap();
        prop_assert_eq!(data.polynomial.coefficient(2), zonotope_volume(&gens));
    }
}

fn sample_polytopes() -> Vec<(String, VPolytope)> {
    let mut out = Vec::new();
    for n in 2..=4 {
        out.push((format!("family n = {n}"), build_family_polytope(n).unwrap()));
    }
    out.push(("K3 cocircuits".into(), omc_polytope(&cocircuits_from_digraph(&Digraph::complete(3))).unwrap()));
    out.push(("bouquet".into(), omc_polytope(&circuits_from_digraph(&Digraph::bouquet(3))).unwrap()));
    out.push(("triangle".into(), VPolytope::from_int_points(&[[0, 0], [2, 1], [1, 3]]).unwrap()));
    out.push(("segment in R3".into(), VPolytope::from_int_points(&[[0, 0, 0], [2, 2, 2]]).unwrap()));
    out.push((
        "tilted square".into(),
        VPolytope::from_int_points(&[[1, 0, 0], [0, 1, 0], [-1, 0, 0], [0, -1, 0]]).unwrap(),
    ));
    out.push((
        "simplex".into(),
        VPolytope::from_int_points(&[[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 2]]).unwrap(),
    ));
    out
}

#[test]
fn lattice_counts_match_barycentric_oracle() {
    for (name, p) in sample_polytopes() {
        let oracle = CaratheodoryOracle::new(&p);
        assert_eq!(lattice_count(&p, 0), 1, "{name}");
        for t in 1..=3 {
            assert_eq!(lattice_count(&p, t as u64), oracle.count(&p, t), "{name}, t = {t}");
        }
    }
}

#[test]
fn ehrhart_polynomial_extrapolates() {
    for (name, p) in sample_polytopes() {
        let data = ehrhart(&p).unwrap();
        let d = data.dimension as u64;
        for t in d + 1..=d + 2 {
            let predicted = data.polynomial.eval(&rat(t as i64));
            assert_eq!(predicted, rat(lattice_count(&p, t) as i64), "{name}, t = {t}");
        }
        assert!(data.h_star.has_nonnegative_coefficients(), "{name}");
    }
}

#[test]
fn family_leading_coefficient_is_the_volume() {
    for n in 2..=4 {
        let gens: Vec<RatVector> = (1..=n).map(|i| generator_u(n, i)).collect();
        let data = ehrhart(&build_family_polytope(n).unwrap()).unwrap();
        assert_eq!(data.polynomial.coefficient(n - 1), zonotope_volume(&gens), "n = {n}");
        assert_eq!(zonotope_volume(&gens), Rational::from_integer(BigInt::from(n)));
    }
}

#[test]
fn euler_relation_on_corpus_polytopes() {
    for g in graph_corpus(25) {
        for p in [omc_polytope(&circuits_from_digraph(&g)).unwrap(), omc_polytope(&cocircuits_from_digraph(&g)).unwrap()] {
            if p.dimension() > 3 {
                continue;
            }
            let f = f_vector(&face_lattice(&p).unwrap());
            let alternating: i64 = f.iter().enumerate().map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) }).sum();
            assert_eq!(alternating, 1, "{:?}: f = {f:?}", g.edges());
        }
    }
}

#[test]
fn omc_polytopes_are_symmetric_and_certified() {
    for g in graph_corpus(30) {
        for set in [circuits_from_digraph(&g), cocircuits_from_digraph(&g)] {
            let p = omc_polytope(&set).unwrap();
            assert_eq!(p.vertex_count(), set.len(), "{:?}", g.edges());
            assert!(p.is_centrally_symmetric());
            assert_eq!(certify_vertices(&p).unwrap().len(), set.len());
        }
    }
}

#[test]
fn polar_dual_is_an_involution_on_edge_polytopes() {
    for g in graph_corpus(30).into_iter().filter(|g| g.node_count() <= 4) {
        let sep = symmetric_edge_polytope(&g).unwrap();
        let back = polar_dual(&polar_dual(&sep).unwrap()).unwrap();
        assert!(back.same_vertex_set(&sep), "{:?}", g.edges());
    }
}

#[test]
fn fixed_subpolytopes_are_pointwise_fixed() {
    let p = build_family_polytope(4).unwrap();
    let h = facets(&p);
    for sigma in Permutation::all(4) {
        let m = action_matrix(&sigma).unwrap();
        let fixed = fixed_subpolytope(&p, &m).unwrap();
        for v in fixed.vertices() {
            assert_eq!(&m.mul_vec(v), v, "{sigma}");
        }
        assert!(fixed.vertices().iter().all(|v| h.contains(v)), "{sigma}");
    }
}
