use std::collections::BTreeSet;

use omclab::equivariant::{fixed_polytope, hstar_series, Permutation};
use omclab::family::{
    build_family_polytope, eulerian_polynomial, f_polynomial, family_ehrhart, symmetric_edge_polytope_complete,
};
use omclab::matroid::{circuits_from_digraph, Digraph};
use omclab::polytope::{ehrhart, f_vector, face_lattice, facets, fixed_subpolytope, omc_polytope};
use omclab::{IntPolynomial, RatMatrix};

use crate::input::Input;
use crate::report::{Check, CliResult, RunReport};

pub const EXAMPLE_MATRIX: &str = include_str!("../../fixtures/example_matrix.json");
pub const D3: &str = include_str!("../../fixtures/d3.json");
pub const B3_PLUS: &str = include_str!("../../fixtures/b3_plus.json");
pub const K4: &str = include_str!("../../fixtures/k4.json");
pub const K4_MINUS_E: &str = include_str!("../../fixtures/k4_minus_e.json");
pub const C4: &str = include_str!("../../fixtures/c4.json");

fn set_strings(input: &Input, dual: bool) -> CliResult<BTreeSet<String>> {
    Ok(input.circuit_set(dual)?.iter().map(|c| c.set_string()).collect())
}

fn examples(report: &mut RunReport) -> CliResult<()> {
    let m = Input::parse(EXAMPLE_MATRIX)?;
    let listed: BTreeSet<String> = ["(5|)", "(|5)", "(4|6)", "(6|4)", "(134|2)", "(2|134)", "(136|2)", "(2|136)"]
        .into_iter()
        .map(String::from)
        .collect();
    report.check(Check::equal("example matrix circuits", &set_strings(&m, false)?, &listed));

    let d3 = set_strings(&Input::parse(D3)?, false)?;
    let found = (d3.len(), d3.contains("(1|36)"), d3.contains("(36|45)"));
    report.check(Check::equal("D3: 14 circuits with (1|36) and (36|45)", &found, &(14, true, true)));

    let b3 = Input::parse(B3_PLUS)?;
    let dims = (b3.polytope(false)?.dimension(), b3.polytope(true)?.dimension());
    report.check(Check::equal("B3+ primal and dual dimensions", &dims, &(9, 9)));

    let k4 = Input::parse(K4)?.polytope(true)?;
    report.check(Check::equal("K4 cocircuit polytope dimension", &k4.dimension(), &3));

    let p = Input::parse(K4_MINUS_E)?.polytope(true)?;
    let triangles = face_lattice(&p)?.iter().filter(|f| f.dim == 2 && f.vertex_indices.len() == 3).count();
    let got = (p.vertex_count(), p.dimension(), facets(&p).inequalities.len(), triangles);
    report.check(Check::equal("K4 minus 14: vertices, dim, facets, triangles", &got, &(12, 3, 14, 8)));

    let bouquet = omc_polytope(&circuits_from_digraph(&Digraph::bouquet(3)))?;
    report.check(Check::equal("three-loop bouquet f-vector", &f_vector(&face_lattice(&bouquet)?), &vec![6, 12, 8, 1]));
    Ok(())
}

fn family(report: &mut RunReport) -> CliResult<()> {
    for n in 3..=4 {
        let p = build_family_polytope(n)?;
        let f: Vec<usize> =
            f_polynomial(n)?.coefficients().iter().map(|c| usize::try_from(c).expect("small counts")).collect();
        report.check(Check::equal(format!("n = {n}: f-polynomial vs face lattice"), &f, &f_vector(&face_lattice(&p)?)));
        let data = ehrhart(&p)?;
        report.check(Check::equal(
            format!("n = {n}: Ehrhart polynomial (t+1)^n - t^n"),
            &data.polynomial.to_integer().map(|p| p.to_string()),
            &Some(family_ehrhart(n)?.to_string()),
        ));
        report.check(Check::equal(
            format!("n = {n}: h* is the Eulerian polynomial"),
            &format!("{:#}", data.h_star),
            &format!("{:#}", eulerian_polynomial(n)?),
        ));
        let dual = omclab::polytope::polar_dual(&symmetric_edge_polytope_complete(n)?)?;
        report.check(Check::new(format!("n = {n}: polar dual of the SEP"), dual.same_vertex_set(&p), ""));
    }
    Ok(())
}

fn equivariant(report: &mut RunReport) -> CliResult<()> {
    let table: [(&str, &[i64]); 5] = [
        ("()", &[1, 11, 11, 1]),
        ("(1 2)", &[1, 5, 5, 1]),
        ("(1 2)(3 4)", &[1, 3, 3, 1]),
        ("(1 2 3)", &[1, 2, 2, 1]),
        ("(1 2 3 4)", &[1, 1, 1, 1]),
    ];
    for (rep, h) in table {
        let sigma = Permutation::parse(4, rep)?;
        let got = hstar_series(&sigma)?.numerator;
        report.check(Check::equal(format!("S4 H* at {rep}"), &format!("{got:#}"), &format!("{:#}", IntPolynomial::from_i64(h))));
    }

    let sigma = Permutation::parse(4, "(2 4)")?;
    let family = fixed_polytope(&sigma)?.vertex_count();
    let Input::Digraph(c4) = Input::parse(C4)? else { unreachable!("fixture is a digraph") };
    let z = omclab::family::cycle_graphic_zonotope(c4.node_count())?;
    let mut swap = RatMatrix::zeros(4, 4);
    for (i, j) in [(0, 0), (1, 3), (2, 2), (3, 1)] {
        swap.set(i, j, omclab::exact::rat(1));
    }
    let graphic = fixed_subpolytope(&z, &swap)?.vertex_count();
    report.check(Check::equal("(2 4): S4-fixed vs node-fixed vertex counts", &(family, graphic), &(6, 4)));
    Ok(())
}

pub fn run() -> CliResult<RunReport> {
    let mut report = RunReport::new("reproduce");
    examples(&mut report)?;
    family(&mut report)?;
    equivariant(&mut report)?;
    let passed = report.checks.iter().filter(|c| c.passed).count();
    report.output("passed", passed.to_string());
    report.output("failed", (report.checks.len() - passed).to_string());
    report.line(format!("{passed} of {} reproduction checks passed", report.checks.len()));
    Ok(report)
}
