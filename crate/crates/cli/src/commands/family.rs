use std::collections::BTreeSet;

use clap::ValueEnum;
use omclab::exact::format_rational;
use omclab::family::{
    build_family_polytope, eulerian_polynomial, f_polynomial, face_from_label, face_lattice_poset, family_ehrhart,
    generator_u, subset_labels, symmetric_edge_polytope_complete, vertex_u, vertex_u_hat,
};
use omclab::polytope::{ehrhart, f_vector, face_lattice, polar_dual, zonotope};
use omclab::IntPolynomial;
use serde_json::{json, Value};

use crate::report::{int_poly_json, Check, CliResult, Failure, RunReport};

pub const MAX_N: usize = 8;
pub const MAX_VERIFY_N: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyQuery {
    Vertices,
    Fpoly,
    Ehrhart,
    Faces,
    SepDualCheck,
}

impl FamilyQuery {
    fn name(self) -> &'static str {
        match self {
            Self::Vertices => "vertices",
            Self::Fpoly => "fpoly",
            Self::Ehrhart => "ehrhart",
            Self::Faces => "faces",
            Self::SepDualCheck => "sep-dual-check",
        }
    }
}

fn strings(v: &[omclab::Rational]) -> Value {
    v.iter().map(format_rational).collect()
}

fn usize_poly(p: &IntPolynomial) -> Vec<usize> {
    p.coefficients().iter().map(|c| usize::try_from(c).expect("face counts fit")).collect()
}

pub fn run(n: usize, query: FamilyQuery, verify: bool) -> CliResult<RunReport> {
    if !(2..=MAX_N).contains(&n) {
        return Err(Failure::Guard(format!("family commands need 2 <= n <= {MAX_N}, got {n}")));
    }
    let checks_needed = verify || query == FamilyQuery::SepDualCheck;
    if checks_needed && n > MAX_VERIFY_N {
        return Err(Failure::Guard(format!("generic cross-checks need n <= {MAX_VERIFY_N}, got {n}")));
    }
    let mut report = RunReport::new("family");
    report.input("n", n);
    report.input("query", query.name());

    match query {
        FamilyQuery::Vertices => {
            let labels = subset_labels(n)?;
            let rows: Vec<Value> = labels
                .iter()
                .map(|l| json!({ "label": l.to_string(), "u": strings(&vertex_u(l)), "u_hat": strings(&vertex_u_hat(l)) }))
                .collect();
            report.output("count", labels.len());
            report.output("vertices", rows);
            report.line(format!("{} vertices u_I, I a nonempty proper subset of [{n}]", labels.len()));
            for l in &labels {
                let u: Vec<String> = vertex_u(l).iter().map(format_rational).collect();
                report.line(format!("  {l}: ({})", u.join(", ")));
            }
            if verify {
                let p = build_family_polytope(n)?;
                let gens: Vec<_> = (1..=n).map(|i| generator_u(n, i)).collect();
                let z = zonotope(&gens)?;
                report.check(Check::new(
                    "vertices are the zonotope of u_1..u_n",
                    z.same_vertex_set(&p),
                    format!("{} zonotope vertices", z.vertex_count()),
                ));
            }
        }
        FamilyQuery::Fpoly => {
            let f = f_polynomial(n)?;
            report.output("f_polynomial", int_poly_json(&f, 't'));
            report.line(format!("f(t) = {f}"));
            if verify {
                let generic = f_vector(&face_lattice(&build_family_polytope(n)?)?);
                report.check(Check::equal("matches the generic face lattice", &usize_poly(&f), &generic));
            }
        }
        FamilyQuery::Ehrhart => {
            let l = family_ehrhart(n)?;
            let h = eulerian_polynomial(n)?;
            report.output("ehrhart", int_poly_json(&l, 't'));
            report.output("h_star", int_poly_json(&h, 'z'));
            report.line(format!("L(t) = {l}"));
            report.line(format!("h*(z) = {h:#}"));
            if verify {
                let data = ehrhart(&build_family_polytope(n)?)?;
                report.check(Check::equal(
                    "matches generic lattice counts",
                    &data.polynomial.to_integer().map(|p| p.to_string()),
                    &Some(l.to_string()),
                ));
                report.check(Check::equal("h* matches generic h*", &format!("{:#}", data.h_star), &format!("{h:#}")));
            }
        }
        FamilyQuery::Faces => {
            let poset = face_lattice_poset(n)?;
            report.output("counts_by_dim", poset.counts_by_dim().iter().map(|c| c.to_string()).collect::<Value>());
            report.output("faces", poset.labels().iter().map(|l| json!({ "dim": l.dim(), "label": l.to_json() })).collect::<Value>());
            report.line(format!("{} proper faces, counts by dimension {:?}", poset.len(), poset.counts_by_dim()));
            for l in poset.labels() {
                report.line(format!("  dim {}: {l}", l.dim()));
            }
            if verify {
                let p = build_family_polytope(n)?;
                let generic: BTreeSet<_> = face_lattice(&p)?.into_iter().filter(|r| r.dim < n - 1).collect();
                let from_labels: BTreeSet<_> = poset.labels().iter().map(face_from_label).collect();
                report.check(Check::new(
                    "labels give exactly the generic proper faces",
                    generic == from_labels,
                    format!("{} generic, {} labelled", generic.len(), from_labels.len()),
                ));
            }
        }
        FamilyQuery::SepDualCheck => {
            let sep = symmetric_edge_polytope_complete(n)?;
            let dual = polar_dual(&sep)?;
            let p = build_family_polytope(n)?;
            let passed = dual.same_vertex_set(&p);
            report.output("sep_vertices", sep.vertex_count());
            report.output("dual_vertices", dual.vertex_count());
            report.output("result", if passed { "pass" } else { "fail" });
            report.line(format!(
                "polar dual of the symmetric edge polytope of K_{n}: {} vertices, {}",
                dual.vertex_count(),
                if passed { "equal to the family polytope" } else { "differs from the family polytope" }
            ));
            report.check(Check::new("polar dual equals the family polytope", passed, format!("n = {n}")));
        }
    }
    Ok(report)
}
