use clap::ValueEnum;
use omclab::exact::{format_rational, rank_of_vectors, rat, sub_vectors, RatVector};
use omclab::polytope::{
    certify_vertices, ehrhart, f_vector, face_lattice_with_limit, facets, lattice_count, VPolytope,
    DEFAULT_MAX_FACE_DIM,
};
use omclab::Error;
use serde_json::{json, Value};

use crate::input::Input;
use crate::report::{int_poly_json, rat_poly_json, Check, CliResult, Failure, RunReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolytopeQuery {
    Vertices,
    Dim,
    Facets,
    Faces,
    Ehrhart,
    Hstar,
    Count,
}

impl PolytopeQuery {
    fn name(self) -> &'static str {
        match self {
            Self::Vertices => "vertices",
            Self::Dim => "dim",
            Self::Facets => "facets",
            Self::Faces => "faces",
            Self::Ehrhart => "ehrhart",
            Self::Hstar => "hstar",
            Self::Count => "count",
        }
    }
}

/// Face enumeration and Ehrhart data are refused above this dimension;
/// `OMCLAB_MAX_DIM` overrides it.
pub fn max_dim() -> CliResult<usize> {
    match std::env::var("OMCLAB_MAX_DIM") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Parse(format!("OMCLAB_MAX_DIM must be a nonnegative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_FACE_DIM),
    }
}

fn guard(p: &VPolytope) -> CliResult<()> {
    let limit = max_dim()?;
    if p.dimension() > limit {
        return Err(Error::DimensionGuard { dim: p.dimension(), limit }.into());
    }
    Ok(())
}

fn point_json(v: &[omclab::Rational]) -> Value {
    v.iter().map(format_rational).collect()
}

fn point_text(v: &[omclab::Rational]) -> String {
    format!("({})", v.iter().map(format_rational).collect::<Vec<_>>().join(", "))
}

pub fn run(input: &Input, dual: bool, query: PolytopeQuery, t: u64, verify: bool) -> CliResult<RunReport> {
    let mut report = RunReport::new("polytope");
    report.input("source", input.echo());
    report.input("dual", dual);
    report.input("query", query.name());
    if query == PolytopeQuery::Count {
        report.input("t", t.to_string());
    }
    let p = input.polytope(dual)?;
    let d = p.dimension();
    report.output("ambient_dim", p.ambient_dim());
    report.output("dimension", d);
    report.output("vertex_count", p.vertex_count());

    match query {
        PolytopeQuery::Vertices => vertices(&mut report, &p),
        PolytopeQuery::Dim => report.line(format!("dimension {d} ({} vertices in R^{})", p.vertex_count(), p.ambient_dim())),
        PolytopeQuery::Facets => facet_report(&mut report, &p, verify),
        PolytopeQuery::Faces => faces(&mut report, &p, verify)?,
        PolytopeQuery::Ehrhart | PolytopeQuery::Hstar => ehrhart_report(&mut report, &p, query, verify)?,
        PolytopeQuery::Count => count(&mut report, &p, t, verify)?,
    }

    if verify && query == PolytopeQuery::Dim {
        if let Input::Digraph(g) = input {
            let (v, e, k) = (g.node_count(), g.edge_count(), g.component_count());
            let want = if dual { v - k } else { e + k - v };
            report.check(Check::equal(
                if dual { "dimension |V| - k" } else { "dimension |E| - |V| + k" },
                &d,
                &want,
            ));
        }
        let certified = certify_vertices(&p).map(|c| c.len());
        report.check(Check::new(
            "every point is a certified vertex",
            certified.as_ref().ok() == Some(&p.vertex_count()),
            match certified {
                Ok(n) => format!("{n} certificates"),
                Err(e) => e.to_string(),
            },
        ));
    }
    Ok(report)
}

fn vertices(report: &mut RunReport, p: &VPolytope) {
    report.output("vertices", p.vertices().iter().map(|v| point_json(v)).collect::<Value>());
    report.line(format!("{} vertices in R^{}", p.vertex_count(), p.ambient_dim()));
    for v in p.vertices() {
        report.line(format!("  {}", point_text(v)));
    }
}

fn facet_report(report: &mut RunReport, p: &VPolytope, verify: bool) {
    let h = facets(p);
    report.output("facet_count", h.inequalities.len());
    report.output("hrep", h.to_json());
    report.line(format!("{} facets, {} equations", h.inequalities.len(), h.equations.len()));
    for c in &h.inequalities {
        report.line(format!("  {} . x <= {}", point_text(&c.normal), format_rational(&c.bound)));
    }
    for c in &h.equations {
        report.line(format!("  {} . x  = {}", point_text(&c.normal), format_rational(&c.bound)));
    }
    if verify {
        let inside = p.vertices().iter().all(|v| h.contains(v));
        report.check(Check::new("vertices satisfy the H-representation", inside, format!("{} vertices", p.vertex_count())));
        let d = p.dimension();
        let spanning = h.inequalities.iter().all(|c| {
            let tight: Vec<&RatVector> = p.vertices().iter().filter(|v| c.value(v) == c.bound).collect();
            let diffs: Vec<RatVector> = tight.iter().skip(1).map(|v| sub_vectors(v, tight[0])).collect();
            !tight.is_empty() && rank_of_vectors(&diffs) + 1 == d
        });
        report.check(Check::new("each facet has dimension dim - 1", spanning, format!("{} facets", h.inequalities.len())));
    }
}

fn faces(report: &mut RunReport, p: &VPolytope, verify: bool) -> CliResult<()> {
    let faces = face_lattice_with_limit(p, max_dim()?)?;
    let f = f_vector(&faces);
    report.output("f_vector", f.iter().map(|x| x.to_string()).collect::<Value>());
    report.output(
        "faces",
        faces.iter().map(|r| json!({ "dim": r.dim, "vertices": r.vertex_indices })).collect::<Value>(),
    );
    report.line(format!("f-vector {f:?} (last entry is the polytope)"));
    for r in &faces {
        report.line(format!("  dim {}: vertices {:?}", r.dim, r.vertex_indices));
    }
    if verify {
        let euler: i64 = f.iter().enumerate().map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) }).sum();
        report.check(Check::equal("Euler relation", &euler, &1));
    }
    Ok(())
}

fn ehrhart_report(report: &mut RunReport, p: &VPolytope, query: PolytopeQuery, verify: bool) -> CliResult<()> {
    guard(p)?;
    let data = ehrhart(p)?;
    report.output("h_star", int_poly_json(&data.h_star, 'z'));
    if query == PolytopeQuery::Ehrhart {
        report.output("counts", data.counts.iter().map(|c| c.to_string()).collect::<Value>());
        report.output("ehrhart", rat_poly_json(&data.polynomial));
        report.line(format!("L(t) = {}", data.polynomial));
        report.line(format!("L(0..{}) = {:?}", data.dimension, data.counts));
    }
    report.line(format!("h*(z) = {:#}", data.h_star));
    if verify {
        let t = data.dimension as u64 + 1;
        let predicted = data.polynomial.eval(&rat(t as i64));
        let counted = rat(lattice_count(p, t) as i64);
        report.check(Check::new(
            format!("polynomial predicts L({t})"),
            predicted == counted,
            format!("{} vs {}", format_rational(&predicted), format_rational(&counted)),
        ));
        report.check(Check::new("h* is nonnegative", data.h_star.has_nonnegative_coefficients(), format!("{:#}", data.h_star)));
    }
    Ok(())
}

fn count(report: &mut RunReport, p: &VPolytope, t: u64, verify: bool) -> CliResult<()> {
    let n = lattice_count(p, t);
    report.output("count", n.to_string());
    report.line(format!("#(tP ∩ Z^d) at t = {t}: {n}"));
    if verify {
        guard(p)?;
        let data = ehrhart(p)?;
        let predicted = data.polynomial.eval(&rat(t as i64));
        report.check(Check::new(
            "matches the Ehrhart polynomial",
            predicted == rat(n as i64),
            format!("L({t}) = {}", format_rational(&predicted)),
        ));
    }
    Ok(())
}
