use std::collections::BTreeMap;

use omclab::equivariant::{
    action_matrix, character_det, cycle_product, fixed_ehrhart, fixed_polytope, hstar_series, Permutation,
};
use omclab::exact::format_rational;
use omclab::family::build_family_polytope;
use omclab::polytope::{fixed_subpolytope, lattice_count};
use omclab::IntPolynomial;
use serde_json::{json, Value};

use crate::report::{int_poly_json, Check, CliResult, Failure, RunReport};

pub const MAX_N: usize = 8;
pub const MAX_ALL_N: usize = 6;
pub const MAX_VERIFY_N: usize = 5;

fn factors_text(cycle_type: &[usize]) -> String {
    cycle_type
        .iter()
        .map(|&a| if a == 1 { "(1 - z)".to_string() } else { format!("(1 - z^{a})") })
        .collect::<Vec<_>>()
        .join("")
}

struct Row {
    json: Value,
    text: String,
    h_star: IntPolynomial,
}

fn row(sigma: &Permutation) -> CliResult<Row> {
    let series = hstar_series(sigma)?;
    let ehrhart = fixed_ehrhart(sigma);
    let det = character_det(sigma)?;
    let product = cycle_product(sigma);
    let p = fixed_polytope(sigma)?;
    let json = json!({
        "sigma": sigma.to_string(),
        "cycle_type": series.cycle_type,
        "fixed_vertex_count": p.vertex_count(),
        "fixed_ehrhart": int_poly_json(&ehrhart, 't'),
        "det": int_poly_json(&det, 'z'),
        "denominator": {
            "factors": series.cycle_type.iter().map(|a| a.to_string()).collect::<Vec<_>>(),
            "expanded": int_poly_json(&product, 'z'),
        },
        "h_star": int_poly_json(&series.numerator, 'z'),
    });
    let text = format!(
        "{:<12} type {:<12}  L(t) = {:<20}  H*(z) = {:<22}  over {}",
        sigma.to_string(),
        format!("{:?}", series.cycle_type),
        ehrhart.to_string(),
        format!("{:#}", series.numerator),
        factors_text(&series.cycle_type)
    );
    Ok(Row { json, text, h_star: series.numerator })
}

/// `(1 2 … a_1)(a_1+1 …)…` for a cycle type listed in descending order.
fn representative(n: usize, cycle_type: &[usize]) -> CliResult<Permutation> {
    let mut images = Vec::with_capacity(n);
    let mut start = 1;
    for &a in cycle_type {
        images.extend((start + 1..start + a).chain(std::iter::once(start)));
        start += a;
    }
    Ok(Permutation::from_images(images)?)
}

fn verify_sigma(report: &mut RunReport, sigma: &Permutation) -> CliResult<()> {
    let n = sigma.n();
    let generic = fixed_subpolytope(&build_family_polytope(n)?, &action_matrix(sigma)?)?;
    let closed = fixed_polytope(sigma)?;
    report.check(Check::new(
        format!("{sigma}: closed-form fixed polytope matches the generic one"),
        closed.same_vertex_set(&generic),
        format!("{} vertices", generic.vertex_count()),
    ));
    let k = sigma.cycle_count();
    let l = fixed_ehrhart(sigma);
    let counts: Vec<String> = (0..=k as u64).map(|t| lattice_count(&generic, t).to_string()).collect();
    let predicted: Vec<String> = (0..=k as u64).map(|t| l.eval(&t.into()).to_string()).collect();
    report.check(Check::equal(format!("{sigma}: fixed lattice counts"), &counts, &predicted));
    Ok(())
}

pub fn run(n: usize, sigma: Option<&str>, all: bool, verify: bool) -> CliResult<RunReport> {
    if !(2..=MAX_N).contains(&n) {
        return Err(Failure::Guard(format!("equivariant commands need 2 <= n <= {MAX_N}, got {n}")));
    }
    if all && n > MAX_ALL_N {
        return Err(Failure::Guard(format!("--all needs n <= {MAX_ALL_N}, got {n}")));
    }
    if verify && n > MAX_VERIFY_N {
        return Err(Failure::Guard(format!("generic cross-checks need n <= {MAX_VERIFY_N}, got {n}")));
    }
    let mut report = RunReport::new("equivariant");
    report.input("n", n);

    if all {
        report.input("all", true);
        let mut classes: BTreeMap<Vec<usize>, Vec<Permutation>> = BTreeMap::new();
        for s in Permutation::all(n) {
            classes.entry(s.cycle_type()).or_default().push(s);
        }
        let mut rows = Vec::new();
        report.line(format!("equivariant H*-series of P_{}, one row per cycle type", n - 1));
        for (cycle_type, members) in &classes {
            let rep = &representative(n, cycle_type)?;
            let r = row(rep)?;
            let constant = members.iter().map(|s| row(s).map(|x| x.h_star)).collect::<CliResult<Vec<_>>>()?;
            report.check(Check::new(
                format!("H* constant on cycle type {:?}", rep.cycle_type()),
                constant.iter().all(|h| *h == r.h_star),
                format!("{} elements", members.len()),
            ));
            if verify {
                verify_sigma(&mut report, rep)?;
            }
            let mut j = r.json;
            j["class_size"] = members.len().to_string().into();
            rows.push(j);
            report.line(format!("  [{:>3}] {}", members.len(), r.text));
        }
        report.output("rows", rows);
        return Ok(report);
    }

    let sigma = match sigma {
        Some(text) => Permutation::parse(n, text)?,
        None => Permutation::identity(n),
    };
    report.input("sigma", sigma.to_string());
    let r = row(&sigma)?;
    let p = fixed_polytope(&sigma)?;
    report.output("row", r.json);
    report.output(
        "fixed_vertices",
        p.vertices().iter().map(|v| v.iter().map(format_rational).collect::<Value>()).collect::<Value>(),
    );
    report.line(r.text);
    report.line(format!("fixed polytope: {} vertices, dimension {}", p.vertex_count(), p.dimension()));
    if verify {
        verify_sigma(&mut report, &sigma)?;
    }
    Ok(report)
}
