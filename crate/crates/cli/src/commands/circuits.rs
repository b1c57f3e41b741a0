use omclab::matroid::{validate_circuit_axioms, CircuitSet, SignedSet};
use serde_json::{json, Value};

use crate::input::Input;
use crate::report::{Check, CliResult, RunReport};

/// Circuits and cocircuits of one oriented matroid are orthogonal: their
/// supports are disjoint or their sign products take both signs.
fn orthogonal(x: &SignedSet, y: &SignedSet) -> bool {
    let products: Vec<i8> = (0..x.ground_size()).map(|e| x.sign(e) * y.sign(e)).filter(|&p| p != 0).collect();
    products.is_empty() || (products.contains(&1) && products.contains(&-1))
}

fn listing(set: &CircuitSet) -> Value {
    set.iter()
        .map(|c| json!({ "signs": c.sign_string(), "set": c.set_string() }))
        .collect()
}

pub fn run(input: &Input, dual: bool, verify: bool) -> CliResult<RunReport> {
    let mut report = RunReport::new("circuits");
    report.input("source", input.echo());
    report.input("dual", dual);
    let set = input.circuit_set(dual)?;
    let noun = if dual { "cocircuits" } else { "circuits" };

    report.output("kind", noun);
    report.output("ground_size", set.ground_size());
    report.output("count", set.len());
    report.output(noun, listing(&set));
    report.line(format!("{} {noun} on a ground set of size {}", set.len(), set.ground_size()));
    for c in set.iter() {
        report.line(format!("  {}  {}", c.sign_string(), c.set_string()));
    }

    let axioms = validate_circuit_axioms(&set);
    let detail = match &axioms {
        Ok(()) => "C0-C3 hold".to_string(),
        Err(v) => v.to_string(),
    };
    report.output("axioms", if axioms.is_ok() { "ok".to_string() } else { detail.clone() });
    report.check(Check::new("circuit axioms", axioms.is_ok(), detail));

    if verify {
        let other = input.circuit_set(!dual)?;
        let bad = set.iter().flat_map(|x| other.iter().map(move |y| (x, y))).find(|(x, y)| !orthogonal(x, y));
        let detail = match bad {
            None => format!("{} x {} pairs", set.len(), other.len()),
            Some((x, y)) => format!("{} and {} are not orthogonal", x.set_string(), y.set_string()),
        };
        report.check(Check::new("circuit/cocircuit orthogonality", bad.is_none(), detail));
        if let Input::Digraph(g) = input {
            let a = g.incidence_matrix();
            let from_matrix = if dual {
                omclab::matroid::cocircuits_from_matrix(&a)
            } else {
                omclab::matroid::circuits_from_matrix(&a)
            };
            report.check(Check::new(
                "graph enumeration matches incidence matrix",
                from_matrix == set,
                format!("{} from the matrix", from_matrix.len()),
            ));
        }
    }
    Ok(report)
}
