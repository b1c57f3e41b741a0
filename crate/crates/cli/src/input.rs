use std::path::Path;

use omclab::matroid::{
    circuits_from_digraph, circuits_from_matrix, cocircuits_from_digraph, cocircuits_from_matrix, CircuitSet, Digraph,
};
use omclab::polytope::{omc_polytope, VPolytope};
use omclab::RatMatrix;
use serde_json::{json, Value};

use crate::report::{CliResult, Failure};

/// A parsed input file.
pub enum Input {
    Matrix(RatMatrix),
    Digraph(Digraph),
    Polytope(VPolytope),
}

impl Input {
    /// JSON arrays are matrices, objects with `"nodes"` digraphs, objects
    /// with `"vertices"` polytopes; anything else is read as CSV.
    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Parse(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> CliResult<Self> {
        let as_parse = |e: omclab::Error| Failure::Parse(e.to_string());
        let trimmed = text.trim_start();
        if trimmed.starts_with('[') {
            return RatMatrix::from_json_str(text).map(Input::Matrix).map_err(as_parse);
        }
        if trimmed.starts_with('{') {
            let value: Value = serde_json::from_str(text).map_err(|e| Failure::Parse(e.to_string()))?;
            if value.get("nodes").is_some() {
                return Digraph::from_json_str(text).map(Input::Digraph).map_err(as_parse);
            }
            if value.get("vertices").is_some() {
                return VPolytope::from_json_str(text).map(Input::Polytope).map_err(as_parse);
            }
            return Err(Failure::Parse("JSON object needs a \"nodes\" or \"vertices\" key".into()));
        }
        RatMatrix::from_csv_str(text).map(Input::Matrix).map_err(as_parse)
    }

    pub fn echo(&self) -> Value {
        match self {
            Input::Matrix(m) => json!({ "kind": "matrix", "matrix": m.to_json_value() }),
            Input::Digraph(g) => json!({ "kind": "digraph", "digraph": g.to_json_value() }),
            Input::Polytope(p) => json!({ "kind": "polytope", "polytope": p.to_json() }),
        }
    }

    /// Circuits, or cocircuits when `dual` is set.
    pub fn circuit_set(&self, dual: bool) -> CliResult<CircuitSet> {
        Ok(match (self, dual) {
            (Input::Matrix(m), false) => circuits_from_matrix(m),
            (Input::Matrix(m), true) => cocircuits_from_matrix(m),
            (Input::Digraph(g), false) => circuits_from_digraph(g),
            (Input::Digraph(g), true) => cocircuits_from_digraph(g),
            (Input::Polytope(_), _) => {
                return Err(Failure::Parse("a polytope file has no circuits; give a matrix or digraph".into()))
            }
        })
    }

    /// The OMC polytope of the (co)circuits, or the polytope itself.
    pub fn polytope(&self, dual: bool) -> CliResult<VPolytope> {
        match self {
            Input::Polytope(_) if dual => {
                Err(Failure::Parse("--dual applies to matrices and digraphs, not polytope files".into()))
            }
            Input::Polytope(p) => Ok(p.clone()),
            _ => Ok(omc_polytope(&self.circuit_set(dual)?)?),
        }
    }
}
