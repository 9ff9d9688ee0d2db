//! Output rendering: DOT bodies and the JSON report.

use graph_squares::Graph;
use serde::Serialize;

/// The JSON report emitted with `--format json-report`.
///
/// Field names are stable: command, verdict, stage, edges, witness,
/// certificate.
#[derive(Serialize)]
pub struct Report {
    pub command: String,
    pub verdict: String,
    pub stage: Option<String>,
    pub edges: Option<usize>,
    pub witness: Option<Vec<usize>>,
    pub certificate: Option<serde_json::Value>,
}

impl Report {
    pub fn new(command: &str, verdict: &str) -> Self {
        Report {
            command: command.to_string(),
            verdict: verdict.to_string(),
            stage: None,
            edges: None,
            witness: None,
            certificate: None,
        }
    }

    pub fn print(&self) {
        println!(
            "{}",
            serde_json::to_string(self).expect("report serializes")
        );
    }
}

/// Edge list of a graph as a JSON value, for report certificates.
pub fn edges_json(g: &Graph) -> serde_json::Value {
    serde_json::json!(g.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>())
}

/// Plain undirected DOT body with sorted edges.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}
