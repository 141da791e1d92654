//! Network files, coordinate lists and lattice dimensions.
//!
//! JSON networks look like `{"nodes": 4, "edges": [[0, 1, "3/2"], [1, 2, 0.5]]}`.
//! The text format has one `i j r` triple per line, `#` starting a comment,
//! and an optional `nodes N` line; without it the node count is one more
//! than the largest index.

use resistnet_core::{build_network, BoundaryCondition, ExactRational, Network};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NetworkFormat {
    Json,
    Text,
}

impl NetworkFormat {
    /// JSON when the extension says so or the text starts with `{`.
    pub fn detect(path: Option<&str>, text: &str) -> Self {
        let by_ext = path.is_some_and(|p| p.to_ascii_lowercase().ends_with(".json"));
        if by_ext || text.trim_start().starts_with('{') {
            NetworkFormat::Json
        } else {
            NetworkFormat::Text
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonNetwork {
    nodes: usize,
    edges: Vec<(Value, Value, Value)>,
}

#[derive(Serialize)]
struct JsonNetworkOut {
    nodes: usize,
    edges: Vec<(usize, usize, String)>,
}

fn parse_err(msg: impl Into<String>) -> CliError {
    CliError::Parse(msg.into())
}

fn resistance_literal(v: &Value, edge: usize) -> CliResult<ExactRational> {
    let text = match v {
        Value::String(s) => s.clone(),
        // Numbers arrive as their shortest round-trip decimal, read exactly.
        Value::Number(n) => n.to_string(),
        other => {
            return Err(parse_err(format!(
                "edge {edge}: resistance must be a string or number, got {other}"
            )))
        }
    };
    text.parse::<ExactRational>()
        .map_err(|e| parse_err(format!("edge {edge}: {e}")))
}

fn node_label(v: &Value, edge: usize, base: usize) -> CliResult<usize> {
    let raw = v
        .as_u64()
        .ok_or_else(|| parse_err(format!("edge {edge}: node label {v} is not a nonnegative integer")))?;
    label_to_index(raw as usize, base)
        .ok_or_else(|| parse_err(format!("edge {edge}: node label {raw} is below {base}")))
}

fn label_to_index(label: usize, base: usize) -> Option<usize> {
    label.checked_sub(base)
}

fn finish(nodes: usize, edges: Vec<(usize, usize, ExactRational)>) -> CliResult<Network> {
    build_network(nodes, edges).map_err(|e| parse_err(e.to_string()))
}

/// Parse a network; `base` is the smallest node label (0 or 1).
pub fn parse_network(text: &str, format: NetworkFormat, base: usize) -> CliResult<Network> {
    match format {
        NetworkFormat::Json => parse_json(text, base),
        NetworkFormat::Text => parse_text(text, base),
    }
}

fn parse_json(text: &str, base: usize) -> CliResult<Network> {
    let raw: JsonNetwork = serde_json::from_str(text).map_err(|e| parse_err(format!("network JSON: {e}")))?;
    let edges = raw
        .edges
        .iter()
        .enumerate()
        .map(|(k, (a, b, r))| {
            Ok((
                node_label(a, k, base)?,
                node_label(b, k, base)?,
                resistance_literal(r, k)?,
            ))
        })
        .collect::<CliResult<Vec<_>>>()?;
    finish(raw.nodes, edges)
}

fn parse_text(text: &str, base: usize) -> CliResult<Network> {
    let mut nodes = None;
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let at = |msg: String| parse_err(format!("line {}: {msg}", lineno + 1));
        match fields.as_slice() {
            ["nodes", n] => {
                nodes = Some(n.parse::<usize>().map_err(|e| at(format!("node count {n:?}: {e}")))?);
            }
            [a, b, r] => {
                let label = |s: &str| -> CliResult<usize> {
                    let raw = s.parse::<usize>().map_err(|e| at(format!("node label {s:?}: {e}")))?;
                    label_to_index(raw, base).ok_or_else(|| at(format!("node label {raw} is below {base}")))
                };
                let r = r.parse::<ExactRational>().map_err(|e| at(e.to_string()))?;
                edges.push((label(a)?, label(b)?, r));
            }
            _ => return Err(at(format!("expected `i j r` or `nodes N`, got {line:?}"))),
        }
    }
    let inferred = edges.iter().map(|(a, b, _)| a.max(b) + 1).max().unwrap_or(0);
    finish(nodes.unwrap_or(inferred), edges)
}

/// The JSON form of `net` with 0-based labels and exact resistances.
pub fn network_to_json(net: &Network) -> String {
    let out = JsonNetworkOut {
        nodes: net.n_nodes(),
        edges: net
            .edges()
            .iter()
            .map(|e| (e.a, e.b, e.resistance.to_string()))
            .collect(),
    };
    serde_json::to_string(&out).expect("network serializes")
}

/// `5x4` or `5x5x4`.
pub fn parse_dims(s: &str) -> CliResult<Vec<usize>> {
    s.split(['x', 'X'])
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|e| parse_err(format!("dimension {p:?} in {s:?}: {e}")))
        })
        .collect()
}

/// `3,3` or `3,3,3`.
pub fn parse_coords(s: &str) -> CliResult<Vec<usize>> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|e| parse_err(format!("coordinate {p:?} in {s:?}: {e}")))
        })
        .collect()
}

/// Signed offsets such as `1,-1,0`.
pub fn parse_offsets(s: &str) -> CliResult<Vec<i64>> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|e| parse_err(format!("offset {p:?} in {s:?}: {e}")))
        })
        .collect()
}

pub fn parse_rational(s: &str) -> CliResult<ExactRational> {
    s.parse::<ExactRational>().map_err(|e| parse_err(e.to_string()))
}

/// A boundary condition name; `free` and `periodic` pick the dimension from
/// the number of axes.
pub fn parse_bc(name: &str, axes: usize) -> CliResult<BoundaryCondition> {
    let key = name.trim().to_ascii_lowercase();
    let resolved = match (key.as_str(), axes) {
        ("free" | "open", 1) => Some(BoundaryCondition::Free1D),
        ("free" | "open", 2) => Some(BoundaryCondition::Free2D),
        ("free" | "open", 3) => Some(BoundaryCondition::Free3D),
        ("periodic" | "torus" | "ring", 1) => Some(BoundaryCondition::Periodic1D),
        ("periodic" | "torus", 2) => Some(BoundaryCondition::Periodic2D),
        ("free" | "open" | "periodic" | "torus" | "ring", n) => {
            return Err(parse_err(format!("no {name} lattice with {n} axes")));
        }
        _ => None,
    };
    match resolved {
        Some(bc) => Ok(bc),
        None => name.parse::<BoundaryCondition>().map_err(|e| parse_err(e.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_and_text_agree() {
        let json = r#"{"nodes": 3, "edges": [[0, 1, "1/2"], [1, 2, 0.25], [2, 0, 3]]}"#;
        let text = "# triangle\nnodes 3\n0 1 1/2\n1 2 0.25   # quarter\n2 0 3\n";
        let a = parse_network(json, NetworkFormat::Json, 0).unwrap();
        let b = parse_network(text, NetworkFormat::Text, 0).unwrap();
        assert_eq!(a.laplacian_exact(), b.laplacian_exact());
        assert_eq!(a.edges()[1].resistance, "1/4".parse().unwrap());
    }

    #[test]
    fn one_based_labels() {
        let a = parse_network("1 2 1\n2 3 1\n", NetworkFormat::Text, 1).unwrap();
        assert_eq!(a.n_nodes(), 3);
        assert!(parse_network("0 1 1\n", NetworkFormat::Text, 1).is_err());
    }

    #[test]
    fn malformed_inputs() {
        for (text, fmt) in [
            ("0 1", NetworkFormat::Text),
            ("0 1 x", NetworkFormat::Text),
            ("0 0 1", NetworkFormat::Text),
            ("0 1 -2", NetworkFormat::Text),
            (r#"{"nodes": 2, "edges": [[0, 2, 1]]}"#, NetworkFormat::Json),
            (r#"{"nodes": 2, "edges": [[0, 1, true]]}"#, NetworkFormat::Json),
            (r#"{"nodes": 2, "edge": []}"#, NetworkFormat::Json),
            ("{", NetworkFormat::Json),
        ] {
            assert!(matches!(parse_network(text, fmt, 0), Err(CliError::Parse(_))), "{text}");
        }
    }

    #[test]
    fn detection() {
        assert_eq!(NetworkFormat::detect(Some("a.JSON"), "0 1 1"), NetworkFormat::Json);
        assert_eq!(NetworkFormat::detect(None, "  {\"nodes\":1}"), NetworkFormat::Json);
        assert_eq!(NetworkFormat::detect(Some("net.txt"), "0 1 1"), NetworkFormat::Text);
    }

    #[test]
    fn lattice_words() {
        assert_eq!(parse_dims("5x4").unwrap(), vec![5, 4]);
        assert_eq!(parse_coords("3, 3,3").unwrap(), vec![3, 3, 3]);
        assert_eq!(parse_offsets("1,-1").unwrap(), vec![1, -1]);
        assert!(parse_dims("5x").is_err());
        assert_eq!(parse_bc("free", 3).unwrap(), BoundaryCondition::Free3D);
        assert_eq!(parse_bc("periodic", 2).unwrap(), BoundaryCondition::Periodic2D);
        assert_eq!(parse_bc("Möbius", 2).unwrap(), BoundaryCondition::Moebius);
        assert!(parse_bc("periodic", 3).is_err());
        assert!(parse_bc("sphere", 2).is_err());
    }
}
