//! The instance document and the JSON shapes of every report.
//!
//! ```json
//! { "n": 3, "edges": [[0,1],[0,2],[1,2]], "h_edges": [[0,2]],
//!   "g": [1,1,1], "f": [1,1,1] }
//! ```
//!
//! `h_edges` defaults to empty. An optional `partition` (list of vertex
//! lists) is carried along for the clique-partition command. Keys are
//! written in the order shown; reports use the key orders of their
//! serialization structs below.

use serde::{Deserialize, Serialize, Serializer};

use crate::criteria::DeficiencyReport;
use crate::error::{Error, Result};
use crate::factor::FactorWitness;
use crate::graph::{EdgeSubset, Graph, VertexFunc, MAX_VERTICES};
use crate::sufficient::{CliquePartition, PremiseViolation, SufficiencyReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub h: EdgeSubset,
    pub g: VertexFunc,
    pub f: VertexFunc,
    pub partition: Option<CliquePartition>,
}

#[derive(Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct Document {
    n: i64,
    edges: Vec<[i64; 2]>,
    #[serde(default)]
    h_edges: Vec<[i64; 2]>,
    g: Vec<i64>,
    f: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    partition: Option<Vec<Vec<i64>>>,
}

fn pairs(field: &'static str, raw: &[[i64; 2]], n: i64) -> Result<Vec<(u32, u32)>> {
    let mut out = Vec::with_capacity(raw.len());
    for (i, &[u, v]) in raw.iter().enumerate() {
        if !(0 <= u && u < v && v < n) {
            return Err(Error::input(
                field,
                format!("entry {i} is [{u},{v}]; need 0 <= u < v < n = {n}"),
            ));
        }
        out.push((u as u32, v as u32));
    }
    let mut sorted = out.clone();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::input(field, format!("duplicate pair [{},{}]", w[0].0, w[0].1)));
    }
    Ok(out)
}

fn values(field: &'static str, raw: &[i64], n: usize) -> Result<Vec<u32>> {
    if raw.len() != n {
        return Err(Error::input(
            field,
            format!("has {} values, expected n = {n}", raw.len()),
        ));
    }
    raw.iter()
        .enumerate()
        .map(|(i, &x)| {
            u32::try_from(x)
                .ok()
                .filter(|&x| x >= 1)
                .ok_or_else(|| Error::input(field, format!("value {x} at vertex {i} is not a positive integer")))
        })
        .collect()
}

impl Instance {
    pub fn new(graph: Graph, h: EdgeSubset, g: VertexFunc, f: VertexFunc) -> Instance {
        Instance {
            graph,
            h,
            g,
            f,
            partition: None,
        }
    }

    /// Parses and validates a JSON instance document.
    pub fn from_json(text: &str) -> Result<Instance> {
        let doc: Document = serde_json::from_str(text).map_err(|e| Error::input("document", e.to_string()))?;
        if !(1..=MAX_VERTICES as i64).contains(&doc.n) {
            return Err(Error::input("n", format!("{} is outside 1..={MAX_VERTICES}", doc.n)));
        }
        let n = doc.n as usize;
        let edges = pairs("edges", &doc.edges, doc.n)?;
        let graph = Graph::new(n, edges).map_err(|e| Error::input("edges", e.to_string()))?;
        let h_edges = pairs("h_edges", &doc.h_edges, doc.n)?;
        if let Some(&(u, v)) = h_edges.iter().find(|&&(u, v)| !graph.has_edge(u as usize, v as usize)) {
            return Err(Error::input("h_edges", format!("[{u},{v}] is not listed in edges")));
        }
        let h = EdgeSubset::new(&graph, h_edges).map_err(|e| Error::input("h_edges", e.to_string()))?;
        let g = values("g", &doc.g, n)?;
        let f = values("f", &doc.f, n)?;
        if let Some(i) = (0..n).find(|&i| g[i] > f[i]) {
            return Err(Error::input(
                "f",
                format!("f[{i}] = {} is below g[{i}] = {}", f[i], g[i]),
            ));
        }
        let partition = match doc.partition {
            None => None,
            Some(parts) => {
                let mut out = Vec::with_capacity(parts.len());
                for part in parts {
                    let mut members = Vec::with_capacity(part.len());
                    for v in part {
                        if !(0..doc.n).contains(&v) {
                            return Err(Error::input("partition", format!("vertex {v} outside 0..{n}")));
                        }
                        members.push(v as u32);
                    }
                    out.push(members);
                }
                Some(CliquePartition::new(out))
            }
        };
        Ok(Instance {
            graph,
            h,
            g: VertexFunc::new(g)?,
            f: VertexFunc::new(f)?,
            partition,
        })
    }

    pub fn to_json(&self) -> String {
        let pairs = |es: &[(u32, u32)]| es.iter().map(|&(u, v)| [u as i64, v as i64]).collect();
        let vals = |f: &VertexFunc| f.values().iter().map(|&x| x as i64).collect();
        let doc = Document {
            n: self.graph.vertex_count() as i64,
            edges: pairs(self.graph.edges()),
            h_edges: pairs(self.h.edges()),
            g: vals(&self.g),
            f: vals(&self.f),
            partition: self.partition.as_ref().map(|p| {
                p.parts()
                    .iter()
                    .map(|part| part.iter().map(|&v| v as i64).collect())
                    .collect()
            }),
        };
        serde_json::to_string(&doc).expect("instance serializes")
    }
}

#[derive(Serialize)]
struct DeficiencyJson {
    holds: bool,
    min_deficiency: i64,
    #[serde(rename = "witness_S")]
    witness_s: Vec<u32>,
    #[serde(rename = "witness_T")]
    witness_t: Vec<u32>,
    scanned: u64,
}

impl Serialize for DeficiencyReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DeficiencyJson {
            holds: self.holds,
            min_deficiency: self.min_deficiency,
            witness_s: self.witness_s.to_vec(),
            witness_t: self.witness_t.to_vec(),
            scanned: self.scanned,
        }
        .serialize(s)
    }
}

impl Serialize for PremiseViolation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match *self {
            PremiseViolation::Component(i) => s.serialize_u64(i as u64),
            PremiseViolation::Degree { x } => [x].serialize(s),
            PremiseViolation::Ratio { x, y } => [x, y].serialize(s),
        }
    }
}

#[derive(Serialize)]
struct SufficiencyJson {
    premise_holds: bool,
    violating: Option<PremiseViolation>,
    conclusion_checked: bool,
    conclusion_holds: bool,
}

impl Serialize for SufficiencyReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SufficiencyJson {
            premise_holds: self.premise_holds,
            violating: self.violating,
            conclusion_checked: self.conclusion_checked,
            conclusion_holds: self.conclusion_holds,
        }
        .serialize(s)
    }
}

#[derive(Serialize)]
struct WitnessJson {
    exists: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    h2: Option<Vec<(u32, u32, u8)>>,
}

/// `{"exists":true,"h2":[[u,v,t],...]}` in edge order, or `{"exists":false}`.
pub fn witness_json(graph: &Graph, witness: Option<&FactorWitness>) -> String {
    let doc = WitnessJson {
        exists: witness.is_some(),
        h2: witness.map(|w| w.triples(graph)),
    };
    serde_json::to_string(&doc).expect("witness serializes")
}
