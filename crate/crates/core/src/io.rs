//! JSON interchange formats (`"format": 1`).
//!
//! Hypergraph: `{"format": 1, "vertices": [..], "edges": [[..], ..],
//! "isolated": [..]}`. `vertices` is optional; without it the vertex order is
//! the order of first appearance in `edges`, then in `isolated`. Labels may
//! be strings or integers.
//!
//! Complex: `{"format": 1, "ground": [..], "kind": "void" | "nonvoid",
//! "maximal_faces": [[..], ..]}`. The empty complex is `nonvoid` with the
//! single face `[]`.
//!
//! Rainbow input: `{"hypergraph": {..}, "covers": [[..], ..]}`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::complex::{ComplexKind, SimplicialComplex};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::rainbow::CoverSystem;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Deserialize)]
#[serde(untagged)]
enum Label {
    Text(String),
    Number(i64),
}

impl Label {
    fn into_string(self) -> String {
        match self {
            Label::Text(s) => s,
            Label::Number(n) => n.to_string(),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct HypergraphIn {
    format: Option<u32>,
    vertices: Option<Vec<Label>>,
    edges: Vec<Vec<Label>>,
    #[serde(default)]
    isolated: Vec<Label>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexIn {
    format: Option<u32>,
    ground: Vec<Label>,
    kind: ComplexKind,
    maximal_faces: Vec<Vec<Label>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RainbowIn {
    format: Option<u32>,
    hypergraph: Value,
    covers: Vec<Vec<Label>>,
}

#[derive(Serialize)]
struct HypergraphOut<'a> {
    format: u32,
    vertices: &'a [String],
    edges: Vec<Vec<&'a str>>,
}

#[derive(Serialize)]
struct ComplexOut<'a> {
    format: u32,
    ground: &'a [String],
    kind: ComplexKind,
    maximal_faces: Vec<Vec<&'a str>>,
}

/// A parsed input file: either format.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Hypergraph(Hypergraph),
    Complex(SimplicialComplex),
}

fn format_error(e: impl std::fmt::Display) -> Error {
    Error::Format(e.to_string())
}

fn check_version(v: Option<u32>) -> Result<()> {
    match v {
        None | Some(FORMAT_VERSION) => Ok(()),
        Some(other) => Err(Error::Format(format!("unsupported format version {other}"))),
    }
}

/// Label-to-index table with duplicate detection.
struct Vertices {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl Vertices {
    fn declared(labels: Vec<Label>) -> Result<Self> {
        let mut v = Vertices {
            labels: Vec::new(),
            index: HashMap::new(),
        };
        for l in labels {
            let l = l.into_string();
            if v.index.contains_key(&l) {
                return Err(Error::DuplicateVertex(l));
            }
            v.push(l);
        }
        Ok(v)
    }

    fn push(&mut self, l: String) -> usize {
        let i = self.labels.len();
        self.index.insert(l.clone(), i);
        self.labels.push(l);
        i
    }

    fn lookup(&self, l: &str) -> Result<usize> {
        self.index
            .get(l)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(l.to_string()))
    }

    fn lookup_or_add(&mut self, l: String) -> usize {
        match self.index.get(&l) {
            Some(i) => *i,
            None => self.push(l),
        }
    }

    fn set(&self, members: Vec<Label>) -> Result<VertexSet> {
        let mut s = VertexSet::EMPTY;
        for l in members {
            let l = l.into_string();
            let v = self.lookup(&l)?;
            if v >= MAX_VERTICES {
                return Err(Error::TooLarge {
                    what: "vertex count",
                    size: self.labels.len(),
                    cap: MAX_VERTICES,
                });
            }
            if s.contains(v) {
                return Err(Error::Format(format!(
                    "vertex {l:?} repeated within one set"
                )));
            }
            s.insert(v);
        }
        Ok(s)
    }
}

fn hypergraph_from(raw: HypergraphIn) -> Result<Hypergraph> {
    check_version(raw.format)?;
    let explicit = raw.vertices.is_some();
    let mut verts = Vertices::declared(raw.vertices.unwrap_or_default())?;
    if !explicit {
        for l in raw.edges.iter().flatten().chain(raw.isolated.iter()) {
            let s = match l {
                Label::Text(s) => s.clone(),
                Label::Number(n) => n.to_string(),
            };
            verts.lookup_or_add(s);
        }
    } else {
        for l in raw.isolated {
            verts.lookup(&l.into_string())?;
        }
    }
    let mut edges = Vec::with_capacity(raw.edges.len());
    for e in raw.edges {
        edges.push(verts.set(e)?);
    }
    Hypergraph::with_labels(verts.labels, edges)
}

fn complex_from(raw: ComplexIn) -> Result<SimplicialComplex> {
    check_version(raw.format)?;
    let verts = Vertices::declared(raw.ground)?;
    let mut faces = Vec::with_capacity(raw.maximal_faces.len());
    for f in raw.maximal_faces {
        faces.push(verts.set(f)?);
    }
    match raw.kind {
        ComplexKind::Void if !faces.is_empty() => {
            Err(Error::Format("a void complex has no faces".to_string()))
        }
        ComplexKind::Void => Ok(SimplicialComplex::void(verts.labels)),
        ComplexKind::NonVoid if faces.is_empty() => Err(Error::Format(
            "a nonvoid complex needs at least one face; the empty complex is [[]]".to_string(),
        )),
        ComplexKind::NonVoid => SimplicialComplex::from_generators(verts.labels, faces),
    }
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    hypergraph_from(serde_json::from_str(text).map_err(format_error)?)
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    complex_from(serde_json::from_str(text).map_err(format_error)?)
}

/// Hypergraph or complex, told apart by the `edges` / `maximal_faces` keys.
pub fn parse_input(text: &str) -> Result<Input> {
    let value: Value = serde_json::from_str(text).map_err(format_error)?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Format("expected a JSON object".to_string()))?;
    match (obj.contains_key("edges"), obj.contains_key("maximal_faces")) {
        (true, false) => Ok(Input::Hypergraph(hypergraph_from(
            serde_json::from_value(value).map_err(format_error)?,
        )?)),
        (false, true) => Ok(Input::Complex(complex_from(
            serde_json::from_value(value).map_err(format_error)?,
        )?)),
        _ => Err(Error::Format(
            "expected exactly one of \"edges\" (hypergraph) or \"maximal_faces\" (complex)"
                .to_string(),
        )),
    }
}

/// Cover sets name vertices of the embedded hypergraph.
pub fn parse_cover_system(text: &str) -> Result<CoverSystem> {
    let raw: RainbowIn = serde_json::from_str(text).map_err(format_error)?;
    check_version(raw.format)?;
    let h = hypergraph_from(serde_json::from_value(raw.hypergraph).map_err(format_error)?)?;
    let verts = Vertices::declared(h.labels().iter().cloned().map(Label::Text).collect())?;
    let mut covers = Vec::with_capacity(raw.covers.len());
    for c in raw.covers {
        covers.push(verts.set(c)?);
    }
    CoverSystem::new(h, covers)
}

fn names(labels: &[String], s: VertexSet) -> Vec<&str> {
    s.iter().map(|v| labels[v].as_str()).collect()
}

pub fn hypergraph_value(h: &Hypergraph) -> Value {
    let out = HypergraphOut {
        format: FORMAT_VERSION,
        vertices: h.labels(),
        edges: h.edges().iter().map(|e| names(h.labels(), *e)).collect(),
    };
    serde_json::to_value(out).expect("plain data serializes")
}

pub fn complex_value(k: &SimplicialComplex) -> Value {
    let out = ComplexOut {
        format: FORMAT_VERSION,
        ground: k.labels(),
        kind: k.kind(),
        maximal_faces: k.facets().iter().map(|f| names(k.labels(), *f)).collect(),
    };
    serde_json::to_value(out).expect("plain data serializes")
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    serde_json::to_string_pretty(&hypergraph_value(h)).expect("plain data serializes")
}

pub fn write_complex(k: &SimplicialComplex) -> String {
    serde_json::to_string_pretty(&complex_value(k)).expect("plain data serializes")
}
