// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! JSON graph documents, edge-list ingestion and DOT emission.
//!
//! The JSON document keeps exact node and edge ids, holes included:
//!
//! ```json
//! {"directed": false, "multigraph": true,
//!  "nodes": [{"id": 0, "data": "a"}, {"id": 2}],
//!  "edges": [{"id": 0, "source": 0, "target": 2, "data": {"weight": 1.5}}]}
//! ```
//!
//! Free-list state is not stored, so the order in which vacant ids get
//! reused after loading may differ from the original graph.

use std::fmt::{self, Write as _};

use serde::de::DeserializeOwned;
use serde::{ser, Deserialize, Serialize};
use serde_json::Value;

use crate::graph::{EdgeIndex, Graph, NodeIndex};
use crate::JsonGraph;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("invalid graph document: {0}")]
    Schema(String),
    #[error("payload cannot be stored in a graph document: {0}")]
    Unrepresentable(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NodeEntry {
    pub id: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub data: Option<Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeEntry {
    pub id: usize,
    pub source: usize,
    pub target: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub data: Option<Value>,
}

/// On-disk form of a graph. Entries are sorted by id.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub directed: bool,
    pub multigraph: bool,
    pub nodes: Vec<NodeEntry>,
    pub edges: Vec<EdgeEntry>,
}

fn payload_value<T: Serialize>(
    payload: &T,
    what: fmt::Arguments<'_>,
) -> Result<Option<Value>, FormatError> {
    payload
        .serialize(FiniteCheck)
        .map_err(|e| FormatError::Unrepresentable(format!("{what}: {}", e.0)))?;
    let value = serde_json::to_value(payload)
        .map_err(|e| FormatError::Unrepresentable(format!("{what}: {e}")))?;
    Ok((!value.is_null()).then_some(value))
}

pub fn to_document<N: Serialize, E: Serialize>(
    g: &Graph<N, E>,
) -> Result<GraphDocument, FormatError> {
    let nodes = g
        .nodes()
        .map(|(n, payload)| {
            Ok(NodeEntry {
                id: n.index(),
                data: payload_value(payload, format_args!("node {n}"))?,
            })
        })
        .collect::<Result<_, FormatError>>()?;
    let edges = g
        .edges()
        .map(|e| {
            Ok(EdgeEntry {
                id: e.index.index(),
                source: e.source.index(),
                target: e.target.index(),
                data: payload_value(e.payload, format_args!("edge {}", e.index))?,
            })
        })
        .collect::<Result<_, FormatError>>()?;
    Ok(GraphDocument {
        directed: g.is_directed(),
        multigraph: g.is_multigraph(),
        nodes,
        edges,
    })
}

/// Rebuilds a graph with JSON payloads; absent `data` becomes `null`.
pub fn from_document(doc: &GraphDocument) -> Result<JsonGraph, FormatError> {
    from_document_as(doc)
}

/// Rebuilds a graph, deserializing payloads into `N` and `E`.
pub fn from_document_as<N: DeserializeOwned, E: DeserializeOwned>(
    doc: &GraphDocument,
) -> Result<Graph<N, E>, FormatError> {
    fn decode<T: DeserializeOwned>(data: &Option<Value>, what: String) -> Result<T, FormatError> {
        serde_json::from_value(data.clone().unwrap_or(Value::Null))
            .map_err(|e| FormatError::Schema(format!("{what}: {e}")))
    }
    let nodes = doc
        .nodes
        .iter()
        .map(|n| {
            Ok((
                NodeIndex::new(n.id),
                decode(&n.data, format!("node {}", n.id))?,
            ))
        })
        .collect::<Result<Vec<_>, FormatError>>()?;
    let edges = doc
        .edges
        .iter()
        .map(|e| {
            Ok((
                EdgeIndex::new(e.id),
                NodeIndex::new(e.source),
                NodeIndex::new(e.target),
                decode(&e.data, format!("edge {}", e.id))?,
            ))
        })
        .collect::<Result<Vec<_>, FormatError>>()?;
    Graph::from_indexed_parts(doc.directed, doc.multigraph, nodes, edges)
        .map_err(FormatError::Schema)
}

/// Serializes `g` as a pretty-printed JSON document.
pub fn to_json<N: Serialize, E: Serialize>(g: &Graph<N, E>) -> Result<String, FormatError> {
    Ok(serde_json::to_string_pretty(&to_document(g)?)?)
}

pub fn from_json(text: &str) -> Result<JsonGraph, FormatError> {
    let doc: GraphDocument = serde_json::from_str(text)?;
    from_document(&doc)
}

/// Parses `u v [w]` lines; `#` starts a comment line.
///
/// Nodes `0..=max id` are created with `null` payloads. A weight is stored
/// as the edge payload `{"weight": w}`.
pub fn from_edge_list(text: &str, directed: bool) -> Result<JsonGraph, FormatError> {
    let mut edges = Vec::new();
    let mut max_id = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_error = |message: String| FormatError::Parse {
            line: i + 1,
            message,
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if !(2..=3).contains(&tokens.len()) {
            return Err(parse_error(format!(
                "expected `u v` or `u v w`, found {} fields",
                tokens.len()
            )));
        }
        let node = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| parse_error(format!("`{t}` is not a node id")))
        };
        let (u, v) = (node(tokens[0])?, node(tokens[1])?);
        let payload = match tokens.get(2) {
            Some(t) => {
                let w = t
                    .parse::<f64>()
                    .ok()
                    .and_then(serde_json::Number::from_f64)
                    .ok_or_else(|| parse_error(format!("`{t}` is not a finite number")))?;
                serde_json::json!({ "weight": w })
            }
            None => Value::Null,
        };
        max_id = max_id.max(Some(u.max(v)));
        edges.push((u, v, payload));
    }
    let nodes = max_id.map_or(0, |m| m + 1);
    let mut g = Graph::with_capacity(directed, true, nodes, edges.len());
    for _ in 0..nodes {
        g.add_node(Value::Null);
    }
    for (u, v, payload) in edges {
        g.add_edge(NodeIndex::new(u), NodeIndex::new(v), payload)
            .expect("endpoints were created above");
    }
    Ok(g)
}

/// Graphviz text without node labels.
pub fn to_dot<N, E>(g: &Graph<N, E>) -> String {
    write_dot(g, None::<fn(&N) -> String>)
}

/// Graphviz text labelling each node with `label(payload)`.
pub fn to_dot_with_labels<N, E, F>(g: &Graph<N, E>, label: F) -> String
where
    F: Fn(&N) -> String,
{
    write_dot(g, Some(label))
}

fn write_dot<N, E, F>(g: &Graph<N, E>, label: Option<F>) -> String
where
    F: Fn(&N) -> String,
{
    let (keyword, arrow) = if g.is_directed() {
        ("digraph", "->")
    } else {
        ("graph", "--")
    };
    let mut out = String::new();
    writeln!(out, "{keyword} {{").unwrap();
    for (n, payload) in g.nodes() {
        match &label {
            Some(f) => {
                writeln!(out, "    N_{n} [label=\"{}\"];", escape_label(&f(payload))).unwrap()
            }
            None => writeln!(out, "    N_{n};").unwrap(),
        }
    }
    for (_, u, v) in g.edge_list() {
        writeln!(out, "    N_{u} {arrow} N_{v};").unwrap();
    }
    out.push_str("}\n");
    out
}

fn escape_label(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            _ => out.push(c),
        }
    }
    out
}

// Walks a payload and fails on NaN or infinite floats, which JSON cannot
// carry and serde_json would otherwise turn into `null`.
struct FiniteCheck;

#[derive(Debug)]
struct CheckError(String);

impl fmt::Display for CheckError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CheckError {}

impl ser::Error for CheckError {
    fn custom<T: fmt::Display>(msg: T) -> Self {
        CheckError(msg.to_string())
    }
}

fn check_float(v: f64) -> Result<(), CheckError> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(CheckError(format!("non-finite number {v}")))
    }
}

macro_rules! accept {
    ($($method:ident($t:ty)),* $(,)?) => {$(
        fn $method(self, _: $t) -> Result<(), CheckError> {
            Ok(())
        }
    )*};
}

impl ser::Serializer for FiniteCheck {
    type Ok = ();
    type Error = CheckError;
    type SerializeSeq = Self;
    type SerializeTuple = Self;
    type SerializeTupleStruct = Self;
    type SerializeTupleVariant = Self;
    type SerializeMap = Self;
    type SerializeStruct = Self;
    type SerializeStructVariant = Self;

    accept!(
        serialize_bool(bool),
        serialize_i8(i8),
        serialize_i16(i16),
        serialize_i32(i32),
        serialize_i64(i64),
        serialize_i128(i128),
        serialize_u8(u8),
        serialize_u16(u16),
        serialize_u32(u32),
        serialize_u64(u64),
        serialize_u128(u128),
        serialize_char(char),
        serialize_str(&str),
        serialize_bytes(&[u8]),
        serialize_unit_struct(&'static str),
    );

    fn serialize_f32(self, v: f32) -> Result<(), CheckError> {
        check_float(v.into())
    }

    fn serialize_f64(self, v: f64) -> Result<(), CheckError> {
        check_float(v)
    }

    fn serialize_none(self) -> Result<(), CheckError> {
        Ok(())
    }

    fn serialize_some<T: ?Sized + Serialize>(self, value: &T) -> Result<(), CheckError> {
        value.serialize(self)
    }

    fn serialize_unit(self) -> Result<(), CheckError> {
        Ok(())
    }

    fn serialize_unit_variant(
        self,
        _: &'static str,
        _: u32,
        _: &'static str,
    ) -> Result<(), CheckError> {
        Ok(())
    }

    fn serialize_newtype_struct<T: ?Sized + Serialize>(
        self,
        _: &'static str,
        value: &T,
    ) -> Result<(), CheckError> {
        value.serialize(self)
    }

    fn serialize_newtype_variant<T: ?Sized + Serialize>(
        self,
        _: &'static str,
        _: u32,
        _: &'static str,
        value: &T,
    ) -> Result<(), CheckError> {
        value.serialize(self)
    }

    fn serialize_seq(self, _: Option<usize>) -> Result<Self, CheckError> {
        Ok(self)
    }

    fn serialize_tuple(self, _: usize) -> Result<Self, CheckError> {
        Ok(self)
    }

    fn serialize_tuple_struct(self, _: &'static str, _: usize) -> Result<Self, CheckError> {
        Ok(self)
    }

    fn serialize_tuple_variant(
        self,
        _: &'static str,
        _: u32,
        _: &'static str,
        _: usize,
    ) -> Result<Self, CheckError> {
        Ok(self)
    }

    fn serialize_map(self, _: Option<usize>) -> Result<Self, CheckError> {
        Ok(self)
    }

    fn serialize_struct(self, _: &'static str, _: usize) -> Result<Self, CheckError> {
        Ok(self)
    }

    fn serialize_struct_variant(
        self,
        _: &'static str,
        _: u32,
        _: &'static str,
        _: usize,
    ) -> Result<Self, CheckError> {
        Ok(self)
    }
}

macro_rules! compound {
    ($($trait:ident :: $method:ident),* $(,)?) => {$(
        impl ser::$trait for FiniteCheck {
            type Ok = ();
            type Error = CheckError;

            fn $method<T: ?Sized + Serialize>(&mut self, value: &T) -> Result<(), CheckError> {
                value.serialize(FiniteCheck)
            }

            fn end(self) -> Result<(), CheckError> {
                Ok(())
            }
        }
    )*};
}

compound!(
    SerializeSeq::serialize_element,
    SerializeTuple::serialize_element,
    SerializeTupleStruct::serialize_field,
    SerializeTupleVariant::serialize_field,
);

impl ser::SerializeMap for FiniteCheck {
    type Ok = ();
    type Error = CheckError;

    fn serialize_key<T: ?Sized + Serialize>(&mut self, key: &T) -> Result<(), CheckError> {
        key.serialize(FiniteCheck)
    }

    fn serialize_value<T: ?Sized + Serialize>(&mut self, value: &T) -> Result<(), CheckError> {
        value.serialize(FiniteCheck)
    }

    fn end(self) -> Result<(), CheckError> {
        Ok(())
    }
}

impl ser::SerializeStruct for FiniteCheck {
    type Ok = ();
    type Error = CheckError;

    fn serialize_field<T: ?Sized + Serialize>(
        &mut self,
        _: &'static str,
        value: &T,
    ) -> Result<(), CheckError> {
        value.serialize(FiniteCheck)
    }

    fn end(self) -> Result<(), CheckError> {
        Ok(())
    }
}

impl ser::SerializeStructVariant for FiniteCheck {
    type Ok = ();
    type Error = CheckError;

    fn serialize_field<T: ?Sized + Serialize>(
        &mut self,
        _: &'static str,
        value: &T,
    ) -> Result<(), CheckError> {
        value.serialize(FiniteCheck)
    }

    fn end(self) -> Result<(), CheckError> {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn n(i: usize) -> NodeIndex {
        NodeIndex::new(i)
    }

    #[test]
    fn holes_survive_round_trip() {
        let mut g: Graph<String, f64> = Graph::new(true, false);
        for name in ["a", "b", "c", "d", "e", "f"] {
            g.add_node(name.to_string());
        }
        g.add_edge(n(0), n(5), 1.5).unwrap();
        g.add_edge(n(2), n(0), 2.0).unwrap();
        for i in [1, 3, 4] {
            g.remove_node(n(i)).unwrap();
        }
        let doc = to_document(&g).unwrap();
        let ids: Vec<usize> = doc.nodes.iter().map(|n| n.id).collect();
        assert_eq!(ids, vec![0, 2, 5]);
        let back: Graph<String, f64> = from_document_as(&doc).unwrap();
        assert_eq!(
            back.node_indices().collect::<Vec<_>>(),
            vec![n(0), n(2), n(5)]
        );
        assert_eq!(back.node_payload(n(5)).unwrap(), "f");
        assert_eq!(
            back.edge_list().collect::<Vec<_>>(),
            g.edge_list().collect::<Vec<_>>()
        );
        assert!(back.is_directed());
        assert!(!back.is_multigraph());
    }

    #[test]
    fn schema_errors() {
        let dangling = r#"{"directed": false, "multigraph": true,
            "nodes": [{"id": 0}], "edges": [{"id": 0, "source": 0, "target": 3}]}"#;
        assert!(matches!(from_json(dangling), Err(FormatError::Schema(_))));
        let duplicate = r#"{"directed": false, "multigraph": true,
            "nodes": [{"id": 0}, {"id": 0}], "edges": []}"#;
        assert!(matches!(from_json(duplicate), Err(FormatError::Schema(_))));
        let wrong_type = r#"{"directed": "no", "multigraph": true, "nodes": [], "edges": []}"#;
        assert!(matches!(from_json(wrong_type), Err(FormatError::Json(_))));
        let negative =
            r#"{"directed": false, "multigraph": true, "nodes": [{"id": -1}], "edges": []}"#;
        assert!(from_json(negative).is_err());
    }

    #[test]
    fn non_finite_payloads_are_rejected() {
        let mut g: Graph<(), f64> = Graph::undirected();
        g.add_node(());
        g.add_node(());
        g.add_edge(n(0), n(1), f64::NAN).unwrap();
        assert!(matches!(
            to_document(&g),
            Err(FormatError::Unrepresentable(_))
        ));
        let mut g: Graph<Vec<(String, f32)>, ()> = Graph::undirected();
        g.add_node(vec![("x".into(), f32::INFINITY)]);
        assert!(matches!(
            to_document(&g),
            Err(FormatError::Unrepresentable(_))
        ));
    }

    #[test]
    fn json_payloads_round_trip() {
        let mut g: JsonGraph = Graph::undirected();
        g.add_node(json!({"label": "q0", "tags": [1, 2.5, null]}));
        g.add_node(Value::Null);
        g.add_edge(n(0), n(1), json!({"weight": 3})).unwrap();
        let text = to_json(&g).unwrap();
        let back = from_json(&text).unwrap();
        assert_eq!(
            back.node_payload(n(0)).unwrap(),
            g.node_payload(n(0)).unwrap()
        );
        assert_eq!(*back.node_payload(n(1)).unwrap(), Value::Null);
        assert_eq!(
            back.edge_payload(EdgeIndex::new(0)).unwrap(),
            &json!({"weight": 3})
        );
    }

    #[test]
    fn edge_lists() {
        let g = from_edge_list("0 1\n1 2", false).unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (3, 2));
        let g = from_edge_list("# header\n\n0 1 2.5\n", true).unwrap();
        assert_eq!(
            g.edge_payload(EdgeIndex::new(0)).unwrap(),
            &json!({"weight": 2.5})
        );
        assert!(g.is_directed());
        match from_edge_list("0 x", false) {
            Err(FormatError::Parse { line, .. }) => assert_eq!(line, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
        match from_edge_list("0 1\n1 2 nan", false) {
            Err(FormatError::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(from_edge_list("0 1 2 3", false).is_err());
        assert_eq!(from_edge_list("", false).unwrap().node_count(), 0);
    }

    #[test]
    fn dot_output() {
        let mut d: Graph<(), ()> = Graph::directed();
        d.add_node(());
        d.add_node(());
        d.add_edge(n(0), n(1), ()).unwrap();
        assert_eq!(
            to_dot(&d),
            "digraph {\n    N_0;\n    N_1;\n    N_0 -> N_1;\n}\n"
        );

        let tri = crate::generators::generalized_petersen(3, 1).unwrap();
        let text = to_dot(&tri);
        assert!(text.starts_with("graph {"));
        assert_eq!(text.lines().filter(|l| l.contains(" -- ")).count(), 9);

        let mut q: Graph<&str, ()> = Graph::undirected();
        q.add_node(r#"a"b\c"#);
        let text = to_dot_with_labels(&q, |s| s.to_string());
        assert!(text.contains(r#"N_0 [label="a\"b\\c"];"#));
    }
}
