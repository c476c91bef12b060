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

//! Slot-table graph storage with stable node and edge indices.
//!
//! Nodes and edges live in slot tables. Removing an element turns its slot
//! vacant and pushes it on a free list; the next insertion pops the most
//! recently freed slot. Indices of live elements never change.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{GraphError, Result};

macro_rules! index_type {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(
            Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
        )]
        #[serde(transparent)]
        pub struct $name(usize);

        impl $name {
            #[inline]
            pub const fn new(index: usize) -> Self {
                $name(index)
            }

            #[inline]
            pub const fn index(self) -> usize {
                self.0
            }
        }

        impl From<usize> for $name {
            fn from(index: usize) -> Self {
                $name(index)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self.0)
            }
        }
    };
}

index_type!(
    /// Stable identifier of a node slot.
    NodeIndex
);
index_type!(
    /// Stable identifier of an edge slot.
    EdgeIndex
);

/// Which incidence lists a neighborhood query consults.
///
/// Undirected graphs treat all three variants identically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Outgoing,
    Incoming,
    All,
}

#[derive(Debug, Clone)]
enum NodeSlot<N> {
    Occupied {
        payload: N,
        // Undirected graphs keep every incident edge in `outgoing`.
        outgoing: Vec<EdgeIndex>,
        incoming: Vec<EdgeIndex>,
    },
    Vacant {
        next_free: Option<NodeIndex>,
    },
}

/// A live edge: endpoints as inserted plus the payload.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeRecord<E> {
    pub source: NodeIndex,
    pub target: NodeIndex,
    pub payload: E,
}

#[derive(Debug, Clone)]
enum EdgeSlot<E> {
    Occupied(EdgeRecord<E>),
    Vacant { next_free: Option<EdgeIndex> },
}

/// Borrowed view of a live edge.
#[derive(Debug, Clone, Copy)]
pub struct EdgeRef<'a, E> {
    pub index: EdgeIndex,
    pub source: NodeIndex,
    pub target: NodeIndex,
    pub payload: &'a E,
}

/// Adjacency-list graph with stable indices and opaque payloads.
///
/// A single type covers directed and undirected graphs, with or without
/// parallel edges. When `multigraph` is false, adding an edge between an
/// already connected pair replaces the payload of the existing edge and
/// returns its index. Self-loops are always allowed.
#[derive(Debug, Clone)]
pub struct Graph<N, E> {
    directed: bool,
    multigraph: bool,
    nodes: Vec<NodeSlot<N>>,
    edges: Vec<EdgeSlot<E>>,
    node_free: Option<NodeIndex>,
    edge_free: Option<EdgeIndex>,
    node_count: usize,
    edge_count: usize,
}

impl<N, E> Default for Graph<N, E> {
    fn default() -> Self {
        Graph::new(false, true)
    }
}

impl<N, E> Graph<N, E> {
    pub fn new(directed: bool, multigraph: bool) -> Self {
        Graph {
            directed,
            multigraph,
            nodes: Vec::new(),
            edges: Vec::new(),
            node_free: None,
            edge_free: None,
            node_count: 0,
            edge_count: 0,
        }
    }

    /// Directed multigraph.
    pub fn directed() -> Self {
        Graph::new(true, true)
    }

    /// Undirected multigraph.
    pub fn undirected() -> Self {
        Graph::new(false, true)
    }

    pub fn with_capacity(directed: bool, multigraph: bool, nodes: usize, edges: usize) -> Self {
        let mut g = Graph::new(directed, multigraph);
        g.nodes.reserve(nodes);
        g.edges.reserve(edges);
        g
    }

    #[inline]
    pub fn is_directed(&self) -> bool {
        self.directed
    }

    #[inline]
    pub fn is_multigraph(&self) -> bool {
        self.multigraph
    }

    #[inline]
    pub fn node_count(&self) -> usize {
        self.node_count
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Length of the node slot table; every live index is below this bound.
    #[inline]
    pub fn node_bound(&self) -> usize {
        self.nodes.len()
    }

    /// Length of the edge slot table; every live index is below this bound.
    #[inline]
    pub fn edge_bound(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_node(&self, n: NodeIndex) -> bool {
        matches!(self.nodes.get(n.0), Some(NodeSlot::Occupied { .. }))
    }

    pub fn contains_edge(&self, e: EdgeIndex) -> bool {
        matches!(self.edges.get(e.0), Some(EdgeSlot::Occupied(_)))
    }

    pub fn add_node(&mut self, payload: N) -> NodeIndex {
        let slot = NodeSlot::Occupied {
            payload,
            outgoing: Vec::new(),
            incoming: Vec::new(),
        };
        self.node_count += 1;
        match self.node_free {
            Some(index) => {
                let next = match &self.nodes[index.0] {
                    NodeSlot::Vacant { next_free } => *next_free,
                    NodeSlot::Occupied { .. } => unreachable!("free list points at live node"),
                };
                self.node_free = next;
                self.nodes[index.0] = slot;
                index
            }
            None => {
                self.nodes.push(slot);
                NodeIndex(self.nodes.len() - 1)
            }
        }
    }

    /// Removes `n` and every edge incident to it, returning its payload.
    pub fn remove_node(&mut self, n: NodeIndex) -> Result<N> {
        let (outgoing, incoming) = match self.nodes.get_mut(n.0) {
            Some(NodeSlot::Occupied {
                outgoing, incoming, ..
            }) => (std::mem::take(outgoing), std::mem::take(incoming)),
            _ => return Err(GraphError::InvalidNode(n)),
        };
        for e in outgoing.into_iter().chain(incoming) {
            // Directed self-loops sit in both lists; the second visit is a no-op.
            if self.contains_edge(e) {
                self.remove_edge(e)?;
            }
        }
        let old = std::mem::replace(
            &mut self.nodes[n.0],
            NodeSlot::Vacant {
                next_free: self.node_free,
            },
        );
        self.node_free = Some(n);
        self.node_count -= 1;
        match old {
            NodeSlot::Occupied { payload, .. } => Ok(payload),
            NodeSlot::Vacant { .. } => unreachable!(),
        }
    }

    /// Adds an edge `u -> v` (or `u -- v`).
    ///
    /// In a simple graph an existing edge between the pair gets `payload` and
    /// its index is returned.
    pub fn add_edge(&mut self, u: NodeIndex, v: NodeIndex, payload: E) -> Result<EdgeIndex> {
        self.check_node(u)?;
        self.check_node(v)?;
        if !self.multigraph {
            if let Some(e) = self.find_edge(u, v) {
                if let EdgeSlot::Occupied(record) = &mut self.edges[e.0] {
                    record.payload = payload;
                }
                return Ok(e);
            }
        }
        let record = EdgeRecord {
            source: u,
            target: v,
            payload,
        };
        let e = match self.edge_free {
            Some(index) => {
                let next = match &self.edges[index.0] {
                    EdgeSlot::Vacant { next_free } => *next_free,
                    EdgeSlot::Occupied(_) => unreachable!("free list points at live edge"),
                };
                self.edge_free = next;
                self.edges[index.0] = EdgeSlot::Occupied(record);
                index
            }
            None => {
                self.edges.push(EdgeSlot::Occupied(record));
                EdgeIndex(self.edges.len() - 1)
            }
        };
        self.edge_count += 1;
        if self.directed {
            self.outgoing_mut(u).push(e);
            self.incoming_mut(v).push(e);
        } else {
            self.outgoing_mut(u).push(e);
            if u != v {
                self.outgoing_mut(v).push(e);
            }
        }
        Ok(e)
    }

    pub fn remove_edge(&mut self, e: EdgeIndex) -> Result<E> {
        let (u, v) = self.edge_endpoints(e)?;
        if self.directed {
            detach(self.outgoing_mut(u), e);
            detach(self.incoming_mut(v), e);
        } else {
            detach(self.outgoing_mut(u), e);
            if u != v {
                detach(self.outgoing_mut(v), e);
            }
        }
        let old = std::mem::replace(
            &mut self.edges[e.0],
            EdgeSlot::Vacant {
                next_free: self.edge_free,
            },
        );
        self.edge_free = Some(e);
        self.edge_count -= 1;
        match old {
            EdgeSlot::Occupied(record) => Ok(record.payload),
            EdgeSlot::Vacant { .. } => unreachable!(),
        }
    }

    pub fn node_payload(&self, n: NodeIndex) -> Result<&N> {
        match self.nodes.get(n.0) {
            Some(NodeSlot::Occupied { payload, .. }) => Ok(payload),
            _ => Err(GraphError::InvalidNode(n)),
        }
    }

    pub fn node_payload_mut(&mut self, n: NodeIndex) -> Result<&mut N> {
        match self.nodes.get_mut(n.0) {
            Some(NodeSlot::Occupied { payload, .. }) => Ok(payload),
            _ => Err(GraphError::InvalidNode(n)),
        }
    }

    /// Replaces the payload of `n`, returning the previous one.
    pub fn set_node_payload(&mut self, n: NodeIndex, payload: N) -> Result<N> {
        Ok(std::mem::replace(self.node_payload_mut(n)?, payload))
    }

    pub fn edge_payload(&self, e: EdgeIndex) -> Result<&E> {
        self.edge_record(e).map(|r| &r.payload)
    }

    pub fn edge_payload_mut(&mut self, e: EdgeIndex) -> Result<&mut E> {
        match self.edges.get_mut(e.0) {
            Some(EdgeSlot::Occupied(record)) => Ok(&mut record.payload),
            _ => Err(GraphError::InvalidEdge(e)),
        }
    }

    pub fn set_edge_payload(&mut self, e: EdgeIndex, payload: E) -> Result<E> {
        Ok(std::mem::replace(self.edge_payload_mut(e)?, payload))
    }

    /// `(source, target)` as passed to [`Graph::add_edge`].
    pub fn edge_endpoints(&self, e: EdgeIndex) -> Result<(NodeIndex, NodeIndex)> {
        self.edge_record(e).map(|r| (r.source, r.target))
    }

    pub fn edge_record(&self, e: EdgeIndex) -> Result<&EdgeRecord<E>> {
        match self.edges.get(e.0) {
            Some(EdgeSlot::Occupied(record)) => Ok(record),
            _ => Err(GraphError::InvalidEdge(e)),
        }
    }

    /// Distinct neighbors of `n` in ascending index order. A self-loop
    /// contributes `n` once.
    pub fn neighbors(&self, n: NodeIndex, direction: Direction) -> Result<Vec<NodeIndex>> {
        let mut out = Vec::new();
        self.for_each_incident(n, direction, |_, other| out.push(other))?;
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// Incident edge indices in ascending order, parallel edges included.
    pub fn incident_edges(&self, n: NodeIndex, direction: Direction) -> Result<Vec<EdgeIndex>> {
        let mut out = Vec::new();
        self.for_each_incident(n, direction, |e, _| out.push(e))?;
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    fn for_each_incident<F>(&self, n: NodeIndex, direction: Direction, mut f: F) -> Result<()>
    where
        F: FnMut(EdgeIndex, NodeIndex),
    {
        let (outgoing, incoming) = match self.nodes.get(n.0) {
            Some(NodeSlot::Occupied {
                outgoing, incoming, ..
            }) => (outgoing, incoming),
            _ => return Err(GraphError::InvalidNode(n)),
        };
        let other = |e: &EdgeIndex| {
            let r = self.live_record(*e);
            if r.source == n {
                r.target
            } else {
                r.source
            }
        };
        if !self.directed {
            for e in outgoing {
                f(*e, other(e));
            }
            return Ok(());
        }
        if matches!(direction, Direction::Outgoing | Direction::All) {
            for e in outgoing {
                f(*e, self.live_record(*e).target);
            }
        }
        if matches!(direction, Direction::Incoming | Direction::All) {
            for e in incoming {
                f(*e, self.live_record(*e).source);
            }
        }
        Ok(())
    }

    /// Number of edge endpoints at `n`; an undirected self-loop counts twice.
    pub fn degree(&self, n: NodeIndex) -> Result<usize> {
        match self.nodes.get(n.0) {
            Some(NodeSlot::Occupied {
                outgoing, incoming, ..
            }) => {
                if self.directed {
                    Ok(outgoing.len() + incoming.len())
                } else {
                    let loops = outgoing
                        .iter()
                        .filter(|e| {
                            let r = self.live_record(**e);
                            r.source == r.target
                        })
                        .count();
                    Ok(outgoing.len() + loops)
                }
            }
            _ => Err(GraphError::InvalidNode(n)),
        }
    }

    pub fn out_degree(&self, n: NodeIndex) -> Result<usize> {
        if !self.directed {
            return self.degree(n);
        }
        match self.nodes.get(n.0) {
            Some(NodeSlot::Occupied { outgoing, .. }) => Ok(outgoing.len()),
            _ => Err(GraphError::InvalidNode(n)),
        }
    }

    pub fn in_degree(&self, n: NodeIndex) -> Result<usize> {
        if !self.directed {
            return self.degree(n);
        }
        match self.nodes.get(n.0) {
            Some(NodeSlot::Occupied { incoming, .. }) => Ok(incoming.len()),
            _ => Err(GraphError::InvalidNode(n)),
        }
    }

    /// Lowest-index edge joining `u` to `v` (`u -> v` when directed).
    pub fn find_edge(&self, u: NodeIndex, v: NodeIndex) -> Option<EdgeIndex> {
        self.edges_between(u, v).into_iter().next()
    }

    /// All edges joining `u` to `v` (`u -> v` when directed), ascending.
    pub fn edges_between(&self, u: NodeIndex, v: NodeIndex) -> Vec<EdgeIndex> {
        let list = |n: NodeIndex| match self.nodes.get(n.0) {
            Some(NodeSlot::Occupied { outgoing, .. }) => Some(outgoing),
            _ => None,
        };
        let (Some(lu), Some(lv)) = (list(u), list(v)) else {
            return Vec::new();
        };
        let mut found: Vec<EdgeIndex> = if self.directed {
            lu.iter()
                .copied()
                .filter(|e| self.live_record(*e).target == v)
                .collect()
        } else {
            let (scan, this) = if lu.len() <= lv.len() {
                (lu, u)
            } else {
                (lv, v)
            };
            let that = if this == u { v } else { u };
            scan.iter()
                .copied()
                .filter(|e| {
                    let r = self.live_record(*e);
                    (r.source == this && r.target == that) || (r.target == this && r.source == that)
                })
                .collect()
        };
        found.sort_unstable();
        found
    }

    /// Live node indices, ascending.
    pub fn node_indices(&self) -> impl Iterator<Item = NodeIndex> + '_ {
        self.nodes
            .iter()
            .enumerate()
            .filter_map(|(i, slot)| match slot {
                NodeSlot::Occupied { .. } => Some(NodeIndex(i)),
                NodeSlot::Vacant { .. } => None,
            })
    }

    /// Live nodes with their payloads, ascending by index.
    pub fn nodes(&self) -> impl Iterator<Item = (NodeIndex, &N)> + '_ {
        self.nodes
            .iter()
            .enumerate()
            .filter_map(|(i, slot)| match slot {
                NodeSlot::Occupied { payload, .. } => Some((NodeIndex(i), payload)),
                NodeSlot::Vacant { .. } => None,
            })
    }

    /// `(edge, source, target)` triples ascending by edge index.
    pub fn edge_list(&self) -> impl Iterator<Item = (EdgeIndex, NodeIndex, NodeIndex)> + '_ {
        self.edges().map(|e| (e.index, e.source, e.target))
    }

    pub fn edge_indices(&self) -> impl Iterator<Item = EdgeIndex> + '_ {
        self.edges().map(|e| e.index)
    }

    /// Live edges ascending by edge index.
    pub fn edges(&self) -> impl Iterator<Item = EdgeRef<'_, E>> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter_map(|(i, slot)| match slot {
                EdgeSlot::Occupied(r) => Some(EdgeRef {
                    index: EdgeIndex(i),
                    source: r.source,
                    target: r.target,
                    payload: &r.payload,
                }),
                EdgeSlot::Vacant { .. } => None,
            })
    }

    /// Edges leaving `n` (all incident edges when undirected), in storage order.
    pub fn edges_from(&self, n: NodeIndex) -> Result<impl Iterator<Item = EdgeRef<'_, E>> + '_> {
        let outgoing = match self.nodes.get(n.0) {
            Some(NodeSlot::Occupied { outgoing, .. }) => outgoing,
            _ => return Err(GraphError::InvalidNode(n)),
        };
        let directed = self.directed;
        Ok(outgoing.iter().map(move |e| {
            let r = self.live_record(*e);
            let (source, target) = if directed || r.source == n {
                (r.source, r.target)
            } else {
                (r.target, r.source)
            };
            EdgeRef {
                index: *e,
                source,
                target,
                payload: &r.payload,
            }
        }))
    }

    /// Builds a graph with the same indices and mapped payloads.
    pub fn map<N2, E2, FN, FE>(&self, mut node_map: FN, mut edge_map: FE) -> Graph<N2, E2>
    where
        FN: FnMut(NodeIndex, &N) -> N2,
        FE: FnMut(EdgeIndex, &E) -> E2,
    {
        let nodes = self
            .nodes
            .iter()
            .enumerate()
            .map(|(i, slot)| match slot {
                NodeSlot::Occupied {
                    payload,
                    outgoing,
                    incoming,
                } => NodeSlot::Occupied {
                    payload: node_map(NodeIndex(i), payload),
                    outgoing: outgoing.clone(),
                    incoming: incoming.clone(),
                },
                NodeSlot::Vacant { next_free } => NodeSlot::Vacant {
                    next_free: *next_free,
                },
            })
            .collect();
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, slot)| match slot {
                EdgeSlot::Occupied(r) => EdgeSlot::Occupied(EdgeRecord {
                    source: r.source,
                    target: r.target,
                    payload: edge_map(EdgeIndex(i), &r.payload),
                }),
                EdgeSlot::Vacant { next_free } => EdgeSlot::Vacant {
                    next_free: *next_free,
                },
            })
            .collect();
        Graph {
            directed: self.directed,
            multigraph: self.multigraph,
            nodes,
            edges,
            node_free: self.node_free,
            edge_free: self.edge_free,
            node_count: self.node_count,
            edge_count: self.edge_count,
        }
    }

    /// Rebuilds a graph from explicit node and edge indices, holes allowed.
    ///
    /// Vacant slots are chained so that the lowest free index is reused
    /// first. Fails on duplicate ids, dangling endpoints, or parallel edges
    /// in a simple graph.
    pub fn from_indexed_parts(
        directed: bool,
        multigraph: bool,
        nodes: Vec<(NodeIndex, N)>,
        edges: Vec<(EdgeIndex, NodeIndex, NodeIndex, E)>,
    ) -> std::result::Result<Self, String> {
        let mut g = Graph::new(directed, multigraph);
        let node_bound = nodes.iter().map(|(n, _)| n.0 + 1).max().unwrap_or(0);
        g.nodes = (0..node_bound)
            .map(|_| NodeSlot::Vacant { next_free: None })
            .collect();
        for (n, payload) in nodes {
            if g.contains_node(n) {
                return Err(format!("duplicate node id {n}"));
            }
            g.nodes[n.0] = NodeSlot::Occupied {
                payload,
                outgoing: Vec::new(),
                incoming: Vec::new(),
            };
            g.node_count += 1;
        }
        let edge_bound = edges.iter().map(|(e, ..)| e.0 + 1).max().unwrap_or(0);
        g.edges = (0..edge_bound)
            .map(|_| EdgeSlot::Vacant { next_free: None })
            .collect();
        let mut sorted = edges;
        sorted.sort_by_key(|(e, ..)| *e);
        for (e, u, v, payload) in sorted {
            if g.contains_edge(e) {
                return Err(format!("duplicate edge id {e}"));
            }
            for endpoint in [u, v] {
                if !g.contains_node(endpoint) {
                    return Err(format!("edge {e} references missing node {endpoint}"));
                }
            }
            if !multigraph && g.find_edge(u, v).is_some() {
                return Err(format!("edge {e} duplicates a pair in a simple graph"));
            }
            g.edges[e.0] = EdgeSlot::Occupied(EdgeRecord {
                source: u,
                target: v,
                payload,
            });
            g.edge_count += 1;
            g.outgoing_mut(u).push(e);
            if directed {
                g.incoming_mut(v).push(e);
            } else if u != v {
                g.outgoing_mut(v).push(e);
            }
        }
        for i in (0..g.nodes.len()).rev() {
            if let NodeSlot::Vacant { next_free } = &mut g.nodes[i] {
                *next_free = g.node_free;
                g.node_free = Some(NodeIndex(i));
            }
        }
        for i in (0..g.edges.len()).rev() {
            if let EdgeSlot::Vacant { next_free } = &mut g.edges[i] {
                *next_free = g.edge_free;
                g.edge_free = Some(EdgeIndex(i));
            }
        }
        Ok(g)
    }

    /// Full scan of the structural invariants. Returns a description of the
    /// first violation found.
    pub fn check_consistency(&self) -> std::result::Result<(), String> {
        let occupied_nodes = self.node_indices().count();
        if occupied_nodes != self.node_count {
            return Err(format!(
                "node_count {} != occupied {occupied_nodes}",
                self.node_count
            ));
        }
        let occupied_edges = self.edge_indices().count();
        if occupied_edges != self.edge_count {
            return Err(format!(
                "edge_count {} != occupied {occupied_edges}",
                self.edge_count
            ));
        }
        let mut seen = vec![false; self.nodes.len()];
        let mut cursor = self.node_free;
        while let Some(n) = cursor {
            if seen[n.0] {
                return Err(format!("node free list revisits {n}"));
            }
            seen[n.0] = true;
            cursor = match &self.nodes[n.0] {
                NodeSlot::Vacant { next_free } => *next_free,
                NodeSlot::Occupied { .. } => return Err(format!("free list holds live node {n}")),
            };
        }
        if seen.iter().filter(|s| **s).count() + occupied_nodes != self.nodes.len() {
            return Err("node free list does not cover every vacant slot".into());
        }
        let mut seen = vec![false; self.edges.len()];
        let mut cursor = self.edge_free;
        while let Some(e) = cursor {
            if seen[e.0] {
                return Err(format!("edge free list revisits {e}"));
            }
            seen[e.0] = true;
            cursor = match &self.edges[e.0] {
                EdgeSlot::Vacant { next_free } => *next_free,
                EdgeSlot::Occupied(_) => return Err(format!("free list holds live edge {e}")),
            };
        }
        if seen.iter().filter(|s| **s).count() + occupied_edges != self.edges.len() {
            return Err("edge free list does not cover every vacant slot".into());
        }

        // Expected incidence multiset per node, compared against the lists.
        let mut expect_out: Vec<Vec<EdgeIndex>> = vec![Vec::new(); self.nodes.len()];
        let mut expect_in: Vec<Vec<EdgeIndex>> = vec![Vec::new(); self.nodes.len()];
        for e in self.edges() {
            if !self.contains_node(e.source) || !self.contains_node(e.target) {
                return Err(format!("edge {} has a dangling endpoint", e.index));
            }
            expect_out[e.source.0].push(e.index);
            if self.directed {
                expect_in[e.target.0].push(e.index);
            } else if e.source != e.target {
                expect_out[e.target.0].push(e.index);
            }
        }
        for (i, slot) in self.nodes.iter().enumerate() {
            if let NodeSlot::Occupied {
                outgoing, incoming, ..
            } = slot
            {
                let mut got_out = outgoing.clone();
                let mut got_in = incoming.clone();
                got_out.sort_unstable();
                got_in.sort_unstable();
                expect_out[i].sort_unstable();
                expect_in[i].sort_unstable();
                if got_out != expect_out[i] || got_in != expect_in[i] {
                    return Err(format!("incidence lists of node {i} are inconsistent"));
                }
            }
        }
        if !self.multigraph {
            let mut pairs = std::collections::HashSet::new();
            for (_, u, v) in self.edge_list() {
                let key = if self.directed || u <= v {
                    (u, v)
                } else {
                    (v, u)
                };
                if !pairs.insert(key) {
                    return Err(format!("simple graph has parallel edges on {key:?}"));
                }
            }
        }
        Ok(())
    }

    fn check_node(&self, n: NodeIndex) -> Result<()> {
        if self.contains_node(n) {
            Ok(())
        } else {
            Err(GraphError::InvalidNode(n))
        }
    }

    #[inline]
    fn live_record(&self, e: EdgeIndex) -> &EdgeRecord<E> {
        match &self.edges[e.0] {
            EdgeSlot::Occupied(r) => r,
            EdgeSlot::Vacant { .. } => unreachable!("incidence list holds dead edge {e}"),
        }
    }

    fn outgoing_mut(&mut self, n: NodeIndex) -> &mut Vec<EdgeIndex> {
        match &mut self.nodes[n.0] {
            NodeSlot::Occupied { outgoing, .. } => outgoing,
            NodeSlot::Vacant { .. } => unreachable!(),
        }
    }

    fn incoming_mut(&mut self, n: NodeIndex) -> &mut Vec<EdgeIndex> {
        match &mut self.nodes[n.0] {
            NodeSlot::Occupied { incoming, .. } => incoming,
            NodeSlot::Vacant { .. } => unreachable!(),
        }
    }
}

fn detach(list: &mut Vec<EdgeIndex>, e: EdgeIndex) {
    if let Some(pos) = list.iter().position(|x| *x == e) {
        list.swap_remove(pos);
    }
}
