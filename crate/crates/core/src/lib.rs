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

//! Graph library with stable node and edge indices.
//!
//! A [`Graph`] stores opaque node and edge payloads in slot tables and
//! hands out [`NodeIndex`]/[`EdgeIndex`] values that stay valid until the
//! element they name is removed. Algorithms never look inside payloads;
//! callers bridge payloads to typed data through callbacks, for example an
//! edge-weight function for [`shortest_paths::dijkstra`] or a payload
//! predicate for [`isomorphism::MatchSemantics`].
//!
//! ```
//! use sgraph::{Graph, shortest_paths::dijkstra};
//!
//! let mut g: Graph<&str, f64> = Graph::undirected();
//! let a = g.add_node("a");
//! let b = g.add_node("b");
//! let c = g.add_node("c");
//! g.add_edge(a, b, 1.0).unwrap();
//! g.add_edge(b, c, 2.0).unwrap();
//! g.add_edge(a, c, 4.0).unwrap();
//! let paths = dijkstra(&g, a, Some(c), |w| Ok(*w)).unwrap();
//! assert_eq!(paths.distance(c), Some(3.0));
//! assert_eq!(paths.path_to(c).unwrap(), vec![a, b, c]);
//! ```

pub mod error;
pub mod generators;
pub mod graph;
pub mod isomorphism;
pub mod matching;
pub mod scalar;
pub mod serialization;
pub mod shortest_paths;
pub mod traversal;

pub use error::{GraphError, GraphKind, Result};
pub use graph::{Direction, EdgeIndex, EdgeRecord, EdgeRef, Graph, NodeIndex};
pub use isomorphism::{IsoMapping, MatchSemantics};
pub use scalar::Weight;
pub use shortest_paths::PathResult;

/// Graph whose payloads are JSON values, as read from and written to files.
pub type JsonGraph = Graph<serde_json::Value, serde_json::Value>;

/// Shortest-path results with double-precision costs.
pub type PathResultF64 = PathResult<f64>;
/// Shortest-path results with single-precision costs.
pub type PathResultF32 = PathResult<f32>;
/// All-pairs results keyed by source node.
pub type AllPairs<W> = std::collections::BTreeMap<NodeIndex, PathResult<W>>;
/// All-pairs results with double-precision costs.
pub type AllPairsF64 = AllPairs<f64>;
