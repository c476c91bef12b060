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

use std::fmt;

use crate::graph::{EdgeIndex, NodeIndex};

/// Errors raised by graph operations and algorithms.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GraphError {
    #[error("node index {0} is not present in the graph")]
    InvalidNode(NodeIndex),
    #[error("edge index {0} is not present in the graph")]
    InvalidEdge(EdgeIndex),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("operation requires the graph to be {expected}")]
    WrongKind { expected: GraphKind },
    #[error("graph contains a cycle through node {witness}")]
    Cycle { witness: NodeIndex },
    #[error("edge {edge} has negative weight")]
    NegativeWeight { edge: EdgeIndex },
    #[error("edge {edge} has a non-finite weight")]
    NonFiniteWeight { edge: EdgeIndex },
    #[error("both graphs must be directed or both undirected")]
    DirectednessMismatch,
    #[error("graph has {nodes} nodes, limit is {limit}")]
    SizeLimit { nodes: usize, limit: usize },
    /// Failure reported by a caller-supplied callback.
    #[error("callback failed: {0}")]
    Callback(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Directed,
    Undirected,
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphKind::Directed => f.write_str("directed"),
            GraphKind::Undirected => f.write_str("undirected"),
        }
    }
}

pub type Result<T, E = GraphError> = std::result::Result<T, E>;
