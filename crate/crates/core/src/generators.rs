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

//! Deterministic constructors for a few named graph families.
//!
//! Every generator returns an undirected graph whose node payloads are the
//! node positions `0..N` and whose edge payloads are `()`. Use
//! [`Graph::map`] to attach other payloads.

use crate::error::{GraphError, Result};
use crate::graph::{Graph, NodeIndex};

/// Largest accepted binomial tree order.
pub const MAX_BINOMIAL_ORDER: u32 = 60;

/// Generalized Petersen graph `GP(n, k)`.
///
/// Outer ring `0..n`, inner star polygon `n..2n` with step `k`, and spokes
/// `i -- n + i`. `GP(5, 2)` is the Petersen graph.
pub fn generalized_petersen(n: usize, k: usize) -> Result<Graph<usize, ()>> {
    if n < 3 {
        return Err(GraphError::Parameter(format!(
            "petersen n must be at least 3, got {n}"
        )));
    }
    if k == 0 || 2 * k >= n {
        return Err(GraphError::Parameter(format!(
            "petersen k must satisfy 1 <= k < n/2, got n={n} k={k}"
        )));
    }
    let mut g = Graph::with_capacity(false, false, 2 * n, 3 * n);
    let nodes: Vec<NodeIndex> = (0..2 * n).map(|i| g.add_node(i)).collect();
    for i in 0..n {
        g.add_edge(nodes[i], nodes[(i + 1) % n], ())?;
    }
    for i in 0..n {
        g.add_edge(nodes[n + i], nodes[n + (i + k) % n], ())?;
    }
    for i in 0..n {
        g.add_edge(nodes[i], nodes[n + i], ())?;
    }
    Ok(g)
}

/// Honeycomb of `rows x cols` hexagonal cells.
///
/// Built from `cols + 1` vertical zig-zag paths of `2 * rows + 2` nodes,
/// neighbouring paths joined by alternating rungs. The two corner nodes
/// that would hang off a single edge are dropped. Nodes are numbered
/// column by column, bottom to top.
pub fn hexagonal_lattice(rows: usize, cols: usize) -> Result<Graph<usize, ()>> {
    if rows == 0 || cols == 0 {
        return Err(GraphError::Parameter(format!(
            "hexagonal lattice needs rows >= 1 and cols >= 1, got {rows}x{cols}"
        )));
    }
    let height = 2 * rows + 2;
    let trimmed = |col: usize, pos: usize| {
        (col == 0 && pos == height - 1) || (col == cols && pos == (height - 1) * (cols % 2))
    };

    let mut g = Graph::with_capacity(false, false, (cols + 1) * height - 2, 0);
    let mut grid: Vec<Vec<Option<NodeIndex>>> = vec![vec![None; height]; cols + 1];
    let mut label = 0;
    for (col, column) in grid.iter_mut().enumerate() {
        for (pos, slot) in column.iter_mut().enumerate() {
            if !trimmed(col, pos) {
                *slot = Some(g.add_node(label));
                label += 1;
            }
        }
    }
    for column in &grid {
        for pos in 0..height - 1 {
            if let (Some(a), Some(b)) = (column[pos], column[pos + 1]) {
                g.add_edge(a, b, ())?;
            }
        }
    }
    for col in 0..cols {
        for pos in (col % 2..height).step_by(2) {
            if let (Some(a), Some(b)) = (grid[col][pos], grid[col + 1][pos]) {
                g.add_edge(a, b, ())?;
            }
        }
    }
    Ok(g)
}

/// Binomial tree of the given order: `2^order` nodes rooted at node 0.
///
/// `B_k` is two copies of `B_{k-1}` with the root of the second attached
/// to the root of the first.
pub fn binomial_tree(order: u32) -> Result<Graph<usize, ()>> {
    if order > MAX_BINOMIAL_ORDER {
        return Err(GraphError::Parameter(format!(
            "binomial tree order must be at most {MAX_BINOMIAL_ORDER}, got {order}"
        )));
    }
    let total = 1usize
        .checked_shl(order)
        .filter(|n| *n > 0)
        .ok_or_else(|| GraphError::Parameter(format!("binomial tree order {order} overflows")))?;
    let mut g = Graph::with_capacity(false, false, total, total - 1);
    g.add_node(0);
    let mut size = 1;
    for _ in 0..order {
        for i in 0..size {
            g.add_node(size + i);
        }
        // Copy the edges of the current tree onto the new half.
        let existing: Vec<(NodeIndex, NodeIndex)> = g.edge_list().map(|(_, u, v)| (u, v)).collect();
        for (u, v) in existing {
            g.add_edge(
                NodeIndex::new(u.index() + size),
                NodeIndex::new(v.index() + size),
                (),
            )?;
        }
        g.add_edge(NodeIndex::new(0), NodeIndex::new(size), ())?;
        size *= 2;
    }
    Ok(g)
}

/// Rectangular 4-neighbour lattice with `rows * cols` nodes in row-major order.
pub fn grid_graph(rows: usize, cols: usize) -> Result<Graph<usize, ()>> {
    if rows == 0 || cols == 0 {
        return Err(GraphError::Parameter(format!(
            "grid needs rows >= 1 and cols >= 1, got {rows}x{cols}"
        )));
    }
    let edges = rows * (cols - 1) + cols * (rows - 1);
    let mut g = Graph::with_capacity(false, false, rows * cols, edges);
    for i in 0..rows * cols {
        g.add_node(i);
    }
    let at = |r: usize, c: usize| NodeIndex::new(r * cols + c);
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                g.add_edge(at(r, c), at(r, c + 1), ())?;
            }
            if r + 1 < rows {
                g.add_edge(at(r, c), at(r + 1, c), ())?;
            }
        }
    }
    Ok(g)
}
