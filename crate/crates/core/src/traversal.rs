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

//! Breadth-first and depth-first orders plus DAG utilities.
//!
//! Ties are always broken by ascending node index.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap, VecDeque};

use crate::error::{GraphError, GraphKind, Result};
use crate::graph::{Direction, Graph, NodeIndex};

/// Which way [`reachable_set`] follows edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reach {
    Descendants,
    Ancestors,
}

fn require_directed<N, E>(g: &Graph<N, E>) -> Result<()> {
    if g.is_directed() {
        Ok(())
    } else {
        Err(GraphError::WrongKind {
            expected: GraphKind::Directed,
        })
    }
}

/// Breadth-first order of the nodes reachable from `source`.
pub fn bfs_order<N, E>(g: &Graph<N, E>, source: NodeIndex) -> Result<Vec<NodeIndex>> {
    if !g.contains_node(source) {
        return Err(GraphError::InvalidNode(source));
    }
    let mut seen = vec![false; g.node_bound()];
    let mut order = Vec::new();
    let mut queue = VecDeque::from([source]);
    seen[source.index()] = true;
    while let Some(n) = queue.pop_front() {
        order.push(n);
        for m in g.neighbors(n, Direction::Outgoing)? {
            if !seen[m.index()] {
                seen[m.index()] = true;
                queue.push_back(m);
            }
        }
    }
    Ok(order)
}

/// Depth-first preorder of the nodes reachable from `source`.
pub fn dfs_order<N, E>(g: &Graph<N, E>, source: NodeIndex) -> Result<Vec<NodeIndex>> {
    if !g.contains_node(source) {
        return Err(GraphError::InvalidNode(source));
    }
    let mut seen = vec![false; g.node_bound()];
    let mut order = Vec::new();
    let mut stack = vec![source];
    while let Some(n) = stack.pop() {
        if seen[n.index()] {
            continue;
        }
        seen[n.index()] = true;
        order.push(n);
        // Reverse push so the smallest child is explored first.
        for m in g.neighbors(n, Direction::Outgoing)?.into_iter().rev() {
            if !seen[m.index()] {
                stack.push(m);
            }
        }
    }
    Ok(order)
}

/// Kahn's algorithm; the smallest ready node is emitted first.
///
/// On a cycle the error names one node that lies on a cycle.
pub fn topological_sort<N, E>(g: &Graph<N, E>) -> Result<Vec<NodeIndex>> {
    require_directed(g)?;
    let mut in_degree = vec![0usize; g.node_bound()];
    for (_, _, v) in g.edge_list() {
        in_degree[v.index()] += 1;
    }
    let mut ready: BinaryHeap<Reverse<NodeIndex>> = g
        .node_indices()
        .filter(|n| in_degree[n.index()] == 0)
        .map(Reverse)
        .collect();
    let mut order = Vec::with_capacity(g.node_count());
    while let Some(Reverse(n)) = ready.pop() {
        order.push(n);
        for edge in g.edges_from(n)? {
            let t = edge.target.index();
            in_degree[t] -= 1;
            if in_degree[t] == 0 {
                ready.push(Reverse(edge.target));
            }
        }
    }
    if order.len() == g.node_count() {
        return Ok(order);
    }
    Err(GraphError::Cycle {
        witness: cycle_witness(g, &in_degree),
    })
}

// Nodes left with positive in-degree after Kahn's algorithm either lie on a
// cycle or downstream of one. Walking predecessors inside the leftover set
// must eventually repeat a node, which is on a cycle.
fn cycle_witness<N, E>(g: &Graph<N, E>, leftover: &[usize]) -> NodeIndex {
    let start = g
        .node_indices()
        .find(|n| leftover[n.index()] > 0)
        .expect("a cycle leaves positive in-degree behind");
    let mut visited = vec![false; g.node_bound()];
    let mut cursor = start;
    loop {
        if visited[cursor.index()] {
            return cursor;
        }
        visited[cursor.index()] = true;
        cursor = g
            .neighbors(cursor, Direction::Incoming)
            .expect("live node")
            .into_iter()
            .find(|p| leftover[p.index()] > 0)
            .expect("leftover node has a leftover predecessor");
    }
}

pub fn is_dag<N, E>(g: &Graph<N, E>) -> Result<bool> {
    match topological_sort(g) {
        Ok(_) => Ok(true),
        Err(GraphError::Cycle { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Nodes reachable from `n` (excluding `n`) following edges forward or backward.
pub fn reachable_set<N, E>(
    g: &Graph<N, E>,
    n: NodeIndex,
    reach: Reach,
) -> Result<BTreeSet<NodeIndex>> {
    require_directed(g)?;
    if !g.contains_node(n) {
        return Err(GraphError::InvalidNode(n));
    }
    let direction = match reach {
        Reach::Descendants => Direction::Outgoing,
        Reach::Ancestors => Direction::Incoming,
    };
    let mut found = BTreeSet::new();
    let mut stack = vec![n];
    while let Some(x) = stack.pop() {
        for m in g.neighbors(x, direction)? {
            if m != n && found.insert(m) {
                stack.push(m);
            }
        }
    }
    Ok(found)
}

/// Splits the nodes accepted by `keep` into maximal linear chains.
///
/// Consecutive chain members `u -> v` satisfy: `v` is the only kept
/// successor of `u` and `u` is the only kept predecessor of `v`. Runs come
/// out in topological order of their first node and cover every kept node
/// exactly once.
pub fn collect_linear_runs<N, E, F>(g: &Graph<N, E>, mut keep: F) -> Result<Vec<Vec<NodeIndex>>>
where
    F: FnMut(&N) -> bool,
{
    let order = topological_sort(g)?;
    let mut kept = vec![false; g.node_bound()];
    for (n, payload) in g.nodes() {
        kept[n.index()] = keep(payload);
    }
    let kept_neighbors = |n: NodeIndex, dir: Direction| -> Result<Vec<NodeIndex>> {
        Ok(g.neighbors(n, dir)?
            .into_iter()
            .filter(|m| kept[m.index()])
            .collect())
    };

    // next[u] = v when u -> v is a chain link.
    let mut next: Vec<Option<NodeIndex>> = vec![None; g.node_bound()];
    let mut has_prev = vec![false; g.node_bound()];
    for &u in &order {
        if !kept[u.index()] {
            continue;
        }
        let succ = kept_neighbors(u, Direction::Outgoing)?;
        if let [v] = succ[..] {
            if kept_neighbors(v, Direction::Incoming)?.len() == 1 {
                next[u.index()] = Some(v);
                has_prev[v.index()] = true;
            }
        }
    }

    let mut runs = Vec::new();
    for &u in &order {
        if !kept[u.index()] || has_prev[u.index()] {
            continue;
        }
        let mut run = vec![u];
        let mut cursor = u;
        while let Some(v) = next[cursor.index()] {
            run.push(v);
            cursor = v;
        }
        runs.push(run);
    }
    Ok(runs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(i: usize) -> NodeIndex {
        NodeIndex::new(i)
    }

    fn build(directed: bool, nodes: usize, edges: &[(usize, usize)]) -> Graph<usize, ()> {
        let mut g = Graph::new(directed, true);
        for i in 0..nodes {
            g.add_node(i);
        }
        for &(u, v) in edges {
            g.add_edge(n(u), n(v), ()).unwrap();
        }
        g
    }

    fn ids(v: &[NodeIndex]) -> Vec<usize> {
        v.iter().map(|x| x.index()).collect()
    }

    #[test]
    fn bfs_examples() {
        let path = build(false, 3, &[(0, 1), (1, 2)]);
        assert_eq!(ids(&bfs_order(&path, n(0)).unwrap()), vec![0, 1, 2]);
        let star = build(false, 4, &[(0, 3), (0, 1), (0, 2)]);
        assert_eq!(ids(&bfs_order(&star, n(0)).unwrap()), vec![0, 1, 2, 3]);
        let d = build(true, 3, &[(0, 1), (2, 1)]);
        assert_eq!(ids(&bfs_order(&d, n(0)).unwrap()), vec![0, 1]);
        assert!(bfs_order(&d, n(9)).is_err());
    }

    #[test]
    fn dfs_examples() {
        let path = build(false, 3, &[(0, 1), (1, 2)]);
        assert_eq!(ids(&dfs_order(&path, n(0)).unwrap()), vec![0, 1, 2]);
        let fan = build(true, 4, &[(0, 2), (0, 1), (1, 3)]);
        assert_eq!(ids(&dfs_order(&fan, n(0)).unwrap()), vec![0, 1, 3, 2]);
        let lone = build(true, 3, &[(0, 1)]);
        assert_eq!(ids(&dfs_order(&lone, n(2)).unwrap()), vec![2]);
    }

    #[test]
    fn topo_examples() {
        let diamond = build(true, 4, &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert_eq!(ids(&topological_sort(&diamond).unwrap()), vec![0, 1, 2, 3]);
        let cycle = build(true, 3, &[(0, 1), (1, 2), (2, 0)]);
        assert!(matches!(
            topological_sort(&cycle),
            Err(GraphError::Cycle { .. })
        ));
        let empty = build(true, 0, &[]);
        assert!(topological_sort(&empty).unwrap().is_empty());
        let undirected = build(false, 2, &[(0, 1)]);
        assert!(matches!(
            topological_sort(&undirected),
            Err(GraphError::WrongKind { .. })
        ));
    }

    #[test]
    fn topo_prefers_smaller_ready_nodes() {
        let g = build(true, 4, &[(3, 0), (2, 1)]);
        assert_eq!(ids(&topological_sort(&g).unwrap()), vec![2, 1, 3, 0]);
    }

    #[test]
    fn cycle_witness_is_on_the_cycle() {
        // 0 -> 1 -> 2 -> 1, 2 -> 3: the witness must be 1 or 2.
        let g = build(true, 4, &[(0, 1), (1, 2), (2, 1), (2, 3)]);
        match topological_sort(&g) {
            Err(GraphError::Cycle { witness }) => assert!([1, 2].contains(&witness.index())),
            other => panic!("expected cycle, got {other:?}"),
        }
    }

    #[test]
    fn dag_checks() {
        let diamond = build(true, 4, &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert!(is_dag(&diamond).unwrap());
        let cycle = build(true, 3, &[(0, 1), (1, 2), (2, 0)]);
        assert!(!is_dag(&cycle).unwrap());
        let looped = build(true, 2, &[(0, 1), (1, 1)]);
        assert!(!is_dag(&looped).unwrap());
        match topological_sort(&looped) {
            Err(GraphError::Cycle { witness }) => assert_eq!(witness, n(1)),
            other => panic!("expected cycle, got {other:?}"),
        }
    }

    #[test]
    fn reachability() {
        let chain = build(true, 3, &[(0, 1), (1, 2)]);
        let set = |s: BTreeSet<NodeIndex>| s.into_iter().map(|x| x.index()).collect::<Vec<_>>();
        assert_eq!(
            set(reachable_set(&chain, n(0), Reach::Descendants).unwrap()),
            vec![1, 2]
        );
        assert_eq!(
            set(reachable_set(&chain, n(2), Reach::Ancestors).unwrap()),
            vec![0, 1]
        );
        let lone = build(true, 1, &[]);
        assert!(reachable_set(&lone, n(0), Reach::Descendants)
            .unwrap()
            .is_empty());
        assert!(reachable_set(&lone, n(0), Reach::Ancestors)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn linear_runs() {
        let chain = build(true, 3, &[(0, 1), (1, 2)]);
        let runs = collect_linear_runs(&chain, |_| true).unwrap();
        assert_eq!(runs, vec![vec![n(0), n(1), n(2)]]);
        let runs = collect_linear_runs(&chain, |p| *p != 1).unwrap();
        assert_eq!(runs, vec![vec![n(0)], vec![n(2)]]);
        let diamond = build(true, 4, &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        let runs = collect_linear_runs(&diamond, |_| true).unwrap();
        assert_eq!(runs, vec![vec![n(0)], vec![n(1)], vec![n(2)], vec![n(3)]]);
        let cycle = build(true, 2, &[(0, 1), (1, 0)]);
        assert!(collect_linear_runs(&cycle, |_| true).is_err());
    }

    #[test]
    fn runs_skip_unkept_branches() {
        // 0 -> 1 -> 2 and 1 -> 3 with 3 dropped: 1 has one kept successor.
        let g = build(true, 4, &[(0, 1), (1, 2), (1, 3)]);
        let runs = collect_linear_runs(&g, |p| *p != 3).unwrap();
        assert_eq!(runs, vec![vec![n(0), n(1), n(2)]]);
    }
}
