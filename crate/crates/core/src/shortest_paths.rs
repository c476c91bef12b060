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

//! Single-source and all-pairs shortest paths.
//!
//! Edge costs come from a caller-supplied callback over edge payloads. The
//! callback may fail; any failure, negative cost or non-finite cost aborts
//! the whole call. Unreachable nodes are simply absent from the results.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BinaryHeap, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{GraphError, Result};
use crate::graph::{Direction, Graph, NodeIndex};
use crate::scalar::Weight;

/// Distances and shortest-path tree from one source.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PathResult<W> {
    pub source: NodeIndex,
    pub distances: BTreeMap<NodeIndex, W>,
    /// Predecessor on a shortest path; `None` for the source.
    pub parents: BTreeMap<NodeIndex, Option<NodeIndex>>,
}

impl<W: Weight> PathResult<W> {
    pub fn distance(&self, n: NodeIndex) -> Option<W> {
        self.distances.get(&n).copied()
    }

    /// Node sequence from the source to `n`, both ends included.
    pub fn path_to(&self, n: NodeIndex) -> Option<Vec<NodeIndex>> {
        let mut path = vec![n];
        let mut cursor = *self.parents.get(&n)?;
        while let Some(p) = cursor {
            path.push(p);
            cursor = *self.parents.get(&p)?;
        }
        path.reverse();
        Some(path)
    }
}

// Min-heap entry ordered by (distance, node).
struct Entry<W> {
    dist: W,
    node: NodeIndex,
}

impl<W: Weight> PartialEq for Entry<W> {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl<W: Weight> Eq for Entry<W> {}

impl<W: Weight> PartialOrd for Entry<W> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<W: Weight> Ord for Entry<W> {
    fn cmp(&self, other: &Self) -> Ordering {
        // Weights are validated finite, so partial_cmp never fails here.
        other
            .dist
            .partial_cmp(&self.dist)
            .unwrap_or(Ordering::Equal)
            .then_with(|| other.node.cmp(&self.node))
    }
}

/// Dijkstra's algorithm from `source`.
///
/// Directed edges are followed forward, undirected edges both ways. With a
/// `target`, the search stops once the target is settled and only settled
/// nodes are reported. Among equal-cost predecessors the smaller index wins.
pub fn dijkstra<N, E, W, F>(
    g: &Graph<N, E>,
    source: NodeIndex,
    target: Option<NodeIndex>,
    mut weight: F,
) -> Result<PathResult<W>>
where
    W: Weight,
    F: FnMut(&E) -> Result<W>,
{
    if !g.contains_node(source) {
        return Err(GraphError::InvalidNode(source));
    }
    if let Some(t) = target {
        if !g.contains_node(t) {
            return Err(GraphError::InvalidNode(t));
        }
    }
    let bound = g.node_bound();
    let mut dist: Vec<Option<W>> = vec![None; bound];
    let mut parent: Vec<Option<NodeIndex>> = vec![None; bound];
    let mut settled = vec![false; bound];
    let mut settled_order = Vec::new();
    let mut heap = BinaryHeap::new();

    dist[source.index()] = Some(W::zero());
    heap.push(Entry {
        dist: W::zero(),
        node: source,
    });
    while let Some(Entry { dist: d, node: u }) = heap.pop() {
        if settled[u.index()] {
            continue;
        }
        settled[u.index()] = true;
        settled_order.push(u);
        if Some(u) == target {
            break;
        }
        for edge in g.edges_from(u)? {
            let w = weight(edge.payload)?;
            if !w.is_finite_weight() {
                return Err(GraphError::NonFiniteWeight { edge: edge.index });
            }
            if w < W::zero() {
                return Err(GraphError::NegativeWeight { edge: edge.index });
            }
            let v = edge.target;
            if settled[v.index()] {
                continue;
            }
            let candidate = d + w;
            match dist[v.index()] {
                Some(current) if candidate > current => {}
                Some(current) if candidate == current => {
                    if parent[v.index()].is_some_and(|p| u < p) {
                        parent[v.index()] = Some(u);
                    }
                }
                _ => {
                    dist[v.index()] = Some(candidate);
                    parent[v.index()] = Some(u);
                    heap.push(Entry {
                        dist: candidate,
                        node: v,
                    });
                }
            }
        }
    }

    let mut result = PathResult {
        source,
        distances: BTreeMap::new(),
        parents: BTreeMap::new(),
    };
    for n in settled_order {
        result
            .distances
            .insert(n, dist[n.index()].expect("settled nodes have a distance"));
        result.parents.insert(n, parent[n.index()]);
    }
    Ok(result)
}

/// [`dijkstra`] from every live node on the global rayon pool.
pub fn all_pairs_dijkstra<N, E, W, F>(
    g: &Graph<N, E>,
    weight: F,
) -> Result<BTreeMap<NodeIndex, PathResult<W>>>
where
    N: Sync,
    E: Sync,
    W: Weight,
    F: Fn(&E) -> Result<W> + Sync,
{
    let sources: Vec<NodeIndex> = g.node_indices().collect();
    let results: Vec<Result<PathResult<W>>> = sources
        .par_iter()
        .map(|&s| dijkstra(g, s, None, &weight))
        .collect();
    // Results are in source order, so the first error belongs to the
    // smallest failing source regardless of scheduling.
    results
        .into_iter()
        .map(|r| r.map(|p| (p.source, p)))
        .collect()
}

/// [`all_pairs_dijkstra`] on a dedicated pool with `workers` threads.
pub fn all_pairs_dijkstra_with_workers<N, E, W, F>(
    g: &Graph<N, E>,
    workers: usize,
    weight: F,
) -> Result<BTreeMap<NodeIndex, PathResult<W>>>
where
    N: Sync,
    E: Sync,
    W: Weight,
    F: Fn(&E) -> Result<W> + Sync + Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| GraphError::Parameter(format!("cannot start worker pool: {e}")))?;
    pool.install(|| all_pairs_dijkstra(g, weight))
}

/// Hop counts from `source` by breadth-first search.
pub fn unweighted_distances<N, E>(
    g: &Graph<N, E>,
    source: NodeIndex,
) -> Result<BTreeMap<NodeIndex, usize>> {
    if !g.contains_node(source) {
        return Err(GraphError::InvalidNode(source));
    }
    let mut hops = BTreeMap::from([(source, 0)]);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let next = hops[&u] + 1;
        for v in g.neighbors(u, Direction::Outgoing)? {
            hops.entry(v).or_insert_with(|| {
                queue.push_back(v);
                next
            });
        }
    }
    Ok(hops)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeIndex;

    fn n(i: usize) -> NodeIndex {
        NodeIndex::new(i)
    }

    fn weighted(directed: bool, nodes: usize, edges: &[(usize, usize, f64)]) -> Graph<(), f64> {
        let mut g = Graph::new(directed, true);
        for _ in 0..nodes {
            g.add_node(());
        }
        for &(u, v, w) in edges {
            g.add_edge(n(u), n(v), w).unwrap();
        }
        g
    }

    #[test]
    fn triangle_detour_is_shorter() {
        let g = weighted(false, 3, &[(0, 1, 1.0), (1, 2, 2.0), (0, 2, 4.0)]);
        let r = dijkstra(&g, n(0), Some(n(2)), |w| Ok(*w)).unwrap();
        assert_eq!(r.distance(n(2)), Some(3.0));
        assert_eq!(r.path_to(n(2)).unwrap(), vec![n(0), n(1), n(2)]);
    }

    #[test]
    fn source_is_its_own_target() {
        let g = weighted(false, 2, &[(0, 1, 1.0)]);
        let r = dijkstra(&g, n(0), Some(n(0)), |w| Ok(*w)).unwrap();
        assert_eq!(r.distance(n(0)), Some(0.0));
        assert_eq!(r.parents[&n(0)], None);
        assert_eq!(r.path_to(n(0)).unwrap(), vec![n(0)]);
        assert_eq!(r.distances.len(), 1);
    }

    #[test]
    fn bad_weights_are_rejected() {
        let g = weighted(false, 3, &[(0, 1, 1.0), (1, 2, -1.0)]);
        assert_eq!(
            dijkstra(&g, n(0), None, |w| Ok(*w)),
            Err(GraphError::NegativeWeight {
                edge: EdgeIndex::new(1)
            })
        );
        let g = weighted(false, 2, &[(0, 1, f64::NAN)]);
        assert_eq!(
            dijkstra(&g, n(0), None, |w| Ok(*w)),
            Err(GraphError::NonFiniteWeight {
                edge: EdgeIndex::new(0)
            })
        );
        let g = weighted(false, 2, &[(0, 1, f64::INFINITY)]);
        assert!(dijkstra(&g, n(0), None, |w| Ok(*w)).is_err());
        let failing = dijkstra(&g, n(0), None, |_: &f64| -> Result<f64> {
            Err(GraphError::Callback("no weight".into()))
        });
        assert_eq!(failing, Err(GraphError::Callback("no weight".into())));
        assert!(dijkstra(&g, n(5), None, |w| Ok(*w)).is_err());
    }

    #[test]
    fn directed_edges_are_one_way() {
        let g = weighted(true, 3, &[(0, 1, 1.0), (2, 1, 1.0)]);
        let r = dijkstra(&g, n(0), None, |w| Ok(*w)).unwrap();
        assert_eq!(
            r.distances.keys().copied().collect::<Vec<_>>(),
            vec![n(0), n(1)]
        );
    }

    #[test]
    fn equal_cost_parent_prefers_smaller_index() {
        // 0 -> 2 -> 3 and 0 -> 1 -> 3, all unit costs.
        let g = weighted(
            true,
            4,
            &[(0, 2, 1.0), (2, 3, 1.0), (0, 1, 1.0), (1, 3, 1.0)],
        );
        let r = dijkstra(&g, n(0), None, |w| Ok(*w)).unwrap();
        assert_eq!(r.parents[&n(3)], Some(n(1)));
    }

    #[test]
    fn integer_weights() {
        let mut g: Graph<(), u32> = Graph::undirected();
        for _ in 0..3 {
            g.add_node(());
        }
        g.add_edge(n(0), n(1), 5).unwrap();
        g.add_edge(n(1), n(2), 7).unwrap();
        let r = dijkstra(&g, n(0), None, |w| Ok(*w)).unwrap();
        assert_eq!(r.distance(n(2)), Some(12));
    }

    #[test]
    fn early_exit_reports_only_settled_nodes() {
        let g = weighted(false, 4, &[(0, 1, 1.0), (1, 2, 1.0), (0, 3, 10.0)]);
        let r = dijkstra(&g, n(0), Some(n(1)), |w| Ok(*w)).unwrap();
        assert!(r.distance(n(3)).is_none());
        assert_eq!(r.distance(n(1)), Some(1.0));
    }

    #[test]
    fn hop_counts() {
        let g = weighted(false, 4, &[(0, 1, 0.0), (1, 2, 0.0)]);
        let d = unweighted_distances(&g, n(0)).unwrap();
        assert_eq!(d, BTreeMap::from([(n(0), 0), (n(1), 1), (n(2), 2)]));
        assert!(!d.contains_key(&n(3)));
    }

    #[test]
    fn all_pairs_single_node() {
        let g = weighted(false, 1, &[]);
        let all = all_pairs_dijkstra(&g, |w| Ok(*w)).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[&n(0)].distance(n(0)), Some(0.0));
    }

    #[test]
    fn all_pairs_reports_smallest_failing_source() {
        // Node 1 reaches a negative edge first in index order; 3 as well.
        let g = weighted(true, 5, &[(1, 2, -1.0), (3, 4, -2.0)]);
        let err = all_pairs_dijkstra_with_workers(&g, 4, |w| Ok(*w)).unwrap_err();
        assert_eq!(
            err,
            GraphError::NegativeWeight {
                edge: EdgeIndex::new(0)
            }
        );
    }
}
