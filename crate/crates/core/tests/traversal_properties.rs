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

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sgraph::traversal::{
    bfs_order, collect_linear_runs, dfs_order, is_dag, reachable_set, topological_sort, Reach,
};
use sgraph::{Direction, GraphError, NodeIndex};
use sgraph_testkit::{all_pairs_hops, cycle_graph, is_topological_order, random_dag, random_graph};

#[test]
fn topological_orders_on_random_dags() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..300 {
        let size = rng.gen_range(0..=12);
        let g = random_dag(&mut rng, size, 0.3);
        let order = topological_sort(&g).unwrap();
        assert!(is_topological_order(&g, &order));
        assert_eq!(topological_sort(&g).unwrap(), order);
        assert!(is_dag(&g).unwrap());
    }
}

#[test]
fn kahn_emits_smallest_ready_node() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..100 {
        let g = random_dag(&mut rng, 10, 0.25);
        let order = topological_sort(&g).unwrap();
        // Replay: each emitted node is the smallest with no pending predecessor.
        let mut done = BTreeSet::new();
        for x in order {
            let ready = g
                .node_indices()
                .filter(|v| !done.contains(v))
                .find(|v| {
                    g.neighbors(*v, Direction::Incoming)
                        .unwrap()
                        .iter()
                        .all(|p| done.contains(p))
                })
                .unwrap();
            assert_eq!(x, ready);
            done.insert(x);
        }
    }
}

#[test]
fn cycles_are_detected() {
    for len in 1..=6 {
        let g = cycle_graph(true, len);
        assert!(matches!(
            topological_sort(&g),
            Err(GraphError::Cycle { .. })
        ));
        assert!(!is_dag(&g).unwrap());
    }
}

#[test]
fn traversal_orders_cover_reachable_set() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..200 {
        let directed = rng.gen_bool(0.5);
        let size = rng.gen_range(1..=15);
        let g = random_graph(&mut rng, directed, size, 0.2, true);
        let hops = all_pairs_hops(&g);
        let source = NodeIndex::new(rng.gen_range(0..size));
        let reachable: BTreeSet<NodeIndex> = g
            .node_indices()
            .filter(|v| hops[source.index()][v.index()].is_some())
            .collect();
        let bfs = bfs_order(&g, source).unwrap();
        let dfs = dfs_order(&g, source).unwrap();
        assert_eq!(bfs[0], source);
        assert_eq!(dfs[0], source);
        assert_eq!(bfs.iter().copied().collect::<BTreeSet<_>>(), reachable);
        assert_eq!(dfs.iter().copied().collect::<BTreeSet<_>>(), reachable);
        assert_eq!(bfs.len(), reachable.len());
        assert_eq!(dfs.len(), reachable.len());
        let layers: Vec<usize> = bfs
            .iter()
            .map(|v| hops[source.index()][v.index()].unwrap())
            .collect();
        assert!(layers.windows(2).all(|w| w[0] <= w[1]));
        if directed {
            let mut desc = reachable.clone();
            desc.remove(&source);
            let found = reachable_set(&g, source, Reach::Descendants).unwrap();
            // A node on a cycle through the source is still excluded.
            assert_eq!(found, desc);
            let anc: BTreeSet<NodeIndex> = g
                .node_indices()
                .filter(|v| *v != source && hops[v.index()][source.index()].is_some())
                .collect();
            assert_eq!(reachable_set(&g, source, Reach::Ancestors).unwrap(), anc);
        }
    }
}

#[test]
fn linear_runs_partition_kept_nodes() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..200 {
        let size = rng.gen_range(0..=15);
        let mut g = random_dag(&mut rng, size, 0.2);
        for v in g.node_indices().collect::<Vec<_>>() {
            let keep = rng.gen_bool(0.75) as usize;
            g.set_node_payload(v, keep).unwrap();
        }
        let runs = collect_linear_runs(&g, |p| *p == 1).unwrap();
        let kept: BTreeSet<NodeIndex> = g
            .nodes()
            .filter(|(_, p)| **p == 1)
            .map(|(v, _)| v)
            .collect();
        let mut covered = BTreeSet::new();
        let topo = topological_sort(&g).unwrap();
        let position = |v: NodeIndex| topo.iter().position(|x| *x == v).unwrap();
        for run in &runs {
            for v in run {
                assert!(covered.insert(*v), "node {v} in two runs");
            }
            for pair in run.windows(2) {
                assert!(g.find_edge(pair[0], pair[1]).is_some());
            }
        }
        assert_eq!(covered, kept);
        let firsts: Vec<usize> = runs.iter().map(|r| position(r[0])).collect();
        assert!(firsts.windows(2).all(|w| w[0] < w[1]));
        // Maximality: no run's tail can be joined to another run's head.
        let kept_deg = |v: NodeIndex, dir| {
            g.neighbors(v, dir)
                .unwrap()
                .into_iter()
                .filter(|m| kept.contains(m))
                .count()
        };
        for a in &runs {
            let tail = *a.last().unwrap();
            for b in &runs {
                let head = b[0];
                let joinable = g.find_edge(tail, head).is_some()
                    && kept_deg(tail, Direction::Outgoing) == 1
                    && kept_deg(head, Direction::Incoming) == 1;
                assert!(
                    !joinable,
                    "runs ending {tail} and starting {head} could merge"
                );
            }
        }
    }
}
