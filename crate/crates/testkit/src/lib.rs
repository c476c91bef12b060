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

//! Random instance builders and brute-force oracles for the sgraph test
//! suites. Oracles only read raw structure (node ids, edge lists, payloads)
//! and never call the library's algorithms.

use std::collections::{BTreeMap, HashMap, HashSet};

use rand::Rng;
use sgraph::{EdgeIndex, Graph, NodeIndex};

pub fn n(i: usize) -> NodeIndex {
    NodeIndex::new(i)
}

/// Graph on nodes `0..nodes` with the given edges, node payload = position.
pub fn build(directed: bool, nodes: usize, edges: &[(usize, usize)]) -> Graph<usize, ()> {
    let mut g = Graph::new(directed, true);
    for i in 0..nodes {
        g.add_node(i);
    }
    for &(u, v) in edges {
        g.add_edge(n(u), n(v), ()).expect("endpoints exist");
    }
    g
}

pub fn complete_graph(k: usize) -> Graph<usize, ()> {
    let edges: Vec<_> = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .collect();
    build(false, k, &edges)
}

pub fn cycle_graph(directed: bool, k: usize) -> Graph<usize, ()> {
    let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    build(directed, k, &edges)
}

pub fn path_graph(k: usize) -> Graph<usize, ()> {
    let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    build(false, k, &edges)
}

pub fn star_graph(leaves: usize) -> Graph<usize, ()> {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    build(false, leaves + 1, &edges)
}

/// Erdős–Rényi style graph: each ordered (directed) or unordered pair gets
/// an edge with probability `p`; self-loops only when `loops`.
pub fn random_graph<R: Rng>(
    rng: &mut R,
    directed: bool,
    nodes: usize,
    p: f64,
    loops: bool,
) -> Graph<usize, ()> {
    let mut g = Graph::new(directed, true);
    for i in 0..nodes {
        g.add_node(i);
    }
    for u in 0..nodes {
        let start = if directed { 0 } else { u };
        for v in start..nodes {
            if u == v && !loops {
                continue;
            }
            if rng.gen_bool(p) {
                g.add_edge(n(u), n(v), ()).unwrap();
            }
        }
    }
    g
}

/// Random multigraph: `edges` endpoints drawn uniformly (parallel edges and
/// loops possible).
pub fn random_multigraph<R: Rng>(
    rng: &mut R,
    directed: bool,
    nodes: usize,
    edges: usize,
) -> Graph<usize, ()> {
    let mut g = Graph::new(directed, true);
    for i in 0..nodes {
        g.add_node(i);
    }
    if nodes == 0 {
        return g;
    }
    for _ in 0..edges {
        let u = rng.gen_range(0..nodes);
        let v = rng.gen_range(0..nodes);
        g.add_edge(n(u), n(v), ()).unwrap();
    }
    g
}

/// Random graph with edge weights uniform in `[0, 10]`.
pub fn random_weighted<R: Rng>(
    rng: &mut R,
    directed: bool,
    nodes: usize,
    p: f64,
) -> Graph<(), f64> {
    let mut g = Graph::new(directed, true);
    for _ in 0..nodes {
        g.add_node(());
    }
    for u in 0..nodes {
        for v in 0..nodes {
            if (!directed && v < u) || u == v {
                continue;
            }
            if rng.gen_bool(p) {
                g.add_edge(n(u), n(v), rng.gen_range(0.0..=10.0)).unwrap();
            }
        }
    }
    g
}

/// Random DAG: edges only go from lower to higher position, then node ids
/// are shuffled so the index order is not a topological order.
pub fn random_dag<R: Rng>(rng: &mut R, nodes: usize, p: f64) -> Graph<usize, ()> {
    let mut perm: Vec<usize> = (0..nodes).collect();
    for i in (1..nodes).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let mut g = Graph::new(true, true);
    for i in 0..nodes {
        g.add_node(i);
    }
    for i in 0..nodes {
        for j in i + 1..nodes {
            if rng.gen_bool(p) {
                g.add_edge(n(perm[i]), n(perm[j]), ()).unwrap();
            }
        }
    }
    g
}

/// Edge multiplicities keyed by `(u, v)`; unordered pairs are normalised.
pub fn edge_counts<N, E>(g: &Graph<N, E>) -> HashMap<(usize, usize), usize> {
    let mut counts = HashMap::new();
    for (_, u, v) in g.edge_list() {
        let (u, v) = (u.index(), v.index());
        let key = if g.is_directed() || u <= v {
            (u, v)
        } else {
            (v, u)
        };
        *counts.entry(key).or_insert(0) += 1;
    }
    counts
}

fn pair_key(directed: bool, u: usize, v: usize) -> (usize, usize) {
    if directed || u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Checks a pattern -> host assignment by comparing edge multiplicities of
/// every pattern node pair.
pub fn assignment_ok(
    directed: bool,
    host_counts: &HashMap<(usize, usize), usize>,
    pattern_counts: &HashMap<(usize, usize), usize>,
    pattern_nodes: &[usize],
    image: &[usize],
    induced: bool,
) -> bool {
    for i in 0..pattern_nodes.len() {
        for j in 0..pattern_nodes.len() {
            if !directed && j < i {
                continue;
            }
            let pc = pattern_counts
                .get(&pair_key(directed, pattern_nodes[i], pattern_nodes[j]))
                .copied()
                .unwrap_or(0);
            let hc = host_counts
                .get(&pair_key(directed, image[i], image[j]))
                .copied()
                .unwrap_or(0);
            if (induced && pc != hc) || (!induced && pc > hc) {
                return false;
            }
        }
    }
    true
}

/// Every injective pattern -> host assignment accepted by the edge rule
/// and by `node_ok(host_node, pattern_node)`.
pub fn all_injections<NH, EH, NP, EP>(
    host: &Graph<NH, EH>,
    pattern: &Graph<NP, EP>,
    induced: bool,
    node_ok: &dyn Fn(usize, usize) -> bool,
) -> Vec<BTreeMap<NodeIndex, NodeIndex>> {
    let host_nodes: Vec<usize> = host.node_indices().map(|x| x.index()).collect();
    let pattern_nodes: Vec<usize> = pattern.node_indices().map(|x| x.index()).collect();
    let hc = edge_counts(host);
    let pc = edge_counts(pattern);
    let mut out = Vec::new();
    let mut image = Vec::new();
    let mut used = vec![false; host_nodes.len()];
    fn rec(
        depth: usize,
        host_nodes: &[usize],
        pattern_nodes: &[usize],
        used: &mut [bool],
        image: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if depth == pattern_nodes.len() {
            visit(image);
            return;
        }
        for i in 0..host_nodes.len() {
            if used[i] {
                continue;
            }
            used[i] = true;
            image.push(host_nodes[i]);
            rec(depth + 1, host_nodes, pattern_nodes, used, image, visit);
            image.pop();
            used[i] = false;
        }
    }
    let directed = host.is_directed();
    let mut visit = |img: &[usize]| {
        if pattern_nodes.iter().zip(img).all(|(p, h)| node_ok(*h, *p))
            && assignment_ok(directed, &hc, &pc, &pattern_nodes, img, induced)
        {
            out.push(
                pattern_nodes
                    .iter()
                    .zip(img)
                    .map(|(p, h)| (n(*p), n(*h)))
                    .collect(),
            );
        }
    };
    rec(
        0,
        &host_nodes,
        &pattern_nodes,
        &mut used,
        &mut image,
        &mut visit,
    );
    out
}

/// Floyd–Warshall hop counts; `None` when unreachable.
pub fn all_pairs_hops<N, E>(g: &Graph<N, E>) -> Vec<Vec<Option<usize>>> {
    let size = g.node_bound();
    let mut d = vec![vec![None; size]; size];
    for x in g.node_indices() {
        d[x.index()][x.index()] = Some(0);
    }
    for (_, u, v) in g.edge_list() {
        let (u, v) = (u.index(), v.index());
        if u != v {
            d[u][v] = Some(1);
            if !g.is_directed() {
                d[v][u] = Some(1);
            }
        }
    }
    for k in 0..size {
        for i in 0..size {
            for j in 0..size {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Largest finite hop distance between two live nodes.
pub fn diameter<N, E>(g: &Graph<N, E>) -> usize {
    let d = all_pairs_hops(g);
    let live: Vec<usize> = g.node_indices().map(|x| x.index()).collect();
    live.iter()
        .flat_map(|&i| live.iter().map(move |&j| (i, j)))
        .filter_map(|(i, j)| d[i][j])
        .max()
        .unwrap_or(0)
}

/// Bellman–Ford relaxation over the edge list.
pub fn bellman_ford<N, E>(
    g: &Graph<N, E>,
    source: NodeIndex,
    weight: impl Fn(&E) -> f64,
) -> BTreeMap<NodeIndex, f64> {
    let mut dist: BTreeMap<NodeIndex, f64> = BTreeMap::from([(source, 0.0)]);
    let arcs: Vec<(NodeIndex, NodeIndex, f64)> = g
        .edges()
        .flat_map(|e| {
            let w = weight(e.payload);
            let mut v = vec![(e.source, e.target, w)];
            if !g.is_directed() {
                v.push((e.target, e.source, w));
            }
            v
        })
        .collect();
    for _ in 0..g.node_count() {
        let mut changed = false;
        for &(u, v, w) in &arcs {
            if let Some(&du) = dist.get(&u) {
                let cand = du + w;
                if dist.get(&v).is_none_or(|&dv| cand < dv) {
                    dist.insert(v, cand);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    dist
}

/// Cheapest simple path cost from `s` to `t` by enumerating all simple paths.
pub fn brute_force_path_cost<N, E>(
    g: &Graph<N, E>,
    s: NodeIndex,
    t: NodeIndex,
    weight: impl Fn(&E) -> f64,
) -> Option<f64> {
    let arcs: Vec<(usize, usize, f64)> = g
        .edges()
        .flat_map(|e| {
            let w = weight(e.payload);
            let mut v = vec![(e.source.index(), e.target.index(), w)];
            if !g.is_directed() {
                v.push((e.target.index(), e.source.index(), w));
            }
            v
        })
        .collect();
    fn walk(
        at: usize,
        t: usize,
        cost: f64,
        arcs: &[(usize, usize, f64)],
        on_path: &mut HashSet<usize>,
        best: &mut Option<f64>,
    ) {
        if at == t {
            *best = Some(best.map_or(cost, |b: f64| b.min(cost)));
            return;
        }
        for &(u, v, w) in arcs {
            if u == at && !on_path.contains(&v) {
                on_path.insert(v);
                walk(v, t, cost + w, arcs, on_path, best);
                on_path.remove(&v);
            }
        }
    }
    let mut best = None;
    let mut on_path = HashSet::from([s.index()]);
    walk(s.index(), t.index(), 0.0, &arcs, &mut on_path, &mut best);
    best
}

/// Node and edge counts of a `rows x cols` honeycomb, found by listing the
/// six corners of every flat-topped cell in integer coordinates and
/// collecting the distinct corners and sides.
pub fn hexagon_cell_counts(rows: usize, cols: usize) -> (usize, usize) {
    // x in half-units of the corner radius, y in units of sqrt(3)/2.
    const CORNERS: [(i64, i64); 6] = [(2, 0), (1, 1), (-1, 1), (-2, 0), (-1, -1), (1, -1)];
    let mut vertices = HashSet::new();
    let mut sides = HashSet::new();
    for c in 0..cols as i64 {
        for r in 0..rows as i64 {
            let (cx, cy) = (3 * c, 2 * r + c % 2);
            let pts: Vec<(i64, i64)> = CORNERS.iter().map(|(dx, dy)| (cx + dx, cy + dy)).collect();
            for i in 0..6 {
                let (a, b) = (pts[i], pts[(i + 1) % 6]);
                vertices.insert(a);
                sides.insert(if a <= b { (a, b) } else { (b, a) });
            }
        }
    }
    (vertices.len(), sides.len())
}

/// Number of distinct simple cycles of length `len` in an undirected
/// simple graph.
pub fn count_cycles_of_length<N, E>(g: &Graph<N, E>, len: usize) -> usize {
    let adj: HashSet<(usize, usize)> = g
        .edge_list()
        .flat_map(|(_, u, v)| [(u.index(), v.index()), (v.index(), u.index())])
        .collect();
    let nodes: Vec<usize> = g.node_indices().map(|x| x.index()).collect();
    let mut count = 0;
    // Each cycle is counted once from its smallest node in each of the two
    // directions.
    fn extend(
        path: &mut Vec<usize>,
        len: usize,
        nodes: &[usize],
        adj: &HashSet<(usize, usize)>,
        count: &mut usize,
    ) {
        let start = path[0];
        let last = *path.last().unwrap();
        if path.len() == len {
            if adj.contains(&(last, start)) {
                *count += 1;
            }
            return;
        }
        for &v in nodes {
            if v > start && !path.contains(&v) && adj.contains(&(last, v)) {
                path.push(v);
                extend(path, len, nodes, adj, count);
                path.pop();
            }
        }
    }
    for &s in &nodes {
        extend(&mut vec![s], len, &nodes, &adj, &mut count);
    }
    count / 2
}

/// Connected and acyclic, by union-find over the edge list.
pub fn is_tree<N, E>(g: &Graph<N, E>) -> bool {
    let mut parent: Vec<usize> = (0..g.node_bound()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    for (_, u, v) in g.edge_list() {
        let (a, b) = (find(&mut parent, u.index()), find(&mut parent, v.index()));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    let roots: HashSet<usize> = g
        .node_indices()
        .map(|x| find(&mut parent, x.index()))
        .collect();
    roots.len() <= 1
}

/// Whether `order` is a permutation of the live nodes with every edge
/// pointing forward.
pub fn is_topological_order<N, E>(g: &Graph<N, E>, order: &[NodeIndex]) -> bool {
    let mut position = HashMap::new();
    for (i, x) in order.iter().enumerate() {
        if position.insert(*x, i).is_some() {
            return false;
        }
    }
    if position.len() != g.node_count() || g.node_indices().any(|x| !position.contains_key(&x)) {
        return false;
    }
    g.edge_list().all(|(_, u, v)| position[&u] < position[&v])
}

/// Maximum matching size by trying every subset of the non-loop edges.
pub fn brute_force_matching_size<N, E>(g: &Graph<N, E>) -> usize {
    let edges: Vec<(usize, usize)> = g
        .edge_list()
        .filter(|(_, u, v)| u != v)
        .map(|(_, u, v)| (u.index(), v.index()))
        .collect();
    assert!(edges.len() <= 20, "too many edges for subset enumeration");
    let mut best = 0;
    for mask in 0u32..(1 << edges.len()) {
        let mut seen = HashSet::new();
        let ok = (0..edges.len())
            .filter(|i| mask & (1 << i) != 0)
            .all(|i| seen.insert(edges[i].0) && seen.insert(edges[i].1));
        if ok {
            best = best.max(mask.count_ones() as usize);
        }
    }
    best
}

/// Edge index set as plain integers, for readable assertions.
pub fn edge_ids(set: impl IntoIterator<Item = EdgeIndex>) -> Vec<usize> {
    set.into_iter().map(|e| e.index()).collect()
}
