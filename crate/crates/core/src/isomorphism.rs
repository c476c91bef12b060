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

//! VF2 (sub)graph isomorphism with a VF2++-style matching order.
//!
//! All entry points take the larger graph first: `(host, pattern)`. A
//! mapping sends every pattern node to a distinct host node. Under
//! *induced* semantics the images of two pattern nodes are joined by
//! exactly as many edges as the pattern nodes are; under *monomorphism*
//! semantics the host may carry extra edges (and extra parallel copies).
//!
//! The search applies the classic VF2 feasibility rules: consistency of
//! the partial mapping with already-matched neighbours, plus one-step
//! look-ahead comparing how many unmatched neighbours of the candidate pair
//! fall in the terminal sets. Label-frequency cutoffs are not used.

use std::collections::{BTreeMap, HashMap};

use crate::error::{GraphError, GraphKind, Result};
use crate::graph::{Direction, EdgeIndex, Graph, NodeIndex};

/// Pattern node -> host node.
pub type IsoMapping = BTreeMap<NodeIndex, NodeIndex>;

type Adjacency = Vec<Vec<usize>>;

type NodeMatcher<'a, NH, NP> = Box<dyn Fn(&NH, &NP) -> bool + 'a>;
type EdgeMatcher<'a, EH, EP> = Box<dyn Fn(&EH, &EP) -> bool + 'a>;

/// What counts as a match: induced or not, plus optional payload
/// predicates. Matchers receive `(host payload, pattern payload)`.
pub struct MatchSemantics<'a, NH, NP, EH, EP> {
    pub induced: bool,
    pub node_matcher: Option<NodeMatcher<'a, NH, NP>>,
    pub edge_matcher: Option<EdgeMatcher<'a, EH, EP>>,
}

impl<'a, NH, NP, EH, EP> MatchSemantics<'a, NH, NP, EH, EP> {
    pub fn induced() -> Self {
        MatchSemantics {
            induced: true,
            node_matcher: None,
            edge_matcher: None,
        }
    }

    pub fn monomorphism() -> Self {
        MatchSemantics {
            induced: false,
            ..Self::induced()
        }
    }

    pub fn with_node_matcher(mut self, f: impl Fn(&NH, &NP) -> bool + 'a) -> Self {
        self.node_matcher = Some(Box::new(f));
        self
    }

    pub fn with_edge_matcher(mut self, f: impl Fn(&EH, &EP) -> bool + 'a) -> Self {
        self.edge_matcher = Some(Box::new(f));
        self
    }
}

impl<NH, NP, EH, EP> Default for MatchSemantics<'_, NH, NP, EH, EP> {
    fn default() -> Self {
        Self::induced()
    }
}

/// Matching order: BFS from the highest-degree node, each level greedily
/// ordered by (already-ordered neighbours desc, degree desc, index asc).
///
/// The component holding the global root goes first; the remaining
/// components follow by decreasing size, each rooted the same way.
pub fn vf2pp_order<N, E>(pattern: &Graph<N, E>) -> Vec<NodeIndex> {
    let bound = pattern.node_bound();
    let mut degree = vec![0usize; bound];
    let mut adjacent: Vec<Vec<NodeIndex>> = vec![Vec::new(); bound];
    for n in pattern.node_indices() {
        degree[n.index()] = pattern.degree(n).expect("live node");
        adjacent[n.index()] = pattern
            .neighbors(n, Direction::All)
            .expect("live node")
            .into_iter()
            .filter(|m| *m != n)
            .collect();
    }
    let better_root = |a: NodeIndex, b: NodeIndex| degree[a.index()] > degree[b.index()];

    // Components, each listed in ascending index order.
    let mut component_of = vec![usize::MAX; bound];
    let mut components: Vec<Vec<NodeIndex>> = Vec::new();
    for n in pattern.node_indices() {
        if component_of[n.index()] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut members = vec![n];
        component_of[n.index()] = id;
        let mut i = 0;
        while i < members.len() {
            for &m in &adjacent[members[i].index()] {
                if component_of[m.index()] == usize::MAX {
                    component_of[m.index()] = id;
                    members.push(m);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        components.push(members);
    }
    let Some(global_root) =
        pattern
            .node_indices()
            .reduce(|best, n| if better_root(n, best) { n } else { best })
    else {
        return Vec::new();
    };
    let first = component_of[global_root.index()];
    let mut rest: Vec<usize> = (0..components.len()).filter(|c| *c != first).collect();
    rest.sort_by_key(|c| (std::cmp::Reverse(components[*c].len()), components[*c][0]));

    let mut order = Vec::with_capacity(pattern.node_count());
    let mut ordered = vec![false; bound];
    let mut visited = vec![false; bound];
    let mut conn = vec![0usize; bound];
    for c in std::iter::once(first).chain(rest) {
        let root = components[c]
            .iter()
            .copied()
            .reduce(|best, n| if better_root(n, best) { n } else { best })
            .expect("components are non-empty");
        let mut level = vec![root];
        visited[root.index()] = true;
        while !level.is_empty() {
            let mut next = Vec::new();
            while !level.is_empty() {
                let pick = (0..level.len())
                    .max_by_key(|&i| {
                        let n = level[i];
                        (
                            conn[n.index()],
                            degree[n.index()],
                            std::cmp::Reverse(n.index()),
                        )
                    })
                    .expect("level is non-empty");
                let n = level.swap_remove(pick);
                order.push(n);
                ordered[n.index()] = true;
                for &m in &adjacent[n.index()] {
                    conn[m.index()] += 1;
                    if !visited[m.index()] {
                        visited[m.index()] = true;
                        next.push(m);
                    }
                }
            }
            level = next;
        }
    }
    debug_assert!(ordered.iter().filter(|x| **x).count() == pattern.node_count());
    order
}

const UNMAPPED: usize = usize::MAX;

// Dense re-indexing of a graph for the search.
struct Dense<'a, N, E> {
    graph: &'a Graph<N, E>,
    ids: Vec<NodeIndex>,
    succ: Adjacency,
    pred: Adjacency,
    edges: HashMap<(usize, usize), Vec<EdgeIndex>>,
}

impl<'a, N, E> Dense<'a, N, E> {
    fn new(graph: &'a Graph<N, E>) -> Self {
        let ids: Vec<NodeIndex> = graph.node_indices().collect();
        let mut dense_of = vec![UNMAPPED; graph.node_bound()];
        for (i, n) in ids.iter().enumerate() {
            dense_of[n.index()] = i;
        }
        let directed = graph.is_directed();
        let mut succ = vec![Vec::new(); ids.len()];
        let mut pred = vec![Vec::new(); ids.len()];
        let mut edges: HashMap<(usize, usize), Vec<EdgeIndex>> = HashMap::new();
        for (e, u, v) in graph.edge_list() {
            let (u, v) = (dense_of[u.index()], dense_of[v.index()]);
            let key = if directed || u <= v { (u, v) } else { (v, u) };
            edges.entry(key).or_default().push(e);
            if u != v {
                succ[u].push(v);
                if directed {
                    pred[v].push(u);
                } else {
                    succ[v].push(u);
                }
            }
        }
        for list in succ.iter_mut().chain(pred.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        if !directed {
            pred.clone_from(&succ);
        }
        Dense {
            graph,
            ids,
            succ,
            pred,
            edges,
        }
    }

    fn len(&self) -> usize {
        self.ids.len()
    }

    fn between(&self, u: usize, v: usize) -> &[EdgeIndex] {
        let key = if self.graph.is_directed() || u <= v {
            (u, v)
        } else {
            (v, u)
        };
        self.edges.get(&key).map_or(&[], Vec::as_slice)
    }
}

/// Whether every pattern edge can be paired with a distinct compatible host
/// edge (all host edges must be used when `exact`).
fn edges_compatible<EH, EP>(
    host: &Graph<impl Sized, EH>,
    pattern: &Graph<impl Sized, EP>,
    host_edges: &[EdgeIndex],
    pattern_edges: &[EdgeIndex],
    exact: bool,
    matcher: Option<&EdgeMatcher<'_, EH, EP>>,
) -> bool {
    let counts_ok = if exact {
        host_edges.len() == pattern_edges.len()
    } else {
        pattern_edges.len() <= host_edges.len()
    };
    if !counts_ok {
        return false;
    }
    let Some(matcher) = matcher else {
        return true;
    };
    let ok = |pi: usize, hi: usize| {
        matcher(
            host.edge_payload(host_edges[hi]).expect("live edge"),
            pattern.edge_payload(pattern_edges[pi]).expect("live edge"),
        )
    };
    // Kuhn's augmenting paths; parallel edge bundles are tiny.
    let mut owner = vec![UNMAPPED; host_edges.len()];
    fn augment(
        pi: usize,
        hosts: usize,
        ok: &dyn Fn(usize, usize) -> bool,
        owner: &mut [usize],
        seen: &mut [bool],
    ) -> bool {
        for hi in 0..hosts {
            if seen[hi] || !ok(pi, hi) {
                continue;
            }
            seen[hi] = true;
            if owner[hi] == UNMAPPED || augment(owner[hi], hosts, ok, owner, seen) {
                owner[hi] = pi;
                return true;
            }
        }
        false
    }
    (0..pattern_edges.len()).all(|pi| {
        let mut seen = vec![false; host_edges.len()];
        augment(pi, host_edges.len(), &ok, &mut owner, &mut seen)
    })
}

struct Frame {
    pattern_node: usize,
    candidates: Vec<usize>,
    next: usize,
    current: Option<usize>,
}

/// Lazy enumeration of VF2 mappings in deterministic order.
///
/// Pattern nodes are matched in the given order; host candidates are tried
/// in ascending index order.
pub struct Vf2Mappings<'a, NH, EH, NP, EP> {
    host: Dense<'a, NH, EH>,
    pattern: Dense<'a, NP, EP>,
    sem: &'a MatchSemantics<'a, NH, NP, EH, EP>,
    order: Vec<usize>,
    core_pattern: Vec<usize>,
    core_host: Vec<usize>,
    out_pattern: Vec<usize>,
    in_pattern: Vec<usize>,
    out_host: Vec<usize>,
    in_host: Vec<usize>,
    stack: Vec<Frame>,
    started: bool,
    done: bool,
}

impl<'a, NH, EH, NP, EP> Vf2Mappings<'a, NH, EH, NP, EP> {
    /// Search in the VF2++ order of `pattern`.
    pub fn new(
        host: &'a Graph<NH, EH>,
        pattern: &'a Graph<NP, EP>,
        sem: &'a MatchSemantics<'a, NH, NP, EH, EP>,
    ) -> Result<Self> {
        Self::with_order(host, pattern, sem, &vf2pp_order(pattern))
    }

    /// Search matching pattern nodes in `order`, which must be a
    /// permutation of the live pattern nodes.
    pub fn with_order(
        host: &'a Graph<NH, EH>,
        pattern: &'a Graph<NP, EP>,
        sem: &'a MatchSemantics<'a, NH, NP, EH, EP>,
        order: &[NodeIndex],
    ) -> Result<Self> {
        if host.is_directed() != pattern.is_directed() {
            return Err(GraphError::DirectednessMismatch);
        }
        let host = Dense::new(host);
        let pattern = Dense::new(pattern);
        let mut dense_of = vec![UNMAPPED; pattern.graph.node_bound()];
        for (i, n) in pattern.ids.iter().enumerate() {
            dense_of[n.index()] = i;
        }
        let mut used = vec![false; pattern.len()];
        let mut dense_order = Vec::with_capacity(order.len());
        for n in order {
            let i = dense_of.get(n.index()).copied().unwrap_or(UNMAPPED);
            if i == UNMAPPED || used[i] {
                return Err(GraphError::Parameter(format!(
                    "match order is not a permutation of the pattern nodes (at {n})"
                )));
            }
            used[i] = true;
            dense_order.push(i);
        }
        if dense_order.len() != pattern.len() {
            return Err(GraphError::Parameter(
                "match order does not cover every pattern node".into(),
            ));
        }
        let (np, nh) = (pattern.len(), host.len());
        let hopeless = np > nh
            || pattern.graph.edge_count() > host.graph.edge_count()
            || (sem.induced && np == nh && pattern.graph.edge_count() != host.graph.edge_count());
        Ok(Vf2Mappings {
            host,
            pattern,
            sem,
            order: dense_order,
            core_pattern: vec![UNMAPPED; np],
            core_host: vec![UNMAPPED; nh],
            out_pattern: vec![0; np],
            in_pattern: vec![0; np],
            out_host: vec![0; nh],
            in_host: vec![0; nh],
            stack: Vec::new(),
            started: false,
            done: hopeless,
        })
    }

    fn candidates(&self, p: usize) -> Vec<usize> {
        let free = |h: &usize| self.core_host[*h] == UNMAPPED;
        // Pattern p is a successor of q, so the image must succeed q's image.
        if let Some(&q) = self.pattern.pred[p]
            .iter()
            .find(|q| self.core_pattern[**q] != UNMAPPED)
        {
            return self.host.succ[self.core_pattern[q]]
                .iter()
                .copied()
                .filter(free)
                .collect();
        }
        if let Some(&q) = self.pattern.succ[p]
            .iter()
            .find(|q| self.core_pattern[**q] != UNMAPPED)
        {
            return self.host.pred[self.core_pattern[q]]
                .iter()
                .copied()
                .filter(free)
                .collect();
        }
        (0..self.host.len()).filter(free).collect()
    }

    fn feasible(&self, p: usize, h: usize) -> bool {
        let sem = self.sem;
        let (host, pattern) = (self.host.graph, self.pattern.graph);
        if let Some(matcher) = &sem.node_matcher {
            let hp = host.node_payload(self.host.ids[h]).expect("live node");
            let pp = pattern
                .node_payload(self.pattern.ids[p])
                .expect("live node");
            if !matcher(hp, pp) {
                return false;
            }
        }
        let edge_matcher = sem.edge_matcher.as_ref();
        let pair_ok = |pu: usize, pv: usize, hu: usize, hv: usize| {
            edges_compatible(
                host,
                pattern,
                self.host.between(hu, hv),
                self.pattern.between(pu, pv),
                sem.induced,
                edge_matcher,
            )
        };
        if !pair_ok(p, p, h, h) {
            return false;
        }
        let directed = pattern.is_directed();
        // Matched neighbours must agree.
        for &q in &self.pattern.succ[p] {
            let hq = self.core_pattern[q];
            if hq != UNMAPPED && !pair_ok(p, q, h, hq) {
                return false;
            }
        }
        if directed {
            for &q in &self.pattern.pred[p] {
                let hq = self.core_pattern[q];
                if hq != UNMAPPED && !pair_ok(q, p, hq, h) {
                    return false;
                }
            }
        }
        if sem.induced {
            for &hq in &self.host.succ[h] {
                let q = self.core_host[hq];
                if q != UNMAPPED && self.pattern.between(p, q).is_empty() {
                    return false;
                }
            }
            if directed {
                for &hq in &self.host.pred[h] {
                    let q = self.core_host[hq];
                    if q != UNMAPPED && self.pattern.between(q, p).is_empty() {
                        return false;
                    }
                }
            }
        }
        self.look_ahead(p, h)
    }

    fn look_ahead(&self, p: usize, h: usize) -> bool {
        #[derive(Default)]
        struct Tally {
            out: usize,
            inc: usize,
            new: usize,
            total: usize,
        }
        let tally = |list: &[usize], core: &[usize], out_t: &[usize], in_t: &[usize]| {
            let mut t = Tally::default();
            for &x in list {
                if core[x] != UNMAPPED {
                    continue;
                }
                t.total += 1;
                let (o, i) = (out_t[x] != 0, in_t[x] != 0);
                t.out += o as usize;
                t.inc += i as usize;
                t.new += (!o && !i) as usize;
            }
            t
        };
        let lists: &[(&Adjacency, &Adjacency)] = if self.pattern.graph.is_directed() {
            &[
                (&self.pattern.succ, &self.host.succ),
                (&self.pattern.pred, &self.host.pred),
            ]
        } else {
            &[(&self.pattern.succ, &self.host.succ)]
        };
        for (pl, hl) in lists {
            let tp = tally(
                &pl[p],
                &self.core_pattern,
                &self.out_pattern,
                &self.in_pattern,
            );
            let th = tally(&hl[h], &self.core_host, &self.out_host, &self.in_host);
            if tp.out > th.out || tp.inc > th.inc || tp.total > th.total {
                return false;
            }
            if self.sem.induced && tp.new > th.new {
                return false;
            }
        }
        true
    }

    fn map(&mut self, p: usize, h: usize, depth: usize) {
        self.core_pattern[p] = h;
        self.core_host[h] = p;
        mark(&self.pattern.succ[p], &mut self.out_pattern, depth);
        mark(&self.pattern.pred[p], &mut self.in_pattern, depth);
        mark(&self.host.succ[h], &mut self.out_host, depth);
        mark(&self.host.pred[h], &mut self.in_host, depth);
    }

    fn unmap(&mut self, p: usize, h: usize, depth: usize) {
        self.core_pattern[p] = UNMAPPED;
        self.core_host[h] = UNMAPPED;
        unmark(&self.pattern.succ[p], &mut self.out_pattern, depth);
        unmark(&self.pattern.pred[p], &mut self.in_pattern, depth);
        unmark(&self.host.succ[h], &mut self.out_host, depth);
        unmark(&self.host.pred[h], &mut self.in_host, depth);
    }

    fn push_frame(&mut self) {
        let p = self.order[self.stack.len()];
        let candidates = self.candidates(p);
        self.stack.push(Frame {
            pattern_node: p,
            candidates,
            next: 0,
            current: None,
        });
    }

    fn current_mapping(&self) -> IsoMapping {
        self.core_pattern
            .iter()
            .enumerate()
            .map(|(p, &h)| (self.pattern.ids[p], self.host.ids[h]))
            .collect()
    }
}

fn mark(list: &[usize], terminal: &mut [usize], depth: usize) {
    for &x in list {
        if terminal[x] == 0 {
            terminal[x] = depth;
        }
    }
}

fn unmark(list: &[usize], terminal: &mut [usize], depth: usize) {
    for &x in list {
        if terminal[x] == depth {
            terminal[x] = 0;
        }
    }
}

impl<NH, EH, NP, EP> Iterator for Vf2Mappings<'_, NH, EH, NP, EP> {
    type Item = IsoMapping;

    fn next(&mut self) -> Option<IsoMapping> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.order.is_empty() {
                self.done = true;
                return Some(IsoMapping::new());
            }
            self.push_frame();
        }
        loop {
            let depth = self.stack.len();
            let Some(frame) = self.stack.last_mut() else {
                self.done = true;
                return None;
            };
            let p = frame.pattern_node;
            if let Some(h) = frame.current.take() {
                self.unmap(p, h, depth);
            }
            let mut chosen = None;
            loop {
                let frame = self.stack.last_mut().expect("frame exists");
                let Some(&h) = frame.candidates.get(frame.next) else {
                    break;
                };
                frame.next += 1;
                if self.feasible(p, h) {
                    chosen = Some(h);
                    break;
                }
            }
            match chosen {
                None => {
                    self.stack.pop();
                }
                Some(h) => {
                    self.map(p, h, depth);
                    self.stack.last_mut().expect("frame exists").current = Some(h);
                    if depth == self.order.len() {
                        return Some(self.current_mapping());
                    }
                    self.push_frame();
                }
            }
        }
    }
}

/// Streams mappings of `pattern` into `host` in VF2++ order.
pub fn vf2_mapping_iter<'a, NH, EH, NP, EP>(
    host: &'a Graph<NH, EH>,
    pattern: &'a Graph<NP, EP>,
    sem: &'a MatchSemantics<'a, NH, NP, EH, EP>,
) -> Result<Vf2Mappings<'a, NH, EH, NP, EP>> {
    Vf2Mappings::new(host, pattern, sem)
}

/// Up to `limit` distinct mappings of `pattern` into `host`.
pub fn vf2_mappings<'a, NH, EH, NP, EP>(
    host: &'a Graph<NH, EH>,
    pattern: &'a Graph<NP, EP>,
    sem: &'a MatchSemantics<'a, NH, NP, EH, EP>,
    limit: Option<usize>,
) -> Result<Vec<IsoMapping>> {
    let iter = Vf2Mappings::new(host, pattern, sem)?;
    Ok(match limit {
        Some(k) => iter.take(k).collect(),
        None => iter.collect(),
    })
}

/// Whether `pattern` embeds into `host` under `sem`.
pub fn is_subgraph_isomorphic<'a, NH, EH, NP, EP>(
    host: &'a Graph<NH, EH>,
    pattern: &'a Graph<NP, EP>,
    sem: &'a MatchSemantics<'a, NH, NP, EH, EP>,
) -> Result<bool> {
    Ok(Vf2Mappings::new(host, pattern, sem)?.next().is_some())
}

/// Whether a bijection between `a` and `b` preserves adjacency (with edge
/// multiplicities) in both directions. `sem.induced` is ignored.
pub fn is_isomorphic<'a, NA, EA, NB, EB>(
    a: &'a Graph<NA, EA>,
    b: &'a Graph<NB, EB>,
    sem: &'a MatchSemantics<'a, NA, NB, EA, EB>,
) -> Result<bool> {
    if a.is_directed() != b.is_directed() {
        return Err(GraphError::DirectednessMismatch);
    }
    if a.node_count() != b.node_count() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    if sem.induced {
        return is_subgraph_isomorphic(a, b, sem);
    }
    let strict = MatchSemantics {
        induced: true,
        node_matcher: sem
            .node_matcher
            .as_ref()
            .map(|f| Box::new(move |x: &NA, y: &NB| f(x, y)) as NodeMatcher<'_, NA, NB>),
        edge_matcher: sem
            .edge_matcher
            .as_ref()
            .map(|f| Box::new(move |x: &EA, y: &EB| f(x, y)) as EdgeMatcher<'_, EA, EB>),
    };
    let found = Vf2Mappings::new(a, b, &strict)?.next().is_some();
    Ok(found)
}

/// Checks `mapping` against `sem` by direct inspection of both graphs.
///
/// Returns false for anything malformed: missing or extra pattern keys,
/// dead host nodes, non-injective maps, rejected payloads, or an edge
/// condition violated for some pair of pattern nodes.
pub fn verify_mapping<NH, EH, NP, EP>(
    host: &Graph<NH, EH>,
    pattern: &Graph<NP, EP>,
    sem: &MatchSemantics<'_, NH, NP, EH, EP>,
    mapping: &IsoMapping,
) -> bool {
    if host.is_directed() != pattern.is_directed() {
        return false;
    }
    let keys: Vec<NodeIndex> = mapping.keys().copied().collect();
    if !keys.iter().copied().eq(pattern.node_indices()) {
        return false;
    }
    let mut images: Vec<NodeIndex> = mapping.values().copied().collect();
    if images.iter().any(|h| !host.contains_node(*h)) {
        return false;
    }
    images.sort_unstable();
    if images.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    if let Some(matcher) = &sem.node_matcher {
        for (p, h) in mapping {
            let ok = matcher(
                host.node_payload(*h).expect("checked live"),
                pattern.node_payload(*p).expect("checked live"),
            );
            if !ok {
                return false;
            }
        }
    }
    let directed = pattern.is_directed();
    for (i, &p) in keys.iter().enumerate() {
        let partners = if directed { &keys[..] } else { &keys[i..] };
        for &q in partners {
            let pattern_edges = pattern.edges_between(p, q);
            let host_edges = host.edges_between(mapping[&p], mapping[&q]);
            if !sem.induced && pattern_edges.is_empty() {
                continue;
            }
            if !edges_compatible(
                host,
                pattern,
                &host_edges,
                &pattern_edges,
                sem.induced,
                sem.edge_matcher.as_ref(),
            ) {
                return false;
            }
        }
    }
    true
}

/// First placement of the `interaction` graph's qubits onto `device`
/// qubits such that every interacting pair sits on a coupled pair.
pub fn vf2_layout<NH, EH, NP, EP>(
    device: &Graph<NH, EH>,
    interaction: &Graph<NP, EP>,
) -> Result<Option<IsoMapping>> {
    if device.is_directed() || interaction.is_directed() {
        return Err(GraphError::WrongKind {
            expected: GraphKind::Undirected,
        });
    }
    let sem = MatchSemantics::monomorphism();
    let found = Vf2Mappings::new(device, interaction, &sem)?.next();
    Ok(found)
}
