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

//! Cardinality matchings on undirected graphs.

use std::collections::{BTreeSet, HashMap};

use crate::error::{GraphError, GraphKind, Result};
use crate::graph::{EdgeIndex, Graph};

/// A set of pairwise endpoint-disjoint edges.
pub type Matching = BTreeSet<EdgeIndex>;

/// Node limit for [`max_matching_exact`].
pub const EXACT_MATCHING_NODE_LIMIT: usize = 20;

fn require_undirected<N, E>(g: &Graph<N, E>) -> Result<()> {
    if g.is_directed() {
        Err(GraphError::WrongKind {
            expected: GraphKind::Undirected,
        })
    } else {
        Ok(())
    }
}

/// Scans edges by ascending index and keeps each one whose endpoints are
/// both still free. Self-loops are skipped.
pub fn greedy_maximal_matching<N, E>(g: &Graph<N, E>) -> Result<Matching> {
    require_undirected(g)?;
    let mut matched = vec![false; g.node_bound()];
    let mut out = Matching::new();
    for (e, u, v) in g.edge_list() {
        if u == v || matched[u.index()] || matched[v.index()] {
            continue;
        }
        matched[u.index()] = true;
        matched[v.index()] = true;
        out.insert(e);
    }
    Ok(out)
}

pub fn is_valid_matching<N, E>(g: &Graph<N, E>, m: &Matching) -> bool {
    let mut matched = vec![false; g.node_bound()];
    for &e in m {
        let Ok((u, v)) = g.edge_endpoints(e) else {
            return false;
        };
        if u == v || matched[u.index()] || matched[v.index()] {
            return false;
        }
        matched[u.index()] = true;
        matched[v.index()] = true;
    }
    true
}

/// Valid, and no live edge joins two unmatched nodes.
pub fn is_maximal_matching<N, E>(g: &Graph<N, E>, m: &Matching) -> bool {
    if !is_valid_matching(g, m) {
        return false;
    }
    let mut matched = vec![false; g.node_bound()];
    for &e in m {
        let (u, v) = g.edge_endpoints(e).expect("validated");
        matched[u.index()] = true;
        matched[v.index()] = true;
    }
    g.edge_list()
        .all(|(_, u, v)| u == v || matched[u.index()] || matched[v.index()])
}

/// Maximum-cardinality matching by exhaustive search.
///
/// Among all maximum matchings the one whose sorted edge indices are
/// lexicographically smallest is returned. Limited to
/// [`EXACT_MATCHING_NODE_LIMIT`] nodes.
pub fn max_matching_exact<N, E>(g: &Graph<N, E>) -> Result<Matching> {
    require_undirected(g)?;
    if g.node_count() > EXACT_MATCHING_NODE_LIMIT {
        return Err(GraphError::SizeLimit {
            nodes: g.node_count(),
            limit: EXACT_MATCHING_NODE_LIMIT,
        });
    }
    let mut bit = vec![0u32; g.node_bound()];
    for (i, n) in g.node_indices().enumerate() {
        bit[n.index()] = 1 << i;
    }
    let edges: Vec<(EdgeIndex, u32, u32)> = g
        .edge_list()
        .filter(|(_, u, v)| u != v)
        .map(|(e, u, v)| (e, bit[u.index()], bit[v.index()]))
        .collect();

    let target = MaxMatcher::new(g.node_count(), &edges).solve(0);
    let mut chosen = Matching::new();
    let mut used = 0u32;
    for (i, &(e, u, v)) in edges.iter().enumerate() {
        if chosen.len() == target {
            break;
        }
        if used & (u | v) != 0 {
            continue;
        }
        let rest = MaxMatcher::new(g.node_count(), &edges[i + 1..]).solve(used | u | v);
        if chosen.len() + 1 + rest == target {
            chosen.insert(e);
            used |= u | v;
        }
    }
    Ok(chosen)
}

// Memoised maximum matching size over a fixed edge subset, keyed by the
// set of nodes already used.
struct MaxMatcher {
    nodes: usize,
    adjacent: Vec<u32>,
    memo: HashMap<u32, usize>,
}

impl MaxMatcher {
    fn new(nodes: usize, edges: &[(EdgeIndex, u32, u32)]) -> Self {
        let mut adjacent = vec![0u32; nodes];
        for &(_, u, v) in edges {
            adjacent[u.trailing_zeros() as usize] |= v;
            adjacent[v.trailing_zeros() as usize] |= u;
        }
        MaxMatcher {
            nodes,
            adjacent,
            memo: HashMap::new(),
        }
    }

    fn solve(&mut self, used: u32) -> usize {
        let free = (0..self.nodes).find(|&i| used & (1 << i) == 0 && self.adjacent[i] & !used != 0);
        let Some(v) = free else {
            return 0;
        };
        if let Some(&hit) = self.memo.get(&used) {
            return hit;
        }
        let with_v = used | (1 << v);
        let mut best = self.solve(with_v);
        let mut partners = self.adjacent[v] & !used;
        while partners != 0 {
            let u = partners.trailing_zeros();
            partners &= partners - 1;
            best = best.max(1 + self.solve(with_v | (1 << u)));
        }
        self.memo.insert(used, best);
        best
    }
}
