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

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sgraph::matching::{
    greedy_maximal_matching, is_maximal_matching, is_valid_matching, max_matching_exact,
};
use sgraph_testkit::{brute_force_matching_size, random_graph, random_multigraph};

#[test]
fn greedy_is_valid_and_maximal() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for _ in 0..300 {
        let size = rng.gen_range(0..=40);
        let param = rng.gen_range(0.0..0.3);
        let g = random_graph(&mut rng, false, size, param, true);
        let m = greedy_maximal_matching(&g).unwrap();
        assert!(is_valid_matching(&g, &m));
        assert!(is_maximal_matching(&g, &m));
        assert_eq!(greedy_maximal_matching(&g).unwrap(), m);
    }
}

#[test]
fn exact_matches_subset_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..200 {
        let size = rng.gen_range(0..=10);
        let param = rng.gen_range(0..=14);
        let g = random_multigraph(&mut rng, false, size, param);
        let exact = max_matching_exact(&g).unwrap();
        assert!(is_valid_matching(&g, &exact));
        assert_eq!(exact.len(), brute_force_matching_size(&g));
    }
}

#[test]
fn greedy_reaches_half_of_maximum() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for _ in 0..300 {
        let size = rng.gen_range(0..=14);
        let param = rng.gen_range(0.05..0.5);
        let g = random_graph(&mut rng, false, size, param, false);
        let greedy = greedy_maximal_matching(&g).unwrap().len();
        let best = max_matching_exact(&g).unwrap().len();
        assert!(greedy <= best);
        assert!(greedy >= best.div_ceil(2));
    }
}
