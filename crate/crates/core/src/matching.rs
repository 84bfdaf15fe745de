//! Maximum cardinality matching in general graphs (Edmonds' blossom
//! algorithm) and the predicates built on it.

use std::collections::VecDeque;

use crate::graph::Graph;

/// A set of pairwise vertex-disjoint edges of `host`.
#[derive(Debug, Clone)]
pub struct Matching<'g> {
    host: &'g Graph,
    mate: Vec<Option<usize>>,
}

impl<'g> Matching<'g> {
    pub fn host(&self) -> &'g Graph {
        self.host
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        self.mate[v]
    }

    /// Matched pairs `(u, v)` with `u < v`, ordered by `u`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| u < v).map(|v| (u, v)))
            .collect()
    }

    pub fn size(&self) -> usize {
        self.mate.iter().flatten().count() / 2
    }

    pub fn is_perfect(&self) -> bool {
        self.mate.iter().all(Option::is_some)
    }
}

/// Checks the matching invariants of `pairs` against `host` directly.
pub fn is_matching(host: &Graph, pairs: &[(usize, usize)]) -> bool {
    let mut used = vec![false; host.order()];
    pairs.iter().all(|&(u, v)| {
        let ok = host.has_edge(u, v) && !used[u] && !used[v];
        used[u] = true;
        used[v] = true;
        ok
    })
}

pub fn maximum_matching(g: &Graph) -> Matching<'_> {
    let mut state = Blossom::new(g);
    state.greedy();
    for root in 0..g.order() {
        if state.mate[root] == NONE {
            if let Some(end) = state.find_augmenting_path(root) {
                state.augment(end);
            }
        }
    }
    Matching {
        host: g,
        mate: state
            .mate
            .iter()
            .map(|&m| (m != NONE).then_some(m))
            .collect(),
    }
}

/// ν(g).
pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).size()
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    g.order().is_multiple_of(2) && 2 * matching_number(g) == g.order()
}

/// Every single-vertex deletion leaves a graph with a perfect matching.
pub fn is_factor_critical(g: &Graph) -> bool {
    g.order() % 2 == 1
        && (0..g.order()).all(|v| {
            let h = g.delete_vertex(v).expect("vertex in range");
            has_perfect_matching(&h)
        })
}

const NONE: usize = usize::MAX;

struct Blossom<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    /// Tree parent of an odd (outer-to-inner) vertex.
    parent: Vec<usize>,
    /// Base vertex of the blossom containing each vertex.
    base: Vec<usize>,
    in_queue: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'g> Blossom<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.order();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_queue: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn greedy(&mut self) {
        for (u, v) in self.g.edges() {
            if self.mate[u] == NONE && self.mate[v] == NONE {
                self.mate[u] = v;
                self.mate[v] = u;
            }
        }
    }

    /// BFS over alternating trees rooted at `root`, contracting blossoms as
    /// they close. Returns the free vertex at the end of an augmenting path.
    fn find_augmenting_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.order();
        self.parent.fill(NONE);
        self.in_queue.fill(false);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.queue.push_back(root);
        self.in_queue[root] = true;

        while let Some(v) = self.queue.pop_front() {
            for &w in self.g.neighbors(v) {
                if self.base[v] == self.base[w] || self.mate[v] == w {
                    continue;
                }
                let w_is_outer =
                    w == root || (self.mate[w] != NONE && self.parent[self.mate[w]] != NONE);
                if w_is_outer {
                    let lca = self.common_base(v, w);
                    let mut in_blossom = vec![false; n];
                    self.mark_blossom(v, lca, w, &mut in_blossom);
                    self.mark_blossom(w, lca, v, &mut in_blossom);
                    for u in 0..n {
                        if in_blossom[self.base[u]] {
                            self.base[u] = lca;
                            if !self.in_queue[u] {
                                self.in_queue[u] = true;
                                self.queue.push_back(u);
                            }
                        }
                    }
                } else if self.parent[w] == NONE {
                    self.parent[w] = v;
                    if self.mate[w] == NONE {
                        return Some(w);
                    }
                    let next = self.mate[w];
                    self.in_queue[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    /// Base of the lowest common ancestor of `a` and `b` in the alternating
    /// forest.
    fn common_base(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.order()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_blossom(
        &mut self,
        mut v: usize,
        lca: usize,
        mut child: usize,
        in_blossom: &mut [bool],
    ) {
        while self.base[v] != lca {
            in_blossom[self.base[v]] = true;
            in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        Graph::empty(n).complement()
    }

    fn star(k: usize) -> Graph {
        Graph::from_valid_edges(k + 1, (1..=k).map(|i| (0, i)))
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_valid_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    #[test]
    fn stars_and_edgeless() {
        assert_eq!(matching_number(&star(9)), 1);
        assert_eq!(matching_number(&Graph::empty(5)), 0);
        assert_eq!(matching_number(&Graph::empty(0)), 0);
    }

    #[test]
    fn odd_cycles_need_blossoms() {
        for n in 3..12 {
            assert_eq!(matching_number(&cycle(n)), n / 2, "C_{n}");
        }
        // Two triangles joined by a path: greedy picks the wrong edges first.
        let g = Graph::from_valid_edges(
            8,
            [
                (0, 1),
                (1, 2),
                (2, 0),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 5),
            ],
        );
        assert_eq!(matching_number(&g), 4);
    }

    #[test]
    fn matching_satisfies_invariants() {
        let g = complete(7);
        let m = maximum_matching(&g);
        assert_eq!(m.size(), 3);
        assert!(is_matching(&g, &m.pairs()));
        assert!(!m.is_perfect());
    }

    #[test]
    fn perfect_matching_predicate() {
        assert!(has_perfect_matching(&complete(2)));
        assert!(!has_perfect_matching(&star(3)));
        assert!(has_perfect_matching(&Graph::empty(0)));
    }

    #[test]
    fn factor_critical_predicate() {
        assert!(is_factor_critical(&complete(3)));
        assert!(!is_factor_critical(&star(4)));
        assert!(is_factor_critical(&cycle(7)));
        assert!(!is_factor_critical(&cycle(6)));
        let k5_minus = Graph::from_valid_edges(5, complete(5).edges().filter(|&e| e != (0, 1)));
        assert!(is_factor_critical(&k5_minus));
    }
}
