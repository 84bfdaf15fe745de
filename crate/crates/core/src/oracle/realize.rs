//! Backtracking search for a planar realization of a degree sequence.
//!
//! The vertex with the largest remaining degree is saturated next. Untouched
//! vertices with equal target degree are interchangeable, so among them only
//! a prefix is ever chosen. After each vertex is saturated the partial graph
//! must stay planar and every unsaturated vertex must still have enough
//! admissible partners.

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::time::{Duration, Instant};

use crate::graph::{DegreeSequence, Graph};
use crate::planarity::{euler_reject, planar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Realization {
    Found(Graph),
    /// The whole search space was explored: no planar realization exists.
    Exhausted,
    TimedOut,
}

/// Erdős–Gallai test on a non-increasing sequence with even sum.
pub fn is_graphical(seq: &DegreeSequence) -> bool {
    let d = seq.entries();
    let n = d.len();
    let mut prefix = 0;
    for k in 1..=n {
        prefix += d[k - 1];
        let tail: usize = d[k..].iter().map(|&x| x.min(k)).sum();
        if prefix > k * (k - 1) + tail {
            return false;
        }
    }
    true
}

pub fn realize_degree_sequence_planar(seq: &DegreeSequence, budget: Duration) -> Realization {
    if !is_graphical(seq) {
        return Realization::Exhausted;
    }
    let target = seq.entries().to_vec();
    let n = target.len();
    let mut search = Search {
        n,
        target: target.clone(),
        rem: target,
        adj: vec![vec![false; n]; n],
        edges: Vec::new(),
        deadline: Instant::now() + budget,
    };
    match search.run() {
        Step::Found(g) => Realization::Found(g),
        Step::Exhausted => Realization::Exhausted,
        Step::TimedOut => Realization::TimedOut,
    }
}

enum Step {
    Found(Graph),
    Exhausted,
    TimedOut,
}

struct Search {
    n: usize,
    target: Vec<usize>,
    rem: Vec<usize>,
    adj: Vec<Vec<bool>>,
    edges: Vec<(usize, usize)>,
    deadline: Instant,
}

impl Search {
    fn graph(&self) -> Graph {
        Graph::from_valid_edges(self.n, self.edges.iter().copied())
    }

    fn run(&mut self) -> Step {
        if Instant::now() >= self.deadline {
            return Step::TimedOut;
        }
        let Some(v) = (0..self.n)
            .filter(|&v| self.rem[v] > 0)
            .max_by_key(|&v| (self.rem[v], std::cmp::Reverse(v)))
        else {
            let g = self.graph();
            return if planar(&g) {
                Step::Found(g)
            } else {
                Step::Exhausted
            };
        };
        let candidates: Vec<usize> = (0..self.n)
            .filter(|&u| u != v && self.rem[u] > 0 && !self.adj[v][u])
            .collect();
        if candidates.len() < self.rem[v] {
            return Step::Exhausted;
        }
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut untouched: HashMap<usize, usize> = HashMap::new();
        for &u in &candidates {
            if self.rem[u] == self.target[u] {
                match untouched.entry(self.target[u]) {
                    Entry::Occupied(e) => classes[*e.get()].push(u),
                    Entry::Vacant(e) => {
                        e.insert(classes.len());
                        classes.push(vec![u]);
                    }
                }
            } else {
                classes.push(vec![u]);
            }
        }
        let mut chosen = Vec::new();
        self.assign(v, &classes, 0, self.rem[v], &mut chosen)
    }

    fn assign(
        &mut self,
        v: usize,
        classes: &[Vec<usize>],
        ci: usize,
        need: usize,
        chosen: &mut Vec<usize>,
    ) -> Step {
        if need == 0 {
            return self.apply(v, chosen);
        }
        let available: usize = classes[ci..].iter().map(Vec::len).sum();
        if available < need {
            return Step::Exhausted;
        }
        let class = &classes[ci];
        for take in (0..=need.min(class.len())).rev() {
            chosen.extend_from_slice(&class[..take]);
            let step = self.assign(v, classes, ci + 1, need - take, chosen);
            chosen.truncate(chosen.len() - take);
            if !matches!(step, Step::Exhausted) {
                return step;
            }
        }
        Step::Exhausted
    }

    fn apply(&mut self, v: usize, chosen: &[usize]) -> Step {
        for &u in chosen {
            self.adj[v][u] = true;
            self.adj[u][v] = true;
            self.rem[u] -= 1;
            self.edges.push((v.min(u), v.max(u)));
        }
        let saved = self.rem[v];
        self.rem[v] = 0;
        let step = if self.feasible() {
            self.run()
        } else {
            Step::Exhausted
        };
        self.rem[v] = saved;
        for &u in chosen {
            self.adj[v][u] = false;
            self.adj[u][v] = false;
            self.rem[u] += 1;
            self.edges.pop();
        }
        step
    }

    fn feasible(&self) -> bool {
        for u in (0..self.n).filter(|&u| self.rem[u] > 0) {
            let partners = (0..self.n)
                .filter(|&w| w != u && self.rem[w] > 0 && !self.adj[u][w])
                .count();
            if partners < self.rem[u] {
                return false;
            }
        }
        let g = self.graph();
        !euler_reject(&g) && planar(&g)
    }
}
