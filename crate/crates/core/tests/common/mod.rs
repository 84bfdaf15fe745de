#![allow(dead_code)]

use edgebound::graph::Graph;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

/// Graphs on `0..=max_n` vertices, each pair present with probability 1/2.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges = all_pairs(n)
                .into_iter()
                .zip(bits)
                .filter(|&(_, keep)| keep)
                .map(|(e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// Graphs with at most `max_edges` edges on at most `max_n` vertices.
pub fn arb_sparse_graph(max_n: usize, max_edges: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec((0..n, 0..n), 0..=max_edges).prop_map(move |pairs| {
            Graph::from_edges(n, pairs.into_iter().filter(|(u, v)| u != v)).unwrap()
        })
    })
}

pub fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    Graph::from_edges(n, all_pairs(n).into_iter().filter(|_| rng.gen_bool(p))).unwrap()
}

/// Random graph with exactly `m` distinct edges (capped by the number of
/// pairs).
pub fn random_graph_with_edges<R: Rng>(rng: &mut R, n: usize, m: usize) -> Graph {
    let mut pairs = all_pairs(n);
    pairs.shuffle(rng);
    pairs.truncate(m);
    Graph::from_edges(n, pairs).unwrap()
}

/// Maximal planar subgraph grown greedily from a random edge order, using
/// the planarity test under examination only as a generator.
pub fn random_planar_graph<R: Rng>(rng: &mut R, n: usize, keep: f64) -> Graph {
    let mut pairs = all_pairs(n);
    pairs.shuffle(rng);
    let mut edges = Vec::new();
    for e in pairs {
        if !rng.gen_bool(keep) {
            continue;
        }
        edges.push(e);
        let g = Graph::from_edges(n, edges.iter().copied()).unwrap();
        if !edgebound::planarity::planar(&g) {
            edges.pop();
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Maximum matching size by trying every edge subset.
pub fn brute_force_matching_number(g: &Graph) -> usize {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    assert!(edges.len() <= 20, "subset oracle is exponential");
    let mut best = 0;
    for mask in 0u32..(1 << edges.len()) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let mut used = vec![false; g.order()];
        let ok = edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask & (1 << i) != 0)
            .all(|(_, &(u, v))| {
                !std::mem::replace(&mut used[u], true) && !std::mem::replace(&mut used[v], true)
            });
        if ok {
            best = size;
        }
    }
    best
}
