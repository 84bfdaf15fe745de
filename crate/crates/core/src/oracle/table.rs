//! Best component per matching number, and the knapsack that recombines them.

use std::collections::BTreeMap;

use crate::canon::{canonical_form, CanonicalForm};
use crate::constructions::{atlas, k_prime, star, AtlasName};
use crate::graph::Graph;
use crate::matching::matching_number;
use crate::planarity::planar;

/// Best connected component found for one matching number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentRecord {
    pub mu: usize,
    pub best_edges: usize,
    pub witness: Graph,
    pub exhaustive: bool,
}

/// Whether every component with matching number `mu` that can be extremal
/// was enumerated: factor-critical components have `2mu+1` vertices, and the
/// only other candidates for `mu = 1` are stars, which are added analytically.
pub fn is_exhaustive(mu: usize, n_max: usize) -> bool {
    mu == 1 || 2 * mu < n_max
}

/// Counting cap for a component with `2mu+1` vertices and Δ < d:
/// `min(3n-6, ⌊(d-1)n/2⌋)`.
pub fn component_cap(d: usize, mu: usize) -> usize {
    let n = 2 * mu + 1;
    (3 * n - 6).min(d.saturating_sub(1) * n / 2)
}

/// Per-mu maxima. Ties on edge count go to the smaller canonical form, so the
/// result does not depend on the order graphs are offered in.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub(crate) struct Accumulator {
    best: BTreeMap<usize, (usize, CanonicalForm)>,
}

impl Accumulator {
    pub(crate) fn offer(&mut self, mu: usize, edges: usize, form: &CanonicalForm) {
        if mu == 0 {
            return;
        }
        match self.best.get(&mu) {
            Some((e, f)) if (*e, std::cmp::Reverse(f)) >= (edges, std::cmp::Reverse(form)) => {}
            _ => {
                self.best.insert(mu, (edges, form.clone()));
            }
        }
    }

    pub(crate) fn offer_graph(&mut self, g: &Graph, form: &CanonicalForm) {
        self.offer(matching_number(g), g.edge_count(), form);
    }

    pub(crate) fn merge(&mut self, other: &Accumulator) {
        for (&mu, (edges, form)) in &other.best {
            self.offer(mu, *edges, form);
        }
    }

    /// `(mu, edges, canonical form)` triples in ascending `mu`.
    pub(crate) fn entries(&self) -> impl Iterator<Item = (usize, usize, &CanonicalForm)> {
        self.best
            .iter()
            .map(|(&mu, (edges, form))| (mu, *edges, form))
    }

    pub(crate) fn records(&self, n_max: usize) -> Vec<ComponentRecord> {
        self.best
            .iter()
            .map(|(&mu, (edges, form))| ComponentRecord {
                mu,
                best_edges: *edges,
                witness: form.to_graph(),
                exhaustive: is_exhaustive(mu, n_max),
            })
            .collect()
    }
}

/// Components known in closed form that may lie beyond the enumeration: the
/// star `K_{1,d-1}`, `K'_4`, and the atlas graphs. Only those with Δ < d are
/// returned; each is checked to be connected and planar.
pub(crate) fn seed_components(d: usize) -> Vec<Graph> {
    if d < 2 {
        return Vec::new();
    }
    let mut seeds = vec![star(d - 1), k_prime(4)];
    seeds.extend(AtlasName::ALL.into_iter().map(atlas));
    seeds.retain(|g| g.max_degree() < d);
    for g in &seeds {
        assert!(
            g.is_connected() && planar(g),
            "seed component must be connected and planar"
        );
    }
    seeds
}

pub(crate) fn seed(acc: &mut Accumulator, d: usize) {
    for g in seed_components(d) {
        acc.offer_graph(&g, &canonical_form(&g));
    }
}

/// The component table for degree bound `d` (components have Δ < d) built
/// from graphs of at most `n_max` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentTable {
    pub d: usize,
    pub n_max: usize,
    pub records: Vec<ComponentRecord>,
}

impl ComponentTable {
    pub fn record(&self, mu: usize) -> Option<&ComponentRecord> {
        self.records.iter().find(|r| r.mu == mu)
    }

    /// Lower bound: best disjoint union of recorded components with total
    /// matching number at most `nu - 1`.
    pub fn combine(&self, nu: usize) -> usize {
        combine(&self.records, nu)
    }

    /// Records (with repetition) of one optimal union for `combine(nu)`,
    /// using exhaustive records only whenever they reach the same value.
    pub fn combine_witness(&self, nu: usize) -> Vec<&ComponentRecord> {
        let budget = nu.saturating_sub(1);
        let items: Vec<(usize, usize)> =
            self.records.iter().map(|r| (r.mu, r.best_edges)).collect();
        let exhaustive_items: Vec<(usize, usize)> = self
            .records
            .iter()
            .map(|r| {
                if r.exhaustive {
                    (r.mu, r.best_edges)
                } else {
                    (0, 0)
                }
            })
            .collect();
        let all = knapsack(&items, budget);
        let exhaustive = knapsack(&exhaustive_items, budget);
        let picked = if exhaustive.0 == all.0 {
            exhaustive.1
        } else {
            all.1
        };
        picked.into_iter().map(|i| &self.records[i]).collect()
    }

    /// Best union of exhaustive records only.
    pub fn combine_exhaustive(&self, nu: usize) -> usize {
        let exhaustive: Vec<ComponentRecord> = self
            .records
            .iter()
            .filter(|r| r.exhaustive)
            .cloned()
            .collect();
        combine(&exhaustive, nu)
    }

    /// The disjoint union realizing `combine(nu)`.
    pub fn realization(&self, nu: usize) -> Graph {
        let parts = self.combine_witness(nu);
        Graph::union_all(parts.iter().map(|r| &r.witness))
    }

    /// Upper bound on the edge count of any graph in the class, taking the
    /// recorded value for exhaustive matching numbers and the counting cap
    /// for the rest.
    pub fn upper_combine(&self, nu: usize) -> usize {
        let budget = nu.saturating_sub(1);
        let items: Vec<(usize, usize)> = (1..=budget)
            .map(|mu| {
                let best = self.record(mu).map_or(0, |r| r.best_edges);
                if is_exhaustive(mu, self.n_max) {
                    (mu, best)
                } else {
                    (mu, best.max(component_cap(self.d, mu)))
                }
            })
            .collect();
        knapsack(&items, budget).0
    }
}

/// Unbounded knapsack: maximum total `best_edges` over multisets of records
/// whose matching numbers sum to at most `nu - 1`.
pub fn combine(table: &[ComponentRecord], nu: usize) -> usize {
    let items: Vec<(usize, usize)> = table.iter().map(|r| (r.mu, r.best_edges)).collect();
    knapsack(&items, nu.saturating_sub(1)).0
}

/// Items are `(weight, value)` with positive weights. Returns the best value
/// for capacity `budget` and the chosen item indices (ascending).
fn knapsack(items: &[(usize, usize)], budget: usize) -> (usize, Vec<usize>) {
    let mut value = vec![0usize; budget + 1];
    let mut choice: Vec<Option<usize>> = vec![None; budget + 1];
    for b in 1..=budget {
        value[b] = value[b - 1];
        choice[b] = None;
        for (i, &(w, v)) in items.iter().enumerate() {
            if w == 0 || w > b {
                continue;
            }
            if value[b - w] + v > value[b] {
                value[b] = value[b - w] + v;
                choice[b] = Some(i);
            }
        }
    }
    let mut picked = Vec::new();
    let mut b = budget;
    while b > 0 {
        match choice[b] {
            Some(i) => {
                picked.push(i);
                b -= items[i].0;
            }
            None => b -= 1,
        }
    }
    picked.sort_unstable();
    (value[budget], picked)
}
