//! Isomorph-free generation of connected graphs by canonical augmentation.
//!
//! Every connected graph on `n + 1 >= 2` vertices has a non-cut vertex whose
//! deletion leaves a connected graph. The canonical deletion is the non-cut
//! vertex with the smallest invariant key, ties broken by the largest
//! canonical position. A child produced by adding vertex `x` to parent `P`
//! is accepted only when deleting its canonical vertex yields a graph
//! isomorphic to `P`; accepted children of one parent are deduplicated by
//! canonical form. Each isomorphism class therefore has exactly one parent
//! class, the generation forest is a tree, and subtrees can be explored
//! independently.
//!
//! The degree cap is enforced while choosing neighbor sets. With the planar
//! filter on, `euler_reject` screens candidates cheaply and accepted children
//! are tested exactly; non-planar graphs are never extended since planarity
//! is inherited by induced subgraphs.

use std::collections::HashSet;

use crate::canon::{canonical_form, canonical_labeling, CanonicalForm};
use crate::graph::Graph;
use crate::planarity::{euler_reject, planar};

use super::OracleError;

/// Largest order the enumerator agrees to reach.
pub const MAX_ENUMERATION_ORDER: usize = 10;

/// A graph in the generation tree together with its canonical form.
#[derive(Debug, Clone)]
pub struct Node {
    pub graph: Graph,
    pub form: CanonicalForm,
}

/// Which connected graphs to generate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationSpec {
    n_max: usize,
    deg_max: usize,
    planar_only: bool,
}

impl EnumerationSpec {
    pub fn new(n_max: usize, deg_max: usize, planar_only: bool) -> Result<Self, OracleError> {
        if n_max > MAX_ENUMERATION_ORDER {
            return Err(OracleError::BudgetExceeded {
                n_max,
                limit: MAX_ENUMERATION_ORDER,
            });
        }
        Ok(EnumerationSpec {
            n_max,
            deg_max,
            planar_only,
        })
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn deg_max(&self) -> usize {
        self.deg_max
    }

    pub fn planar_only(&self) -> bool {
        self.planar_only
    }

    /// K1, the root of the tree (absent when `n_max` is 0).
    pub fn root(&self) -> Option<Node> {
        (self.n_max >= 1).then(|| {
            let graph = Graph::empty(1);
            let form = canonical_form(&graph);
            Node { graph, form }
        })
    }

    /// Accepted one-vertex extensions of `parent`, sorted by canonical form.
    pub fn children(&self, parent: &Node) -> Vec<Node> {
        let p = &parent.graph;
        let n = p.order();
        if n >= self.n_max {
            return Vec::new();
        }
        let eligible: Vec<usize> = (0..n).filter(|&v| p.degree(v) < self.deg_max).collect();
        let mut seen: HashSet<CanonicalForm> = HashSet::new();
        let mut out = Vec::new();
        let mut neighbors = Vec::with_capacity(eligible.len());
        for mask in 1u32..(1 << eligible.len()) {
            if mask.count_ones() as usize > self.deg_max {
                continue;
            }
            neighbors.clear();
            neighbors.extend(
                eligible
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &v)| v),
            );
            let child = p.with_new_vertex(&neighbors);
            if self.planar_only && euler_reject(&child) {
                continue;
            }
            let Some(form) = accept(&child, n, &parent.form) else {
                continue;
            };
            if self.planar_only && !planar(&child) {
                continue;
            }
            if seen.insert(form.clone()) {
                out.push(Node { graph: child, form });
            }
        }
        out.sort_by(|a, b| a.form.cmp(&b.form));
        out
    }

    /// Preorder walk of the subtree rooted at `node`, `node` included.
    pub fn visit_subtree<F: FnMut(&Node)>(&self, node: &Node, visit: &mut F) {
        visit(node);
        for child in self.children(node) {
            self.visit_subtree(&child, visit);
        }
    }

    /// Splits the tree at order `split`: nodes of smaller order are returned
    /// in `above`, nodes of order exactly `split` are the subtree `roots`.
    /// Both lists are in deterministic (preorder, form-sorted) order.
    pub fn shards(&self, split: usize) -> Shards {
        let mut shards = Shards::default();
        if let Some(root) = self.root() {
            self.collect_shards(root, split.max(1), &mut shards);
        }
        shards
    }

    fn collect_shards(&self, node: Node, split: usize, shards: &mut Shards) {
        if node.graph.order() == split {
            shards.roots.push(node);
            return;
        }
        let children = self.children(&node);
        shards.above.push(node);
        for child in children {
            self.collect_shards(child, split, shards);
        }
    }

    /// Every generated graph, in preorder.
    pub fn collect(&self) -> Vec<Node> {
        let mut out = Vec::new();
        if let Some(root) = self.root() {
            self.visit_subtree(&root, &mut |node| out.push(node.clone()));
        }
        out
    }
}

#[derive(Debug, Default)]
pub struct Shards {
    pub above: Vec<Node>,
    pub roots: Vec<Node>,
}

/// One representative per isomorphism class of connected graphs with at most
/// `n_max` vertices, maximum degree at most `deg_max`, and (if requested)
/// planar. Includes K1.
pub fn enumerate_connected(
    n_max: usize,
    deg_max: usize,
    planar_only: bool,
) -> Result<Vec<Graph>, OracleError> {
    let spec = EnumerationSpec::new(n_max, deg_max, planar_only)?;
    Ok(spec.collect().into_iter().map(|node| node.graph).collect())
}

/// Vertex invariant used to pick the canonical deletion: degree, then the
/// sorted neighbor degrees.
fn deletion_key(g: &Graph, v: usize) -> (usize, Vec<usize>) {
    let mut nbr: Vec<usize> = g.neighbors(v).iter().map(|&u| g.degree(u)).collect();
    nbr.sort_unstable();
    (g.degree(v), nbr)
}

/// Canonical-deletion test for `child`, whose newest vertex is `added`.
/// Returns the child's canonical form when it is accepted.
fn accept(child: &Graph, added: usize, parent_form: &CanonicalForm) -> Option<CanonicalForm> {
    let cut = child.cut_vertices();
    let added_key = deletion_key(child, added);
    let mut candidates = Vec::new();
    for v in (0..child.order()).filter(|&v| !cut[v]) {
        let key = deletion_key(child, v);
        match key.cmp(&added_key) {
            std::cmp::Ordering::Less => return None,
            std::cmp::Ordering::Equal => candidates.push(v),
            std::cmp::Ordering::Greater => {}
        }
    }
    let labeling = canonical_labeling(child);
    if candidates.len() == 1 {
        return Some(labeling.form);
    }
    let pos = labeling.positions();
    let chosen = *candidates.iter().max_by_key(|&&v| pos[v]).unwrap();
    if chosen == added {
        return Some(labeling.form);
    }
    let reduced = child.delete_vertex(chosen).expect("vertex in range");
    (canonical_form(&reduced) == *parent_form).then_some(labeling.form)
}
