//! Canonical labeling of small graphs by partition refinement and
//! individualization.
//!
//! The search explores the tree of individualize-then-refine steps and keeps
//! the labeling whose packed adjacency matrix is lexicographically largest.
//! Subtrees that are images of an already explored sibling under a known
//! automorphism (a twin transposition or one discovered at a leaf) are
//! skipped. Refinement and target-cell choice are label-invariant, which is
//! what makes the result depend only on the isomorphism class.

use std::fmt;

use crate::graph::Graph;

/// Isomorphism-invariant byte string: two graphs get equal forms iff they are
/// isomorphic. Ordering is plain lexicographic byte order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(text: &str) -> Option<Self> {
        let text = text.trim();
        if !text.len().is_multiple_of(2) {
            return None;
        }
        (0..text.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(text.get(i..i + 2)?, 16).ok())
            .collect::<Option<Vec<u8>>>()
            .map(CanonicalForm)
    }

    /// Rebuilds the canonical representative this form encodes.
    pub fn to_graph(&self) -> Graph {
        let n = u16::from_be_bytes([self.0[0], self.0[1]]) as usize;
        let bits = &self.0[2..];
        let mut edges = Vec::new();
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if bits[k / 8] & (0x80 >> (k % 8)) != 0 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::from_valid_edges(n, edges)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

/// A canonical labeling: `order[i]` is the vertex placed at canonical
/// position `i`.
#[derive(Debug, Clone)]
pub struct Labeling {
    pub order: Vec<usize>,
    pub form: CanonicalForm,
}

impl Labeling {
    /// Canonical position of every vertex (inverse of `order`).
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).form
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    let n = g.order();
    assert!(
        n <= u16::MAX as usize,
        "graph too large for a canonical form"
    );
    let mut search = Search {
        g,
        best: None,
        generators: Vec::new(),
    };
    let mut cells = vec![(0..n).collect::<Vec<_>>()];
    refine(g, &mut cells);
    let mut prefix = Vec::new();
    search.descend(cells, &mut prefix);
    let (cert, order) = search
        .best
        .unwrap_or_else(|| (certificate(g, &[]), Vec::new()));
    Labeling {
        order,
        form: CanonicalForm(cert),
    }
}

struct Search<'g> {
    g: &'g Graph,
    best: Option<(Vec<u8>, Vec<usize>)>,
    /// Automorphisms found at leaves, as vertex maps.
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.into_iter().flatten().collect();
            self.leaf(order);
            return;
        };
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if explored.iter().any(|&u| self.equivalent(u, v, prefix)) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(cells[target].iter().copied().filter(|&u| u != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            refine(self.g, &mut child);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let cert = certificate(self.g, &order);
        match &self.best {
            Some((best, _)) if cert < *best => {}
            Some((best, best_order)) if cert == *best => {
                let mut gamma = vec![0; order.len()];
                for (&a, &b) in best_order.iter().zip(&order) {
                    gamma[a] = b;
                }
                if gamma.iter().enumerate().any(|(i, &x)| i != x) {
                    self.generators.push(gamma);
                }
            }
            _ => self.best = Some((cert, order)),
        }
    }

    /// True when some known automorphism fixing `prefix` pointwise maps `u`
    /// to `v`.
    fn equivalent(&self, u: usize, v: usize, prefix: &[usize]) -> bool {
        if are_twins(self.g, u, v) {
            return true;
        }
        let usable: Vec<&Vec<usize>> = self
            .generators
            .iter()
            .filter(|gamma| prefix.iter().all(|&p| gamma[p] == p))
            .collect();
        if usable.is_empty() {
            return false;
        }
        let mut parent: Vec<usize> = (0..self.g.order()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for gamma in usable {
            for (a, &b) in gamma.iter().enumerate() {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                }
            }
        }
        find(&mut parent, u) == find(&mut parent, v)
    }
}

/// `u` and `v` have the same neighbors apart from each other, so swapping
/// them is an automorphism.
fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    let a = g.neighbors(u).iter().filter(|&&x| x != v);
    let b = g.neighbors(v).iter().filter(|&&x| x != u);
    a.eq(b)
}

/// Splits cells by neighbor counts into every other cell until the partition
/// is equitable. New sub-cells are ordered by their count signature.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    let n = g.order();
    let mut cell_of = vec![0; n];
    loop {
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let k = cells.len();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(k);
        let mut changed = false;
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u16>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut counts = vec![0u16; k];
                    for &u in g.neighbors(v) {
                        counts[cell_of[u]] += 1;
                    }
                    (counts, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            let before = next.len();
            while start < keyed.len() {
                let end = start
                    + keyed[start..]
                        .iter()
                        .take_while(|(sig, _)| *sig == keyed[start].0)
                        .count();
                next.push(keyed[start..end].iter().map(|&(_, v)| v).collect());
                start = end;
            }
            if next.len() - before > 1 {
                changed = true;
            }
        }
        *cells = next;
        if !changed {
            return;
        }
    }
}

/// Vertex count followed by the upper triangle (row-major, `i < j`) of the
/// adjacency matrix relabeled by `order`, packed MSB first.
fn certificate(g: &Graph, order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(2 + bits.div_ceil(8));
    out.extend_from_slice(&(n as u16).to_be_bytes());
    out.resize(2 + bits.div_ceil(8), 0);
    for (u, v) in g.edges() {
        let (i, j) = if pos[u] < pos[v] {
            (pos[u], pos[v])
        } else {
            (pos[v], pos[u])
        };
        // Index of (i, j) in row-major upper-triangle order.
        let k = i * (2 * n - i - 1) / 2 + (j - i - 1);
        out[2 + k / 8] |= 0x80 >> (k % 8);
    }
    out
}
