//! Simple undirected graphs on vertices `0..n`.
//!
//! A [`Graph`] is an immutable value: every operation returns a new graph.
//! Adjacency lists are kept sorted and duplicate-free, so two graphs compare
//! equal exactly when they have the same labeled edge set.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("degree sequence {0:?} has an odd sum")]
    OddDegreeSum(Vec<usize>),
    #[error("cannot parse degree sequence token {0:?}")]
    BadDegreeToken(String),
}

/// A simple undirected graph stored as sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Repeated pairs (in either
    /// orientation) collapse to a single edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    /// Like [`Graph::from_edges`] for edge lists known to be valid.
    ///
    /// Panics on out-of-range labels or self-loops.
    pub(crate) fn from_valid_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::from_edges(n, edges).expect("edge list must be valid")
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Maximum degree together with the non-increasing degree sequence.
    pub fn degree_stats(&self) -> (usize, DegreeSequence) {
        let seq = DegreeSequence::from_degrees(self.adj.iter().map(Vec::len).collect());
        (seq.max(), seq)
    }

    /// `self + other`: the labels of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|list| list.iter().map(|&v| v + shift).collect()),
        );
        Graph { adj }
    }

    /// Disjoint union of every graph in `parts`, in order.
    pub fn union_all<'a, I>(parts: I) -> Graph
    where
        I: IntoIterator<Item = &'a Graph>,
    {
        parts
            .into_iter()
            .fold(Graph::empty(0), |acc, g| acc.disjoint_union(g))
    }

    /// `copies` disjoint copies of `self`.
    pub fn repeat(&self, copies: usize) -> Graph {
        Graph::union_all(std::iter::repeat_n(self, copies))
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u && !self.has_edge(u, v)).collect())
            .collect();
        Graph { adj }
    }

    /// Removes `v` and its edges; the remaining labels keep their relative
    /// order and are compacted to `0..n-1`.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        if v >= self.order() {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            });
        }
        let keep: Vec<usize> = (0..self.order()).filter(|&u| u != v).collect();
        Ok(self.induced_subgraph(&keep))
    }

    /// The subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut local = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut list: Vec<usize> = self.adj[v]
                    .iter()
                    .filter_map(|&u| (local[u] != usize::MAX).then_some(local[u]))
                    .collect();
                list.sort_unstable();
                list
            })
            .collect();
        Graph { adj }
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order(), "permutation length mismatch");
        let mut adj = vec![Vec::new(); self.order()];
        for (v, list) in self.adj.iter().enumerate() {
            let mut mapped: Vec<usize> = list.iter().map(|&u| perm[u]).collect();
            mapped.sort_unstable();
            adj[perm[v]] = mapped;
        }
        Graph { adj }
    }

    /// Adds one new vertex adjacent to every existing vertex.
    pub fn with_apex(&self) -> Graph {
        let n = self.order();
        let mut adj: Vec<Vec<usize>> = self
            .adj
            .iter()
            .map(|list| {
                let mut l = list.clone();
                l.push(n);
                l
            })
            .collect();
        adj.push((0..n).collect());
        Graph { adj }
    }

    /// Adds a new vertex `n` adjacent to each vertex of `neighbors` (sorted,
    /// distinct, in range).
    pub(crate) fn with_new_vertex(&self, neighbors: &[usize]) -> Graph {
        let n = self.order();
        let mut adj = self.adj.clone();
        for &u in neighbors {
            adj[u].push(n);
        }
        adj.push(neighbors.to_vec());
        Graph { adj }
    }

    /// Component index of every vertex, numbered by smallest member.
    pub fn component_labels(&self) -> (usize, Vec<usize>) {
        let n = self.order();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for &u in &self.adj[v] {
                    if label[u] == usize::MAX {
                        label[u] = count;
                        queue.push_back(u);
                    }
                }
            }
            count += 1;
        }
        (count, label)
    }

    pub fn is_connected(&self) -> bool {
        self.component_labels().0 <= 1
    }

    /// Connected components as induced subgraphs, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Component> {
        let (count, label) = self.component_labels();
        let mut members = vec![Vec::new(); count];
        for (v, &c) in label.iter().enumerate() {
            members[c].push(v);
        }
        members
            .into_iter()
            .map(|vertices| Component {
                graph: self.induced_subgraph(&vertices),
                vertices,
            })
            .collect()
    }

    /// Vertices whose removal disconnects their component.
    pub fn cut_vertices(&self) -> Vec<bool> {
        let n = self.order();
        let mut is_cut = vec![false; n];
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut time = 0;
        // Iterative DFS: (vertex, parent, next neighbor index).
        let mut stack: Vec<(usize, usize, usize)> = Vec::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            let mut root_children = 0;
            stack.push((root, usize::MAX, 0));
            while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
                if let Some(&u) = self.adj[v].get(*idx) {
                    *idx += 1;
                    if disc[u] == usize::MAX {
                        disc[u] = time;
                        low[u] = time;
                        time += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((u, v, 0));
                    } else if u != parent {
                        low[v] = low[v].min(disc[u]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[v]);
                        if parent != root && low[v] >= disc[parent] {
                            is_cut[parent] = true;
                        }
                    }
                }
            }
            if root_children > 1 {
                is_cut[root] = true;
            }
        }
        is_cut
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// A connected component: its induced graph plus the original label of each
/// local vertex (`vertices[i]` is local vertex `i`).
#[derive(Debug, Clone)]
pub struct Component {
    pub graph: Graph,
    pub vertices: Vec<usize>,
}

/// A non-increasing sequence of vertex degrees with an even sum.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    /// Sorts `entries` into non-increasing order; rejects an odd total.
    pub fn new(mut entries: Vec<usize>) -> Result<Self, GraphError> {
        if entries.iter().sum::<usize>() % 2 == 1 {
            return Err(GraphError::OddDegreeSum(entries));
        }
        entries.sort_unstable_by(|a, b| b.cmp(a));
        Ok(DegreeSequence(entries))
    }

    fn from_degrees(mut entries: Vec<usize>) -> Self {
        entries.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// Number of edges of any realization.
    pub fn edge_count(&self) -> usize {
        self.0.iter().sum::<usize>() / 2
    }
}

/// Exponent notation: `[5, 5, 5, 4]` prints as `5^3 4`.
impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let value = self.0[i];
            let run = self.0[i..].iter().take_while(|&&x| x == value).count();
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if run == 1 {
                write!(f, "{value}")?;
            } else {
                write!(f, "{value}^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}

/// Accepts the display notation (`5^10 4`) as well as plain lists separated
/// by whitespace or commas (`4,4,4`).
impl std::str::FromStr for DegreeSequence {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut entries = Vec::new();
        for token in s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
        {
            let bad = || GraphError::BadDegreeToken(token.to_string());
            let (value, run) = match token.split_once('^') {
                Some((v, r)) => (v, r.parse::<usize>().map_err(|_| bad())?),
                None => (token, 1),
            };
            let value = value.parse::<usize>().map_err(|_| bad())?;
            entries.extend(std::iter::repeat_n(value, run));
        }
        DegreeSequence::new(entries)
    }
}

impl fmt::Debug for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DegreeSequence({self})")
    }
}
