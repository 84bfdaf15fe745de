//! Planarity testing with a certificate either way.
//!
//! Planar graphs come back with a combinatorial embedding (a rotation system)
//! whose traced faces satisfy Euler's formula. Non-planar graphs come back
//! with an edge-minimal non-planar subgraph, which is always a subdivision of
//! K5 or K3,3; [`KuratowskiWitness::verify`] checks that by suppressing the
//! degree-2 vertices.
//!
//! Each biconnected block is embedded by path addition (Demoucron, Malgrange
//! and Pertuiset): start from a cycle, then repeatedly route a path of some
//! bridge through a face that contains all of the bridge's attachment
//! vertices. A bridge with no such face proves non-planarity. The block
//! rotations are then spliced together at cut vertices. Quadratic per block,
//! which is plenty for the graph sizes used here.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::graph::Graph;

const NONE: usize = usize::MAX;

/// Cyclic order of the neighbors around each vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    rotation: Vec<Vec<usize>>,
}

impl Embedding {
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn order(&self) -> usize {
        self.rotation.len()
    }

    /// Face boundary walks. The walk leaving dart `(u, v)` continues with
    /// `(v, w)` where `w` follows `u` in the rotation at `v`.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut position: HashMap<(usize, usize), usize> = HashMap::new();
        for (v, rot) in self.rotation.iter().enumerate() {
            for (i, &u) in rot.iter().enumerate() {
                position.insert((v, u), i);
            }
        }
        let mut seen: HashMap<(usize, usize), bool> = HashMap::new();
        let mut faces = Vec::new();
        for (u, rot) in self.rotation.iter().enumerate() {
            for &v in rot {
                if seen.contains_key(&(u, v)) {
                    continue;
                }
                let mut face = Vec::new();
                let (mut a, mut b) = (u, v);
                while !seen.contains_key(&(a, b)) {
                    seen.insert((a, b), true);
                    face.push(a);
                    let rot_b = &self.rotation[b];
                    let Some(&i) = position.get(&(b, a)) else {
                        // Dart without a reverse: not a valid rotation system.
                        return Vec::new();
                    };
                    let next = rot_b[(i + 1) % rot_b.len()];
                    (a, b) = (b, next);
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Checks that this is a rotation system of `g` and that the traced faces
    /// satisfy `n - |E| + f = 1 + c` for the plane face count `f`.
    pub fn satisfies_euler(&self, g: &Graph) -> bool {
        let n = g.order();
        if self.rotation.len() != n {
            return false;
        }
        for v in 0..n {
            let mut sorted = self.rotation[v].clone();
            sorted.sort_unstable();
            if sorted != g.neighbors(v) {
                return false;
            }
        }
        if n == 0 {
            return true;
        }
        let (components, _) = g.component_labels();
        let isolated = (0..n).filter(|&v| g.degree(v) == 0).count();
        let traced = self.faces().len();
        // Components share one outer face in the plane.
        let faces = traced + isolated + 1 - components;
        n + faces == 1 + components + g.edge_count()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subgraph that is a subdivision of K5 or K3,3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    pub edges: Vec<(usize, usize)>,
}

impl KuratowskiWitness {
    /// Independently re-checks the witness: every edge lies in `g` and
    /// suppressing degree-2 vertices yields exactly `self.kind`.
    pub fn verify(&self, g: &Graph) -> bool {
        self.edges.iter().all(|&(u, v)| g.has_edge(u, v))
            && classify_subdivision(g.order(), &self.edges) == Some(self.kind)
    }
}

#[derive(Debug, Clone)]
pub enum PlanarityResult {
    Planar(Embedding),
    NonPlanar(KuratowskiWitness),
}

impl PlanarityResult {
    pub fn is_planar(&self) -> bool {
        matches!(self, PlanarityResult::Planar(_))
    }

    pub fn embedding(&self) -> Option<&Embedding> {
        match self {
            PlanarityResult::Planar(e) => Some(e),
            PlanarityResult::NonPlanar(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&KuratowskiWitness> {
        match self {
            PlanarityResult::Planar(_) => None,
            PlanarityResult::NonPlanar(w) => Some(w),
        }
    }
}

/// Full planarity test with an embedding or a Kuratowski witness.
pub fn is_planar(g: &Graph) -> PlanarityResult {
    match embed(g) {
        Some(e) => PlanarityResult::Planar(e),
        None => PlanarityResult::NonPlanar(kuratowski_witness(g)),
    }
}

/// Verdict only.
pub fn planar(g: &Graph) -> bool {
    embed(g).is_some()
}

/// `n >= 3` and more than `3n - 6` edges: certainly non-planar. `false` says
/// nothing.
pub fn euler_reject(g: &Graph) -> bool {
    let n = g.order();
    n >= 3 && g.edge_count() > 3 * n - 6
}

/// Planar with all vertices on one face, tested as planarity of `g` plus a
/// universal apex.
pub fn is_outerplanar(g: &Graph) -> bool {
    planar(&g.with_apex())
}

/// A planar embedding of `g`, or `None` if `g` is not planar.
pub fn embed(g: &Graph) -> Option<Embedding> {
    if euler_reject(g) {
        return None;
    }
    let mut rotation = vec![Vec::new(); g.order()];
    for block in blocks(g) {
        if let [(u, v)] = block[..] {
            rotation[u].push(v);
            rotation[v].push(u);
            continue;
        }
        let mut vertices: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        let mut local = HashMap::new();
        for (i, &v) in vertices.iter().enumerate() {
            local.insert(v, i);
        }
        let h = Graph::from_valid_edges(
            vertices.len(),
            block.iter().map(|&(u, v)| (local[&u], local[&v])),
        );
        let local_rotation = embed_biconnected(&h)?;
        for (i, rot) in local_rotation.into_iter().enumerate() {
            rotation[vertices[i]].extend(rot.into_iter().map(|j| vertices[j]));
        }
    }
    Some(Embedding { rotation })
}

/// Edge sets of the biconnected blocks (bridges are single-edge blocks).
fn blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.order();
    let mut disc = vec![NONE; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if disc[root] != NONE {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        stack.push((root, NONE, 0));
        while let Some(top) = stack.last_mut() {
            let (v, parent, idx) = *top;
            if let Some(&u) = g.neighbors(v).get(idx) {
                top.2 += 1;
                if disc[u] == NONE {
                    edge_stack.push((v, u));
                    disc[u] = time;
                    low[u] = time;
                    time += 1;
                    stack.push((u, v, 0));
                } else if u != parent && disc[u] < disc[v] {
                    edge_stack.push((v, u));
                    low[v] = low[v].min(disc[u]);
                }
            } else {
                stack.pop();
                if parent != NONE {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] >= disc[parent] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == (parent, v) {
                                break;
                            }
                        }
                        out.push(block);
                    }
                }
            }
        }
    }
    out
}

/// A bridge of the partial embedding: either a lone unembedded edge between
/// embedded vertices, or a component of unembedded vertices with its
/// attachment edges.
struct Fragment {
    attachments: Vec<usize>,
    interior: Vec<usize>,
}

fn embed_biconnected(h: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = h.order();
    let m = h.edge_count();
    let mut on_vertex = vec![false; n];
    let mut on_edge = vec![false; n * n];
    let mut placed = 0;

    let cycle = find_cycle(h);
    let mut closed = cycle.clone();
    closed.push(cycle[0]);
    placed += place_path(n, &closed, &mut on_vertex, &mut on_edge);
    let mut faces = vec![cycle.clone(), cycle.iter().rev().copied().collect()];

    while placed < m {
        let fragments = fragments(h, &on_vertex, &on_edge);
        let face_sets: Vec<Vec<bool>> = faces
            .iter()
            .map(|f| {
                let mut s = vec![false; n];
                for &v in f {
                    s[v] = true;
                }
                s
            })
            .collect();
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&k| frag.attachments.iter().all(|&a| face_sets[k][a]))
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    choice.get_or_insert((fi, admissible[0]));
                }
            }
        }
        let (fi, face_idx) = choice.expect("unplaced edges imply a fragment");
        let path = fragment_path(h, &fragments[fi], &on_vertex);
        let face = faces.swap_remove(face_idx);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
        placed += place_path(n, &path, &mut on_vertex, &mut on_edge);
    }

    Some(rotation_from_faces(h, &faces))
}

/// Marks `path` as embedded and returns the number of edges it adds.
fn place_path(n: usize, path: &[usize], on_vertex: &mut [bool], on_edge: &mut [bool]) -> usize {
    for &v in path {
        on_vertex[v] = true;
    }
    for w in path.windows(2) {
        on_edge[w[0] * n + w[1]] = true;
        on_edge[w[1] * n + w[0]] = true;
    }
    path.len() - 1
}

/// Some cycle of a biconnected graph, found as the first DFS back edge.
fn find_cycle(h: &Graph) -> Vec<usize> {
    let n = h.order();
    let mut parent = vec![NONE; n];
    let mut depth = vec![NONE; n];
    let mut stack = vec![(0usize, 0usize)];
    depth[0] = 0;
    while let Some(top) = stack.last_mut() {
        let (v, idx) = *top;
        let Some(&u) = h.neighbors(v).get(idx) else {
            stack.pop();
            continue;
        };
        top.1 += 1;
        if depth[u] == NONE {
            depth[u] = depth[v] + 1;
            parent[u] = v;
            stack.push((u, 0));
        } else if u != parent[v] && depth[u] < depth[v] {
            let mut cycle = vec![v];
            let mut x = v;
            while x != u {
                x = parent[x];
                cycle.push(x);
            }
            return cycle;
        }
    }
    panic!("biconnected block without a cycle");
}

fn fragments(h: &Graph, on_vertex: &[bool], on_edge: &[bool]) -> Vec<Fragment> {
    let n = h.order();
    let mut out = Vec::new();
    for (u, v) in h.edges() {
        if on_vertex[u] && on_vertex[v] && !on_edge[u * n + v] {
            out.push(Fragment {
                attachments: vec![u, v],
                interior: Vec::new(),
            });
        }
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if on_vertex[s] || seen[s] {
            continue;
        }
        let mut interior = vec![s];
        let mut attach = vec![false; n];
        seen[s] = true;
        let mut i = 0;
        while i < interior.len() {
            let v = interior[i];
            i += 1;
            for &u in h.neighbors(v) {
                if on_vertex[u] {
                    attach[u] = true;
                } else if !seen[u] {
                    seen[u] = true;
                    interior.push(u);
                }
            }
        }
        out.push(Fragment {
            attachments: (0..n).filter(|&v| attach[v]).collect(),
            interior,
        });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(h: &Graph, frag: &Fragment, on_vertex: &[bool]) -> Vec<usize> {
    if frag.interior.is_empty() {
        return frag.attachments.clone();
    }
    let n = h.order();
    let mut inside = vec![false; n];
    for &v in &frag.interior {
        inside[v] = true;
    }
    let a = frag.attachments[0];
    let start = *h
        .neighbors(a)
        .iter()
        .find(|&&u| inside[u])
        .expect("attachment touches its fragment");
    let mut parent = vec![NONE; n];
    parent[start] = a;
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for &y in h.neighbors(x) {
            if on_vertex[y] && y != a {
                let mut path = vec![y, x];
                let mut z = x;
                while parent[z] != a {
                    z = parent[z];
                    path.push(z);
                }
                path.push(a);
                path.reverse();
                return path;
            }
            if inside[y] && parent[y] == NONE {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    panic!("fragment of a biconnected block has fewer than two attachments");
}

/// Splits the face cycle `face` along `path` (whose endpoints lie on it).
/// Both new faces keep the orientation convention, so every dart stays in
/// exactly one face.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let a = path[0];
    let b = *path.last().unwrap();
    let inner = &path[1..path.len() - 1];
    let len = face.len();
    let i = face.iter().position(|&x| x == a).unwrap();
    let j = face.iter().position(|&x| x == b).unwrap();
    let arc = |from: usize, to: usize| {
        let mut out = Vec::new();
        let mut k = from;
        loop {
            out.push(face[k]);
            if k == to {
                break;
            }
            k = (k + 1) % len;
        }
        out
    };
    let mut first = arc(i, j);
    first.extend(inner.iter().rev());
    let mut second = arc(j, i);
    second.extend(inner.iter());
    (first, second)
}

fn rotation_from_faces(h: &Graph, faces: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = h.order();
    let mut succ = vec![NONE; n * n];
    for f in faces {
        let len = f.len();
        for i in 0..len {
            let (u, v, w) = (f[i], f[(i + 1) % len], f[(i + 2) % len]);
            succ[v * n + u] = w;
        }
    }
    (0..n)
        .map(|v| {
            let first = h.neighbors(v)[0];
            let mut rot = vec![first];
            let mut u = succ[v * n + first];
            while u != first {
                rot.push(u);
                u = succ[v * n + u];
                assert!(rot.len() <= h.degree(v), "face walks do not close at {v}");
            }
            assert_eq!(
                rot.len(),
                h.degree(v),
                "rotation at {v} is not a single cycle"
            );
            rot
        })
        .collect()
}

/// Shrinks `g` to an edge-minimal non-planar subgraph. Every such subgraph is
/// a Kuratowski subdivision.
fn kuratowski_witness(g: &Graph) -> KuratowskiWitness {
    let n = g.order();
    let mut keep: Vec<(usize, usize)> = g.edges().collect();
    let mut i = 0;
    while i < keep.len() {
        let trial: Vec<(usize, usize)> = keep
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, &e)| e)
            .collect();
        if planar(&Graph::from_valid_edges(n, trial.iter().copied())) {
            i += 1;
        } else {
            keep = trial;
        }
    }
    let kind = classify_subdivision(n, &keep)
        .expect("edge-minimal non-planar graph must subdivide K5 or K3,3");
    KuratowskiWitness { kind, edges: keep }
}

/// Suppresses degree-2 vertices of the edge set and reports whether what
/// remains is exactly K5 or K3,3.
fn classify_subdivision(n: usize, edges: &[(usize, usize)]) -> Option<KuratowskiKind> {
    let h = Graph::from_edges(n, edges.iter().copied()).ok()?;
    if h.edge_count() != edges.len() {
        return None;
    }
    let used: Vec<usize> = (0..n).filter(|&v| h.degree(v) > 0).collect();
    if used.iter().any(|&v| !(2..=4).contains(&h.degree(v))) {
        return None;
    }
    let branch: Vec<usize> = used.iter().copied().filter(|&v| h.degree(v) >= 3).collect();
    let mut index = vec![NONE; n];
    for (i, &b) in branch.iter().enumerate() {
        index[b] = i;
    }
    let mut visited = vec![false; n];
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for &b in &branch {
        for &first in h.neighbors(b) {
            let (mut prev, mut cur) = (b, first);
            while h.degree(cur) == 2 {
                visited[cur] = true;
                let next = h.neighbors(cur).iter().copied().find(|&x| x != prev)?;
                (prev, cur) = (cur, next);
            }
            if cur == b {
                return None;
            }
            if b < cur {
                pairs.push((index[b], index[cur]));
            }
        }
    }
    if used.iter().any(|&v| h.degree(v) == 2 && !visited[v]) {
        return None;
    }
    let count = pairs.len();
    pairs.sort_unstable();
    pairs.dedup();
    if pairs.len() != count {
        return None;
    }
    let k = branch.len();
    let reduced = Graph::from_valid_edges(k, pairs);
    if k == 5 && reduced.edge_count() == 10 {
        return Some(KuratowskiKind::K5);
    }
    if k == 6 && reduced.edge_count() == 9 && (0..6).all(|v| reduced.degree(v) == 3) {
        // Bipartite with both sides of size three forces K3,3.
        let mut side = [NONE; 6];
        side[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            for &u in reduced.neighbors(v) {
                if side[u] == NONE {
                    side[u] = 1 - side[v];
                    queue.push_back(u);
                } else if side[u] == side[v] {
                    return None;
                }
            }
        }
        if side.iter().filter(|&&s| s == 0).count() == 3 {
            return Some(KuratowskiKind::K33);
        }
    }
    None
}
