//! Proper edge colorings.
//!
//! [`vizing_color`] is the Misra–Gries fan/alternating-path algorithm and
//! never needs more than Δ+1 colors. [`chromatic_index_exact`] settles Δ
//! versus Δ+1 by backtracking on small instances. [`partition_bound_check`]
//! is the counting certificate for needing Δ+1: each color class is a
//! matching, so more than Δ·ν edges cannot fit into Δ classes.

use thiserror::Error;

use crate::graph::Graph;
use crate::matching::matching_number;

/// Largest instance the exact solver accepts.
pub const EXACT_EDGE_LIMIT: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("instance has {edges} edges; the exact solver accepts at most {limit}")]
    TooLarge { edges: usize, limit: usize },
}

/// Colors indexed in parallel with `host.edges()`.
#[derive(Debug, Clone)]
pub struct EdgeColoring<'g> {
    host: &'g Graph,
    edges: Vec<(usize, usize)>,
    colors: Vec<usize>,
    palette_size: usize,
}

impl<'g> EdgeColoring<'g> {
    pub fn host(&self) -> &'g Graph {
        self.host
    }

    pub fn palette_size(&self) -> usize {
        self.palette_size
    }

    /// `(u, v, color)` with `u < v`, in edge order.
    pub fn assignments(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.edges
            .iter()
            .zip(&self.colors)
            .map(|(&(u, v), &c)| (u, v, c))
    }

    pub fn color_of(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok().map(|i| self.colors[i])
    }

    /// The edges of one color.
    pub fn color_class(&self, color: usize) -> Vec<(usize, usize)> {
        self.assignments()
            .filter(|&(_, _, c)| c == color)
            .map(|(u, v, _)| (u, v))
            .collect()
    }
}

/// Checks properness from scratch: every edge of `g` colored exactly once,
/// edges sharing an endpoint colored differently, colors below `palette`.
pub fn is_proper_edge_coloring(
    g: &Graph,
    assignment: &[(usize, usize, usize)],
    palette: usize,
) -> bool {
    if assignment.len() != g.edge_count() {
        return false;
    }
    let mut seen_edge = std::collections::HashSet::new();
    let mut seen_color = std::collections::HashSet::new();
    assignment.iter().all(|&(u, v, c)| {
        g.has_edge(u, v)
            && c < palette
            && seen_edge.insert((u.min(v), u.max(v)))
            && seen_color.insert((u, c))
            && seen_color.insert((v, c))
    })
}

/// Δ+1 edge coloring by fan rotation and alternating-path inversion.
pub fn vizing_color(g: &Graph) -> EdgeColoring<'_> {
    let n = g.order();
    let delta = g.max_degree();
    let palette = delta + 1;
    let mut state = FanColoring {
        g,
        color: vec![None; n * n],
        used: vec![vec![None; palette]; n],
    };
    for (u, v) in g.edges() {
        state.color_edge(u, v);
    }

    let edges: Vec<(usize, usize)> = g.edges().collect();
    let raw: Vec<usize> = edges
        .iter()
        .map(|&(u, v)| state.color[u * n + v].expect("every edge colored"))
        .collect();
    // Compact to the colors actually used so the palette size is honest.
    let mut remap = vec![None; palette];
    let mut next = 0;
    let colors = raw
        .iter()
        .map(|&c| {
            *remap[c].get_or_insert_with(|| {
                next += 1;
                next - 1
            })
        })
        .collect();
    EdgeColoring {
        host: g,
        edges,
        colors,
        palette_size: next,
    }
}

struct FanColoring<'g> {
    g: &'g Graph,
    /// Color of edge (u, v) at `u * n + v` (both orientations stored).
    color: Vec<Option<usize>>,
    /// `used[v][c]`: the neighbor joined to `v` by an edge of color `c`.
    used: Vec<Vec<Option<usize>>>,
}

impl FanColoring<'_> {
    fn n(&self) -> usize {
        self.g.order()
    }

    fn get(&self, u: usize, v: usize) -> Option<usize> {
        self.color[u * self.n() + v]
    }

    fn set(&mut self, u: usize, v: usize, c: Option<usize>) {
        let n = self.n();
        if let Some(old) = self.color[u * n + v] {
            self.used[u][old] = None;
            self.used[v][old] = None;
        }
        self.color[u * n + v] = c;
        self.color[v * n + u] = c;
        if let Some(c) = c {
            self.used[u][c] = Some(v);
            self.used[v][c] = Some(u);
        }
    }

    fn is_free(&self, v: usize, c: usize) -> bool {
        self.used[v][c].is_none()
    }

    fn free_color(&self, v: usize) -> usize {
        self.used[v]
            .iter()
            .position(Option::is_none)
            .expect("a vertex of degree at most Δ misses one of Δ+1 colors")
    }

    fn color_edge(&mut self, u: usize, v: usize) {
        // Maximal fan at u starting with the uncolored edge uv.
        let mut fan = vec![v];
        let mut in_fan = vec![false; self.n()];
        in_fan[v] = true;
        loop {
            let last = *fan.last().unwrap();
            let next = self
                .g
                .neighbors(u)
                .iter()
                .copied()
                .find(|&w| !in_fan[w] && self.get(u, w).is_some_and(|c| self.is_free(last, c)));
            match next {
                Some(w) => {
                    in_fan[w] = true;
                    fan.push(w);
                }
                None => break,
            }
        }

        let c = self.free_color(u);
        let d = self.free_color(*fan.last().unwrap());
        self.invert_path(u, c, d);

        // Shortest fan prefix ending at a vertex where d is now free.
        let mut end = None;
        for (i, &w) in fan.iter().enumerate() {
            if i > 0 {
                let fan_ok = self
                    .get(u, w)
                    .is_some_and(|col| self.is_free(fan[i - 1], col));
                if !fan_ok {
                    break;
                }
            }
            if self.is_free(w, d) {
                end = Some(i);
                break;
            }
        }
        let end = end.expect("some fan vertex has d free after the inversion");

        for i in 0..end {
            let next_color = self.get(u, fan[i + 1]);
            self.set(u, fan[i + 1], None);
            self.set(u, fan[i], next_color);
        }
        self.set(u, fan[end], Some(d));
    }

    /// Swaps colors `c` and `d` along the maximal path from `u` that
    /// alternates d, c, d, ... (c is free at u).
    fn invert_path(&mut self, u: usize, c: usize, d: usize) {
        if c == d {
            return;
        }
        let mut path = vec![u];
        let mut want = d;
        let mut cur = u;
        while let Some(next) = self.used[cur][want] {
            path.push(next);
            cur = next;
            want = if want == d { c } else { d };
        }
        let edges: Vec<(usize, usize, usize)> = path
            .windows(2)
            .map(|w| (w[0], w[1], self.get(w[0], w[1]).unwrap()))
            .collect();
        for &(a, b, _) in &edges {
            self.set(a, b, None);
        }
        for (a, b, col) in edges {
            self.set(a, b, Some(if col == c { d } else { c }));
        }
    }
}

/// Minimum number of colors in a proper edge coloring.
pub fn chromatic_index_exact(g: &Graph) -> Result<usize, ColoringError> {
    let m = g.edge_count();
    if m > EXACT_EDGE_LIMIT {
        return Err(ColoringError::TooLarge {
            edges: m,
            limit: EXACT_EDGE_LIMIT,
        });
    }
    if m == 0 {
        return Ok(0);
    }
    let delta = g.max_degree();
    let mut k = delta;
    while exact_coloring(g, k).is_none() {
        k += 1;
    }
    Ok(k)
}

/// A proper coloring with at most `k` colors, if one exists.
pub fn exact_coloring(g: &Graph, k: usize) -> Option<Vec<(usize, usize, usize)>> {
    assert!(k <= 64, "palette too large for bitmask search");
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.sort_by_key(|&(u, v)| (std::cmp::Reverse(g.degree(u) + g.degree(v)), u, v));
    let mut solver = ExactSolver {
        edges: &edges,
        adjacent: edges
            .iter()
            .map(|&(u, v)| {
                edges
                    .iter()
                    .enumerate()
                    .filter(|&(_, &(a, b))| {
                        (a, b) != (u, v) && (a == u || a == v || b == u || b == v)
                    })
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect(),
        used: vec![0u64; g.order()],
        colors: vec![usize::MAX; edges.len()],
        k,
    };
    solver.search(0, 0).then(|| {
        edges
            .iter()
            .zip(&solver.colors)
            .map(|(&(u, v), &c)| (u, v, c))
            .collect()
    })
}

struct ExactSolver<'a> {
    edges: &'a [(usize, usize)],
    adjacent: Vec<Vec<usize>>,
    used: Vec<u64>,
    colors: Vec<usize>,
    k: usize,
}

impl ExactSolver<'_> {
    /// Colors edges `i..` given that colors `0..opened` have appeared so far.
    /// A fresh color is only ever the next unopened one (symmetry breaking).
    fn search(&mut self, i: usize, opened: usize) -> bool {
        if i == self.edges.len() {
            return true;
        }
        let (u, v) = self.edges[i];
        let blocked = self.used[u] | self.used[v];
        let limit = (opened + 1).min(self.k);
        for c in 0..limit {
            let bit = 1u64 << c;
            if blocked & bit != 0 {
                continue;
            }
            self.used[u] |= bit;
            self.used[v] |= bit;
            self.colors[i] = c;
            if self.forward_ok(i) && self.search(i + 1, opened.max(c + 1)) {
                return true;
            }
            self.used[u] &= !bit;
            self.used[v] &= !bit;
            self.colors[i] = usize::MAX;
        }
        false
    }

    /// Every uncolored edge next to edge `i` still has a color available.
    fn forward_ok(&self, i: usize) -> bool {
        let full = if self.k == 64 {
            u64::MAX
        } else {
            (1u64 << self.k) - 1
        };
        self.adjacent[i].iter().all(|&j| {
            if self.colors[j] != usize::MAX {
                return true;
            }
            let (a, b) = self.edges[j];
            (self.used[a] | self.used[b]) & full != full
        })
    }
}

/// Δ·ν and whether `g` has more edges than that (which forces Δ+1 colors).
pub fn partition_bound_check(g: &Graph) -> (usize, bool) {
    let threshold = g.max_degree() * matching_number(g);
    (threshold, g.edge_count() > threshold)
}
