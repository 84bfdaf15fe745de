//! Named graphs and the extremal families.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Parameters of the class of graphs with Δ < d and ν < nu (both strict).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassParams {
    pub d: usize,
    pub nu: usize,
}

impl ClassParams {
    pub fn new(d: usize, nu: usize) -> Self {
        ClassParams { d, nu }
    }

    /// Matching budget `nu - 1` (0 when `nu` is 0).
    pub fn budget(&self) -> usize {
        self.nu.saturating_sub(1)
    }
}

/// The fixed graphs drawn as extremal components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum AtlasName {
    K5Minus,
    A4,
    A5,
    A6,
    A7,
}

impl AtlasName {
    pub const ALL: [AtlasName; 5] = [
        AtlasName::K5Minus,
        AtlasName::A4,
        AtlasName::A5,
        AtlasName::A6,
        AtlasName::A7,
    ];

    /// Published `(order, edges, max degree, matching number)`.
    pub fn expected_stats(self) -> (usize, usize, usize, usize) {
        match self {
            AtlasName::K5Minus => (5, 9, 4, 2),
            AtlasName::A4 => (9, 21, 5, 4),
            AtlasName::A5 => (11, 26, 5, 5),
            AtlasName::A6 => (13, 31, 5, 6),
            AtlasName::A7 => (15, 37, 5, 7),
        }
    }
}

impl fmt::Display for AtlasName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AtlasName::K5Minus => "K5_MINUS",
            AtlasName::A4 => "A4",
            AtlasName::A5 => "A5",
            AtlasName::A6 => "A6",
            AtlasName::A7 => "A7",
        })
    }
}

impl FromStr for AtlasName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AtlasName::ALL
            .into_iter()
            .find(|a| a.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown atlas graph {s:?}"))
    }
}

/// `K_{1,k}`: center 0, leaves `1..=k`.
pub fn star(k: usize) -> Graph {
    Graph::from_valid_edges(k + 1, (1..=k).map(|i| (0, i)))
}

pub fn complete(n: usize) -> Graph {
    Graph::from_valid_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_d` minus the perfect matching `{0,1}, {2,3}, ...`, plus vertex `d`
/// joined to `0..d-1`. Panics if `d` is odd or zero.
pub fn k_prime(d: usize) -> Graph {
    assert!(
        d >= 2 && d.is_multiple_of(2),
        "K'_d needs an even d >= 2, got {d}"
    );
    let core = (0..d)
        .flat_map(|u| (u + 1..d).map(move |v| (u, v)))
        .filter(|&(u, v)| !(u % 2 == 0 && v == u + 1));
    let apex = (0..d - 1).map(|u| (u, d));
    Graph::from_valid_edges(d + 1, core.chain(apex))
}

/// Figure labels are 1-based; `vertices` lists the labels in use, in the
/// order they are mapped to `0..`.
fn from_figure(vertices: &[usize], adjacency: &[(usize, &[usize])]) -> Graph {
    let index = |label: usize| {
        vertices
            .iter()
            .position(|&x| x == label)
            .unwrap_or_else(|| panic!("label {label} not in vertex set"))
    };
    let edges = adjacency
        .iter()
        .flat_map(|&(u, nbrs)| nbrs.iter().map(move |&v| (u, v)))
        .map(|(u, v)| (index(u), index(v)));
    Graph::from_valid_edges(vertices.len(), edges)
}

pub fn atlas(name: AtlasName) -> Graph {
    let range = |n: usize| (1..=n).collect::<Vec<_>>();
    match name {
        AtlasName::K5Minus => {
            Graph::from_valid_edges(5, complete(5).edges().filter(|&e| e != (3, 4)))
        }
        AtlasName::A4 => from_figure(
            &[1, 2, 3, 4, 5, 6, 9, 10, 12],
            &[
                (1, &[2, 3, 4, 5, 6]),
                (2, &[3, 6, 9, 12]),
                (3, &[4, 9]),
                (4, &[5, 9, 10]),
                (5, &[6, 10, 12]),
                (6, &[12]),
                (9, &[10, 12]),
                (10, &[12]),
            ],
        ),
        AtlasName::A5 => from_figure(
            &range(11),
            &[
                (1, &[2, 3, 4, 5, 6]),
                (2, &[3, 6, 7, 9]),
                (3, &[4, 7, 8]),
                (4, &[5, 8, 10]),
                (5, &[6, 10, 11]),
                (6, &[9, 11]),
                (7, &[8, 9]),
                (8, &[10]),
                (9, &[10, 11]),
                (10, &[11]),
            ],
        ),
        AtlasName::A6 => from_figure(
            &range(13),
            &[
                (1, &[2, 3, 4, 5, 6]),
                (2, &[3, 6, 7, 8]),
                (3, &[4, 8, 9]),
                (4, &[5, 9, 10]),
                (5, &[6, 10, 13]),
                (6, &[7, 13]),
                (7, &[8, 11]),
                (8, &[11, 12]),
                (9, &[10, 12]),
                (10, &[12, 13]),
                (11, &[12, 13]),
                (12, &[13]),
            ],
        ),
        AtlasName::A7 => from_figure(
            &range(15),
            &[
                (1, &[2, 3, 4, 5, 6]),
                (2, &[3, 6, 7, 8]),
                (3, &[4, 8, 9]),
                (4, &[5, 9, 10]),
                (5, &[6, 10, 12]),
                (6, &[7, 12]),
                (7, &[8, 13, 15]),
                (8, &[13, 14]),
                (9, &[10, 11, 14]),
                (10, &[11, 12]),
                (11, &[12, 14, 15]),
                (12, &[15]),
                (13, &[14, 15]),
                (14, &[15]),
            ],
        ),
    }
}

/// The planar extremal graph for the class: a disjoint union with the large
/// components first and stars last. `nu <= 1` (or `d < 2`) gives the empty
/// graph.
pub fn pivotal_planar(params: ClassParams) -> Graph {
    let ClassParams { d, .. } = params;
    let k = params.budget();
    if d < 2 || k == 0 {
        return Graph::empty(0);
    }
    let parts: Vec<(Graph, usize)> = match d {
        2 => vec![(complete(2), k)],
        3 => vec![(complete(3), k)],
        4 => vec![(k_prime(4), k / 2), (star(3), k % 2)],
        5 => vec![(atlas(AtlasName::K5Minus), k / 2), (star(4), k % 2)],
        6 => {
            let rest = k % 7;
            let a7 = (atlas(AtlasName::A7), k / 7);
            if rest <= 3 {
                vec![a7, (star(5), rest)]
            } else {
                vec![a7, (atlas(AtlasName::A4), 1), (star(5), rest - 4)]
            }
        }
        _ => vec![(star(d - 1), k)],
    };
    let pieces: Vec<Graph> = parts.iter().map(|(g, copies)| g.repeat(*copies)).collect();
    Graph::union_all(&pieces)
}

/// The extremal graph without the planarity requirement:
/// `r·K_{1,d-1} + q·K'_d` for even `d`, `r·K_{1,d-1} + q·K_d` for odd `d`,
/// where `nu - 1 = q·⌈(d-1)/2⌉ + r`. Not planar in general.
pub fn extremal_general(params: ClassParams) -> Graph {
    let ClassParams { d, .. } = params;
    let k = params.budget();
    if d < 2 || k == 0 {
        return Graph::empty(0);
    }
    let block = (d - 1).div_ceil(2);
    let (q, r) = (k / block, k % block);
    let dense = if d % 2 == 0 { k_prime(d) } else { complete(d) };
    dense.repeat(q).disjoint_union(&star(d - 1).repeat(r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::{is_factor_critical, matching_number};
    use crate::planarity::planar;

    #[test]
    fn stars() {
        let s = star(4);
        assert_eq!((s.order(), s.edge_count(), s.degree(0)), (5, 4, 4));
        assert_eq!(star(0).order(), 1);
        assert_eq!(star(6).edge_count(), 6);
    }

    #[test]
    fn complete_graphs() {
        assert_eq!(complete(3).edge_count(), 3);
        assert_eq!(complete(1).edge_count(), 0);
        assert_eq!(complete(5).edge_count(), 10);
        assert_eq!(matching_number(&complete(5)), 2);
    }

    #[test]
    fn k_prime_statistics() {
        for (d, edges) in [(2, 1), (4, 7), (6, 17), (8, 31)] {
            let g = k_prime(d);
            assert_eq!(g.order(), d + 1);
            assert_eq!(g.edge_count(), edges);
            assert_eq!(g.edge_count(), d * (d - 1) / 2 - d / 2 + d - 1);
            if d >= 4 {
                assert_eq!(g.max_degree(), d - 1);
                assert_eq!(matching_number(&g), d / 2);
                assert!(is_factor_critical(&g));
            }
        }
        assert_eq!(matching_number(&k_prime(2)), 1);
    }

    #[test]
    #[should_panic(expected = "even")]
    fn k_prime_rejects_odd() {
        k_prime(5);
    }

    #[test]
    fn atlas_matches_published_statistics() {
        for name in AtlasName::ALL {
            let g = atlas(name);
            let (n, m, delta, nu) = name.expected_stats();
            assert_eq!(g.order(), n, "{name}");
            assert_eq!(g.edge_count(), m, "{name}");
            assert_eq!(g.max_degree(), delta, "{name}");
            assert_eq!(matching_number(&g), nu, "{name}");
            assert!(planar(&g), "{name}");
            assert!(is_factor_critical(&g), "{name}");
        }
    }

    #[test]
    fn atlas_names_round_trip() {
        for name in AtlasName::ALL {
            assert_eq!(name.to_string().parse::<AtlasName>(), Ok(name));
        }
        assert!("A8".parse::<AtlasName>().is_err());
    }

    #[test]
    fn pivotal_examples() {
        let a7 = pivotal_planar(ClassParams::new(6, 8));
        assert_eq!(a7, atlas(AtlasName::A7));
        let g = pivotal_planar(ClassParams::new(5, 4));
        assert_eq!(g.edge_count(), 13);
        assert_eq!(g.connected_components().len(), 2);
        let g = pivotal_planar(ClassParams::new(9, 3));
        assert_eq!(g, star(8).repeat(2));
        assert_eq!(pivotal_planar(ClassParams::new(5, 1)).order(), 0);
    }

    #[test]
    fn general_examples() {
        assert_eq!(extremal_general(ClassParams::new(5, 3)), complete(5));
        assert_eq!(extremal_general(ClassParams::new(4, 2)), star(3));
        assert_eq!(extremal_general(ClassParams::new(6, 4)), k_prime(6));
    }
}
