//! Closed-form maximum edge counts for graphs with Δ < d and ν < nu.
//!
//! Every evaluator is total: `d < 2` or `nu < 1` describes a class of
//! edgeless graphs and yields 0.

fn budget(d: usize, nu: usize) -> Option<usize> {
    (d >= 2 && nu >= 1).then(|| nu - 1)
}

/// Maximum edge count of a planar graph with Δ < d and ν < nu.
pub fn max_edges_planar(d: usize, nu: usize) -> usize {
    let Some(k) = budget(d, nu) else { return 0 };
    match d {
        3 => 3 * k,
        4 | 5 => (d - 1) * k + k / 2,
        6 => 5 * k + 2 * (k / 7) + usize::from(k % 7 >= 4),
        _ => (d - 1) * k,
    }
}

/// Maximum edge count with no planarity requirement.
///
/// `(d-1)(nu-1) + ⌊(d-1)/2⌋·⌊(nu-1)/⌈(d-1)/2⌉⌋`.
pub fn max_edges_general(d: usize, nu: usize) -> usize {
    let Some(k) = budget(d, nu) else { return 0 };
    let block = (d - 1).div_ceil(2);
    (d - 1) * k + (d - 1) / 2 * (k / block)
}

/// Maximum edge count of an outerplanar graph with Δ < d and ν < nu.
pub fn max_edges_outerplanar(d: usize, nu: usize) -> usize {
    let Some(k) = budget(d, nu) else { return 0 };
    if d == 3 {
        3 * k
    } else {
        (d - 1) * k
    }
}

/// `d·(nu-1)`: at most Δ+1 ≤ d color classes, each a matching of at most
/// nu-1 edges.
pub fn vizing_upper(d: usize, nu: usize) -> usize {
    let Some(k) = budget(d, nu) else { return 0 };
    d * k
}
