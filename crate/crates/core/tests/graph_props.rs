mod common;

use common::{all_pairs, arb_graph, arb_permutation};
use edgebound::canon::{canonical_form, canonical_labeling};
use edgebound::graph::Graph;
use proptest::prelude::*;

/// Brute-force isomorphism test over all vertex permutations.
fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    fn extend(a: &Graph, b: &Graph, perm: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let v = perm.len();
        if v == a.order() {
            return true;
        }
        for w in 0..b.order() {
            if used[w] || a.degree(v) != b.degree(w) {
                continue;
            }
            if (0..v).all(|u| a.has_edge(u, v) == b.has_edge(perm[u], w)) {
                used[w] = true;
                perm.push(w);
                if extend(a, b, perm, used) {
                    return true;
                }
                perm.pop();
                used[w] = false;
            }
        }
        false
    }
    extend(a, b, &mut Vec::new(), &mut vec![false; b.order()])
}

fn component_count(g: &Graph) -> usize {
    g.component_labels().0
}

proptest! {
    #[test]
    fn handshake_and_edge_order(g in arb_graph(9)) {
        let degree_sum: usize = (0..g.order()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(degree_sum, 2 * g.edge_count());
        let edges: Vec<_> = g.edges().collect();
        prop_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(edges.iter().all(|&(u, v)| u < v && g.has_edge(v, u)));
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(9)) {
        let c = g.complement();
        prop_assert_eq!(g.edge_count() + c.edge_count(), all_pairs(g.order()).len());
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn union_adds_statistics(a in arb_graph(6), b in arb_graph(6)) {
        let u = a.disjoint_union(&b);
        prop_assert_eq!(u.order(), a.order() + b.order());
        prop_assert_eq!(u.edge_count(), a.edge_count() + b.edge_count());
        prop_assert_eq!(component_count(&u), component_count(&a) + component_count(&b));
    }

    #[test]
    fn components_partition_the_graph(g in arb_graph(9)) {
        let parts = g.connected_components();
        prop_assert_eq!(parts.iter().map(|c| c.graph.order()).sum::<usize>(), g.order());
        prop_assert_eq!(parts.iter().map(|c| c.graph.edge_count()).sum::<usize>(), g.edge_count());
        prop_assert!(parts.iter().all(|c| c.graph.is_connected()));
    }

    #[test]
    fn cut_vertices_match_deletion(g in arb_graph(8)) {
        let cut = g.cut_vertices();
        let base = component_count(&g);
        for (v, &is_cut) in cut.iter().enumerate() {
            let after = component_count(&g.delete_vertex(v).unwrap());
            // An isolated vertex disappears with its component.
            let expected = if g.degree(v) == 0 { after + 1 > base } else { after > base };
            prop_assert_eq!(is_cut, expected && g.degree(v) > 0, "vertex {}", v);
        }
    }

    #[test]
    fn canonical_form_is_permutation_invariant(
        (g, perm) in arb_graph(9).prop_flat_map(|g| { let n = g.order(); (Just(g), arb_permutation(n)) })
    ) {
        let h = g.permute(&perm);
        prop_assert_eq!(h.degree_stats(), g.degree_stats());
        prop_assert_eq!(canonical_form(&h), canonical_form(&g));
    }

    #[test]
    fn canonical_representative_round_trips(g in arb_graph(9)) {
        let form = canonical_form(&g);
        let rep = form.to_graph();
        prop_assert_eq!(canonical_form(&rep), form.clone());
        let labeling = canonical_labeling(&g);
        let pos = labeling.positions();
        prop_assert_eq!(g.permute(&pos), rep);
    }

    #[test]
    fn canonical_forms_separate_isomorphism_classes(a in arb_graph(6), b in arb_graph(6)) {
        prop_assert_eq!(canonical_form(&a) == canonical_form(&b), isomorphic(&a, &b));
    }
}

#[test]
fn canonical_forms_on_small_cospectral_pair() {
    // C4 + K1 and the star K_{1,4} share a spectrum but are not isomorphic.
    let c4k1 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    let star = Graph::from_edges(5, (1..5).map(|i| (0, i))).unwrap();
    assert_ne!(canonical_form(&c4k1), canonical_form(&star));
}
