//! JSON report types emitted by the command-line tool.

use serde::{Deserialize, Serialize};

use crate::bounds::max_edges_planar;
use crate::coloring::{chromatic_index_exact, vizing_color};
use crate::constructions::ClassParams;
use crate::graph::{DegreeSequence, Graph};
use crate::matching::matching_number;
use crate::oracle::{ComponentTable, Realization};
use crate::planarity::planar;

use super::graph6::{graph6_encode, Graph6Error};

/// Membership and tightness certificate of a graph for `M_planar(d, nu)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub params: ClassParams,
    pub graph_g6: String,
    pub planar: bool,
    pub max_degree: usize,
    pub matching_number: usize,
    pub edge_count: usize,
    pub bound: usize,
    pub tight: bool,
}

impl CertificateReport {
    /// Planar, Δ < d and ν < nu, regardless of the edge count.
    pub fn in_class(&self) -> bool {
        self.planar && self.max_degree < self.params.d && self.matching_number < self.params.nu
    }
}

pub fn certify(g: &Graph, params: ClassParams) -> Result<CertificateReport, Graph6Error> {
    let mut report = CertificateReport {
        params,
        graph_g6: graph6_encode(g)?,
        planar: planar(g),
        max_degree: g.max_degree(),
        matching_number: matching_number(g),
        edge_count: g.edge_count(),
        bound: max_edges_planar(params.d, params.nu),
        tight: false,
    };
    report.tight = report.in_class() && report.edge_count == report.bound;
    Ok(report)
}

/// A graph together with its basic statistics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphReport {
    pub graph_g6: String,
    pub order: usize,
    pub edge_count: usize,
    pub max_degree: usize,
    pub matching_number: usize,
}

impl GraphReport {
    pub fn new(g: &Graph) -> Result<Self, Graph6Error> {
        Ok(GraphReport {
            graph_g6: graph6_encode(g)?,
            order: g.order(),
            edge_count: g.edge_count(),
            max_degree: g.max_degree(),
            matching_number: matching_number(g),
        })
    }
}

/// A proper edge coloring. `edges` holds `[u, v, color]` triples in
/// lexicographic edge order. `chromatic_index` is present when the graph is
/// small enough for the exact solver.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringReport {
    pub graph_g6: String,
    pub max_degree: usize,
    pub colors_used: usize,
    pub chromatic_index: Option<usize>,
    pub edges: Vec<[usize; 3]>,
}

pub fn coloring_report(g: &Graph) -> Result<ColoringReport, Graph6Error> {
    let coloring = vizing_color(g);
    let mut edges: Vec<[usize; 3]> = coloring.assignments().map(|(u, v, c)| [u, v, c]).collect();
    edges.sort_unstable();
    Ok(ColoringReport {
        graph_g6: graph6_encode(g)?,
        max_degree: g.max_degree(),
        colors_used: coloring.palette_size(),
        chromatic_index: chromatic_index_exact(g).ok(),
        edges,
    })
}

/// One row of the component table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordReport {
    pub mu: usize,
    pub best_edges: usize,
    pub exhaustive: bool,
    pub witness_g6: String,
    pub witness_order: usize,
}

/// The component table, rows in ascending `mu`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub d: usize,
    pub n_max: usize,
    pub records: Vec<RecordReport>,
}

pub fn table_report(table: &ComponentTable) -> Result<TableReport, Graph6Error> {
    let records = table
        .records
        .iter()
        .map(|r| {
            Ok(RecordReport {
                mu: r.mu,
                best_edges: r.best_edges,
                exhaustive: r.exhaustive,
                witness_g6: graph6_encode(&r.witness)?,
                witness_order: r.witness.order(),
            })
        })
        .collect::<Result<_, Graph6Error>>()?;
    Ok(TableReport {
        d: table.d,
        n_max: table.n_max,
        records,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RealizeOutcome {
    Found,
    Exhausted,
    TimedOut,
}

/// Result of a realizability search; `graph_g6` is present iff found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizeReport {
    pub sequence: String,
    pub outcome: RealizeOutcome,
    pub graph_g6: Option<String>,
}

pub fn realize_report(
    seq: &DegreeSequence,
    result: &Realization,
) -> Result<RealizeReport, Graph6Error> {
    let (outcome, graph_g6) = match result {
        Realization::Found(g) => (RealizeOutcome::Found, Some(graph6_encode(g)?)),
        Realization::Exhausted => (RealizeOutcome::Exhausted, None),
        Realization::TimedOut => (RealizeOutcome::TimedOut, None),
    };
    Ok(RealizeReport {
        sequence: seq.to_string(),
        outcome,
        graph_g6,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{atlas, pivotal_planar, star, AtlasName};

    #[test]
    fn atlas_a5_is_tight_at_six_six() {
        let report = certify(&atlas(AtlasName::A5), ClassParams::new(6, 6)).unwrap();
        assert!(report.tight);
        assert_eq!((report.edge_count, report.bound), (26, 26));
        let report = certify(&atlas(AtlasName::A6), ClassParams::new(6, 7)).unwrap();
        assert!(report.tight);
    }

    #[test]
    fn not_tight_outside_the_class() {
        let report = certify(&atlas(AtlasName::A5), ClassParams::new(5, 6)).unwrap();
        assert!(!report.tight);
        assert!(!report.in_class());
        let report = certify(&star(3), ClassParams::new(6, 2)).unwrap();
        assert!(report.in_class());
        assert!(!report.tight);
    }

    #[test]
    fn pivotal_graphs_certify() {
        for (d, nu) in [(4, 5), (5, 6), (6, 12), (8, 4)] {
            let params = ClassParams::new(d, nu);
            assert!(certify(&pivotal_planar(params), params).unwrap().tight);
        }
    }

    #[test]
    fn coloring_report_is_sorted_and_complete() {
        let g = atlas(AtlasName::K5Minus);
        let report = coloring_report(&g).unwrap();
        assert_eq!(report.edges.len(), g.edge_count());
        assert!(report.edges.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(report.chromatic_index, Some(5));
    }
}
