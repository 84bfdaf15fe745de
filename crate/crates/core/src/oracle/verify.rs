//! Building component tables on worker threads and judging the bound.

use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use serde::{Deserialize, Serialize};

use crate::bounds::max_edges_planar;

use super::checkpoint::{Checkpoint, RunKey};
use super::enumerate::{EnumerationSpec, Node};
use super::table::{seed, Accumulator, ComponentTable};
use super::OracleError;

#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    /// Worker threads; 0 is treated as 1.
    pub workers: usize,
    pub checkpoint: Option<PathBuf>,
}

/// Order at which the generation tree is cut into independent subtrees.
fn split_order(n_max: usize) -> usize {
    n_max.saturating_sub(3).max(2).min(n_max).max(1)
}

pub fn component_table(d: usize, n_max: usize) -> Result<ComponentTable, OracleError> {
    component_table_with(d, n_max, &RunOptions::default())
}

struct Shared {
    acc: Accumulator,
    checkpoint: Option<Checkpoint>,
    error: Option<OracleError>,
}

/// Enumerates connected planar graphs with Δ < d on at most `n_max`
/// vertices, plus the closed-form seed components, and keeps the best one
/// per matching number.
pub fn component_table_with(
    d: usize,
    n_max: usize,
    options: &RunOptions,
) -> Result<ComponentTable, OracleError> {
    let spec = EnumerationSpec::new(n_max, d.saturating_sub(1), true)?;
    let split = split_order(n_max);
    let shards = spec.shards(split);

    let mut acc = Accumulator::default();
    for node in &shards.above {
        acc.offer_graph(&node.graph, &node.form);
    }
    seed(&mut acc, d);

    let mut checkpoint = None;
    if let Some(path) = &options.checkpoint {
        let (cp, saved) = Checkpoint::open(path, RunKey { d, n_max, split })?;
        acc.merge(&saved);
        checkpoint = Some(cp);
    }
    let pending: Vec<&Node> = shards
        .roots
        .iter()
        .filter(|root| checkpoint.as_ref().is_none_or(|cp| !cp.is_done(&root.form)))
        .collect();

    let shared = Mutex::new(Shared {
        acc,
        checkpoint,
        error: None,
    });
    let next = AtomicUsize::new(0);
    let workers = options.workers.clamp(1, pending.len().max(1));
    thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(root) = pending.get(i) else { break };
                let mut local = Accumulator::default();
                spec.visit_subtree(root, &mut |node| local.offer_graph(&node.graph, &node.form));
                let mut guard = shared.lock().unwrap();
                let Shared {
                    acc,
                    checkpoint,
                    error,
                } = &mut *guard;
                if error.is_some() {
                    break;
                }
                acc.merge(&local);
                if let Some(cp) = checkpoint {
                    if let Err(e) = cp.complete(&root.form, acc) {
                        *error = Some(e);
                        break;
                    }
                }
            });
        }
    });
    let shared = shared.into_inner().unwrap();
    if let Some(e) = shared.error {
        return Err(e);
    }
    Ok(ComponentTable {
        d,
        n_max,
        records: shared.acc.records(n_max),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerdictStatus {
    /// Exhaustive records reach the formula and nothing can exceed it.
    Confirmed,
    /// The formula is reached, but the upper bound rests on records that
    /// were not brute-forced.
    RealizableOnly,
    /// The recorded components fall short of the formula.
    Inconclusive,
    /// A graph beats the formula, or the formula is provably unreachable.
    Violated,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub d: usize,
    pub nu: usize,
    pub n_max: usize,
    pub status: VerdictStatus,
    pub oracle_value: usize,
    pub upper_value: usize,
    pub formula_value: usize,
}

impl Verdict {
    pub fn is_violation(&self) -> bool {
        self.status == VerdictStatus::Violated
    }
}

/// Compares the table's knapsack values with `max_edges_planar(d, nu)`.
pub fn verdict_from_table(table: &ComponentTable, nu: usize) -> Verdict {
    let oracle_value = table.combine(nu);
    let upper_value = table.upper_combine(nu);
    let formula_value = max_edges_planar(table.d, nu);
    let exhaustive_value = table.combine_exhaustive(nu);
    let status = if oracle_value > formula_value || upper_value < formula_value {
        VerdictStatus::Violated
    } else if oracle_value < formula_value {
        VerdictStatus::Inconclusive
    } else if exhaustive_value == formula_value && upper_value == formula_value {
        VerdictStatus::Confirmed
    } else {
        VerdictStatus::RealizableOnly
    };
    Verdict {
        d: table.d,
        nu,
        n_max: table.n_max,
        status,
        oracle_value,
        upper_value,
        formula_value,
    }
}

pub fn verify_theorem(d: usize, nu: usize, n_max: usize) -> Result<Verdict, OracleError> {
    verify_theorem_with(d, nu, n_max, &RunOptions::default())
}

pub fn verify_theorem_with(
    d: usize,
    nu: usize,
    n_max: usize,
    options: &RunOptions,
) -> Result<Verdict, OracleError> {
    let table = component_table_with(d, n_max, options)?;
    Ok(verdict_from_table(&table, nu))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_orders() {
        assert_eq!(split_order(9), 6);
        assert_eq!(split_order(7), 4);
        assert_eq!(split_order(5), 2);
        assert_eq!(split_order(2), 2);
        assert_eq!(split_order(1), 1);
    }

    #[test]
    fn small_tables() {
        let t = component_table(5, 5).unwrap();
        assert_eq!(t.record(1).unwrap().best_edges, 4);
        assert_eq!(t.record(2).unwrap().best_edges, 9);
        let t = component_table(3, 5).unwrap();
        assert_eq!(t.record(1).unwrap().best_edges, 3);
    }

    #[test]
    fn small_verdicts() {
        let v = verify_theorem(3, 4, 5).unwrap();
        assert_eq!(v.status, VerdictStatus::Confirmed);
        assert_eq!((v.oracle_value, v.formula_value), (9, 9));
        let v = verify_theorem(5, 5, 7).unwrap();
        assert_eq!(v.status, VerdictStatus::Confirmed);
        assert_eq!((v.oracle_value, v.formula_value), (18, 18));
    }

    #[test]
    fn workers_agree_with_serial() {
        let serial = component_table(5, 7).unwrap();
        let parallel = component_table_with(
            5,
            7,
            &RunOptions {
                workers: 4,
                checkpoint: None,
            },
        )
        .unwrap();
        assert_eq!(serial, parallel);
    }

    #[test]
    fn verdict_json_field_names() {
        let v = verify_theorem(3, 2, 3).unwrap();
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json["status"], "confirmed");
        assert_eq!(json["formula_value"], 3);
        let v = Verdict {
            status: VerdictStatus::RealizableOnly,
            ..v
        };
        assert_eq!(
            serde_json::to_value(&v).unwrap()["status"],
            "realizable-only"
        );
    }
}
