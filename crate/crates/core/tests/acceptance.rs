//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs with a plain `main` so the lines always print. Criterion 9 is long
//! running and only attempted with `--include-ignored` (or `--ignored`);
//! its time budget can be set in seconds as the argument after `--budget`.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{brute_force_matching_number, random_graph_with_edges, random_planar_graph};
use edgebound::bounds::max_edges_planar;
use edgebound::coloring::{
    chromatic_index_exact, is_proper_edge_coloring, partition_bound_check, vizing_color,
};
use edgebound::constructions::{atlas, pivotal_planar, AtlasName, ClassParams};
use edgebound::graph::{DegreeSequence, Graph};
use edgebound::io::{certify, graph6_decode, graph6_encode};
use edgebound::matching::{is_factor_critical, matching_number};
use edgebound::oracle::{
    component_table, realize_degree_sequence_planar, verdict_from_table, Realization, VerdictStatus,
};
use edgebound::planarity::{is_planar, planar, PlanarityResult};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn cycle_edges(offset: usize, len: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..len).map(move |i| (offset + i, offset + (i + 1) % len))
}

/// Graphs built by criteria 1 to 7, kept for the graph6 round trip.
#[derive(Default)]
struct Produced(Vec<Graph>);

impl Produced {
    fn keep(&mut self, g: &Graph) {
        self.0.push(g.clone());
    }
}

fn tightness_grid(out: &mut Produced) -> Outcome {
    let mut cells = 0;
    for d in 2..=10 {
        for nu in 2..=13 {
            let params = ClassParams::new(d, nu);
            let g = pivotal_planar(params);
            let report = certify(&g, params).map_err(|e| e.to_string())?;
            ensure!(report.planar, "({d},{nu}) not planar");
            ensure!(
                report.max_degree < d,
                "({d},{nu}) Δ = {}",
                report.max_degree
            );
            ensure!(
                report.matching_number < nu,
                "({d},{nu}) ν = {}",
                report.matching_number
            );
            ensure!(
                report.edge_count == max_edges_planar(d, nu),
                "({d},{nu}) has {} edges, bound {}",
                report.edge_count,
                max_edges_planar(d, nu)
            );
            ensure!(report.tight, "({d},{nu}) certificate not tight");
            out.keep(&g);
            cells += 1;
        }
    }
    Ok(format!("{cells} cells tight"))
}

fn atlas_statistics(out: &mut Produced) -> Outcome {
    for name in AtlasName::ALL {
        let g = atlas(name);
        let stats = (
            g.order(),
            g.edge_count(),
            g.max_degree(),
            matching_number(&g),
        );
        ensure!(
            stats == name.expected_stats(),
            "{name}: {stats:?} != {:?}",
            name.expected_stats()
        );
        ensure!(planar(&g), "{name} not planar");
        ensure!(is_factor_critical(&g), "{name} not factor-critical");
        out.keep(&g);
    }
    Ok("5 graphs".into())
}

fn published_values() -> Outcome {
    for (d, nu, expected) in [(6, 8, 37), (5, 3, 9), (5, 4, 13)] {
        let got = max_edges_planar(d, nu);
        ensure!(got == expected, "({d},{nu}) = {got}, expected {expected}");
    }
    for nu in 1..=100 {
        let k = nu - 1;
        ensure!(max_edges_planar(7, nu) == 6 * k, "(7,{nu})");
        ensure!(
            max_edges_planar(4, nu) == 7 * (k / 2) + 3 * (k % 2),
            "(4,{nu})"
        );
    }
    Ok("(7,·) and (4,·) agree for nu <= 100".into())
}

fn no_planar_four_regular_on_seven(out: &mut Produced) -> Outcome {
    let c7 = Graph::from_edges(7, cycle_edges(0, 7)).unwrap();
    let c4c3 = Graph::from_edges(7, cycle_edges(0, 4).chain(cycle_edges(4, 3))).unwrap();
    for (name, g) in [
        ("complement(C7)", c7.complement()),
        ("complement(C4+C3)", c4c3.complement()),
    ] {
        ensure!((0..7).all(|v| g.degree(v) == 4), "{name} not 4-regular");
        match is_planar(&g) {
            PlanarityResult::Planar(_) => return Err(format!("{name} reported planar")),
            PlanarityResult::NonPlanar(w) => {
                ensure!(w.verify(&g), "{name}: witness fails verification")
            }
        }
        out.keep(&g);
    }
    let seq: DegreeSequence = "4^7".parse().unwrap();
    let result = realize_degree_sequence_planar(&seq, Duration::from_secs(30));
    ensure!(
        result == Realization::Exhausted,
        "4^7 search returned {result:?}"
    );
    Ok("witnesses verified, 4^7 exhausted".into())
}

fn oracle_confirmation(out: &mut Produced) -> Outcome {
    let mut summary = Vec::new();
    for (d, n_max) in [(3, 5), (4, 7), (5, 7), (6, 9)] {
        let table = component_table(d, n_max).map_err(|e| e.to_string())?;
        for r in &table.records {
            out.keep(&r.witness);
        }
        let mut statuses = Vec::new();
        for nu in 2..=8 {
            let v = verdict_from_table(&table, nu);
            ensure!(!v.is_violation(), "violation: {v:?}");
            ensure!(v.oracle_value == v.formula_value, "oracle disagrees: {v:?}");
            let expected = if d < 6 {
                VerdictStatus::Confirmed
            } else if (1..nu).all(|mu| table.record(mu).is_some_and(|r| r.exhaustive)) {
                // Every component this budget allows was brute-forced.
                VerdictStatus::Confirmed
            } else {
                VerdictStatus::RealizableOnly
            };
            ensure!(v.status == expected, "expected {expected:?}, got {v:?}");
            let realization = table.realization(nu);
            ensure!(
                planar(&realization)
                    && realization.max_degree() < d
                    && matching_number(&realization) < nu
                    && realization.edge_count() == v.oracle_value,
                "realization for ({d},{nu}) is not a member with {} edges",
                v.oracle_value
            );
            out.keep(&realization);
            statuses.push(match v.status {
                VerdictStatus::Confirmed => 'C',
                VerdictStatus::RealizableOnly => 'R',
                VerdictStatus::Inconclusive => 'I',
                VerdictStatus::Violated => 'V',
            });
        }
        summary.push(format!("d={d}:{}", statuses.iter().collect::<String>()));
    }
    Ok(summary.join(" "))
}

fn blossom_equivalence(out: &mut Produced) -> Outcome {
    let mut rng = StdRng::seed_from_u64(0xb10550);
    for i in 0..200 {
        let n = rng.gen_range(1..=12);
        let m = rng.gen_range(0..=12);
        let g = random_graph_with_edges(&mut rng, n, m);
        let (fast, slow) = (matching_number(&g), brute_force_matching_number(&g));
        ensure!(fast == slow, "graph {i}: blossom {fast}, subsets {slow}");
        out.keep(&g);
    }
    Ok("200 graphs".into())
}

fn coloring_properties(out: &mut Produced) -> Outcome {
    let mut rng = StdRng::seed_from_u64(0xc0105);
    let mut graphs: Vec<Graph> = AtlasName::ALL.into_iter().map(atlas).collect();
    for _ in 0..100 {
        let n = rng.gen_range(4..=12);
        graphs.push(random_planar_graph(&mut rng, n, 0.5));
    }
    for d in 2..=10 {
        for nu in 2..=13 {
            let g = pivotal_planar(ClassParams::new(d, nu));
            if g.edge_count() <= 20 {
                graphs.push(g);
            }
        }
    }
    let mut exact_checked = 0;
    let mut class_two = 0;
    for g in &graphs {
        let coloring = vizing_color(g);
        let assignment: Vec<_> = coloring.assignments().collect();
        ensure!(
            coloring.palette_size() <= g.max_degree() + 1,
            "more than Δ+1 colors"
        );
        ensure!(
            is_proper_edge_coloring(g, &assignment, coloring.palette_size()),
            "improper coloring"
        );
        if g.edge_count() <= 20 {
            let (_, exceeds) = partition_bound_check(g);
            let index = chromatic_index_exact(g).map_err(|e| e.to_string())?;
            exact_checked += 1;
            if exceeds {
                class_two += 1;
                ensure!(
                    index == g.max_degree() + 1,
                    "partition bound exceeded but χ' = {index}"
                );
            }
        }
        out.keep(g);
    }
    ensure!(class_two > 0, "no instance exercised the partition bound");
    Ok(format!(
        "{} graphs, {exact_checked} solved exactly, {class_two} over the partition bound",
        graphs.len()
    ))
}

fn graph6_round_trip(produced: &Produced) -> Outcome {
    for (i, g) in produced.0.iter().enumerate() {
        let text = graph6_encode(g).map_err(|e| format!("graph {i}: {e}"))?;
        let back = graph6_decode(&text).map_err(|e| format!("graph {i}: {e}"))?;
        ensure!(&back == g, "graph {i} changed in the round trip");
    }
    Ok(format!("{} graphs", produced.0.len()))
}

fn five_ten_four_sequence(budget: Duration) -> Outcome {
    let seq: DegreeSequence = "5^10 4".parse().unwrap();
    match realize_degree_sequence_planar(&seq, budget) {
        Realization::Exhausted => Ok("5^10 4 exhausted".into()),
        Realization::TimedOut => Ok(format!(
            "timed out after {}s (recorded, not gating)",
            budget.as_secs()
        )),
        Realization::Found(g) => Err(format!(
            "found a planar realization {}",
            graph6_encode(&g).unwrap()
        )),
    }
}

struct Report {
    failures: usize,
}

impl Report {
    fn run(&mut self, id: u32, title: &str, limit: Duration, check: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(note) if elapsed > limit => {
                Err(format!("{note}; over the {}s budget", limit.as_secs()))
            }
            other => other,
        };
        match outcome {
            Ok(note) => println!(
                "PASS [{id}] {title}: {note} ({:.2}s)",
                elapsed.as_secs_f64()
            ),
            Err(why) => {
                self.failures += 1;
                println!("FAIL [{id}] {title}: {why} ({:.2}s)", elapsed.as_secs_f64());
            }
        }
    }
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let optional = args
        .iter()
        .any(|a| a == "--include-ignored" || a == "--ignored");
    let budget = args
        .iter()
        .position(|a| a == "--budget")
        .and_then(|i| args.get(i + 1))
        .and_then(|s| s.parse().ok())
        .map_or(Duration::from_secs(4 * 3600), Duration::from_secs);
    // `cargo test -- --list` and filters from other targets land here too.
    if args.iter().any(|a| a == "--list") {
        return ExitCode::SUCCESS;
    }

    let secs = Duration::from_secs;
    let mut report = Report { failures: 0 };
    let mut produced = Produced::default();
    report.run(
        1,
        "tightness grid d in [2,10], nu in [2,13]",
        secs(10),
        || tightness_grid(&mut produced),
    );
    report.run(2, "atlas statistics", secs(1), || {
        atlas_statistics(&mut produced)
    });
    report.run(3, "published bound values", secs(1), published_values);
    report.run(
        4,
        "no planar 4-regular graph on 7 vertices",
        secs(30),
        || no_planar_four_regular_on_seven(&mut produced),
    );
    report.run(5, "oracle confirmation", secs(600), || {
        oracle_confirmation(&mut produced)
    });
    report.run(6, "blossom vs subset oracle", secs(30), || {
        blossom_equivalence(&mut produced)
    });
    report.run(7, "edge coloring properties", secs(60), || {
        coloring_properties(&mut produced)
    });
    report.run(8, "graph6 round trip", secs(5), || {
        graph6_round_trip(&produced)
    });
    if optional {
        report.run(
            9,
            "no planar realization of 5^10 4 (optional)",
            budget + secs(60),
            || five_ten_four_sequence(budget),
        );
    } else {
        println!("SKIP [9] no planar realization of 5^10 4 (optional; run with --include-ignored)");
    }

    if report.failures == 0 {
        println!("acceptance: all gating criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {} criteria failed", report.failures);
        ExitCode::FAILURE
    }
}
