//! Graphs where no single tree toward a target carries a minimum energetic
//! path from every source.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::oracle::{oracle_min_energetic, standard_distances};
use crate::energy::{Capacity, Energy};
use crate::error::{Error, Result};
use crate::graph::{Arc, Graph, Network};
use crate::path::deplete_from;

/// Outcome of enumerating every successor assignment toward `target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TargetTreeReport {
    pub target: usize,
    /// `δ_B(v, t)` for every `v`, from the oracle.
    pub optimal: Vec<Energy>,
    /// Number of complete assignments examined.
    pub assignments: u64,
    /// Successor arc per vertex of a tree realizing every optimum, if any.
    pub tree: Option<Vec<Option<usize>>>,
}

impl TargetTreeReport {
    pub fn has_tree(&self) -> bool {
        self.tree.is_some()
    }
}

/// Tries every way of giving each vertex that can reach `target` one
/// outgoing arc, and checks whether following those arcs from every such
/// vertex reaches `target` at minimum energetic cost.
pub fn check_target_trees(graph: &Graph, capacity: Capacity, target: usize) -> Result<TargetTreeReport> {
    graph.check_vertex(target)?;
    graph.check_costs(capacity)?;
    let n = graph.n();
    let optimal = (0..n)
        .map(|v| oracle_min_energetic(graph, capacity, v, target))
        .collect::<Result<Vec<_>>>()?;

    let sources: Vec<usize> = (0..n).filter(|&v| v != target && optimal[v].is_finite()).collect();
    let useful = |head: usize| head == target || optimal[head].is_finite();
    let choices: Vec<Vec<usize>> = sources
        .iter()
        .map(|&v| {
            graph
                .out_arcs(v)
                .iter()
                .filter(|a| useful(a.vertex))
                .map(|a| a.id)
                .collect()
        })
        .collect();

    let mut report = TargetTreeReport {
        target,
        optimal,
        assignments: 0,
        tree: None,
    };
    let mut digits = vec![0usize; sources.len()];
    let mut succ = vec![None; n];
    loop {
        for (i, &v) in sources.iter().enumerate() {
            succ[v] = Some(choices[i][digits[i]]);
        }
        report.assignments += 1;
        if realizes_all(graph, capacity, target, &sources, &succ, &report.optimal) {
            report.tree = Some(succ);
            return Ok(report);
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == digits.len() {
                return Ok(report);
            }
            digits[i] += 1;
            if digits[i] < choices[i].len() {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

fn realizes_all(
    graph: &Graph,
    capacity: Capacity,
    target: usize,
    sources: &[usize],
    succ: &[Option<usize>],
    optimal: &[Energy],
) -> bool {
    let n = graph.n();
    sources.iter().all(|&v| {
        let mut costs = Vec::new();
        let mut at = v;
        while at != target {
            if costs.len() == n {
                return false;
            }
            let arc = graph.arcs()[succ[at].expect("every source has a successor")];
            costs.push(arc.cost);
            at = arc.head;
        }
        deplete_from(Energy::ZERO, costs.iter().copied(), capacity) == optimal[v]
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub graph: Graph,
    pub capacity: Capacity,
    pub target: usize,
    pub report: TargetTreeReport,
    /// Human-readable account of the check.
    pub log: Vec<String>,
}

/// Five vertices, `B = 3`. From vertex 1 the only minimum path toward 4
/// is `1 -> 2 -> 3 -> 4`; from vertex 2 it is the direct arc `2 -> 4`.
/// A tree must pick one successor for 2, so one of them loses.
pub fn stored_witness() -> (Graph, Capacity, usize) {
    let graph = Graph::from_triples(5, &[(0, 1, 0), (1, 2, 2), (2, 3, -2), (3, 4, 3), (2, 4, 2)])
        .expect("static witness is well formed");
    (graph, Capacity::new(3).expect("static capacity"), 4)
}

fn witness_from(graph: Graph, capacity: Capacity, target: usize, report: TargetTreeReport) -> Witness {
    let mut log = vec![format!(
        "n={} m={} B={} target={}",
        graph.n(),
        graph.m(),
        capacity,
        target + 1
    )];
    for (i, a) in graph.arcs().iter().enumerate() {
        log.push(format!("arc {}: {} -> {} cost {}", i + 1, a.tail + 1, a.head + 1, a.cost));
    }
    for (v, e) in report.optimal.iter().enumerate() {
        log.push(format!("optimum from {}: {}", v + 1, e));
    }
    log.push(format!(
        "{} successor assignments checked, none realizes every optimum",
        report.assignments
    ));
    Witness {
        graph,
        capacity,
        target,
        report,
        log,
    }
}

/// The stored witness, re-verified from scratch.
pub fn verified_stored_witness() -> Result<Witness> {
    let (graph, capacity, target) = stored_witness();
    let report = check_target_trees(&graph, capacity, target)?;
    if report.has_tree() {
        return Err(Error::WitnessNotFound(graph.n()));
    }
    Ok(witness_from(graph, capacity, target, report))
}

const SEARCH_CAPACITY: i64 = 3;
const RANDOM_TRIES: u64 = 200_000;

/// Searches graphs on at most `max_n` vertices (capped at 6) with costs in
/// `[-3, 3]` and `B = 3` for one with no target tree. Three vertices are
/// searched exhaustively, larger sizes by seeded sampling.
pub fn find_no_target_tree_witness(max_n: usize) -> Result<Witness> {
    let max_n = max_n.min(6);
    let capacity = Capacity::new(SEARCH_CAPACITY)?;

    for n in 2..=max_n.min(3) {
        if let Some(w) = exhaustive(n, capacity)? {
            return Ok(w);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for n in 4..=max_n {
        for _ in 0..RANDOM_TRIES {
            let mut arcs = Vec::new();
            for u in 0..n {
                for v in 0..n {
                    if u != v && rng.random_bool(0.45) {
                        let cost = rng.random_range(-SEARCH_CAPACITY..=SEARCH_CAPACITY);
                        arcs.push(Arc { tail: u, head: v, cost });
                    }
                }
            }
            if let Some(w) = examine(Graph::new(n, arcs)?, capacity)? {
                return Ok(w);
            }
        }
    }
    Err(Error::WitnessNotFound(max_n))
}

/// Every graph on `n` vertices without self-loops or parallel arcs, each
/// ordered pair absent or carrying a cost in `[-B, B]`. The target is the
/// last vertex; relabeling covers the rest.
fn exhaustive(n: usize, capacity: Capacity) -> Result<Option<Witness>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect();
    let b = capacity.get();
    let options = (2 * b + 2) as usize;
    let mut digits = vec![0usize; pairs.len()];
    loop {
        let arcs = pairs
            .iter()
            .zip(&digits)
            .filter(|(_, &d)| d > 0)
            .map(|(&(u, v), &d)| Arc {
                tail: u,
                head: v,
                cost: d as i64 - 1 - b,
            })
            .collect();
        if let Some(w) = examine(Graph::new(n, arcs)?, capacity)? {
            return Ok(Some(w));
        }
        let mut i = 0;
        loop {
            if i == digits.len() {
                return Ok(None);
            }
            digits[i] += 1;
            if digits[i] < options {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

fn examine(graph: Graph, capacity: Capacity) -> Result<Option<Witness>> {
    let target = graph.n() - 1;
    let has_negative_cycle = (0..graph.n()).any(|s| standard_distances(&graph, s).is_err());
    if has_negative_cycle {
        return Ok(None);
    }
    let report = check_target_trees(&graph, capacity, target)?;
    Ok((!report.has_tree()).then(|| witness_from(graph, capacity, target, report)))
}
