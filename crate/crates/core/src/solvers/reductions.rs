//! Initial charges below capacity, minimum initial charges, maximum final
//! charges and all-pairs queries, all reduced to full-battery solves.

use rayon::prelude::*;

use super::dijkstra::run_energetic_dijkstra;
use super::potential::check_potential;
use super::{
    compute_potential, run_energetic_bf, Algorithm, Labels, Potential, Pred, SolveResult,
};
use crate::energy::{BatteryConfig, Capacity, Energy};
use crate::error::{Error, Result};
use crate::graph::{Graph, Network, SourceOverlay, VIRTUAL_ARC};
use crate::heap::DefaultHeap;
use crate::path::Path;

enum Method<'p> {
    BellmanFord,
    Dijkstra(&'p [i64]),
}

fn run<N: Network + ?Sized>(net: &N, capacity: Capacity, source: usize, method: &Method<'_>) -> Result<Labels> {
    match method {
        Method::BellmanFord => run_energetic_bf(net, capacity, source).map_err(Error::NegativeCycle),
        Method::Dijkstra(p) => Ok(run_energetic_dijkstra::<_, DefaultHeap>(net, p, capacity, source)),
    }
}

fn potential_for(graph: &Graph, algorithm: Algorithm) -> Result<Option<Potential>> {
    match algorithm {
        Algorithm::BellmanFord => Ok(None),
        Algorithm::Auto if !graph.has_negative_cost() => Potential::zero(graph).map(Some),
        Algorithm::Auto | Algorithm::Dijkstra => compute_potential(graph).map(Some),
    }
}

/// Solves from `source` with initial charge `b` by prepending a virtual
/// vertex `s'` with an arc `s' -> s` of cost `B - b`, solving from `s'`
/// fully charged and shifting finite labels down by `B - b`.
fn solve_with_charge<N: Network + ?Sized>(
    net: &N,
    battery: BatteryConfig,
    source: usize,
    potential: Option<&[i64]>,
) -> Result<SolveResult> {
    let capacity = battery.capacity();
    let offset = battery.initial_depletion();
    if offset == 0 {
        let method = potential.map_or(Method::BellmanFord, Method::Dijkstra);
        let labels = run(net, capacity, source, &method)?;
        return Ok(SolveResult::from_parts(source, battery, labels.energy, labels.pred, labels.scans));
    }

    let overlay = SourceOverlay::new(net, source, offset);
    let start = overlay.virtual_vertex();
    let extended: Option<Vec<i64>> = potential.map(|p| {
        let mut ext = p.to_vec();
        // reduced cost of the entry arc is then B - b >= 0
        ext.push(p[source]);
        ext
    });
    let method = extended.as_deref().map_or(Method::BellmanFord, Method::Dijkstra);
    let mut labels = run(&overlay, capacity, start, &method)?;

    labels.energy.truncate(start);
    labels.pred.truncate(start);
    labels.scans.truncate(start);
    for e in &mut labels.energy {
        *e = e.shift(-offset);
    }
    for p in &mut labels.pred {
        if p.is_some_and(|p| p.arc == VIRTUAL_ARC) {
            *p = None;
        }
    }
    Ok(SolveResult::from_parts(source, battery, labels.energy, labels.pred, labels.scans))
}

/// `δ_{B,b}(s, ·)` for the configured initial charge.
///
/// Costs must lie in `[-B, B]`. `Dijkstra` computes a potential with plain
/// Bellman-Ford first; `Auto` skips that when no cost is negative.
pub fn single_source(graph: &Graph, battery: BatteryConfig, source: usize, algorithm: Algorithm) -> Result<SolveResult> {
    graph.check_vertex(source)?;
    graph.check_costs(battery.capacity())?;
    let potential = potential_for(graph, algorithm)?;
    solve_with_charge(graph, battery, source, potential.as_ref().map(Potential::values))
}

/// [`single_source`] with e-Dijkstra and a caller-supplied potential.
pub fn single_source_with(
    graph: &Graph,
    battery: BatteryConfig,
    source: usize,
    potential: &Potential,
) -> Result<SolveResult> {
    graph.check_vertex(source)?;
    graph.check_costs(battery.capacity())?;
    check_potential(graph, potential.values())?;
    solve_with_charge(graph, battery, source, Some(potential.values()))
}

/// Minimum initial charges `β_B(s, t)` for every `s` and a fixed target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InitialCharges {
    target: usize,
    values: Vec<Energy>,
    /// Tree of the reversed-graph solve; `toward[s]` is the first arc of a
    /// cheapest-to-start path from `s` to the target.
    toward: Vec<Option<Pred>>,
}

impl InitialCharges {
    pub fn target(&self) -> usize {
        self.target
    }

    pub fn charge(&self, s: usize) -> Energy {
        self.values[s]
    }

    pub fn values(&self) -> &[Energy] {
        &self.values
    }

    /// A path from `s` to the target drivable from charge `β_B(s, t)`.
    pub fn path_from(&self, s: usize) -> Option<Path> {
        if !self.values[s].is_finite() {
            return None;
        }
        let mut arcs = Vec::new();
        let mut at = s;
        while let Some(p) = self.toward[at] {
            arcs.push(p.arc);
            at = p.vertex;
            if arcs.len() > self.values.len() {
                return None;
            }
        }
        (at == self.target).then(|| Path::from_parts(s, arcs))
    }
}

/// `β_B(s, t)` for every `s`: the energetic cost of `t -> s` in the graph
/// with every arc reversed and costs kept.
pub fn min_initial_charge(graph: &Graph, capacity: Capacity, target: usize, algorithm: Algorithm) -> Result<InitialCharges> {
    graph.check_vertex(target)?;
    graph.check_costs(capacity)?;
    let potential = potential_for(graph, algorithm)?;
    initial_charges(graph, capacity, target, potential.as_ref())
}

/// [`min_initial_charge`] with e-Dijkstra and a caller-supplied potential
/// for the forward graph.
pub fn min_initial_charge_with(
    graph: &Graph,
    capacity: Capacity,
    target: usize,
    potential: &Potential,
) -> Result<InitialCharges> {
    graph.check_vertex(target)?;
    graph.check_costs(capacity)?;
    check_potential(graph, potential.values())?;
    initial_charges(graph, capacity, target, Some(potential))
}

fn initial_charges(graph: &Graph, capacity: Capacity, target: usize, potential: Option<&Potential>) -> Result<InitialCharges> {
    let reversed = graph.reversed();
    let negated = potential.map(Potential::negated);
    let result = solve_with_charge(&reversed, BatteryConfig::full(capacity), target, negated.as_deref())?;
    Ok(InitialCharges {
        target,
        toward: result.preds().to_vec(),
        values: result.take_energy(),
    })
}

/// `α_B(s, v) = B - δ_B(s, v)`, or `NegInf` where `v` is unreachable.
pub fn max_final_charge(graph: &Graph, capacity: Capacity, source: usize, algorithm: Algorithm) -> Result<Vec<Energy>> {
    let result = single_source(graph, BatteryConfig::full(capacity), source, algorithm)?;
    Ok((0..graph.n()).map(|v| result.final_charge(v)).collect())
}

/// One full-battery solve per source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AllPairs {
    rows: Vec<SolveResult>,
}

impl AllPairs {
    pub fn energy(&self, s: usize, t: usize) -> Energy {
        self.rows[s].energy(t)
    }

    pub fn row(&self, s: usize) -> &SolveResult {
        &self.rows[s]
    }

    pub fn rows(&self) -> &[SolveResult] {
        &self.rows
    }
}

/// All-pairs energetic costs: one potential computation, then one
/// e-Dijkstra per source. Sources are solved in parallel on the current
/// rayon pool; results come back in source order.
pub fn all_pairs(graph: &Graph, capacity: Capacity) -> Result<AllPairs> {
    graph.check_costs(capacity)?;
    let potential = compute_potential(graph)?;
    all_pairs_with(graph, capacity, &potential)
}

pub fn all_pairs_with(graph: &Graph, capacity: Capacity, potential: &Potential) -> Result<AllPairs> {
    graph.check_costs(capacity)?;
    check_potential(graph, potential.values())?;
    let battery = BatteryConfig::full(capacity);
    let rows = (0..graph.n())
        .into_par_iter()
        .map(|s| {
            let labels = run_energetic_dijkstra::<_, DefaultHeap>(graph, potential.values(), capacity, s);
            SolveResult::from_parts(s, battery, labels.energy, labels.pred, labels.scans)
        })
        .collect();
    Ok(AllPairs { rows })
}
