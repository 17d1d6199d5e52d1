//! Single-source, single-target and all-pairs energetic shortest paths.
//!
//! Two label algorithms share one relaxation rule: a label improves only
//! when `d(u) ⊕ c(uv) < d(v)`. [`e_bellman_ford`] scans vertices from a FIFO
//! queue; [`e_dijkstra`] scans them from a heap keyed by `d(v) + p(v)` for
//! a valid potential `p`, which makes it label-setting even with negative
//! arc costs.

mod bellman_ford;
mod dijkstra;
mod potential;
mod reductions;
mod verify;

use std::fmt;

pub use bellman_ford::e_bellman_ford;
pub use dijkstra::{e_dijkstra, e_dijkstra_with};
pub use potential::{compute_potential, Potential};
pub use reductions::{
    all_pairs, all_pairs_with, max_final_charge, min_initial_charge, min_initial_charge_with,
    single_source, single_source_with, AllPairs, InitialCharges,
};
pub use verify::{verify_fixpoint, FixpointViolation};

pub(crate) use bellman_ford::{run_energetic_bf, standard_negative_cycle};

use crate::energy::BatteryConfig;
use crate::energy::Energy;
use crate::graph::Graph;
use crate::path::Path;

/// Which label algorithm to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Algorithm {
    BellmanFord,
    Dijkstra,
    /// Dijkstra, skipping the potential computation (`p ≡ 0`) when no arc
    /// cost is negative.
    #[default]
    Auto,
}

/// The arc through which a label was last improved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Pred {
    pub vertex: usize,
    pub arc: usize,
    pub cost: i64,
}

/// Raw output of a label algorithm on some network.
#[derive(Debug, Clone)]
pub(crate) struct Labels {
    pub energy: Vec<Energy>,
    pub pred: Vec<Option<Pred>>,
    pub scans: Vec<u32>,
}

impl Labels {
    pub fn new(n: usize, source: usize) -> Self {
        let mut energy = vec![Energy::PosInf; n];
        energy[source] = Energy::ZERO;
        Labels {
            energy,
            pred: vec![None; n],
            scans: vec![0; n],
        }
    }
}

/// Energetic costs `δ_{B,b}(s, ·)` with a tree of minimum energetic paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    source: usize,
    battery: BatteryConfig,
    energy: Vec<Energy>,
    pred: Vec<Option<Pred>>,
    scans: Vec<u32>,
}

impl SolveResult {
    /// Assembles a result without checking it; see [`verify_fixpoint`].
    pub fn from_parts(
        source: usize,
        battery: BatteryConfig,
        energy: Vec<Energy>,
        pred: Vec<Option<Pred>>,
        scans: Vec<u32>,
    ) -> Self {
        SolveResult {
            source,
            battery,
            energy,
            pred,
            scans,
        }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn battery(&self) -> BatteryConfig {
        self.battery
    }

    pub fn energy(&self, v: usize) -> Energy {
        self.energy[v]
    }

    pub fn energies(&self) -> &[Energy] {
        &self.energy
    }

    pub fn pred(&self, v: usize) -> Option<Pred> {
        self.pred[v]
    }

    pub fn preds(&self) -> &[Option<Pred>] {
        &self.pred
    }

    /// Number of times each vertex was scanned.
    pub fn scans(&self) -> &[u32] {
        &self.scans
    }

    /// Charge left on arrival: `b - δ_{B,b}(s, v)`, or `NegInf` if `v`
    /// cannot be reached.
    pub fn final_charge(&self, v: usize) -> Energy {
        match self.energy[v] {
            Energy::Finite(k) => Energy::Finite(self.battery.initial() - k),
            _ => Energy::NegInf,
        }
    }

    /// The tree path from the source to `v`, if `v` is reachable.
    pub fn path_to(&self, v: usize) -> Option<Path> {
        if !self.energy[v].is_finite() {
            return None;
        }
        let mut arcs = Vec::new();
        let mut at = v;
        while let Some(p) = self.pred[at] {
            arcs.push(p.arc);
            at = p.vertex;
            if arcs.len() > self.energy.len() {
                return None;
            }
        }
        (at == self.source).then(|| {
            arcs.reverse();
            Path::from_parts(self.source, arcs)
        })
    }

    pub(crate) fn take_energy(self) -> Vec<Energy> {
        self.energy
    }
}

/// A negative cycle found while solving.
///
/// Certifies that the arcs form a closed walk with negative total cost and
/// that the cycle is reachable from the solve's source. Whether the vehicle
/// could actually drive the cycle is not certified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegativeCycleReport {
    /// Arc ids in driving order.
    pub cycle: Vec<usize>,
    /// `vertices[i]` is the tail of `cycle[i]`.
    pub vertices: Vec<usize>,
    pub total_cost: i128,
}

impl NegativeCycleReport {
    /// Checks the report against `graph`: closed, consistent, negative.
    pub fn is_consistent(&self, graph: &Graph) -> bool {
        if self.cycle.is_empty() || self.cycle.len() != self.vertices.len() {
            return false;
        }
        let mut total = 0i128;
        for (i, &id) in self.cycle.iter().enumerate() {
            let Some(arc) = graph.arc(id) else {
                return false;
            };
            let next = self.vertices[(i + 1) % self.vertices.len()];
            if arc.tail != self.vertices[i] || arc.head != next {
                return false;
            }
            total += arc.cost as i128;
        }
        total == self.total_cost && total < 0
    }
}

impl fmt::Display for NegativeCycleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "negative cycle of cost {} through vertices", self.total_cost)?;
        for v in &self.vertices {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

/// Recovers a cycle by walking `pred` back from `start`; `None` if the walk
/// leaves the tree or the cycle found is not negative.
pub(crate) fn cycle_from_preds(pred: &[Option<Pred>], start: usize) -> Option<NegativeCycleReport> {
    let mut seen = vec![usize::MAX; pred.len()];
    let mut at = start;
    let mut step = 0;
    while seen[at] == usize::MAX {
        seen[at] = step;
        step += 1;
        at = pred[at]?.vertex;
    }
    // `at` is on the cycle; walk it once more to collect arcs.
    let mut cycle = Vec::new();
    let mut vertices = Vec::new();
    let mut total = 0i128;
    let mut v = at;
    loop {
        let p = pred[v]?;
        cycle.push(p.arc);
        vertices.push(p.vertex);
        total += p.cost as i128;
        v = p.vertex;
        if v == at {
            break;
        }
    }
    cycle.reverse();
    vertices.reverse();
    (total < 0).then_some(NegativeCycleReport {
        cycle,
        vertices,
        total_cost: total,
    })
}
