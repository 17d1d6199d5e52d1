//! Paths and the two folds over their arc costs.

use crate::energy::{Capacity, Energy};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A walk starting at `start` that follows `arcs` (graph arc ids) in order.
/// Arc ids rather than vertex pairs keep parallel arcs unambiguous.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    start: usize,
    arcs: Vec<usize>,
}

impl Path {
    pub fn new(graph: &Graph, start: usize, arcs: Vec<usize>) -> Result<Self> {
        graph.check_vertex(start)?;
        let mut at = start;
        for &id in &arcs {
            let arc = graph.arc(id).ok_or(Error::ArcOutOfRange(id))?;
            if arc.tail != at {
                return Err(Error::DisconnectedPath { arc: id, expected: at });
            }
            at = arc.head;
        }
        Ok(Path { start, arcs })
    }

    pub(crate) fn from_parts(start: usize, arcs: Vec<usize>) -> Self {
        Path { start, arcs }
    }

    pub fn empty(start: usize) -> Self {
        Path { start, arcs: Vec::new() }
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn arcs(&self) -> &[usize] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn vertices(&self, graph: &Graph) -> Vec<usize> {
        let mut vs = Vec::with_capacity(self.arcs.len() + 1);
        vs.push(self.start);
        vs.extend(self.arcs.iter().map(|&id| graph.arcs()[id].head));
        vs
    }

    pub fn end(&self, graph: &Graph) -> usize {
        self.arcs.last().map_or(self.start, |&id| graph.arcs()[id].head)
    }

    pub fn costs<'g>(&'g self, graph: &'g Graph) -> impl DoubleEndedIterator<Item = i64> + 'g {
        self.arcs.iter().map(move |&id| graph.arcs()[id].cost)
    }
}

/// Left fold `((0 ⊕ c1) ⊕ c2) ⊕ … ⊕ ck` starting from depletion `start`.
pub fn deplete_from(start: Energy, costs: impl IntoIterator<Item = i64>, capacity: Capacity) -> Energy {
    let mut d = start;
    for c in costs {
        d = capacity.step(d, c);
        if d == Energy::PosInf {
            break;
        }
    }
    d
}

/// Right fold `c1 ⊕ (c2 ⊕ (… ⊕ (ck ⊕ 0)))`.
pub fn initial_charge_for<I>(costs: I, capacity: Capacity) -> Energy
where
    I: IntoIterator<Item = i64>,
    I::IntoIter: DoubleEndedIterator,
{
    costs
        .into_iter()
        .rev()
        .fold(Energy::ZERO, |acc, c| capacity.oplus(Energy::Finite(c), acc))
}

/// Depletion at the end of `path` when leaving its start fully charged,
/// or `PosInf` if some arc cannot be driven.
pub fn path_energetic_cost(path: &Path, graph: &Graph, capacity: Capacity) -> Energy {
    deplete_from(Energy::ZERO, path.costs(graph), capacity)
}

/// Minimum initial charge with which `path` can be driven, or `PosInf` if
/// no charge up to `B` suffices.
pub fn path_initial_charge(path: &Path, graph: &Graph, capacity: Capacity) -> Energy {
    initial_charge_for(path.costs(graph), capacity)
}
