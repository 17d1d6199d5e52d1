//! Brute-force answers by enumerating simple paths and simulating the
//! battery charge directly, with no clamped arithmetic and no labels.

use crate::energy::{BatteryConfig, Capacity, Energy};
use crate::error::{Error, Result};
use crate::graph::{Graph, Network};

/// Largest graph the enumerating oracles accept.
pub const ORACLE_LIMIT: usize = 12;

fn guard(graph: &Graph) -> Result<()> {
    if graph.n() > ORACLE_LIMIT {
        return Err(Error::OracleTooLarge {
            n: graph.n(),
            limit: ORACLE_LIMIT,
        });
    }
    Ok(())
}

struct Walk<'g> {
    graph: &'g Graph,
    capacity: i64,
    on_path: Vec<bool>,
    /// Highest charge seen on arrival at each vertex.
    best: Vec<Option<i64>>,
    stop_at: Option<usize>,
}

impl Walk<'_> {
    /// Returns true once `stop_at` is reached.
    fn visit(&mut self, u: usize, charge: i64) -> bool {
        if self.best[u].is_none_or(|b| charge > b) {
            self.best[u] = Some(charge);
        }
        if self.stop_at == Some(u) {
            return true;
        }
        self.on_path[u] = true;
        for arc in self.graph.out_arcs(u) {
            if self.on_path[arc.vertex] || charge < arc.cost {
                continue;
            }
            let next = (charge - arc.cost).min(self.capacity);
            if self.visit(arc.vertex, next) {
                self.on_path[u] = false;
                return true;
            }
        }
        self.on_path[u] = false;
        false
    }
}

fn highest_arrival_charges(graph: &Graph, capacity: Capacity, source: usize, initial: i64, stop_at: Option<usize>) -> Vec<Option<i64>> {
    let mut walk = Walk {
        graph,
        capacity: capacity.get(),
        on_path: vec![false; graph.n()],
        best: vec![None; graph.n()],
        stop_at,
    };
    walk.visit(source, initial);
    walk.best
}

/// `δ_{B,b}(s, t)` for every `t`: `b` minus the highest charge on arrival
/// over all simple paths, trying every parallel arc.
pub fn oracle_costs_from(graph: &Graph, battery: BatteryConfig, source: usize) -> Result<Vec<Energy>> {
    guard(graph)?;
    graph.check_vertex(source)?;
    let best = highest_arrival_charges(graph, battery.capacity(), source, battery.initial(), None);
    Ok(best
        .into_iter()
        .map(|c| c.map_or(Energy::PosInf, |c| Energy::Finite(battery.initial() - c)))
        .collect())
}

/// Minimum of the path energetic cost over all simple `s`-`t` paths,
/// starting fully charged.
pub fn oracle_min_energetic(graph: &Graph, capacity: Capacity, s: usize, t: usize) -> Result<Energy> {
    graph.check_vertex(t)?;
    Ok(oracle_costs_from(graph, BatteryConfig::full(capacity), s)?[t])
}

/// Whether some simple `s`-`t` path can be driven starting with charge `b`.
pub fn oracle_reachable(graph: &Graph, capacity: Capacity, s: usize, t: usize, b: i64) -> Result<bool> {
    guard(graph)?;
    graph.check_vertex(s)?;
    graph.check_vertex(t)?;
    Ok(highest_arrival_charges(graph, capacity, s, b, Some(t))[t].is_some())
}

/// Smallest `b` in `0..=B` from which `t` can be reached, by bisection.
///
/// Feasibility is monotone in `b`: a higher start charge keeps the charge
/// at every point of a fixed path at least as high.
pub fn oracle_min_initial(graph: &Graph, capacity: Capacity, s: usize, t: usize) -> Result<Energy> {
    if !oracle_reachable(graph, capacity, s, t, capacity.get())? {
        return Ok(Energy::PosInf);
    }
    let (mut lo, mut hi) = (0, capacity.get());
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if oracle_reachable(graph, capacity, s, t, mid)? {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(Energy::Finite(lo))
}

/// Plain shortest-path distances from `s`, ignoring the battery; `None`
/// for unreachable vertices. Fails if a negative cycle is reachable.
pub fn standard_distances(graph: &Graph, s: usize) -> Result<Vec<Option<i128>>> {
    graph.check_vertex(s)?;
    let n = graph.n();
    let mut dist: Vec<Option<i128>> = vec![None; n];
    dist[s] = Some(0);
    for round in 0..=n {
        let mut changed = false;
        for a in graph.arcs() {
            let Some(du) = dist[a.tail] else { continue };
            let cand = du + a.cost as i128;
            if dist[a.head].is_none_or(|dv| cand < dv) {
                dist[a.head] = Some(cand);
                changed = true;
            }
        }
        if !changed {
            return Ok(dist);
        }
        if round == n {
            break;
        }
    }
    let report = crate::solvers::standard_negative_cycle(graph, Some(s))
        .expect("distances still falling after n rounds");
    Err(Error::NegativeCycle(report))
}
