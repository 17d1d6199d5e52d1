use std::collections::VecDeque;

use super::{cycle_from_preds, Labels, NegativeCycleReport, Pred, SolveResult};
use crate::energy::{BatteryConfig, Capacity};
use crate::error::{Error, Result};
use crate::graph::{Graph, Network};

/// Energetic Bellman-Ford from `source`, starting fully charged.
///
/// Costs must already lie in `[-B, B]`. Fails with a negative-cycle report
/// if some label still improves after `n - 1` passes.
///
/// Labels are clamped, so a negative cycle can stop paying off after a few
/// laps. Such a cycle is still reported when it leaves a loop in the
/// predecessor graph. A cycle that never improves a label (it only tops up
/// a battery that is already full) goes unreported and does not affect the
/// result.
pub fn e_bellman_ford(graph: &Graph, capacity: Capacity, source: usize) -> Result<SolveResult> {
    graph.check_vertex(source)?;
    graph.check_costs(capacity)?;
    let labels = run_energetic_bf(graph, capacity, source).map_err(Error::NegativeCycle)?;
    Ok(SolveResult::from_parts(
        source,
        BatteryConfig::full(capacity),
        labels.energy,
        labels.pred,
        labels.scans,
    ))
}

/// FIFO label-correcting scan with passes delimited by a running count of
/// the vertices queued during the previous pass.
pub(crate) fn run_energetic_bf<N: Network + ?Sized>(
    net: &N,
    capacity: Capacity,
    source: usize,
) -> Result<Labels, NegativeCycleReport> {
    let n = net.vertex_count();
    let mut labels = Labels::new(n, source);
    let mut queued = vec![false; n];
    let mut queue = VecDeque::with_capacity(n);
    queue.push_back(source);
    queued[source] = true;

    let mut pass = 0usize;
    let mut left_in_pass = 1usize;
    while let Some(u) = queue.pop_front() {
        queued[u] = false;
        labels.scans[u] += 1;
        let du = labels.energy[u];
        for arc in net.out_arcs(u) {
            let v = arc.vertex;
            let candidate = capacity.step(du, arc.cost);
            if candidate < labels.energy[v] {
                labels.energy[v] = candidate;
                labels.pred[v] = Some(Pred {
                    vertex: u,
                    arc: arc.id,
                    cost: arc.cost,
                });
                if pass >= n {
                    return Err(cycle_from_preds(&labels.pred, v)
                        .or_else(|| standard_negative_cycle(net, Some(source)))
                        .expect("an improvement after n passes implies a reachable negative cycle"));
                }
                if !queued[v] {
                    queued[v] = true;
                    queue.push_back(v);
                }
            }
        }
        left_in_pass -= 1;
        if left_in_pass == 0 {
            pass += 1;
            left_in_pass = queue.len();
        }
    }
    if let Some(v) = vertex_on_pred_cycle(&labels.pred) {
        return Err(cycle_from_preds(&labels.pred, v)
            .or_else(|| standard_negative_cycle(net, Some(source)))
            .expect("a predecessor cycle is negative"));
    }
    Ok(labels)
}

/// A vertex on a cycle of the predecessor graph, if there is one.
///
/// Clamping can stop a negative cycle from improving labels after a few
/// laps, so the scan may settle while `pred` still loops. Every such loop
/// is a negative cycle reachable from the source.
fn vertex_on_pred_cycle(pred: &[Option<Pred>]) -> Option<usize> {
    const FRESH: u8 = 0;
    const OPEN: u8 = 1;
    const DONE: u8 = 2;
    let mut state = vec![FRESH; pred.len()];
    let mut trail = Vec::new();
    for v in 0..pred.len() {
        let mut at = v;
        while state[at] == FRESH {
            state[at] = OPEN;
            trail.push(at);
            match pred[at] {
                Some(p) => at = p.vertex,
                None => break,
            }
        }
        if state[at] == OPEN && pred[at].is_some() {
            return Some(at);
        }
        for w in trail.drain(..) {
            state[w] = DONE;
        }
    }
    None
}

/// Plain (unclamped) FIFO Bellman-Ford from a virtual super-source joined
/// to every vertex by a zero-cost arc. Returns distances `δ(virtual, v)`.
pub(crate) fn standard_distances_from_all<N: Network + ?Sized>(
    net: &N,
) -> Result<Vec<i128>, NegativeCycleReport> {
    let n = net.vertex_count();
    let mut dist = vec![0i128; n];
    let mut pred: Vec<Option<Pred>> = vec![None; n];
    let mut queued = vec![true; n];
    let mut queue: VecDeque<usize> = (0..n).collect();

    // The super-source scan is pass 0; the initial queue is pass 1.
    let mut pass = 1usize;
    let mut left_in_pass = n;
    while let Some(u) = queue.pop_front() {
        queued[u] = false;
        let du = dist[u];
        for arc in net.out_arcs(u) {
            let v = arc.vertex;
            let candidate = du + arc.cost as i128;
            if candidate < dist[v] {
                dist[v] = candidate;
                pred[v] = Some(Pred {
                    vertex: u,
                    arc: arc.id,
                    cost: arc.cost,
                });
                if pass > n {
                    return Err(cycle_from_preds(&pred, v)
                        .or_else(|| standard_negative_cycle(net, None))
                        .expect("an improvement after n + 1 passes implies a negative cycle"));
                }
                if !queued[v] {
                    queued[v] = true;
                    queue.push_back(v);
                }
            }
        }
        left_in_pass -= 1;
        if left_in_pass == 0 {
            pass += 1;
            left_in_pass = queue.len();
        }
    }
    Ok(dist)
}

/// Textbook round-based Bellman-Ford with plain `+`, used to locate a
/// negative cycle. Starts from `source`, or from every vertex at distance
/// 0 when `source` is `None`.
///
/// If some arc still relaxes in round `n`, walking `n` predecessor steps
/// back from its head lands on a cycle of the predecessor graph, and every
/// such cycle is negative.
pub(crate) fn standard_negative_cycle<N: Network + ?Sized>(
    net: &N,
    source: Option<usize>,
) -> Option<NegativeCycleReport> {
    let n = net.vertex_count();
    let mut dist: Vec<Option<i128>> = match source {
        Some(s) => {
            let mut d = vec![None; n];
            d[s] = Some(0);
            d
        }
        None => vec![Some(0); n],
    };
    let mut pred: Vec<Option<Pred>> = vec![None; n];
    let mut last = None;
    for _ in 0..n {
        last = None;
        for u in 0..n {
            let Some(du) = dist[u] else { continue };
            for arc in net.out_arcs(u) {
                let candidate = du + arc.cost as i128;
                if dist[arc.vertex].is_none_or(|dv| candidate < dv) {
                    dist[arc.vertex] = Some(candidate);
                    pred[arc.vertex] = Some(Pred {
                        vertex: u,
                        arc: arc.id,
                        cost: arc.cost,
                    });
                    last = Some(arc.vertex);
                }
            }
        }
        last?;
    }
    let mut at = last?;
    for _ in 0..n {
        at = pred[at]?.vertex;
    }
    cycle_from_preds(&pred, at)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::energy::Energy;

    fn cap(b: i64) -> Capacity {
        Capacity::new(b).unwrap()
    }

    #[test]
    fn single_arc() {
        let g = Graph::from_triples(2, &[(0, 1, 5)]).unwrap();
        let r = e_bellman_ford(&g, cap(10), 0).unwrap();
        assert_eq!(r.energies(), &[Energy::ZERO, Energy::Finite(5)]);
        assert_eq!(r.pred(1).unwrap().vertex, 0);
        assert_eq!(r.pred(0), None);
    }

    #[test]
    fn mountain_pass_costs_nothing() {
        let g = Graph::from_triples(3, &[(0, 1, 3), (1, 2, -3)]).unwrap();
        let r = e_bellman_ford(&g, cap(3), 0).unwrap();
        assert_eq!(r.energy(2), Energy::ZERO);
        assert_eq!(r.path_to(2).unwrap().arcs(), &[0, 1]);
    }

    #[test]
    fn both_routes_blocked() {
        // direct arc too expensive, detour overdraws halfway
        let g = Graph::from_triples(3, &[(0, 2, 4), (0, 1, 2), (1, 2, 2)]).unwrap();
        let g = crate::graph::preprocess_costs(&g, cap(3)).unwrap();
        let r = e_bellman_ford(&g, cap(3), 0).unwrap();
        assert_eq!(r.energy(1), Energy::Finite(2));
        assert_eq!(r.energy(2), Energy::PosInf);
        assert!(r.path_to(2).is_none());
    }

    #[test]
    fn improvement_along_longer_path() {
        // 0 -> 1 costs 3 directly, or 0 via a downhill then uphill: 0 -> 2 (-1), 2 -> 1 (2)
        let g = Graph::from_triples(3, &[(0, 1, 3), (0, 2, -1), (2, 1, 2)]).unwrap();
        let r = e_bellman_ford(&g, cap(5), 0).unwrap();
        // 0 ⊕ -1 = 0, 0 ⊕ 2 = 2
        assert_eq!(r.energy(1), Energy::Finite(2));
        assert_eq!(r.pred(1).unwrap().vertex, 2);
    }

    #[test]
    fn rejects_unprocessed_costs() {
        let g = Graph::from_triples(2, &[(0, 1, 9)]).unwrap();
        assert!(matches!(
            e_bellman_ford(&g, cap(3), 0),
            Err(Error::CostOutOfRange { arc: 0, .. })
        ));
        assert!(matches!(
            e_bellman_ford(&g, cap(9), 2),
            Err(Error::VertexOutOfRange { vertex: 2, .. })
        ));
    }

    #[test]
    fn detects_traversable_negative_cycle() {
        // arrive at 1 nearly empty; each lap of 1 -> 2 -> 1 recovers one unit,
        // so labels keep improving long after n passes
        let g = Graph::from_triples(3, &[(0, 1, 50), (1, 2, -1), (2, 1, 0)]).unwrap();
        let err = e_bellman_ford(&g, cap(50), 0).unwrap_err();
        let Error::NegativeCycle(report) = err else {
            panic!("expected a negative cycle, got {err:?}");
        };
        assert!(report.is_consistent(&g));
        assert_eq!(report.total_cost, -1);
        let mut arcs = report.cycle.clone();
        arcs.sort();
        assert_eq!(arcs, vec![1, 2]);
    }

    #[test]
    fn cycle_that_only_tops_up_settles() {
        // the same lap is negative, but the battery is already full when it
        // is reached, so no label improves and the solve succeeds
        let g = Graph::from_triples(3, &[(0, 1, 2), (1, 2, -3), (2, 1, 2)]).unwrap();
        let r = e_bellman_ford(&g, cap(3), 0).unwrap();
        assert_eq!(r.energies(), &[Energy::ZERO, Energy::Finite(2), Energy::ZERO]);
    }

    #[test]
    fn settled_cycle_in_predecessors_is_reported() {
        // two laps of 1 -> 2 -> 1 lift vertex 1 from 2 to 1, then the
        // clamp at full battery stops further gains
        let g = Graph::from_triples(3, &[(0, 1, 2), (1, 2, -3), (2, 1, 1)]).unwrap();
        let Err(Error::NegativeCycle(report)) = e_bellman_ford(&g, cap(3), 0) else {
            panic!("expected a negative cycle");
        };
        assert!(report.is_consistent(&g));
        assert_eq!(report.total_cost, -2);
    }

    #[test]
    fn unreachable_negative_cycle_is_ignored() {
        let g = Graph::from_triples(4, &[(0, 1, 1), (2, 3, -2), (3, 2, 1)]).unwrap();
        let r = e_bellman_ford(&g, cap(3), 0).unwrap();
        assert_eq!(r.energy(2), Energy::PosInf);
    }

    #[test]
    fn standard_cycle_finder() {
        let g = Graph::from_triples(4, &[(0, 1, 1), (1, 2, -4), (2, 3, 1), (3, 1, 1)]).unwrap();
        let report = standard_negative_cycle(&g, Some(0)).unwrap();
        assert!(report.is_consistent(&g));
        assert_eq!(report.total_cost, -2);
        assert!(standard_negative_cycle(&g, None).is_some());

        let dag = Graph::from_triples(3, &[(0, 1, -5), (1, 2, -5)]).unwrap();
        assert!(standard_negative_cycle(&dag, None).is_none());
        assert_eq!(standard_distances_from_all(&dag).unwrap(), vec![0, -5, -10]);
        assert!(standard_distances_from_all(&g).is_err());
    }
}
