use super::potential::check_potential;
use super::{Labels, Potential, Pred, SolveResult};
use crate::energy::{BatteryConfig, Capacity, Energy};
use crate::error::Result;
use crate::graph::{Graph, Network};
use crate::heap::{AddressableHeap, DefaultHeap, Key};

/// Energetic Dijkstra from `source` with heap keys `d(v) + p(v)`.
///
/// The potential is checked against every arc before the search starts.
pub fn e_dijkstra(graph: &Graph, potential: &Potential, capacity: Capacity, source: usize) -> Result<SolveResult> {
    e_dijkstra_with::<DefaultHeap>(graph, potential, capacity, source)
}

/// [`e_dijkstra`] with a caller-chosen heap.
pub fn e_dijkstra_with<H: AddressableHeap>(
    graph: &Graph,
    potential: &Potential,
    capacity: Capacity,
    source: usize,
) -> Result<SolveResult> {
    graph.check_vertex(source)?;
    graph.check_costs(capacity)?;
    check_potential(graph, potential.values())?;
    let labels = run_energetic_dijkstra::<_, H>(graph, potential.values(), capacity, source);
    Ok(SolveResult::from_parts(
        source,
        BatteryConfig::full(capacity),
        labels.energy,
        labels.pred,
        labels.scans,
    ))
}

/// Vertices enter the heap when their label first becomes finite. With a
/// valid potential each vertex is deleted at most once.
pub(crate) fn run_energetic_dijkstra<N: Network + ?Sized, H: AddressableHeap>(
    net: &N,
    potential: &[i64],
    capacity: Capacity,
    source: usize,
) -> Labels {
    let n = net.vertex_count();
    let mut labels = Labels::new(n, source);
    let mut heap = H::with_items(n);
    heap.insert(source, potential[source] as Key);

    while let Some((u, _)) = heap.pop_min() {
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
                let Energy::Finite(dv) = candidate else {
                    unreachable!("a strict improvement is finite")
                };
                heap.push_or_decrease(v, dv as Key + potential[v] as Key);
            }
        }
    }
    labels
}
