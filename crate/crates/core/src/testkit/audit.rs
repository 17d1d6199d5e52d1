use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::generate::{generate, GeneratorSpec, Instance};
use super::oracle::{oracle_costs_from, oracle_min_initial};
use crate::energy::BatteryConfig;
use crate::error::{Error, Result};
use crate::graph::{preprocess_costs, Graph};
use crate::solvers::{compute_potential, min_initial_charge, single_source, verify_fixpoint, Algorithm};

/// Disagreements found by [`audit`]; empty when every solver matches the
/// oracles.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Audit {
    pub mismatches: Vec<String>,
    /// Whether e-Dijkstra was compared (it needs a valid potential).
    pub dijkstra_checked: bool,
}

impl Audit {
    pub fn agrees(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Runs every solver from every source of a small graph and compares the
/// labels, minimum initial charges and fixpoint certificates with the
/// brute-force oracles. Costs are preprocessed first.
///
/// Fails on a negative cycle that e-BF reports, and on graphs too large
/// for the oracles. Without such a report the e-BF tree paths are simple,
/// so the simple-path oracles apply even if some negative cycle exists.
pub fn audit(graph: &Graph, battery: BatteryConfig) -> Result<Audit> {
    let capacity = battery.capacity();
    let g = preprocess_costs(graph, capacity)?;
    let mut out = Audit {
        dijkstra_checked: compute_potential(&g).is_ok(),
        ..Audit::default()
    };
    for s in 0..g.n() {
        let bf = single_source(&g, battery, s, Algorithm::BellmanFord)?;
        let expected = oracle_costs_from(&g, battery, s)?;
        if bf.energies() != expected.as_slice() {
            out.mismatches.push(format!("e-BF from {}: {:?} vs oracle {:?}", s + 1, bf.energies(), expected));
        }
        if let Err(v) = verify_fixpoint(&g, &bf) {
            out.mismatches.push(format!("e-BF from {} fails the fixpoint check: {v}", s + 1));
        }
        if out.dijkstra_checked {
            let dj = single_source(&g, battery, s, Algorithm::Dijkstra)?;
            if dj.energies() != bf.energies() {
                out.mismatches.push(format!("e-Dijkstra from {} differs from e-BF", s + 1));
            }
            if dj.scans().iter().any(|&k| k > 1) {
                out.mismatches.push(format!("e-Dijkstra from {} scanned a vertex twice", s + 1));
            }
        }
    }
    for t in 0..g.n() {
        let beta = min_initial_charge(&g, capacity, t, Algorithm::BellmanFord)?;
        for s in 0..g.n() {
            let want = oracle_min_initial(&g, capacity, s, t)?;
            if beta.charge(s) != want {
                out.mismatches.push(format!(
                    "minimum initial charge {} -> {}: {} vs oracle {}",
                    s + 1,
                    t + 1,
                    beta.charge(s),
                    want
                ));
            }
        }
    }
    Ok(out)
}

/// A small generated instance: `n` in `2..=max_n`, up to `max_m` arcs,
/// `B` in `1..=max_b`, with potential and reduced-cost ranges drawn in
/// `0..=B`. Deterministic in `seed`.
pub fn small_instance(seed: u64, max_n: usize, max_m: usize, max_b: i64) -> Result<Instance> {
    if max_n < 2 || max_b < 1 {
        return Err(Error::InfeasibleSpec(format!("need max_n >= 2 and max_b >= 1, got {max_n} and {max_b}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(2..=max_n);
    let m = rng.random_range(0..=max_m.min(n * (n - 1)));
    let capacity = rng.random_range(1..=max_b);
    let spec = GeneratorSpec {
        potential_range: rng.random_range(0..=capacity),
        reduced_cost_range: rng.random_range(0..=capacity),
        ..GeneratorSpec::new(n, m, capacity, rng.random())
    };
    generate(&spec)
}
