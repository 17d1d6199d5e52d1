//! Seeded instances built from a hidden potential, so they never contain a
//! negative cycle.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::energy::Capacity;
use crate::error::{Error, Result};
use crate::graph::{preprocess_costs, Arc, Graph};
use crate::solvers::Potential;

/// How arc endpoints are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Topology {
    /// Tail and head uniform over all vertices.
    #[default]
    Uniform,
    /// Vertices on a ring; each head lies within `span` steps of its tail
    /// in either direction. Long shortest paths, like a road network.
    Ring { span: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub n: usize,
    pub m: usize,
    pub capacity: i64,
    /// Potentials are drawn from `[-P, P]`.
    pub potential_range: i64,
    /// Reduced costs are drawn from `[0, R]`.
    pub reduced_cost_range: i64,
    pub seed: u64,
    /// No self-loops and no parallel arcs.
    pub simple: bool,
    pub topology: Topology,
}

impl GeneratorSpec {
    pub fn new(n: usize, m: usize, capacity: i64, seed: u64) -> Self {
        GeneratorSpec {
            n,
            m,
            capacity,
            potential_range: capacity,
            reduced_cost_range: capacity,
            seed,
            simple: true,
            topology: Topology::Uniform,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub capacity: Capacity,
    /// Valid for `graph`: every reduced cost is non-negative.
    pub potential: Potential,
}

const MAGNITUDE_LIMIT: i64 = 1 << 60;

fn check(spec: &GeneratorSpec) -> Result<()> {
    let bad = |why: String| Err(Error::InfeasibleSpec(why));
    if !(0..=MAGNITUDE_LIMIT).contains(&spec.potential_range) || !(0..=MAGNITUDE_LIMIT).contains(&spec.reduced_cost_range) {
        return bad(format!(
            "ranges must lie in 0..=2^60, got P={} R={}",
            spec.potential_range, spec.reduced_cost_range
        ));
    }
    if spec.m > 0 && spec.n < 2 {
        return bad(format!("{} arcs need at least 2 vertices", spec.m));
    }
    if let Topology::Ring { span } = spec.topology {
        if span == 0 {
            return bad("ring span must be positive".into());
        }
    }
    if spec.simple {
        let room = spec.n as u128 * (spec.n as u128).saturating_sub(1);
        let room = match spec.topology {
            Topology::Uniform => room,
            Topology::Ring { .. } if spec.n < 2 => 0,
            Topology::Ring { span } => (spec.n as u128) * candidates_per_tail(spec.n, span) as u128,
        };
        if spec.m as u128 > room {
            return bad(format!("{} simple arcs do not fit: at most {room}", spec.m));
        }
    }
    Ok(())
}

fn candidates_per_tail(n: usize, span: usize) -> usize {
    (2 * span).min(n - 1)
}

fn ring_head(n: usize, span: usize, tail: usize, k: usize) -> usize {
    // k indexes the heads tail+1..=tail+span, then tail-1..=tail-span
    let width = candidates_per_tail(n, span);
    let forward = width.div_ceil(2).min(span);
    if k < forward {
        (tail + 1 + k) % n
    } else {
        (tail + n - 1 - (k - forward)) % n
    }
}

fn draw_endpoints(spec: &GeneratorSpec, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let n = spec.n;
    if spec.m == 0 {
        return Vec::new();
    }
    let draw = |rng: &mut ChaCha8Rng| -> (usize, usize) {
        let u = rng.random_range(0..n);
        match spec.topology {
            Topology::Uniform => {
                let mut v = rng.random_range(0..n - 1);
                if v >= u {
                    v += 1;
                }
                (u, v)
            }
            Topology::Ring { span } => (u, ring_head(n, span, u, rng.random_range(0..candidates_per_tail(n, span)))),
        }
    };
    if !spec.simple {
        return (0..spec.m).map(|_| draw(rng)).collect();
    }
    let room = match spec.topology {
        Topology::Uniform => n * (n - 1),
        Topology::Ring { span } => n * candidates_per_tail(n, span),
    };
    if 2 * spec.m > room {
        let mut all: Vec<(usize, usize)> = match spec.topology {
            Topology::Uniform => (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect(),
            Topology::Ring { span } => (0..n)
                .flat_map(|u| (0..candidates_per_tail(n, span)).map(move |k| (u, ring_head(n, span, u, k))))
                .collect(),
        };
        all.shuffle(rng);
        all.truncate(spec.m);
        return all;
    }
    let mut seen = HashSet::with_capacity(spec.m);
    let mut out = Vec::with_capacity(spec.m);
    while out.len() < spec.m {
        let e = draw(rng);
        if seen.insert(e) {
            out.push(e);
        }
    }
    out
}

/// Draws `p(v)` in `[-P, P]` and `r(uv)` in `[0, R]`, sets
/// `c(uv) = r(uv) + p(u) - p(v)`, then clips costs into `[-B, B]`.
///
/// Every cycle costs the sum of its reduced costs, so none is negative.
/// Raising a cost keeps `p` valid; dropping an arc with `c > B` may leave
/// fewer than `m` arcs.
pub fn generate(spec: &GeneratorSpec) -> Result<Instance> {
    check(spec)?;
    let capacity = Capacity::new(spec.capacity)?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let p: Vec<i64> = (0..spec.n)
        .map(|_| rng.random_range(-spec.potential_range..=spec.potential_range))
        .collect();
    let arcs: Vec<Arc> = draw_endpoints(spec, &mut rng)
        .into_iter()
        .map(|(u, v)| Arc {
            tail: u,
            head: v,
            cost: rng.random_range(0..=spec.reduced_cost_range) + p[u] - p[v],
        })
        .collect();
    let graph = preprocess_costs(&Graph::new(spec.n, arcs)?, capacity)?;
    let potential = Potential::new(&graph, p)?;
    Ok(Instance {
        graph,
        capacity,
        potential,
    })
}

/// Arbitrary small graph: `m` arcs between distinct uniform endpoints
/// (parallel arcs allowed), costs uniform in `[-B, B]`. May contain
/// negative cycles.
pub fn random_graph(n: usize, m: usize, capacity: i64, seed: u64) -> Result<Graph> {
    if m > 0 && n < 2 {
        return Err(Error::InfeasibleSpec(format!("{m} arcs need at least 2 vertices")));
    }
    Capacity::new(capacity)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let arcs = (0..m)
        .map(|_| {
            let u = rng.random_range(0..n);
            let mut v = rng.random_range(0..n - 1);
            if v >= u {
                v += 1;
            }
            Arc {
                tail: u,
                head: v,
                cost: rng.random_range(-capacity..=capacity),
            }
        })
        .collect();
    Graph::new(n, arcs)
}
