use super::bellman_ford::standard_distances_from_all;
use crate::error::{Error, Result};
use crate::graph::{Graph, Network};

/// Per-vertex potential `p` with `c(uv) - p(u) + p(v) >= 0` on every arc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Potential {
    values: Vec<i64>,
}

impl Potential {
    /// Validates `values` against every arc of `graph`.
    pub fn new(graph: &Graph, values: Vec<i64>) -> Result<Self> {
        check_potential(graph, &values)?;
        Ok(Potential { values })
    }

    /// `p ≡ 0`, valid exactly when no arc cost is negative.
    pub fn zero(graph: &Graph) -> Result<Self> {
        Potential::new(graph, vec![0; graph.n()])
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn get(&self, v: usize) -> i64 {
        self.values[v]
    }

    /// `-p`, a valid potential for the reversed graph.
    pub fn negated(&self) -> Vec<i64> {
        self.values.iter().map(|&p| -p).collect()
    }
}

pub(crate) fn check_potential<N: Network + ?Sized>(net: &N, p: &[i64]) -> Result<()> {
    if p.len() != net.vertex_count() {
        return Err(Error::PotentialLength {
            expected: net.vertex_count(),
            got: p.len(),
        });
    }
    for u in 0..net.vertex_count() {
        for arc in net.out_arcs(u) {
            let reduced = arc.cost as i128 - p[u] as i128 + p[arc.vertex] as i128;
            if reduced < 0 {
                return Err(Error::InvalidPotential { arc: arc.id, reduced });
            }
        }
    }
    Ok(())
}

/// `p(v) = -δ(x, v)` for a virtual vertex `x` joined to every vertex by a
/// zero-cost arc, computed with plain Bellman-Ford.
pub fn compute_potential(graph: &Graph) -> Result<Potential> {
    let dist = standard_distances_from_all(graph).map_err(Error::NegativeCycle)?;
    let values = dist
        .iter()
        .enumerate()
        .map(|(v, &d)| i64::try_from(-d).map_err(|_| Error::PotentialOverflow(v)))
        .collect::<Result<Vec<_>>>()?;
    Potential::new(graph, values)
}
