//! Directed multigraphs with integer arc costs, plus the views the solvers
//! run on: the graph itself, its reversal, and a one-vertex source overlay.

use crate::energy::Capacity;
use crate::error::{Error, Result};

/// One stored arc `tail -> head` with its energy cost.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arc {
    pub tail: usize,
    pub head: usize,
    pub cost: i64,
}

impl Arc {
    pub fn new(tail: usize, head: usize, cost: i64) -> Self {
        Arc { tail, head, cost }
    }
}

/// An adjacency entry as seen from one endpoint. `id` indexes the arc in
/// the underlying [`Graph`], or is [`VIRTUAL_ARC`] for overlay arcs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Adjacent {
    pub vertex: usize,
    pub cost: i64,
    pub id: usize,
}

pub const VIRTUAL_ARC: usize = usize::MAX;

/// Anything the solvers can scan: a vertex count and the outgoing arcs of
/// each vertex.
pub trait Network {
    fn vertex_count(&self) -> usize;

    fn out_arcs(&self, u: usize) -> &[Adjacent];

    fn arc_total(&self) -> usize {
        (0..self.vertex_count()).map(|u| self.out_arcs(u).len()).sum()
    }
}

/// Immutable directed multigraph on vertices `0..n`.
///
/// Arcs keep their insertion order; parallel arcs and self-loops are
/// allowed. Both outgoing and incoming adjacency are stored so that the
/// reversed graph is a free view.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    arcs: Vec<Arc>,
    out_start: Vec<usize>,
    out: Vec<Adjacent>,
    in_start: Vec<usize>,
    inc: Vec<Adjacent>,
}

fn bucket(n: usize, arcs: &[Arc], key: impl Fn(&Arc) -> (usize, usize)) -> (Vec<usize>, Vec<Adjacent>) {
    let mut start = vec![0usize; n + 1];
    for a in arcs {
        start[key(a).0 + 1] += 1;
    }
    for i in 0..n {
        start[i + 1] += start[i];
    }
    let mut fill = start.clone();
    let mut adj = vec![
        Adjacent {
            vertex: 0,
            cost: 0,
            id: 0
        };
        arcs.len()
    ];
    for (id, a) in arcs.iter().enumerate() {
        let (from, to) = key(a);
        adj[fill[from]] = Adjacent {
            vertex: to,
            cost: a.cost,
            id,
        };
        fill[from] += 1;
    }
    (start, adj)
}

impl Graph {
    pub fn new(n: usize, arcs: Vec<Arc>) -> Result<Self> {
        for (i, a) in arcs.iter().enumerate() {
            for v in [a.tail, a.head] {
                if v >= n {
                    return Err(Error::EndpointOutOfRange { arc: i, vertex: v, n });
                }
            }
        }
        let (out_start, out) = bucket(n, &arcs, |a| (a.tail, a.head));
        let (in_start, inc) = bucket(n, &arcs, |a| (a.head, a.tail));
        Ok(Graph {
            n,
            arcs,
            out_start,
            out,
            in_start,
            inc,
        })
    }

    /// Convenience constructor from `(tail, head, cost)` triples.
    pub fn from_triples(n: usize, triples: &[(usize, usize, i64)]) -> Result<Self> {
        Graph::new(n, triples.iter().map(|&(u, v, c)| Arc::new(u, v, c)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, id: usize) -> Option<&Arc> {
        self.arcs.get(id)
    }

    pub fn in_arcs(&self, v: usize) -> &[Adjacent] {
        &self.inc[self.in_start[v]..self.in_start[v + 1]]
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Fails on the first arc whose cost lies outside `[-B, B]`.
    pub fn check_costs(&self, capacity: Capacity) -> Result<()> {
        match self.arcs.iter().position(|a| !capacity.admits(a.cost)) {
            None => Ok(()),
            Some(arc) => Err(Error::CostOutOfRange {
                arc,
                cost: self.arcs[arc].cost,
                capacity: capacity.get(),
            }),
        }
    }

    pub fn has_negative_cost(&self) -> bool {
        self.arcs.iter().any(|a| a.cost < 0)
    }

    /// The reversed graph as a borrowed view: every arc flipped, costs and
    /// arc ids retained.
    pub fn reversed(&self) -> Reversed<'_> {
        Reversed(self)
    }
}

impl Network for Graph {
    fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    fn out_arcs(&self, u: usize) -> &[Adjacent] {
        &self.out[self.out_start[u]..self.out_start[u + 1]]
    }

    fn arc_total(&self) -> usize {
        self.arcs.len()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Reversed<'g>(&'g Graph);

impl Network for Reversed<'_> {
    fn vertex_count(&self) -> usize {
        self.0.n
    }

    #[inline]
    fn out_arcs(&self, u: usize) -> &[Adjacent] {
        self.0.in_arcs(u)
    }

    fn arc_total(&self) -> usize {
        self.0.arcs.len()
    }
}

/// A network extended by one virtual vertex (index `n`) with a single arc
/// into `target`. The base network is not copied.
#[derive(Debug, Clone)]
pub struct SourceOverlay<'a, N: ?Sized> {
    base: &'a N,
    entry: [Adjacent; 1],
}

impl<'a, N: Network + ?Sized> SourceOverlay<'a, N> {
    pub fn new(base: &'a N, target: usize, cost: i64) -> Self {
        SourceOverlay {
            base,
            entry: [Adjacent {
                vertex: target,
                cost,
                id: VIRTUAL_ARC,
            }],
        }
    }

    pub fn virtual_vertex(&self) -> usize {
        self.base.vertex_count()
    }
}

impl<N: Network + ?Sized> Network for SourceOverlay<'_, N> {
    fn vertex_count(&self) -> usize {
        self.base.vertex_count() + 1
    }

    #[inline]
    fn out_arcs(&self, u: usize) -> &[Adjacent] {
        if u == self.base.vertex_count() {
            &self.entry
        } else {
            self.base.out_arcs(u)
        }
    }
}

/// Brings every cost into `[-B, B]` without changing any energetic cost:
/// arcs costing more than `B` can never be driven and are dropped, costs
/// below `-B` are raised to `-B` since the battery cannot absorb more.
///
/// A self-loop with negative cost is a negative cycle and is rejected.
pub fn preprocess_costs(graph: &Graph, capacity: Capacity) -> Result<Graph> {
    let b = capacity.get();
    let mut arcs = Vec::with_capacity(graph.m());
    for (i, a) in graph.arcs().iter().enumerate() {
        if a.tail == a.head && a.cost < 0 {
            return Err(Error::NegativeSelfLoop {
                arc: i,
                vertex: a.tail,
                cost: a.cost,
            });
        }
        if a.cost > b {
            continue;
        }
        arcs.push(Arc::new(a.tail, a.head, a.cost.max(-b)));
    }
    Graph::new(graph.n(), arcs)
}
