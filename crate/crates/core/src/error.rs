use thiserror::Error;

use crate::solvers::NegativeCycleReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("battery capacity {0} is outside [0, {max}]", max = crate::energy::Capacity::MAX)]
    InvalidCapacity(i64),

    #[error("initial charge {initial} is outside [0, {capacity}]")]
    InvalidInitialCharge { capacity: i64, initial: i64 },

    #[error("vertex {vertex} is out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("arc {arc} has endpoint {vertex} outside a graph with {n} vertices")]
    EndpointOutOfRange { arc: usize, vertex: usize, n: usize },

    #[error("arc {arc} has cost {cost} outside [-{capacity}, {capacity}]; preprocess costs first")]
    CostOutOfRange { arc: usize, cost: i64, capacity: i64 },

    #[error("arc {arc} is a self-loop at vertex {vertex} with negative cost {cost}")]
    NegativeSelfLoop { arc: usize, vertex: usize, cost: i64 },

    #[error("arc {arc} does not leave vertex {expected}")]
    DisconnectedPath { arc: usize, expected: usize },

    #[error("arc index {0} does not exist")]
    ArcOutOfRange(usize),

    #[error("{0}")]
    NegativeCycle(NegativeCycleReport),

    #[error("potential is invalid on arc {arc}: reduced cost {reduced} < 0")]
    InvalidPotential { arc: usize, reduced: i128 },

    #[error("potential has {got} entries, graph has {expected} vertices")]
    PotentialLength { expected: usize, got: usize },

    #[error("potential value for vertex {0} does not fit in 64 bits")]
    PotentialOverflow(usize),

    #[error("oracle enumeration limited to {limit} vertices, graph has {n}")]
    OracleTooLarge { n: usize, limit: usize },

    #[error("infeasible generator spec: {0}")]
    InfeasibleSpec(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("no instance without a target tree found with at most {0} vertices")]
    WitnessNotFound(usize),
}
