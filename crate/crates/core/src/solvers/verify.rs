use thiserror::Error;

use super::SolveResult;
use crate::energy::Energy;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FixpointViolation {
    #[error("result has {got} labels, graph has {expected} vertices")]
    Length { expected: usize, got: usize },

    #[error("source label is {found}, expected 0")]
    SourceLabel { found: Energy },

    #[error("label {label} of vertex {vertex} is outside the reachable range")]
    OutOfDomain { vertex: usize, label: Energy },

    #[error("vertex {vertex} has a finite label but no predecessor")]
    MissingWitness { vertex: usize },

    #[error("predecessor of vertex {vertex} is not a real arc into it")]
    BadPredecessor { vertex: usize },

    #[error("predecessor walk from vertex {vertex} does not reach the source")]
    BrokenTree { vertex: usize },

    #[error("vertex {vertex} claims {claimed} but its tree path costs {replayed}")]
    Replay { vertex: usize, claimed: Energy, replayed: Energy },

    #[error("arc {arc} ({tail} -> {head}) still relaxes")]
    Arc { arc: usize, tail: usize, head: usize },
}

/// Certifies a solve: every finite label is the cost of its tree path and
/// no arc can relax it further (`d(v) <= d(u) ⊕ c(uv)`). Together these
/// imply every label equals the true energetic cost.
///
/// Labels are checked in depletion space, `d(v) + (B - b)`, so results
/// solved with a partial initial charge are handled too.
pub fn verify_fixpoint(graph: &Graph, result: &SolveResult) -> Result<(), FixpointViolation> {
    let n = graph.n();
    let labels = result.energies();
    if labels.len() != n || result.preds().len() != n {
        return Err(FixpointViolation::Length {
            expected: n,
            got: labels.len(),
        });
    }
    let capacity = result.battery().capacity();
    let offset = result.battery().initial_depletion();
    let source = result.source();

    if labels[source] != Energy::ZERO {
        return Err(FixpointViolation::SourceLabel { found: labels[source] });
    }
    let mut depletion = Vec::with_capacity(n);
    for (v, &label) in labels.iter().enumerate() {
        let dep = match label {
            Energy::PosInf => Energy::PosInf,
            Energy::Finite(k) if (0..=capacity.get()).contains(&(k + offset)) => Energy::Finite(k + offset),
            _ => return Err(FixpointViolation::OutOfDomain { vertex: v, label }),
        };
        depletion.push(dep);
    }

    replay_tree(graph, result, &depletion)?;

    for (id, arc) in graph.arcs().iter().enumerate() {
        if depletion[arc.tail].is_finite() && depletion[arc.head] > capacity.step(depletion[arc.tail], arc.cost) {
            return Err(FixpointViolation::Arc {
                arc: id,
                tail: arc.tail,
                head: arc.head,
            });
        }
    }
    Ok(())
}

/// Recomputes every finite label by folding along predecessor arcs from
/// the source, memoizing so that each vertex is folded once.
fn replay_tree(graph: &Graph, result: &SolveResult, depletion: &[Energy]) -> Result<(), FixpointViolation> {
    const FRESH: u8 = 0;
    const OPEN: u8 = 1;
    const DONE: u8 = 2;

    let n = graph.n();
    let capacity = result.battery().capacity();
    let source = result.source();
    let mut state = vec![FRESH; n];
    let mut replayed = vec![Energy::PosInf; n];
    replayed[source] = depletion[source];
    state[source] = DONE;
    let mut stack = Vec::new();

    for v in 0..n {
        if state[v] == DONE {
            continue;
        }
        if !depletion[v].is_finite() {
            if result.pred(v).is_some() {
                return Err(FixpointViolation::BadPredecessor { vertex: v });
            }
            continue;
        }
        // climb until a vertex with a known replay value
        let mut at = v;
        while state[at] != DONE {
            if state[at] == OPEN {
                return Err(FixpointViolation::BrokenTree { vertex: v });
            }
            state[at] = OPEN;
            stack.push(at);
            let Some(p) = result.pred(at) else {
                return Err(FixpointViolation::MissingWitness { vertex: at });
            };
            match graph.arc(p.arc) {
                Some(a) if a.tail == p.vertex && a.head == at && a.cost == p.cost => {}
                _ => return Err(FixpointViolation::BadPredecessor { vertex: at }),
            }
            if !depletion[p.vertex].is_finite() {
                return Err(FixpointViolation::BrokenTree { vertex: v });
            }
            at = p.vertex;
        }
        while let Some(w) = stack.pop() {
            let p = result.pred(w).expect("checked while climbing");
            replayed[w] = capacity.step(replayed[p.vertex], p.cost);
            state[w] = DONE;
            if replayed[w] != depletion[w] {
                let shift = -result.battery().initial_depletion();
                return Err(FixpointViolation::Replay {
                    vertex: w,
                    claimed: depletion[w].shift(shift),
                    replayed: replayed[w].shift(shift),
                });
            }
        }
    }
    Ok(())
}
