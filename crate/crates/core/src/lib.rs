//! Minimum energetic-cost paths for a battery-constrained vehicle.
//!
//! A vehicle with battery capacity `B` drives a directed graph whose arc
//! costs are energies: positive costs drain the battery, negative costs
//! recharge it, but never above `B`, and an arc can only be driven when the
//! charge covers its cost. Given no negative cycles, this crate computes
//! the smallest depletion with which each vertex can be reached
//! ([`solvers::e_bellman_ford`], [`solvers::e_dijkstra`]), the minimum
//! initial charge needed to reach a target ([`solvers::min_initial_charge`])
//! and the maximum charge left on arrival ([`solvers::max_final_charge`]).
//!
//! ```
//! use voltpath::{Capacity, Energy, Graph};
//! use voltpath::solvers::e_bellman_ford;
//!
//! // up a 3-unit hill and back down again
//! let g = Graph::from_triples(3, &[(0, 1, 3), (1, 2, -3)]).unwrap();
//! let r = e_bellman_ford(&g, Capacity::new(3).unwrap(), 0).unwrap();
//! assert_eq!(r.energy(2), Energy::ZERO);
//! ```

pub mod energy;
pub mod error;
pub mod graph;
pub mod heap;
pub mod io;
pub mod path;
pub mod solvers;
pub mod testkit;

pub use energy::{BatteryConfig, Capacity, Energy};
pub use error::{Error, Result};
pub use graph::{preprocess_costs, Arc, Graph, Network};
pub use path::{path_energetic_cost, path_initial_charge, Path};
