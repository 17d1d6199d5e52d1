//! Oracles, generators and stored instances for checking the solvers.
//!
//! Everything here is shipped with the library so the command-line `check`
//! subcommand can audit user instances.

mod audit;
mod generate;
mod oracle;
mod witness;

pub use audit::{audit, small_instance, Audit};
pub use generate::{generate, random_graph, GeneratorSpec, Instance, Topology};
pub use oracle::{
    oracle_costs_from, oracle_min_energetic, oracle_min_initial, oracle_reachable, standard_distances, ORACLE_LIMIT,
};
pub use witness::{
    check_target_trees, find_no_target_tree_witness, stored_witness, verified_stored_witness, TargetTreeReport,
    Witness,
};
