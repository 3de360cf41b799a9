//! Finite unit-distance graphs: odd cycles, the diamond, and an exact
//! chromatic-number solver.

mod cycle;
mod diamond;
mod graph;
mod solver;

pub use cycle::{build_cycle, cycle_order};
pub use diamond::{
    beta_from_theta, beta_identity_gap, d_closed_form, d_reconciled, measure_diamond, theorem4_applicable,
    DiamondConfig, Theorem4Report, Theorem4Verdict,
};
pub use graph::{build_graph, GraphFile, UnitDistanceGraph, EDGE_TOL, MAX_EDGE_TOL};
pub use solver::{chromatic_number, chromatic_number_of, chromatic_number_with_budget, ColoringSolution, NODE_BUDGET};
