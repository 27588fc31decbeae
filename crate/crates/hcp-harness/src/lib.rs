//! Harness around the decider: ground-truth sweeps with certificates,
//! golden trace regression, the declarative path-set audit, scaling
//! probes, and JSON-lines reporting. The `hcp` binary exposes all of it.

pub mod audit;
pub mod checks;
pub mod golden;
pub mod probe;
pub mod report;
pub mod sweep;
