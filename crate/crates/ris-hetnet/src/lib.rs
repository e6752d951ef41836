//! Evaluation engine for RIS-aided NOMA heterogeneous networks.
//!
//! The crate models a downlink cellular network in which base stations,
//! reconfigurable intelligent surfaces (RISs), and user equipments are
//! placed by independent homogeneous Poisson point processes. A typical
//! UE associates either with its nearest line-of-sight BS or with its
//! nearest RIS (which reflects the signal of that RIS's nearest BS),
//! whichever delivers the higher average power. Two NOMA users share
//! each resource block, so coverage involves both a SIC stage and a
//! decoding stage.
//!
//! Two independent evaluation engines are provided:
//!
//! * analytical — distance distributions, association probabilities,
//!   interference Laplace transforms, SINR/rate coverage and their
//!   large-RIS asymptotics, evaluated by deterministic adaptive
//!   quadrature ([`association`], [`coverage`]);
//! * simulation — a seeded, reproducible Monte Carlo simulator of the
//!   same network model ([`montecarlo`]), used as the ground-truth
//!   oracle for every analytical quantity.
//!
//! The [`cli`] module (exposed through the `riseval` binary) runs batch
//! parameter sweeps and analytic-vs-simulation comparisons, emitting CSV.
//! Runnable walkthroughs for each capability live under `examples/`.

pub mod association;
pub mod channel;
pub mod cli;
pub mod config;
pub mod coverage;
pub mod montecarlo;
pub mod quadrature;
pub mod specfun;

pub use config::{load_params, DerivedParams, SystemParams};
