//! Sequential and non-sequential threshold testing for sparse support recovery.
//!
//! A sparse subset of `n` components deviates from a known null distribution;
//! the task is to recover that subset exactly from noisy per-component
//! observations under a total measurement budget of `2mn`. This crate
//! implements the three standard procedures for the problem and the tooling
//! to compare them:
//!
//! - a single-batch threshold test that spends `2m` observations on every
//!   component ([`procedures::run_non_sequential`]),
//! - multi-pass sequential thresholding, which re-measures survivors and
//!   discards anything falling on the null side of the null median each pass,
//!   in both parallel and scanning form ([`procedures::run_sequential_parallel`],
//!   [`procedures::run_sequential_scanning`]),
//! - a component-wise sequential probability ratio test with Wald boundaries
//!   ([`procedures::run_sprt`]).
//!
//! Three observation models are supported: Gaussian shift in unit-variance
//! noise, energy detection of spectral holes (complex-Gaussian power, so the
//! test statistic is Gamma), and Poisson counts. The [`theory`] module
//! evaluates the closed-form reliability boundaries for each model, and the
//! [`harness`] module runs seeded Monte Carlo experiments and parameter
//! sweeps that can be checked against those boundaries. The [`acceptance`]
//! module bundles the verification suite run by `cargo test` and by the CLI's
//! `verify` subcommand.
//!
//! All randomness flows through counter-keyed streams ([`rng::StreamFactory`]),
//! so every result is reproducible from a single seed and the parallel and
//! scanning implementations consume identical randomness.

pub mod acceptance;
pub mod distributions;
mod error;
pub mod harness;
pub mod procedures;
pub mod rng;
pub mod statistics;
pub mod theory;

pub use error::{Error, Result};

pub use distributions::{Direction, ModelFamily, ObservationModel, StatDistribution};
pub use harness::{
    elimination_profile, generate_instance, run_experiment, run_sprt_study, run_sweep,
    AggregateResult, ExperimentConfig, ProcedureKind, SprtStudy, SweepAxis, SweepCell,
    SweepParameter, SweepResult, TauChoice,
};
pub use procedures::{
    estimate_min_tau_error, run_non_sequential, run_sequential_parallel,
    run_sequential_scanning, run_sprt, BudgetMode, MinTauResult, ProblemInstance,
    ProcedureOutcome, SequentialConfig, SprtOutcome, SprtSpec,
};
pub use statistics::{compute_statistic, exceeds_threshold, TestStatistic};
pub use theory::BoundaryReport;
