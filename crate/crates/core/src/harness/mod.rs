//! Instance files, random generation, experiment runs, bound checks and the
//! CSV report.

pub mod bounds;
mod experiment;
mod generate;
mod instance;
mod sweep;

use thiserror::Error;

use crate::adversary::AdversaryError;
use crate::geometry::GeometryError;
use crate::graph::GraphError;
use crate::online::OnlineError;
use crate::oracles::OracleError;

pub use bounds::{ratio_table, render_table, Check, TableParams, TableRow};
pub use experiment::{
    run_experiment, run_on, Algorithm, Analysis, Outcome, Pass, RunRecord, TraceRow, FAMILY_SUFFIX,
    INSTANCE_TAG,
};
pub use generate::{bfs_order, generate_random_instance, GenSpec, DEFAULT_RETRIES};
pub use instance::{Family, Instance};
pub use sweep::{
    any_failure, read_report, run_sweep, summarize, write_report, SummaryRow, SweepConfig,
    TrialSpec,
};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("{0}")]
    Invalid(String),
    #[error("no connected instance within {retries} draws")]
    NoConnectedInstance { retries: usize },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Online(#[from] OnlineError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Adversary(#[from] AdversaryError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Toml(#[from] toml::de::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}
