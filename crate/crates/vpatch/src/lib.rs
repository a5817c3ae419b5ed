//! File-level pipeline around `vpatch-core`: image IO, batch augmentation
//! with reports, preview montages, Monte Carlo tables and the `vpatch` CLI.

pub mod batch;
pub mod config;
pub mod error;
pub mod io;
pub mod preview;
pub mod resize;
pub mod stats;
pub mod svg;

pub use batch::{augment_tensor, run_batch, Aggregates, Augmented, ImageRecord, RunReport};
pub use config::{Method, RunConfig};
pub use error::{PipelineError, Result};
