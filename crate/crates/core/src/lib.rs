//! Software defect prediction toolkit.
//!
//! The crate is organised as a pipeline:
//!
//! 1. [`dataset`] loads code-metric CSV files and produces deterministic
//!    stratified train/test splits.
//! 2. [`anra`] cleans and balances training data (dedup, IQR clipping,
//!    z-normalization, minority oversampling).
//! 3. [`model`] is the QVAET classifier: an angle-encoding feature map, a
//!    variational encoder, a transformer block stack and a logistic head,
//!    trained by analytic backpropagation.
//! 4. [`ade`] is a general-purpose adaptive differential evolution optimizer
//!    used to tune the model's hyperparameters.
//! 5. [`evaluation`] computes confusion metrics, wires ADE to the model as a
//!    fitness function, and runs training-percentage sweeps.

pub mod ade;
pub mod anra;
pub mod dataset;
pub mod error;
pub mod evaluation;
pub mod linalg;
pub mod model;
pub mod rng;

pub use error::{Error, Result};
