//! Benchmark compiler and evaluation harness for natural-language step
//! programs over classical algorithms.
//!
//! The pipeline has four stages, each usable on its own:
//!
//! - [`catalog`] — the 32-task registry, seeded instance samplers, and
//!   instrumented reference interpreters producing gold answers and gold
//!   step traces (plus independent brute-force cross-oracles).
//! - [`prompt`] — lowers an instance into a natural-language step program
//!   or a Python-code baseline prompt from file-based templates.
//! - [`harness`] — dispatches prompts to a model backend (HTTP, replay
//!   cache, or the offline oracle-echo / mutator backends) and persists
//!   run records as JSONL.
//! - [`scoring`] — extracts final answers and intermediate-state traces
//!   from response text and computes Final / Intermediate / Process
//!   accuracy.
//!
//! [`suite`] ties the stages together under a reproducible manifest.

pub mod catalog;
pub mod error;
pub mod harness;
pub mod prompt;
pub mod rng;
pub mod scoring;
pub mod suite;
pub mod value;

pub use catalog::{AlgorithmSpec, Instance, StepTrace, TaskId};
pub use error::Error;
pub use prompt::{PromptMode, RenderedPrompt};
pub use scoring::ScoreReport;
pub use suite::SuiteManifest;
