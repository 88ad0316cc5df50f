//! Workbench for long-horizon manipulation of rule-locked safes.
//!
//! The crate is organised around one pipeline:
//!
//! 1. [`safe`] — a physics-free articulated safe (knob, handle, door) with
//!    joint ranges, lock flags, and part-phase discretization.
//! 2. [`rules`] — twenty lock automata driven by part-phase edge events,
//!    plus a breadth-first solver and an exhaustive verifier.
//! 3. [`demo`] — expansion of solved operation sequences into noisy
//!    13-dimensional proprioceptive trajectories at 10 Hz, and JSONL
//!    dataset I/O.
//! 4. [`vq`] — a vector-quantized autoencoder over joint-state windows,
//!    codebook clustering, and the sliding-window memory tokenizer.
//! 5. [`policy`] — behavior-cloning policies with pluggable memory
//!    variants, closed-loop rollout with operation recognition, SR/PS
//!    metrics, and the ablation runner.
//!
//! Everything is seeded and deterministic: the same seeds and configs
//! produce byte-identical artifacts.

pub mod demo;
pub mod nn;
pub mod policy;
pub mod rules;
pub mod safe;
pub mod seed;
pub mod vq;

/// Tool version stamped into every artifact file.
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
