//! Simulation and verification engine for classical, k-Naples, contained and
//! obstructed parking functions.
//!
//! Cars `1..=m` arrive in order on a one-way path of vertices `1..=N`, each
//! with a preferred vertex. The crate provides:
//!
//! - [`rules`]: the four parking disciplines as full per-car traces;
//! - [`components`]: traverse-path components of a trace;
//! - [`reflections`]: component reflections and the left-shift injection;
//! - [`bijection`]: the k-decomposition and the bijection between contained
//!   k-Naples and classical parking functions, plus its obstructed extension;
//! - [`ties`]: ascent/descent/tie statistics and the tie-switching involutions;
//! - [`census`]: exhaustive enumeration, closed-form counts and verifiers.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod bijection;
pub mod census;
pub mod components;
pub mod error;
pub mod reflections;
pub mod rules;
pub mod ties;
pub mod types;

pub use error::{Error, Result};
pub use types::{
    validate, CarRecord, Interval, KDecomposition, Lot, Mode, ParkOutcome, Part, PrefSeq,
    TieChangeTuple,
};
