//! Library backing the `capillary-lab` binary: experiment configs, the
//! report data model, and the runner that maps a config onto the geometry
//! core.
//!
//! Everything the binary does is reachable from here, so integration tests
//! can parse real reports back into [`report::Report`] and drive
//! [`runner::run`] without spawning a process.

pub mod config;
pub mod report;
pub mod runner;
