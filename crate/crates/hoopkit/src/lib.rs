//! File formats, parallel sweeps and the command-line front end over
//! [`hoopkit_core`].

pub mod cli;
pub mod files;
pub mod report;
pub mod sweeps;

pub use hoopkit_core as core;
