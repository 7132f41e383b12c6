//! Command-line front end and file formats for `crsg-core`.
//!
//! * [`cayley`]: the Cayley table text format;
//! * [`render`]: JSON, DOT and plain-text output;
//! * [`app`]: argument parsing and the commands.

pub mod app;
pub mod cayley;
pub mod render;

pub use app::{run, Cli, RunOutput};
