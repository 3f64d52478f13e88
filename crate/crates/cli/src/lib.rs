//! Command-line frontend for the `scstar` verifier: document parsing and the
//! subcommand implementations, kept in a library so tests can call them
//! without spawning the binary.

pub mod commands;
pub mod document;
