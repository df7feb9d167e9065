//! Command-line front end: text syntax for specs and elements, and the
//! `qgwa` subcommands.

pub mod app;
pub mod parse;
