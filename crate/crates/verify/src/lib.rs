//! Command-line front end for `mhs-core`: argument parsing, report rendering,
//! and per-lemma drivers.

pub mod cli;
pub mod lemmas;
pub mod report;
