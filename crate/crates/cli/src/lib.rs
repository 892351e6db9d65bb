//! Front end for `catzeta`: input parsing, the subcommands and report rendering.

pub mod commands;
pub mod input;
pub mod render;
