//! Parsing, scenario execution and export behind the `rfa` command.

pub mod commands;
mod error;
pub mod export;
pub mod expr;
pub mod literal;
pub mod scenario;
pub mod svg;

pub use crate::error::{CliError, Result};
pub use crate::export::ExportTable;
pub use crate::expr::{eval_expression, Bindings, Expr};
pub use crate::literal::{
    format_basis, format_element, parse_basis, parse_element, parse_fuzzy_literal, Literal,
};
pub use crate::scenario::{preset, run_scenario, ScenarioConfig, ScenarioOutput, PRESETS};
