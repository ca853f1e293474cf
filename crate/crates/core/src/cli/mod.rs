//! Text formats and the `gb` command-line driver.

mod dot;
mod driver;
mod format;
mod parse;

pub use dot::emit_dot;
pub use driver::{run_cli, run_cli_with, EXIT_INVALID_ARGS, EXIT_OK, EXIT_PARSE_ERROR};
pub use format::{format_lineage_table, format_matrix, render_poly};
pub use parse::{parse_input, parse_poly_expr, ProblemSpec};
