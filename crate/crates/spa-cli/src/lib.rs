//! Problem-file frontend and command line for the solvable-polynomial-algebra
//! toolkit: parsing of `.spa` files, validation, and the `spa` subcommands
//! (`check`, `gb`, `mingens`, `minpres`, `syz`, `resolve`).

mod cli;
pub mod parse;

pub use cli::run;
pub use parse::{parse_problem, parse_problem_unchecked, render_problem, FrontendError, ProblemFile};
