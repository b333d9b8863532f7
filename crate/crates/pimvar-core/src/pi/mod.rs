//! The synchronous pi-calculus with a success constant: syntax, parsing,
//! the flat soup normal form, standard reduction, and exact convergence.

mod parse;
mod soup;
mod syntax;
mod verdict;

pub use parse::{parse_pi, ParseError};
pub use soup::{is_successful, normalize, step_pi, FragmentError, Prefix, SeqThread, Soup, Tail};
pub use syntax::{print_pi, Name, Process};
pub use verdict::{verdict_pi, Verdict};
