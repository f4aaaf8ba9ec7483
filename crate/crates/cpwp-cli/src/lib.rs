//! Text front end for the exact piecewise polynomial kernel: a small
//! expression language, a deterministic pretty-printer, and the command
//! driver behind the `cpwp` binary.
//!
//! Functions are written either canonically, as polynomials and step
//! terms,
//!
//! ```text
//! x^6 + 1 - (x^5 + x^4 + 1/2*x^2 + 4*x + 5)*C[1](x - 1) + 3/2*(x - 1)*C[2](x^2 - 2)
//! ```
//!
//! or as piecewise blocks with rational or `root(P, k)` breakpoints,
//!
//! ```text
//! piecewise {
//!   x^6 + 1                                on (-inf, 1];
//!   x^4 - 1/2*x^3 - 7/2*x^2 - x + 6        on [1, root(x^2 - 2, 2)];
//!   x^4 + x^3 - 5*x^2 - 4*x + 9            on [root(x^2 - 2, 2), inf)
//! }
//! ```
//!
//! Both parse to the same canonical form; printing is deterministic and
//! re-parses to an equal form.

mod parse;
mod print;
mod run;

pub use parse::{parse_function, parse_poly, parse_rat, FunctionError, ParseError};
pub use print::{
    format_breakpoint, format_canonical, format_decimal, format_poly, format_rat,
    format_semipoly,
};
pub use run::run;
