//! Canonical text formats and the expression parser.

mod parse;
mod render;

pub use parse::{
    parse_coefficient, parse_delement, parse_element, parse_expression, parse_rational, parse_uq, Parsed,
};
pub use render::{element_json, render_coefficient, render_element, render_word, uq_json};
