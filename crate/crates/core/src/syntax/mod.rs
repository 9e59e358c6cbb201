//! Text formats: the expression language, ring notation and spec files.

mod expr;
mod ring;
mod specfile;

pub use expr::{format_element, format_polynomial, parse_element, parse_expression, parse_expression_with};
pub use ring::parse_ring;
pub use specfile::{emit_spec, parse_spec, read_spec_file, MapSection, RelationSection, RingSection, SpecDocument, SCHEMA_VERSION};
