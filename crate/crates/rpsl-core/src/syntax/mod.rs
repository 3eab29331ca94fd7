//! Front end: lexer, parser, syntax tree and pretty-printer.

pub mod ast;
mod lexer;
mod parser;
mod printer;

pub use lexer::{lex, Token, TokenKind};
pub use parser::parse_source;
pub use printer::print_ast;
