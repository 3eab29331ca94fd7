//! Tokenizer for RPSL source text.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::diag::{codes, Diagnostic};
use crate::span::{FileId, Span};

#[derive(Debug, Clone, PartialEq)]
pub enum TokenKind {
    Ident(String),
    Num(f64),
    KwUse,
    KwNamespace,
    KwConcept,
    KwUseDomain,
    KwPolytope,
    KwPoint,
    KwPrototype,
    KwUseConcept,
    KwValues,
    KwSpecification,
    KwData,
    KwGet,
    KwFrom,
    KwWhere,
    KwAnd,
    KwOr,
    KwEnsure,
    KwDeadline,
    KwDependencyGraph,
    KwBefore,
    Colon,
    Comma,
    Dot,
    LParen,
    RParen,
    LBrace,
    RBrace,
    EqEq,
    NotEq,
    Lt,
    Le,
    Gt,
    Ge,
    Eof,
}

impl TokenKind {
    /// The reserved words of the language. `AND`/`OR` are upper-case
    /// spellings of the same operators; everything else (unit symbols,
    /// `Amount`, `Pose`, `Similarity`, `domain`, ...) is contextual and lexes
    /// as an identifier.
    fn keyword(text: &str) -> Option<TokenKind> {
        Some(match text {
            "use" => TokenKind::KwUse,
            "Namespace" => TokenKind::KwNamespace,
            "Concept" => TokenKind::KwConcept,
            "use_domain" => TokenKind::KwUseDomain,
            "Polytope" => TokenKind::KwPolytope,
            "Point" => TokenKind::KwPoint,
            "Prototype" => TokenKind::KwPrototype,
            "use_concept" => TokenKind::KwUseConcept,
            "Values" => TokenKind::KwValues,
            "Specification" => TokenKind::KwSpecification,
            "Data" => TokenKind::KwData,
            "get" => TokenKind::KwGet,
            "from" => TokenKind::KwFrom,
            "where" => TokenKind::KwWhere,
            "and" | "AND" => TokenKind::KwAnd,
            "or" | "OR" => TokenKind::KwOr,
            "ensure" => TokenKind::KwEnsure,
            "Deadline" => TokenKind::KwDeadline,
            "DependencyGraph" => TokenKind::KwDependencyGraph,
            "before" => TokenKind::KwBefore,
            _ => return None,
        })
    }

    /// Human-readable rendering for "expected X, found Y" messages.
    pub fn describe(&self) -> String {
        use TokenKind::*;
        match self {
            Ident(name) => alloc::format!("`{name}`"),
            Num(_) => String::from("number"),
            Eof => String::from("end of file"),
            other => {
                let text = match other {
                    KwUse => "use",
                    KwNamespace => "Namespace",
                    KwConcept => "Concept",
                    KwUseDomain => "use_domain",
                    KwPolytope => "Polytope",
                    KwPoint => "Point",
                    KwPrototype => "Prototype",
                    KwUseConcept => "use_concept",
                    KwValues => "Values",
                    KwSpecification => "Specification",
                    KwData => "Data",
                    KwGet => "get",
                    KwFrom => "from",
                    KwWhere => "where",
                    KwAnd => "and",
                    KwOr => "or",
                    KwEnsure => "ensure",
                    KwDeadline => "Deadline",
                    KwDependencyGraph => "DependencyGraph",
                    KwBefore => "before",
                    Colon => ":",
                    Comma => ",",
                    Dot => ".",
                    LParen => "(",
                    RParen => ")",
                    LBrace => "{",
                    RBrace => "}",
                    EqEq => "==",
                    NotEq => "!=",
                    Lt => "<",
                    Le => "<=",
                    Gt => ">",
                    Ge => ">=",
                    Ident(_) | Num(_) | Eof => unreachable!(),
                };
                alloc::format!("`{text}`")
            }
        }
    }
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub kind: TokenKind,
    pub span: Span,
}

struct Lexer<'a> {
    text: &'a str,
    chars: Vec<(usize, char)>,
    pos: usize,
    line: u32,
    column: u32,
    file: FileId,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str, file: FileId) -> Self {
        Lexer {
            text,
            chars: text.char_indices().collect(),
            pos: 0,
            line: 1,
            column: 1,
            file,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn peek2(&self) -> Option<char> {
        self.chars.get(self.pos + 1).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars
            .get(self.pos)
            .map_or(self.text.len(), |&(off, _)| off)
    }

    fn bump(&mut self) -> Option<char> {
        let &(_, c) = self.chars.get(self.pos)?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn span_from(&self, start: usize, line: u32, column: u32) -> Span {
        Span::new(self.file, start, self.offset(), line, column)
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_continue(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// Tokenizes `text`. Lexical problems (unknown characters, out-of-range
/// numbers) become error diagnostics and lexing continues, so the parser
/// always receives an Eof-terminated stream.
pub fn lex(text: &str, file: FileId) -> (Vec<Token>, Vec<Diagnostic>) {
    let mut lexer = Lexer::new(text, file);
    let mut tokens = Vec::new();
    let mut diags = Vec::new();

    loop {
        // Skip whitespace and `//` comments.
        loop {
            match lexer.peek() {
                Some(c) if c.is_whitespace() => {
                    lexer.bump();
                }
                Some('/') if lexer.peek2() == Some('/') => {
                    while let Some(c) = lexer.peek() {
                        if c == '\n' {
                            break;
                        }
                        lexer.bump();
                    }
                }
                _ => break,
            }
        }

        let start = lexer.offset();
        let (line, column) = (lexer.line, lexer.column);
        let Some(c) = lexer.peek() else {
            tokens.push(Token {
                kind: TokenKind::Eof,
                span: Span::new(file, start, start, line, column),
            });
            break;
        };

        if is_ident_start(c) {
            while lexer.peek().is_some_and(is_ident_continue) {
                lexer.bump();
            }
            let span = lexer.span_from(start, line, column);
            let word = &text[span.start..span.end];
            let kind = TokenKind::keyword(word)
                .unwrap_or_else(|| TokenKind::Ident(String::from(word)));
            tokens.push(Token { kind, span });
            continue;
        }

        if c.is_ascii_digit() || ((c == '+' || c == '-') && lexer.peek2().is_some_and(|d| d.is_ascii_digit())) {
            lexer.bump();
            while lexer.peek().is_some_and(|d| d.is_ascii_digit()) {
                lexer.bump();
            }
            if lexer.peek() == Some('.') && lexer.peek2().is_some_and(|d| d.is_ascii_digit()) {
                lexer.bump();
                while lexer.peek().is_some_and(|d| d.is_ascii_digit()) {
                    lexer.bump();
                }
            }
            let span = lexer.span_from(start, line, column);
            let slice = &text[span.start..span.end];
            match f64::from_str(slice) {
                Ok(value) if value.is_finite() => {
                    tokens.push(Token {
                        kind: TokenKind::Num(value),
                        span,
                    });
                }
                _ => {
                    diags.push(Diagnostic::error(
                        codes::SYNTAX,
                        alloc::format!("numeric literal `{slice}` is out of range"),
                        span,
                    ));
                }
            }
            continue;
        }

        let single = match c {
            ':' => Some(TokenKind::Colon),
            ',' => Some(TokenKind::Comma),
            '.' => Some(TokenKind::Dot),
            '(' => Some(TokenKind::LParen),
            ')' => Some(TokenKind::RParen),
            '{' => Some(TokenKind::LBrace),
            '}' => Some(TokenKind::RBrace),
            _ => None,
        };
        if let Some(kind) = single {
            lexer.bump();
            tokens.push(Token {
                kind,
                span: lexer.span_from(start, line, column),
            });
            continue;
        }

        let two = match (c, lexer.peek2()) {
            ('=', Some('=')) => Some(TokenKind::EqEq),
            ('!', Some('=')) => Some(TokenKind::NotEq),
            ('<', Some('=')) => Some(TokenKind::Le),
            ('>', Some('=')) => Some(TokenKind::Ge),
            _ => None,
        };
        if let Some(kind) = two {
            lexer.bump();
            lexer.bump();
            tokens.push(Token {
                kind,
                span: lexer.span_from(start, line, column),
            });
            continue;
        }
        if c == '<' || c == '>' {
            lexer.bump();
            tokens.push(Token {
                kind: if c == '<' { TokenKind::Lt } else { TokenKind::Gt },
                span: lexer.span_from(start, line, column),
            });
            continue;
        }

        // Unknown character: report once and keep going.
        lexer.bump();
        diags.push(Diagnostic::error(
            codes::SYNTAX,
            alloc::format!("unexpected character `{c}`"),
            lexer.span_from(start, line, column),
        ));
    }

    (tokens, diags)
}
