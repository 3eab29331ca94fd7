//! Source locations.

use core::fmt;

/// Identifies one source file inside a compilation unit. The mapping from id
/// to file name is kept by whoever feeds sources to the parser.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FileId(pub u32);

/// A byte range in one source file plus the 1-based line/column of its start.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Span {
    pub file: FileId,
    pub start: usize,
    pub end: usize,
    pub line: u32,
    pub column: u32,
}

impl Span {
    pub fn new(file: FileId, start: usize, end: usize, line: u32, column: u32) -> Self {
        debug_assert!(start <= end);
        debug_assert!(line >= 1 && column >= 1);
        Span {
            file,
            start,
            end,
            line,
            column,
        }
    }

    /// A placeholder span for nodes built outside any source file.
    pub fn detached() -> Self {
        Span {
            file: FileId(0),
            start: 0,
            end: 0,
            line: 1,
            column: 1,
        }
    }

    /// Covers everything from the start of `self` to the end of `other`.
    pub fn to(self, other: Span) -> Span {
        Span {
            file: self.file,
            start: self.start,
            end: other.end.max(self.start),
            line: self.line,
            column: self.column,
        }
    }
}

impl Default for Span {
    fn default() -> Self {
        Span::detached()
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}
