use std::fmt;

/// What went wrong while parsing or checking one of the three language layers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    DuplicateName,
    UndeclaredType,
    UndeclaredIdent,
    SignatureMismatch,
    UnknownSelector,
    UnknownShape,
    UnknownTerm,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ParseErrorKind::Syntax => "syntax error",
            ParseErrorKind::DuplicateName => "duplicate name",
            ParseErrorKind::UndeclaredType => "undeclared type",
            ParseErrorKind::UndeclaredIdent => "undeclared identifier",
            ParseErrorKind::SignatureMismatch => "signature mismatch",
            ParseErrorKind::UnknownSelector => "unknown selector target",
            ParseErrorKind::UnknownShape => "unknown shape kind",
            ParseErrorKind::UnknownTerm => "unknown constraint or objective",
        };
        f.write_str(s)
    }
}

/// Parse error with a 1-based source position pointing inside the offending
/// token.
#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
#[error("{line}:{column}: {kind}: {message}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub line: u32,
    pub column: u32,
    pub message: String,
}

impl ParseError {
    pub fn new(kind: ParseErrorKind, line: u32, column: u32, message: impl Into<String>) -> Self {
        ParseError { kind, line, column, message: message.into() }
    }

    pub fn at(kind: ParseErrorKind, span: crate::dsl::ast::Span, message: impl Into<String>) -> Self {
        Self::new(kind, span.line, span.column, message)
    }
}
