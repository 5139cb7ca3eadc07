//! Token cursor shared by the three layer parsers.

use crate::dsl::ast::Span;
use crate::dsl::error::{ParseError, ParseErrorKind};
use crate::dsl::lexer::{Tok, Token};

pub struct Cursor {
    tokens: Vec<Token>,
    pos: usize,
    /// Position just past the final token, for end-of-input errors.
    end: Span,
}

impl Cursor {
    pub fn new(tokens: Vec<Token>) -> Self {
        let end = tokens
            .last()
            .map(|t| Span { line: t.span.line, column: t.span.column + 1 })
            .unwrap_or(Span { line: 1, column: 1 });
        Cursor { tokens, pos: 0, end }
    }

    pub fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    pub fn peek_at(&self, offset: usize) -> Option<&Tok> {
        self.tokens.get(self.pos + offset).map(|t| &t.tok)
    }

    pub fn span(&self) -> Span {
        self.tokens.get(self.pos).map(|t| t.span).unwrap_or(self.end)
    }

    pub fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    /// Skip any run of newline/semicolon separators.
    pub fn skip_separators(&mut self) {
        while matches!(self.peek(), Some(Tok::Newline) | Some(Tok::Semi)) {
            self.pos += 1;
        }
    }

    /// Skip newlines only (used inside argument lists).
    pub fn skip_newlines(&mut self) {
        while matches!(self.peek(), Some(Tok::Newline)) {
            self.pos += 1;
        }
    }

    pub fn error(&self, kind: ParseErrorKind, message: impl Into<String>) -> ParseError {
        let span = self.span();
        ParseError::new(kind, span.line, span.column, message)
    }

    pub fn syntax(&self, message: impl Into<String>) -> ParseError {
        self.error(ParseErrorKind::Syntax, message)
    }

    pub fn expect(&mut self, want: &Tok, what: &str) -> Result<Span, ParseError> {
        match self.peek() {
            Some(t) if t == want => {
                let span = self.span();
                self.pos += 1;
                Ok(span)
            }
            Some(t) => Err(self.syntax(format!("expected {what}, found {}", t.describe()))),
            None => Err(self.syntax(format!("expected {what}, found end of input"))),
        }
    }

    pub fn expect_ident(&mut self, what: &str) -> Result<(String, Span), ParseError> {
        match self.peek() {
            Some(Tok::Ident(_)) => {
                let span = self.span();
                let Some(Token { tok: Tok::Ident(name), .. }) = self.next() else { unreachable!() };
                Ok((name, span))
            }
            Some(t) => Err(self.syntax(format!("expected {what}, found {}", t.describe()))),
            None => Err(self.syntax(format!("expected {what}, found end of input"))),
        }
    }

    /// Require the current statement to be over: newline, `;`, or a closer.
    pub fn expect_statement_end(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None | Some(Tok::Newline) | Some(Tok::Semi) | Some(Tok::RBrace) => Ok(()),
            Some(t) => Err(self.syntax(format!("expected end of statement, found {}", t.describe()))),
        }
    }
}
