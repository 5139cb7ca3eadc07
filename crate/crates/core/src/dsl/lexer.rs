//! Shared tokenizer for the domain, substance, and style layers.
//!
//! Line breaks are significant (statements are line-oriented), so the lexer
//! emits explicit `Newline` tokens. Comments run from `--` to end of line.

use crate::dsl::ast::Span;
use crate::dsl::error::{ParseError, ParseErrorKind};

#[derive(Debug, Clone, PartialEq)]
pub enum Tok {
    Ident(String),
    Number(f64),
    Str(String),
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Semi,
    Dot,
    Eq,
    Assign,  // :=
    Subtype, // <:
    Arrow,   // ->
    Newline,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Number(n) => format!("number `{n}`"),
            Tok::Str(_) => "string literal".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Assign => "`:=`".into(),
            Tok::Subtype => "`<:`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Newline => "end of line".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub tok: Tok,
    pub span: Span,
}

/// Normalize CRLF/CR line endings to LF.
pub fn normalize(source: &str) -> String {
    source.replace("\r\n", "\n").replace('\r', "\n")
}

pub fn lex(source: &str) -> Result<Vec<Token>, ParseError> {
    let source = normalize(source);
    let mut tokens = Vec::new();
    let mut line: u32 = 1;
    let mut col: u32 = 1;
    let mut chars = source.chars().peekable();

    macro_rules! push {
        ($tok:expr, $l:expr, $c:expr) => {
            tokens.push(Token { tok: $tok, span: Span { line: $l, column: $c } })
        };
    }

    while let Some(&c) = chars.peek() {
        let (tl, tc) = (line, col);
        match c {
            '\n' => {
                chars.next();
                push!(Tok::Newline, tl, tc);
                line += 1;
                col = 1;
            }
            ' ' | '\t' => {
                chars.next();
                col += 1;
            }
            '(' => { chars.next(); col += 1; push!(Tok::LParen, tl, tc); }
            ')' => { chars.next(); col += 1; push!(Tok::RParen, tl, tc); }
            '{' => { chars.next(); col += 1; push!(Tok::LBrace, tl, tc); }
            '}' => { chars.next(); col += 1; push!(Tok::RBrace, tl, tc); }
            ',' => { chars.next(); col += 1; push!(Tok::Comma, tl, tc); }
            ';' => { chars.next(); col += 1; push!(Tok::Semi, tl, tc); }
            '.' => { chars.next(); col += 1; push!(Tok::Dot, tl, tc); }
            '=' => { chars.next(); col += 1; push!(Tok::Eq, tl, tc); }
            ':' => {
                chars.next();
                col += 1;
                if chars.peek() == Some(&'=') {
                    chars.next();
                    col += 1;
                    push!(Tok::Assign, tl, tc);
                } else {
                    return Err(ParseError::new(ParseErrorKind::Syntax, tl, tc, "expected `:=`"));
                }
            }
            '<' => {
                chars.next();
                col += 1;
                if chars.peek() == Some(&':') {
                    chars.next();
                    col += 1;
                    push!(Tok::Subtype, tl, tc);
                } else {
                    return Err(ParseError::new(ParseErrorKind::Syntax, tl, tc, "expected `<:`"));
                }
            }
            '-' => {
                chars.next();
                col += 1;
                match chars.peek() {
                    Some('-') => {
                        // comment to end of line
                        while let Some(&c2) = chars.peek() {
                            if c2 == '\n' {
                                break;
                            }
                            chars.next();
                            col += 1;
                        }
                    }
                    Some('>') => {
                        chars.next();
                        col += 1;
                        push!(Tok::Arrow, tl, tc);
                    }
                    Some(d) if d.is_ascii_digit() => {
                        let (n, consumed) = lex_number(&mut chars);
                        col += consumed;
                        push!(Tok::Number(-n), tl, tc);
                    }
                    _ => {
                        return Err(ParseError::new(
                            ParseErrorKind::Syntax,
                            tl,
                            tc,
                            "unexpected `-` (comments start with `--`)",
                        ));
                    }
                }
            }
            '"' => {
                chars.next();
                col += 1;
                let mut s = String::new();
                loop {
                    match chars.next() {
                        Some('"') => {
                            col += 1;
                            break;
                        }
                        Some('\n') | None => {
                            return Err(ParseError::new(
                                ParseErrorKind::Syntax,
                                tl,
                                tc,
                                "unterminated string literal",
                            ));
                        }
                        Some(c2) => {
                            col += 1;
                            s.push(c2);
                        }
                    }
                }
                push!(Tok::Str(s), tl, tc);
            }
            d if d.is_ascii_digit() => {
                let (n, consumed) = lex_number(&mut chars);
                col += consumed;
                push!(Tok::Number(n), tl, tc);
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                let mut s = String::new();
                while let Some(&c2) = chars.peek() {
                    if c2.is_ascii_alphanumeric() || c2 == '_' {
                        s.push(c2);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                push!(Tok::Ident(s), tl, tc);
            }
            other => {
                return Err(ParseError::new(
                    ParseErrorKind::Syntax,
                    tl,
                    tc,
                    format!("unexpected character `{other}`"),
                ));
            }
        }
    }
    Ok(tokens)
}

fn lex_number(chars: &mut std::iter::Peekable<std::str::Chars<'_>>) -> (f64, u32) {
    let mut text = String::new();
    let mut consumed = 0u32;
    while let Some(&c) = chars.peek() {
        if c.is_ascii_digit() {
            text.push(c);
            chars.next();
            consumed += 1;
        } else {
            break;
        }
    }
    if chars.peek() == Some(&'.') {
        // Only a decimal point if a digit follows; a bare `.` stays a Dot token.
        let mut clone = chars.clone();
        clone.next();
        if clone.peek().is_some_and(|c| c.is_ascii_digit()) {
            text.push('.');
            chars.next();
            consumed += 1;
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    text.push(c);
                    chars.next();
                    consumed += 1;
                } else {
                    break;
                }
            }
        }
    }
    (text.parse().unwrap_or(0.0), consumed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexes_statement_line() {
        let toks = lex("Bonded(c1, o1)").unwrap();
        let kinds: Vec<_> = toks.iter().map(|t| t.tok.clone()).collect();
        assert_eq!(
            kinds,
            vec![
                Tok::Ident("Bonded".into()),
                Tok::LParen,
                Tok::Ident("c1".into()),
                Tok::Comma,
                Tok::Ident("o1".into()),
                Tok::RParen,
            ]
        );
    }

    #[test]
    fn tracks_positions_and_comments() {
        let toks = lex("type A -- trailing note\ntype B").unwrap();
        // type, A, newline, type, B
        assert_eq!(toks.len(), 5);
        assert_eq!(toks[3].span, Span { line: 2, column: 1 });
        assert_eq!(toks[4].span, Span { line: 2, column: 6 });
    }

    #[test]
    fn normalizes_crlf() {
        let toks = lex("type A\r\ntype B").unwrap();
        assert_eq!(toks[3].span.line, 2);
    }

    #[test]
    fn negative_numbers_and_arrows() {
        let toks = lex("f(-3.5) -> T").unwrap();
        assert!(toks.iter().any(|t| t.tok == Tok::Number(-3.5)));
        assert!(toks.iter().any(|t| t.tok == Tok::Arrow));
    }

    #[test]
    fn rejects_unterminated_string() {
        let err = lex("Label x \"oops").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::Syntax);
        assert_eq!(err.column, 9);
    }
}
