//! Parser for `.domain` schema files.
//!
//! ```text
//! type Atom
//! type Metal <: Atom
//! predicate Bonded(Atom, Atom)
//! function Midpoint(Atom, Atom) -> Atom
//! ```

use std::collections::HashSet;

use crate::dsl::ast::{DomainSchema, FunctionDecl, PredicateDecl, Span, TypeDecl};
use crate::dsl::cursor::Cursor;
use crate::dsl::error::{ParseError, ParseErrorKind};
use crate::dsl::lexer::{lex, Tok};

pub fn parse_domain(source: &str) -> Result<DomainSchema, ParseError> {
    let mut cur = Cursor::new(lex(source)?);
    let mut schema = DomainSchema::default();
    // Type references recorded during parsing, validated once all types are
    // known so forward references work.
    let mut type_refs: Vec<(String, Span)> = Vec::new();

    loop {
        cur.skip_separators();
        if cur.at_end() {
            break;
        }
        let (head, head_span) = cur.expect_ident("`type`, `predicate`, or `function`")?;
        match head.as_str() {
            "type" => {
                let (name, span) = cur.expect_ident("type name")?;
                let supertype = if matches!(cur.peek(), Some(Tok::Subtype)) {
                    cur.next();
                    let (sup, sup_span) = cur.expect_ident("supertype name")?;
                    type_refs.push((sup.clone(), sup_span));
                    Some(sup)
                } else {
                    None
                };
                cur.expect_statement_end()?;
                schema.types.push(TypeDecl { name, supertype, span });
            }
            "predicate" => {
                let (name, span) = cur.expect_ident("predicate name")?;
                let params = parse_param_list(&mut cur, &mut type_refs)?;
                cur.expect_statement_end()?;
                schema.predicates.push(PredicateDecl { name, params, span });
            }
            "function" => {
                let (name, span) = cur.expect_ident("function name")?;
                let params = parse_param_list(&mut cur, &mut type_refs)?;
                cur.expect(&Tok::Arrow, "`->`")?;
                let (returns, ret_span) = cur.expect_ident("return type")?;
                type_refs.push((returns.clone(), ret_span));
                cur.expect_statement_end()?;
                schema.functions.push(FunctionDecl { name, params, returns, span });
            }
            _ => {
                return Err(ParseError::at(
                    ParseErrorKind::Syntax,
                    head_span,
                    format!("expected `type`, `predicate`, or `function`, found `{head}`"),
                ));
            }
        }
    }

    validate(&schema, &type_refs)?;
    Ok(schema)
}

fn parse_param_list(
    cur: &mut Cursor,
    type_refs: &mut Vec<(String, Span)>,
) -> Result<Vec<String>, ParseError> {
    cur.expect(&Tok::LParen, "`(`")?;
    let mut params = Vec::new();
    loop {
        let (ty, span) = cur.expect_ident("parameter type")?;
        type_refs.push((ty.clone(), span));
        params.push(ty);
        match cur.peek() {
            Some(Tok::Comma) => {
                cur.next();
            }
            Some(Tok::RParen) => {
                cur.next();
                break;
            }
            _ => return Err(cur.syntax("expected `,` or `)` in parameter list")),
        }
    }
    Ok(params)
}

fn validate(schema: &DomainSchema, type_refs: &[(String, Span)]) -> Result<(), ParseError> {
    let mut seen = HashSet::new();
    for t in &schema.types {
        if !seen.insert(&t.name) {
            return Err(ParseError::at(
                ParseErrorKind::DuplicateName,
                t.span,
                format!("type `{}` declared twice", t.name),
            ));
        }
    }
    let mut seen = HashSet::new();
    for p in &schema.predicates {
        if !seen.insert(&p.name) {
            return Err(ParseError::at(
                ParseErrorKind::DuplicateName,
                p.span,
                format!("predicate `{}` declared twice", p.name),
            ));
        }
    }
    let mut seen = HashSet::new();
    for f in &schema.functions {
        if !seen.insert(&f.name) {
            return Err(ParseError::at(
                ParseErrorKind::DuplicateName,
                f.span,
                format!("function `{}` declared twice", f.name),
            ));
        }
    }
    for (name, span) in type_refs {
        if schema.type_decl(name).is_none() {
            return Err(ParseError::at(
                ParseErrorKind::UndeclaredType,
                *span,
                format!("reference to undeclared type `{name}`"),
            ));
        }
    }
    // A supertype cycle would make subtype checks loop forever.
    for t in &schema.types {
        let mut visited = HashSet::new();
        let mut current = t.name.as_str();
        while let Some(sup) = schema.type_decl(current).and_then(|d| d.supertype.as_deref()) {
            if !visited.insert(sup) {
                return Err(ParseError::at(
                    ParseErrorKind::DuplicateName,
                    t.span,
                    format!("supertype cycle involving `{}`", t.name),
                ));
            }
            current = sup;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_types_and_predicate() {
        let schema = parse_domain("type Atom\ntype Bond\npredicate Bonded(Atom, Atom)").unwrap();
        assert_eq!(schema.types.len(), 2);
        assert_eq!(schema.predicates.len(), 1);
        assert_eq!(schema.predicates[0].params, vec!["Atom", "Atom"]);
    }

    #[test]
    fn parses_binary_subset_schema() {
        let schema = parse_domain("type Set\npredicate IsSubset(Set, Set)").unwrap();
        assert_eq!(schema.types.len(), 1);
        assert_eq!(schema.predicates[0].params.len(), 2);
    }

    #[test]
    fn undeclared_type_reference_is_named() {
        let err = parse_domain("predicate P(Missing)").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::UndeclaredType);
        assert!(err.message.contains("Missing"));
        assert_eq!((err.line, err.column), (1, 13));
    }

    #[test]
    fn duplicate_type_rejected() {
        let err = parse_domain("type A\ntype A").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::DuplicateName);
        assert_eq!(err.line, 2);
    }

    #[test]
    fn functions_and_supertypes() {
        let schema =
            parse_domain("type Node\ntype Root <: Node\nfunction Mid(Node, Node) -> Node").unwrap();
        assert!(schema.is_subtype("Root", "Node"));
        assert!(!schema.is_subtype("Node", "Root"));
        assert_eq!(schema.function("Mid").unwrap().returns, "Node");
    }

    #[test]
    fn supertype_cycle_rejected() {
        let err = parse_domain("type A <: B\ntype B <: A").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::DuplicateName);
        assert!(err.message.contains("cycle"));
    }

    #[test]
    fn forward_supertype_reference_allowed() {
        let schema = parse_domain("type Root <: Node\ntype Node").unwrap();
        assert!(schema.is_subtype("Root", "Node"));
    }

    #[test]
    fn to_text_round_trips() {
        let src = "type Set\npredicate IsSubset(Set, Set)\nfunction Union(Set, Set) -> Set";
        let schema = parse_domain(src).unwrap();
        let reparsed = parse_domain(&schema.to_text()).unwrap();
        assert_eq!(schema, reparsed);
    }
}
