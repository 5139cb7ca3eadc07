//! Syntax trees for the three language layers.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// 1-based source position of a token.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Span {
    pub line: u32,
    pub column: u32,
}

// ---------------------------------------------------------------------------
// Domain layer
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
pub struct TypeDecl {
    pub name: String,
    pub supertype: Option<String>,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PredicateDecl {
    pub name: String,
    pub params: Vec<String>,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FunctionDecl {
    pub name: String,
    pub params: Vec<String>,
    pub returns: String,
    pub span: Span,
}

/// Concept schema: named types (single optional supertype), predicates over
/// typed parameters, and functions with a return type.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct DomainSchema {
    pub types: Vec<TypeDecl>,
    pub predicates: Vec<PredicateDecl>,
    pub functions: Vec<FunctionDecl>,
}

impl DomainSchema {
    pub fn type_decl(&self, name: &str) -> Option<&TypeDecl> {
        self.types.iter().find(|t| t.name == name)
    }

    pub fn predicate(&self, name: &str) -> Option<&PredicateDecl> {
        self.predicates.iter().find(|p| p.name == name)
    }

    pub fn function(&self, name: &str) -> Option<&FunctionDecl> {
        self.functions.iter().find(|f| f.name == name)
    }

    /// Reflexive, transitive subtype check along the supertype chain.
    pub fn is_subtype(&self, sub: &str, sup: &str) -> bool {
        let mut current = sub;
        loop {
            if current == sup {
                return true;
            }
            match self.type_decl(current).and_then(|t| t.supertype.as_deref()) {
                Some(next) => current = next,
                None => return false,
            }
        }
    }

    /// Canonical text form, used when a schema is embedded in a prompt.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for t in &self.types {
            match &t.supertype {
                Some(s) => out.push_str(&format!("type {} <: {}\n", t.name, s)),
                None => out.push_str(&format!("type {}\n", t.name)),
            }
        }
        for p in &self.predicates {
            out.push_str(&format!("predicate {}({})\n", p.name, p.params.join(", ")));
        }
        for f in &self.functions {
            out.push_str(&format!("function {}({}) -> {}\n", f.name, f.params.join(", "), f.returns));
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Substance layer
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Statement {
    /// `T x`
    Decl { type_name: String, ident: String },
    /// `P(a, b, ...)`
    PredApp { pred: String, args: Vec<String> },
    /// `x := F(a, ...)`
    FuncBind { ident: String, func: String, args: Vec<String> },
    /// `Label x "text"`
    Label { ident: String, text: String },
}

/// A type-checked substance program: ordered statements plus the `AutoLabel
/// All` flag.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct SubstanceProgram {
    pub statements: Vec<Statement>,
    pub autolabel: bool,
}

impl SubstanceProgram {
    pub fn is_empty(&self) -> bool {
        self.statements.is_empty() && !self.autolabel
    }

    /// Declared identifiers with their types, in statement order.
    pub fn decls(&self) -> impl Iterator<Item = (&str, &str)> {
        self.statements.iter().filter_map(|s| match s {
            Statement::Decl { type_name, ident } => Some((type_name.as_str(), ident.as_str())),
            _ => None,
        })
    }

    /// Effective label per identifier: `AutoLabel All` labels every declared
    /// identifier with its own name; explicit `Label` statements override.
    pub fn labels(&self) -> BTreeMap<String, String> {
        let mut map = BTreeMap::new();
        if self.autolabel {
            for (_, ident) in self.decls() {
                map.insert(ident.to_string(), ident.to_string());
            }
        }
        for s in &self.statements {
            if let Statement::Label { ident, text } = s {
                map.insert(ident.clone(), text.clone());
            }
        }
        map
    }
}

// ---------------------------------------------------------------------------
// Style layer
// ---------------------------------------------------------------------------

/// Drawing area in abstract pixel units, centered on the origin.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Canvas {
    pub width: f64,
    pub height: f64,
}

impl Default for Canvas {
    fn default() -> Self {
        Canvas { width: 600.0, height: 600.0 }
    }
}

impl Canvas {
    pub fn min_side(&self) -> f64 {
        self.width.min(self.height)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ShapeKind {
    Circle,
    Rectangle,
    Line,
    Arrow,
    Text,
}

impl ShapeKind {
    pub fn name(&self) -> &'static str {
        match self {
            ShapeKind::Circle => "Circle",
            ShapeKind::Rectangle => "Rectangle",
            ShapeKind::Line => "Line",
            ShapeKind::Arrow => "Arrow",
            ShapeKind::Text => "Text",
        }
    }

    /// Scalar parameters of this shape kind, in slot order.
    pub fn param_names(&self) -> &'static [&'static str] {
        match self {
            ShapeKind::Circle => &["cx", "cy", "r"],
            ShapeKind::Rectangle => &["cx", "cy", "w", "h"],
            ShapeKind::Line | ShapeKind::Arrow => &["x1", "y1", "x2", "y2"],
            ShapeKind::Text => &["cx", "cy"],
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SelectorVar {
    pub type_name: String,
    pub var: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WhereClause {
    pub pred: String,
    pub args: Vec<String>,
}

/// Reference to a shape from inside a rule body: either `var.field` (a shape
/// attached to a matched substance object, possibly by another rule) or a
/// bare local name assigned earlier in the same rule.
#[derive(Debug, Clone, PartialEq)]
pub enum ShapePath {
    Field { var: String, field: String },
    Local { name: String },
}

impl std::fmt::Display for ShapePath {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ShapePath::Field { var, field } => write!(f, "{var}.{field}"),
            ShapePath::Local { name } => write!(f, "{name}"),
        }
    }
}

/// Right-hand side of a shape parameter setting.
#[derive(Debug, Clone, PartialEq)]
pub enum ParamValue {
    /// Pin the parameter to a constant.
    Number(f64),
    /// Alias a whole shape (only meaningful for `from`/`to` on lines).
    ShapeRef(ShapePath),
    /// Alias another shape's scalar parameter, sharing its slot.
    ParamPath { shape: ShapePath, param: String },
}

#[derive(Debug, Clone, PartialEq)]
pub enum AssignTarget {
    Field { var: String, field: String },
    Local { name: String },
}

impl AssignTarget {
    pub fn path(&self) -> ShapePath {
        match self {
            AssignTarget::Field { var, field } => {
                ShapePath::Field { var: var.clone(), field: field.clone() }
            }
            AssignTarget::Local { name } => ShapePath::Local { name: name.clone() },
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ShapeTemplate {
    pub target: AssignTarget,
    pub kind: ShapeKind,
    pub settings: Vec<(String, ParamValue)>,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq)]
pub enum TermArg {
    Number(f64),
    Shape(ShapePath),
    Param { shape: ShapePath, param: String },
}

/// An `ensure` or `encourage` call as written in the style sheet.
#[derive(Debug, Clone, PartialEq)]
pub struct TermCall {
    pub name: String,
    pub args: Vec<TermArg>,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StyleRule {
    pub vars: Vec<SelectorVar>,
    pub where_clause: Option<WhereClause>,
    pub emits: Vec<ShapeTemplate>,
    pub constraints: Vec<TermCall>,
    pub objectives: Vec<TermCall>,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StyleSheet {
    pub canvas: Canvas,
    pub rules: Vec<StyleRule>,
}
