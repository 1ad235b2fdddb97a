//! The batch script language: group and subgroup definitions, actions,
//! extensions, core queries and check invocations.
//!
//! Grammar sketch:
//!
//! ```text
//! stmt := "group" NAME "=" gexpr
//!       | "sub" NAME "=" "generate" "(" NAME ";" elems ")"
//!       | "action" NAME "=" "conjugation" "(" NAME ")"
//!                         | "trivial" "(" NAME ";" NAME ")"
//!                         | "by_images" "(" NAME ";" NAME ";" nums ")"
//!       | "ext" NAME "=" "semidirect" "(" NAME ")"
//!       | "core" kind "(" args ")"
//!       | "check" name "(" args ")"
//! ```
//!
//! Elements are index lists; cycle notation like `(0 1 2)` works for
//! symmetric and alternating constructors. Names bind before use, one
//! assignment each. `#` starts a comment.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::action::BAction;
use crate::catalog::GroupExpr;
use crate::checks::{self, FamilyPolicy};
use crate::error::{Error, Result};
use crate::extension::{semidirect_product, split_extension_core, SplitExtension};
use crate::group::{
    permutation_from_cycles, permutation_parity, permutations_lex, ArcGroup,
};
use crate::hom::GroupHom;
use crate::omega::{
    parse_descriptor, sample_invariance_inputs, verify_ni_invariance, verify_witness,
    SeqDescriptor,
};
use crate::report::CheckReport;
use crate::subgroup::Subgroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Script {
    pub statements: Vec<Stmt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stmt {
    Group { name: String, expr: GroupExpr },
    Sub { name: String, group: String, elems: Vec<ElemSpec> },
    Action { name: String, expr: ActionExpr },
    Ext { name: String, action: String },
    Core(CoreQuery),
    Check(CheckCall),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElemSpec {
    Index(usize),
    /// A product of cycles written adjacently, like `(0 1)(2 3)`; cycles
    /// separated by whitespace are distinct elements.
    Perm(Vec<Vec<usize>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ActionExpr {
    Conjugation(String),
    Trivial { actor: String, target: String },
    ByImages { actor: String, target: String, images: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoreQuery {
    Normal { sub: String },
    Action { sub: String, action: String },
    SplitExt { sub: String, ext: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckCall {
    IntersectionsBinary { k: String, b: String },
    IntersectionsFamily { k: String, b: String },
    KernelGeometric { ext: String },
    JoinNormals { group: String },
    Higgins { group: String },
    CommutatorJoin { group: String },
    ThreeSubobjects { group: String },
    CoreAdjunction { ext: String },
    CoreTerminality { ext: String },
    NormalCorePullback { sub: String },
    Clots { sub: String },
    OmegaWitness,
    OmegaInvariance { i: u64 },
    OmegaEval { descriptor: SeqDescriptor },
}

// ----- lexer -----

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(usize),
    Str(String),
    Punct(char),
}

impl std::fmt::Display for Tok {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Num(n) => write!(f, "`{n}`"),
            Tok::Str(s) => write!(f, "\"{s}\""),
            Tok::Punct(c) => write!(f, "`{c}`"),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = match line.find('#') {
            Some(i) => &line[..i],
            None => line,
        };
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let n = text.parse().map_err(|_| Error::Parse {
                    line: lineno + 1,
                    col,
                    found: text.clone(),
                    expected: vec!["number".into()],
                })?;
                out.push(Spanned { tok: Tok::Num(n), line: lineno + 1, col });
            } else if c.is_ascii_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                out.push(Spanned { tok: Tok::Ident(text), line: lineno + 1, col });
            } else if c == '"' {
                let start = i + 1;
                let mut j = start;
                while j < chars.len() && chars[j] != '"' {
                    j += 1;
                }
                if j == chars.len() {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        col,
                        found: "end of line".into(),
                        expected: vec!["closing `\"`".into()],
                    });
                }
                out.push(Spanned {
                    tok: Tok::Str(chars[start..j].iter().collect()),
                    line: lineno + 1,
                    col,
                });
                i = j + 1;
            } else if "=();,".contains(c) {
                out.push(Spanned { tok: Tok::Punct(c), line: lineno + 1, col });
                i += 1;
            } else {
                return Err(Error::Parse {
                    line: lineno + 1,
                    col,
                    found: format!("`{c}`"),
                    expected: vec!["a statement token".into()],
                });
            }
        }
    }
    Ok(out)
}

// ----- parser -----

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Group,
    Sub,
    Action,
    Ext,
}

impl Kind {
    fn word(self) -> &'static str {
        match self {
            Kind::Group => "group",
            Kind::Sub => "sub",
            Kind::Action => "action",
            Kind::Ext => "ext",
        }
    }
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    names: HashMap<String, Kind>,
}

impl Parser {
    fn err(&self, expected: &[&str]) -> Error {
        let (line, col, found) = match self.toks.get(self.pos) {
            Some(s) => (s.line, s.col, s.tok.to_string()),
            None => {
                let last = self.toks.last();
                (
                    last.map_or(1, |s| s.line),
                    last.map_or(1, |s| s.col),
                    "end of input".to_string(),
                )
            }
        };
        Error::Parse { line, col, found, expected: expected.iter().map(|s| s.to_string()).collect() }
    }

    fn binding_err(&self, message: String) -> Error {
        let line = self.toks.get(self.pos.saturating_sub(1)).map_or(1, |s| s.line);
        Error::Binding { line, message }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn next_ident(&mut self, what: &str) -> Result<String> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.err(&[what])),
        }
    }

    fn next_num(&mut self) -> Result<usize> {
        match self.peek() {
            Some(Tok::Num(n)) => {
                let n = *n;
                self.pos += 1;
                Ok(n)
            }
            _ => Err(self.err(&["number"])),
        }
    }

    fn eat(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(Tok::Punct(p)) if *p == c => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.err(&[&format!("`{c}`")])),
        }
    }

    fn keyword(&mut self, word: &str) -> Result<()> {
        match self.peek() {
            Some(Tok::Ident(s)) if s == word => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.err(&[word])),
        }
    }

    fn bind(&mut self, name: &str, kind: Kind) -> Result<()> {
        if self.names.contains_key(name) {
            return Err(self.binding_err(format!("`{name}` is already defined")));
        }
        self.names.insert(name.to_string(), kind);
        Ok(())
    }

    fn resolve(&self, name: &str, kind: Kind) -> Result<()> {
        match self.names.get(name) {
            Some(k) if *k == kind => Ok(()),
            Some(k) => Err(Error::Binding {
                line: self.toks.get(self.pos.saturating_sub(1)).map_or(1, |s| s.line),
                message: format!("`{name}` is a {} but a {} is needed", k.word(), kind.word()),
            }),
            None => Err(Error::Binding {
                line: self.toks.get(self.pos.saturating_sub(1)).map_or(1, |s| s.line),
                message: format!("`{name}` is not defined"),
            }),
        }
    }

    fn named_ref(&mut self, kind: Kind, what: &str) -> Result<String> {
        let name = self.next_ident(what)?;
        self.resolve(&name, kind)?;
        Ok(name)
    }

    fn group_expr(&mut self) -> Result<GroupExpr> {
        let head = self.next_ident("group constructor or name")?;
        if self.peek() != Some(&Tok::Punct('(')) {
            return match head.as_str() {
                "quaternion8" => Ok(GroupExpr::Quaternion8),
                _ => {
                    self.resolve(&head, Kind::Group)?;
                    Ok(GroupExpr::Named(head))
                }
            };
        }
        self.eat('(')?;
        let expr = match head.as_str() {
            "cyclic" => GroupExpr::Cyclic(self.next_num()?),
            "dihedral" => GroupExpr::Dihedral(self.next_num()?),
            "symmetric" => GroupExpr::Symmetric(self.next_num()?),
            "alternating" => GroupExpr::Alternating(self.next_num()?),
            "direct_product" => {
                let a = self.group_expr()?;
                self.eat(',')?;
                let b = self.group_expr()?;
                GroupExpr::DirectProduct(Box::new(a), Box::new(b))
            }
            "semidirect" => {
                let x = self.group_expr()?;
                self.eat(',')?;
                let b = self.group_expr()?;
                self.eat(',')?;
                let k = self.next_num()?;
                GroupExpr::Semidirect(Box::new(x), Box::new(b), k)
            }
            "from_table" => match self.peek().cloned() {
                Some(Tok::Str(path)) => {
                    self.pos += 1;
                    GroupExpr::FromTable(path)
                }
                _ => return Err(self.err(&["quoted table path"])),
            },
            _ => return Err(self.err(&["group constructor"])),
        };
        self.eat(')')?;
        Ok(expr)
    }

    fn elems(&mut self) -> Result<Vec<ElemSpec>> {
        let mut out = Vec::new();
        loop {
            match self.peek() {
                Some(Tok::Num(n)) => {
                    out.push(ElemSpec::Index(*n));
                    self.pos += 1;
                }
                Some(Tok::Punct('(')) => {
                    let mut cycles = Vec::new();
                    loop {
                        self.pos += 1;
                        let mut cycle = Vec::new();
                        while let Some(Tok::Num(n)) = self.peek() {
                            cycle.push(*n);
                            self.pos += 1;
                        }
                        let close = match self.toks.get(self.pos) {
                            Some(sp) if sp.tok == Tok::Punct(')') => (sp.line, sp.col),
                            _ => return Err(self.err(&["`)`"])),
                        };
                        self.pos += 1;
                        if cycle.is_empty() {
                            return Err(self.err(&["cycle entries"]));
                        }
                        cycles.push(cycle);
                        // a cycle immediately followed by `(` continues the
                        // same permutation, like (0 1)(2 3)
                        match self.toks.get(self.pos) {
                            Some(sp)
                                if sp.tok == Tok::Punct('(')
                                    && sp.line == close.0
                                    && sp.col == close.1 + 1 => {}
                            _ => break,
                        }
                    }
                    out.push(ElemSpec::Perm(cycles));
                }
                _ => break,
            }
        }
        Ok(out)
    }

    fn stmt(&mut self) -> Result<Stmt> {
        let head = self.next_ident("statement keyword")?;
        match head.as_str() {
            "group" => {
                let name = self.next_ident("name")?;
                self.eat('=')?;
                let expr = self.group_expr()?;
                self.bind(&name, Kind::Group)?;
                Ok(Stmt::Group { name, expr })
            }
            "sub" => {
                let name = self.next_ident("name")?;
                self.eat('=')?;
                self.keyword("generate")?;
                self.eat('(')?;
                let group = self.named_ref(Kind::Group, "group name")?;
                self.eat(';')?;
                let elems = self.elems()?;
                self.eat(')')?;
                self.bind(&name, Kind::Sub)?;
                Ok(Stmt::Sub { name, group, elems })
            }
            "action" => {
                let name = self.next_ident("name")?;
                self.eat('=')?;
                let head = self.next_ident("action constructor")?;
                self.eat('(')?;
                let expr = match head.as_str() {
                    "conjugation" => {
                        ActionExpr::Conjugation(self.named_ref(Kind::Group, "group name")?)
                    }
                    "trivial" => {
                        let actor = self.named_ref(Kind::Group, "group name")?;
                        self.eat(';')?;
                        let target = self.named_ref(Kind::Group, "group name")?;
                        ActionExpr::Trivial { actor, target }
                    }
                    "by_images" => {
                        let actor = self.named_ref(Kind::Group, "group name")?;
                        self.eat(';')?;
                        let target = self.named_ref(Kind::Group, "group name")?;
                        self.eat(';')?;
                        let mut images = Vec::new();
                        while let Some(Tok::Num(n)) = self.peek() {
                            images.push(*n);
                            self.pos += 1;
                        }
                        ActionExpr::ByImages { actor, target, images }
                    }
                    _ => return Err(self.err(&["conjugation", "trivial", "by_images"])),
                };
                self.eat(')')?;
                self.bind(&name, Kind::Action)?;
                Ok(Stmt::Action { name, expr })
            }
            "ext" => {
                let name = self.next_ident("name")?;
                self.eat('=')?;
                self.keyword("semidirect")?;
                self.eat('(')?;
                let action = self.named_ref(Kind::Action, "action name")?;
                self.eat(')')?;
                self.bind(&name, Kind::Ext)?;
                Ok(Stmt::Ext { name, action })
            }
            "core" => {
                let kind = self.next_ident("core kind")?;
                self.eat('(')?;
                let query = match kind.as_str() {
                    "normal" => CoreQuery::Normal { sub: self.named_ref(Kind::Sub, "sub name")? },
                    "action" => {
                        let sub = self.named_ref(Kind::Sub, "sub name")?;
                        self.eat(';')?;
                        let action = self.named_ref(Kind::Action, "action name")?;
                        CoreQuery::Action { sub, action }
                    }
                    "splitext" => {
                        let sub = self.named_ref(Kind::Sub, "sub name")?;
                        self.eat(';')?;
                        let ext = self.named_ref(Kind::Ext, "ext name")?;
                        CoreQuery::SplitExt { sub, ext }
                    }
                    _ => return Err(self.err(&["normal", "action", "splitext"])),
                };
                self.eat(')')?;
                Ok(Stmt::Core(query))
            }
            "check" => {
                let name = self.next_ident("check name")?;
                self.eat('(')?;
                let call = match name.as_str() {
                    "intersections_binary" | "intersections_family" => {
                        let k = self.named_ref(Kind::Sub, "sub name")?;
                        self.eat(';')?;
                        let b = self.named_ref(Kind::Sub, "sub name")?;
                        if name == "intersections_binary" {
                            CheckCall::IntersectionsBinary { k, b }
                        } else {
                            CheckCall::IntersectionsFamily { k, b }
                        }
                    }
                    "kernel_geometric" => {
                        CheckCall::KernelGeometric { ext: self.named_ref(Kind::Ext, "ext name")? }
                    }
                    "join_normals" => {
                        CheckCall::JoinNormals { group: self.named_ref(Kind::Group, "group name")? }
                    }
                    "higgins" => {
                        CheckCall::Higgins { group: self.named_ref(Kind::Group, "group name")? }
                    }
                    "commutator_join" => CheckCall::CommutatorJoin {
                        group: self.named_ref(Kind::Group, "group name")?,
                    },
                    "three_subobjects" => CheckCall::ThreeSubobjects {
                        group: self.named_ref(Kind::Group, "group name")?,
                    },
                    "core_adjunction" => {
                        CheckCall::CoreAdjunction { ext: self.named_ref(Kind::Ext, "ext name")? }
                    }
                    "core_terminality" => {
                        CheckCall::CoreTerminality { ext: self.named_ref(Kind::Ext, "ext name")? }
                    }
                    "normal_core_pullback" => {
                        CheckCall::NormalCorePullback { sub: self.named_ref(Kind::Sub, "sub name")? }
                    }
                    "clots" => CheckCall::Clots { sub: self.named_ref(Kind::Sub, "sub name")? },
                    "omega_witness" => CheckCall::OmegaWitness,
                    "omega_invariance" => CheckCall::OmegaInvariance { i: self.next_num()? as u64 },
                    "omega_eval" => match self.peek().cloned() {
                        Some(Tok::Str(text)) => {
                            self.pos += 1;
                            CheckCall::OmegaEval { descriptor: parse_descriptor(&text)? }
                        }
                        _ => return Err(self.err(&["quoted descriptor"])),
                    },
                    _ => return Err(self.err(&["a check name"])),
                };
                self.eat(')')?;
                Ok(Stmt::Check(call))
            }
            _ => {
                self.pos -= 1;
                Err(self.err(&["group", "sub", "action", "ext", "core", "check"]))
            }
        }
    }
}

/// Parse a script, enforcing bind-before-use and single assignment.
pub fn parse_script(text: &str) -> Result<Script> {
    let toks = lex(text)?;
    let mut parser = Parser { toks, pos: 0, names: HashMap::new() };
    let mut statements = Vec::new();
    while parser.pos < parser.toks.len() {
        statements.push(parser.stmt()?);
    }
    Ok(Script { statements })
}

// ----- canonical printer -----

fn print_elems(elems: &[ElemSpec]) -> String {
    let parts: Vec<String> = elems
        .iter()
        .map(|e| match e {
            ElemSpec::Index(i) => i.to_string(),
            ElemSpec::Perm(cycles) => cycles
                .iter()
                .map(|c| {
                    let inner: Vec<String> = c.iter().map(|n| n.to_string()).collect();
                    format!("({})", inner.join(" "))
                })
                .collect::<String>(),
        })
        .collect();
    parts.join(" ")
}

/// Render a script in canonical form; `parse_script` inverts this.
pub fn print_script(script: &Script) -> String {
    let mut out = String::new();
    for stmt in &script.statements {
        match stmt {
            Stmt::Group { name, expr } => {
                let _ = writeln!(out, "group {name} = {expr}");
            }
            Stmt::Sub { name, group, elems } => {
                let _ = writeln!(out, "sub {name} = generate({group}; {})", print_elems(elems));
            }
            Stmt::Action { name, expr } => match expr {
                ActionExpr::Conjugation(g) => {
                    let _ = writeln!(out, "action {name} = conjugation({g})");
                }
                ActionExpr::Trivial { actor, target } => {
                    let _ = writeln!(out, "action {name} = trivial({actor}; {target})");
                }
                ActionExpr::ByImages { actor, target, images } => {
                    let nums: Vec<String> = images.iter().map(|n| n.to_string()).collect();
                    let _ = writeln!(
                        out,
                        "action {name} = by_images({actor}; {target}; {})",
                        nums.join(" ")
                    );
                }
            },
            Stmt::Ext { name, action } => {
                let _ = writeln!(out, "ext {name} = semidirect({action})");
            }
            Stmt::Core(query) => match query {
                CoreQuery::Normal { sub } => {
                    let _ = writeln!(out, "core normal({sub})");
                }
                CoreQuery::Action { sub, action } => {
                    let _ = writeln!(out, "core action({sub}; {action})");
                }
                CoreQuery::SplitExt { sub, ext } => {
                    let _ = writeln!(out, "core splitext({sub}; {ext})");
                }
            },
            Stmt::Check(call) => {
                let text = match call {
                    CheckCall::IntersectionsBinary { k, b } => {
                        format!("intersections_binary({k}; {b})")
                    }
                    CheckCall::IntersectionsFamily { k, b } => {
                        format!("intersections_family({k}; {b})")
                    }
                    CheckCall::KernelGeometric { ext } => format!("kernel_geometric({ext})"),
                    CheckCall::JoinNormals { group } => format!("join_normals({group})"),
                    CheckCall::Higgins { group } => format!("higgins({group})"),
                    CheckCall::CommutatorJoin { group } => format!("commutator_join({group})"),
                    CheckCall::ThreeSubobjects { group } => format!("three_subobjects({group})"),
                    CheckCall::CoreAdjunction { ext } => format!("core_adjunction({ext})"),
                    CheckCall::CoreTerminality { ext } => format!("core_terminality({ext})"),
                    CheckCall::NormalCorePullback { sub } => format!("normal_core_pullback({sub})"),
                    CheckCall::Clots { sub } => format!("clots({sub})"),
                    CheckCall::OmegaWitness => "omega_witness()".to_string(),
                    CheckCall::OmegaInvariance { i } => format!("omega_invariance({i})"),
                    CheckCall::OmegaEval { descriptor } => {
                        format!("omega_eval(\"{descriptor}\")")
                    }
                };
                let _ = writeln!(out, "check {text}");
            }
        }
    }
    out
}

// ----- interpreter -----

#[derive(Clone)]
enum Binding {
    Group { group: ArcGroup, perm_degree: Option<usize>, is_alternating: bool },
    Sub(Subgroup),
    Action(BAction),
    Ext(SplitExtension),
}

#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub seed: u64,
    /// Enables the expensive terminality and adjunction scans.
    pub verify: bool,
    /// Raises the automorphism-search bound for `by_images`.
    pub max_order: Option<usize>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { seed: checks::DEFAULT_SEED, verify: false, max_order: None }
    }
}

#[derive(Debug, Default)]
pub struct ScriptOutcome {
    pub lines: Vec<String>,
    pub reports: Vec<CheckReport>,
}

struct Interp {
    env: HashMap<String, Binding>,
    outcome: ScriptOutcome,
    options: RunOptions,
}

impl Interp {
    fn group(&self, name: &str) -> Result<(ArcGroup, Option<usize>, bool)> {
        match self.env.get(name) {
            Some(Binding::Group { group, perm_degree, is_alternating }) => {
                Ok((group.clone(), *perm_degree, *is_alternating))
            }
            _ => Err(Error::input(format!("`{name}` is not a group"))),
        }
    }

    fn sub(&self, name: &str) -> Result<Subgroup> {
        match self.env.get(name) {
            Some(Binding::Sub(s)) => Ok(s.clone()),
            _ => Err(Error::input(format!("`{name}` is not a subgroup"))),
        }
    }

    fn action(&self, name: &str) -> Result<BAction> {
        match self.env.get(name) {
            Some(Binding::Action(a)) => Ok(a.clone()),
            _ => Err(Error::input(format!("`{name}` is not an action"))),
        }
    }

    fn ext(&self, name: &str) -> Result<SplitExtension> {
        match self.env.get(name) {
            Some(Binding::Ext(e)) => Ok(e.clone()),
            _ => Err(Error::input(format!("`{name}` is not an extension"))),
        }
    }

    fn element_index(
        &self,
        spec: &ElemSpec,
        group: &ArcGroup,
        perm_degree: Option<usize>,
        is_alternating: bool,
    ) -> Result<usize> {
        match spec {
            ElemSpec::Index(i) => {
                if *i >= group.order() {
                    Err(Error::input(format!(
                        "element {i} out of range for {}",
                        group.label()
                    )))
                } else {
                    Ok(*i)
                }
            }
            ElemSpec::Perm(cycles) => {
                let degree = perm_degree.ok_or_else(|| {
                    Error::input(
                        "cycle notation needs a symmetric or alternating constructor".to_string(),
                    )
                })?;
                let perm = permutation_from_cycles(degree, cycles)?;
                let all = permutations_lex(degree);
                let perms: Vec<Vec<usize>> = if is_alternating {
                    all.into_iter().filter(|p| permutation_parity(p) == 0).collect()
                } else {
                    all
                };
                perms.iter().position(|p| *p == perm).ok_or_else(|| {
                    Error::input("cycle denotes an odd permutation of an alternating group")
                })
            }
        }
    }

    fn policy(&self) -> FamilyPolicy {
        FamilyPolicy { seed: self.options.seed, ..FamilyPolicy::default() }
    }

    fn say(&mut self, line: String) {
        self.outcome.lines.push(line);
    }

    fn report(&mut self, report: CheckReport) {
        self.outcome.lines.push(report.line());
        self.outcome.reports.push(report);
    }

    fn exec(&mut self, stmt: &Stmt) -> Result<()> {
        match stmt {
            Stmt::Group { name, expr } => {
                let env = &self.env;
                let resolve = |n: &str| match env.get(n) {
                    Some(Binding::Group { group, .. }) => Some(group.clone()),
                    _ => None,
                };
                let group = expr.build(&resolve, None)?;
                let (perm_degree, is_alternating) = match expr {
                    GroupExpr::Named(other) => {
                        let (_, d, alt) = self.group(other)?;
                        (d, alt)
                    }
                    _ => (
                        expr.permutation_degree(),
                        matches!(expr, GroupExpr::Alternating(_)),
                    ),
                };
                self.say(format!("group {name} = {} (order {})", group.label(), group.order()));
                self.env.insert(
                    name.clone(),
                    Binding::Group { group, perm_degree, is_alternating },
                );
                Ok(())
            }
            Stmt::Sub { name, group, elems } => {
                let (g, degree, alt) = self.group(group)?;
                let seed: Vec<usize> = elems
                    .iter()
                    .map(|e| self.element_index(e, &g, degree, alt))
                    .collect::<Result<_>>()?;
                let (sub, iterations) = Subgroup::generate(&g, &seed)?;
                self.say(format!(
                    "sub {name} = {} (order {}, {} iterations)",
                    sub.notation(),
                    sub.order(),
                    iterations
                ));
                self.env.insert(name.clone(), Binding::Sub(sub));
                Ok(())
            }
            Stmt::Action { name, expr } => {
                let action = match expr {
                    ActionExpr::Conjugation(g) => BAction::conjugation(&self.group(g)?.0),
                    ActionExpr::Trivial { actor, target } => {
                        BAction::trivial(&self.group(actor)?.0, &self.group(target)?.0)
                    }
                    ActionExpr::ByImages { actor, target, images } => {
                        let actor = self.group(actor)?.0;
                        let target = self.group(target)?.0;
                        let bound =
                            crate::aut::DEFAULT_AUT_BOUND.max(self.options.max_order.unwrap_or(0));
                        let aut = crate::aut::automorphism_group_bounded(&target, bound)?;
                        let hom = GroupHom::new(actor, aut.group().clone(), images.clone())?;
                        BAction::from_hom(&hom, &aut)?
                    }
                };
                self.say(format!(
                    "action {name} = {} on {}",
                    action.actor().label(),
                    action.target().label()
                ));
                self.env.insert(name.clone(), Binding::Action(action));
                Ok(())
            }
            Stmt::Ext { name, action } => {
                let ext = semidirect_product(&self.action(action)?);
                self.say(format!("ext {name} = {}", ext.describe()));
                self.env.insert(name.clone(), Binding::Ext(ext));
                Ok(())
            }
            Stmt::Core(query) => {
                match query {
                    CoreQuery::Normal { sub } => {
                        let s = self.sub(sub)?;
                        let core = s.normal_core();
                        self.say(format!(
                            "core normal({sub}) = {} (order {})",
                            core.notation(),
                            core.order()
                        ));
                    }
                    CoreQuery::Action { sub, action } => {
                        let s = self.sub(sub)?;
                        let a = self.action(action)?;
                        let core = a.action_core(&s)?;
                        self.say(format!(
                            "core action({sub}; {action}) = {} (order {})",
                            core.notation(),
                            core.order()
                        ));
                    }
                    CoreQuery::SplitExt { sub, ext } => {
                        let s = self.sub(sub)?;
                        let e = self.ext(ext)?;
                        let core = split_extension_core(&s, &e)?;
                        self.say(format!(
                            "core splitext({sub}; {ext}) = kernel {} (order {}), middle {} (order {})",
                            core.kernel_sub.notation(),
                            core.kernel_sub.order(),
                            core.middle_sub.notation(),
                            core.middle_sub.order()
                        ));
                    }
                }
                Ok(())
            }
            Stmt::Check(call) => {
                let report = self.run_check(call)?;
                if let Some(r) = report {
                    self.report(r);
                }
                Ok(())
            }
        }
    }

    fn run_check(&mut self, call: &CheckCall) -> Result<Option<CheckReport>> {
        let policy = self.policy();
        let report = match call {
            CheckCall::IntersectionsBinary { k, b } => {
                let k = self.sub(k)?;
                let b = self.sub(b)?;
                checks::check_intersections_binary(&k.parent().clone(), &k, &b)?
            }
            CheckCall::IntersectionsFamily { k, b } => {
                let k = self.sub(k)?;
                let b = self.sub(b)?;
                let x = k.parent().clone();
                let families = checks::families_above(&x, &b, &policy)?;
                checks::check_intersections_family(&x, &k, &b, &families)?
            }
            CheckCall::KernelGeometric { ext } => {
                checks::check_kernel_geometric_all(&self.ext(ext)?, &policy)?
            }
            CheckCall::JoinNormals { group } => {
                checks::check_join_normals_normal(&self.group(group)?.0, &policy)?
            }
            CheckCall::Higgins { group } => {
                checks::check_higgins_normality(&self.group(group)?.0)?
            }
            CheckCall::CommutatorJoin { group } => {
                checks::check_commutator_join_all(&self.group(group)?.0)?
            }
            CheckCall::ThreeSubobjects { group } => {
                checks::check_three_subobjects(&self.group(group)?.0)?
            }
            CheckCall::CoreAdjunction { ext } => {
                checks::check_core_adjunction(&self.ext(ext)?)?
            }
            CheckCall::CoreTerminality { ext } => {
                checks::check_core_terminality(&self.ext(ext)?)?
            }
            CheckCall::NormalCorePullback { sub } => {
                checks::check_normal_core_pullback(&self.sub(sub)?)?
            }
            CheckCall::Clots { sub } => checks::check_clots(&self.sub(sub)?)?,
            CheckCall::OmegaWitness => verify_witness(64),
            CheckCall::OmegaInvariance { i } => {
                let samples = sample_invariance_inputs(*i, 1000, self.options.seed);
                verify_ni_invariance(*i, &samples)?
            }
            CheckCall::OmegaEval { descriptor } => {
                self.say(format!("omega_eval(\"{descriptor}\") = {}", descriptor.omega_eval()));
                return Ok(None);
            }
        };
        Ok(Some(report))
    }
}

/// Execute a parsed script. Runtime errors name the statement index.
pub fn run_script(script: &Script, options: &RunOptions) -> Result<ScriptOutcome> {
    let mut interp =
        Interp { env: HashMap::new(), outcome: ScriptOutcome::default(), options: *options };
    for (idx, stmt) in script.statements.iter().enumerate() {
        interp
            .exec(stmt)
            .map_err(|e| Error::input(format!("statement {}: {e}", idx + 1)))?;
    }
    Ok(interp.outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Verdict;

    #[test]
    fn empty_script_parses_to_no_statements() {
        let script = parse_script("").unwrap();
        assert!(script.statements.is_empty());
        let script = parse_script("# only a comment\n").unwrap();
        assert!(script.statements.is_empty());
    }

    #[test]
    fn single_binding_parses() {
        let script = parse_script("group G = symmetric(3)").unwrap();
        assert_eq!(script.statements.len(), 1);
        assert_eq!(
            script.statements[0],
            Stmt::Group { name: "G".into(), expr: GroupExpr::Symmetric(3) }
        );
    }

    #[test]
    fn use_before_definition_is_a_binding_error() {
        let err = parse_script("sub H = generate(G; 1 2)").unwrap_err();
        assert!(matches!(err, Error::Binding { line: 1, .. }), "{err}");
    }

    #[test]
    fn double_assignment_is_rejected() {
        let text = "group G = cyclic(2)\ngroup G = cyclic(3)\n";
        let err = parse_script(text).unwrap_err();
        assert!(matches!(err, Error::Binding { line: 2, .. }), "{err}");
    }

    #[test]
    fn kind_mismatch_is_reported() {
        let text = "group G = cyclic(2)\next E = semidirect(G)\n";
        let err = parse_script(text).unwrap_err();
        assert!(err.to_string().contains("action"), "{err}");
    }

    #[test]
    fn parse_errors_carry_position_and_expectations() {
        let err = parse_script("group G = ???").unwrap_err();
        match err {
            Error::Parse { line, col, .. } => {
                assert_eq!(line, 1);
                assert!(col >= 10);
            }
            other => panic!("expected parse error, got {other}"),
        }
    }

    const DEMO: &str = r#"
group G = symmetric(3)
group B = cyclic(2)
sub H = generate(G; (0 1))
sub K = generate(G; 3)
action inv = by_images(B; G; 0 1)
ext E = semidirect(inv)
core normal(H)
core action(K; inv)
core splitext(K; E)
check higgins(G)
check intersections_binary(K; H)
check clots(K)
check omega_witness()
check omega_eval("const{;1}")
"#;

    #[test]
    fn demo_script_round_trips_and_runs() {
        let script = parse_script(DEMO).unwrap();
        let printed = print_script(&script);
        assert_eq!(parse_script(&printed).unwrap(), script);

        let outcome = run_script(&script, &RunOptions::default()).unwrap();
        assert_eq!(outcome.reports.len(), 4);
        assert!(outcome.reports.iter().all(|r| r.verdict == Verdict::Holds));
        assert!(outcome.lines.iter().any(|l| l.contains("core normal(H) = [0]")));
        assert!(outcome
            .lines
            .iter()
            .any(|l| l.contains("omega_eval(\"const{;1}\") = {;0}")));
    }

    #[test]
    fn cycle_notation_matches_indices() {
        let text = "group G = symmetric(3)\nsub H = generate(G; (0 1))\nsub K = generate(G; 2)\n";
        let script = parse_script(text).unwrap();
        let outcome = run_script(&script, &RunOptions::default()).unwrap();
        // (0 1) is index 2 in lex order, so H and K agree
        let h_line = outcome.lines.iter().find(|l| l.starts_with("sub H")).unwrap();
        let k_line = outcome.lines.iter().find(|l| l.starts_with("sub K")).unwrap();
        assert_eq!(h_line.replace("sub H", ""), k_line.replace("sub K", ""));
    }

    #[test]
    fn adjacent_cycles_form_one_element() {
        // (0 1)(2 3) is one double transposition; (0 1) (2 3) is two
        // transpositions and generates a larger subgroup
        let adjacent = "group G = symmetric(4)\nsub H = generate(G; (0 1)(2 3))\n";
        let script = parse_script(adjacent).unwrap();
        assert_eq!(parse_script(&print_script(&script)).unwrap(), script);
        let outcome = run_script(&script, &RunOptions::default()).unwrap();
        assert!(outcome.lines.iter().any(|l| l.contains("order 2")), "{:?}", outcome.lines);

        let separated = "group G = symmetric(4)\nsub H = generate(G; (0 1) (2 3))\n";
        let outcome =
            run_script(&parse_script(separated).unwrap(), &RunOptions::default()).unwrap();
        assert!(outcome.lines.iter().any(|l| l.contains("order 4")), "{:?}", outcome.lines);
    }

    #[test]
    fn runtime_errors_name_the_statement() {
        let text = "group G = cyclic(3)\nsub H = generate(G; 7)\n";
        let script = parse_script(text).unwrap();
        let err = run_script(&script, &RunOptions::default()).unwrap_err();
        assert!(err.to_string().contains("statement 2"), "{err}");
    }

    #[test]
    fn by_images_validates_the_hom() {
        // C3 has Aut of order 2; sending the generator to inversion is
        // fine, but a non-multiplicative assignment is not
        let ok = "group B = cyclic(2)\ngroup X = cyclic(3)\naction a = by_images(B; X; 0 1)\n";
        assert!(run_script(&parse_script(ok).unwrap(), &RunOptions::default()).is_ok());
        let bad = "group B = cyclic(4)\ngroup X = cyclic(3)\naction a = by_images(B; X; 0 1 0 0)\n";
        assert!(run_script(&parse_script(bad).unwrap(), &RunOptions::default()).is_err());
    }
}
