//! The group catalog: constructor expressions, the built-in corpus the
//! suites run over, and manifest files.

use std::fmt;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use crate::action::enumerate_actions;
use crate::error::{Error, Result};
use crate::extension::{semidirect_product, SplitExtension};
use crate::group::{parse_cayley_table, format_cayley_table, ArcGroup, FiniteGroup};
use crate::hom::{are_isomorphic, direct_product};

/// Default cap on the order of product entries in the built-in catalog.
pub const DEFAULT_CATALOG_CAP: usize = 24;

/// A constructor expression for a group. `Named` refers to a binding in
/// a script environment and is not allowed in manifest files.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupExpr {
    Named(String),
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Quaternion8,
    DirectProduct(Box<GroupExpr>, Box<GroupExpr>),
    /// `Semidirect(kernel, actor, k)`: the semidirect product along the
    /// `k`-th action of the actor on the kernel, in enumeration order.
    Semidirect(Box<GroupExpr>, Box<GroupExpr>, usize),
    FromTable(String),
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Named(name) => write!(f, "{name}"),
            GroupExpr::Cyclic(n) => write!(f, "cyclic({n})"),
            GroupExpr::Dihedral(n) => write!(f, "dihedral({n})"),
            GroupExpr::Symmetric(n) => write!(f, "symmetric({n})"),
            GroupExpr::Alternating(n) => write!(f, "alternating({n})"),
            GroupExpr::Quaternion8 => write!(f, "quaternion8"),
            GroupExpr::DirectProduct(a, b) => write!(f, "direct_product({a}, {b})"),
            GroupExpr::Semidirect(x, b, k) => write!(f, "semidirect({x}, {b}, {k})"),
            GroupExpr::FromTable(path) => write!(f, "from_table(\"{path}\")"),
        }
    }
}

impl GroupExpr {
    /// Build the group. `resolve` supplies named bindings; `base_dir`
    /// anchors relative table paths.
    pub fn build(
        &self,
        resolve: &dyn Fn(&str) -> Option<ArcGroup>,
        base_dir: Option<&Path>,
    ) -> Result<ArcGroup> {
        match self {
            GroupExpr::Named(name) => resolve(name)
                .ok_or_else(|| Error::input(format!("unknown group name `{name}`"))),
            GroupExpr::Cyclic(n) => Ok(FiniteGroup::cyclic(*n)?.into_arc()),
            GroupExpr::Dihedral(n) => Ok(FiniteGroup::dihedral(*n)?.into_arc()),
            GroupExpr::Symmetric(n) => Ok(FiniteGroup::symmetric(*n)?.into_arc()),
            GroupExpr::Alternating(n) => Ok(FiniteGroup::alternating(*n)?.into_arc()),
            GroupExpr::Quaternion8 => Ok(FiniteGroup::quaternion8().into_arc()),
            GroupExpr::DirectProduct(a, b) => {
                let left = a.build(resolve, base_dir)?;
                let right = b.build(resolve, base_dir)?;
                Ok(direct_product(&left, &right).group)
            }
            GroupExpr::Semidirect(x, b, k) => {
                let kernel = x.build(resolve, base_dir)?;
                let actor = b.build(resolve, base_dir)?;
                let actions = enumerate_actions(&actor, &kernel)?;
                let act = actions.get(*k).ok_or_else(|| {
                    Error::input(format!(
                        "semidirect action index {k} out of range: {} on {} has {} actions",
                        actor.label(),
                        kernel.label(),
                        actions.len()
                    ))
                })?;
                let ext = semidirect_product(act);
                let label = format!("{}:{}[{}]", kernel.label(), actor.label(), k);
                Ok(Arc::new((**ext.middle()).clone().with_label(label)))
            }
            GroupExpr::FromTable(path) => {
                let full = match base_dir {
                    Some(dir) => dir.join(path),
                    None => PathBuf::from(path),
                };
                let text = std::fs::read_to_string(&full)?;
                let label = full
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| "table".to_string());
                Ok(parse_cayley_table(&text, &label)?.into_arc())
            }
        }
    }

    /// Does this expression mention script bindings?
    pub fn has_names(&self) -> bool {
        match self {
            GroupExpr::Named(_) => true,
            GroupExpr::DirectProduct(a, b) => a.has_names() || b.has_names(),
            GroupExpr::Semidirect(a, b, _) => a.has_names() || b.has_names(),
            _ => false,
        }
    }

    /// Degree of the permutation representation, when the expression is
    /// a symmetric or alternating constructor (used for cycle notation).
    pub fn permutation_degree(&self) -> Option<usize> {
        match self {
            GroupExpr::Symmetric(n) | GroupExpr::Alternating(n) => Some(*n),
            _ => None,
        }
    }
}

/// Parse a constructor expression from text (manifest line syntax).
pub fn parse_group_expr(text: &str) -> Result<GroupExpr> {
    let mut p = ExprParser { chars: text.chars().collect(), pos: 0 };
    let expr = p.expr()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(Error::input(format!("trailing input after group expression: `{}`",
            p.rest())));
    }
    Ok(expr)
}

struct ExprParser {
    chars: Vec<char>,
    pos: usize,
}

impl ExprParser {
    fn rest(&self) -> String {
        self.chars[self.pos..].iter().collect()
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.chars.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::input(format!("expected `{c}` at `{}`", self.rest())))
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self
            .chars
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_')
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::input(format!("expected identifier at `{}`", self.rest())));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::input(format!("expected number at `{}`", self.rest())));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse().map_err(|_| Error::input(format!("bad number `{text}`")))
    }

    fn path(&mut self) -> Result<String> {
        self.skip_ws();
        if self.chars.get(self.pos) == Some(&'"') {
            self.pos += 1;
            let start = self.pos;
            while self.chars.get(self.pos).is_some_and(|&c| c != '"') {
                self.pos += 1;
            }
            if self.chars.get(self.pos) != Some(&'"') {
                return Err(Error::input("unterminated path string"));
            }
            let text: String = self.chars[start..self.pos].iter().collect();
            self.pos += 1;
            Ok(text)
        } else {
            let start = self.pos;
            while self.chars.get(self.pos).is_some_and(|&c| c != ')' && !c.is_whitespace()) {
                self.pos += 1;
            }
            if self.pos == start {
                return Err(Error::input("expected a file path"));
            }
            Ok(self.chars[start..self.pos].iter().collect())
        }
    }

    fn expr(&mut self) -> Result<GroupExpr> {
        let name = self.ident()?;
        self.skip_ws();
        if self.chars.get(self.pos) != Some(&'(') {
            return match name.as_str() {
                "quaternion8" => Ok(GroupExpr::Quaternion8),
                _ => Ok(GroupExpr::Named(name)),
            };
        }
        self.eat('(')?;
        let expr = match name.as_str() {
            "cyclic" => GroupExpr::Cyclic(self.number()?),
            "dihedral" => GroupExpr::Dihedral(self.number()?),
            "symmetric" => GroupExpr::Symmetric(self.number()?),
            "alternating" => GroupExpr::Alternating(self.number()?),
            "direct_product" => {
                let a = self.expr()?;
                self.eat(',')?;
                let b = self.expr()?;
                GroupExpr::DirectProduct(Box::new(a), Box::new(b))
            }
            "semidirect" => {
                let x = self.expr()?;
                self.eat(',')?;
                let b = self.expr()?;
                self.eat(',')?;
                let k = self.number()?;
                GroupExpr::Semidirect(Box::new(x), Box::new(b), k)
            }
            "from_table" => GroupExpr::FromTable(self.path()?),
            other => {
                return Err(Error::input(format!("unknown constructor `{other}`")));
            }
        };
        self.eat(')')?;
        Ok(expr)
    }
}

// ----- the catalog -----

#[derive(Debug)]
pub struct CatalogEntry {
    pub expr: GroupExpr,
    pub group: ArcGroup,
}

/// A named corpus of validated groups.
#[derive(Debug)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    /// The shipped corpus: cyclic groups through C16, dihedral D3–D8,
    /// Q8, S3, S4 and A4, plus all direct and semidirect products of
    /// those members with order at most `cap`.
    pub fn built_in(cap: usize) -> Result<Catalog> {
        let base = base_member_exprs();
        let no_names = |_: &str| None;
        let mut entries = Vec::new();
        let mut base_groups = Vec::new();
        for expr in &base {
            let group = expr.build(&no_names, None)?;
            base_groups.push(group.clone());
            entries.push(CatalogEntry { expr: expr.clone(), group });
        }
        for (i, left) in base_groups.iter().enumerate() {
            for (j, right) in base_groups.iter().enumerate().skip(i) {
                if left.order() * right.order() <= cap {
                    let expr = GroupExpr::DirectProduct(
                        Box::new(base[i].clone()),
                        Box::new(base[j].clone()),
                    );
                    let group = direct_product(left, right).group;
                    entries.push(CatalogEntry { expr, group });
                }
            }
        }
        for (i, kernel) in base_groups.iter().enumerate() {
            for (j, actor) in base_groups.iter().enumerate() {
                if kernel.order() * actor.order() > cap
                    || kernel.order() < 2
                    || actor.order() < 2
                {
                    continue;
                }
                let actions = enumerate_actions(actor, kernel)?;
                for (k, action) in actions.iter().enumerate().skip(1) {
                    let expr = GroupExpr::Semidirect(
                        Box::new(base[i].clone()),
                        Box::new(base[j].clone()),
                        k,
                    );
                    let ext = semidirect_product(action);
                    let label = format!("{}:{}[{}]", kernel.label(), actor.label(), k);
                    let group = Arc::new((**ext.middle()).clone().with_label(label));
                    entries.push(CatalogEntry { expr, group });
                }
            }
        }
        Ok(Catalog { entries })
    }

    pub fn groups(&self) -> impl Iterator<Item = &ArcGroup> {
        self.entries.iter().map(|e| &e.group)
    }

    pub fn find(&self, label: &str) -> Option<&ArcGroup> {
        self.entries.iter().find(|e| e.group.label() == label).map(|e| &e.group)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Load a catalog from a manifest: one constructor expression per
    /// line, `#` comments, table paths relative to the manifest.
    pub fn load(path: &Path) -> Result<Catalog> {
        let text = std::fs::read_to_string(path)?;
        let base_dir = path.parent().map(Path::to_path_buf);
        let mut entries = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let expr = parse_group_expr(line).map_err(|e| Error::Manifest {
                path: path.to_path_buf(),
                message: format!("line {}: {e}", lineno + 1),
            })?;
            if expr.has_names() {
                return Err(Error::Manifest {
                    path: path.to_path_buf(),
                    message: format!("line {}: named references are not allowed", lineno + 1),
                });
            }
            let group = expr.build(&|_| None, base_dir.as_deref()).map_err(|e| {
                Error::Manifest {
                    path: path.to_path_buf(),
                    message: format!("line {}: {e}", lineno + 1),
                }
            })?;
            entries.push(CatalogEntry { expr, group });
        }
        Ok(Catalog { entries })
    }

    /// Write the manifest; table-backed entries also get their Cayley
    /// table written next to it, so the result is self-contained.
    pub fn save(&self, path: &Path) -> Result<()> {
        let base_dir = path.parent().map(Path::to_path_buf);
        let mut out = String::from("# selab catalog manifest\n");
        for entry in &self.entries {
            if let GroupExpr::FromTable(rel) = &entry.expr {
                let full = match &base_dir {
                    Some(dir) => dir.join(rel),
                    None => PathBuf::from(rel),
                };
                if let Some(parent) = full.parent() {
                    std::fs::create_dir_all(parent)?;
                }
                std::fs::write(&full, format_cayley_table(&entry.group))?;
            }
            out.push_str(&entry.expr.to_string());
            out.push('\n');
        }
        std::fs::write(path, out)?;
        Ok(())
    }
}

/// Constructor expressions for the base members of the shipped catalog.
pub fn base_member_exprs() -> Vec<GroupExpr> {
    let mut out: Vec<GroupExpr> = (1..=16).map(GroupExpr::Cyclic).collect();
    out.extend((3..=8).map(GroupExpr::Dihedral));
    out.push(GroupExpr::Quaternion8);
    out.push(GroupExpr::Symmetric(3));
    out.push(GroupExpr::Symmetric(4));
    out.push(GroupExpr::Alternating(4));
    out
}

/// The base members, built.
pub fn base_members() -> Result<Vec<ArcGroup>> {
    base_member_exprs().iter().map(|e| e.build(&|_| None, None)).collect()
}

/// Every split extension arising from an action between base members
/// with middle order at most `max_middle`, in deterministic order.
pub fn acceptance_extensions(max_middle: usize) -> Result<Vec<SplitExtension>> {
    let base = base_members()?;
    let mut out = Vec::new();
    for kernel in &base {
        for actor in &base {
            if kernel.order() * actor.order() > max_middle {
                continue;
            }
            for act in enumerate_actions(actor, kernel)? {
                out.push(semidirect_product(&act));
            }
        }
    }
    Ok(out)
}

/// Points over a fixed base with kernels drawn from the given pool,
/// capped by middle order.
pub fn points_over(
    base: &ArcGroup,
    kernels: &[ArcGroup],
    max_middle: usize,
) -> Result<Vec<SplitExtension>> {
    let mut out = Vec::new();
    for kernel in kernels {
        if kernel.order() * base.order() > max_middle {
            continue;
        }
        for act in enumerate_actions(base, kernel)? {
            out.push(semidirect_product(&act));
        }
    }
    Ok(out)
}

/// Thin a pool of groups to one representative per isomorphism class.
pub fn dedupe_by_isomorphism(pool: &[ArcGroup]) -> Vec<ArcGroup> {
    let mut out: Vec<ArcGroup> = Vec::new();
    for g in pool {
        if !out.iter().any(|h| are_isomorphic(g, h)) {
            out.push(g.clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expressions_round_trip_through_text() {
        let cases = [
            "cyclic(6)",
            "dihedral(4)",
            "quaternion8",
            "direct_product(symmetric(3), cyclic(2))",
            "semidirect(cyclic(3), cyclic(2), 1)",
            "from_table(\"tables/g.tbl\")",
        ];
        for text in cases {
            let expr = parse_group_expr(text).unwrap();
            assert_eq!(parse_group_expr(&expr.to_string()).unwrap(), expr, "{text}");
        }
    }

    #[test]
    fn semidirect_index_one_of_c3_c2_is_s3() {
        let expr = parse_group_expr("semidirect(cyclic(3), cyclic(2), 1)").unwrap();
        let g = expr.build(&|_| None, None).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert_eq!(g.label(), "C3:C2[1]");
    }

    #[test]
    fn built_in_catalog_contains_the_base_members() {
        let catalog = Catalog::built_in(DEFAULT_CATALOG_CAP).unwrap();
        for label in ["C1", "C16", "D3", "D8", "Q8", "S3", "S4", "A4"] {
            assert!(catalog.find(label).is_some(), "{label} missing");
        }
        // products present and capped
        assert!(catalog.find("C2xS3").is_some());
        assert!(catalog.groups().all(|g| g.order() <= 24));
        assert!(catalog.find("C3:C2[1]").is_some());
    }

    #[test]
    fn manifest_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("catalog.txt");
        let manifest = "cyclic(5)\n# a comment\ndirect_product(cyclic(2), cyclic(2))\n";
        std::fs::write(&path, manifest).unwrap();
        let catalog = Catalog::load(&path).unwrap();
        assert_eq!(catalog.len(), 2);
        let out = dir.path().join("saved.txt");
        catalog.save(&out).unwrap();
        let reloaded = Catalog::load(&out).unwrap();
        assert_eq!(reloaded.len(), 2);
        for (a, b) in catalog.groups().zip(reloaded.groups()) {
            assert_eq!(**a, **b);
            assert_eq!(a.label(), b.label());
        }
    }

    #[test]
    fn manifest_with_table_reference_round_trips() {
        let dir = tempfile::tempdir().unwrap();
        let table_path = dir.path().join("klein.tbl");
        let c2 = FiniteGroup::cyclic(2).unwrap().into_arc();
        let v4 = direct_product(&c2, &c2).group;
        std::fs::write(&table_path, format_cayley_table(&v4)).unwrap();
        let manifest_path = dir.path().join("catalog.txt");
        std::fs::write(&manifest_path, "from_table(\"klein.tbl\")\n").unwrap();
        let catalog = Catalog::load(&manifest_path).unwrap();
        assert_eq!(catalog.entries[0].group.label(), "klein");
        assert_eq!(**catalog.find("klein").unwrap(), *v4);
        // saving into a fresh directory rewrites the table file
        let other = tempfile::tempdir().unwrap();
        let out = other.path().join("catalog.txt");
        catalog.save(&out).unwrap();
        let reloaded = Catalog::load(&out).unwrap();
        assert_eq!(**reloaded.find("klein").unwrap(), *v4);
    }

    #[test]
    fn manifests_reject_bad_tables_with_the_axiom() {
        let dir = tempfile::tempdir().unwrap();
        let table_path = dir.path().join("broken.tbl");
        std::fs::write(&table_path, "order 2\n0 1\n1 1\n").unwrap();
        let manifest_path = dir.path().join("catalog.txt");
        std::fs::write(&manifest_path, "from_table(\"broken.tbl\")\n").unwrap();
        let err = Catalog::load(&manifest_path).expect_err("broken table must be rejected");
        let msg = err.to_string();
        assert!(msg.contains("inverse axiom"), "{msg}");

        // non-associative table: the error names the witness triple
        std::fs::write(&table_path, "order 3\n0 1 2\n1 0 2\n2 1 0\n").unwrap();
        let err = Catalog::load(&manifest_path).expect_err("broken table must be rejected");
        let msg = err.to_string();
        assert!(msg.contains("associativity axiom: witness triple"), "{msg}");
    }

    #[test]
    fn empty_manifest_gives_empty_catalog() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("catalog.txt");
        std::fs::write(&path, "# nothing here\n").unwrap();
        let catalog = Catalog::load(&path).unwrap();
        assert!(catalog.is_empty());
    }

    #[test]
    fn iso_dedupe_thins_duplicates() {
        let c6 = FiniteGroup::cyclic(6).unwrap().into_arc();
        let c2 = FiniteGroup::cyclic(2).unwrap().into_arc();
        let c3 = FiniteGroup::cyclic(3).unwrap().into_arc();
        let c2xc3 = direct_product(&c2, &c3).group;
        let s3 = FiniteGroup::symmetric(3).unwrap().into_arc();
        let pool = vec![c6, c2xc3, s3];
        assert_eq!(dedupe_by_isomorphism(&pool).len(), 2);
    }
}
