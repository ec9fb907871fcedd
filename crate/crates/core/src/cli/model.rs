//! Model files: one declaration per line, `#` starts a comment.
//!
//! ```text
//! ring R2 = GF(2)[x] / (x^2)
//! ring Q = QQ[x, y] lex
//! module I = R2^1 / [x]
//! module F = R2^2
//! map f : I -> I = [1]
//! submodule Z = Q^2 < [x; 1]
//! element a = R2 : x
//! intmatrix A = [2, 0; 0, 3]
//! task pd I
//! ```
//!
//! Matrices are row-major, rows separated by `;`. Module matrices hold one
//! relation per column, submodule matrices one generator per column.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::sync::Arc;

use clap::Parser;
use num_bigint::BigInt;

use super::command::Command;
use crate::error::{Error, Result};
use crate::kgroups::IntMatrix;
use crate::module::{FPModule, Matrix, ModuleMap, SubmoduleOfFree};
use crate::ring::{Field, MonomialOrder, Poly, PolyRing, QuotRing, DEFAULT_DEGREE_GUARD};

#[derive(Debug, Clone, PartialEq)]
pub struct RingDecl {
    pub name: String,
    pub ring: Arc<QuotRing>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModuleDecl {
    pub name: String,
    pub ring: String,
    pub module: FPModule,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SubmoduleDecl {
    pub name: String,
    pub ring: String,
    pub submodule: SubmoduleOfFree,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ElementDecl {
    pub name: String,
    pub ring: String,
    pub element: Poly,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MapDecl {
    pub name: String,
    pub source: String,
    pub target: String,
    pub map: ModuleMap,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrixDecl {
    pub name: String,
    pub rows: IntMatrix,
    pub ncols: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModelFile {
    pub rings: Vec<RingDecl>,
    pub modules: Vec<ModuleDecl>,
    pub submodules: Vec<SubmoduleDecl>,
    pub elements: Vec<ElementDecl>,
    pub maps: Vec<MapDecl>,
    pub intmatrices: Vec<IntMatrixDecl>,
    pub tasks: Vec<Command>,
}

#[derive(Parser)]
#[command(no_binary_name = true)]
struct TaskWords {
    #[command(subcommand)]
    command: Command,
}

impl ModelFile {
    pub fn empty() -> Self {
        ModelFile {
            rings: Vec::new(),
            modules: Vec::new(),
            submodules: Vec::new(),
            elements: Vec::new(),
            maps: Vec::new(),
            intmatrices: Vec::new(),
            tasks: Vec::new(),
        }
    }

    pub fn ring(&self, name: &str) -> Result<&Arc<QuotRing>> {
        self.rings
            .iter()
            .find(|d| d.name == name)
            .map(|d| &d.ring)
            .ok_or_else(|| unknown("ring", name))
    }

    pub fn module(&self, name: &str) -> Result<&FPModule> {
        self.modules
            .iter()
            .find(|d| d.name == name)
            .map(|d| &d.module)
            .ok_or_else(|| unknown("module", name))
    }

    pub fn submodule(&self, name: &str) -> Result<&SubmoduleOfFree> {
        self.submodules
            .iter()
            .find(|d| d.name == name)
            .map(|d| &d.submodule)
            .ok_or_else(|| unknown("submodule", name))
    }

    pub fn map(&self, name: &str) -> Result<&ModuleMap> {
        self.maps
            .iter()
            .find(|d| d.name == name)
            .map(|d| &d.map)
            .ok_or_else(|| unknown("map", name))
    }

    pub fn intmatrix(&self, name: &str) -> Result<&IntMatrixDecl> {
        self.intmatrices
            .iter()
            .find(|d| d.name == name)
            .ok_or_else(|| unknown("integer matrix", name))
    }

    /// A declared element of `ring`, or a polynomial literal in it.
    pub fn element(&self, ring: &str, text: &str) -> Result<Poly> {
        let r = self.ring(ring)?;
        if let Some(d) = self.elements.iter().find(|d| d.name == text) {
            if d.ring != ring {
                return Err(Error::Model(format!(
                    "element `{text}` is declared over `{}`, not `{ring}`",
                    d.ring
                )));
            }
            return Ok(d.element.clone());
        }
        r.parse(text)
            .map_err(|e| Error::Model(format!("`{text}` is neither a declared element nor a polynomial over `{ring}`: {e}")))
    }

    /// Text that parses back to an equal model.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for d in &self.rings {
            let r = &d.ring;
            let base = r.base();
            let _ = write!(out, "ring {} = {}[{}]", d.name, base.field(), base.vars().join(", "));
            let gens = r.modulus().generators();
            if !gens.is_empty() {
                let g: Vec<String> = gens.iter().map(|g| r.display(g)).collect();
                let _ = write!(out, " / ({})", g.join(", "));
            }
            let _ = writeln!(out, " {}", base.order().name());
        }
        for d in &self.modules {
            let m = &d.module;
            let _ = write!(out, "module {} = {}^{}", d.name, d.ring, m.ngens());
            if m.relations().ncols() > 0 {
                let _ = write!(out, " / {}", m.relations().display(m.ring()));
            }
            out.push('\n');
        }
        for d in &self.submodules {
            let s = &d.submodule;
            let m = Matrix::from_columns(s.rank(), s.generators().to_vec()).expect("generator lengths match the rank");
            let _ = writeln!(out, "submodule {} = {}^{} < {}", d.name, d.ring, s.rank(), m.display(s.ring()));
        }
        for d in &self.elements {
            let r = self.ring(&d.ring).expect("declared ring");
            let _ = writeln!(out, "element {} = {} : {}", d.name, d.ring, r.display(&d.element));
        }
        for d in &self.maps {
            let _ = writeln!(
                out,
                "map {} : {} -> {} = {}",
                d.name,
                d.source,
                d.target,
                d.map.matrix().display(d.map.ring())
            );
        }
        for d in &self.intmatrices {
            let _ = writeln!(out, "intmatrix {} = {}", d.name, int_matrix_display(&d.rows));
        }
        for t in &self.tasks {
            let _ = writeln!(out, "task {}", t.words().join(" "));
        }
        out
    }
}

fn unknown(kind: &str, name: &str) -> Error {
    Error::Model(format!("unknown {kind} `{name}`"))
}

pub fn int_matrix_display(rows: &IntMatrix) -> String {
    let r: Vec<String> = rows
        .iter()
        .map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
        .collect();
    format!("[{}]", r.join("; "))
}

/// Position-tracking reader over one line.
struct Cursor<'a> {
    text: &'a str,
    pos: usize,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn diag_at(&self, pos: usize, message: impl std::fmt::Display) -> Error {
        Error::Model(format!("line {}, column {}: {}", self.line, pos + 1, message))
    }

    fn diag(&self, message: impl std::fmt::Display) -> Error {
        self.diag_at(self.pos, message)
    }

    fn ws(&mut self) {
        while self.text[self.pos..].starts_with([' ', '\t']) {
            self.pos += 1;
        }
    }

    fn at_end(&mut self) -> bool {
        self.ws();
        self.pos >= self.text.len()
    }

    fn eat(&mut self, s: &str) -> bool {
        self.ws();
        if self.text[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<()> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(self.diag(format!("expected `{s}`")))
        }
    }

    fn ident(&mut self) -> Result<(String, usize)> {
        self.ws();
        let start = self.pos;
        let rest = &self.text[start..];
        let len = rest
            .char_indices()
            .find(|&(i, c)| !(c == '_' || c.is_ascii_alphabetic() || (i > 0 && c.is_ascii_digit())))
            .map_or(rest.len(), |(i, _)| i);
        if len == 0 {
            return Err(self.diag("expected a name"));
        }
        self.pos += len;
        Ok((rest[..len].to_string(), start))
    }

    fn number(&mut self) -> Result<(u64, usize)> {
        self.ws();
        let start = self.pos;
        let rest = &self.text[start..];
        let len = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        let n = rest[..len].parse().map_err(|_| self.diag("expected a number"))?;
        self.pos += len;
        Ok((n, start))
    }

    /// Text up to (not including) `stop`, which is consumed.
    fn until(&mut self, stop: char) -> Result<(&'a str, usize)> {
        let start = self.pos;
        match self.text[start..].find(stop) {
            Some(i) => {
                self.pos = start + i + stop.len_utf8();
                Ok((&self.text[start..start + i], start))
            }
            None => Err(self.diag(format!("missing `{stop}`"))),
        }
    }

    fn rest(&mut self) -> (&'a str, usize) {
        self.ws();
        let start = self.pos;
        self.pos = self.text.len();
        (&self.text[start..], start)
    }

    fn finish(&mut self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.diag("unexpected trailing text"))
        }
    }

    /// Comma-separated pieces of `s` (which starts at `offset`), trimmed,
    /// with their positions. Empty input gives no pieces.
    fn split(s: &str, offset: usize, sep: char) -> Vec<(&str, usize)> {
        if s.trim().is_empty() {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut at = offset;
        for piece in s.split(sep) {
            let lead = piece.len() - piece.trim_start().len();
            out.push((piece.trim(), at + lead));
            at += piece.len() + sep.len_utf8();
        }
        out
    }

    /// `[a, b; c, d]` as rows of positioned entries.
    fn matrix(&mut self) -> Result<Vec<Vec<(&'a str, usize)>>> {
        self.expect("[")?;
        let (body, start) = self.until(']')?;
        let rows: Vec<Vec<(&str, usize)>> = Cursor::split(body, start, ';')
            .into_iter()
            .map(|(r, at)| Cursor::split(r, at, ','))
            .collect();
        if let Some(w) = rows.first().map(|r| r.len()) {
            for r in &rows {
                if r.len() != w {
                    return Err(self.diag_at(r.first().map_or(start, |e| e.1), "rows of different lengths"));
                }
            }
            for r in &rows {
                for (e, at) in r {
                    if e.is_empty() {
                        return Err(self.diag_at(*at, "empty matrix entry"));
                    }
                }
            }
        }
        Ok(rows)
    }

    fn poly(&self, ring: &QuotRing, text: &str, at: usize) -> Result<Poly> {
        ring.parse(text).map_err(|e| match e {
            Error::Parse { column, message } => self.diag_at(at + column - 1, message),
            other => self.diag_at(at, other),
        })
    }

    fn poly_matrix(&mut self, ring: &QuotRing, nrows: usize, ncols_hint: Option<usize>) -> Result<Matrix> {
        let at = self.pos;
        let rows = self.matrix()?;
        if rows.is_empty() {
            return Ok(Matrix::zero(nrows, ncols_hint.unwrap_or(0)));
        }
        if rows.len() != nrows {
            return Err(self.diag_at(at, format!("matrix has {} rows, expected {nrows}", rows.len())));
        }
        let ncols = rows[0].len();
        if let Some(c) = ncols_hint {
            if c != ncols {
                return Err(self.diag_at(at, format!("matrix has {ncols} columns, expected {c}")));
            }
        }
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|(e, p)| self.poly(ring, e, *p)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(ncols, parsed).map_err(|e| self.diag_at(at, e))
    }
}

/// Parses and validates a model file; every ring gets `degree_guard`.
pub fn parse_model_file(text: &str, degree_guard: u32) -> Result<ModelFile> {
    let mut model = ModelFile::empty();
    let mut seen: HashSet<String> = HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let mut cur = Cursor {
            text: line,
            pos: 0,
            line: i + 1,
        };
        if cur.at_end() {
            continue;
        }
        let (kw, kw_at) = cur.ident()?;
        if kw == "task" {
            let (rest, at) = cur.rest();
            let words: Vec<&str> = rest.split_whitespace().collect();
            let task = TaskWords::try_parse_from(&words)
                .map_err(|e| cur.diag_at(at, first_line(&e.to_string())))?
                .command;
            if matches!(task, Command::Report) {
                return Err(cur.diag_at(at, "`report` cannot be a task"));
            }
            task.validate(&model).map_err(|e| cur.diag_at(at, e))?;
            model.tasks.push(task);
            continue;
        }
        let (name, name_at) = cur.ident()?;
        if !seen.insert(name.clone()) {
            return Err(cur.diag_at(name_at, format!("duplicate name `{name}`")));
        }
        match kw.as_str() {
            "ring" => {
                cur.expect("=")?;
                let ring = parse_ring(&mut cur, degree_guard)?;
                model.rings.push(RingDecl {
                    name,
                    ring: Arc::new(ring),
                });
            }
            "module" => {
                cur.expect("=")?;
                let (rname, ring, n) = free_module_head(&mut cur, &model)?;
                let rel = if cur.eat("/") {
                    cur.poly_matrix(&ring, n, None)?
                } else {
                    Matrix::zero(n, 0)
                };
                cur.finish()?;
                let module = FPModule::new(ring, n, rel).map_err(|e| cur.diag_at(name_at, e))?;
                model.modules.push(ModuleDecl {
                    name,
                    ring: rname,
                    module,
                });
            }
            "submodule" => {
                cur.expect("=")?;
                let (rname, ring, n) = free_module_head(&mut cur, &model)?;
                cur.expect("<")?;
                let gens = cur.poly_matrix(&ring, n, None)?;
                cur.finish()?;
                let submodule = SubmoduleOfFree::new(ring, n, gens.into_columns()).map_err(|e| cur.diag_at(name_at, e))?;
                model.submodules.push(SubmoduleDecl {
                    name,
                    ring: rname,
                    submodule,
                });
            }
            "element" => {
                cur.expect("=")?;
                let (rname, rat) = cur.ident()?;
                let ring = model.ring(&rname).map_err(|e| cur.diag_at(rat, e))?.clone();
                cur.expect(":")?;
                let (body, at) = cur.rest();
                let element = cur.poly(&ring, body.trim_end(), at)?;
                model.elements.push(ElementDecl {
                    name,
                    ring: rname,
                    element,
                });
            }
            "map" => {
                cur.expect(":")?;
                let (src, src_at) = cur.ident()?;
                cur.expect("->")?;
                let (tgt, tgt_at) = cur.ident()?;
                cur.expect("=")?;
                let source = model.module(&src).map_err(|e| cur.diag_at(src_at, e))?.clone();
                let target = model.module(&tgt).map_err(|e| cur.diag_at(tgt_at, e))?.clone();
                if source.ring() != target.ring() {
                    return Err(cur.diag_at(tgt_at, format!("`{src}` and `{tgt}` live over different rings")));
                }
                let m = cur.poly_matrix(source.ring(), target.ngens(), Some(source.ngens()))?;
                cur.finish()?;
                let map = ModuleMap::new(source, target, m).map_err(|e| cur.diag_at(name_at, e))?;
                model.maps.push(MapDecl {
                    name,
                    source: src,
                    target: tgt,
                    map,
                });
            }
            "intmatrix" => {
                cur.expect("=")?;
                let rows = cur.matrix()?;
                cur.finish()?;
                let ncols = rows.first().map_or(0, |r| r.len());
                let rows = rows
                    .iter()
                    .map(|r| {
                        r.iter()
                            .map(|(e, at)| {
                                e.parse::<BigInt>()
                                    .map_err(|_| cur.diag_at(*at, format!("`{e}` is not an integer")))
                            })
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                model.intmatrices.push(IntMatrixDecl { name, rows, ncols });
            }
            other => return Err(cur.diag_at(kw_at, format!("unknown declaration `{other}`"))),
        }
    }
    Ok(model)
}

fn first_line(s: &str) -> String {
    s.lines().next().unwrap_or("").trim_start_matches("error: ").to_string()
}

/// `RING ^ n`, resolving the ring.
fn free_module_head(cur: &mut Cursor<'_>, model: &ModelFile) -> Result<(String, Arc<QuotRing>, usize)> {
    let (rname, at) = cur.ident()?;
    let ring = model.ring(&rname).map_err(|e| cur.diag_at(at, e))?.clone();
    cur.expect("^")?;
    let (n, _) = cur.number()?;
    Ok((rname, ring, n as usize))
}

fn order_keyword(cur: &mut Cursor<'_>) -> Option<MonomialOrder> {
    if cur.eat("grevlex") {
        Some(MonomialOrder::Grevlex)
    } else if cur.eat("lex") {
        Some(MonomialOrder::Lex)
    } else {
        None
    }
}

/// `FIELD[vars] [ORDER] [/ (gens)] [ORDER]`, the order given at most once
/// and defaulting to grevlex.
fn parse_ring(cur: &mut Cursor<'_>, degree_guard: u32) -> Result<QuotRing> {
    let field_at = {
        cur.ws();
        cur.pos
    };
    let field = if cur.eat("QQ") {
        Field::Rationals
    } else if cur.eat("GF") {
        cur.expect("(")?;
        let (p, at) = cur.number()?;
        cur.expect(")")?;
        Field::prime(p).map_err(|e| cur.diag_at(at, e))?
    } else {
        return Err(cur.diag_at(field_at, "expected `QQ` or `GF(p)`"));
    };
    cur.expect("[")?;
    let (vars_text, vars_at) = cur.until(']')?;
    let mut vars = Vec::new();
    for (v, at) in Cursor::split(vars_text, vars_at, ',') {
        let ok = !v.is_empty()
            && v.chars().enumerate().all(|(i, c)| c == '_' || c.is_ascii_alphabetic() || (i > 0 && c.is_ascii_digit()));
        if !ok {
            return Err(cur.diag_at(at, format!("`{v}` is not a variable name")));
        }
        vars.push(v.to_string());
    }
    let mut order = order_keyword(cur);
    let mut gens_text = None;
    if cur.eat("/") {
        cur.expect("(")?;
        gens_text = Some(cur.until(')')?);
        if order.is_none() {
            order = order_keyword(cur);
        }
    }
    let order = order.unwrap_or_default();
    cur.finish()?;
    let base = PolyRing::with_names(field, vars, order)
        .map_err(|e| cur.diag_at(vars_at, e))?
        .with_degree_guard(degree_guard);
    let mut gens = Vec::new();
    if let Some((text, at)) = gens_text {
        for (g, gat) in Cursor::split(text, at, ',') {
            let f = base.parse(g).map_err(|e| match e {
                Error::Parse { column, message } => cur.diag_at(gat + column - 1, message),
                other => cur.diag_at(gat, other),
            })?;
            gens.push(f);
        }
    }
    QuotRing::new(base, gens).map_err(|e| cur.diag_at(field_at, e))
}

/// `DEFAULT_DEGREE_GUARD`, or the value of `GPROJ_DEGREE_GUARD`.
pub fn degree_guard_from_env() -> Result<u32> {
    match std::env::var("GPROJ_DEGREE_GUARD") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Model(format!("GPROJ_DEGREE_GUARD=`{v}` is not a number"))),
        Err(_) => Ok(DEFAULT_DEGREE_GUARD),
    }
}
