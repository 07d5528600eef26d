//! Line-oriented manifest files.
//!
//! ```text
//! # comment
//! [field]
//! prime 5                  # or: rationals
//!
//! [algebra]                # or [group] for representations
//! poly 0 0 1               # k[X]/(f), coefficients from the constant term
//! group cyclic 3           # k[G]; also: upper 2 | ground
//! dim 2                    # explicit structure constants: dim, unit, and
//! unit 1 0                 # sparse triples "i j k value" for e_i e_j ∋ value e_k
//! 1 1 0 1
//!
//! [group]
//! cyclic 3                 # symmetric 3 | quaternion
//!
//! [object M]
//! left 0 = 1 0; 0 1        # action matrix of basis element 0, rows split by ';'
//! right 1 = 0 0; 1 0
//! act 2 = 2 0; 0 3         # representations: image of group element 2
//!
//! [run]
//! check
//! frobenius
//! indicators 3 3           # max n, max r
//! ```
//!
//! Numbers are kept as located tokens and parsed once the field is known,
//! so every malformed entry reports its line and column.

use crate::error::{Error, Result};
use crate::exactla::Field;

/// A token with its 1-based position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tok {
    pub text: String,
    pub line: usize,
    pub col: usize,
}

impl Tok {
    pub fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse { line: self.line, col: self.col, msg: msg.into() }
    }

    pub fn usize(&self) -> Result<usize> {
        self.text.parse().map_err(|_| self.error(format!("expected a non-negative integer, found {:?}", self.text)))
    }

    pub fn elem<F: Field>(&self, f: &F) -> Result<F::Elem> {
        f.parse(&self.text).ok_or_else(|| self.error(format!("{:?} is not an element of {}", self.text, f.spec())))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldDecl {
    Prime(u64),
    Rationals,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupDecl {
    Cyclic(usize),
    Symmetric(usize),
    Quaternion,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraDecl {
    Poly(Vec<Tok>),
    Group(GroupDecl),
    Upper(usize),
    Ground,
    Constants { dim: usize, unit: Vec<Tok>, triples: Vec<(Tok, Tok, Tok, Tok)> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Algebra(AlgebraDecl),
    Group(GroupDecl),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActionSide {
    Left,
    Right,
    Group,
}

/// A matrix as rows of tokens; the first token locates errors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixTok {
    pub at: Tok,
    pub rows: Vec<Vec<Tok>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionDecl {
    pub side: ActionSide,
    pub index: Tok,
    pub matrix: MatrixTok,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObjectDecl {
    pub name: Tok,
    pub actions: Vec<ActionDecl>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RunItem {
    Check,
    Frobenius,
    Indicators { max_n: usize, max_r: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Manifest {
    pub field: FieldDecl,
    pub structure: Structure,
    pub objects: Vec<ObjectDecl>,
    pub run: Vec<RunItem>,
}

impl Manifest {
    /// Bounds requested by an `indicators` run line, if any.
    pub fn indicator_bounds(&self) -> Option<(usize, usize)> {
        self.run.iter().find_map(|r| match r {
            RunItem::Indicators { max_n, max_r } => Some((*max_n, *max_r)),
            _ => None,
        })
    }
}

/// Splits a line into tokens; `;` and `=` are tokens of their own and `#`
/// starts a comment.
fn tokenize(line: &str, line_no: usize) -> Vec<Tok> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut start = 0;
    let flush = |cur: &mut String, start: usize, out: &mut Vec<Tok>| {
        if !cur.is_empty() {
            out.push(Tok { text: std::mem::take(cur), line: line_no, col: start });
        }
    };
    for (i, ch) in line.chars().enumerate() {
        let col = i + 1;
        match ch {
            '#' => break,
            ';' | '=' => {
                flush(&mut cur, start, &mut out);
                out.push(Tok { text: ch.to_string(), line: line_no, col });
            }
            c if c.is_whitespace() => flush(&mut cur, start, &mut out),
            c => {
                if cur.is_empty() {
                    start = col;
                }
                cur.push(c);
            }
        }
    }
    flush(&mut cur, start, &mut out);
    out
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    None,
    Field,
    Algebra,
    Group,
    Object(usize),
    Run,
}

fn expect_len(toks: &[Tok], n: usize, what: &str) -> Result<()> {
    if toks.len() != n {
        let at = toks.get(n).unwrap_or(&toks[0]);
        return Err(at.error(format!("{what} takes {} argument(s)", n - 1)));
    }
    Ok(())
}

fn parse_group(toks: &[Tok]) -> Result<GroupDecl> {
    match toks[0].text.as_str() {
        "cyclic" | "symmetric" => {
            expect_len(toks, 2, &toks[0].text)?;
            let n = toks[1].usize()?;
            if n == 0 {
                return Err(toks[1].error("group order must be positive"));
            }
            Ok(if toks[0].text == "cyclic" { GroupDecl::Cyclic(n) } else { GroupDecl::Symmetric(n) })
        }
        "quaternion" => {
            expect_len(toks, 1, "quaternion")?;
            Ok(GroupDecl::Quaternion)
        }
        other => Err(toks[0].error(format!("unknown group {other:?}"))),
    }
}

fn parse_matrix(toks: &[Tok], at: &Tok) -> Result<MatrixTok> {
    let mut rows = vec![Vec::new()];
    for t in toks {
        if t.text == ";" {
            rows.push(Vec::new());
        } else {
            rows.last_mut().expect("nonempty").push(t.clone());
        }
    }
    let width = rows[0].len();
    if width == 0 {
        return Err(at.error("empty matrix"));
    }
    if let Some(bad) = rows.iter().find(|r| r.len() != width) {
        let loc = bad.first().unwrap_or(at);
        return Err(loc.error(format!("matrix rows must all have {width} entries")));
    }
    Ok(MatrixTok { at: at.clone(), rows })
}

#[derive(Default)]
struct ConstantsDraft {
    dim: Option<usize>,
    unit: Option<Vec<Tok>>,
    triples: Vec<(Tok, Tok, Tok, Tok)>,
    at: Option<Tok>,
}

pub fn parse(src: &str) -> Result<Manifest> {
    let mut section = Section::None;
    let mut field: Option<FieldDecl> = None;
    let mut algebra: Option<AlgebraDecl> = None;
    let mut group: Option<GroupDecl> = None;
    let mut consts = ConstantsDraft::default();
    let mut objects: Vec<ObjectDecl> = Vec::new();
    let mut run = Vec::new();
    let mut seen_structure: Option<Tok> = None;

    for (i, raw) in src.lines().enumerate() {
        let toks = tokenize(raw, i + 1);
        let Some(head) = toks.first() else { continue };
        if head.text.starts_with('[') {
            let joined: Vec<&str> = toks.iter().map(|t| t.text.as_str()).collect();
            let header = joined.join(" ");
            let inner = header
                .strip_prefix('[')
                .and_then(|h| h.strip_suffix(']'))
                .ok_or_else(|| head.error("section header must end with ']'"))?
                .trim();
            section = match inner.split_once(' ') {
                None => match inner {
                    "field" => Section::Field,
                    "algebra" | "group" => {
                        if let Some(prev) = &seen_structure {
                            return Err(head.error(format!(
                                "second structure section; the first is at line {}",
                                prev.line
                            )));
                        }
                        seen_structure = Some(head.clone());
                        if inner == "algebra" {
                            Section::Algebra
                        } else {
                            Section::Group
                        }
                    }
                    "run" => Section::Run,
                    _ => return Err(head.error(format!("unknown section [{inner}]"))),
                },
                Some(("object", name)) => {
                    let name = name.trim();
                    if name.contains(char::is_whitespace) || name.is_empty() {
                        return Err(head.error("object names must be a single word"));
                    }
                    if objects.iter().any(|o| o.name.text == name) {
                        return Err(head.error(format!("object {name} declared twice")));
                    }
                    let col = raw.find(name).map_or(head.col, |c| raw[..c].chars().count() + 1);
                    objects.push(ObjectDecl { name: Tok { text: name.into(), line: i + 1, col }, actions: Vec::new() });
                    Section::Object(objects.len() - 1)
                }
                _ => return Err(head.error(format!("unknown section [{inner}]"))),
            };
            continue;
        }
        match section {
            Section::None => return Err(head.error("content before the first section")),
            Section::Field => {
                if field.is_some() {
                    return Err(head.error("field declared twice"));
                }
                field = Some(match head.text.as_str() {
                    "prime" => {
                        expect_len(&toks, 2, "prime")?;
                        let p = toks[1].text.parse::<u64>().map_err(|_| toks[1].error("expected a prime"))?;
                        FieldDecl::Prime(p)
                    }
                    "rationals" => {
                        expect_len(&toks, 1, "rationals")?;
                        FieldDecl::Rationals
                    }
                    other => return Err(head.error(format!("unknown field {other:?}"))),
                });
            }
            Section::Group => {
                if group.is_some() {
                    return Err(head.error("group declared twice"));
                }
                group = Some(parse_group(&toks)?);
            }
            Section::Algebra => {
                let named = |algebra: &Option<AlgebraDecl>, consts: &ConstantsDraft| -> Result<()> {
                    if algebra.is_some() || consts.at.is_some() {
                        return Err(head.error("algebra declared twice"));
                    }
                    Ok(())
                };
                match head.text.as_str() {
                    "poly" => {
                        named(&algebra, &consts)?;
                        if toks.len() < 3 {
                            return Err(head.error("poly needs at least two coefficients"));
                        }
                        algebra = Some(AlgebraDecl::Poly(toks[1..].to_vec()));
                    }
                    "group" => {
                        named(&algebra, &consts)?;
                        if toks.len() < 2 {
                            return Err(head.error("group needs a name"));
                        }
                        algebra = Some(AlgebraDecl::Group(parse_group(&toks[1..])?));
                    }
                    "upper" => {
                        named(&algebra, &consts)?;
                        expect_len(&toks, 2, "upper")?;
                        algebra = Some(AlgebraDecl::Upper(toks[1].usize()?));
                    }
                    "ground" => {
                        named(&algebra, &consts)?;
                        expect_len(&toks, 1, "ground")?;
                        algebra = Some(AlgebraDecl::Ground);
                    }
                    "dim" => {
                        if algebra.is_some() || consts.dim.is_some() {
                            return Err(head.error("algebra declared twice"));
                        }
                        expect_len(&toks, 2, "dim")?;
                        consts.dim = Some(toks[1].usize()?);
                        consts.at.get_or_insert(head.clone());
                    }
                    "unit" => {
                        if consts.unit.is_some() {
                            return Err(head.error("unit declared twice"));
                        }
                        if toks.len() < 2 {
                            return Err(head.error("unit needs its coordinates"));
                        }
                        consts.unit = Some(toks[1..].to_vec());
                        consts.at.get_or_insert(head.clone());
                    }
                    _ if head.text.chars().all(|c| c.is_ascii_digit()) => {
                        if toks.len() != 4 {
                            return Err(head.error("structure constants are written as 'i j k value'"));
                        }
                        consts.triples.push((toks[0].clone(), toks[1].clone(), toks[2].clone(), toks[3].clone()));
                        consts.at.get_or_insert(head.clone());
                    }
                    other => return Err(head.error(format!("unknown algebra entry {other:?}"))),
                }
            }
            Section::Object(idx) => {
                let side = match head.text.as_str() {
                    "left" => ActionSide::Left,
                    "right" => ActionSide::Right,
                    "act" => ActionSide::Group,
                    other => return Err(head.error(format!("unknown object entry {other:?}"))),
                };
                if toks.len() < 4 || toks[2].text != "=" {
                    return Err(head.error(format!("expected '{} <index> = <matrix>'", head.text)));
                }
                let matrix = parse_matrix(&toks[3..], &toks[3])?;
                objects[idx].actions.push(ActionDecl { side, index: toks[1].clone(), matrix });
            }
            Section::Run => {
                let item = match head.text.as_str() {
                    "check" => RunItem::Check,
                    "frobenius" => RunItem::Frobenius,
                    "indicators" => {
                        expect_len(&toks, 3, "indicators")?;
                        let (max_n, max_r) = (toks[1].usize()?, toks[2].usize()?);
                        if max_n == 0 || max_r == 0 {
                            return Err(head.error("indicator bounds start at 1"));
                        }
                        RunItem::Indicators { max_n, max_r }
                    }
                    other => return Err(head.error(format!("unknown run entry {other:?}"))),
                };
                run.push(item);
            }
        }
    }

    let eof = Tok { text: String::new(), line: src.lines().count().max(1), col: 1 };
    let field = field.ok_or_else(|| eof.error("missing [field] section"))?;
    let structure = match (algebra, group, consts.at) {
        (Some(a), None, None) => Structure::Algebra(a),
        (None, Some(g), None) => Structure::Group(g),
        (None, None, Some(at)) => {
            let dim = consts.dim.ok_or_else(|| at.error("structure constants need 'dim'"))?;
            let unit = consts.unit.ok_or_else(|| at.error("structure constants need 'unit'"))?;
            Structure::Algebra(AlgebraDecl::Constants { dim, unit, triples: consts.triples })
        }
        (None, None, None) => return Err(eof.error("missing [algebra] or [group] section")),
        _ => return Err(eof.error("algebra declared more than once")),
    };
    for o in &objects {
        if o.actions.is_empty() {
            return Err(o.name.error(format!("object {} has no action matrices", o.name.text)));
        }
        let allowed: &[ActionSide] = match structure {
            Structure::Algebra(_) => &[ActionSide::Left, ActionSide::Right],
            Structure::Group(_) => &[ActionSide::Group],
        };
        if let Some(bad) = o.actions.iter().find(|a| !allowed.contains(&a.side)) {
            return Err(bad.index.error("this action kind does not fit the structure section"));
        }
    }
    Ok(Manifest { field, structure, objects, run })
}
