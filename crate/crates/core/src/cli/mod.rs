//! Command-line front end: manifests, built-in catalogs and the commands
//! `check`, `frobenius`, `indicators`, `run` and `selftest`.

pub mod catalog;
pub mod manifest;
mod selftest;

use std::fmt::Write as _;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, GroupTable};
use crate::bimodcat::BimodCat;
use crate::error::{Error, Result};
use crate::exactla::{Field, Mat, PrimeField, Rationals};
use crate::frobenius::{
    all_forms, build_from_form, check_algebra, check_frobenius, check_ideal_criterion, f1_implies_f2,
    roundtrip_report, sample_comodules, sample_modules, AlgebraObject, FormData,
};
use crate::gvcore::coherence::{check_coherence, check_naturality, check_structure_validity};
use crate::gvcore::duality::{check_phi_psi, check_pivotal, check_snakes};
use crate::gvcore::{GvBackend, ObjId, Report};
use crate::indicators::{check_rotation_identities, IndicatorTable};
use crate::repgcat::RepCat;
use manifest::{ActionSide, AlgebraDecl, FieldDecl, GroupDecl, Manifest, MatrixTok, RunItem, Structure};

pub use selftest::selftest;

/// Process exit codes.
pub const EXIT_PASS: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAIL: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse { .. } | Error::Usage(_) => EXIT_USAGE,
        Error::Inconsistent(_) => EXIT_INCONSISTENT,
        _ => EXIT_FAIL,
    }
}

/// Options shared by every command.
#[derive(Clone, Debug)]
pub struct Options {
    pub seed: u64,
    pub max_dim: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options { seed: 0, max_dim: 4 }
    }
}

/// Text of a command and whether all of its checks passed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub passed: bool,
}

impl Outcome {
    fn from_report(header: &str, r: &Report) -> Self {
        let (total, passed) = (r.len(), r.lines().iter().filter(|l| l.pass).count());
        let text = format!("# {header}\n{r}SUMMARY {passed}/{total}\n");
        Outcome { text, passed: r.all_pass() }
    }

    fn merge(outs: Vec<Outcome>) -> Self {
        Outcome { text: outs.iter().map(|o| o.text.as_str()).collect(), passed: outs.iter().all(|o| o.passed) }
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            EXIT_PASS
        } else {
            EXIT_FAIL
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Check,
    Frobenius,
    Indicators,
    Run,
}

/// A category built from a manifest, with its catalog of objects.
pub enum Backend<F: Field> {
    Bimod(BimodCat<F>),
    Rep(RepCat<F>),
}

pub struct Session<F: Field> {
    pub name: String,
    pub backend: Backend<F>,
    pub catalog: Vec<ObjId>,
}

impl<F: Field> Session<F> {
    /// Catalog objects of dimension at most `max_dim`.
    pub fn objects(&self, max_dim: usize) -> Vec<ObjId> {
        let dim = |x| match &self.backend {
            Backend::Bimod(c) => c.dim(x),
            Backend::Rep(c) => c.dim(x),
        };
        self.catalog.iter().copied().filter(|&x| dim(x) <= max_dim).collect()
    }
}

fn group_table(g: &GroupDecl) -> GroupTable {
    match *g {
        GroupDecl::Cyclic(n) => GroupTable::cyclic(n),
        GroupDecl::Symmetric(n) => GroupTable::symmetric(n),
        GroupDecl::Quaternion => GroupTable::quaternion(),
    }
}

fn matrix<F: Field>(f: &F, m: &MatrixTok) -> Result<Mat<F>> {
    let rows = m.rows.iter().map(|r| r.iter().map(|t| t.elem(f)).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?;
    Ok(Mat::from_rows(f, rows))
}

fn build_algebra<F: Field>(f: &F, decl: &AlgebraDecl) -> Result<Algebra<F>> {
    Ok(match decl {
        AlgebraDecl::Poly(toks) => {
            let coeffs = toks.iter().map(|t| t.elem(f)).collect::<Result<Vec<_>>>()?;
            Algebra::quotient_poly(f, &coeffs)?
        }
        AlgebraDecl::Group(g) => Algebra::group_algebra(f, &group_table(g)),
        AlgebraDecl::Upper(n) => {
            if *n == 0 {
                return Err(Error::InvalidAlgebra("upper triangular matrices need n ≥ 1".into()));
            }
            Algebra::upper_triangular(f, *n)
        }
        AlgebraDecl::Ground => Algebra::ground_field(f),
        AlgebraDecl::Constants { dim, unit, triples } => {
            let d = *dim;
            if unit.len() != d {
                return Err(unit[0].error(format!("unit needs {d} coordinates")));
            }
            let unit = unit.iter().map(|t| t.elem(f)).collect::<Result<Vec<_>>>()?;
            let mut consts = vec![f.zero(); d * d * d];
            for (i, j, k, v) in triples {
                let idx = [i, j, k]
                    .iter()
                    .map(|t| {
                        let n = t.usize()?;
                        if n >= d {
                            return Err(t.error(format!("basis index {n} out of range for dimension {d}")));
                        }
                        Ok(n)
                    })
                    .collect::<Result<Vec<_>>>()?;
                consts[(idx[0] * d + idx[1]) * d + idx[2]] = v.elem(f)?;
            }
            Algebra::from_structure_constants(f, "A", d, consts, unit)?
        }
    })
}

/// Indexed action matrices of one object, each index given exactly once.
fn actions<F: Field>(
    f: &F,
    obj: &manifest::ObjectDecl,
    side: ActionSide,
    bound: usize,
) -> Result<Vec<(usize, Mat<F>)>> {
    let mut out: Vec<(usize, Mat<F>)> = Vec::new();
    for a in obj.actions.iter().filter(|a| a.side == side) {
        let i = a.index.usize()?;
        if i >= bound {
            return Err(a.index.error(format!("index {i} out of range (must be below {bound})")));
        }
        if out.iter().any(|(j, _)| *j == i) {
            return Err(a.index.error(format!("index {i} given twice")));
        }
        out.push((i, matrix(f, &a.matrix)?));
    }
    Ok(out)
}

fn complete<F: Field>(label: &str, side: &str, bound: usize, given: Vec<(usize, Mat<F>)>) -> Result<Vec<Mat<F>>> {
    let mut slots: Vec<Option<Mat<F>>> = vec![None; bound];
    for (i, m) in given {
        slots[i] = Some(m);
    }
    slots
        .into_iter()
        .enumerate()
        .map(|(i, m)| m.ok_or_else(|| Error::InvalidObject(format!("{label}: missing {side} action of basis element {i}"))))
        .collect()
}

/// Builds the category and its catalog. Bimodule catalogs start with A and
/// DA; representation catalogs start with the trivial representation.
pub fn build<F: Field>(m: &Manifest, f: &F, name: &str) -> Result<Session<F>> {
    match &m.structure {
        Structure::Algebra(decl) => {
            let alg = build_algebra(f, decl)?;
            let n = alg.dim();
            let c = BimodCat::new(alg)?;
            let mut catalog = vec![c.unit(), c.dual(c.unit())];
            for o in &m.objects {
                let label = &o.name.text;
                let left = complete(label, "left", n, actions(f, o, ActionSide::Left, n)?)?;
                let right = complete(label, "right", n, actions(f, o, ActionSide::Right, n)?)?;
                catalog.push(c.add_object(label, left, right)?);
            }
            Ok(Session { name: name.into(), backend: Backend::Bimod(c), catalog })
        }
        Structure::Group(g) => {
            let table = group_table(g);
            let n = table.order();
            let c = RepCat::new(f, table)?;
            let mut catalog = vec![c.unit()];
            for o in &m.objects {
                catalog.push(c.add_rep_generated(&o.name.text, &actions(f, o, ActionSide::Group, n)?)?);
            }
            Ok(Session { name: name.into(), backend: Backend::Rep(c), catalog })
        }
    }
}

/// Structure validity, coherence, naturality, snakes, Φ/Ψ and the pivotal
/// suite on the catalog.
pub fn check_suite<B: GvBackend>(c: &B, objs: &[ObjId], seed: u64) -> Report {
    let mut r = check_structure_validity(c, objs);
    r.extend(check_coherence(c, objs));
    r.extend(check_naturality(c, objs, seed));
    r.extend(check_snakes(c, objs));
    r.extend(check_phi_psi(c, objs, seed));
    r.extend(check_pivotal(c, objs, seed));
    r
}

/// Forms to examine: all of them over a finite field, otherwise the basis
/// forms and their sum.
fn forms_of<B: GvBackend>(c: &B, a: &AlgebraObject<B::F>) -> Vec<FormData<B::F>> {
    if let Some(all) = all_forms(c, a) {
        return all;
    }
    let basis = c.hom_space(a.obj, c.dualizing());
    let sum = basis.iter().fold(c.zero_map(a.obj, c.dualizing()), |acc, h| acc.add(h));
    basis.into_iter().chain([sum]).map(|lambda| FormData { alg: a.clone(), lambda }).collect()
}

/// Ideal criterion over the forms, every Frobenius instance with its module
/// round trips, and the (F1) ⇒ (F2) experiment.
pub fn frobenius_suite<B: GvBackend>(
    c: &B,
    a: &AlgebraObject<B::F>,
    extra: &[ObjId],
    seed: u64,
) -> Result<(Report, String)> {
    let mut r = check_algebra(c, a);
    let forms = forms_of(c, a);
    let (ideal, frobenius) = check_ideal_criterion(c, &forms)?;
    r.extend(ideal);
    let mut notes = format!("FORMS {} total={} frobenius={}\n", c.label(a.obj), forms.len(), frobenius);
    for (i, form) in forms.iter().enumerate() {
        match build_from_form(c, form) {
            Ok(d) => {
                let mut inst = check_frobenius(c, &d);
                inst.extend(roundtrip_report(c, &d, &sample_modules(c, &d, extra), &sample_comodules(c, &d, extra)));
                for line in inst.lines() {
                    let tuple = format!("{},form{i})", line.tuple.trim_end_matches(')'));
                    r.push(&line.axiom, tuple, line.pass);
                }
            }
            Err(Error::NotFrobenius { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let imp = f1_implies_f2(c, a, 100, &mut rng);
    let _ = writeln!(
        notes,
        "IMPLICATION {} candidates={} f1={} counterexamples={}",
        c.label(a.obj),
        imp.candidates,
        imp.satisfying_f1,
        imp.counterexamples
    );
    let t = format!("({})", c.label(a.obj));
    r.push("F1-IMPLIES-F2", t, imp.counterexamples == 0 && imp.satisfying_f1 >= 100);
    Ok((r, notes))
}

/// Rotation identities and the indicator table `object n r nu`.
pub fn indicator_suite<B: GvBackend>(c: &B, objs: &[ObjId], max_n: usize, max_r: usize) -> Result<(Report, String)> {
    let r = check_rotation_identities(c, objs, max_n.max(2));
    let mut table = String::from("object n r nu\n");
    for &v in objs {
        let t = IndicatorTable::compute(c, v, max_n, max_r as u32)?;
        for (n, r, val) in &t.entries {
            let _ = writeln!(table, "{} {n} {r} {}", c.label(v), c.field().render(val));
        }
    }
    Ok((r, table))
}

fn run_check<F: Field>(s: &Session<F>, opts: &Options) -> Outcome {
    let objs = s.objects(opts.max_dim);
    let r = match &s.backend {
        Backend::Bimod(c) => check_suite(c, &objs, opts.seed),
        Backend::Rep(c) => check_suite(c, &objs, opts.seed),
    };
    Outcome::from_report(&format!("check {} seed={}", s.name, opts.seed), &r)
}

fn run_frobenius<F: Field>(s: &Session<F>, opts: &Options) -> Result<Outcome> {
    let (r, notes) = match &s.backend {
        Backend::Bimod(c) => {
            // the algebra itself, as an algebra object in vector spaces
            let vect = BimodCat::vect(c.field());
            let a = AlgebraObject::in_vect(&vect, c.algebra(), "A")?;
            let id = |d| Mat::identity(c.field(), d);
            let extra = [vect.add_object("k1", vec![id(1)], vec![id(1)])?, vect.add_object("k2", vec![id(2)], vec![id(2)])?];
            frobenius_suite(&vect, &a, &extra, opts.seed)?
        }
        Backend::Rep(c) => {
            let a = AlgebraObject::unit(c);
            let extra: Vec<ObjId> = s.objects(opts.max_dim).into_iter().filter(|&x| x != c.unit()).take(2).collect();
            frobenius_suite(c, &a, &extra, opts.seed)?
        }
    };
    let mut out = Outcome::from_report(&format!("frobenius {} seed={}", s.name, opts.seed), &r);
    out.text.push_str(&notes);
    Ok(out)
}

fn run_indicators<F: Field>(s: &Session<F>, opts: &Options, max_n: usize, max_r: usize) -> Result<Outcome> {
    let objs = s.objects(opts.max_dim);
    let (r, table) = match &s.backend {
        Backend::Bimod(c) => indicator_suite(c, &objs, max_n, max_r)?,
        Backend::Rep(c) => indicator_suite(c, &objs, max_n, max_r)?,
    };
    let mut out = Outcome::from_report(&format!("indicators {} max_n={max_n} max_r={max_r}", s.name), &r);
    out.text.push_str(&table);
    Ok(out)
}

fn execute<F: Field>(m: &Manifest, f: &F, name: &str, cmd: Command, opts: &Options) -> Result<Outcome> {
    let s = build(m, f, name)?;
    let (max_n, max_r) = m.indicator_bounds().unwrap_or((3, 3));
    match cmd {
        Command::Check => Ok(run_check(&s, opts)),
        Command::Frobenius => run_frobenius(&s, opts),
        Command::Indicators => run_indicators(&s, opts, max_n, max_r),
        Command::Run => {
            let items = if m.run.is_empty() { vec![RunItem::Check] } else { m.run.clone() };
            let outs = items
                .iter()
                .map(|item| match *item {
                    RunItem::Check => Ok(run_check(&s, opts)),
                    RunItem::Frobenius => run_frobenius(&s, opts),
                    RunItem::Indicators { max_n, max_r } => run_indicators(&s, opts, max_n, max_r),
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Outcome::merge(outs))
        }
    }
}

/// Parses a manifest and runs one command on it.
pub fn run_manifest(src: &str, name: &str, cmd: Command, opts: &Options) -> Result<Outcome> {
    let m = manifest::parse(src)?;
    match m.field {
        FieldDecl::Prime(p) => execute(&m, &PrimeField::new(p)?, name, cmd, opts),
        FieldDecl::Rationals => execute(&m, &Rationals, name, cmd, opts),
    }
}
