//! Every built-in catalog through its run list, followed by the negative
//! tests, the distributor witness, both indicator oracles and functor
//! invariance. Jobs run in parallel; output keeps the job order.

use rayon::prelude::*;

use super::{build, catalog, manifest, run_manifest, Backend, Command, Options, Outcome, Session};
use crate::algebra::GroupTable;
use crate::bimodcat::{BimodCat, ConjugationFunctor};
use crate::error::{Error, Result};
use crate::exactla::{Field, Mat, PrimeField, Rationals};
use crate::gvcore::coherence::singular_left_distributor;
use crate::gvcore::corrupt::detection_report;
use crate::gvcore::duality::coev_perturbations_break_s1;
use crate::gvcore::{tuple_label, GvBackend, Report};
use crate::indicators::{check_invariance, classical_fs_oracle, indicator, vect_oracle};
use crate::repgcat::RepCat;

fn load<F: Field>(name: &str, f: &F) -> Result<Session<F>> {
    build(&manifest::parse(catalog::source(name)?)?, f, name)
}

fn bimod<F: Field>(s: &Session<F>) -> Result<&BimodCat<F>> {
    match &s.backend {
        Backend::Bimod(c) => Ok(c),
        Backend::Rep(_) => Err(Error::Inconsistent(format!("{} is not a bimodule catalog", s.name))),
    }
}

fn rep<F: Field>(s: &Session<F>) -> Result<&RepCat<F>> {
    match &s.backend {
        Backend::Rep(c) => Ok(c),
        Backend::Bimod(_) => Err(Error::Inconsistent(format!("{} is not a representation catalog", s.name))),
    }
}

fn negatives(opts: &Options) -> Result<Outcome> {
    let s = load("dual-numbers", &PrimeField::new(5)?)?;
    let c = bimod(&s)?;
    let objs = s.objects(opts.max_dim);
    let mut r = detection_report(c, &objs);
    for &x in &objs {
        r.push("COEV-PERTURBATION-DETECTED", tuple_label(c, &[x]), coev_perturbations_break_s1(c, x));
    }
    let witness = singular_left_distributor(c, &objs);
    let mut out = Outcome::from_report("negative tests dual-numbers", &r);
    match witness {
        Some((t, rank, size)) => {
            let label = tuple_label(c, &t);
            out.text.push_str(&format!("WITNESS dist-left {label} rank={rank} size={size}\n"));
        }
        None => {
            out.text.push_str("WITNESS dist-left none\n");
            out.passed = false;
        }
    }
    Ok(out)
}

fn vect_oracle_job() -> Result<Outcome> {
    let q = Rationals;
    let s = load("vect", &q)?;
    let c = bimod(&s)?;
    let mut r = Report::new();
    for d in 1..=3 {
        let v = c.find(&format!("k{d}")).ok_or_else(|| Error::Inconsistent("vect catalog lacks k{d}".into()))?;
        for n in 1..=4 {
            for k in 1..=4u32 {
                let ok = indicator(c, v, n, k)? == vect_oracle(&q, d, n, k as usize);
                r.push("VECT-ORACLE", format!("(k{d},{n},{k})"), ok);
            }
        }
    }
    Ok(Outcome::from_report("vect oracle", &r))
}

fn classical_for<F: Field>(name: &str, f: &F, r: &mut Report, max_dim: usize) -> Result<()> {
    let s = load(name, f)?;
    let c = rep(&s)?;
    let g = c.group();
    for v in s.objects(max_dim) {
        let chi: Vec<F::Elem> = (0..g.order()).map(|e| c.character(v, e)).collect();
        for n in 1..=3 {
            let ok = indicator(c, v, n, 1)? == classical_fs_oracle(f, g, &chi, n)?;
            r.push("CLASSICAL-ORACLE", format!("({name}:{},{n})", c.label(v)), ok);
        }
    }
    Ok(())
}

fn classical_oracle_job(opts: &Options) -> Result<Outcome> {
    let mut r = Report::new();
    classical_for("c2-f5", &PrimeField::new(5)?, &mut r, opts.max_dim)?;
    classical_for("c3-f7", &PrimeField::new(7)?, &mut r, opts.max_dim)?;
    classical_for("s3-q", &Rationals, &mut r, opts.max_dim)?;
    classical_for("q8-f5", &PrimeField::new(5)?, &mut r, opts.max_dim)?;
    Ok(Outcome::from_report("classical oracle", &r))
}

/// Permutation of the group algebra basis induced by g ↦ g⁻¹.
pub fn inversion_twist<F: Field>(f: &F, group: &GroupTable) -> Mat<F> {
    Mat::permutation(f, &(0..group.order()).map(|g| group.inverse(g)).collect::<Vec<_>>())
}

fn invariance_job(opts: &Options) -> Result<Outcome> {
    let f = PrimeField::new(5)?;
    let dn = load("dual-numbers", &f)?;
    let c = bimod(&dn)?;
    let relabel = ConjugationFunctor::relabel(c);
    let mut r = check_invariance(&relabel, &dn.objects(opts.max_dim), 3, 3, opts.seed)?;
    let c3 = load("f5-c3", &f)?;
    let c = bimod(&c3)?;
    let twist = ConjugationFunctor::twist(c, inversion_twist(&f, &GroupTable::cyclic(3)))?;
    r.extend(check_invariance(&twist, &c3.objects(opts.max_dim), 3, 3, opts.seed)?);
    Ok(Outcome::from_report("functor invariance", &r))
}

type Job<'a> = Box<dyn Fn() -> Result<Outcome> + Send + Sync + 'a>;

/// Runs every built-in suite. Errors inside a job are reported in its place
/// and make the run fail.
pub fn selftest(opts: &Options) -> Result<Outcome> {
    let mut jobs: Vec<Job> = catalog::names()
        .into_iter()
        .map(|name| -> Job { Box::new(move || run_manifest(catalog::source(name)?, name, Command::Run, opts)) })
        .collect();
    jobs.push(Box::new(|| negatives(opts)));
    jobs.push(Box::new(vect_oracle_job));
    jobs.push(Box::new(|| classical_oracle_job(opts)));
    jobs.push(Box::new(|| invariance_job(opts)));
    let outs: Vec<Result<Outcome>> = jobs.par_iter().map(|job| job()).collect();
    let mut merged = Vec::with_capacity(outs.len());
    for out in outs {
        match out {
            Ok(o) => merged.push(o),
            Err(e @ Error::Inconsistent(_)) => return Err(e),
            Err(e) => merged.push(Outcome { text: format!("# error\nERROR {e}\n"), passed: false }),
        }
    }
    let mut out = Outcome::merge(merged);
    out.text.insert_str(0, &format!("# selftest seed={} max_dim={}\n", opts.seed, opts.max_dim));
    out.text.push_str(if out.passed { "SELFTEST PASS\n" } else { "SELFTEST FAIL\n" });
    Ok(out)
}
