//! Batch comparison of a criterion with the solver.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::time::Instant;

use bqf_core::criteria::GDomain;
use bqf_core::solver::solve;
use bqf_core::Int;
use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;

use crate::{Failure, Format, Which};

#[derive(Debug, Clone, Serialize)]
pub struct VerifyRow {
    pub g: i64,
    pub criterion: bool,
    pub oracle: bool,
    pub agree: bool,
    pub witness: Option<(String, String)>,
    pub trace: String,
}

fn row(which: &Which, g: i64) -> bqf_core::Result<VerifyRow> {
    let big = Int::from(g);
    let report = which.report(&big)?;
    let set = solve(&which.spec().form(&big)?)?;
    let trace = report
        .conditions
        .iter()
        .map(|c| format!("{}{}", c.label.trim_matches(|ch| ch == '(' || ch == ')'), if c.holds { "+" } else { "-" }))
        .collect::<Vec<_>>()
        .join(" ");
    Ok(VerifyRow {
        g,
        criterion: report.verdict,
        oracle: set.solvable(),
        agree: report.verdict == set.solvable(),
        witness: set
            .solutions
            .iter()
            .min_by_key(|(x, y)| (x.abs().max(y.abs()), x.clone(), y.clone()))
            .map(|(x, y)| (x.to_string(), y.to_string())),
        trace,
    })
}

fn write_rows(out: &mut dyn Write, rows: &[VerifyRow], format: Format) -> std::io::Result<()> {
    if format == Format::Csv {
        writeln!(out, "g,criterion,oracle,agree,witness_x,witness_y")?;
    }
    for r in rows {
        let (wx, wy) = r.witness.clone().unwrap_or_default();
        match format {
            Format::Text => {
                let w = r.witness.as_ref().map_or("-".to_string(), |(x, y)| format!("({x}, {y})"));
                let mark = if r.agree { "agree" } else { "DISAGREE" };
                writeln!(
                    out,
                    "g = {}: criterion {}, oracle {}, {mark}, witness {w}, [{}]",
                    r.g, r.criterion, r.oracle, r.trace
                )?;
            }
            Format::Csv => writeln!(out, "{},{},{},{},{wx},{wy}", r.g, r.criterion, r.oracle, r.agree)?,
            Format::Jsonl => {
                serde_json::to_writer(&mut *out, r).map_err(std::io::Error::other)?;
                writeln!(out)?;
            }
        }
    }
    out.flush()
}

pub fn run(
    which: &Which,
    g_min: i64,
    g_max: i64,
    out: Option<&Path>,
    format: Format,
    jobs: usize,
) -> Result<(), Failure> {
    if g_min > g_max {
        return Err(Failure::Domain(format!("empty range {g_min}..{g_max}")));
    }
    let spec = which.spec();
    let mut gs = Vec::new();
    let mut skipped = 0;
    for g in g_min..=g_max {
        if g == 0 && spec.g_domain == GDomain::Nonzero {
            skipped += 1;
            continue;
        }
        if !spec.g_domain.contains(&Int::from(g)) {
            return Err(Failure::Domain(format!("{} needs {} g, range contains {g}", spec.name, spec.g_domain)));
        }
        gs.push(g);
    }

    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().map_err(|e| Failure::Domain(e.to_string()))?;
    let rows = pool.install(|| gs.par_iter().map(|&g| row(which, g)).collect::<Result<Vec<_>, _>>())?;

    let write_result = match out {
        Some(path) => File::create(path).map(BufWriter::new).and_then(|mut f| write_rows(&mut f, &rows, format)),
        None => write_rows(&mut std::io::stdout().lock(), &rows, format),
    };
    write_result.map_err(|e| {
        Failure::Io(match out {
            Some(p) => format!("{}: {e}", p.display()),
            None => e.to_string(),
        })
    })?;

    let disagree = rows.iter().filter(|r| !r.agree).count();
    let note = if skipped > 0 { ", g = 0 skipped" } else { "" };
    eprintln!(
        "verify {}: {} rows, {} agree, {disagree} disagree{note}, {:.2}s",
        spec.name,
        rows.len(),
        rows.len() - disagree,
        start.elapsed().as_secs_f64()
    );
    if disagree > 0 {
        Err(Failure::Disagreement)
    } else {
        Ok(())
    }
}
