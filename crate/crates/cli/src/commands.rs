use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use natred::region::{region_cell, sample_surface, scan_region, Axis, SO6_EXAMPLES};
use natred::{
    cad_membership_so6, catalog_entries, catalog_lookup, classify, is_so6_diag, necessary_condition,
    simple_k_solvable, sufficient_condition, CadMembership, Classification, ConditionVerdict, Error,
    PrescribedTensor, SolveStatus,
};
use serde::Serialize;

use crate::config::{self, InputError, Range};
use crate::{grid, plot};

fn sink(out: Option<&Path>) -> Result<Box<dyn Write>, InputError> {
    Ok(match out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?,
        )),
        None => Box::new(io::stdout().lock()),
    })
}

fn write_json<T: Serialize>(out: Option<&Path>, value: &T) -> Result<(), InputError> {
    let mut w = sink(out)?;
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

fn library(e: Error) -> InputError {
    InputError(e.to_string())
}

fn sibling(out: &Path, suffix: &str) -> PathBuf {
    let stem = out.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    out.with_file_name(format!("{stem}{suffix}"))
}

fn file_name(path: &Path) -> String {
    path.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

fn optional(r: natred::Result<ConditionVerdict>) -> Result<Option<ConditionVerdict>, InputError> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::NoSimpleBlocks | Error::NotSimpleK { .. } | Error::DegenerateTa) => Ok(None),
        Err(e) => Err(library(e)),
    }
}

#[derive(Serialize)]
struct CheckReport<'a> {
    structure: Option<&'a str>,
    tensor: &'a PrescribedTensor,
    sufficient: Option<ConditionVerdict>,
    necessary: Option<ConditionVerdict>,
    simple_k: Option<ConditionVerdict>,
    cad: Option<CadMembership>,
}

pub fn check(path: &Path, seed: Option<u64>, out: Option<&Path>) -> Result<u8, InputError> {
    let loaded = config::load(path, seed)?;
    let (sd, t) = (&loaded.problem.structure, &loaded.problem.tensor);
    let cad = if is_so6_diag(sd) && t.t_a() > 0.0 {
        Some(cad_membership_so6(t.ts()[0] / t.t_a(), t.ts()[1] / t.t_a()).map_err(library)?)
    } else {
        None
    };
    let report = CheckReport {
        structure: loaded.name.as_deref(),
        tensor: t,
        sufficient: optional(sufficient_condition(sd, t))?,
        necessary: optional(necessary_condition(sd, t))?,
        simple_k: optional(simple_k_solvable(sd, t))?,
        cad,
    };
    write_json(out, &report)?;
    Ok(0)
}

#[derive(Serialize)]
struct SolveReport<'a> {
    structure: Option<&'a str>,
    tensor: &'a PrescribedTensor,
    status: SolveStatus,
    #[serde(flatten)]
    classification: &'a Classification,
}

pub fn exit_code(status: SolveStatus) -> u8 {
    match status {
        SolveStatus::SolutionFound | SolveStatus::CertifiedNoSolution => 0,
        SolveStatus::NoCriticalPointDetected | SolveStatus::Inconclusive => 1,
    }
}

pub fn solve(path: &Path, seed: Option<u64>, out: Option<&Path>) -> Result<u8, InputError> {
    let loaded = config::load(path, seed)?;
    let p = &loaded.problem;
    let c = classify(&p.structure, &p.tensor, &p.options).map_err(library)?;
    let report = SolveReport {
        structure: loaded.name.as_deref(),
        tensor: &p.tensor,
        status: c.outcome.status,
        classification: &c,
    };
    write_json(out, &report)?;
    Ok(exit_code(c.outcome.status))
}

pub struct ScanRequest<'a> {
    pub structure: &'a str,
    pub config: Option<&'a Path>,
    pub t1: Range,
    pub t2: Range,
    pub resolution: usize,
    pub solve: bool,
    pub seed: Option<u64>,
    pub annotate: bool,
    pub out: Option<&'a Path>,
}

pub fn scan(req: &ScanRequest) -> Result<u8, InputError> {
    let (_, sd, opts) = config::scan_inputs(req.structure, req.config, req.seed)?;
    if sd.len() != 2 {
        return Err(InputError(format!("scan needs a two-block structure, this one has {} blocks", sd.len())));
    }
    if req.annotate && !is_so6_diag(&sd) {
        return Err(InputError("--annotate-examples is only available for so6-diag".into()));
    }
    if req.annotate && req.out.is_none() {
        return Err(InputError("--annotate-examples needs --out for the examples file".into()));
    }
    let t1 = Axis::new(req.t1.lo, req.t1.hi, req.resolution).map_err(library)?;
    let t2 = Axis::new(req.t2.lo, req.t2.hi, req.resolution).map_err(library)?;
    let opts = req.solve.then_some(&opts);
    let cells = scan_region(&sd, t1, t2, opts).map_err(library)?;
    grid::write_region(sink(req.out)?, &cells)?;

    let Some(out) = req.out else { return Ok(0) };
    let mut examples_name = None;
    if req.annotate {
        let cells = SO6_EXAMPLES
            .iter()
            .map(|(label, a, b)| Ok((*label, region_cell(&sd, *a, *b, opts).map_err(library)?)))
            .collect::<Result<Vec<_>, InputError>>()?;
        let path = sibling(out, ".examples.csv");
        grid::write_examples(sink(Some(&path))?, &cells)?;
        examples_name = Some(file_name(&path));
    }
    let script = plot::region_script(&file_name(out), examples_name.as_deref());
    std::fs::write(sibling(out, ".py"), script)?;
    Ok(0)
}

pub fn surface(path: &Path, a1: Range, a2: Range, resolution: usize, out: Option<&Path>) -> Result<u8, InputError> {
    let loaded = config::load(path, None)?;
    let p = &loaded.problem;
    if p.structure.len() != 2 {
        return Err(InputError(format!(
            "surface needs a two-block structure, this one has {} blocks",
            p.structure.len()
        )));
    }
    let a1 = Axis::new(a1.lo, a1.hi, resolution).map_err(library)?;
    let a2 = Axis::new(a2.lo, a2.hi, resolution).map_err(library)?;
    let samples = sample_surface(&p.structure, &p.tensor, a1, a2).map_err(library)?;
    grid::write_surface(sink(out)?, &samples)?;
    if let Some(out) = out {
        std::fs::write(sibling(out, ".py"), plot::surface_script(&file_name(out)))?;
    }
    Ok(0)
}

pub fn catalog(out: Option<&Path>) -> Result<u8, InputError> {
    let mut w = sink(out)?;
    for (name, description) in catalog_entries() {
        let sd = catalog_lookup(name).map_err(library)?;
        let blocks: Vec<String> = sd.blocks().iter().map(|b| format!("(d={}, kappa={})", b.d, b.kappa)).collect();
        writeln!(w, "{name:<10} n={:<3} {:<40} {description}", sd.n(), blocks.join(" "))?;
    }
    w.flush()?;
    Ok(0)
}
