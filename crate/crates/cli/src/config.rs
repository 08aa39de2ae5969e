use std::fmt;
use std::path::Path;
use std::str::FromStr;

use natred::input::{Problem, ProblemConfig};
use natred::{Error, SolverOptions, StructureData};

#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

impl From<std::io::Error> for InputError {
    fn from(e: std::io::Error) -> Self {
        InputError(e.to_string())
    }
}

impl From<csv::Error> for InputError {
    fn from(e: csv::Error) -> Self {
        InputError(e.to_string())
    }
}

impl From<serde_json::Error> for InputError {
    fn from(e: serde_json::Error) -> Self {
        InputError(e.to_string())
    }
}

/// `LO:HI`, each side a decimal or `p/q`.
#[derive(Debug, Clone, Copy)]
pub struct Range {
    pub lo: f64,
    pub hi: f64,
}

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (lo, hi) = s.split_once(':').ok_or_else(|| format!("expected LO:HI, got {s:?}"))?;
        let parse = |v: &str| natred::input::parse_real(v).map_err(|e| e.to_string());
        let (lo, hi) = (parse(lo)?, parse(hi)?);
        if !(lo > 0.0 && lo < hi) {
            return Err(format!("range must satisfy 0 < LO < HI, got {s:?}"));
        }
        Ok(Range { lo, hi })
    }
}

/// Caps rayon's global pool at `NATRED_THREADS` workers.
pub fn init_threads() -> Result<(), InputError> {
    let Ok(value) = std::env::var("NATRED_THREADS") else { return Ok(()) };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| InputError(format!("NATRED_THREADS must be a positive integer, got {value:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| InputError(e.to_string()))
}

pub struct Loaded {
    pub name: Option<String>,
    pub problem: Problem,
}

/// 1-based line of the first occurrence of `"key"` in the document.
fn line_of(text: &str, key: &str) -> usize {
    let needle = format!("\"{key}\"");
    text.find(&needle).map_or(1, |pos| text[..pos].matches('\n').count() + 1)
}

fn located(path: &Path, text: &str, key: &str, e: Error) -> InputError {
    InputError(format!("{}:{}: invalid {key}: {e}", path.display(), line_of(text, key)))
}

pub fn load(path: &Path, seed: Option<u64>) -> Result<Loaded, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let cfg: ProblemConfig = serde_json::from_str(&text)
        .map_err(|e| {
            let message = e.to_string();
            let message = message.rsplit_once(" at line ").map_or(message.as_str(), |(m, _)| m);
            InputError(format!("{}:{}:{}: {message}", path.display(), e.line(), e.column()))
        })?;
    let structure = cfg.structure.build().map_err(|e| located(path, &text, "structure", e))?;
    let tensor = cfg.tensor.build().map_err(|e| located(path, &text, "tensor", e))?;
    if structure.len() != tensor.ts().len() {
        let e = Error::ShapeMismatch { expected: structure.len(), found: tensor.ts().len() };
        return Err(located(path, &text, "ts", e));
    }
    let mut options = cfg.solver_opts.clone();
    if let Some(seed) = seed {
        options.seed = seed;
    }
    Ok(Loaded { name: cfg.structure.name().map(str::to_owned), problem: Problem { structure, tensor, options } })
}

/// Structure and options for a scan, from a config file or a catalog name.
pub fn scan_inputs(
    name: &str,
    config: Option<&Path>,
    seed: Option<u64>,
) -> Result<(Option<String>, StructureData, SolverOptions), InputError> {
    match config {
        Some(path) => {
            let loaded = load(path, seed)?;
            Ok((loaded.name, loaded.problem.structure, loaded.problem.options))
        }
        None => {
            let sd = natred::catalog_lookup(name).map_err(|e| InputError(e.to_string()))?;
            let mut opts = SolverOptions::default();
            if let Some(seed) = seed {
                opts.seed = seed;
            }
            Ok((Some(name.to_owned()), sd, opts))
        }
    }
}
