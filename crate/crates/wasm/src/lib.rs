//! wasm-bindgen exports for the SO(6)/(SO(3)xSO(3)) demo page.
//!
//! Each export has a plain Rust twin returning `Result<_, String>` so the
//! logic can be tested natively.

use natred::region::{sample_surface, scan_region, Axis};
use natred::{catalog_lookup, classify, PrescribedTensor, SolverOptions, StructureData};
use serde::Serialize;
use wasm_bindgen::prelude::*;

fn so6() -> StructureData {
    catalog_lookup("so6-diag").expect("catalog entry")
}

fn text(e: natred::Error) -> String {
    e.to_string()
}

#[derive(Serialize)]
struct Cell {
    t1: f64,
    t2: f64,
    sufficient: bool,
    necessary: bool,
    cad: &'static str,
    solver: Option<&'static str>,
}

/// Region cells over `[t1_lo, t1_hi] x [t2_lo, t2_hi]` as a JSON array in
/// row-major order (t1 outer).
pub fn region_json(t1: (f64, f64), t2: (f64, f64), resolution: usize, solve: bool) -> Result<String, String> {
    let sd = so6();
    let a = Axis::new(t1.0, t1.1, resolution).map_err(text)?;
    let b = Axis::new(t2.0, t2.1, resolution).map_err(text)?;
    let opts = SolverOptions::default();
    let cells = scan_region(&sd, a, b, solve.then_some(&opts)).map_err(text)?;
    let cells: Vec<Cell> = cells
        .iter()
        .map(|c| Cell {
            t1: c.t1,
            t2: c.t2,
            sufficient: c.sufficient,
            necessary: c.necessary,
            cad: c.cad.as_str(),
            solver: c.solver.map(|s| s.as_str()),
        })
        .collect();
    serde_json::to_string(&cells).map_err(|e| e.to_string())
}

/// Scalar curvature on the slice for `T = (1, [t1, t2])`, row-major with
/// alpha1 outer; infeasible samples are NaN.
pub fn surface_values(t: (f64, f64), a1: (f64, f64), a2: (f64, f64), resolution: usize) -> Result<Vec<f64>, String> {
    let tensor = PrescribedTensor::new(1.0, vec![t.0, t.1]).map_err(text)?;
    let a1 = Axis::new(a1.0, a1.1, resolution).map_err(text)?;
    let a2 = Axis::new(a2.0, a2.1, resolution).map_err(text)?;
    let samples = sample_surface(&so6(), &tensor, a1, a2).map_err(text)?;
    Ok(samples.iter().map(|s| s.scalar.unwrap_or(f64::NAN)).collect())
}

/// Full classification of `T = (1, [t1, t2])` as JSON.
pub fn classify_json(t1: f64, t2: f64) -> Result<String, String> {
    let tensor = PrescribedTensor::new(1.0, vec![t1, t2]).map_err(text)?;
    let report = classify(&so6(), &tensor, &SolverOptions::default()).map_err(text)?;
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn region_chart(t1_lo: f64, t1_hi: f64, t2_lo: f64, t2_hi: f64, resolution: usize, solve: bool) -> Result<String, JsError> {
    region_json((t1_lo, t1_hi), (t2_lo, t2_hi), resolution, solve).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
#[allow(clippy::too_many_arguments)]
pub fn surface_grid(
    t1: f64,
    t2: f64,
    a1_lo: f64,
    a1_hi: f64,
    a2_lo: f64,
    a2_hi: f64,
    resolution: usize,
) -> Result<Vec<f64>, JsError> {
    surface_values((t1, t2), (a1_lo, a1_hi), (a2_lo, a2_hi), resolution).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn classify_point(t1: f64, t2: f64) -> Result<String, JsError> {
    classify_json(t1, t2).map_err(|e| JsError::new(&e))
}
