#![allow(dead_code)]

use natred::{make_structure, MetricCoefficients, PrescribedTensor, StructureData};
use rand::Rng;

pub fn so6() -> StructureData {
    natred::catalog_lookup("so6-diag").unwrap()
}

pub fn so6_tensor(t1: f64, t2: f64) -> PrescribedTensor {
    PrescribedTensor::new(1.0, vec![t1, t2]).unwrap()
}

pub fn rel(a: f64, b: f64) -> f64 {
    if b == 0.0 {
        a.abs()
    } else {
        ((a - b) / b).abs()
    }
}

pub fn log_uniform<R: Rng>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    rng.random_range(lo.ln()..hi.ln()).exp()
}

/// Random structure: up to 5 blocks mixing simple and central summands.
pub fn random_structure<R: Rng>(rng: &mut R) -> StructureData {
    let n = rng.random_range(1..=20);
    let count = rng.random_range(1..=5);
    let blocks: Vec<(u32, f64)> = (0..count)
        .map(|_| {
            if rng.random_bool(0.25) {
                (1, 0.0)
            } else {
                (rng.random_range(1..=12), rng.random_range(0.01..0.99))
            }
        })
        .collect();
    make_structure(n, &blocks).unwrap()
}

pub fn random_metric<R: Rng>(rng: &mut R, sd: &StructureData) -> MetricCoefficients {
    let alphas = (0..sd.len()).map(|_| log_uniform(rng, 1e-2, 1e2)).collect();
    MetricCoefficients::new(log_uniform(rng, 1e-2, 1e2), alphas).unwrap()
}

pub fn random_tensor<R: Rng>(rng: &mut R, sd: &StructureData) -> PrescribedTensor {
    let ts = (0..sd.len()).map(|_| log_uniform(rng, 1e-2, 1e1)).collect();
    PrescribedTensor::new(log_uniform(rng, 1e-1, 1e1), ts).unwrap()
}

/// Feasible block coefficients: each `d_i T_i / α_i` gets a random share of a
/// total load below one.
pub fn random_feasible_alphas<R: Rng>(rng: &mut R, sd: &StructureData, t: &PrescribedTensor) -> Vec<f64> {
    let total = rng.random_range(0.05..0.95);
    let weights: Vec<f64> = (0..sd.len()).map(|_| rng.random_range(0.05..1.0)).collect();
    let sum: f64 = weights.iter().sum();
    sd.blocks()
        .iter()
        .zip(t.ts())
        .zip(&weights)
        .map(|((b, ti), w)| b.d as f64 * ti / (total * w / sum))
        .collect()
}

/// Central differences of `f` at `u` with step `h`.
pub fn central_gradient(f: impl Fn(&[f64]) -> f64, u: &[f64], h: f64) -> Vec<f64> {
    let mut x = u.to_vec();
    (0..u.len())
        .map(|k| {
            x[k] = u[k] + h;
            let fp = f(&x);
            x[k] = u[k] - h;
            let fm = f(&x);
            x[k] = u[k];
            (fp - fm) / (2.0 * h)
        })
        .collect()
}

/// The closed-form slice scalar curvature of the SO(6) example.
pub fn so6_surface_formula(t1: f64, t2: f64, a1: f64, a2: f64) -> f64 {
    let num = a1 * a2 - 3.0 * t1 * a2 - 3.0 * t2 * a1;
    -num * num * (a1 + a2) / (144.0 * a1 * a1 * a2 * a2) + num / (2.0 * a1 * a2)
        + 3.0 / (16.0 * a1)
        + 3.0 / (16.0 * a2)
}
