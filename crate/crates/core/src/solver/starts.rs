use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::structure::{PrescribedTensor, StructureData};

/// Deterministic start points in log coordinates `u_i = ln α_i`.
///
/// Each `α_i / (d_i T_i)` is drawn log-uniformly from `range`. Draws whose
/// block load `Σ d_i T_i / α_i` reaches 1 are rescaled to load 0.9.
pub(crate) fn log_starts(
    sd: &StructureData,
    t: &PrescribedTensor,
    count: usize,
    seed: u64,
    range: (f64, f64),
) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (lo, hi) = (range.0.ln(), range.1.ln());
    let base: Vec<f64> = sd.blocks().iter().zip(t.ts()).map(|(b, &ti)| b.d as f64 * ti).collect();
    (0..count)
        .map(|_| {
            let mut inv: Vec<f64> = base.iter().map(|_| (-rng.random_range(lo..=hi)).exp()).collect();
            let load: f64 = inv.iter().sum();
            if load >= 1.0 {
                inv.iter_mut().for_each(|r| *r *= 0.9 / load);
            }
            base.iter().zip(&inv).map(|(b, r)| (b / r).ln()).collect()
        })
        .collect()
}

/// Start points `y_i = ln x_i` for the ratio equations: the ratio `x = 1`
/// followed by `count - 1` log-uniform draws from `[1e-2, 1e2]`.
pub(crate) fn ratio_starts(dim: usize, count: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(0x9e37_79b9_7f4a_7c15));
    let span = 100f64.ln();
    let mut out = vec![vec![0.0; dim]];
    out.extend((1..count).map(|_| (0..dim).map(|_| rng.random_range(-span..=span)).collect()));
    out.truncate(count);
    out
}
