//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use common::*;
use natred::conditions::{
    compactness_bounds, dominant_block, sufficient_curve_scalar, sufficient_curve_threshold,
};
use natred::region::Axis;
use natred::{
    cad_membership_so6, classify, grad_scalar_on_slice, make_structure, maximize_scalar, necessary_condition,
    ricci, scalar, scalar_on_slice, simple_k_solvable, slice_metric, solve_algebraic, solve_simple_k,
    sufficient_condition, total_dimension, trace_g, trace_q, CadMembership, MetricCoefficients, PrescribedTensor,
    SolveStatus, SolverOptions,
};
use natred::solver::SolutionSource;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn check(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, Duration); 9] = [
        ("1 exact values (427/900, trace, 91/192)", exact_values, Duration::from_secs(1)),
        ("2 condition verdicts of the four examples", condition_verdicts, Duration::from_secs(1)),
        ("3 solver classification of the four examples", solver_examples, Duration::from_secs(10)),
        ("4 CAD consistency sweep 64x64", cad_sweep, Duration::from_secs(300)),
        ("5 variational vs algebraic solutions", oracle_equivalence, Duration::from_secs(120)),
        ("6 curvature property suite", property_suite, Duration::from_secs(60)),
        ("7 proof-curve asymptotics", curve_asymptotics, Duration::from_secs(10)),
        ("8 simple-K completeness and uniqueness", simple_k_completeness, Duration::from_secs(60)),
        ("9 compactness-bound sampling", compactness_sampling, Duration::from_secs(10)),
    ];
    let mut failed = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let pass = out.pass && elapsed <= budget;
        failed += (!pass) as usize;
        println!(
            "[{}] criterion {name}: {} ({:.2?} of {:?})",
            if pass { "PASS" } else { "FAIL" },
            out.detail,
            elapsed,
            budget
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all criteria passed");
}

fn exact_values() -> Outcome {
    let sd = so6();
    let g = MetricCoefficients::new(45.0, vec![1.0, 1.0]).unwrap();
    let t = so6_tensor(2.0 / 15.0, 2.0 / 15.0);
    let s = scalar(&sd, &g).unwrap();
    let tr = trace_g(&sd, &g, &t).unwrap();
    let (m, ratio) = dominant_block(&sd, &t).unwrap();
    let bound = ratio / 4.0 + 1.0 / 192.0;
    let ok = rel(s, 427.0 / 900.0) < 1e-12
        && (tr - 1.0).abs() < 1e-14
        && rel(bound, 91.0 / 192.0) < 1e-14
        && m == 0
        && s > bound;
    check(ok, format!("S = {s:.16}, tr_g T = {tr:.16}, bound = {bound:.16}"))
}

fn condition_verdicts() -> Outcome {
    let sd = so6();
    let v1 = sufficient_condition(&sd, &so6_tensor(1.0 / 6.0, 1.0 / 6.0)).unwrap();
    let v2 = necessary_condition(&sd, &so6_tensor(0.1, 0.1)).unwrap();
    let t3 = so6_tensor(0.13, 0.16);
    let v3n = necessary_condition(&sd, &t3).unwrap();
    let v3s = sufficient_condition(&sd, &t3).unwrap();
    let ok = v1.holds && !v2.holds && v3n.holds && !v3s.holds;
    check(
        ok,
        format!(
            "ex1 sufficient {}<{}; ex2 necessary {}<{} fails; ex3 necessary holds, sufficient {}<{} fails",
            v1.lhs, v1.rhs, v2.lhs, v2.rhs, v3s.lhs, v3s.rhs
        ),
    )
}

fn solver_examples() -> Outcome {
    let sd = so6();
    let opts = SolverOptions::default();
    let run = |t1, t2| classify(&sd, &so6_tensor(t1, t2), &opts).unwrap();
    let e1 = run(1.0 / 6.0, 1.0 / 6.0);
    let e2 = run(0.1, 0.1);
    let e3 = run(0.13, 0.16);
    let e4 = run(2.0 / 15.0, 2.0 / 15.0);
    let good = |c: &natred::Classification| {
        c.outcome.status == SolveStatus::SolutionFound
            && c.outcome.solution.as_ref().is_some_and(|s| s.c > 0.0 && s.residual < 1e-8)
    };
    let max4 = e4.outcome.solution.as_ref().map_or(f64::NAN, |s| s.scalar);
    let ok = good(&e1)
        && good(&e4)
        && max4 > 91.0 / 192.0
        && e2.outcome.status == SolveStatus::CertifiedNoSolution
        && e3.outcome.status == SolveStatus::NoCriticalPointDetected
        && [&e1, &e2, &e3, &e4].iter().all(|c| c.consistent);
    check(
        ok,
        format!(
            "{} / {} / {} / {} ; example-4 max S = {max4:.10} (> {:.10})",
            e1.outcome.status,
            e2.outcome.status,
            e3.outcome.status,
            e4.outcome.status,
            91.0 / 192.0
        ),
    )
}

/// True when the CAD label is constant on the disk of radius `h` around the point.
fn away_from_cad_boundary(t1: f64, t2: f64, h: f64) -> bool {
    let inside = |a: f64, b: f64| cad_membership_so6(a, b).unwrap() == CadMembership::Inside;
    let centre = inside(t1, t2);
    for ring in 1..=8 {
        let r = h * ring as f64 / 8.0;
        for k in 0..64 {
            let theta = std::f64::consts::TAU * k as f64 / 64.0;
            if inside(t1 + r * theta.cos(), t2 + r * theta.sin()) != centre {
                return false;
            }
        }
    }
    true
}

fn cad_sweep() -> Outcome {
    let sd = so6();
    let axis = Axis::new(0.11, 0.45, 64).unwrap();
    let h = axis.spacing();
    let cells = natred::region::scan_region(&sd, axis, axis, Some(&SolverOptions::default())).unwrap();
    let mut considered = 0;
    let mut agree = 0;
    let mut inconsistent = 0;
    for c in &cells {
        if !c.sufficient && c.solver == Some(SolveStatus::SolutionFound) {
            // gap region, fine
        }
        if c.sufficient && c.solver != Some(SolveStatus::SolutionFound) {
            inconsistent += 1;
        }
        if !away_from_cad_boundary(c.t1, c.t2, h) {
            continue;
        }
        considered += 1;
        let found = c.solver == Some(SolveStatus::SolutionFound);
        let inside = c.cad == natred::region::CadLabel::Inside;
        agree += (found == inside) as usize;
    }
    let frac = agree as f64 / considered as f64;
    check(
        frac >= 0.99 && inconsistent == 0,
        format!("{agree}/{considered} interior cells agree ({:.3}%), {inconsistent} sufficient-without-solution", 100.0 * frac),
    )
}

fn oracle_equivalence() -> Outcome {
    let sd = so6();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let opts = SolverOptions { algebraic_fallback: false, ..Default::default() };
    let mut worst_metric: f64 = 0.0;
    let mut worst_c: f64 = 0.0;
    let mut worst_grad: f64 = 0.0;
    let mut failures = Vec::new();
    let mut count = 0;
    while count < 100 {
        let (t1, t2) = (rng.random_range(0.11..0.45), rng.random_range(0.11..0.45));
        if cad_membership_so6(t1, t2).unwrap() != CadMembership::Inside {
            continue;
        }
        count += 1;
        let t = so6_tensor(t1, t2);
        let var = maximize_scalar(&sd, &t, &opts).unwrap();
        let roots = solve_algebraic(&sd, &t, &opts);
        let (Some(sol), Ok(roots)) = (var.solution.as_ref(), roots) else {
            failures.push((t1, t2));
            continue;
        };
        if var.diagnostics.source != Some(SolutionSource::Ascent) {
            failures.push((t1, t2));
            continue;
        }
        let root = &roots[0];
        let alphas = root.slice_alphas(&sd, &t);
        let alg = slice_metric(&sd, &t, &alphas).unwrap();
        let d = std::iter::once(rel(sol.metric.alpha_a(), alg.alpha_a()))
            .chain(sol.metric.alphas().iter().zip(alg.alphas()).map(|(a, b)| rel(*a, *b)))
            .fold(0.0, f64::max);
        worst_metric = worst_metric.max(d);
        worst_c = worst_c.max(rel(sol.c, root.c));
        worst_grad = worst_grad.max(sol.gradient_norm.unwrap());
        if roots.len() != 1 {
            failures.push((t1, t2));
        }
    }
    check(
        failures.is_empty() && worst_metric < 1e-6 && worst_grad < 1e-8 && worst_c < 1e-8,
        format!(
            "max metric diff {worst_metric:.2e}, max c diff {worst_c:.2e}, max |grad| {worst_grad:.2e}, failures {failures:?}"
        ),
    )
}

fn property_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut worst = [0.0f64; 6];
    for _ in 0..1000 {
        let sd = random_structure(&mut rng);
        let g = random_metric(&mut rng, &sd);
        let lambda = log_uniform(&mut rng, 1e-3, 1e3);
        let r1 = ricci(&sd, &g).unwrap();
        let r2 = ricci(&sd, &g.scaled(lambda).unwrap()).unwrap();
        let scale_dev = std::iter::once(rel(r2.ric_a, r1.ric_a))
            .chain(r1.ric_blocks.iter().zip(&r2.ric_blocks).map(|(a, b)| rel(*b, *a)))
            .fold(0.0, f64::max);
        worst[0] = worst[0].max(scale_dev);
        worst[1] = worst[1].max(rel(r2.scalar, r1.scalar / lambda));

        let q = ricci(&sd, &MetricCoefficients::background(&sd)).unwrap();
        let d = total_dimension(&sd) as f64;
        let bi = std::iter::once(rel(q.ric_a, 0.25))
            .chain(q.ric_blocks.iter().map(|r| rel(*r, 0.25)))
            .chain(std::iter::once(rel(q.scalar, d / 4.0)))
            .fold(0.0, f64::max);
        worst[2] = worst[2].max(bi);

        let contracted = sd.n() as f64 * r1.ric_a / g.alpha_a()
            + sd.blocks().iter().zip(&r1.ric_blocks).zip(g.alphas()).map(|((b, r), a)| b.d as f64 * r / a).sum::<f64>();
        worst[3] = worst[3].max(rel(contracted, r1.scalar));
    }
    for _ in 0..100 {
        let sd = random_structure(&mut rng);
        let t = random_tensor(&mut rng, &sd);
        let alphas = random_feasible_alphas(&mut rng, &sd, &t);
        let u: Vec<f64> = alphas.iter().map(|a| a.ln()).collect();
        let analytic = grad_scalar_on_slice(&sd, &t, &u).unwrap();
        let f = |v: &[f64]| scalar_on_slice(&sd, &t, &v.iter().map(|x| x.exp()).collect::<Vec<_>>()).unwrap();
        let fd = central_gradient(f, &u, 1e-5);
        let scale = analytic.iter().chain(&fd).fold(0.0f64, |m, x| m.max(x.abs()));
        let err = analytic.iter().zip(&fd).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max) / scale;
        worst[4] = worst[4].max(err);
    }
    let sd = so6();
    for i in 0..50 {
        for j in 0..50 {
            let t1 = 0.05 + 0.4 * i as f64 / 49.0;
            let t2 = 0.05 + 0.4 * ((j * 7) % 50) as f64 / 49.0;
            let t = so6_tensor(t1, t2);
            // a feasible grid: α_i = 3 T_i (1 + s) with s in [1.2, 30]
            let a1 = 3.0 * t1 * (2.2 + 28.0 * i as f64 / 49.0);
            let a2 = 3.0 * t2 * (2.2 + 28.0 * j as f64 / 49.0);
            let general = scalar_on_slice(&sd, &t, &[a1, a2]).unwrap();
            let special = so6_surface_formula(t1, t2, a1, a2);
            worst[5] = worst[5].max(rel(general, special));
        }
    }
    let limits = [1e-12, 1e-12, 1e-13, 1e-10, 1e-6, 1e-12];
    let ok = worst.iter().zip(&limits).all(|(w, l)| w < l);
    check(
        ok,
        format!(
            "ricci scale {:.1e}, scalar 1/λ {:.1e}, bi-invariant {:.1e}, contraction {:.1e}, gradient {:.1e}, surface formula {:.1e}",
            worst[0], worst[1], worst[2], worst[3], worst[4], worst[5]
        ),
    )
}

fn curve_asymptotics() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut instances = vec![(so6(), so6_tensor(1.0 / 6.0, 1.0 / 6.0))];
    while instances.len() < 21 {
        let sd = random_structure(&mut rng);
        if sd.r() == 0 {
            continue;
        }
        // the O(1/t) remainders grow with tr_Q T, so fix it to the so6 value
        let t = random_tensor(&mut rng, &sd);
        let t = t.scaled(10.0 / trace_q(&sd, &t).unwrap()).unwrap();
        instances.push((sd, t));
    }
    let mut worst_limit: f64 = 0.0;
    let mut worst_slope: f64 = 0.0;
    let mut so6_slope = f64::NAN;
    for (k, (sd, t)) in instances.iter().enumerate() {
        let (m, ratio) = dominant_block(sd, t).unwrap();
        let ceiling = ratio / 4.0;
        let far = sufficient_curve_scalar(sd, t, m, 1e8).unwrap();
        worst_limit = worst_limit.max(rel(far, ceiling));

        let (param, h) = (1e6, 1e3);
        assert!(sufficient_curve_threshold(sd, t, m).unwrap() < param - h);
        let sp = sufficient_curve_scalar(sd, t, m, param + h).unwrap();
        let sm = sufficient_curve_scalar(sd, t, m, param - h).unwrap();
        let slope = 4.0 * param * param * (sp - sm) / (2.0 * h);
        let bm = sd.blocks()[m];
        let expected = -(total_dimension(sd) as f64) - bm.d as f64 + bm.d as f64 * bm.kappa
            + bm.kappa * trace_q(sd, t).unwrap() / t.ts()[m];
        // the remainder is relative to the slope itself
        worst_slope = worst_slope.max((slope - expected).abs() / expected.abs().max(1.0));
        if k == 0 {
            so6_slope = slope;
            worst_slope = worst_slope.max((expected + 2.25).abs());
        }
    }
    check(
        worst_limit < 1e-6 && worst_slope < 1e-3 && (so6_slope + 2.25).abs() < 1e-3,
        format!("limit rel err {worst_limit:.1e}, slope err {worst_slope:.1e}, so6 slope {so6_slope:.6}"),
    )
}

fn simple_k_completeness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let opts = SolverOptions { starts: 20, ..Default::default() };
    let mut mismatches = 0;
    let mut solvable = 0;
    let mut worst: f64 = 0.0;
    let mut non_unique = 0;
    for _ in 0..100 {
        let n = rng.random_range(1..=30);
        let d = rng.random_range(1..=30);
        let kappa = rng.random_range(0.01..0.99);
        let sd = make_structure(n, &[(d, kappa)]).unwrap();
        // T_1 near the solvability threshold on both sides
        let threshold = n as f64 * kappa / (2.0 * d as f64 * (1.0 - kappa) + n as f64);
        let t = PrescribedTensor::new(1.0, vec![threshold * log_uniform(&mut rng, 0.2, 5.0)]).unwrap();
        let verdict = simple_k_solvable(&sd, &t).unwrap();
        let out = solve_simple_k(&sd, &t).unwrap();
        let expected = if verdict.holds { SolveStatus::SolutionFound } else { SolveStatus::CertifiedNoSolution };
        mismatches += (out.status != expected) as usize;
        if !verdict.holds {
            continue;
        }
        solvable += 1;
        let x = out.solution.unwrap().ratios[0];
        match solve_algebraic(&sd, &t, &opts) {
            Ok(roots) => {
                non_unique += (roots.len() != 1) as usize;
                for r in &roots {
                    worst = worst.max(rel(r.ratios[0], x));
                }
            }
            Err(_) => non_unique += 1,
        }
    }
    check(
        mismatches == 0 && non_unique == 0 && worst < 1e-6,
        format!("{mismatches} verdict mismatches, {solvable} solvable, {non_unique} non-unique, max ratio diff {worst:.1e}"),
    )
}

fn compactness_sampling() -> Outcome {
    let sd = so6();
    let t = so6_tensor(2.0 / 15.0, 2.0 / 15.0);
    let eps = 1.0 / 192.0;
    let bounds = compactness_bounds(&sd, &t, eps).unwrap();
    let limit = 91.0 / 192.0;
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut samples = 0;
    let mut worst = f64::NEG_INFINITY;
    let mut violations = 0;
    while samples < 1000 {
        // pick a coordinate beyond its bound, split the remaining trace budget
        let which = rng.random_range(0..=sd.len());
        let loads = [9.0 * t.t_a(), 3.0 * t.ts()[0], 3.0 * t.ts()[1]];
        let mut shares = [0.0; 3];
        let (fixed_share, free): (f64, Vec<usize>) = if which == 0 {
            let alpha = bounds.gamma_a * log_uniform(&mut rng, 1.0, 1e3);
            (loads[0] / alpha, vec![1, 2])
        } else {
            let alpha = bounds.gammas[which - 1] * log_uniform(&mut rng, 1.0, 1e3);
            (loads[which] / alpha, (0..3).filter(|&k| k != which).collect())
        };
        shares[which] = fixed_share;
        let w: Vec<f64> = free.iter().map(|_| rng.random_range(0.01..1.0)).collect();
        let wsum: f64 = w.iter().sum();
        for (k, wk) in free.iter().zip(&w) {
            shares[*k] = (1.0 - fixed_share) * wk / wsum;
        }
        let coeffs: Vec<f64> = loads.iter().zip(&shares).map(|(l, s)| l / s).collect();
        let g = MetricCoefficients::new(coeffs[0], coeffs[1..].to_vec()).unwrap();
        if bounds.contains(&g) {
            continue;
        }
        samples += 1;
        let tr = trace_g(&sd, &g, &t).unwrap();
        assert!((tr - 1.0).abs() < 1e-12);
        let s = scalar(&sd, &g).unwrap();
        worst = worst.max(s);
        violations += (s >= limit) as usize;
    }
    check(violations == 0, format!("{samples} samples outside the box, max S = {worst:.12} < {limit:.12}, {violations} violations"))
}
