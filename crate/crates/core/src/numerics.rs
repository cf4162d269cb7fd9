//! Derivative-free numerical kernels: scalar maximization, Newton's method
//! with a finite-difference Jacobian, and Nelder–Mead ascent.

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Number of equispaced samples used to bracket the maximum.
pub const BRACKET_SAMPLES: usize = 64;

/// Default absolute tolerance on the maximizer.
pub const DEFAULT_XTOL: f64 = 1e-14;

const GOLDEN: f64 = 0.381_966_011_250_105_1;
const BRENT_MAX_ITER: usize = 500;

/// Stencil width of the slope polish, relative to the search interval.
const POLISH_STEP: f64 = 1e-3;
const POLISH_MAX_ITER: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalarOptResult {
    pub x_star: f64,
    pub f_star: f64,
    pub iterations: usize,
    /// Sampling bracket around the maximum.
    pub bracket: (f64, f64),
}

fn finite_or_neg_inf(v: f64) -> f64 {
    if v.is_finite() {
        v
    } else {
        f64::NEG_INFINITY
    }
}

/// Maximizes `objective` on `[lo, hi]`.
///
/// The maximum is first bracketed on a 64-point grid, then located with
/// Brent's golden-section/parabolic search. Near the optimum the objective
/// is flat, so values alone only pin the argmax to about `sqrt(eps)`; a final
/// polish drives a five-point difference slope to zero with a three-point
/// curvature estimate, which recovers the argmax to near machine precision
/// for smooth objectives. Non-finite objective values count as `-inf`.
pub fn maximize_scalar<F>(objective: F, lo: f64, hi: f64, xtol: f64) -> Result<ScalarOptResult>
where
    F: Fn(f64) -> f64,
{
    if !(lo < hi) {
        return Err(Error::MaximizerFailed(format!("empty interval [{lo}, {hi}]")));
    }
    let f = |x: f64| finite_or_neg_inf(objective(x));
    let step = (hi - lo) / (BRACKET_SAMPLES - 1) as f64;
    let grid: Vec<f64> = (0..BRACKET_SAMPLES)
        .map(|i| if i + 1 == BRACKET_SAMPLES { hi } else { lo + i as f64 * step })
        .collect();
    let values: Vec<f64> = grid.iter().map(|&x| f(x)).collect();
    let (best, &f_best) = values
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .expect("non-empty grid");
    if f_best == f64::NEG_INFINITY {
        return Err(Error::MaximizerFailed(
            "objective is not finite anywhere on the grid".into(),
        ));
    }
    if best == 0 || best + 1 == BRACKET_SAMPLES {
        return Err(Error::NoInteriorMax { x: grid[best] });
    }
    let bracket = (grid[best - 1], grid[best + 1]);

    let (x_brent, f_brent, iterations) = brent_max(&f, bracket, grid[best], f_best, xtol)?;
    let x_star = polish(&f, x_brent, bracket, POLISH_STEP * (hi - lo), xtol);
    let f_polished = f(x_star);
    let (x_star, f_star) = if f_polished.is_finite() {
        (x_star, f_polished)
    } else {
        (x_brent, f_brent)
    };
    Ok(ScalarOptResult {
        x_star,
        f_star,
        iterations,
        bracket,
    })
}

/// Brent's minimization of `-f` on `bracket`, started from `x0`.
fn brent_max<F: Fn(f64) -> f64>(
    f: &F,
    bracket: (f64, f64),
    x0: f64,
    f0: f64,
    xtol: f64,
) -> Result<(f64, f64, usize)> {
    let sqrt_eps = f64::EPSILON.sqrt();
    let (mut a, mut b) = bracket;
    let (mut x, mut w, mut v) = (x0, x0, x0);
    let (mut gx, mut gw, mut gv) = (-f0, -f0, -f0);
    let (mut d, mut e) = (0.0f64, 0.0f64);
    for iter in 0..BRENT_MAX_ITER {
        let xm = 0.5 * (a + b);
        let tol1 = sqrt_eps * x.abs() + xtol / 3.0;
        let tol2 = 2.0 * tol1;
        if (x - xm).abs() <= tol2 - 0.5 * (b - a) {
            return Ok((x, -gx, iter));
        }
        let mut golden = true;
        if e.abs() > tol1 {
            let r = (x - w) * (gx - gv);
            let mut q = (x - v) * (gx - gw);
            let mut p = (x - v) * q - (x - w) * r;
            q = 2.0 * (q - r);
            if q > 0.0 {
                p = -p;
            }
            q = q.abs();
            let e_prev = e;
            e = d;
            if p.abs() < (0.5 * q * e_prev).abs() && p > q * (a - x) && p < q * (b - x) {
                d = p / q;
                let u = x + d;
                if u - a < tol2 || b - u < tol2 {
                    d = tol1.copysign(xm - x);
                }
                golden = false;
            }
        }
        if golden {
            e = if x >= xm { a - x } else { b - x };
            d = GOLDEN * e;
        }
        let u = if d.abs() >= tol1 {
            x + d
        } else {
            x + tol1.copysign(d)
        };
        let gu = -f(u);
        if gu <= gx {
            if u >= x {
                a = x;
            } else {
                b = x;
            }
            (v, gv) = (w, gw);
            (w, gw) = (x, gx);
            (x, gx) = (u, gu);
        } else {
            if u < x {
                a = u;
            } else {
                b = u;
            }
            if gu <= gw || w == x {
                (v, gv) = (w, gw);
                (w, gw) = (u, gu);
            } else if gu <= gv || v == x || v == w {
                (v, gv) = (u, gu);
            }
        }
    }
    Err(Error::MaximizerFailed(format!(
        "Brent search did not converge in {BRENT_MAX_ITER} iterations"
    )))
}

/// Newton steps on the finite-difference slope, kept inside `bracket`.
fn polish<F: Fn(f64) -> f64>(f: &F, mut x: f64, bracket: (f64, f64), h: f64, xtol: f64) -> f64 {
    for _ in 0..POLISH_MAX_ITER {
        let (lo, hi) = (x - 2.0 * h, x + 2.0 * h);
        if lo < bracket.0 - 2.0 * h || hi > bracket.1 + 2.0 * h {
            break;
        }
        let (fm2, fm1, f0, fp1, fp2) = (f(lo), f(x - h), f(x), f(x + h), f(hi));
        if ![fm2, fm1, f0, fp1, fp2].iter().all(|v| v.is_finite()) {
            break;
        }
        let slope = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
        let curvature = (fp1 - 2.0 * f0 + fm1) / (h * h);
        if !(curvature < 0.0) {
            break;
        }
        let step = -slope / curvature;
        let next = x + step;
        if !(bracket.0..=bracket.1).contains(&next) {
            break;
        }
        x = next;
        if step.abs() <= xtol.max(f64::EPSILON * x.abs()) {
            break;
        }
    }
    x
}

/// Five-point central difference of `f` at `x`.
pub fn central_derivative<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h)
}

#[derive(Debug, Clone, PartialEq)]
pub struct NewtonSolution {
    pub x: Vec<f64>,
    pub iterations: usize,
    pub residual: f64,
}

/// Relative step of the central-difference Jacobian.
pub const JACOBIAN_STEP: f64 = 1e-7;
/// Largest accepted Jacobian condition number.
pub const MAX_CONDITION: f64 = 1e12;

fn inf_norm(v: &[f64]) -> f64 {
    v.iter().fold(0.0f64, |m, x| if x.is_nan() { f64::NAN } else { m.max(x.abs()) })
}

/// Solves `system(x) = 0` by Newton's method with a central-difference
/// Jacobian and residual backtracking.
pub fn newton_solve<F>(system: F, guess: &[f64], tol: f64, max_iter: usize) -> Result<NewtonSolution>
where
    F: Fn(&[f64]) -> Vec<f64>,
{
    let k = guess.len();
    let mut x = guess.to_vec();
    let mut fx = system(&x);
    let mut residual = inf_norm(&fx);
    let fail = |iterations, residual, reason| Error::NewtonFailed {
        iterations,
        residual,
        reason,
    };
    for iter in 0..=max_iter {
        if !residual.is_finite() {
            return Err(fail(iter, residual, "residual is not finite"));
        }
        if residual <= tol {
            return Ok(NewtonSolution {
                x,
                iterations: iter,
                residual,
            });
        }
        if iter == max_iter {
            break;
        }
        let mut jac = DMatrix::<f64>::zeros(fx.len(), k);
        let mut probe = x.clone();
        for j in 0..k {
            let h = JACOBIAN_STEP * x[j].abs().max(1.0);
            probe[j] = x[j] + h;
            let fp = system(&probe);
            probe[j] = x[j] - h;
            let fm = system(&probe);
            probe[j] = x[j];
            for i in 0..fx.len() {
                jac[(i, j)] = (fp[i] - fm[i]) / (2.0 * h);
            }
        }
        let sv = jac.clone().singular_values();
        let (smax, smin) = (sv.max(), sv.min());
        if !(smin > 0.0) || smax / smin > MAX_CONDITION {
            return Err(fail(iter, residual, "singular Jacobian"));
        }
        let rhs = DVector::from_column_slice(&fx);
        let Some(dx) = jac.lu().solve(&rhs) else {
            return Err(fail(iter, residual, "singular Jacobian"));
        };
        let mut t = 1.0;
        loop {
            let trial: Vec<f64> = x.iter().zip(dx.iter()).map(|(xi, di)| xi - t * di).collect();
            let ft = system(&trial);
            let rt = inf_norm(&ft);
            if rt.is_finite() && rt <= residual {
                x = trial;
                fx = ft;
                residual = rt;
                break;
            }
            t *= 0.5;
            if t < 1e-6 {
                return Err(fail(iter + 1, residual, "line search stalled"));
            }
        }
    }
    Err(fail(max_iter, residual, "iteration cap reached"))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimplexResult {
    pub x: Vec<f64>,
    pub value: f64,
    pub converged: bool,
    pub evaluations: usize,
}

/// Default value-spread tolerance of the simplex.
pub const DEFAULT_FTOL: f64 = 1e-12;
/// Restarts after the first Nelder–Mead run.
pub const SIMPLEX_RESTARTS: usize = 3;
/// Seed of the restart perturbations, fixed for reproducibility.
pub const SIMPLEX_SEED: u64 = 0x5eed_0f_5a11_9011;
const SIMPLEX_XTOL: f64 = 1e-9;

/// Nelder–Mead ascent from `guess`, followed by restarts from simplices
/// re-seeded around the incumbent with pseudo-random edge lengths.
pub fn maximize_simplex<F>(objective: F, guess: &[f64], ftol: f64) -> SimplexResult
where
    F: Fn(&[f64]) -> f64,
{
    let mut rng = ChaCha8Rng::seed_from_u64(SIMPLEX_SEED);
    let scales: Vec<f64> = guess.iter().map(|g| if *g == 0.0 { 2.5e-4 } else { 0.05 * g.abs() }).collect();
    let mut best = nelder_mead(&objective, guess, &scales, ftol);
    for _ in 0..SIMPLEX_RESTARTS {
        let perturbed: Vec<f64> = scales
            .iter()
            .map(|s| s * rng.gen_range(0.2..1.0) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 })
            .collect();
        let run = nelder_mead(&objective, &best.x, &perturbed, ftol);
        let evaluations = best.evaluations + run.evaluations;
        if run.value >= best.value {
            best = run;
        } else {
            best.converged = run.converged;
        }
        best.evaluations = evaluations;
    }
    best
}

fn nelder_mead<F>(objective: &F, start: &[f64], steps: &[f64], ftol: f64) -> SimplexResult
where
    F: Fn(&[f64]) -> f64,
{
    let k = start.len();
    let max_evals = 4000 * (k + 1) * (k + 1);
    let evals = std::cell::Cell::new(0usize);
    let eval = |x: &[f64]| {
        evals.set(evals.get() + 1);
        // minimize the negated objective; NaN counts as worst
        let v = -objective(x);
        if v.is_nan() {
            f64::INFINITY
        } else {
            v
        }
    };
    let mut simplex: Vec<Vec<f64>> = vec![start.to_vec()];
    for i in 0..k {
        let mut p = start.to_vec();
        p[i] += steps[i];
        simplex.push(p);
    }
    let mut vals: Vec<f64> = simplex.iter().map(|p| eval(p)).collect();
    let mut converged = false;
    while evals.get() < max_evals {
        let mut idx: Vec<usize> = (0..=k).collect();
        idx.sort_by(|&a, &b| vals[a].total_cmp(&vals[b]));
        simplex = idx.iter().map(|&i| simplex[i].clone()).collect();
        vals = idx.iter().map(|&i| vals[i]).collect();

        let spread = vals[k] - vals[0];
        let size = simplex[1..]
            .iter()
            .flat_map(|p| p.iter().zip(&simplex[0]).map(|(a, b)| (a - b).abs()))
            .fold(0.0f64, f64::max);
        if spread <= ftol && size <= SIMPLEX_XTOL {
            converged = true;
            break;
        }

        let centroid: Vec<f64> = (0..k)
            .map(|j| simplex[..k].iter().map(|p| p[j]).sum::<f64>() / k as f64)
            .collect();
        let along = |t: f64| -> Vec<f64> {
            centroid
                .iter()
                .zip(&simplex[k])
                .map(|(c, w)| c + t * (c - w))
                .collect()
        };
        let xr = along(1.0);
        let fr = eval(&xr);
        if fr < vals[0] {
            let xe = along(2.0);
            let fe = eval(&xe);
            if fe < fr {
                simplex[k] = xe;
                vals[k] = fe;
            } else {
                simplex[k] = xr;
                vals[k] = fr;
            }
        } else if fr < vals[k - 1] {
            simplex[k] = xr;
            vals[k] = fr;
        } else {
            let (xc, fc) = if fr < vals[k] {
                let xc = along(0.5);
                let fc = eval(&xc);
                (xc, fc)
            } else {
                let xc = along(-0.5);
                let fc = eval(&xc);
                (xc, fc)
            };
            if fc < vals[k].min(fr) {
                simplex[k] = xc;
                vals[k] = fc;
            } else {
                let x0 = simplex[0].clone();
                for i in 1..=k {
                    for j in 0..k {
                        simplex[i][j] = x0[j] + 0.5 * (simplex[i][j] - x0[j]);
                    }
                    vals[i] = eval(&simplex[i]);
                }
            }
        }
    }
    let (bi, _) = vals
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .expect("non-empty simplex");
    SimplexResult {
        x: simplex[bi].clone(),
        value: -vals[bi],
        converged,
        evaluations: evals.get(),
    }
}
