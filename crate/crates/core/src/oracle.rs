//! Brute-force search over all symmetric angle sequences.
//!
//! The first `n/2 − 2` angles are free; the last two are eliminated by the
//! angle-sum and closure constraints. This is independent of the thin model
//! and is used to check that `B_n` is close to the best symmetric polygon.

use std::f64::consts::FRAC_PI_2;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructions::{construct_bn, solve_tail};
use crate::error::{Error, Result};
use crate::geometry::{self, AngleSequence, VERIFY_TOL};
use crate::numerics::{maximize_simplex, DEFAULT_FTOL};

/// Maximal areas known from the literature, truncated to six decimals.
pub struct KnownOptima;

impl KnownOptima {
    pub const TABLE: [(usize, f64); 4] = [(6, 0.674981), (8, 0.726868), (10, 0.749137), (12, 0.760729)];

    pub fn get(n: usize) -> Option<f64> {
        Self::TABLE.iter().find(|(m, _)| *m == n).map(|(_, a)| *a)
    }
}

/// Perturbed restarts of [`solve_optimal`] beyond the start at `B_n`.
pub const ORACLE_RESTARTS: usize = 8;
const ORACLE_SEED: u64 = 0x0_0ac1e;
/// Relative size of the restart perturbations.
const RESTART_SPREAD: f64 = 0.02;

/// Area of the symmetric polygon with the given leading angles, or `-inf`
/// when the tail cannot be closed, an angle is non-positive, or the result
/// is not small.
pub fn full_area(n: usize, free_angles: &[f64]) -> f64 {
    if n < 6 || n % 2 != 0 || free_angles.len() != n / 2 - 2 {
        return f64::NEG_INFINITY;
    }
    if free_angles.iter().any(|&a| !(a > 0.0)) || free_angles.iter().sum::<f64>() >= FRAC_PI_2 {
        return f64::NEG_INFINITY;
    }
    let Ok((angles, _)) = solve_tail(n, free_angles, None) else {
        return f64::NEG_INFINITY;
    };
    let Ok(seq) = AngleSequence::new(n, angles) else {
        return f64::NEG_INFINITY;
    };
    let polygon = geometry::vertices_from_angles(&seq);
    if geometry::diameter(&polygon).0 > 1.0 + VERIFY_TOL {
        return f64::NEG_INFINITY;
    }
    geometry::fan_area(&seq)
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleSolution {
    pub angles: Vec<f64>,
    pub area: f64,
}

/// Best symmetric polygon found by Nelder–Mead from `B_n` and from
/// [`ORACLE_RESTARTS`] perturbations of it.
pub fn solve_optimal(n: usize) -> Result<OracleSolution> {
    if n < 6 || n % 2 != 0 {
        return Err(Error::InvalidVertexCount {
            n,
            reason: "the oracle needs an even vertex count of at least 6",
        });
    }
    let bn = construct_bn(n)?;
    let start: Vec<f64> = bn
        .params
        .expect("B_n is a thin polygon")
        .angle_list()
        .into_iter()
        .take(n / 2 - 2)
        .collect();
    let objective = |x: &[f64]| full_area(n, x);

    let mut rng = ChaCha8Rng::seed_from_u64(ORACLE_SEED);
    let mut starts = vec![start.clone()];
    for _ in 0..ORACLE_RESTARTS {
        starts.push(
            start
                .iter()
                .map(|a| a * (1.0 + RESTART_SPREAD * rng.gen_range(-1.0..1.0)))
                .collect(),
        );
    }
    let best = starts
        .iter()
        .map(|s| maximize_simplex(objective, s, DEFAULT_FTOL))
        .filter(|r| r.value.is_finite())
        .max_by(|a, b| a.value.total_cmp(&b.value))
        .ok_or_else(|| Error::MaximizerFailed("no restart reached a feasible polygon".into()))?;
    let (angles, _) = solve_tail(n, &best.x, None)?;
    Ok(OracleSolution {
        angles,
        area: best.value,
    })
}
