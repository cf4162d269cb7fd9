//! The reduced three-parameter model.
//!
//! The half polygon uses the angles `(α, β+γ, β−γ, β, …, β)`. The angle sum
//! fixes `β` from `α`, and horizontal closure of the middle edge fixes `γ`,
//! so the area becomes a function of `α` alone.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::geometry::{self, AngleSequence, Polygon};

/// Bound on the closure residual accepted from the closed-form `γ` solve.
const GAMMA_RESIDUAL_TOL: f64 = 1e-14;

/// `β` from the angle-sum constraint `α + (n/2 − 1)β = π/2`.
pub fn beta_from_alpha(n: usize, alpha: f64) -> f64 {
    (FRAC_PI_2 - alpha) / (n as f64 / 2.0 - 1.0)
}

/// Right-hand side of the closure constraint,
/// `sin α + sin(α + 3β/2) / (2 cos(β/2))`.
fn closure_rhs(alpha: f64, beta: f64) -> f64 {
    alpha.sin() + (alpha + 1.5 * beta).sin() / (2.0 * (0.5 * beta).cos())
}

/// `γ` closing the polygon, on the principal arcsin branch.
pub fn gamma_from_alpha_beta(alpha: f64, beta: f64) -> Result<f64> {
    let arg = closure_rhs(alpha, beta);
    if !(arg.abs() <= 1.0) {
        return Err(Error::InfeasibleAlpha { alpha, arg });
    }
    let gamma = arg.asin() - alpha - beta;
    let residual = (alpha + beta + gamma).sin() - arg;
    debug_assert!(residual.abs() < GAMMA_RESIDUAL_TOL, "residual {residual}");
    Ok(gamma)
}

/// Search interval `[π/(2n−2), π/n]` for the maximizing `α`.
pub fn search_interval(n: usize) -> (f64, f64) {
    let nf = n as f64;
    (PI / (2.0 * nf - 2.0), PI / nf)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThinParams {
    pub n: usize,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl ThinParams {
    /// Validates explicitly given parameters against both constraints.
    pub fn new(n: usize, alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        let params = ThinParams {
            n,
            alpha,
            beta,
            gamma,
        };
        params.check_ranges()?;
        let (sum, closure) = params.residuals();
        if sum.abs() > geometry::GEOM_TOL || closure.abs() > geometry::GEOM_TOL {
            return Err(Error::InvalidParams(format!(
                "constraint residuals ({sum:e}, {closure:e}) exceed {:e}",
                geometry::GEOM_TOL
            )));
        }
        Ok(params)
    }

    /// Solves `β` and `γ` for a given `α`.
    pub fn from_alpha(n: usize, alpha: f64) -> Result<Self> {
        check_n(n)?;
        if !(alpha > 0.0 && alpha < FRAC_PI_2) {
            return Err(Error::InvalidParams(format!(
                "alpha = {alpha} is outside (0, pi/2)"
            )));
        }
        let beta = beta_from_alpha(n, alpha);
        let gamma = gamma_from_alpha_beta(alpha, beta)?;
        let params = ThinParams {
            n,
            alpha,
            beta,
            gamma,
        };
        params.check_ranges()?;
        Ok(params)
    }

    fn check_ranges(&self) -> Result<()> {
        check_n(self.n)?;
        if !(self.alpha > 0.0 && self.beta > 0.0 && self.gamma.abs() < self.beta) {
            return Err(Error::InvalidParams(format!(
                "need alpha > 0, beta > 0, |gamma| < beta; got ({}, {}, {})",
                self.alpha, self.beta, self.gamma
            )));
        }
        Ok(())
    }

    /// Residuals of the angle-sum and closure constraints.
    pub fn residuals(&self) -> (f64, f64) {
        let m = self.n as f64 / 2.0;
        let sum = self.alpha + (m - 1.0) * self.beta - FRAC_PI_2;
        let closure =
            (self.alpha + self.beta + self.gamma).sin() - closure_rhs(self.alpha, self.beta);
        (sum, closure)
    }

    /// Whether `α` lies in the standard search interval.
    pub fn in_search_interval(&self) -> bool {
        let (lo, hi) = search_interval(self.n);
        (lo..=hi).contains(&self.alpha)
    }

    /// The full half-polygon angle list `(α, β+γ, β−γ, β, …, β)`.
    pub fn angle_list(&self) -> Vec<f64> {
        let mut angles = vec![self.beta; self.n / 2];
        angles[0] = self.alpha;
        angles[1] = self.beta + self.gamma;
        angles[2] = self.beta - self.gamma;
        angles
    }

    pub fn angles(&self) -> Result<AngleSequence> {
        AngleSequence::new(self.n, self.angle_list())
    }

    pub fn polygon(&self) -> Result<Polygon> {
        Ok(geometry::vertices_from_angles(&self.angles()?))
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 6 || n % 2 != 0 {
        return Err(Error::InvalidVertexCount {
            n,
            reason: "the thin model needs an even vertex count of at least 6",
        });
    }
    Ok(())
}

/// Closed-form area of the thin polygon.
pub fn thin_area(p: &ThinParams) -> f64 {
    let (a, b, g) = (p.alpha, p.beta, p.gamma);
    let head = a.sin() + (2.0 * b).sin() - (b + g).sin();
    if p.n == 6 {
        return head;
    }
    let t = (0.5 * b).tan();
    let bulk = (p.n as f64 / 2.0 - 3.0) * (b.sin() - t);
    let tail = ((b - g).cos() - (2.0 * b).cos() - 0.5) * t;
    head + bulk + tail
}

/// Fan-triangle areas `A_1 … A_{n/2−1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct TriangleAreas {
    pub values: Vec<f64>,
}

impl TriangleAreas {
    pub fn total(&self) -> f64 {
        2.0 * self.values.iter().sum::<f64>()
    }
}

pub fn triangle_areas(p: &ThinParams) -> TriangleAreas {
    let (a, b, g) = (p.alpha, p.beta, p.gamma);
    let m = p.n / 2;
    let mut values = Vec::with_capacity(m - 1);
    values.push(0.5 * a.sin());
    values.push(0.5 * ((2.0 * b).sin() - (b + g).sin()));
    let half_b = 0.5 * b;
    let lead = 2.0 * (0.5 * (b + g)).sin();
    for k in 3..m {
        let kf = k as f64;
        let sign = if k % 2 == 0 { -1.0 } else { 1.0 };
        let inner = lead * ((kf - 1.0) * b - 0.5 * g).sin()
            - ((kf - 2.0) * b).cos() / (2.0 * half_b.cos());
        let twice = b.sin() - half_b.tan() + 2.0 * sign * inner * half_b.sin();
        values.push(0.5 * twice);
    }
    TriangleAreas { values }
}

/// Area as a function of `α` alone.
pub fn f(n: usize, alpha: f64) -> Result<f64> {
    Ok(thin_area(&ThinParams::from_alpha(n, alpha)?))
}
