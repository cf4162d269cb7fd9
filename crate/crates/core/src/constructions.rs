//! The polygon families compared against each other: the regular polygon,
//! the regular polygon with one extra vertex, Mossinghoff's polygons and the
//! one-variable optimum `B_n`.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;

use crate::asymptotics::{constants, mossinghoff_alpha};
use crate::error::{Error, Result};
use crate::geometry::{self, closure_residual, AngleSequence, Point, Polygon};
use crate::numerics::{self, central_derivative, maximize_scalar, newton_solve};
use crate::thin_model::{self, search_interval, ThinParams};

/// Residual bound of the Mossinghoff tail solve.
pub const TAIL_TOL: f64 = 1e-14;
/// Iteration cap of the Mossinghoff tail solve.
pub const TAIL_MAX_ITER: usize = 50;
/// Bound on `|f'(α̂)|` accepted for `B_n`.
pub const DERIVATIVE_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Regular,
    RegularPlus,
    Mossinghoff,
    MossinghoffPrime,
    Bn,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Regular,
        Family::RegularPlus,
        Family::Mossinghoff,
        Family::MossinghoffPrime,
        Family::Bn,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Regular => "regular",
            Family::RegularPlus => "regular-plus",
            Family::Mossinghoff => "mossinghoff",
            Family::MossinghoffPrime => "mossinghoff-prime",
            Family::Bn => "bn",
        }
    }

    /// Smallest even vertex count the family is built for.
    pub fn min_n(self) -> usize {
        match self {
            Family::Regular => 4,
            Family::MossinghoffPrime => 8,
            _ => 6,
        }
    }

    /// Whether the family has the `(n−1)`-cycle plus pendant diameter graph.
    pub fn has_optimal_diameter_graph(self) -> bool {
        self != Family::Regular
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown family `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Diagnostics {
    /// Angle sum minus `π/2`.
    pub angle_sum_residual: f64,
    /// `x_{n/2−1} − (−1)^{n/2}/2`.
    pub closure_residual: f64,
    /// Central-difference `f'(α̂)` (`B_n` only).
    pub derivative: Option<f64>,
    pub iterations: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConstructionResult {
    pub family: Family,
    pub n: usize,
    pub polygon: Option<Polygon>,
    pub area: f64,
    /// Thin-model parameters, for families that live in the thin model.
    pub params: Option<ThinParams>,
    pub alpha_star: Option<f64>,
    pub diagnostics: Diagnostics,
}

fn require_even(n: usize, min: usize, reason: &'static str) -> Result<()> {
    if n < min || n % 2 != 0 {
        return Err(Error::InvalidVertexCount { n, reason });
    }
    Ok(())
}

fn sequence_diagnostics(seq: &AngleSequence) -> Diagnostics {
    Diagnostics {
        angle_sum_residual: seq.angles().iter().sum::<f64>() - FRAC_PI_2,
        closure_residual: closure_residual(seq.angles()),
        derivative: None,
        iterations: 0,
    }
}

/// Area of the regular small `n`-gon.
pub fn area_regular(n: usize) -> f64 {
    assert!(n >= 3, "a polygon needs at least 3 vertices");
    let nf = n as f64;
    if n % 2 == 1 {
        0.5 * nf * (PI / nf).sin() - 0.5 * nf * (PI / (2.0 * nf)).tan()
    } else {
        nf / 8.0 * (2.0 * PI / nf).sin()
    }
}

/// Area of the regular `(n−1)`-gon with a vertex added on an angle bisector.
pub fn area_regular_plus(n: usize) -> f64 {
    let nf = n as f64;
    area_regular(n - 1) + (PI / (2.0 * nf - 2.0)).sin() - 0.5 * (PI / (nf - 1.0)).sin()
}

/// Upper bound `Ā_n` on the area of a small `n`-gon for even `n ≥ 6`.
pub fn upper_bound(n: usize) -> f64 {
    let nf = n as f64;
    0.5 * nf * (PI / nf).sin() - 0.5 * (nf - 1.0) * (PI / (2.0 * nf - 2.0)).tan()
}

/// The regular small `n`-gon for even `n ≥ 4`, inscribed in the circle of
/// diameter 1 centred at `(0, 1/2)`.
///
/// Right-hand vertices are labeled `v_1, v_3, …, v_{n−3}` from top to bottom
/// and mirrored to the left, matching the labeling of the thin polygons.
pub fn construct_regular(n: usize) -> Result<ConstructionResult> {
    require_even(n, 4, "regular polygons are built for even n >= 4")?;
    let mut vertices = vec![Point::new(0.0, 0.0); n];
    vertices[n - 1] = Point::new(0.0, 1.0);
    for i in 1..n / 2 {
        // i-th vertex on the right, counted from the top
        let theta = PI - 2.0 * PI * i as f64 / n as f64;
        let p = Point::new(0.5 * theta.sin(), 0.5 - 0.5 * theta.cos());
        let k = 2 * i - 1;
        vertices[k] = p;
        vertices[n - k - 1] = Point::new(-p.x, p.y);
    }
    Ok(ConstructionResult {
        family: Family::Regular,
        n,
        polygon: Some(Polygon::new(vertices)),
        area: area_regular(n),
        params: None,
        alpha_star: None,
        diagnostics: Diagnostics::default(),
    })
}

/// `R_{n−1}^+`: the thin polygon with `α = π/(2n−2)`, `β = π/(n−1)`, `γ = 0`.
pub fn construct_regular_plus(n: usize) -> Result<ConstructionResult> {
    require_even(n, 6, "regular-plus polygons are built for even n >= 6")?;
    let nf = n as f64;
    let alpha = PI / (2.0 * nf - 2.0);
    let beta = PI / (nf - 1.0);
    let mut angles = vec![beta; n / 2];
    angles[0] = alpha;
    let seq = AngleSequence::new(n, angles)?;
    Ok(ConstructionResult {
        family: Family::RegularPlus,
        n,
        polygon: Some(geometry::vertices_from_angles(&seq)),
        area: area_regular_plus(n),
        params: Some(ThinParams {
            n,
            alpha,
            beta,
            gamma: 0.0,
        }),
        alpha_star: None,
        diagnostics: sequence_diagnostics(&seq),
    })
}

fn thin_result(family: Family, params: ThinParams) -> Result<ConstructionResult> {
    let seq = params.angles()?;
    Ok(ConstructionResult {
        family,
        n: params.n,
        polygon: Some(geometry::vertices_from_angles(&seq)),
        area: thin_model::thin_area(&params),
        params: Some(params),
        alpha_star: None,
        diagnostics: sequence_diagnostics(&seq),
    })
}

/// `B_n`: the thin polygon whose `α` maximizes the one-variable area.
pub fn construct_bn(n: usize) -> Result<ConstructionResult> {
    require_even(n, 6, "B_n is built for even n >= 6")?;
    let (lo, hi) = search_interval(n);
    let area = |alpha: f64| thin_model::f(n, alpha).unwrap_or(f64::NEG_INFINITY);
    let opt = maximize_scalar(area, lo, hi, numerics::DEFAULT_XTOL)
        .map_err(|e| Error::MaximizerFailed(e.to_string()).at_stage("maximizing the area over alpha"))?;
    let derivative = central_derivative(area, opt.x_star, 1e-3 * (hi - lo));
    if !(derivative.abs() <= DERIVATIVE_TOL) {
        return Err(Error::MaximizerFailed(format!(
            "|f'(alpha)| = {derivative:e} at alpha = {}",
            opt.x_star
        ))
        .at_stage("checking stationarity of the maximizer"));
    }
    let params = ThinParams::from_alpha(n, opt.x_star)?;
    let mut result = thin_result(Family::Bn, params)?;
    result.alpha_star = Some(opt.x_star);
    result.diagnostics.derivative = Some(derivative);
    result.diagnostics.iterations = opt.iterations;
    Ok(result)
}

/// `M_n'`: the thin polygon at Mossinghoff's `α`.
pub fn construct_mn_prime(n: usize) -> Result<ConstructionResult> {
    require_even(n, 8, "M_n' is defined for even n >= 8")?;
    let params = ThinParams::from_alpha(n, mossinghoff_alpha(n))?;
    thin_result(Family::MossinghoffPrime, params)
}

/// Mossinghoff's `(α, β, γ)`, all set from their large-`n` expansions.
pub fn mossinghoff_parameters(n: usize) -> (f64, f64, f64) {
    let k = constants();
    let nf = n as f64;
    let beta = PI / nf + 2.0 * (1.0 - k.a) * PI / (nf * nf);
    let gamma = (2.0 * k.a - 1.0) * PI / (4.0 * nf) + (k.a + k.t(n) - 1.0) * PI / (2.0 * nf * nf);
    (mossinghoff_alpha(n), beta, gamma)
}

/// Mossinghoff's fixed leading angles: `α`, `β+γ`, `β−γ`, then `β` up to
/// index `n/2 − 3`; truncated to the `n/2 − 2` angles that precede the tail.
pub fn mossinghoff_head(n: usize) -> Vec<f64> {
    let (alpha, beta, gamma) = mossinghoff_parameters(n);
    let mut head = vec![alpha, beta + gamma, beta - gamma];
    head.resize(n / 2 - 2, beta);
    head.truncate(n / 2 - 2);
    head
}

/// Solves the two tail angles so that the angles sum to `π/2` and the middle
/// edge closes horizontally. The guess is split evenly unless given.
pub fn solve_tail(n: usize, head: &[f64], guess: Option<(f64, f64)>) -> Result<(Vec<f64>, usize)> {
    let m = n / 2;
    debug_assert_eq!(head.len(), m - 2);
    let rest = FRAC_PI_2 - head.iter().sum::<f64>();
    let (g0, g1) = guess.unwrap_or((0.5 * rest, 0.5 * rest));
    let mut angles = head.to_vec();
    angles.extend([0.0, 0.0]);
    let system = |tail: &[f64]| {
        let mut full = angles.clone();
        full[m - 2] = tail[0];
        full[m - 1] = tail[1];
        let sum: f64 = full.iter().sum();
        vec![sum - FRAC_PI_2, closure_residual(&full)]
    };
    let sol = newton_solve(system, &[g0, g1], TAIL_TOL, TAIL_MAX_ITER)?;
    angles[m - 2] = sol.x[0];
    angles[m - 1] = sol.x[1];
    Ok((angles, sol.iterations))
}

/// `M_n`: Mossinghoff's head angles with the last two angles re-solved.
///
/// At `n = 6` only `α` is fixed; both remaining angles are solved, which
/// puts `M_6` back in the thin model.
pub fn construct_mn(n: usize) -> Result<ConstructionResult> {
    require_even(n, 6, "M_n is built for even n >= 6")?;
    let head = mossinghoff_head(n);
    let (_, beta, _) = mossinghoff_parameters(n);
    let guess = (n > 6).then_some((beta, beta));
    let (angles, iterations) = solve_tail(n, &head, guess).map_err(|e| e.at_stage("solving Mossinghoff's tail angles"))?;
    let seq = AngleSequence::new(n, angles)?;
    let polygon = geometry::vertices_from_angles(&seq);
    let area = geometry::shoelace_area(&polygon)?;
    let mut diagnostics = sequence_diagnostics(&seq);
    diagnostics.iterations = iterations;
    Ok(ConstructionResult {
        family: Family::Mossinghoff,
        n,
        polygon: Some(polygon),
        area,
        params: None,
        alpha_star: None,
        diagnostics,
    })
}

pub fn construct(family: Family, n: usize) -> Result<ConstructionResult> {
    match family {
        Family::Regular => construct_regular(n),
        Family::RegularPlus => construct_regular_plus(n),
        Family::Mossinghoff => construct_mn(n),
        Family::MossinghoffPrime => construct_mn_prime(n),
        Family::Bn => construct_bn(n),
    }
}
