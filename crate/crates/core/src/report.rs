//! Area table across families and the scaled asymptotic gaps.

use crate::asymptotics::{constants, penalty_constant};
use crate::constructions::{
    area_regular, area_regular_plus, construct_bn, construct_mn, construct_mn_prime, upper_bound,
};
use crate::error::{Error, Result};
use crate::thin_model;
use std::f64::consts::PI;

/// One row of the comparison table plus the scaled gaps for that `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GapReport {
    pub n: usize,
    pub alpha_hat: f64,
    pub area_regular: f64,
    pub area_regular_plus: f64,
    pub area_mossinghoff: f64,
    /// Equal to `area_mossinghoff` at `n = 6`.
    pub area_mossinghoff_prime: f64,
    pub area_bn: f64,
    pub upper_bound: f64,
    /// `n³(Ā_n − A(B_n))`.
    pub scaled_gap_ub: f64,
    /// `n⁵(A(B_n) − A(M_n))/(3π³)`.
    pub scaled_gap_mn: f64,
}

impl GapReport {
    pub fn compute(n: usize) -> Result<Self> {
        let bn = construct_bn(n)?;
        let mn = construct_mn(n)?;
        let mn_prime = if n == 6 { mn.area } else { construct_mn_prime(n)?.area };
        let ub = upper_bound(n);
        let nf = n as f64;
        Ok(GapReport {
            n,
            alpha_hat: bn.alpha_star.expect("B_n records its maximizer"),
            area_regular: area_regular(n),
            area_regular_plus: area_regular_plus(n),
            area_mossinghoff: mn.area,
            area_mossinghoff_prime: mn_prime,
            area_bn: bn.area,
            upper_bound: ub,
            scaled_gap_ub: nf.powi(3) * (ub - bn.area),
            scaled_gap_mn: nf.powi(5) * (bn.area - mn.area) / (3.0 * PI.powi(3)),
        })
    }

    /// The seven table columns in print order.
    pub fn columns(&self) -> [f64; 7] {
        [
            self.alpha_hat,
            self.area_regular,
            self.area_regular_plus,
            self.area_mossinghoff,
            self.area_mossinghoff_prime,
            self.area_bn,
            self.upper_bound,
        ]
    }
}

/// Column headers matching [`GapReport::columns`].
pub const TABLE_HEADERS: [&str; 8] = [
    "n",
    "alpha_hat",
    "A(R_n)",
    "A(R_{n-1}^+)",
    "A(M_n)",
    "A(M_n')",
    "A(B_n)",
    "ub(A_n)",
];

/// Rows for `n = 6, 8, …, n_max`.
pub fn table1(n_max: usize) -> Result<Vec<GapReport>> {
    if n_max < 6 {
        return Err(Error::InvalidVertexCount {
            n: n_max,
            reason: "the table starts at n = 6",
        });
    }
    (6..=n_max).step_by(2).map(GapReport::compute).collect()
}

/// `n³(Ā_n − A(B_n))`, tending to `(5303 − 456√114)π³/5808`.
pub fn gap_vs_bound(n: usize) -> Result<f64> {
    let nf = n as f64;
    Ok(nf.powi(3) * (upper_bound(n) - construct_bn(n)?.area))
}

/// `n⁵(A(B_n) − A(M_n))/(3π³)`, tending to `d` for the residue of `n` mod 4.
pub fn gap_vs_mossinghoff(n: usize) -> Result<f64> {
    let nf = n as f64;
    let gain = construct_bn(n)?.area - construct_mn(n)?.area;
    Ok(nf.powi(5) * gain / (3.0 * PI.powi(3)))
}

/// `n⁵(A(B_n) − f(aπ/n + uπ/n²))`, tending to `(u − b)²π³√114/8`.
pub fn perturbation_penalty(n: usize, u: f64) -> Result<f64> {
    let nf = n as f64;
    let alpha = constants().a * PI / nf + u * PI / (nf * nf);
    let probe = thin_model::f(n, alpha)?;
    Ok(nf.powi(5) * (construct_bn(n)?.area - probe))
}

/// Limit of [`perturbation_penalty`] for a given `u`.
pub fn perturbation_limit(u: f64) -> f64 {
    let du = u - constants().b;
    du * du * penalty_constant()
}

/// `n²(Ā_n − A(R_n))`, tending to `π³/16`.
pub fn regular_gap(n: usize) -> f64 {
    let nf = n as f64;
    nf * nf * (upper_bound(n) - area_regular(n))
}

/// `n³(Ā_n − A(R_{n−1}^+))`, tending to `5π³/48`.
pub fn regular_plus_gap(n: usize) -> f64 {
    let nf = n as f64;
    nf.powi(3) * (upper_bound(n) - area_regular_plus(n))
}
