//! Asymptotic constants of the large-`n` expansions, evaluated from their
//! exact radical expressions.

use std::f64::consts::PI;
use std::sync::OnceLock;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticConstants {
    /// Leading coefficient of the maximizing `α`.
    pub a: f64,
    /// Second-order coefficient of the maximizing `α`.
    pub b: f64,
    /// Third-order coefficient (enters with a minus sign).
    pub c: f64,
    /// Mossinghoff's `t` for `n ≡ 2 (mod 4)`.
    pub t_mod2: f64,
    /// Mossinghoff's `t` for `n ≡ 0 (mod 4)`.
    pub t_mod0: f64,
    /// Scaled `B_n` over `M_n` gain for `n ≡ 2 (mod 4)`.
    pub d_mod2: f64,
    /// Scaled `B_n` over `M_n` gain for `n ≡ 0 (mod 4)`.
    pub d_mod0: f64,
}

fn parity_sign(n: usize) -> f64 {
    if (n / 2) % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

impl AsymptoticConstants {
    fn compute() -> Self {
        let r = 114f64.sqrt();
        let pi2 = PI * PI;
        let a = (2.0 * r - 7.0) / 22.0;
        let b = (3521.0 * r - 34010.0) / 9196.0;
        let c = (17328.0 * (663157.0 + 3161.0 * pi2) - (1088031703.0 - 3918085.0 * pi2) * r)
            / 507398496.0;
        let t_even = (103104.0 * r - 998743.0) / 200255.0;
        let t_odd = 15.0 * PI * (347.0 * r - 714.0) / 1762244.0;
        let d_even = 25.0 * pi2 * (1747646.0 - 22523.0 * r) / 4691093528.0
            + (32717202988.0 - 3004706459.0 * r) / 29464719680.0;
        let d_odd = 15.0 * PI * (10124777.0 - 919131.0 * r) / 852926096.0;
        AsymptoticConstants {
            a,
            b,
            c,
            t_mod2: t_even - t_odd,
            t_mod0: t_even + t_odd,
            d_mod2: d_even - d_odd,
            d_mod0: d_even + d_odd,
        }
    }

    pub fn t(&self, n: usize) -> f64 {
        if parity_sign(n) > 0.0 {
            self.t_mod0
        } else {
            self.t_mod2
        }
    }

    pub fn d(&self, n: usize) -> f64 {
        if parity_sign(n) > 0.0 {
            self.d_mod0
        } else {
            self.d_mod2
        }
    }
}

pub fn constants() -> &'static AsymptoticConstants {
    static CONSTANTS: OnceLock<AsymptoticConstants> = OnceLock::new();
    CONSTANTS.get_or_init(AsymptoticConstants::compute)
}

/// `K₁ = (5303 − 456√114)π³/5808`, the limit of `n³(Ā_n − A(B_n))`.
pub fn gap_bound_constant() -> f64 {
    (5303.0 - 456.0 * 114f64.sqrt()) * PI.powi(3) / 5808.0
}

/// `3π³/40`, the cruder bound on [`gap_bound_constant`].
pub fn gap_bound_ceiling() -> f64 {
    3.0 * PI.powi(3) / 40.0
}

/// `π³√114/8`, the limit of the scaled penalty per unit `(u − b)²`.
pub fn penalty_constant() -> f64 {
    PI.powi(3) * 114f64.sqrt() / 8.0
}

/// `π³/16`, the limit of `n²(Ā_n − A(R_n))`.
pub fn regular_gap_constant() -> f64 {
    PI.powi(3) / 16.0
}

/// `5π³/48`, the limit of `n³(Ā_n − A(R_{n−1}^+))`.
pub fn regular_plus_gap_constant() -> f64 {
    5.0 * PI.powi(3) / 48.0
}

/// `aπ/n + bπ/n² − cπ/n³`.
pub fn alpha_hat_series(n: usize) -> f64 {
    let k = constants();
    let nf = n as f64;
    k.a * PI / nf + k.b * PI / (nf * nf) - k.c * PI / (nf * nf * nf)
}

/// Mossinghoff's first angle `aπ/n + tπ/n²`.
pub fn mossinghoff_alpha(n: usize) -> f64 {
    let k = constants();
    let nf = n as f64;
    k.a * PI / nf + k.t(n) * PI / (nf * nf)
}
