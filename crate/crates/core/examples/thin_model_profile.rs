//! Tabulates the one-parameter area `f(alpha)` across its search interval
//! together with the derived `beta`, `gamma` and triangle areas.

use smallgon::numerics::{maximize_scalar, DEFAULT_XTOL};
use smallgon::thin_model::{f, search_interval, triangle_areas, ThinParams};

fn main() -> smallgon::Result<()> {
    let n = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(8);
    let (lo, hi) = search_interval(n);
    println!("n = {n}, alpha in [{lo:.8}, {hi:.8}]");
    println!("{:>12}  {:>12}  {:>12}  {:>14}", "alpha", "beta", "gamma", "f(alpha)");
    for i in 0..=16 {
        let alpha = lo + (hi - lo) * i as f64 / 16.0;
        match ThinParams::from_alpha(n, alpha) {
            Ok(p) => println!("{alpha:>12.8}  {:>12.8}  {:>12.8}  {:>14.10}", p.beta, p.gamma, f(n, alpha)?),
            Err(e) => println!("{alpha:>12.8}  {e}"),
        }
    }

    let best = maximize_scalar(|a| f(n, a).unwrap_or(f64::NEG_INFINITY), lo, hi, DEFAULT_XTOL)?;
    println!("\nmaximum f = {:.12} at alpha = {:.12}", best.f_star, best.x_star);
    let tri = triangle_areas(&ThinParams::from_alpha(n, best.x_star)?);
    for (k, a) in tri.values.iter().enumerate() {
        println!("  triangle {k}: {a:.10}");
    }
    println!("  twice the sum: {:.12}", tri.total());
    Ok(())
}
