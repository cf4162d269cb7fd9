//! Builds `B_n` for a few `n` and prints its parameters and vertices.
//!
//! `cargo run --example construct_bn -- 10`

use smallgon::constructions::construct_bn;
use smallgon::geometry::{PolygonChecks, VERIFY_TOL};

fn main() -> smallgon::Result<()> {
    let sizes: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let sizes = if sizes.is_empty() { vec![6, 8, 10] } else { sizes };
    for n in sizes {
        let bn = construct_bn(n)?;
        let p = bn.params.expect("B_n is a thin polygon");
        println!("B_{n}: area {:.10}", bn.area);
        println!("  alpha {:.10}  beta {:.10}  gamma {:.10}", p.alpha, p.beta, p.gamma);
        println!(
            "  {} iterations, slope at the maximum {:.1e}",
            bn.diagnostics.iterations,
            bn.diagnostics.derivative.unwrap_or(f64::NAN)
        );
        let poly = bn.polygon.as_ref().unwrap();
        for (k, v) in poly.vertices().iter().enumerate() {
            println!("  v{k:<3} ({:+.6}, {:+.6})", v.x, v.y);
        }
        println!("  {:?}", PolygonChecks::run(poly, VERIFY_TOL));
    }
    Ok(())
}
