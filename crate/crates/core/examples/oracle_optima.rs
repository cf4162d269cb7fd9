//! Searches all symmetric polygons with the same diameter graph and
//! compares the best area found with `B_n` and the known optima.

use std::time::Instant;

use smallgon::constructions::construct_bn;
use smallgon::oracle::{solve_optimal, KnownOptima};

fn main() -> smallgon::Result<()> {
    for n in [6, 8, 10, 12, 14] {
        let start = Instant::now();
        let best = solve_optimal(n)?;
        let bn = construct_bn(n)?.area;
        let known = KnownOptima::get(n)
            .map(|a| format!("{a:.6}"))
            .unwrap_or_else(|| "unknown".into());
        println!(
            "n = {n:>2}: search {:.10}  B_n {bn:.10}  known {known}  difference {:+.2e}  ({:.2?})",
            best.area,
            best.area - bn,
            start.elapsed()
        );
    }
    Ok(())
}
