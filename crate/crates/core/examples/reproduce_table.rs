//! Prints the area comparison table, then checks the ordering of the
//! families and how far each construction sits below the upper bound.
//!
//! `cargo run --example reproduce_table -- 48`

use smallgon::report::{table1, TABLE_HEADERS};

fn main() -> smallgon::Result<()> {
    let n_max = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(24);
    let rows = table1(n_max)?;
    println!("{}", TABLE_HEADERS.join("  "));
    for r in &rows {
        let cols: Vec<String> = r.columns().iter().map(|v| format!("{v:.10}")).collect();
        println!("{:>3}  {}", r.n, cols.join("  "));
    }

    println!("\nn    ub - A(B_n)   ub - A(M_n')  n^3 (ub - A(B_n))");
    for r in &rows {
        println!(
            "{:>3}  {:.4e}    {:.4e}    {:.6}",
            r.n,
            r.upper_bound - r.area_bn,
            r.upper_bound - r.area_mossinghoff_prime,
            r.scaled_gap_ub
        );
    }
    Ok(())
}
