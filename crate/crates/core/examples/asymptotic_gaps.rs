//! Scaled gaps at growing `n` next to their limits.

use smallgon::asymptotics::{
    constants, gap_bound_ceiling, gap_bound_constant, penalty_constant, regular_gap_constant,
    regular_plus_gap_constant,
};
use smallgon::report::{
    gap_vs_bound, gap_vs_mossinghoff, perturbation_limit, perturbation_penalty, regular_gap,
    regular_plus_gap,
};

fn main() -> smallgon::Result<()> {
    let k = constants();
    println!("a = {:.16}  b = {:.16}  c = {:.16}", k.a, k.b, k.c);
    println!(
        "K1 = {:.16} (ceiling 3pi^3/40 = {:.6}), penalty constant {:.10}\n",
        gap_bound_constant(),
        gap_bound_ceiling(),
        penalty_constant()
    );

    println!("{:>5}  {:>12}  {:>12}  {:>12}  {:>12}", "n", "ub gap", "M_n gain", "R_n gap", "R+ gap");
    for n in [32, 64, 100, 102, 128, 256, 512, 1024] {
        // past n = 512 the n^5 scaling amplifies rounding in the area difference
        let gain = if n <= 512 { format!("{:.8}", gap_vs_mossinghoff(n)?) } else { "-".into() };
        println!(
            "{n:>5}  {:>12.8}  {gain:>12}  {:>12.8}  {:>12.8}",
            gap_vs_bound(n)?,
            regular_gap(n),
            regular_plus_gap(n)
        );
    }
    println!(
        "limit  {:>12.8}  {:>5.4}/{:.4}  {:>12.8}  {:>12.8}",
        gap_bound_constant(),
        k.d_mod0,
        k.d_mod2,
        regular_gap_constant(),
        regular_plus_gap_constant()
    );

    println!("\nmoving alpha off the optimum by u pi/n^2 at n = 200:");
    for du in [-1.0, -0.5, 0.0, 0.5, 1.0] {
        let u = k.b + du;
        println!(
            "  u = b{du:+.1}: scaled loss {:.6}, limit {:.6}",
            perturbation_penalty(200, u)?,
            perturbation_limit(u)
        );
    }
    Ok(())
}
