//! Mossinghoff's polygons: the fixed head angles, the two re-solved tail
//! angles, and how much `B_n` gains over both variants.

use smallgon::constructions::{
    construct_bn, construct_mn, construct_mn_prime, mossinghoff_head, mossinghoff_parameters,
    solve_tail,
};

fn main() -> smallgon::Result<()> {
    for n in [6, 8, 10, 16, 32] {
        let (alpha, beta, gamma) = mossinghoff_parameters(n);
        let head = mossinghoff_head(n);
        let (angles, iterations) = solve_tail(n, &head, Some((beta, beta)))?;
        let tail = &angles[n / 2 - 2..];
        println!("n = {n}: alpha {alpha:.8} beta {beta:.8} gamma {gamma:.8}");
        println!("  tail angles {:.10} {:.10} after {iterations} Newton steps", tail[0], tail[1]);

        let mn = construct_mn(n)?.area;
        let bn = construct_bn(n)?.area;
        match construct_mn_prime(n) {
            Ok(prime) => println!(
                "  A(M_n) {mn:.10}  A(M_n') {:.10}  A(B_n) {bn:.10}  gain {:.3e}",
                prime.area,
                bn - mn
            ),
            Err(_) => println!("  A(M_n) {mn:.10}  A(B_n) {bn:.10}  gain {:.3e}", bn - mn),
        }
    }
    Ok(())
}
