//! JPL distance bound next to the GV and Elias distances.
//!
//! cargo run --release --example jpl_bound

use bscrel::info::{elias_distance, gv_distance};
use bscrel::spectrum::{jpl_delta, jpl_rate, phi};

fn main() -> bscrel::Result<()> {
    println!("{:>5} {:>8} {:>8} {:>8} {:>8} {:>8}", "R", "GV", "JPL", "alpha*", "tau*", "Elias");
    for i in 1..10 {
        let r = i as f64 / 10.0;
        let pt = jpl_delta(r)?;
        println!(
            "{:>5.2} {:>8.5} {:>8.5} {:>8.5} {:>8.5} {:>8.5}",
            r, gv_distance(r)?, pt.delta_bar, pt.alpha_star, pt.tau_star, elias_distance(r)?
        );
    }
    let d = 0.3;
    let r = jpl_rate(d)?;
    println!("JPL rate at delta = {d}: {r:.6}, back to delta {:.6}", jpl_delta(r)?.delta_bar);
    println!("phi(0.05) = {:.6}", phi(0.05));
    Ok(())
}
