//! Guaranteed distance-distribution exponent from the Hahn polynomial bound.
//!
//! cargo run --release --example litsyn_spectrum -- 0.5

use bscrel::spectrum::{jpl_delta, mu_best_over_alpha, SpectrumModel};

fn main() -> bscrel::Result<()> {
    let r: f64 = std::env::args().nth(1).map_or(0.5, |a| a.parse().expect("rate"));
    let omegas: Vec<f64> = (1..=25).map(|i| 0.02 * i as f64).collect();
    let best = mu_best_over_alpha(r, &omegas)?;
    let random = SpectrumModel::random_linear(r)?;
    println!("R = {r}, JPL distance {:.5}", jpl_delta(r)?.delta_bar);
    println!("{:>6} {:>10} {:>10}", "omega", "mu*", "R-1+h");
    for &w in &omegas {
        let mu = best.beta(w);
        let shown = if mu.is_finite() { format!("{mu:>10.5}") } else { format!("{:>10}", "-") };
        println!("{w:>6.2} {shown} {:>10.5}", random.beta(w));
    }
    Ok(())
}
