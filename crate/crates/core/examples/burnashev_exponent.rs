//! Conditional slice exponent B(omega, lambda) against the pairwise exponent.
//!
//! cargo run --release --example burnashev_exponent -- 0.08

use bscrel::info::Channel;
use bscrel::optim::{burnashev_b, burnashev_b_with, EtaSearch};

fn main() -> bscrel::Result<()> {
    let p: f64 = std::env::args().nth(1).map_or(0.08, |a| a.parse().expect("crossover probability"));
    let ch = Channel::new(p)?;
    let omega = 0.35;
    println!("p = {p}, omega = {omega}");
    println!("{:>7} {:>10} {:>10} {:>10}", "lambda", "B", "B dense", "B - A(l)");
    for i in 0..=6 {
        let lambda = 0.05 * i as f64;
        let b = burnashev_b(omega, lambda, &ch)?;
        let dense = burnashev_b_with(omega, lambda, &ch, &EtaSearch::dense())?;
        println!("{lambda:>7.2} {b:>10.6} {dense:>10.6} {:>10.6}", b - lambda * ch.bhattacharyya());
    }
    match burnashev_b(0.96, 0.1, &Channel::new(0.45)?) {
        Err(e) => println!("outside the eta range: {e}"),
        Ok(v) => println!("unexpected value {v}"),
    }
    Ok(())
}
