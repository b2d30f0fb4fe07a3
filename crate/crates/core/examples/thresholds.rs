//! Rate thresholds of the BSC for a few crossover probabilities.
//!
//! cargo run --release --example thresholds -- 0.046 0.08 0.1

use bscrel::info::Channel;
use bscrel::optim::{IntersectionProfile, ThresholdReport};

fn main() -> bscrel::Result<()> {
    let ps: Vec<f64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("crossover probability"))
        .collect();
    let ps = if ps.is_empty() { vec![0.046, 0.08, 0.1] } else { ps };
    println!("{:>7} {:>9} {:>9} {:>9} {:>9}  exact region", "p", "R_x", "R1", "R0", "R_crit");
    for p in ps {
        let ch = Channel::new(p)?;
        let report = ThresholdReport::new(&ch, &IntersectionProfile::new(&ch))?;
        let region = match report.exact_region {
            Some((a, b)) => format!("[{a:.5}, {b:.5}]"),
            None => "-".to_string(),
        };
        println!(
            "{:>7} {:>9.5} {:>9.5} {:>9.5} {:>9.5}  {}",
            p, report.r_x, report.r1, report.r0, report.r_crit, region
        );
    }
    Ok(())
}
