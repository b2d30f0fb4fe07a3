//! Seeded simulation of ML decoding next to the exact error probability.
//!
//! cargo run --release --example monte_carlo -- 200000

use bscrel::info::Channel;
use bscrel::lab::{exact_error_probability, monte_carlo_error, random_linear_code, TiePolicy};

fn main() -> bscrel::Result<()> {
    let trials: u64 = std::env::args().nth(1).map_or(100_000, |a| a.parse().expect("trial count"));
    let code = random_linear_code(12, 5, 2024)?;
    for p in [0.05, 0.1, 0.2] {
        let ch = Channel::new(p)?;
        for tie in [TiePolicy::FavorTransmitted, TiePolicy::Adversarial] {
            let exact = exact_error_probability(&code, &ch, tie)?.average;
            let mc = monte_carlo_error(&code, &ch, trials, 1, tie)?;
            println!(
                "p = {p:<4} {:<17} exact {exact:.5}  simulated {:.5} +- {:.5}",
                tie.as_str(),
                mc.estimate,
                mc.std_error
            );
        }
    }
    Ok(())
}
