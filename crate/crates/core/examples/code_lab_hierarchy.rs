//! Exact ML error probability of a small code and the bounds around it.
//!
//! cargo run --release --example code_lab_hierarchy -- 0.1

use bscrel::info::Channel;
use bscrel::lab::{analyze_code, random_linear_code, save_report, TiePolicy};

fn main() -> bscrel::Result<()> {
    let p: f64 = std::env::args().nth(1).map_or(0.1, |a| a.parse().expect("crossover probability"));
    let ch = Channel::new(p)?;
    let code = random_linear_code(12, 4, 7)?;
    let report = analyze_code(&code, &ch, TiePolicy::Adversarial)?;
    println!("n = {}, M = {}, d = {:?}, p = {p}", code.n(), code.len(), code.min_distance());
    println!("{:>3} {:>11} {:>11} {:>11} {:>11}", "i", "Cohen-Mer.", "Kounias", "exact", "union");
    for c in report.per_codeword.iter().take(4) {
        println!("{:>3} {:>11.4e} {:>11.4e} {:>11.4e} {:>11.4e}", c.i, c.cohen_merhav, c.kounias, c.exact, c.union);
    }
    println!("average exact {:.6e}", report.average_exact);
    let text = save_report(&report)?;
    println!("JSON report: {} bytes", text.len());
    Ok(())
}
