//! Lower and composite upper bounds on the reliability, as a table.
//!
//! cargo run --release --example reliability_figure -- 0.08

use bscrel::curve::rate_grid;
use bscrel::info::Channel;
use bscrel::optim::reliability_bounds;

fn main() -> bscrel::Result<()> {
    let p: f64 = std::env::args()
        .nth(1)
        .map(|a| a.parse().expect("crossover probability"))
        .unwrap_or(0.08);
    let ch = Channel::new(p)?;
    let grid = rate_grid(0.0, ch.capacity(), 0.01)?;
    let b = reliability_bounds(&ch, &grid)?;
    let r = &b.report;
    println!("R_x = {:.5}  R1 = {:.5}  R0 = {:.5}  R_crit = {:.5}", r.r_x, r.r1, r.r0, r.r_crit);
    println!(
        "line from ({:.5}, {:.5}) with slope {:.5} up to {:.5}",
        b.segment.anchor.0, b.segment.anchor.1, b.segment.slope, b.segment.tangent_rate
    );
    println!("{:>6} {:>9} {:>6} {:>9} {:>7}", "rate", "lower", "", "upper", "");
    for (lo, up) in b.lower.points().iter().zip(b.upper.points()) {
        println!(
            "{:>6.3} {:>9.5} {:>6} {:>9.5} {:>7}",
            lo.rate,
            lo.value,
            lo.branch.as_str(),
            up.value,
            up.branch.as_str()
        );
    }
    Ok(())
}
