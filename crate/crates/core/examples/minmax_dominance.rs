//! Min-max union/intersection exponent for the random linear spectrum.
//!
//! cargo run --release --example minmax_dominance -- 0.08

use bscrel::info::{random_coding_exponent, Channel};
use bscrel::optim::{find_r0_with, thm1_exponent_with, IntersectionProfile};
use bscrel::spectrum::SpectrumModel;

fn main() -> bscrel::Result<()> {
    let p: f64 = std::env::args().nth(1).map_or(0.08, |a| a.parse().expect("crossover probability"));
    let ch = Channel::new(p)?;
    let profile = IntersectionProfile::new(&ch);
    println!("{:>5} {:>9} {:>9} {:>9}  dominant", "R", "E", "E0", "omega*");
    for i in 1..=10 {
        let r = 0.03 * i as f64;
        if r >= ch.capacity() {
            break;
        }
        let pt = thm1_exponent_with(&profile, &SpectrumModel::random_linear(r)?)?;
        println!(
            "{r:>5.2} {:>9.5} {:>9.5} {:>9.5}  {}",
            pt.exponent,
            random_coding_exponent(r, &ch)?.value,
            pt.omega_star,
            pt.dominant.as_str()
        );
    }
    println!("dominance switch for the JPL spectrum: R0 = {:.5}", find_r0_with(&profile)?);
    Ok(())
}
