//! Finite-length slice probabilities approaching A(omega) and B(omega, lambda).
//!
//! cargo run --release --example slice_exponents

use bscrel::info::Channel;
use bscrel::lab::slice_probabilities_from_distances;
use bscrel::optim::burnashev_b;

fn main() -> bscrel::Result<()> {
    let ch = Channel::new(0.08)?;
    let (omega, lambda) = (0.35, 0.2);
    let b = burnashev_b(omega, lambda, &ch)?;
    println!("A(omega) = {:.5}, B(omega, lambda) = {b:.5}", omega * ch.bhattacharyya());
    println!("{:>5} {:>5} {:>9} {:>9} {:>11}", "n", "t", "slice", "cond", "condition7");
    for n in [40, 100, 200, 400, 800] {
        let w = 2 * ((omega * n as f64 / 2.0).round() as usize);
        let l = 2 * ((lambda * n as f64 / 2.0).round() as usize);
        let s = slice_probabilities_from_distances(n, w, l, &ch)?;
        println!(
            "{n:>5} {:>5} {:>9.5} {:>9.5} {:>11.3e}",
            s.t,
            s.log2_p_slice / n as f64,
            s.log2_p_cond / n as f64,
            s.condition7(1)
        );
    }
    Ok(())
}
