//! Random coding, sphere packing and union exponents on a coarse rate grid.
//!
//! cargo run --release --example random_coding_exponent -- 0.08

use bscrel::info::{random_coding_exponent, sphere_packing_exponent, union_exponent, Channel};

fn main() -> bscrel::Result<()> {
    let p: f64 = std::env::args().nth(1).map_or(0.08, |a| a.parse().expect("crossover probability"));
    let ch = Channel::new(p)?;
    let k = ch.constants();
    println!("p = {p}: rho0 = {:.5}, omega0 = {:.5}, R_x = {:.5}, R_crit = {:.5}, C = {:.5}",
        k.rho0, k.omega0, k.r_x, k.r_crit, ch.capacity());
    println!("{:>6} {:>9} {:>6} {:>9} {:>9} {:>9}", "R", "E0", "branch", "omega_typ", "sphere", "union");
    let steps = 12;
    for i in 0..=steps {
        let r = ch.capacity() * i as f64 / steps as f64;
        let e = random_coding_exponent(r, &ch)?;
        println!(
            "{:>6.3} {:>9.5} {:>6?} {:>9.5} {:>9.5} {:>9.5}",
            r, e.value, e.branch, e.omega_typ, sphere_packing_exponent(r, &ch)?, union_exponent(r, &ch)?
        );
    }
    Ok(())
}
