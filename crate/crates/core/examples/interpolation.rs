//! Exact interpolation of b_{m,n} as a polynomial in m.

use corona_orbits::seqlab::interpolate_b;

fn main() -> corona_orbits::Result<()> {
    for n in 0..=2 {
        let r = interpolate_b(n, 2)?;
        println!("n = {n}: b = {}", r.poly);
        println!("  leading {}, integral {}, {} predictions checked", r.leading(), r.integral(), r.predictions.len());
    }
    Ok(())
}
