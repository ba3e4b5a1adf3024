//! Runs one acceptance suite by name, `quotient` by default.

use corona_orbits::verify::{run_suite, suite_names};

fn main() -> corona_orbits::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "quotient".into());
    println!("suites: {}", suite_names().join(", "));
    println!("{}", run_suite(&name)?);
    Ok(())
}
