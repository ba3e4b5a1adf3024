//! Brute-force Borel orbit census against the matching count.
//!
//! Usage: `cargo run --release --example orbit_census -- [m n q]`.

use corona_orbits::exactla::PrimeField;
use corona_orbits::orbitoracle::{build_orbit_table, census_of, orbit_csv, orbit_rows, TagCheck, DEFAULT_BUDGET};

fn main() -> corona_orbits::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (m, n, q) = match args[..] {
        [m, n, q] => (m, n, q as u32),
        _ => (2, 1, 3),
    };
    let table = build_orbit_table(m, n, PrimeField::new(q)?, DEFAULT_BUDGET, TagCheck::default())?;
    let report = census_of(&table);
    println!(
        "(m, n, q) = ({m}, {n}, {q}): {} points, {} orbits, {} matchings",
        report.total_points, report.orbit_count, report.expected_count
    );
    print!("{}", orbit_csv(&orbit_rows(&table, None, None))?);
    Ok(())
}
