//! Which Borel orbits meet the isotropic locus of a symplectic or symmetric
//! form, compared with the combinatorial prediction.

use corona_orbits::exactla::PrimeField;
use corona_orbits::orbitoracle::{fixed_point_census, FormKind, DEFAULT_BUDGET};

fn main() -> corona_orbits::Result<()> {
    let f = PrimeField::new(3)?;
    for (kind, m, n) in [(FormKind::Symplectic, 1, 1), (FormKind::Symmetric, 1, 0), (FormKind::Symmetric, 1, 1)] {
        let r = fixed_point_census(m, n, f, kind, DEFAULT_BUDGET)?;
        println!(
            "{kind:?} {:?}: {} of {} orbits carry points (expected {}), agrees: {}",
            r.dims,
            r.with_points(),
            r.rows.len(),
            r.expected_with_points(),
            r.agrees()
        );
        for row in r.rows.iter().filter(|row| row.has_point) {
            println!("  orbit {} size {}: {}", row.orbit_id, row.size, row.tag);
        }
    }
    Ok(())
}
