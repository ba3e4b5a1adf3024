//! Symplectic representatives for negation-invariant matchings over F_3,
//! with the isometry check.

use corona_orbits::exactla::PrimeField;
use corona_orbits::matchgraph::{minus_invariant_matchings, GraphSpec};
use corona_orbits::quiverrep::{apply_phi, symplectic_representative, symplectic_template};

fn main() -> corona_orbits::Result<()> {
    let f = PrimeField::new(3)?;
    let spec = GraphSpec::signed_for(4);
    for s in minus_invariant_matchings(spec, 2)? {
        let t = symplectic_template(&s)?;
        let g = symplectic_representative(&s, f)?;
        println!("{s}");
        println!("  template {}x{}, matrix {:?}", t.nrows(), t.ncols(), g.to_i64_rows());
        println!("  fixed by phi: {}", apply_phi(&g)? == g);
    }
    Ok(())
}
