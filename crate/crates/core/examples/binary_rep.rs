//! Orbit representatives g·(E_m, E_m^c) for every matching, checked by
//! classifying them back.

use corona_orbits::exactla::PrimeField;
use corona_orbits::matchgraph::{enumerate_matchings, GraphSpec};
use corona_orbits::quiverrep::{binary_matrix, binary_representative, Classifier};
use corona_orbits::VarietyPoint;

fn main() -> corona_orbits::Result<()> {
    let f = PrimeField::new(2)?;
    let (m, n) = (2, 2);
    let classifier = Classifier::shared(m, n, f)?;
    for s in enumerate_matchings(GraphSpec::plain(m + n), m) {
        let g = binary_representative(&s, m, n, f)?;
        let (_, slots) = binary_matrix(&s, f)?;
        let pt = VarietyPoint::from_group_element(&g, &slots)?;
        let back = classifier.classify_point(&pt)?;
        println!("{s}: {:?} -> {}", g.to_i64_rows(), if back == s { "ok" } else { "MISMATCH" });
    }
    Ok(())
}
