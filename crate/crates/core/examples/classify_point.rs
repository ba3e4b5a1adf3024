//! Classifies a pair of complementary subspaces by its matching.

use corona_orbits::exactla::{PrimeField, Subspace};
use corona_orbits::quiverrep::{jump_pattern, rep_from_point, Classifier};
use corona_orbits::VarietyPoint;

fn main() -> corona_orbits::Result<()> {
    let f = PrimeField::new(3)?;
    let a = Subspace::from_rows(f, 3, &[[1, 1, 0]])?;
    let b = Subspace::from_rows(f, 3, &[[0, 1, 2], [0, 0, 1]])?;
    let pt = VarietyPoint::new(a, b)?;
    let rep = rep_from_point(&pt);
    println!("dimension vector {:?}", rep.dims());
    println!("jumps {:?}", jump_pattern(&rep));
    let classifier = Classifier::shared(pt.m(), pt.n(), f)?;
    println!("multiplicities {:?}", classifier.multiplicities(&rep)?);
    println!("matching {}", classifier.classify_point(&pt)?);
    Ok(())
}
