//! Dimensions of Hom between indecomposables, over two fields.

use corona_orbits::exactla::PrimeField;
use corona_orbits::quiverrep::build_hom_matrix;

fn main() -> corona_orbits::Result<()> {
    let (m, n) = (2, 1);
    let h2 = build_hom_matrix(m, n, PrimeField::new(2)?)?;
    let h3 = build_hom_matrix(m, n, PrimeField::new(3)?)?;
    let labels: Vec<String> = h2.roots().iter().map(ToString::to_string).collect();
    println!("roots: {}", labels.join(" "));
    for row in h2.rows() {
        println!("  {row:?}");
    }
    println!("unitriangular: {}, det {}", h2.is_unitriangular(), h2.determinant());
    println!("same over F_3: {}", h2.rows() == h3.rows());
    Ok(())
}
