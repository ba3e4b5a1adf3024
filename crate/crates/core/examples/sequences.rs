//! The a, c and b tables with every route, and the row inequalities.

use corona_orbits::seqlab::{check_inequalities, Family, SeqTable};

fn main() -> corona_orbits::Result<()> {
    let a = SeqTable::rows(Family::A, 5)?;
    let c = SeqTable::rows(Family::C, 4)?;
    let b = SeqTable::b_values(4);
    for t in [&a, &c, &b] {
        assert!(t.disagreements().is_empty());
    }
    print!("{}", a.to_csv()?);
    print!("{}", b.to_csv()?);
    for f in [Family::A, Family::C] {
        let r = check_inequalities(f, 10);
        println!("{f}: {:?} over {:?} instances, holds: {}", r.checks, r.instances, r.holds());
    }
    Ok(())
}
