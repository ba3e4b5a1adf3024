//! Duality on plain matchings, negation on signed ones, and the quotient of
//! a negation-invariant matching.

use corona_orbits::matchgraph::{
    dual_matching, enumerate_matchings, lift_matching, minus_matching, quotient_matching, GraphSpec, Matching,
};

fn main() -> corona_orbits::Result<()> {
    let spec = GraphSpec::plain(4);
    for s in enumerate_matchings(spec, 1).take(4) {
        let d = dual_matching(&s)?;
        println!("{s}  <->  {d}");
        assert_eq!(dual_matching(&d)?, s);
    }

    let signed = GraphSpec::signed_for(4);
    let invariant: Vec<Matching> = enumerate_matchings(signed, 2).filter(Matching::is_minus_invariant).collect();
    println!("{} negation-invariant 2-matchings on {:?}", invariant.len(), signed.labels());
    for s in invariant.iter().take(3) {
        let q = quotient_matching(s)?;
        println!("  {s}  ->  {q}");
        assert_eq!(&lift_matching(&q)?, s);
        assert_eq!(&minus_matching(s)?, s);
    }
    Ok(())
}
