//! Matchings as sets of admissible roots, and back.

use corona_orbits::matchgraph::{enumerate_matchings, GraphSpec};
use corona_orbits::rootcalc::{admissible_roots, matching_to_rootset, rootset_to_matching};

fn main() -> corona_orbits::Result<()> {
    let (m, n) = (2, 1);
    let roots = admissible_roots(m, n);
    println!("{} admissible roots for (m, n) = ({m}, {n}):", roots.len());
    for r in &roots {
        println!("  {r}  {:?}", r.indices());
    }
    for s in enumerate_matchings(GraphSpec::plain(m + n), m) {
        let set = matching_to_rootset(&s, m, n)?;
        let names: Vec<String> = set.iter().map(ToString::to_string).collect();
        println!("{s}  ->  {{{}}}", names.join(", "));
        assert_eq!(rootset_to_matching(&set, m, n)?, s);
    }
    Ok(())
}
