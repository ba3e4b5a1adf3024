//! Counts and lists k-matchings of the three corona variants.

use corona_orbits::matchgraph::{count_matchings, enumerate_matchings, GraphSpec};

fn main() {
    for p in 1..=6 {
        let row: Vec<String> = (0..=p).map(|k| count_matchings(GraphSpec::plain(p), k).to_string()).collect();
        println!("plain  C_{p}: {}", row.join(" "));
    }
    for p in 1..=4 {
        let row: Vec<String> = (0..=p).map(|k| count_matchings(GraphSpec::double(p), k).to_string()).collect();
        println!("double C_{p}: {}", row.join(" "));
    }
    let signed = GraphSpec::signed_for(5);
    println!("signed corona on {:?}: {} edges", signed.labels(), signed.edge_count());

    println!("2-matchings of plain C_3:");
    for s in enumerate_matchings(GraphSpec::plain(3), 2) {
        println!("  {s}");
    }
}
