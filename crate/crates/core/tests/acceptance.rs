//! One line per acceptance criterion; exits nonzero if any fails.

use corona_orbits::verify::run_all;

fn main() {
    let results = run_all(|r| println!("{r}"));
    let failed = results.iter().filter(|r| !r.passed).count();
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
