//! Acceptance suites. Each suite recomputes its claims from scratch and
//! reports one pass/fail line; [`run_all`] runs them in order.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::PrimeField;
use crate::matchgraph::{
    count_matchings, enumerate_matchings, for_each_minus_invariant, horizontal_edges, minus_invariant_matchings,
    minus_matching, quotient_matching, GraphSpec, Matching, Variant,
};
use crate::orbitoracle::{
    build_orbit_table, census_of, fixed_point_census_of, misplaced_representatives, FixedPointReport, FormKind,
    FormSpec, OrbitTable, TagCheck, DEFAULT_BUDGET, point_count,
};
use crate::quiverrep::{
    a_slots, binary_matrix, binary_representative, build_hom_matrix, phi_point, symplectic_representative,
    symplectic_template, Classifier, VarietyPoint,
};
use crate::seqlab::{b_count, c_count, check_inequalities, interpolate_b, Family, RationalPoly, SeqTable};

const F2: PrimeField = PrimeField::F2;
const F3: PrimeField = PrimeField::F3;

/// Configurations of the bijection census with their expected orbit counts.
pub const CENSUS_CASES: [(usize, usize, u8, usize); 8] =
    [(1, 1, 2, 3), (1, 1, 3, 3), (1, 2, 2, 6), (1, 2, 3, 6), (2, 2, 2, 21), (2, 2, 3, 21), (2, 3, 2, 55), (3, 3, 2, 215)];

#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
    pub limit_seconds: Option<u64>,
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{status}] {:>2} {:<13} {:>8.2}s  {}", self.id, self.name, self.seconds, self.detail)
    }
}

struct Suite {
    id: u8,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Result<String, String>,
}

const fn minutes(m: u64) -> Option<Duration> {
    Some(Duration::from_secs(60 * m))
}

const SUITES: [Suite; 10] = [
    Suite { id: 1, name: "census", limit: minutes(5), run: census_suite },
    Suite { id: 2, name: "roundtrip", limit: minutes(1), run: roundtrip_suite },
    Suite { id: 3, name: "minus", limit: minutes(1), run: minus_suite },
    Suite { id: 4, name: "symplectic", limit: minutes(2), run: symplectic_suite },
    Suite { id: 5, name: "orthogonal", limit: minutes(10), run: orthogonal_suite },
    Suite { id: 6, name: "recurrences", limit: minutes(1), run: recurrence_suite },
    Suite { id: 7, name: "quotient", limit: None, run: quotient_suite },
    Suite { id: 8, name: "inequalities", limit: None, run: inequality_suite },
    Suite { id: 9, name: "interpolation", limit: minutes(5), run: interpolation_suite },
    Suite { id: 10, name: "tripwires", limit: None, run: tripwire_suite },
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.name).collect()
}

fn execute(s: &Suite) -> SuiteResult {
    let start = Instant::now();
    let outcome = (s.run)();
    let elapsed = start.elapsed();
    let over = s.limit.is_some_and(|l| elapsed > l);
    let (passed, mut detail) = match outcome {
        Ok(d) => (!over, d),
        Err(d) => (false, d),
    };
    if over {
        detail.push_str(&format!("; exceeded the {}s limit", s.limit.unwrap().as_secs()));
    }
    SuiteResult {
        id: s.id,
        name: s.name,
        passed,
        detail,
        seconds: elapsed.as_secs_f64(),
        limit_seconds: s.limit.map(|l| l.as_secs()),
    }
}

/// Runs one suite by name or number.
pub fn run_suite(name: &str) -> Result<SuiteResult> {
    SUITES
        .iter()
        .find(|s| s.name == name || s.id.to_string() == name)
        .map(execute)
        .ok_or_else(|| Error::Invalid(format!("unknown suite {name:?}; expected one of {}", suite_names().join(", "))))
}

/// Runs every suite, calling `each` as results arrive.
pub fn run_all(mut each: impl FnMut(&SuiteResult)) -> Vec<SuiteResult> {
    SUITES
        .iter()
        .map(|s| {
            let r = execute(s);
            each(&r);
            r
        })
        .collect()
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

/// Orbit tables are shared between suites within a process.
fn table(m: usize, n: usize, q: u8) -> Result<Arc<OrbitTable>, String> {
    static TABLES: OnceLock<Mutex<HashMap<(usize, usize, u8), Arc<OrbitTable>>>> = OnceLock::new();
    let cache = TABLES.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&(m, n, q)) {
        return Ok(t.clone());
    }
    let field = PrimeField::new(q as u32).map_err(err)?;
    let t = Arc::new(build_orbit_table(m, n, field, DEFAULT_BUDGET, TagCheck::default()).map_err(err)?);
    Ok(cache.lock().unwrap().entry((m, n, q)).or_insert(t).clone())
}

fn census_suite() -> Result<String, String> {
    let mut counts = Vec::new();
    for (m, n, q, expected) in CENSUS_CASES {
        let t = table(m, n, q)?;
        let r = census_of(&t);
        check(r.orbit_count == expected && r.expected_count == BigUint::from(expected), || {
            format!("({m},{n},{q}): {} orbits, expected {expected} (matching count {})", r.orbit_count, r.expected_count)
        })?;
        check(r.tags_distinct && r.tags_cover, || format!("({m},{n},{q}): tags are not a bijection onto matchings"))?;
        let bad = misplaced_representatives(&t).map_err(err)?;
        check(bad.is_empty(), || format!("({m},{n},{q}): representatives outside orbits {bad:?}"))?;
        counts.push(r.orbit_count.to_string());
    }
    Ok(format!("orbit counts {}", counts.join(", ")))
}

fn roundtrip_suite() -> Result<String, String> {
    let mut checked = 0usize;
    let mut located = 0usize;
    for field in [F2, F3] {
        for p in 0..=6 {
            for m in 0..=p {
                let n = p - m;
                let cached = CENSUS_CASES.iter().any(|c| (c.0, c.1, c.2) == (m, n, field.q()));
                let t = if cached { Some(table(m, n, field.q())?) } else { None };
                let classifier = Classifier::shared(m, n, field).map_err(err)?;
                for s in enumerate_matchings(GraphSpec::plain(p), m) {
                    let g = binary_representative(&s, m, n, field).map_err(err)?;
                    let pt = VarietyPoint::from_group_element(&g, &(0..m).collect::<Vec<_>>()).map_err(err)?;
                    let got = classifier.classify_point(&pt).map_err(err)?;
                    check(got == s, || format!("{s} over F_{} classifies as {got}", field.q()))?;
                    if let Some(t) = &t {
                        let id = t.orbit_of_point(&pt).map_err(err)?;
                        check(id.is_some_and(|i| t.orbits()[i].tag == s), || format!("{s}: representative not in its orbit"))?;
                        located += 1;
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} matchings over F_2 and F_3, {located} located in census tables"))
}

fn minus_suite() -> Result<String, String> {
    let mut checked = 0usize;
    for r in 1..=5 {
        let spec = GraphSpec::new(Variant::Signed, 2 * r).map_err(err)?;
        for k in (0..=2 * r).step_by(2) {
            let classifier = Classifier::shared(k, 2 * r - k, F3).map_err(err)?;
            for s in enumerate_matchings(spec, k) {
                let (g, slots) = binary_matrix(&s, F3).map_err(err)?;
                let pt = VarietyPoint::from_group_element(&g, &slots).map_err(err)?;
                let own = classifier.classify_point(&pt).map_err(err)?.relabel(spec).map_err(err)?;
                check(own == s, || format!("{s}: representative classifies as {own}"))?;
                let image = classifier.classify_point(&phi_point(&pt).map_err(err)?).map_err(err)?;
                let image = image.relabel(spec).map_err(err)?;
                let expected = minus_matching(&s).map_err(err)?;
                check(image == expected, || format!("φ-image of {s} classifies as {image}, expected {expected}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} matchings of signed C_2r, r ≤ 5, over F_3"))
}

fn fixed_points(kind: FormKind, m: usize, n: usize) -> Result<(Arc<OrbitTable>, FixedPointReport), String> {
    let (a, b) = FormSpec::dims(kind, m, n);
    let t = table(a, b, 3)?;
    let form = FormSpec::new(kind, F3, a + b).map_err(err)?;
    let r = fixed_point_census_of(&t, &form, m, n).map_err(err)?;
    check(r.agrees(), || format!("{kind:?} dims ({a},{b}): orbits {:?} disagree with the tag predicate", r.mismatches))?;
    Ok((t, r))
}

fn symplectic_suite() -> Result<String, String> {
    let (t, r) = fixed_points(FormKind::Symplectic, 1, 1)?;
    let c21 = c_count(2, 1);
    check(BigUint::from(r.with_points()) == c21 && c21 == count_matchings(GraphSpec::double(2), 1), || {
        format!("{} orbits with symplectic points, c_(2,1) = {c21}", r.with_points())
    })?;
    check(r.with_points() == 4, || format!("{} orbits with symplectic points, expected 4", r.with_points()))?;
    let spec4 = GraphSpec::new(Variant::Signed, 4).map_err(err)?;
    for s in minus_invariant_matchings(spec4, 2).map_err(err)?.into_iter().filter(|s| horizontal_edges(s).is_empty()) {
        let g = symplectic_representative(&s, F3).map_err(err)?;
        let pt = VarietyPoint::from_group_element(&g, &a_slots(spec4, 2)).map_err(err)?;
        let id = t.orbit_of_point(&pt).map_err(err)?.ok_or("representative outside X")?;
        check(r.rows[id].tag == s && r.rows[id].has_point, || format!("{s}: representative lands in orbit {id}"))?;
    }
    let mut built = 0usize;
    for half in 1..=4 {
        let spec = GraphSpec::new(Variant::Signed, 2 * half).map_err(err)?;
        for k in (0..=2 * half).step_by(2) {
            for s in minus_invariant_matchings(spec, k).map_err(err)? {
                if !horizontal_edges(&s).is_empty() {
                    continue;
                }
                check(symplectic_template(&s).map_err(err)?.entries_in_half_set(), || format!("{s}: entries outside {{0, ±1, ±1/2}}"))?;
                symplectic_representative(&s, F3).map_err(err)?;
                built += 1;
            }
        }
    }
    Ok(format!("4 of {} orbits carry symplectic points; {built} representatives verified", r.rows.len()))
}

fn orthogonal_suite() -> Result<String, String> {
    let mut parts = Vec::new();
    for (m, n, expected) in [(1, 0, 2usize), (1, 1, 7)] {
        let (_, r) = fixed_points(FormKind::Symmetric, m, n)?;
        let b = b_count(m, n).map_err(err)?;
        let points = point_count(r.dims.0, r.dims.1, F3);
        check(BigUint::from(r.total_points) == points, || format!("dims {:?}: {} points, expected {points}", r.dims, r.total_points))?;
        check((m, n) != (1, 1) || r.total_points == 882_090, || format!("dims (2,3): {} points", r.total_points))?;
        check(r.with_points() == expected && BigUint::from(expected) == b, || {
            format!("dims {:?}: {} orbits with points, b_({m},{n}) = {b}", r.dims, r.with_points())
        })?;
        parts.push(format!("dims {:?}: {} of {}", r.dims, r.with_points(), r.rows.len()));
    }
    Ok(parts.join("; "))
}

fn recurrence_suite() -> Result<String, String> {
    for f in [Family::A, Family::C] {
        let t = SeqTable::rows(f, 10).map_err(err)?;
        let bad = t.disagreements();
        check(bad.is_empty(), || format!("{f}: recurrence and enumeration differ at {bad:?}"))?;
    }
    Ok("a and c agree for p ≤ 10".into())
}

fn quotient_suite() -> Result<String, String> {
    let mut checked = 0usize;
    for r in 1..=5 {
        let spec = GraphSpec::new(Variant::Signed, 2 * r).map_err(err)?;
        for m in 0..=r {
            let mut count = 0usize;
            let mut images = std::collections::BTreeSet::new();
            let mut failure = None;
            for_each_minus_invariant(spec, 2 * m, |es| {
                let s = Matching::new(spec, es.iter().copied()).expect("invariant matching");
                if horizontal_edges(&s).is_empty() {
                    count += 1;
                    match quotient_matching(&s) {
                        Ok(qm) => {
                            images.insert(qm);
                        }
                        Err(e) => failure = Some(e),
                    }
                }
            })
            .map_err(err)?;
            if let Some(e) = failure {
                return Err(e.to_string());
            }
            let c = c_count(r, m);
            check(BigUint::from(count) == c && images.len() == count, || {
                format!("r={r}, m={m}: {count} matchings, {} quotients, c = {c}", images.len())
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (r, m) pairs with r ≤ 5"))
}

fn inequality_suite() -> Result<String, String> {
    for f in [Family::A, Family::C] {
        let r = check_inequalities(f, 12);
        check(r.holds(), || format!("{f}: {:?}", r.violations))?;
    }
    let bound = check_inequalities(Family::C, 10);
    check(bound.holds(), || format!("binomial bound: {:?}", bound.violations))?;
    Ok("symmetry, unimodality, ULC for p ≤ 12; c ≤ C(p², q) for p ≤ 10".into())
}

fn interpolation_suite() -> Result<String, String> {
    let r0 = interpolate_b(0, 2).map_err(err)?;
    let one = BigRational::one();
    check(r0.poly == RationalPoly::new(vec![one.clone(), one.clone()]) && r0.integral(), || format!("n=0 gives {}", r0.poly))?;
    let r1 = interpolate_b(1, 2).map_err(err)?;
    check(r1.degree() == 3 && r1.leading() == BigRational::new(7.into(), 6.into()), || format!("n=1 gives {}", r1.poly))?;
    let r2 = interpolate_b(2, 2).map_err(err)?;
    check(r2.degree() == 5 && !r2.leading().is_integer(), || format!("n=2 gives {}", r2.poly))?;
    for r in [&r0, &r1, &r2] {
        check(r.predictions.len() == 2, || format!("n={}: {} predictions", r.n, r.predictions.len()))?;
    }
    Ok(format!("leading coefficients {}, {}, {}", r0.leading(), r1.leading(), r2.leading()))
}

fn tripwire_suite() -> Result<String, String> {
    let exhaustive = TagCheck { seed: 0, samples: usize::MAX };
    for (m, n, field) in [(1, 1, F2), (1, 2, F3), (2, 2, F2), (2, 2, F3), (2, 3, F2)] {
        build_orbit_table(m, n, field, DEFAULT_BUDGET, exhaustive).map_err(err)?;
    }
    let bad = SeqTable::b_values(7).disagreements();
    check(bad.is_empty(), || format!("b identity and enumeration differ at {bad:?}"))?;
    let mut shapes = 0;
    for top in 0..=6 {
        for m in 0..=top {
            let h2 = build_hom_matrix(m, top - m, F2).map_err(err)?;
            let h3 = build_hom_matrix(m, top - m, F3).map_err(err)?;
            check(h2 == h3 && h2.is_unitriangular() && h2.determinant().magnitude().is_one(), || {
                format!("Hom matrix for ({m},{}) fails", top - m)
            })?;
            shapes += 1;
        }
    }
    Ok(format!("exhaustive tag constancy on 5 tables; b for m+n ≤ 7; {shapes} Hom matrices"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_lookup() {
        assert_eq!(suite_names().len(), 10);
        assert!(run_suite("nonexistent").is_err());
        let r = run_suite("7").unwrap();
        assert!(r.passed, "{r}");
        assert_eq!(r.name, "quotient");
    }
}
