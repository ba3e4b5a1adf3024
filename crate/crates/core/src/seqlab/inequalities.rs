use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_rational::BigRational;
use serde::Serialize;

use super::counts::{a_row, c_row};
use super::Family;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Symmetry,
    Unimodality,
    UltraLogConcavity,
    BinomialBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub check: Check,
    pub p: usize,
    pub m: usize,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InequalityReport {
    pub family: Family,
    pub pmax: usize,
    pub checks: Vec<Check>,
    /// Instances tested per check, in `checks` order.
    pub instances: Vec<usize>,
    pub violations: Vec<Violation>,
}

impl InequalityReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

fn rat(v: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(v.clone()))
}

/// Violated symmetry, unimodality and ULC instances in one row.
fn row_violations(row: &[BigUint], p: usize, out: &mut Vec<Violation>, counts: &mut [usize; 3]) {
    for m in 0..=p {
        counts[0] += 1;
        if row[m] != row[p - m] {
            out.push(Violation { check: Check::Symmetry, p, m, detail: format!("{} vs {}", row[m], row[p - m]) });
        }
    }
    // unimodal: no strict rise after a strict fall
    counts[1] += 1;
    let mut fallen = false;
    for m in 1..=p {
        if row[m] < row[m - 1] {
            fallen = true;
        } else if row[m] > row[m - 1] && fallen {
            out.push(Violation { check: Check::Unimodality, p, m, detail: "rises after a fall".into() });
        }
    }
    for m in 1..p {
        counts[2] += 1;
        let one = BigRational::from_integer(1.into());
        let factor = (&one + BigRational::new(1.into(), (m as i64).into()))
            * (&one + BigRational::new(1.into(), ((p - m) as i64).into()));
        let lhs = rat(&row[m]) * rat(&row[m]);
        let rhs = factor * rat(&row[m - 1]) * rat(&row[m + 1]);
        if lhs < rhs {
            out.push(Violation { check: Check::UltraLogConcavity, p, m, detail: format!("{lhs} < {rhs}") });
        }
    }
}

/// Symmetry, unimodality and `x_{p,m}^2 ≥ (1 + 1/m)(1 + 1/(p−m)) x_{p,m−1} x_{p,m+1}`
/// on rows `1..=pmax` of `a` or `c`; for `c` also `c_{p,k} ≤ C(p², k)`.
/// `b` has no row structure and yields an empty report.
pub fn check_inequalities(family: Family, pmax: usize) -> InequalityReport {
    let mut violations = Vec::new();
    let mut counts = [0usize; 3];
    let mut bound = 0usize;
    let rows: Option<fn(usize) -> Vec<BigUint>> = match family {
        Family::A => Some(a_row),
        Family::C => Some(c_row),
        Family::B => None,
    };
    if let Some(row_of) = rows {
        for p in 1..=pmax {
            let row = row_of(p);
            row_violations(&row, p, &mut violations, &mut counts);
            if family == Family::C {
                for (k, v) in row.iter().enumerate() {
                    bound += 1;
                    let cap = binomial(BigUint::from(p * p), BigUint::from(k));
                    if *v > cap {
                        violations.push(Violation { check: Check::BinomialBound, p, m: k, detail: format!("{v} > {cap}") });
                    }
                }
            }
        }
    }
    let mut checks = vec![Check::Symmetry, Check::Unimodality, Check::UltraLogConcavity];
    let mut instances = counts.to_vec();
    if family == Family::C {
        checks.push(Check::BinomialBound);
        instances.push(bound);
    }
    InequalityReport { family, pmax, checks, instances, violations }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_row() {
        let row = a_row(4);
        let lhs = rat(&row[2]) * rat(&row[2]);
        assert_eq!(lhs, BigRational::from_integer(441.into()));
        let rhs = BigRational::new(9.into(), 4.into()) * rat(&row[1]) * rat(&row[3]);
        assert_eq!(rhs, BigRational::from_integer(225.into()));
    }

    #[test]
    fn rows_hold() {
        for f in [Family::A, Family::C] {
            let r = check_inequalities(f, 8);
            assert!(r.holds(), "{:?}", r.violations);
        }
    }

    #[test]
    fn violations_are_reported() {
        let mut out = Vec::new();
        let mut counts = [0; 3];
        let row: Vec<BigUint> = [1u32, 5, 2, 6, 1].into_iter().map(BigUint::from).collect();
        row_violations(&row, 4, &mut out, &mut counts);
        let kinds: Vec<Check> = out.iter().map(|v| v.check).collect();
        assert!(kinds.contains(&Check::Symmetry));
        assert!(kinds.contains(&Check::Unimodality));
        assert!(kinds.contains(&Check::UltraLogConcavity));
    }
}
