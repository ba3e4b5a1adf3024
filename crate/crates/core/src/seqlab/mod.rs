//! The orbit-count sequences
//!
//! * `a_{p,m}`: m-matchings of the corona `C_p`,
//! * `c_{p,m}`: m-matchings of the double corona,
//! * `b_{m,n}`: minus-invariant `2m`-matchings of `C_{2m+2n+1}`,
//!
//! each computed by more than one route, plus the inequality checks and the
//! exact interpolation of `b` in `m`.

mod counts;
mod inequalities;
mod poly;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

pub use counts::{a_count, a_enumerated, a_row, b_count, b_enumerated, b_identity, c_count, c_enumerated, c_row};
pub use inequalities::{check_inequalities, Check, InequalityReport, Violation};
pub use poly::{fraction, interpolate_b, Interpolation, Prediction, RationalPoly};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    A,
    C,
    B,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "a",
            Family::C => "c",
            Family::B => "b",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" => Ok(Family::A),
            "c" => Ok(Family::C),
            "b" => Ok(Family::B),
            _ => Err(Error::Invalid(format!("unknown family {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Enumerated,
    Recurrence,
    Identity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeqEntry {
    pub family: Family,
    /// `(p, m)` for `a` and `c`, `(m, n)` for `b`.
    pub indices: (usize, usize),
    #[serde(serialize_with = "crate::serialize_display")]
    pub value: BigUint,
    pub provenance: Provenance,
}

/// Sequence values with the route that produced each.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SeqTable {
    entries: Vec<SeqEntry>,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    family: Family,
    indices: String,
    value: String,
    provenance: &'a Provenance,
}

impl SeqTable {
    pub fn entries(&self) -> &[SeqEntry] {
        &self.entries
    }

    pub fn push(&mut self, family: Family, indices: (usize, usize), value: BigUint, provenance: Provenance) {
        self.entries.push(SeqEntry { family, indices, value, provenance });
    }

    /// `a` or `c` on rows `0..=pmax`, by recurrence and by enumeration.
    pub fn rows(family: Family, pmax: usize) -> Result<Self> {
        let (row_of, enumerate): (fn(usize) -> Vec<BigUint>, fn(usize, usize) -> BigUint) = match family {
            Family::A => (a_row, a_enumerated),
            Family::C => (c_row, c_enumerated),
            Family::B => return Err(Error::Invalid("b is indexed by (m, n); use SeqTable::b_values".into())),
        };
        let mut t = SeqTable::default();
        for p in 0..=pmax {
            for (m, v) in row_of(p).into_iter().enumerate() {
                t.push(family, (p, m), v, Provenance::Recurrence);
                t.push(family, (p, m), enumerate(p, m), Provenance::Enumerated);
            }
        }
        Ok(t)
    }

    /// `b_{m,n}` for `m + n ≤ total`, by enumeration and by the identity.
    pub fn b_values(total: usize) -> Self {
        let mut t = SeqTable::default();
        for s in 0..=total {
            for m in 0..=s {
                let n = s - m;
                t.push(Family::B, (m, n), b_enumerated(m, n), Provenance::Enumerated);
                t.push(Family::B, (m, n), b_identity(m, n), Provenance::Identity);
            }
        }
        t
    }

    /// Indices where two provenances give different values.
    pub fn disagreements(&self) -> Vec<(Family, (usize, usize))> {
        let mut out = Vec::new();
        for (i, e) in self.entries.iter().enumerate() {
            for f in &self.entries[i + 1..] {
                if e.family == f.family && e.indices == f.indices && e.value != f.value {
                    out.push((e.family, e.indices));
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for e in &self.entries {
            w.serialize(CsvRow {
                family: e.family,
                indices: format!("{};{}", e.indices.0, e.indices.1),
                value: e.value.to_string(),
                provenance: &e.provenance,
            })
            .map_err(|err| Error::Invalid(err.to_string()))?;
        }
        let bytes = w.into_inner().map_err(|err| Error::Invalid(err.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv is utf-8"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_agree_and_serialize() {
        let t = SeqTable::rows(Family::A, 5).unwrap();
        assert!(t.disagreements().is_empty());
        let csv = t.to_csv().unwrap();
        assert!(csv.starts_with("family,indices,value,provenance\n"));
        assert!(csv.contains("a,4;2,21,recurrence\n") && csv.contains("a,4;2,21,enumerated\n"));
        let b = SeqTable::b_values(3);
        assert!(b.disagreements().is_empty());
        assert!(b.to_csv().unwrap().contains("b,1;1,7,identity"));
        assert!(SeqTable::rows(Family::B, 2).is_err());
    }

    #[test]
    fn disagreement_detection() {
        let mut t = SeqTable::default();
        t.push(Family::C, (2, 1), BigUint::from(4u32), Provenance::Recurrence);
        t.push(Family::C, (2, 1), BigUint::from(5u32), Provenance::Enumerated);
        assert_eq!(t.disagreements(), vec![(Family::C, (2, 1))]);
    }

    #[test]
    fn family_parsing() {
        assert_eq!("c".parse::<Family>().unwrap(), Family::C);
        assert!("d".parse::<Family>().is_err());
    }
}
