use serde::Serialize;

use super::forms::FixedPointReport;
use super::partition::{CensusReport, OrbitTable};
use crate::error::{Error, Result};

/// One line of the orbit CSV. The form columns are empty when not scanned.
#[derive(Clone, Debug, Serialize)]
pub struct OrbitRow {
    pub orbit_id: usize,
    pub size: usize,
    pub matching_json: String,
    pub has_sp_point: Option<bool>,
    pub has_so_point: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitSummary {
    pub m: usize,
    pub n: usize,
    pub q: u8,
    pub total_points: usize,
    pub orbit_count: usize,
    pub expected_count: String,
    #[serde(rename = "match")]
    pub matches: bool,
}

impl From<&CensusReport> for OrbitSummary {
    fn from(r: &CensusReport) -> Self {
        OrbitSummary {
            m: r.m,
            n: r.n,
            q: r.q,
            total_points: r.total_points,
            orbit_count: r.orbit_count,
            expected_count: r.expected_count.to_string(),
            matches: r.matches(),
        }
    }
}

/// Summary of a fixed-point scan: `orbit_count` counts orbits with a
/// form-compatible point, `expected_count` those the tag predicate selects.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedPointSummary {
    pub form: super::forms::FormKind,
    pub m: usize,
    pub n: usize,
    pub q: u8,
    pub dims: (usize, usize),
    pub total_points: usize,
    pub orbit_count: usize,
    pub expected_count: String,
    #[serde(rename = "match")]
    pub matches: bool,
}

impl From<&FixedPointReport> for FixedPointSummary {
    fn from(r: &FixedPointReport) -> Self {
        FixedPointSummary {
            form: r.kind,
            m: r.m,
            n: r.n,
            q: r.q,
            dims: r.dims,
            total_points: r.total_points,
            orbit_count: r.with_points(),
            expected_count: r.expected_with_points().to_string(),
            matches: r.agrees(),
        }
    }
}

pub fn orbit_rows(table: &OrbitTable, sp: Option<&FixedPointReport>, so: Option<&FixedPointReport>) -> Vec<OrbitRow> {
    let flag = |r: Option<&FixedPointReport>, id: usize| r.map(|r| r.rows[id].has_point);
    table
        .orbits()
        .iter()
        .map(|o| OrbitRow {
            orbit_id: o.id,
            size: o.size,
            matching_json: o.tag.to_json(),
            has_sp_point: flag(sp, o.id),
            has_so_point: flag(so, o.id),
        })
        .collect()
}

pub fn orbit_csv(rows: &[OrbitRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| Error::Invalid(e.to_string()))?;
    }
    if rows.is_empty() {
        w.write_record(["orbit_id", "size", "matching_json", "has_sp_point", "has_so_point"])
            .map_err(|e| Error::Invalid(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Invalid(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv is utf-8"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::PrimeField;
    use crate::orbitoracle::{build_orbit_table, census_of, TagCheck};

    #[test]
    fn csv_and_summary() {
        let t = build_orbit_table(1, 1, PrimeField::F2, 100, TagCheck::default()).unwrap();
        let csv = orbit_csv(&orbit_rows(&t, None, None)).unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("orbit_id,size,matching_json,has_sp_point,has_so_point"));
        assert_eq!(lines.count(), 3);
        assert!(csv.contains(r#""{""graph"":{""variant"":""plain"",""p"":2}"#));
        let s = OrbitSummary::from(&census_of(&t));
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"{"m":1,"n":1,"q":2,"total_points":6,"orbit_count":3,"expected_count":"3","match":true}"#
        );
    }
}
