use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::partition::{build_orbit_table, OrbitTable, TagCheck};
use super::points::PointSpace;
use crate::error::{Error, Result};
use crate::exactla::{rank_in_place, Matrix, PrimeField};
use crate::matchgraph::{horizontal_edges, GraphSpec, Matching};
use crate::quiverrep::{isotropy_holds, symmetric_gram, symplectic_gram, VarietyPoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormKind {
    Symplectic,
    Symmetric,
}

/// A split nondegenerate bilinear form on `F_q^d` in flag order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormSpec {
    kind: FormKind,
    gram: Matrix,
}

impl FormSpec {
    pub fn symplectic(field: PrimeField, d: usize) -> Result<Self> {
        Ok(FormSpec { kind: FormKind::Symplectic, gram: symplectic_gram(field, d)? })
    }

    pub fn symmetric(field: PrimeField, d: usize) -> Result<Self> {
        if field.is_binary() {
            return Err(Error::CharacteristicTwo);
        }
        Ok(FormSpec { kind: FormKind::Symmetric, gram: symmetric_gram(field, d) })
    }

    pub fn new(kind: FormKind, field: PrimeField, d: usize) -> Result<Self> {
        match kind {
            FormKind::Symplectic => Self::symplectic(field, d),
            FormKind::Symmetric => Self::symmetric(field, d),
        }
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }
    pub fn gram(&self) -> &Matrix {
        &self.gram
    }
    pub fn dim(&self) -> usize {
        self.gram.nrows()
    }

    /// Dimensions `(dim A, dim B)` of the form-compatible pairs for the
    /// parameters `(m, n)`: `(2m, 2n)` symplectic, `(2m, 2n + 1)` symmetric.
    pub fn dims(kind: FormKind, m: usize, n: usize) -> (usize, usize) {
        match kind {
            FormKind::Symplectic => (2 * m, 2 * n),
            FormKind::Symmetric => (2 * m, 2 * n + 1),
        }
    }
}

/// `B = A^⊥` and the form restricted to `A` is nondegenerate.
pub fn isotropy_predicate(pt: &VarietyPoint, form: &FormSpec) -> Result<bool> {
    if form.dim() != pt.ambient() {
        return Err(Error::FormMismatch(format!("form on F^{} vs point in F^{}", form.dim(), pt.ambient())));
    }
    if form.gram.field() != pt.field() {
        return Err(Error::FieldMismatch(form.gram.field().q(), pt.field().q()));
    }
    isotropy_holds(pt, &form.gram)
}

/// The same predicate on a packed point: `A G Bᵀ = 0` and `rank(A G Aᵀ) = m`.
/// Since `dim A^⊥ = n = dim B`, the first condition is `B = A^⊥`.
pub(crate) fn packed_isotropy(space: &PointSpace, gram: &Matrix, key: u128, buf: &mut [u8], ag: &mut [u8]) -> bool {
    let (m, d) = (space.m(), space.d());
    let f = space.field();
    space.unpack(key, buf);
    for r in 0..m {
        for c in 0..d {
            let mut s = 0;
            for k in 0..d {
                let x = buf[r * d + k];
                if x != 0 {
                    s = f.add(s, f.mul(x, gram.get(k, c)));
                }
            }
            ag[r * d + c] = s;
        }
    }
    let dot = |u: &[u8], v: &[u8]| u.iter().zip(v).fold(0, |s, (&x, &y)| f.add(s, f.mul(x, y)));
    for r in 0..m {
        for s in m..d {
            if dot(&ag[r * d..(r + 1) * d], &buf[s * d..(s + 1) * d]) != 0 {
                return false;
            }
        }
    }
    let mut restricted = vec![0u8; m * m];
    for r in 0..m {
        for s in 0..m {
            restricted[r * m + s] = dot(&ag[r * d..(r + 1) * d], &buf[s * d..(s + 1) * d]);
        }
    }
    rank_in_place(f, &mut restricted, m, m) == m
}

/// One GL-orbit in a fixed-point census.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedPointRow {
    pub orbit_id: usize,
    pub size: usize,
    /// The orbit tag in signed labels.
    pub tag: Matching,
    pub has_point: bool,
    /// The combinatorial prediction for `has_point`.
    pub expected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedPointReport {
    pub kind: FormKind,
    pub m: usize,
    pub n: usize,
    pub q: u8,
    pub dims: (usize, usize),
    pub total_points: usize,
    pub rows: Vec<FixedPointRow>,
    pub mismatches: Vec<usize>,
}

impl FixedPointReport {
    pub fn with_points(&self) -> usize {
        self.rows.iter().filter(|r| r.has_point).count()
    }
    pub fn expected_with_points(&self) -> usize {
        self.rows.iter().filter(|r| r.expected).count()
    }
    pub fn agrees(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Minus-invariant and horizontal-free (symplectic) or minus-invariant
/// (symmetric), for a tag in signed labels.
pub fn combinatorial_predicate(kind: FormKind, signed_tag: &Matching) -> bool {
    signed_tag.is_minus_invariant() && (kind == FormKind::Symmetric || horizontal_edges(signed_tag).is_empty())
}

/// Scans every orbit of `table` for a point passing the form predicate.
pub fn fixed_point_census_of(table: &OrbitTable, form: &FormSpec, m: usize, n: usize) -> Result<FixedPointReport> {
    let space = *table.space();
    let d = space.d();
    if form.dim() != d || FormSpec::dims(form.kind, m, n) != (table.m(), table.n()) {
        return Err(Error::FormMismatch(format!(
            "{:?} form with parameters ({m}, {n}) on a table of shape ({}, {})",
            form.kind,
            table.m(),
            table.n()
        )));
    }
    let signed = GraphSpec::signed_for(d);
    let rows = table
        .orbits()
        .par_iter()
        .map(|o| {
            let mut buf = vec![0u8; d * d];
            let mut ag = vec![0u8; d * d];
            let found = table
                .members(o.id)
                .iter()
                .map(|&i| table.keys()[i as usize])
                .find(|&k| packed_isotropy(&space, &form.gram, k, &mut buf, &mut ag));
            if let Some(k) = found {
                if !isotropy_predicate(&space.point(k), form)? {
                    return Err(Error::Invalid("packed and subspace isotropy tests disagree".into()));
                }
            }
            let tag = o.tag.relabel(signed)?;
            let expected = combinatorial_predicate(form.kind, &tag);
            Ok(FixedPointRow { orbit_id: o.id, size: o.size, tag, has_point: found.is_some(), expected })
        })
        .collect::<Result<Vec<_>>>()?;
    let mismatches = rows.iter().filter(|r| r.has_point != r.expected).map(|r| r.orbit_id).collect();
    Ok(FixedPointReport {
        kind: form.kind,
        m,
        n,
        q: space.field().q(),
        dims: (table.m(), table.n()),
        total_points: table.total_points(),
        rows,
        mismatches,
    })
}

/// Builds the GL-orbit table for the dimensions of `(kind, m, n)` and runs
/// the fixed-point scan.
pub fn fixed_point_census(m: usize, n: usize, field: PrimeField, kind: FormKind, budget: u128) -> Result<FixedPointReport> {
    if field.is_binary() {
        return Err(Error::CharacteristicTwo);
    }
    let (a, b) = FormSpec::dims(kind, m, n);
    let form = FormSpec::new(kind, field, a + b)?;
    let table = build_orbit_table(a, b, field, budget, TagCheck::default())?;
    fixed_point_census_of(&table, &form, m, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Subspace;

    const F3: PrimeField = PrimeField::F3;

    #[test]
    fn base_points() {
        let sp = FormSpec::symplectic(F3, 4).unwrap();
        let a = Subspace::coordinate(F3, 4, &[1, 2]);
        let b = Subspace::coordinate(F3, 4, &[0, 3]);
        assert!(isotropy_predicate(&VarietyPoint::new(a.clone(), b.clone()).unwrap(), &sp).unwrap());
        let so = FormSpec::symmetric(F3, 3).unwrap();
        let pt = VarietyPoint::new(Subspace::coordinate(F3, 3, &[0, 2]), Subspace::coordinate(F3, 3, &[1])).unwrap();
        assert!(isotropy_predicate(&pt, &so).unwrap());
    }

    #[test]
    fn negative_cases() {
        let sp = FormSpec::symplectic(F3, 4).unwrap();
        // A Lagrangian: A^⊥ = A, so no complement of A is its perp.
        let pt = VarietyPoint::new(Subspace::coordinate(F3, 4, &[0, 1]), Subspace::coordinate(F3, 4, &[2, 3])).unwrap();
        assert!(!isotropy_predicate(&pt, &sp).unwrap());
        // A degenerate forces A ∩ A^⊥ ≠ 0, so (A, A^⊥) is not a point at all.
        let so = FormSpec::symmetric(F3, 3).unwrap();
        let a = Subspace::coordinate(F3, 3, &[0, 1]);
        let perp = a.perp(so.gram()).unwrap();
        assert_eq!(perp, Subspace::coordinate(F3, 3, &[0]));
        assert_eq!(VarietyPoint::new(a, perp), Err(Error::NotComplementary));
        let a = Subspace::from_rows(F3, 3, &[[1, 0, 0], [0, 1, 1]]).unwrap();
        let pt = VarietyPoint::new(a, Subspace::from_rows(F3, 3, &[[0, 1, 2]]).unwrap()).unwrap();
        assert!(!isotropy_predicate(&pt, &so).unwrap());
    }

    #[test]
    fn form_validation() {
        assert_eq!(FormSpec::symplectic(PrimeField::F2, 4), Err(Error::CharacteristicTwo));
        assert!(FormSpec::symplectic(F3, 3).is_err());
        assert!(fixed_point_census(1, 1, PrimeField::F2, FormKind::Symplectic, 1_000_000).is_err());
        let pt = VarietyPoint::base(F3, 1, 1);
        assert!(matches!(isotropy_predicate(&pt, &FormSpec::symplectic(F3, 4).unwrap()), Err(Error::FormMismatch(_))));
    }

    #[test]
    fn packed_route_agrees() {
        for (m, n, kind) in [(2, 2, FormKind::Symplectic), (2, 1, FormKind::Symmetric), (1, 2, FormKind::Symmetric)] {
            let space = PointSpace::new(m, n, F3).unwrap();
            let form = FormSpec::new(kind, F3, m + n).unwrap();
            let d = m + n;
            let (mut buf, mut ag) = (vec![0u8; d * d], vec![0u8; d * d]);
            for k in space.keys() {
                let fast = packed_isotropy(&space, form.gram(), k, &mut buf, &mut ag);
                assert_eq!(fast, isotropy_predicate(&space.point(k), &form).unwrap());
            }
        }
    }

    #[test]
    fn symplectic_two_two() {
        let r = fixed_point_census(1, 1, F3, FormKind::Symplectic, 1_000_000).unwrap();
        assert_eq!(r.rows.len(), 21);
        assert_eq!(r.with_points(), 4);
        assert!(r.agrees(), "{:?}", r.mismatches);
    }

    #[test]
    fn symmetric_two_one() {
        let r = fixed_point_census(1, 0, F3, FormKind::Symmetric, 1_000_000).unwrap();
        assert_eq!(r.rows.len(), 6);
        assert_eq!(r.with_points(), 2);
        assert!(r.agrees(), "{:?}", r.mismatches);
    }
}
