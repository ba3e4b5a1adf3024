use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Signed;

use super::{indecomposable_rep, SourceProfile, TargetProfile};
use crate::error::{Error, Result};
use crate::exactla::{PrimeField, RationalMatrix};
use crate::rootcalc::{admissible_roots, AdmissibleRoot};

/// `H[α][β] = dim Hom(V_α, V_β)` over the admissible roots, in a topological
/// order of the positive-Hom relation so that `H` is upper unitriangular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomMatrix {
    m: usize,
    n: usize,
    roots: Vec<AdmissibleRoot>,
    entries: Vec<usize>,
}

impl HomMatrix {
    pub fn m(&self) -> usize {
        self.m
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn len(&self) -> usize {
        self.roots.len()
    }
    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
    /// Roots in matrix order.
    pub fn roots(&self) -> &[AdmissibleRoot] {
        &self.roots
    }
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries[i * self.roots.len() + j]
    }
    pub fn index_of(&self, r: &AdmissibleRoot) -> Option<usize> {
        self.roots.iter().position(|x| x == r)
    }
    pub fn rows(&self) -> Vec<Vec<usize>> {
        let k = self.len();
        (0..k).map(|i| self.entries[i * k..(i + 1) * k].to_vec()).collect()
    }

    pub fn is_unitriangular(&self) -> bool {
        let k = self.len();
        (0..k).all(|i| self.get(i, i) == 1 && (0..i).all(|j| self.get(i, j) == 0))
    }

    pub fn determinant(&self) -> BigInt {
        let rows: Vec<Vec<i64>> = self.rows().into_iter().map(|r| r.into_iter().map(|v| v as i64).collect()).collect();
        let det = RationalMatrix::from_integers(&rows).determinant().expect("square");
        debug_assert!(det.is_integer());
        det.to_integer()
    }
}

fn raw_matrix(m: usize, n: usize, field: PrimeField) -> Result<(Vec<AdmissibleRoot>, Vec<usize>)> {
    let roots = admissible_roots(m, n);
    let reps = roots.iter().map(|r| indecomposable_rep(r, m, n, field)).collect::<Result<Vec<_>>>()?;
    let sources: Vec<SourceProfile> = reps.iter().map(SourceProfile::of).collect();
    let targets: Vec<TargetProfile> = reps.iter().map(TargetProfile::of).collect();
    let k = roots.len();
    let mut raw = vec![0; k * k];
    for a in 0..k {
        for b in 0..k {
            raw[a * k + b] = sources[a].hom_into(&targets[b]);
        }
    }
    Ok((roots, raw))
}

/// Kahn's algorithm on `a → b` whenever `Hom(V_a, V_b) ≠ 0`, breaking ties
/// by the canonical root order.
fn topological_order(k: usize, raw: &[usize]) -> Result<Vec<usize>> {
    let mut indegree = vec![0usize; k];
    for a in 0..k {
        for b in 0..k {
            if a != b && raw[a * k + b] > 0 {
                indegree[b] += 1;
            }
        }
    }
    let mut ready: BTreeSet<usize> = (0..k).filter(|&v| indegree[v] == 0).collect();
    let mut order = Vec::with_capacity(k);
    while let Some(a) = ready.pop_first() {
        order.push(a);
        for b in 0..k {
            if a != b && raw[a * k + b] > 0 {
                indegree[b] -= 1;
                if indegree[b] == 0 {
                    ready.insert(b);
                }
            }
        }
    }
    if order.len() < k {
        return Err(Error::HomCycle);
    }
    Ok(order)
}

fn ordered(m: usize, n: usize, field: PrimeField) -> Result<HomMatrix> {
    let (roots, raw) = raw_matrix(m, n, field)?;
    let k = roots.len();
    let order = topological_order(k, &raw)?;
    let mut entries = Vec::with_capacity(k * k);
    for &a in &order {
        for &b in &order {
            entries.push(raw[a * k + b]);
        }
    }
    Ok(HomMatrix { m, n, roots: order.iter().map(|&i| roots[i]).collect(), entries })
}

/// Builds `H` over `field`, rebuilds it over a second field and requires the
/// two to agree, then checks unitriangularity and `det H = ±1`.
pub fn build_hom_matrix(m: usize, n: usize, field: PrimeField) -> Result<HomMatrix> {
    let h = ordered(m, n, field)?;
    let other = if field == PrimeField::F2 { PrimeField::F3 } else { PrimeField::F2 };
    if ordered(m, n, other)? != h {
        return Err(Error::HomFieldDependence(field.q(), other.q()));
    }
    if !h.is_unitriangular() {
        return Err(Error::Invalid(format!("Hom matrix for ({m}, {n}) is not unitriangular")));
    }
    if h.determinant().abs() != BigInt::from(1) {
        return Err(Error::Invalid(format!("Hom matrix for ({m}, {n}) has determinant other than ±1")));
    }
    Ok(h)
}

/// Process-wide cache of [`build_hom_matrix`] over `F_2`.
pub fn shared_hom_matrix(m: usize, n: usize) -> Result<Arc<HomMatrix>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), Arc<HomMatrix>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(h) = cache.lock().unwrap().get(&(m, n)) {
        return Ok(h.clone());
    }
    let h = Arc::new(build_hom_matrix(m, n, PrimeField::F2)?);
    Ok(cache.lock().unwrap().entry((m, n)).or_insert(h).clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_hom_matrix() {
        let h = build_hom_matrix(1, 1, PrimeField::F2).unwrap();
        assert_eq!(h.len(), 5);
        assert!(h.is_unitriangular());
        assert_eq!(h.determinant().abs(), BigInt::from(1));
        assert_eq!(h, build_hom_matrix(1, 1, PrimeField::F3).unwrap());
    }

    #[test]
    fn larger_shapes_are_directed() {
        for (m, n) in [(2, 2), (3, 2), (1, 4)] {
            let h = build_hom_matrix(m, n, PrimeField::F3).unwrap();
            assert_eq!(h.len(), admissible_roots(m, n).len());
        }
    }

    #[test]
    fn detects_cycles() {
        assert_eq!(topological_order(2, &[1, 1, 1, 1]), Err(Error::HomCycle));
        assert_eq!(topological_order(2, &[1, 0, 1, 1]).unwrap(), vec![1, 0]);
    }
}
