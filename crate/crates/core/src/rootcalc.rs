//! Admissible roots of the star-with-tail quiver and the matching bijection.
//!
//! With `N = m + n` and `p = N + 2`, the roots that admit a complementary
//! indecomposable are
//!
//! * `Pend(i) = L_i − L_p`, a pendant edge at `v_i`,
//! * `Free(i) = L_i + L_p`, an untouched core vertex `v_i`,
//! * `Pair(i, j) = L_i + L_j`, a core edge `v_i v_j`.
//!
//! Branch A is the dimension-`m` branch and branch B the dimension-`n` one.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matchgraph::{Edge, GraphSpec, Matching, Variant};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum AdmissibleRoot {
    Pend { i: usize },
    Pair { i: usize, j: usize },
    Free { i: usize },
}

impl AdmissibleRoot {
    /// Smallest flag index where the root is supported.
    pub fn start(&self) -> usize {
        match *self {
            AdmissibleRoot::Pend { i } | AdmissibleRoot::Free { i } | AdmissibleRoot::Pair { i, .. } => i,
        }
    }

    pub fn indices(&self) -> Vec<usize> {
        match *self {
            AdmissibleRoot::Pend { i } | AdmissibleRoot::Free { i } => vec![i],
            AdmissibleRoot::Pair { i, j } => vec![i, j],
        }
    }

    pub fn is_admissible(&self, m: usize, n: usize) -> bool {
        let top = m + n;
        match *self {
            AdmissibleRoot::Pend { i } | AdmissibleRoot::Free { i } => (1..=top).contains(&i),
            AdmissibleRoot::Pair { i, j } => 1 <= i && i < j && j <= top,
        }
    }

    fn check(&self, m: usize, n: usize) -> Result<()> {
        if self.is_admissible(m, n) {
            Ok(())
        } else {
            Err(Error::InadmissibleRoot(self.to_string(), m, n))
        }
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Wrapped<'a> {
            root: &'a AdmissibleRoot,
        }
        serde_json::to_string(&Wrapped { root: self }).expect("root serializes")
    }
}

impl fmt::Display for AdmissibleRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            AdmissibleRoot::Pend { i } => write!(f, "Pend({i})"),
            AdmissibleRoot::Pair { i, j } => write!(f, "Pair({i},{j})"),
            AdmissibleRoot::Free { i } => write!(f, "Free({i})"),
        }
    }
}

/// Dimensions at the flag vertices `1..=m+n` and at the two branch vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DimVector {
    pub flag: Vec<usize>,
    pub branch_a: usize,
    pub branch_b: usize,
}

impl DimVector {
    pub fn zero(len: usize) -> Self {
        DimVector { flag: vec![0; len], branch_a: 0, branch_b: 0 }
    }

    /// `d_{m,n}`: flag `(1, 2, …, m+n)`, branches `(m, n)`.
    pub fn target(m: usize, n: usize) -> Self {
        DimVector { flag: (1..=m + n).collect(), branch_a: m, branch_b: n }
    }

    pub fn add(&mut self, other: &DimVector) {
        for (a, b) in self.flag.iter_mut().zip(&other.flag) {
            *a += b;
        }
        self.branch_a += other.branch_a;
        self.branch_b += other.branch_b;
    }
}

/// All admissible roots for `(m, n)`, in the derived order.
pub fn admissible_roots(m: usize, n: usize) -> Vec<AdmissibleRoot> {
    let top = m + n;
    let mut out: Vec<AdmissibleRoot> = (1..=top).map(|i| AdmissibleRoot::Pend { i }).collect();
    for i in 1..=top {
        for j in i + 1..=top {
            out.push(AdmissibleRoot::Pair { i, j });
        }
    }
    out.extend((1..=top).map(|i| AdmissibleRoot::Free { i }));
    out
}

pub fn root_dimension_vector(r: &AdmissibleRoot, m: usize, n: usize) -> Result<DimVector> {
    r.check(m, n)?;
    let top = m + n;
    let mut d = DimVector::zero(top);
    match *r {
        AdmissibleRoot::Pend { i } | AdmissibleRoot::Free { i } => {
            for k in i..=top {
                d.flag[k - 1] = 1;
            }
            if matches!(r, AdmissibleRoot::Pend { .. }) {
                d.branch_a = 1;
            } else {
                d.branch_b = 1;
            }
        }
        AdmissibleRoot::Pair { i, j } => {
            for k in i..=top {
                d.flag[k - 1] = if k < j { 1 } else { 2 };
            }
            d.branch_a = 1;
            d.branch_b = 1;
        }
    }
    Ok(d)
}

/// Roots of an `m`-matching on the plain corona `C_{m+n}`.
pub fn matching_to_rootset(s: &Matching, m: usize, n: usize) -> Result<Vec<AdmissibleRoot>> {
    if s.spec().variant() != Variant::Plain {
        return Err(Error::WrongVariant { expected: "plain", got: s.spec().variant() });
    }
    if s.spec().p() != m + n {
        return Err(Error::Invalid(format!("matching on C_{} used with m + n = {}", s.spec().p(), m + n)));
    }
    if s.len() != m {
        return Err(Error::WrongMatchingSize { expected: m, got: s.len() });
    }
    let mut roots: Vec<AdmissibleRoot> = s
        .edges()
        .iter()
        .map(|e| match *e {
            Edge::Pendant { i } => AdmissibleRoot::Pend { i: i as usize },
            Edge::Internal { i, j, .. } => AdmissibleRoot::Pair { i: i as usize, j: j as usize },
        })
        .collect();
    for i in 1..=(m + n) as i32 {
        if !s.touches(i) {
            roots.push(AdmissibleRoot::Free { i: i as usize });
        }
    }
    roots.sort();
    Ok(roots)
}

pub fn rootset_to_matching(roots: &[AdmissibleRoot], m: usize, n: usize) -> Result<Matching> {
    validate_decomposition(roots, m, n).map_err(Error::BadMultiplicities)?;
    let edges = roots.iter().filter_map(|r| match *r {
        AdmissibleRoot::Pend { i } => Some(Edge::pendant(i as i32)),
        AdmissibleRoot::Pair { i, j } => Some(Edge::internal(i as i32, j as i32, 1)),
        AdmissibleRoot::Free { .. } => None,
    });
    Matching::new(GraphSpec::plain(m + n), edges)
}

/// `Ok` iff the roots are distinct, admissible and sum to `d_{m,n}`;
/// otherwise names the first failed condition.
pub fn validate_decomposition(roots: &[AdmissibleRoot], m: usize, n: usize) -> Result<(), String> {
    let mut seen = BTreeSet::new();
    for r in roots {
        if !seen.insert(*r) {
            return Err(format!("root {r} repeated"));
        }
    }
    let mut total = DimVector::zero(m + n);
    for r in roots {
        let d = root_dimension_vector(r, m, n).map_err(|_| format!("root {r} not admissible for ({m}, {n})"))?;
        total.add(&d);
    }
    let target = DimVector::target(m, n);
    if total != target {
        return Err(format!("dimension sum {total:?} differs from d_({m},{n}) = {target:?}"));
    }
    Ok(())
}

pub fn rootset_json(roots: &[AdmissibleRoot], m: usize, n: usize) -> String {
    #[derive(Serialize)]
    struct Decomposition<'a> {
        m: usize,
        n: usize,
        roots: &'a [AdmissibleRoot],
    }
    serde_json::to_string(&Decomposition { m, n, roots }).expect("roots serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use AdmissibleRoot::*;

    #[test]
    fn admissible_counts() {
        assert_eq!(admissible_roots(1, 1), vec![Pend { i: 1 }, Pend { i: 2 }, Pair { i: 1, j: 2 }, Free { i: 1 }, Free { i: 2 }]);
        assert_eq!(admissible_roots(0, 1).len(), 2);
        let r = admissible_roots(2, 4);
        assert!(r.contains(&Pair { i: 2, j: 4 }) && r.contains(&Pend { i: 1 }));
        for t in 1..8 {
            assert_eq!(admissible_roots(t, 0).len(), t * (t - 1) / 2 + 2 * t);
        }
    }

    #[test]
    fn dimension_vectors() {
        let d = root_dimension_vector(&Pend { i: 1 }, 1, 1).unwrap();
        assert_eq!(d, DimVector { flag: vec![1, 1], branch_a: 1, branch_b: 0 });
        let d = root_dimension_vector(&Pair { i: 1, j: 2 }, 1, 1).unwrap();
        assert_eq!(d, DimVector { flag: vec![1, 2], branch_a: 1, branch_b: 1 });
        assert!(root_dimension_vector(&Pair { i: 2, j: 3 }, 1, 1).is_err());
        assert!(root_dimension_vector(&Free { i: 0 }, 1, 1).is_err());
    }

    #[test]
    fn worked_decomposition() {
        let s = Matching::new(GraphSpec::plain(6), [Edge::internal(2, 4, 1), Edge::pendant(1)]).unwrap();
        let roots = matching_to_rootset(&s, 2, 4).unwrap();
        let mut expected = vec![Pair { i: 2, j: 4 }, Pend { i: 1 }, Free { i: 3 }, Free { i: 5 }, Free { i: 6 }];
        expected.sort();
        assert_eq!(roots, expected);
        assert!(validate_decomposition(&roots, 2, 4).is_ok());
        assert_eq!(rootset_to_matching(&roots, 2, 4).unwrap(), s);
    }

    #[test]
    fn empty_and_single_pair() {
        let roots = matching_to_rootset(&Matching::empty(GraphSpec::plain(3)), 0, 3).unwrap();
        assert_eq!(roots, vec![Free { i: 1 }, Free { i: 2 }, Free { i: 3 }]);
        let s = Matching::new(GraphSpec::plain(2), [Edge::internal(1, 2, 1)]).unwrap();
        assert_eq!(matching_to_rootset(&s, 1, 1).unwrap(), vec![Pair { i: 1, j: 2 }]);
        assert!(validate_decomposition(&[], 0, 0).is_ok());
    }

    #[test]
    fn bad_decompositions() {
        assert!(validate_decomposition(&[Pend { i: 1 }, Free { i: 1 }], 1, 1).is_err());
        assert!(validate_decomposition(&[Pend { i: 1 }, Pend { i: 1 }], 1, 1).unwrap_err().contains("repeated"));
        let s = Matching::new(GraphSpec::plain(2), [Edge::pendant(1)]).unwrap();
        assert_eq!(matching_to_rootset(&s, 2, 0), Err(Error::WrongMatchingSize { expected: 2, got: 1 }));
    }

    #[test]
    fn root_json() {
        assert_eq!(Pair { i: 1, j: 2 }.to_json(), r#"{"root":{"kind":"pair","i":1,"j":2}}"#);
        let back: AdmissibleRoot = serde_json::from_str(r#"{"kind":"free","i":3}"#).unwrap();
        assert_eq!(back, Free { i: 3 });
    }
}
