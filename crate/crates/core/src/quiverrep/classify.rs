use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::hommatrix::{shared_hom_matrix, HomMatrix};
use super::{hom_dim_general, indecomposable_rep, rep_from_point, QuiverRep, SourceProfile, TargetProfile, VarietyPoint};
use crate::error::{Error, Result};
use crate::exactla::{PrimeField, Subspace};
use crate::matchgraph::{Edge, GraphSpec, Matching};
use crate::rootcalc::{rootset_to_matching, AdmissibleRoot};

/// How `(dim U_i ∩ A, dim U_i ∩ B)` changes from step `i − 1` to step `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Jump {
    A,
    B,
    Neither,
    Both,
}

/// Jump pattern of a representation, computed from the images in the sink.
pub fn jump_pattern(v: &QuiverRep) -> Vec<Jump> {
    if v.top() == 0 {
        return Vec::new();
    }
    jumps_from_images(v.top(), &v.sink_images())
}

fn jumps_from_images(top: usize, images: &[Subspace]) -> Vec<Jump> {
    let (a, b) = (&images[top], &images[top + 1]);
    let meet = |u: &Subspace, w: &Subspace| {
        u.dim() + w.dim() - u.sum(w).expect("same sink").dim()
    };
    let mut prev = (0, 0);
    let mut out = Vec::with_capacity(top);
    for k in 0..top {
        let cur = (meet(&images[k], a), meet(&images[k], b));
        out.push(match (cur.0 > prev.0, cur.1 > prev.1) {
            (true, false) => Jump::A,
            (false, true) => Jump::B,
            (false, false) => Jump::Neither,
            (true, true) => Jump::Both,
        });
        prev = cur;
    }
    out
}

/// Jump pattern predicted by a matching on flag positions `1..=p`.
fn expected_jumps(s: &Matching) -> Vec<Jump> {
    let mut out = vec![Jump::B; s.spec().p()];
    for e in s.edges() {
        match *e {
            Edge::Pendant { i } => out[i as usize - 1] = Jump::A,
            Edge::Internal { i, j, .. } => {
                out[i as usize - 1] = Jump::Neither;
                out[j as usize - 1] = Jump::Both;
            }
        }
    }
    out
}

/// Krull–Schmidt classifier for complementary representations of shape
/// `(m, n)`: multiplicities come from `h_α = dim Hom(V_α, V)` by
/// back-substitution through the unitriangular Hom matrix.
pub struct Classifier {
    m: usize,
    n: usize,
    field: PrimeField,
    hom: Arc<HomMatrix>,
    sources: Vec<SourceProfile>,
}

impl Classifier {
    pub fn new(m: usize, n: usize, field: PrimeField) -> Result<Self> {
        let hom = shared_hom_matrix(m, n)?;
        let sources = hom
            .roots()
            .iter()
            .map(|r| indecomposable_rep(r, m, n, field).map(|v| SourceProfile::of(&v)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Classifier { m, n, field, hom, sources })
    }

    /// Process-wide cached classifier.
    pub fn shared(m: usize, n: usize, field: PrimeField) -> Result<Arc<Classifier>> {
        static CACHE: OnceLock<Mutex<HashMap<(usize, usize, u8), Arc<Classifier>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        let key = (m, n, field.q());
        if let Some(c) = cache.lock().unwrap().get(&key) {
            return Ok(c.clone());
        }
        let c = Arc::new(Classifier::new(m, n, field)?);
        Ok(cache.lock().unwrap().entry(key).or_insert(c).clone())
    }

    pub fn hom_matrix(&self) -> &HomMatrix {
        &self.hom
    }

    /// Multiplicity of every admissible indecomposable in `v`, in Hom-matrix order.
    pub fn multiplicities(&self, v: &QuiverRep) -> Result<Vec<i64>> {
        let images = if v.top() == 0 { Vec::new() } else { v.sink_images() };
        self.multiplicities_with(v, &images)
    }

    fn multiplicities_with(&self, v: &QuiverRep, images: &[Subspace]) -> Result<Vec<i64>> {
        if (v.m(), v.n()) != (self.m, self.n) {
            return Err(Error::ShapeMismatch);
        }
        if v.field() != self.field {
            return Err(Error::FieldMismatch(v.field().q(), self.field.q()));
        }
        let h: Vec<i64> = if v.is_injective() {
            let target = TargetProfile::from_images(v.field(), v.sink_dim(), images);
            self.sources.iter().map(|s| s.hom_into(&target) as i64).collect()
        } else {
            self.hom
                .roots()
                .iter()
                .map(|r| {
                    let x = indecomposable_rep(r, self.m, self.n, self.field)?;
                    hom_dim_general(&x, v).map(|d| d as i64)
                })
                .collect::<Result<Vec<_>>>()?
        };
        let k = h.len();
        let mut mult = vec![0i64; k];
        for i in (0..k).rev() {
            let tail: i64 = (i + 1..k).map(|j| self.hom.get(i, j) as i64 * mult[j]).sum();
            mult[i] = h[i] - tail;
        }
        Ok(mult)
    }

    /// The matching of a complementary representation of dimension `d_{m,n}`,
    /// cross-checked against its jump pattern.
    pub fn classify(&self, v: &QuiverRep) -> Result<Matching> {
        if self.m + self.n == 0 {
            if v.dims().iter().any(|&d| d != 0) {
                return Err(Error::ShapeMismatch);
            }
            return Ok(Matching::empty(GraphSpec::plain(0)));
        }
        let images = v.sink_images();
        let mult = self.multiplicities_with(v, &images)?;
        if let Some((i, &x)) = mult.iter().enumerate().find(|(_, &x)| x != 0 && x != 1) {
            return Err(Error::BadMultiplicities(format!("{} has multiplicity {x}", self.hom.roots()[i])));
        }
        let support: Vec<AdmissibleRoot> =
            self.hom.roots().iter().zip(&mult).filter(|(_, &x)| x == 1).map(|(r, _)| *r).collect();
        let s = rootset_to_matching(&support, self.m, self.n)?;
        let seen = jumps_from_images(v.top(), &images);
        let expected = expected_jumps(&s);
        if seen != expected {
            return Err(Error::JumpMismatch(format!("{s}: expected {expected:?}, found {seen:?}")));
        }
        Ok(s)
    }

    pub fn classify_point(&self, pt: &VarietyPoint) -> Result<Matching> {
        self.classify(&rep_from_point(pt))
    }
}

/// Classifies `v` with the shared classifier for its shape and field.
pub fn classify_rep(v: &QuiverRep) -> Result<Matching> {
    Classifier::shared(v.m(), v.n(), v.field())?.classify(v)
}
