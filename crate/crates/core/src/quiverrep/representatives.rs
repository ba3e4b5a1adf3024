//! Explicit orbit representatives: binary matrices, the form involution
//! `φ(g) = J g^{-T} J^{-1}`, and symplectic representatives with entries in
//! `{0, ±1, ±1/2}`.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::classify::Classifier;
use super::VarietyPoint;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, PrimeField, RationalMatrix};
use crate::matchgraph::{quotient_matching, Edge, GraphSpec, Matching, Variant};

/// Flag positions whose unit vectors span the base `A`. Plain graphs use the
/// first `m` positions; on signed graphs with even `m` the slots are the
/// labels `0 < |k| ≤ m/2`, which makes the base pair closed under negation.
pub fn a_slots(spec: GraphSpec, m: usize) -> Vec<usize> {
    if spec.variant().is_signed() && m % 2 == 0 {
        let half = (m / 2) as i32;
        (-half..=half).filter(|&k| k != 0).map(|k| spec.position(k)).collect()
    } else {
        (0..m).collect()
    }
}

#[derive(Clone, Copy)]
enum Role {
    Pendant,
    Opens(usize),
    Closes,
    Free,
}

/// The binary matrix `g` (in flag positions) and its `A` slots: pair openers
/// and pendant vertices take `A` slots, pair closers and untouched vertices
/// take `B` slots, and `g e_{χ(i)} = e_i + e_j`, `g e_{χ(j)} = e_j` for a pair
/// `i < j`, `g e_{χ(i)} = e_i` otherwise.
pub fn binary_matrix(s: &Matching, field: PrimeField) -> Result<(Matrix, Vec<usize>)> {
    let spec = s.spec();
    if spec.variant() == Variant::Double {
        return Err(Error::WrongVariant { expected: "plain, signed or signed0", got: spec.variant() });
    }
    let p = spec.p();
    let mut roles = vec![Role::Free; p];
    for e in s.to_positions().edges() {
        match *e {
            Edge::Pendant { i } => roles[i as usize - 1] = Role::Pendant,
            Edge::Internal { i, j, .. } => {
                roles[i as usize - 1] = Role::Opens(j as usize - 1);
                roles[j as usize - 1] = Role::Closes;
            }
        }
    }
    let a = a_slots(spec, s.len());
    let b: Vec<usize> = (0..p).filter(|c| !a.contains(c)).collect();
    let (mut next_a, mut next_b) = (a.iter(), b.iter());
    let mut g = Matrix::zeros(field, p, p);
    for (i, role) in roles.iter().enumerate() {
        let slot = match role {
            Role::Pendant | Role::Opens(_) => next_a.next(),
            Role::Closes | Role::Free => next_b.next(),
        };
        let &col = slot.expect("slot counts match the matching size");
        g.set(i, col, 1);
        if let Role::Opens(j) = *role {
            g.set(j, col, 1);
        }
    }
    Ok((g, a))
}

/// Binary representative of the orbit of `S`, checked by classifying its point.
pub fn binary_representative(s: &Matching, m: usize, n: usize, field: PrimeField) -> Result<Matrix> {
    if s.len() != m {
        return Err(Error::WrongMatchingSize { expected: m, got: s.len() });
    }
    if s.spec().p() != m + n {
        return Err(Error::Invalid(format!("matching on {} core vertices used with m + n = {}", s.spec().p(), m + n)));
    }
    let (g, slots) = binary_matrix(s, field)?;
    let pt = VarietyPoint::from_group_element(&g, &slots)?;
    let got = Classifier::shared(m, n, field)?.classify_point(&pt)?;
    if got != s.to_positions() {
        return Err(Error::RepresentativeCheck(format!("binary matrix of {s} classifies as {got}")));
    }
    Ok(g)
}

/// Gram matrix of the split symplectic form `⟨e_{-j}, e_j⟩ = 1` (`j > 0`) in
/// flag order `e_{-r}, …, e_{-1}, e_1, …, e_r`.
pub fn symplectic_gram(field: PrimeField, d: usize) -> Result<Matrix> {
    if field.is_binary() {
        return Err(Error::CharacteristicTwo);
    }
    if d % 2 == 1 {
        return Err(Error::DimensionMismatch(format!("symplectic form needs even dimension, got {d}")));
    }
    let mut g = Matrix::zeros(field, d, d);
    for a in 0..d {
        g.set(a, d - 1 - a, if a < d / 2 { 1 } else { field.neg(1) });
    }
    Ok(g)
}

/// Gram matrix of the split symmetric form: antidiagonal ones.
pub fn symmetric_gram(field: PrimeField, d: usize) -> Matrix {
    let mut g = Matrix::zeros(field, d, d);
    for a in 0..d {
        g.set(a, d - 1 - a, 1);
    }
    g
}

/// `φ(g) = J g^{-T} J^{-1}`, with `J` antidiagonal, `−1` in the top-right
/// quadrant and `1` in the bottom-left. `J = −Ω` for the symplectic Gram
/// matrix `Ω`, so `J^{-1} = Ω`.
pub fn apply_phi(g: &Matrix) -> Result<Matrix> {
    let omega = symplectic_gram(g.field(), g.nrows())?;
    if !g.is_square() {
        return Err(Error::DimensionMismatch("φ needs a square matrix".into()));
    }
    let j = omega.scale(g.field().neg(1));
    j.mul(&g.inverse()?.transpose())?.mul(&omega)
}

/// `(B^⊥, A^⊥)`: the point of `φ(g)` when `(A, B)` is the point of `g`.
pub fn phi_point(pt: &VarietyPoint) -> Result<VarietyPoint> {
    let omega = symplectic_gram(pt.field(), pt.ambient())?;
    VarietyPoint::new(pt.b().perp(&omega)?, pt.a().perp(&omega)?)
}

/// `B = A^⊥` and the form is nondegenerate on `A`.
pub(crate) fn isotropy_holds(pt: &VarietyPoint, gram: &Matrix) -> Result<bool> {
    if pt.a().perp(gram)? != *pt.b() {
        return Ok(false);
    }
    let basis = pt.a().basis();
    let restricted = basis.mul(gram)?.mul(&basis.transpose())?;
    Ok(restricted.rank() == pt.m())
}

fn half(num: i64) -> BigRational {
    BigRational::new(num.into(), 2.into())
}

/// Columns, in the local target basis `(e_{-j}, e_{-i}, e_i, e_j)`, of the
/// images of `(e_{-b}, e_{-a}, e_a, e_b)` for a channel-1 and a channel-2
/// quotient edge `{i, j}`, `i < j`, with `A` source `a` and `B` source `b`.
fn pair_block(channel: u8) -> [[BigRational; 4]; 4] {
    let z = BigRational::zero;
    let o = |v: i64| BigRational::from_integer(v.into());
    if channel == 1 {
        [
            [half(1), half(-1), z(), z()],
            [half(1), half(1), z(), z()],
            [z(), z(), o(1), o(1)],
            [z(), z(), o(-1), o(1)],
        ]
    } else {
        [
            [half(1), z(), half(-1), z()],
            [z(), o(1), z(), o(-1)],
            [half(1), z(), half(1), z()],
            [z(), o(1), z(), o(1)],
        ]
    }
}

/// Symplectic representative over `Q`, assembled blockwise from the quotient
/// of `S` on the double corona.
pub fn symplectic_template(s: &Matching) -> Result<RationalMatrix> {
    let spec = s.spec();
    let q = quotient_matching(s)?;
    let r = spec.r() as i32;
    let m = q.len() as i32;
    let (mut next_a, mut next_b) = (1..=m, m + 1..=r);
    let mut g = RationalMatrix::zeros(spec.p(), spec.p());
    let mut put = |src: i32, dst: i32, v: BigRational| g.set(spec.position(dst), spec.position(src), v);
    let mut touched = vec![false; r as usize + 1];
    for e in q.edges() {
        match *e {
            Edge::Pendant { i } => {
                let a = next_a.next().expect("one A source per pendant");
                put(a, i, BigRational::one());
                put(-a, -i, BigRational::one());
                touched[i as usize] = true;
            }
            Edge::Internal { i, j, channel } => {
                let a = next_a.next().expect("one A source per pair");
                let b = next_b.next().expect("one B source per pair");
                let targets = [-j, -i, i, j];
                let sources = [-b, -a, a, b];
                for (col, src) in pair_block(channel).into_iter().zip(sources) {
                    for (v, &dst) in col.into_iter().zip(&targets) {
                        if !v.is_zero() {
                            put(src, dst, v);
                        }
                    }
                }
                touched[i as usize] = true;
                touched[j as usize] = true;
            }
        }
    }
    for i in 1..=r {
        if !touched[i as usize] {
            let b = next_b.next().expect("one B source per free vertex");
            put(b, i, BigRational::one());
            put(-b, -i, BigRational::one());
        }
    }
    Ok(g)
}

/// A `g` with `φ(g) = g` whose point lies in the orbit of `S`. Checked:
/// `φ(g) = g`, the point satisfies the isotropy predicate, and it classifies
/// back to `S`.
pub fn symplectic_representative(s: &Matching, field: PrimeField) -> Result<Matrix> {
    if field.is_binary() {
        return Err(Error::CharacteristicTwo);
    }
    let g = symplectic_template(s)?.reduce(field)?;
    if apply_phi(&g)? != g {
        return Err(Error::RepresentativeCheck(format!("representative of {s} is not fixed by φ")));
    }
    let d = s.spec().p();
    let pt = VarietyPoint::from_group_element(&g, &a_slots(s.spec(), s.len()))?;
    if !isotropy_holds(&pt, &symplectic_gram(field, d)?)? {
        return Err(Error::RepresentativeCheck(format!("point of {s} fails the isotropy predicate")));
    }
    let got = Classifier::shared(s.len(), d - s.len(), field)?.classify_point(&pt)?;
    if got != s.to_positions() {
        return Err(Error::RepresentativeCheck(format!("symplectic representative of {s} classifies as {got}")));
    }
    Ok(g)
}
