use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactla::{rref_in_place, Matrix, PrimeField, Subspace};
use crate::quiverrep::VarietyPoint;

/// Default cap on `|X(F_q)|`.
pub const DEFAULT_BUDGET: u128 = 2_000_000;

/// Gaussian binomial `[d choose k]_q`.
pub fn gaussian_binomial(d: usize, k: usize, q: u32) -> BigUint {
    if k > d {
        return BigUint::from(0u32);
    }
    let q = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= q.pow((d - i) as u32) - 1u32;
        den *= q.pow((i + 1) as u32) - 1u32;
    }
    num / den
}

/// `|X(F_q)| = [m+n choose m]_q · q^{mn}`.
pub fn point_count(m: usize, n: usize, field: PrimeField) -> BigUint {
    let q = field.q() as u32;
    gaussian_binomial(m + n, m, q) * BigUint::from(q).pow((m * n) as u32)
}

/// Refuses configurations with more than `budget` points.
pub fn check_budget(m: usize, n: usize, field: PrimeField, budget: u128) -> Result<u128> {
    let required = point_count(m, n, field).to_u128().unwrap_or(u128::MAX);
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    Ok(required)
}

/// Packed encoding of points of `X(F_q)` for fixed `(m, n, q)`: the RREF
/// bases of `A` (m rows) and `B` (n rows) stacked into a `d × d` array,
/// `field.bits()` bits per entry, row-major from the low end of a `u128`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PointSpace {
    field: PrimeField,
    m: usize,
    n: usize,
}

impl PointSpace {
    pub fn new(m: usize, n: usize, field: PrimeField) -> Result<Self> {
        let d = m + n;
        if d * d * field.bits() as usize > 128 {
            return Err(Error::Invalid(format!("points of F_{}^{d} do not fit a 128-bit key", field.q())));
        }
        Ok(PointSpace { field, m, n })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }
    pub fn m(&self) -> usize {
        self.m
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn d(&self) -> usize {
        self.m + self.n
    }

    pub fn pack(&self, buf: &[u8]) -> u128 {
        let bits = self.field.bits();
        buf.iter().enumerate().fold(0u128, |k, (i, &e)| k | (e as u128) << (i as u32 * bits))
    }

    pub fn unpack(&self, key: u128, buf: &mut [u8]) {
        let bits = self.field.bits();
        let mask = (1u128 << bits) - 1;
        for (i, e) in buf.iter_mut().enumerate() {
            *e = ((key >> (i as u32 * bits)) & mask) as u8;
        }
    }

    /// Brings both blocks of `buf` back to RREF.
    pub(crate) fn normalize(&self, buf: &mut [u8]) {
        let (d, m) = (self.d(), self.m);
        let (a, b) = buf.split_at_mut(m * d);
        let ra = rref_in_place(self.field, a, m, d);
        let rb = rref_in_place(self.field, b, self.n, d);
        debug_assert_eq!((ra, rb), (m, self.n));
    }

    pub fn key_of(&self, pt: &VarietyPoint) -> Result<u128> {
        if (pt.m(), pt.n()) != (self.m, self.n) || pt.ambient() != self.d() {
            return Err(Error::ShapeMismatch);
        }
        if pt.field() != self.field {
            return Err(Error::FieldMismatch(pt.field().q(), self.field.q()));
        }
        let mut buf = pt.a().basis().data().to_vec();
        buf.extend_from_slice(pt.b().basis().data());
        Ok(self.pack(&buf))
    }

    pub fn point(&self, key: u128) -> VarietyPoint {
        let d = self.d();
        let mut buf = vec![0u8; d * d];
        self.unpack(key, &mut buf);
        let b = buf.split_off(self.m * d);
        let a = Subspace::from_generators(Matrix::new(self.field, self.m, d, buf).expect("A block"));
        let b = Subspace::from_generators(Matrix::new(self.field, self.n, d, b).expect("B block"));
        VarietyPoint::new(a, b).expect("packed keys encode complementary pairs")
    }

    /// `g · (A, B)` for an invertible `g`.
    pub fn act(&self, g: &Matrix, key: u128) -> Result<u128> {
        let pt = self.point(key);
        let moved = VarietyPoint::new(pt.a().image(g)?, pt.b().image(g)?)?;
        self.key_of(&moved)
    }

    /// Every point exactly once: `A` runs over RREF shapes (pivot sets, then
    /// free entries), and its complements are the row spaces of
    /// `e_j + Σ_r M[j][r] a_r` over non-pivot `j` and all `n × m` matrices `M`.
    pub fn keys(&self) -> Vec<u128> {
        let (m, d) = (self.m, self.d());
        let shards: Vec<Vec<usize>> = combinations(d, m);
        shards.par_iter().map(|pivots| self.keys_for_pivots(pivots)).flatten_iter().collect()
    }

    fn keys_for_pivots(&self, pivots: &[usize]) -> Vec<u128> {
        let (m, n, d) = (self.m, self.n, self.d());
        let q = self.field.q();
        let f = self.field;
        let non_pivots: Vec<usize> = (0..d).filter(|c| !pivots.contains(c)).collect();
        let free: Vec<(usize, usize)> = (0..m)
            .flat_map(|r| non_pivots.iter().filter(move |&&c| c > pivots[r]).map(move |&c| (r, c)))
            .collect();
        let mut out = Vec::new();
        let mut a = vec![0u8; m * d];
        let mut fill = vec![0u8; free.len()];
        let mut coeffs = vec![0u8; n * m];
        let mut buf = vec![0u8; d * d];
        loop {
            a.iter_mut().for_each(|x| *x = 0);
            for (r, &p) in pivots.iter().enumerate() {
                a[r * d + p] = 1;
            }
            for (&(r, c), &v) in free.iter().zip(&fill) {
                a[r * d + c] = v;
            }
            coeffs.iter_mut().for_each(|x| *x = 0);
            loop {
                buf[..m * d].copy_from_slice(&a);
                for (j, &c) in non_pivots.iter().enumerate() {
                    let row = &mut buf[(m + j) * d..(m + j + 1) * d];
                    row.iter_mut().for_each(|x| *x = 0);
                    row[c] = 1;
                    for r in 0..m {
                        let k = coeffs[j * m + r];
                        if k != 0 {
                            for col in 0..d {
                                row[col] = f.add(row[col], f.mul(k, a[r * d + col]));
                            }
                        }
                    }
                }
                rref_in_place(f, &mut buf[m * d..], n, d);
                out.push(self.pack(&buf));
                if !increment(&mut coeffs, q) {
                    break;
                }
            }
            if !increment(&mut fill, q) {
                break;
            }
        }
        out
    }
}

/// Odometer step over `F_q^len`; `false` once it wraps to zero.
fn increment(digits: &mut [u8], q: u8) -> bool {
    for x in digits.iter_mut() {
        *x += 1;
        if *x < q {
            return true;
        }
        *x = 0;
    }
    false
}

fn combinations(d: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, d: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for c in start..d {
            cur.push(c);
            go(c + 1, d, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, d, k, &mut Vec::new(), &mut out);
    out
}

/// Points of `X(F_q)` in enumeration order, after the budget check.
pub fn enumerate_points(
    m: usize,
    n: usize,
    field: PrimeField,
    budget: u128,
) -> Result<impl Iterator<Item = VarietyPoint>> {
    check_budget(m, n, field, budget)?;
    let space = PointSpace::new(m, n, field)?;
    Ok(space.keys().into_iter().map(move |k| space.point(k)))
}

/// A generator of the upper-triangular Borel subgroup of `GL_d(F_q)`:
/// `x_i(c) = I + c E_{i,i+1}` or the torus element with `t` at `(i, i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BorelGen {
    Elementary { i: usize, c: u8 },
    Torus { i: usize, t: u8 },
}

impl BorelGen {
    pub fn matrix(&self, d: usize, field: PrimeField) -> Matrix {
        let mut g = Matrix::identity(field, d);
        match *self {
            BorelGen::Elementary { i, c } => g.set(i, i + 1, c),
            BorelGen::Torus { i, t } => g.set(i, i, t),
        }
        g
    }

    /// Left multiplication on the column vectors whose transposes are the
    /// rows of `buf` (a column operation on the row basis).
    pub(crate) fn apply(&self, field: PrimeField, buf: &mut [u8], d: usize) {
        for row in buf.chunks_exact_mut(d) {
            match *self {
                BorelGen::Elementary { i, c } => row[i] = field.add(row[i], field.mul(c, row[i + 1])),
                BorelGen::Torus { i, t } => row[i] = field.mul(row[i], t),
            }
        }
    }
}

pub fn borel_generator_list(d: usize, field: PrimeField) -> Vec<BorelGen> {
    let mut out = Vec::new();
    for i in 0..d.saturating_sub(1) {
        for c in field.units() {
            out.push(BorelGen::Elementary { i, c });
        }
    }
    if !field.is_binary() {
        let t = field.primitive_root();
        out.extend((0..d).map(|i| BorelGen::Torus { i, t }));
    }
    out
}

pub fn borel_generators(d: usize, field: PrimeField) -> Vec<Matrix> {
    borel_generator_list(d, field).iter().map(|g| g.matrix(d, field)).collect()
}

/// `|B(F_q)| = (q − 1)^d q^{d(d−1)/2}`.
pub fn borel_order(d: usize, field: PrimeField) -> BigUint {
    let q = field.q() as u32;
    BigUint::from(q - 1).pow(d as u32) * BigUint::from(q).pow((d * d.saturating_sub(1) / 2) as u32)
}

/// Order of the group generated by `gens` (all `d × d`), by closure.
pub fn closure_order(gens: &[Matrix], d: usize, field: PrimeField) -> usize {
    let id = Matrix::identity(field, d);
    let mut seen = std::collections::HashSet::new();
    seen.insert(id.data().to_vec());
    let mut queue = vec![id];
    while let Some(x) = queue.pop() {
        for g in gens {
            let y = g.mul(&x).expect("square");
            if seen.insert(y.data().to_vec()) {
                queue.push(y);
            }
        }
    }
    seen.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    const F2: PrimeField = PrimeField::F2;
    const F3: PrimeField = PrimeField::F3;

    #[test]
    fn point_counts() {
        assert_eq!(point_count(1, 1, F2), BigUint::from(6u32));
        assert_eq!(point_count(2, 2, F2), BigUint::from(560u32));
        assert_eq!(point_count(2, 2, F3), BigUint::from(10530u32));
        assert_eq!(point_count(2, 3, F2), BigUint::from(9920u32));
        assert_eq!(point_count(3, 3, F2), BigUint::from(714240u32));
        assert_eq!(point_count(2, 3, F3), BigUint::from(882090u32));
        assert_eq!(point_count(4, 0, F3), BigUint::from(1u32));
    }

    #[test]
    fn enumeration_is_exhaustive_and_distinct() {
        for (m, n, f) in [(1, 1, F2), (2, 2, F2), (1, 2, F3), (2, 2, F3), (0, 3, F3), (3, 0, F2)] {
            let space = PointSpace::new(m, n, f).unwrap();
            let keys = space.keys();
            let distinct: std::collections::HashSet<_> = keys.iter().collect();
            assert_eq!(distinct.len(), keys.len());
            assert_eq!(BigUint::from(keys.len()), point_count(m, n, f));
            for &k in keys.iter().take(200) {
                let pt = space.point(k);
                assert_eq!(space.key_of(&pt).unwrap(), k);
            }
        }
    }

    #[test]
    fn budget_refusal() {
        assert_eq!(check_budget(3, 3, F2, 1000), Err(Error::BudgetExceeded { required: 714240, budget: 1000 }));
        assert!(enumerate_points(1, 1, F2, 5).is_err());
        assert_eq!(enumerate_points(1, 1, F2, 6).unwrap().count(), 6);
    }

    #[test]
    fn generated_groups_are_borel() {
        assert_eq!(closure_order(&borel_generators(2, F2), 2, F2), 2);
        assert_eq!(closure_order(&borel_generators(2, F3), 2, F3), 12);
        for f in [F2, F3, PrimeField::F5] {
            for d in 1..=3 {
                let gens = borel_generators(d, f);
                assert!(gens.iter().all(|g| g.is_upper_triangular() && g.is_invertible()));
                assert_eq!(BigUint::from(closure_order(&gens, d, f)), borel_order(d, f), "d={d} q={}", f.q());
            }
        }
    }

    #[test]
    fn packed_action_matches_matrix_action() {
        for (m, n, f) in [(2, 2, F3), (1, 3, F2), (2, 1, PrimeField::F5)] {
            let space = PointSpace::new(m, n, f).unwrap();
            let d = m + n;
            let mut buf = vec![0u8; d * d];
            for &k in space.keys().iter().step_by(7).take(150) {
                for g in borel_generator_list(d, f) {
                    space.unpack(k, &mut buf);
                    g.apply(f, &mut buf, d);
                    space.normalize(&mut buf);
                    assert_eq!(space.pack(&buf), space.act(&g.matrix(d, f), k).unwrap());
                }
            }
        }
    }

    #[test]
    fn oversized_keys_rejected() {
        assert!(PointSpace::new(4, 4, F3).is_ok());
        assert!(PointSpace::new(4, 5, F3).is_err());
    }
}
