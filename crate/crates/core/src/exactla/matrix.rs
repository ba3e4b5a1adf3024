use std::fmt;

use serde::{Deserialize, Serialize};

use super::bits;
use super::field::PrimeField;
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Dense row-major matrix over a small prime field.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

/// Result of Gaussian elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub echelon: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Solution set `{ particular + k : k ∈ kernel }` of a linear system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub particular: Vec<u8>,
    pub kernel: Subspace,
}

/// In-place reduced row echelon form of a flat row-major buffer over `field`.
/// Pivots are chosen as the first nonzero entry; returns the rank.
pub fn rref_in_place(field: PrimeField, data: &mut [u8], nrows: usize, ncols: usize) -> usize {
    debug_assert_eq!(data.len(), nrows * ncols);
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| data[r * ncols + col] != 0) else {
            continue;
        };
        if p != rank {
            for c in 0..ncols {
                data.swap(rank * ncols + c, p * ncols + c);
            }
        }
        let lead = data[rank * ncols + col];
        if lead != 1 {
            let inv = field.inv(lead);
            for c in col..ncols {
                let v = &mut data[rank * ncols + c];
                *v = field.mul(*v, inv);
            }
        }
        for r in 0..nrows {
            if r == rank {
                continue;
            }
            let factor = data[r * ncols + col];
            if factor == 0 {
                continue;
            }
            for c in col..ncols {
                let sub = field.mul(factor, data[rank * ncols + c]);
                let v = &mut data[r * ncols + c];
                *v = field.sub(*v, sub);
            }
        }
        rank += 1;
    }
    rank
}

/// Rank by forward elimination only; `data` is left in row echelon form.
pub fn rank_in_place(field: PrimeField, data: &mut [u8], nrows: usize, ncols: usize) -> usize {
    debug_assert_eq!(data.len(), nrows * ncols);
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| data[r * ncols + col] != 0) else {
            continue;
        };
        if p != rank {
            for c in col..ncols {
                data.swap(rank * ncols + c, p * ncols + c);
            }
        }
        let inv = field.inv(data[rank * ncols + col]);
        let (head, tail) = data.split_at_mut((rank + 1) * ncols);
        let pivot = &head[rank * ncols..];
        for row in tail.chunks_exact_mut(ncols) {
            let factor = row[col];
            if factor == 0 {
                continue;
            }
            let factor = field.mul(factor, inv);
            for c in col..ncols {
                row[c] = field.sub(row[c], field.mul(factor, pivot[c]));
            }
        }
        rank += 1;
    }
    rank
}

impl Matrix {
    pub fn new(field: PrimeField, rows: usize, cols: usize, data: Vec<u8>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(&bad) = data.iter().find(|&&v| v >= field.q()) {
            return Err(Error::Invalid(format!("entry {bad} is not a residue mod {}", field.q())));
        }
        Ok(Matrix { field, rows, cols, data })
    }

    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from integer rows, reducing each entry mod `q`.
    pub fn from_rows<R: AsRef<[i64]>>(field: PrimeField, rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            data.extend(r.iter().map(|&v| field.from_i64(v)));
        }
        Ok(Matrix { field, rows: rows.len(), cols, data })
    }

    pub fn from_columns(field: PrimeField, nrows: usize, columns: &[Vec<u8>]) -> Self {
        let mut m = Self::zeros(field, nrows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            for (r, &v) in col.iter().enumerate() {
                m.set(r, c, v);
            }
        }
        m
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }
    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn ncols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn data(&self) -> &[u8] {
        &self.data
    }
    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u8) {
        debug_assert!(v < self.field.q());
        self.data[r * self.cols + c] = v;
    }
    #[inline]
    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u8> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[u8]> {
        self.data.chunks(self.cols.max(1)).take(self.rows)
    }

    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        self.rows_iter().map(|r| r.iter().map(|&v| v as i64).collect()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = &mut out.data[i * other.cols + j];
                    *v = f.add(*v, f.mul(a, other.data[k * other.cols + j]));
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[u8]) -> Result<Vec<u8>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        let f = self.field;
        Ok(self
            .rows_iter()
            .map(|row| row.iter().zip(v).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b))))
            .collect())
    }

    pub fn scale(&self, s: u8) -> Matrix {
        let f = self.field;
        let mut out = self.clone();
        out.data.iter_mut().for_each(|v| *v = f.mul(*v, s));
        out
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.cols != other.cols && self.rows > 0 && other.rows > 0 {
            return Err(Error::DimensionMismatch("vstack column counts differ".into()));
        }
        let cols = if self.rows > 0 { self.cols } else { other.cols };
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix { field: self.field, rows: self.rows + other.rows, cols, data })
    }

    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack row counts differ".into()));
        }
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        Ok(Matrix { field: self.field, rows: self.rows, cols, data })
    }

    /// Reduced row echelon form. Over `F_2` with at most 64 columns the rows
    /// are word-packed and eliminated with XOR.
    pub fn rref(&self) -> Rref {
        if self.field.is_binary() && self.cols <= 64 {
            self.rref_packed()
        } else {
            self.rref_dense()
        }
    }

    /// Byte-per-entry elimination for every field; the reference path.
    pub fn rref_dense(&self) -> Rref {
        let mut data = self.data.clone();
        let rank = rref_in_place(self.field, &mut data, self.rows, self.cols);
        let echelon = Matrix { field: self.field, rows: self.rows, cols: self.cols, data };
        let pivots = (0..rank)
            .map(|r| echelon.row(r).iter().position(|&v| v != 0).unwrap())
            .collect();
        Rref { echelon, rank, pivots }
    }

    fn rref_packed(&self) -> Rref {
        let mut words: Vec<u64> = self.rows_iter().map(bits::pack).collect();
        words.resize(self.rows, 0);
        let rank = bits::rref_in_place(&mut words, self.cols);
        let pivots = bits::pivots(&words[..rank]);
        let mut data = vec![0u8; self.rows * self.cols];
        for (r, &w) in words.iter().enumerate() {
            bits::unpack(w, self.cols, &mut data[r * self.cols..(r + 1) * self.cols]);
        }
        let echelon = Matrix { field: self.field, rows: self.rows, cols: self.cols, data };
        Rref { echelon, rank, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Right kernel `{x : A x = 0}` as a subspace of `F_q^cols`.
    pub fn nullspace(&self) -> Subspace {
        let Rref { echelon, rank, pivots } = self.rref();
        let f = self.field;
        let n = self.cols;
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(f, free.len(), n);
        for (b, &fc) in free.iter().enumerate() {
            basis.set(b, fc, 1);
            for (r, &pc) in pivots.iter().enumerate().take(rank) {
                basis.set(b, pc, f.neg(echelon.get(r, fc)));
            }
        }
        Subspace::from_generators(basis)
    }

    /// Solves `A x = b`; `None` when inconsistent.
    pub fn solve(&self, b: &[u8]) -> Result<Option<Solution>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let column = Matrix { field: self.field, rows: self.rows, cols: 1, data: b.to_vec() };
        let aug = self.hstack(&column)?;
        let Rref { echelon, rank, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut particular = vec![0u8; self.cols];
        for (r, &pc) in pivots.iter().enumerate().take(rank) {
            particular[pc] = echelon.get(r, self.cols);
        }
        Ok(Some(Solution { particular, kernel: self.nullspace() }))
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.field, n))?;
        let Rref { echelon, rank, pivots } = aug.rref();
        if rank < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for r in 0..n {
            inv.data[r * n..(r + 1) * n].copy_from_slice(&echelon.row(r)[n..]);
        }
        Ok(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|r| (0..r.min(self.cols)).all(|c| self.get(r, c) == 0))
    }

    fn check_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            Err(Error::FieldMismatch(self.field.q(), other.field.q()))
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix/F{}[", self.field.q())?;
        for (i, r) in self.rows_iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let s: Vec<String> = r.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", s.join(" "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forward_rank_matches_rref() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for f in [PrimeField::F2, PrimeField::F3, PrimeField::F7] {
            for _ in 0..200 {
                let (r, c) = (rng.gen_range(1..9), rng.gen_range(1..9));
                let data: Vec<u8> = (0..r * c).map(|_| rng.gen_range(0..f.q())).collect();
                let (mut a, mut b) = (data.clone(), data);
                assert_eq!(rank_in_place(f, &mut a, r, c), rref_in_place(f, &mut b, r, c));
            }
        }
    }

    #[test]
    fn identity_has_full_rank() {
        assert_eq!(Matrix::identity(PrimeField::F2, 3).rank(), 3);
    }

    #[test]
    fn zero_matrix_rank_and_kernel() {
        let z = Matrix::zeros(PrimeField::F3, 2, 3);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.nullspace().dim(), 3);
    }

    #[test]
    fn all_ones_over_f2_has_rank_one() {
        let m = Matrix::from_rows(PrimeField::F2, &[[1, 1], [1, 1]]).unwrap();
        assert_eq!(m.rank(), 1);
        assert_eq!(m.rref_dense().rank, 1);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let f = PrimeField::F5;
        let a = Matrix::from_rows(f, &[[1, 2], [2, 4]]).unwrap();
        let sol = a.solve(&[3, 1]).unwrap().unwrap();
        assert_eq!(a.mul_vec(&sol.particular).unwrap(), vec![3, 1]);
        assert_eq!(sol.kernel.dim(), 1);
        assert!(a.solve(&[1, 1]).unwrap().is_none());
    }

    #[test]
    fn inverse_roundtrip() {
        let f = PrimeField::F7;
        let a = Matrix::from_rows(f, &[[2, 1, 0], [0, 3, 1], [1, 0, 2]]).unwrap();
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(f, 3));
        let s = Matrix::from_rows(f, &[[1, 2], [2, 4]]).unwrap();
        assert_eq!(s.inverse(), Err(Error::Singular));
    }

    #[test]
    fn dimension_errors() {
        let a = Matrix::identity(PrimeField::F2, 2);
        let b = Matrix::identity(PrimeField::F2, 3);
        assert!(matches!(a.mul(&b), Err(Error::DimensionMismatch(_))));
        assert!(a.solve(&[1]).is_err());
        let c = Matrix::identity(PrimeField::F3, 2);
        assert!(matches!(a.mul(&c), Err(Error::FieldMismatch(2, 3))));
    }
}
