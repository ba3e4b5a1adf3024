//! Exact rational matrices. Used for integer determinants and for
//! representatives whose entries involve `1/2`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::PrimeField;
use super::matrix::Matrix;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_integers<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let data = rows
            .iter()
            .flat_map(|r| r.as_ref().iter().map(|&v| BigRational::from_integer(v.into())))
            .collect();
        RationalMatrix { rows: rows.len(), cols, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }
    pub fn ncols(&self) -> usize {
        self.cols
    }
    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }
    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.data[r * self.cols + c] = v;
    }
    pub fn entries(&self) -> &[BigRational] {
        &self.data
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch("rational product".into()));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = a * other.get(k, j);
                    out.data[i * other.cols + j] += v;
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> RationalMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Exact determinant by Gaussian elimination over `Q`.
    pub fn determinant(&self) -> Result<BigRational> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = BigRational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return Ok(BigRational::zero());
            };
            if p != col {
                for c in 0..n {
                    a.swap(col * n + c, p * n + c);
                }
                det = -det;
            }
            let pivot = a[col * n + col].clone();
            det *= &pivot;
            for r in col + 1..n {
                let factor = &a[r * n + col] / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let sub = &factor * &a[col * n + c];
                    a[r * n + c] -= sub;
                }
            }
        }
        Ok(det)
    }

    /// Reduces into `F_q`; every denominator must be invertible mod `q`.
    pub fn reduce(&self, field: PrimeField) -> Result<Matrix> {
        let q = BigInt::from(field.q());
        let mut data = Vec::with_capacity(self.data.len());
        for v in &self.data {
            let num = v.numer().mod_floor(&q).to_u8().unwrap();
            let den = v.denom().mod_floor(&q).to_u8().unwrap();
            if den == 0 {
                return Err(Error::CharacteristicTwo);
            }
            data.push(field.mul(num, field.inv(den)));
        }
        Matrix::new(field, self.rows, self.cols, data)
    }

    /// Whether every entry lies in `{0, ±1, ±1/2}`.
    pub fn entries_in_half_set(&self) -> bool {
        let half = BigRational::new(1.into(), 2.into());
        self.data.iter().all(|v| {
            let a = v.abs();
            a.is_zero() || a.is_one() || a == half
        })
    }
}

/// Renders a rational as `"num/den"` (or just `"num"` when integral).
pub fn rational_string(v: &BigRational) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_of_permutation_and_triangular() {
        let p = RationalMatrix::from_integers(&[[0, 1, 0], [1, 0, 0], [0, 0, 1]]);
        assert_eq!(p.determinant().unwrap(), BigRational::from_integer((-1).into()));
        let u = RationalMatrix::from_integers(&[[1, 5, 7], [0, 1, 2], [0, 0, 1]]);
        assert_eq!(u.determinant().unwrap(), BigRational::one());
        let s = RationalMatrix::from_integers(&[[1, 2], [2, 4]]);
        assert!(s.determinant().unwrap().is_zero());
    }

    #[test]
    fn reduce_half_mod_three() {
        let mut m = RationalMatrix::zeros(1, 1);
        m.set(0, 0, BigRational::new(1.into(), 2.into()));
        assert_eq!(m.reduce(PrimeField::F3).unwrap().get(0, 0), 2);
        assert_eq!(m.reduce(PrimeField::F2), Err(Error::CharacteristicTwo));
        assert!(m.entries_in_half_set());
    }

    #[test]
    fn formats_rationals() {
        assert_eq!(rational_string(&BigRational::new(7.into(), 6.into())), "7/6");
        assert_eq!(rational_string(&BigRational::from_integer(3.into())), "3");
    }
}
