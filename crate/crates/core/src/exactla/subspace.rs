use serde::{Deserialize, Serialize};

use super::field::PrimeField;
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// A subspace of `F_q^ambient`, stored as its reduced row echelon basis.
/// The representation is unique, so derived equality is subspace equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    /// Span of the rows of `generators`.
    pub fn from_generators(generators: Matrix) -> Self {
        let ambient = generators.ncols();
        let r = generators.rref();
        let f = generators.field();
        let data = r.echelon.data()[..r.rank * ambient].to_vec();
        let basis = Matrix::new(f, r.rank, ambient, data).expect("echelon slice");
        Subspace { ambient, basis }
    }

    pub fn from_rows<R: AsRef<[i64]>>(field: PrimeField, ambient: usize, rows: &[R]) -> Result<Self> {
        if rows.is_empty() {
            return Ok(Self::zero(field, ambient));
        }
        let m = Matrix::from_rows(field, rows)?;
        if m.ncols() != ambient {
            return Err(Error::DimensionMismatch(format!(
                "generators of length {} in ambient {ambient}",
                m.ncols()
            )));
        }
        Ok(Self::from_generators(m))
    }

    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(field, 0, ambient) }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(field, ambient) }
    }

    /// Span of the unit vectors `e_c` for the given (0-based) coordinates.
    pub fn coordinate(field: PrimeField, ambient: usize, coords: &[usize]) -> Self {
        let mut m = Matrix::zeros(field, coords.len(), ambient);
        for (r, &c) in coords.iter().enumerate() {
            m.set(r, c, 1);
        }
        Self::from_generators(m)
    }

    /// `⟨e_1, …, e_k⟩`, the k-th space of the standard flag.
    pub fn standard_flag(field: PrimeField, ambient: usize, k: usize) -> Self {
        Self::coordinate(field, ambient, &(0..k).collect::<Vec<_>>())
    }

    pub fn field(&self) -> PrimeField {
        self.basis.field()
    }
    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        let row = Matrix::new(self.field(), 1, self.ambient, v.to_vec()).expect("vector");
        let stacked = self.basis.vstack(&row).expect("same width");
        stacked.rank() == self.dim()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.sum(other).map(|s| s.dim() == other.dim()).unwrap_or(false)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        Ok(Self::from_generators(self.basis.vstack(&other.basis)?))
    }

    /// `{x : ⟨u, x⟩ = 0 for all u ∈ U}` under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        if self.dim() == 0 {
            return Self::full(self.field(), self.ambient);
        }
        self.basis.nullspace()
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let stacked = self.annihilator().basis.vstack(&other.annihilator().basis)?;
        if stacked.nrows() == 0 {
            return Ok(Self::full(self.field(), self.ambient));
        }
        Ok(stacked.nullspace())
    }

    /// `U ∩ V = 0` and `U + V` is the ambient space.
    pub fn is_complementary(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        if self.dim() + other.dim() != self.ambient {
            return Ok(false);
        }
        Ok(self.basis.vstack(&other.basis)?.rank() == self.ambient)
    }

    /// Orthogonal complement under the bilinear form with Gram matrix `gram`:
    /// `{x : uᵀ G x = 0 for all u ∈ U}`.
    pub fn perp(&self, gram: &Matrix) -> Result<Subspace> {
        if gram.nrows() != self.ambient || gram.ncols() != self.ambient {
            return Err(Error::DimensionMismatch("Gram matrix size".into()));
        }
        if self.dim() == 0 {
            return Ok(Self::full(self.field(), self.ambient));
        }
        Ok(self.basis.mul(gram)?.nullspace())
    }

    /// Image under the linear map `v ↦ g v`.
    pub fn image(&self, g: &Matrix) -> Result<Subspace> {
        if g.ncols() != self.ambient {
            return Err(Error::DimensionMismatch("map domain".into()));
        }
        if self.dim() == 0 {
            return Ok(Self::zero(self.field(), g.nrows()));
        }
        Ok(Self::from_generators(self.basis.mul(&g.transpose())?))
    }

    /// Canonical byte string: `[q, ambient, dim, echelon entries…]`.
    pub fn key(&self) -> Vec<u8> {
        let mut k = Vec::with_capacity(3 + self.basis.data().len());
        k.push(self.field().q());
        k.push(self.ambient as u8);
        k.push(self.dim() as u8);
        k.extend_from_slice(self.basis.data());
        k
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(self.field().q(), other.field().q()));
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "ambient {} vs {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }
}
