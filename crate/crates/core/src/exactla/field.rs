use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A small prime field `F_q`, `q ∈ {2, 3, 5, 7}`. Elements are residues in `0..q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct PrimeField {
    q: u8,
}

impl PrimeField {
    pub const F2: PrimeField = PrimeField { q: 2 };
    pub const F3: PrimeField = PrimeField { q: 3 };
    pub const F5: PrimeField = PrimeField { q: 5 };
    pub const F7: PrimeField = PrimeField { q: 7 };

    pub fn new(q: u32) -> Result<Self> {
        match q {
            2 | 3 | 5 | 7 => Ok(PrimeField { q: q as u8 }),
            _ => Err(Error::UnsupportedField(q)),
        }
    }

    #[inline]
    pub fn q(self) -> u8 {
        self.q
    }

    #[inline]
    pub fn is_binary(self) -> bool {
        self.q == 2
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        if a >= b {
            a - b
        } else {
            a + self.q - b
        }
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        MUL[self.q as usize][(a as usize) << 3 | b as usize]
    }

    /// Multiplicative inverse; `a` must be nonzero.
    #[inline]
    pub fn inv(self, a: u8) -> u8 {
        debug_assert!(a != 0 && a < self.q);
        // a^(q-2)
        let mut r = 1u8;
        for _ in 0..self.q - 2 {
            r = self.mul(r, a);
        }
        r
    }

    /// Reduces an arbitrary integer into the field.
    pub fn from_i64(self, v: i64) -> u8 {
        v.rem_euclid(self.q as i64) as u8
    }

    /// Symmetric lift of a residue into `(-q/2, q/2]`.
    pub fn to_signed(self, a: u8) -> i64 {
        let a = a as i64;
        let q = self.q as i64;
        if 2 * a > q {
            a - q
        } else {
            a
        }
    }

    /// Smallest generator of the multiplicative group.
    pub fn primitive_root(self) -> u8 {
        match self.q {
            2 => 1,
            3 => 2,
            5 => 2,
            7 => 3,
            _ => unreachable!(),
        }
    }

    /// All nonzero elements in increasing order.
    pub fn units(self) -> impl Iterator<Item = u8> {
        1..self.q
    }

    /// Bits needed to store one residue.
    pub fn bits(self) -> u32 {
        match self.q {
            2 => 1,
            3 => 2,
            _ => 3,
        }
    }
}

const fn mul_table() -> [[u8; 64]; 8] {
    let mut t = [[0u8; 64]; 8];
    let mut q = 2;
    while q < 8 {
        let mut a = 0;
        while a < q {
            let mut b = 0;
            while b < q {
                t[q][a << 3 | b] = ((a * b) % q) as u8;
                b += 1;
            }
            a += 1;
        }
        q += 1;
    }
    t
}

static MUL: [[u8; 64]; 8] = mul_table();

impl TryFrom<u32> for PrimeField {
    type Error = Error;
    fn try_from(q: u32) -> Result<Self> {
        PrimeField::new(q)
    }
}

impl From<PrimeField> for u32 {
    fn from(f: PrimeField) -> u32 {
        f.q as u32
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses_multiply_to_one() {
        for q in [2, 3, 5, 7] {
            let f = PrimeField::new(q).unwrap();
            for a in f.units() {
                assert_eq!(f.mul(a, f.inv(a)), 1, "q={q} a={a}");
            }
        }
    }

    #[test]
    fn primitive_roots_generate() {
        for q in [3, 5, 7] {
            let f = PrimeField::new(q).unwrap();
            let g = f.primitive_root();
            let mut seen = std::collections::HashSet::new();
            let mut x = 1;
            for _ in 0..q - 1 {
                seen.insert(x);
                x = f.mul(x, g);
            }
            assert_eq!(seen.len() as u32, q - 1);
        }
    }

    #[test]
    fn rejects_other_q() {
        assert_eq!(PrimeField::new(4), Err(Error::UnsupportedField(4)));
        assert!(PrimeField::new(11).is_err());
    }

    #[test]
    fn reduction() {
        let f = PrimeField::F3;
        assert_eq!(f.from_i64(-1), 2);
        assert_eq!(f.to_signed(2), -1);
        assert_eq!(f.neg(1), 2);
        assert_eq!(f.sub(0, 1), 2);
    }
}
