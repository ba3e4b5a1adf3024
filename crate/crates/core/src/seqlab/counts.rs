use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matchgraph::{count_minus_invariant, enumerate_matchings, GraphSpec};

/// Rows `0..=pmax` of `x_{p,m} = x_{p−1,m−1} + x_{p−1,m} + k(p−1) x_{p−2,m−1}`
/// with `x_{0,0} = x_{1,0} = x_{1,1} = 1`.
fn recurrence_rows(pmax: usize, k: u32) -> Vec<Vec<BigUint>> {
    let mut rows: Vec<Vec<BigUint>> = vec![vec![BigUint::one()]];
    if pmax >= 1 {
        rows.push(vec![BigUint::one(), BigUint::one()]);
    }
    let get = |row: &Vec<BigUint>, m: isize| -> BigUint {
        if m < 0 || m as usize >= row.len() {
            BigUint::zero()
        } else {
            row[m as usize].clone()
        }
    };
    for p in 2..=pmax {
        let row = (0..=p as isize)
            .map(|m| {
                get(&rows[p - 1], m - 1) + get(&rows[p - 1], m) + BigUint::from(k * (p as u32 - 1)) * get(&rows[p - 2], m - 1)
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// Row `p` of `a_{p,·}` by the recurrence.
pub fn a_row(p: usize) -> Vec<BigUint> {
    recurrence_rows(p, 1).pop().expect("row p")
}

/// Row `p` of `c_{p,·}` by the recurrence.
pub fn c_row(p: usize) -> Vec<BigUint> {
    recurrence_rows(p, 2).pop().expect("row p")
}

fn entry(row: Vec<BigUint>, m: usize) -> BigUint {
    row.into_iter().nth(m).unwrap_or_default()
}

/// `a_{p,m}`: m-matchings of the corona `C_p`, by the recurrence.
pub fn a_count(p: usize, m: usize) -> BigUint {
    entry(a_row(p), m)
}

/// `c_{p,m}`: m-matchings of the double corona, by the recurrence.
pub fn c_count(p: usize, m: usize) -> BigUint {
    entry(c_row(p), m)
}

/// `c_{p,m}` extended by zero to negative arguments.
fn c_signed(p: isize, m: isize) -> BigUint {
    if p < 0 || m < 0 {
        BigUint::zero()
    } else {
        c_count(p as usize, m as usize)
    }
}

/// Visits every matching, as opposed to the counting recursions.
pub fn a_enumerated(p: usize, m: usize) -> BigUint {
    BigUint::from(enumerate_matchings(GraphSpec::plain(p), m).count())
}

pub fn c_enumerated(p: usize, m: usize) -> BigUint {
    BigUint::from(enumerate_matchings(GraphSpec::double(p), m).count())
}

/// `b_{m,n}` by visiting minus-invariant `2m`-matchings of `C_{2m+2n+1}`.
pub fn b_enumerated(m: usize, n: usize) -> BigUint {
    count_minus_invariant(GraphSpec::signed_for(2 * m + 2 * n + 1), 2 * m).expect("odd corona is signed0")
}

/// `b_{m,n}` by splitting dual `(2n+1)`-matchings by whether they use the
/// center pendant and by their horizontal edges:
/// `Σ_l C(m+n, 2l) c_{m+n−2l, n−l} + Σ_l C(m+n, 2l+1) c_{m+n−2l−1, n−l}`.
pub fn b_identity(m: usize, n: usize) -> BigUint {
    let s = (m + n) as isize;
    let mut total = BigUint::zero();
    for l in 0..=n as isize {
        let (even, odd) = (2 * l, 2 * l + 1);
        if even <= s {
            total += binomial(BigUint::from(s as usize), BigUint::from(even as usize)) * c_signed(s - even, n as isize - l);
        }
        if odd <= s {
            total += binomial(BigUint::from(s as usize), BigUint::from(odd as usize)) * c_signed(s - odd, n as isize - l);
        }
    }
    total
}

/// `b_{m,n}`, requiring the two methods to agree.
pub fn b_count(m: usize, n: usize) -> Result<BigUint> {
    let (e, i) = (b_enumerated(m, n), b_identity(m, n));
    if e != i {
        return Err(Error::BCountMismatch { m, n, enumerated: e.to_string(), identity: i.to_string() });
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn small_values() {
        assert_eq!(a_count(2, 1), big(3));
        assert_eq!(a_count(3, 1), big(6));
        assert_eq!(a_count(4, 2), big(21));
        assert_eq!(a_count(6, 3), big(215));
        assert_eq!(a_row(4), [1u64, 10, 21, 10, 1].map(big).to_vec());
        assert_eq!(c_count(2, 1), big(4));
        assert_eq!(c_count(3, 1), big(9));
        assert_eq!(a_count(3, 5), big(0));
        for p in 0..8 {
            assert_eq!(a_count(p, 0), big(1));
        }
    }

    #[test]
    fn b_values() {
        for n in 0..4 {
            assert_eq!(b_count(0, n).unwrap(), big(1));
        }
        assert_eq!(b_count(1, 0).unwrap(), big(2));
        assert_eq!(b_count(2, 0).unwrap(), big(3));
        assert_eq!(b_count(1, 1).unwrap(), big(7));
        assert_eq!(b_count(2, 1).unwrap(), big(25));
        assert_eq!(b_count(3, 1).unwrap(), big(62));
    }

    #[test]
    fn recurrence_against_enumeration() {
        for p in 0..=7 {
            for m in 0..=p {
                assert_eq!(a_count(p, m), a_enumerated(p, m));
                assert_eq!(c_count(p, m), c_enumerated(p, m));
            }
        }
    }
}
