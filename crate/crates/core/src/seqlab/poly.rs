use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::counts::b_count;
use crate::error::{Error, Result};

/// A polynomial with exact rational coefficients, lowest degree first and
/// no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPoly {
    coeffs: Vec<BigRational>,
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn zero() -> Self {
        RationalPoly { coeffs: Vec::new() }
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(BigRational::is_integer)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    fn add(&self, other: &RationalPoly) -> RationalPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let at = |p: &RationalPoly, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
        RationalPoly::new((0..len).map(|i| at(self, i) + at(other, i)).collect())
    }

    fn scale(&self, c: &BigRational) -> RationalPoly {
        RationalPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `(x − r)`.
    fn times_linear(&self, r: &BigRational) -> RationalPoly {
        let mut out = vec![BigRational::zero(); self.coeffs.len() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[i + 1] += a;
            out[i] -= a * r;
        }
        RationalPoly::new(out)
    }

    /// The unique polynomial of degree `< points.len()` through `points`
    /// (distinct abscissae), in Lagrange form.
    pub fn interpolate(points: &[(BigRational, BigRational)]) -> Result<RationalPoly> {
        let mut total = RationalPoly::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut basis = RationalPoly::new(vec![BigRational::one()]);
            let mut denom = BigRational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i != j {
                    if xi == xj {
                        return Err(Error::Invalid("repeated interpolation node".into()));
                    }
                    basis = basis.times_linear(xj);
                    denom *= xi - xj;
                }
            }
            total = total.add(&basis.scale(&(yi / denom)));
        }
        Ok(total)
    }

    /// Coefficients as `"num/den"` strings, lowest degree first.
    pub fn coefficient_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(fraction).collect()
    }
}

/// `"num/den"` in lowest terms, denominator always written.
pub fn fraction(v: &BigRational) -> String {
    format!("{}/{}", v.numer(), v.denom())
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("({c})m"),
                _ => format!("({c})m^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub m: usize,
    pub predicted: String,
    pub actual: String,
}

/// Interpolant of `m ↦ b_{m,n}` through `m = 0..=2n+1` and its checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interpolation {
    pub n: usize,
    pub poly: RationalPoly,
    pub values: Vec<BigUint>,
    pub predictions: Vec<Prediction>,
}

#[derive(Serialize)]
struct InterpolationJson<'a> {
    n: usize,
    coefficients: Vec<String>,
    degree: usize,
    leading: String,
    integral: bool,
    predictions_checked: usize,
    predictions: &'a [Prediction],
}

impl Interpolation {
    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> BigRational {
        self.poly.leading()
    }

    pub fn integral(&self) -> bool {
        self.poly.is_integral()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&InterpolationJson {
            n: self.n,
            coefficients: self.poly.coefficient_strings(),
            degree: self.degree(),
            leading: fraction(&self.leading()),
            integral: self.integral(),
            predictions_checked: self.predictions.len(),
            predictions: &self.predictions,
        })
        .expect("report serializes")
    }
}

fn rational(v: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(v.clone()))
}

/// Interpolates `b_{m,n}` in `m` through `m = 0..=2n+1`, requires degree
/// exactly `2n + 1`, and checks the values at `m = 2n+2 ..= 2n+1+extra`.
pub fn interpolate_b(n: usize, extra: usize) -> Result<Interpolation> {
    let nodes = 2 * n + 2;
    let values = (0..nodes).map(|m| b_count(m, n)).collect::<Result<Vec<_>>>()?;
    let points: Vec<_> = values.iter().enumerate().map(|(m, v)| (BigRational::from_integer(m.into()), rational(v))).collect();
    let poly = RationalPoly::interpolate(&points)?;
    let expected = 2 * n + 1;
    if poly.degree() != Some(expected) {
        return Err(Error::DegreeDefect { expected, got: poly.degree().unwrap_or(0) });
    }
    let mut predictions = Vec::with_capacity(extra);
    for m in nodes..nodes + extra {
        let predicted = poly.eval(&BigRational::from_integer(m.into()));
        let actual = b_count(m, n)?;
        if predicted != rational(&actual) {
            return Err(Error::PredictionMismatch { m, predicted: fraction(&predicted), actual: actual.to_string() });
        }
        predictions.push(Prediction { m, predicted: fraction(&predicted), actual: actual.to_string() });
    }
    Ok(Interpolation { n, poly, values, predictions })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn interpolation_recovers_polynomials() {
        let p = RationalPoly::new(vec![q(1, 2), q(0, 1), q(-3, 4), q(2, 1)]);
        let points: Vec<_> = (0..4).map(|x| (q(x, 1), p.eval(&q(x, 1)))).collect();
        assert_eq!(RationalPoly::interpolate(&points).unwrap(), p);
        assert_eq!(p.degree(), Some(3));
        assert!(!p.is_integral());
        assert_eq!(RationalPoly::new(vec![q(0, 1)]).degree(), None);
        let dup = [(q(1, 1), q(0, 1)), (q(1, 1), q(1, 1))];
        assert!(RationalPoly::interpolate(&dup).is_err());
    }

    #[test]
    fn b_with_n_zero_is_m_plus_one() {
        let r = interpolate_b(0, 3).unwrap();
        assert_eq!(r.poly, RationalPoly::new(vec![q(1, 1), q(1, 1)]));
        assert!(r.integral());
        assert_eq!(r.predictions.len(), 3);
    }

    #[test]
    fn b_with_n_one() {
        let r = interpolate_b(1, 2).unwrap();
        assert_eq!(r.degree(), 3);
        assert_eq!(r.leading(), q(7, 6));
        assert!(!r.integral());
        let json = r.to_json();
        assert!(json.contains(r#""leading":"7/6""#) && json.contains(r#""integral":false"#), "{json}");
        assert!(json.contains(r#""predictions_checked":2"#));
    }
}
