//! Univariate polynomials in `q` with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense polynomial in `q`; `coeffs[k]` is the coefficient of `q^k`.
/// Trailing zero coefficients are never stored, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The polynomial `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * q^deg`.
    pub fn monomial<T: Into<BigInt>>(c: T, deg: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c.into();
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// The constant value when the polynomial has degree at most zero.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.coeffs.len() {
            0 => Some(BigInt::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Value at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Value at `q = 1`, the sum of coefficients.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    /// Divide by `q^k`, which must divide the polynomial.
    pub fn unshift(&self, k: usize) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.low_degree()? < k {
            return None;
        }
        Some(QPoly {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Substitute `q -> q^k`.
    pub fn compose_power(&self, k: usize) -> Self {
        if self.is_zero() || k == 1 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        result
    }

    /// Quotient and remainder on division by a monic polynomial.
    pub fn div_rem_monic(&self, divisor: &QPoly) -> (QPoly, QPoly) {
        let dd = divisor
            .degree()
            .expect("division by the zero polynomial");
        assert!(divisor.coeffs[dd].is_one(), "divisor must be monic");
        if self.coeffs.len() <= dd {
            return (QPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let lead = std::mem::take(&mut rem[k]);
            if lead.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs[..dd].iter().enumerate() {
                rem[k - dd + i] -= &lead * d;
            }
            quot[k - dd] = lead;
        }
        rem.truncate(dd);
        (QPoly::from_coeffs(quot), QPoly::from_coeffs(rem))
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, compact: bool) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let (plus, minus) = if compact { ("+", "-") } else { (" + ", " - ") };
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, "{minus}")?;
            } else {
                write!(f, "{plus}")?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// `q + 2*q^2 + q^3`; the alternate form `{:#}` drops the spaces (`1+q`).
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, f.alternate())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self:#})")
    }
}

impl FromStr for QPoly {
    type Err = Error;

    /// Accepts sums of terms `c`, `q`, `c*q`, `cq`, `q^k`, `c*q^k` with optional whitespace.
    fn from_str(s: &str) -> Result<Self> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let bad = || Error::Parse(format!("bad polynomial term in {s:?}"));
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = text.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                terms.push(&text[start..i]);
                start = i;
            }
        }
        terms.push(&text[start..]);
        let mut acc = QPoly::zero();
        for term in terms {
            let (sign, body) = match term.as_bytes().first() {
                Some(b'-') => (-1, &term[1..]),
                Some(b'+') => (1, &term[1..]),
                _ => (1, term),
            };
            if body.is_empty() {
                return Err(bad());
            }
            let (coef, deg) = match body.find('q') {
                None => (body.parse::<BigInt>().map_err(|_| bad())?, 0usize),
                Some(pos) => {
                    let c = body[..pos].trim_end_matches('*');
                    let coef = if c.is_empty() {
                        BigInt::one()
                    } else {
                        c.parse::<BigInt>().map_err(|_| bad())?
                    };
                    let rest = &body[pos + 1..];
                    let deg = if rest.is_empty() {
                        1
                    } else if let Some(e) = rest.strip_prefix('^') {
                        e.parse::<usize>().map_err(|_| bad())?
                    } else {
                        return Err(bad());
                    };
                    (coef, deg)
                }
            };
            acc += QPoly::monomial(coef * sign, deg);
        }
        Ok(acc)
    }
}

impl serde::Serialize for QPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{self:#}"))
    }
}

impl<'de> serde::Deserialize<'de> for QPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for QPoly {
    fn from(c: i64) -> Self {
        QPoly::constant(c)
    }
}

impl From<BigInt> for QPoly {
    fn from(c: BigInt) -> Self {
        QPoly::constant(c)
    }
}

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(mut self, rhs: QPoly) -> QPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        let trimmed = std::mem::take(&mut self.coeffs);
        *self = QPoly::from_coeffs(trimmed);
    }
}

impl AddAssign for QPoly {
    fn add_assign(&mut self, rhs: QPoly) {
        *self += &rhs;
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -self.clone()
    }
}

impl SubAssign<&QPoly> for QPoly {
    fn sub_assign(&mut self, rhs: &QPoly) {
        *self += &(-rhs);
    }
}

impl Sub<&QPoly> for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(mut self, rhs: QPoly) -> QPoly {
        self -= &rhs;
        self
    }
}

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl MulAssign<&QPoly> for QPoly {
    fn mul_assign(&mut self, rhs: &QPoly) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::zero(), |acc, p| acc + p)
    }
}

impl std::iter::Product for QPoly {
    fn product<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::one(), |acc, p| acc * p)
    }
}
