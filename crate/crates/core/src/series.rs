//! Exact univariate polynomials, truncated power series and fractional spectra.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `binom(n, k)` as an exact integer, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n as u64).fold(BigInt::one(), |acc, v| acc * BigInt::from(v))
}

/// Dense polynomial with exact rational coefficients, index = exponent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial {
    coeffs: Vec<Rational>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `X`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, exp: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); exp + 1];
        coeffs[exp] = c;
        Self::new(coeffs)
    }

    /// `X + a`.
    pub fn linear(a: Rational) -> Self {
        Self::new(vec![a, Rational::one()])
    }

    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `X^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|v| v * c).collect())
    }

    pub fn evaluate(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn evaluate_int(&self, x: i64) -> Rational {
        self.evaluate(&int(x))
    }

    /// `p(X + a)`.
    pub fn shift(&self, a: &Rational) -> Self {
        let lin = Self::linear(a.clone());
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * &lin) + &Self::constant(c.clone())
        })
    }

    /// `p(-X)`.
    pub fn negate_argument(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    /// `z^d p(1/z)`; requires `d >= deg p`.
    pub fn reverse(&self, d: usize) -> Result<Self> {
        let Some(deg) = self.degree() else {
            return Ok(Self::zero());
        };
        if d < deg {
            return Err(Error::DegreeTooLarge {
                degree: deg,
                bound: d,
            });
        }
        Ok(Self::new((0..=d).map(|i| self.coeff(d - i)).collect()))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if sd < dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let q = &rem[k + dd] / &lead;
            if q.is_zero() {
                continue;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.leading().recip())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Smallest positive integer multiple with integer coefficients.
    pub fn primitive_integer_coeffs(&self) -> Vec<BigInt> {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        if g.is_zero() {
            return ints;
        }
        ints.into_iter().map(|v| v / &g).collect()
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::NAN))
            .collect()
    }

    /// Renders with the given variable name, highest degree first.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let unit = a.is_one();
            if !unit || i == 0 {
                out.push_str(&format!("{}", a));
                if i > 0 {
                    out.push(' ');
                }
            }
            match i {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{i}")),
            }
        }
        out
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("X"))
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPolynomial::new(out)
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        QPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Interpolating polynomial through `(x_i, y_i)` with distinct nodes.
pub fn lagrange_interpolate(points: &[(Rational, Rational)]) -> QPolynomial {
    let mut acc = QPolynomial::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = QPolynomial::one();
        let mut denom = Rational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = &basis * &QPolynomial::linear(-xj);
            denom *= xi - xj;
        }
        acc = &acc + &basis.scale(&(yi / denom));
    }
    acc
}

/// `binom(X + k, n)` as a polynomial in `X`.
pub fn binomial_polynomial(k: i64, n: usize) -> QPolynomial {
    let mut p = QPolynomial::one();
    for t in 0..n as i64 {
        p = &p * &QPolynomial::linear(int(k - t));
    }
    p.scale(&Rational::from_integer(factorial(n)).recip())
}

/// Coefficient vector of nonnegative integers, e.g. a delta- or theta-vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IntVector(pub Vec<u64>);

impl IntVector {
    pub fn zeros(len: usize) -> Self {
        Self(vec![0; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> u64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&v| v == 0)
    }

    /// `v_i == v_{d-i}` for every index, entries beyond the length counting as zero.
    pub fn is_palindromic(&self, d: usize) -> bool {
        let top = d.max(self.len().saturating_sub(1));
        (0..=top).all(|i| self.get(i) == if i <= d { self.get(d - i) } else { 0 })
    }

    pub fn to_polynomial(&self) -> QPolynomial {
        QPolynomial::new(self.0.iter().map(|&v| int(v as i64)).collect())
    }

    /// Index of the first nonzero entry.
    pub fn lowest_nonzero(&self) -> Option<usize> {
        self.0.iter().position(|&v| v != 0)
    }

    pub fn add(&self, other: &IntVector) -> IntVector {
        let n = self.len().max(other.len());
        IntVector((0..n).map(|i| self.get(i) + other.get(i)).collect())
    }

    pub fn convolve(&self, other: &IntVector) -> IntVector {
        if self.is_empty() || other.is_empty() {
            return IntVector::default();
        }
        let mut out = vec![0u64; self.len() + other.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntVector(out)
    }

    /// Pads or trims trailing zeros to exactly `len` entries; `None` if a nonzero would be cut.
    pub fn resized(&self, len: usize) -> Option<IntVector> {
        if self.0.iter().skip(len).any(|&v| v != 0) {
            return None;
        }
        Some(IntVector((0..len).map(|i| self.get(i)).collect()))
    }

    /// Converts exact rational coefficients; `None` if any is negative or fractional.
    pub fn from_polynomial(p: &QPolynomial, len: usize) -> Option<IntVector> {
        if p.degree().is_some_and(|d| d >= len) {
            return None;
        }
        (0..len)
            .map(|i| {
                let c = p.coeff(i);
                if c.is_integer() && !c.is_negative() {
                    c.to_integer().to_u64()
                } else {
                    None
                }
            })
            .collect::<Option<Vec<_>>>()
            .map(IntVector)
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// Multiset of rational exponents in `[0, dim]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FractionalSpectrum {
    dim: usize,
    atoms: BTreeMap<Rational, u64>,
}

impl FractionalSpectrum {
    pub fn new(dim: usize, atoms: BTreeMap<Rational, u64>) -> Result<Self> {
        let top = int(dim as i64);
        for (beta, &mult) in &atoms {
            if mult == 0 {
                return Err(Error::InvalidSpectrum(format!(
                    "exponent {beta} has multiplicity 0"
                )));
            }
            if beta.is_negative() || *beta > top {
                return Err(Error::ExponentOutOfRange {
                    exponent: format!("{beta}"),
                    dim,
                });
            }
        }
        Ok(Self { dim, atoms })
    }

    /// Builds from `(exponent, multiplicity)` pairs, merging repeated exponents.
    pub fn from_pairs<I>(dim: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Rational, u64)>,
    {
        let mut atoms = BTreeMap::new();
        for (beta, mult) in pairs {
            *atoms.entry(beta).or_insert(0) += mult;
        }
        Self::new(dim, atoms)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn atoms(&self) -> &BTreeMap<Rational, u64> {
        &self.atoms
    }

    pub fn multiplicity(&self, beta: &Rational) -> u64 {
        self.atoms.get(beta).copied().unwrap_or(0)
    }

    /// Total multiplicity (the Milnor number).
    pub fn mu(&self) -> u64 {
        self.atoms.values().sum()
    }

    pub fn has_only_integer_exponents(&self) -> bool {
        self.atoms.keys().all(|b| b.is_integer())
    }

    /// Multiplicity of `beta` equals multiplicity of `dim - beta` for all `beta`.
    pub fn is_symmetric(&self) -> bool {
        let top = int(self.dim as i64);
        self.atoms
            .iter()
            .all(|(b, &m)| self.multiplicity(&(&top - b)) == m)
    }
}

impl fmt::Display for FractionalSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.atoms.is_empty() {
            return f.write_str("0");
        }
        for (i, (b, m)) in self.atoms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if *m != 1 {
                write!(f, "{m}")?;
            }
            write!(f, "z^{b}")?;
        }
        Ok(())
    }
}

/// Power series with integer exponents, truncated at `z^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn new(order: usize, mut coeffs: Vec<Rational>) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(other.order());
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs: out }
    }

    pub fn mul_polynomial(&self, p: &QPolynomial) -> TruncatedSeries {
        self.mul(&TruncatedSeries::new(
            self.order(),
            p.coeffs().iter().take(self.order() + 1).cloned().collect(),
        ))
    }
}

/// Series with rational exponents, exact for all exponents `<= order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionalSeries {
    order: Rational,
    terms: BTreeMap<Rational, Rational>,
}

impl FractionalSeries {
    pub fn new(order: Rational, terms: BTreeMap<Rational, Rational>) -> Self {
        let terms = terms
            .into_iter()
            .filter(|(e, c)| *e <= order && !c.is_zero())
            .collect();
        Self { order, terms }
    }

    pub fn order(&self) -> &Rational {
        &self.order
    }

    pub fn terms(&self) -> &BTreeMap<Rational, Rational> {
        &self.terms
    }

    pub fn coeff(&self, e: &Rational) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Multiplies by a polynomial with integer exponents; result keeps the same order.
    pub fn mul_polynomial(&self, p: &QPolynomial) -> FractionalSeries {
        let mut out: BTreeMap<Rational, Rational> = BTreeMap::new();
        for (e, c) in &self.terms {
            for (k, a) in p.coeffs().iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let ex = e + int(k as i64);
                if ex > self.order {
                    break;
                }
                *out.entry(ex).or_insert_with(Rational::zero) += c * a;
            }
        }
        FractionalSeries::new(self.order.clone(), out)
    }

    pub fn truncated(&self, max_exponent: &Rational) -> FractionalSeries {
        let order = if *max_exponent < self.order {
            max_exponent.clone()
        } else {
            self.order.clone()
        };
        FractionalSeries::new(order, self.terms.clone())
    }
}

/// `(1 - z)^k` as a polynomial.
pub fn one_minus_z_pow(k: usize) -> QPolynomial {
    QPolynomial::new(
        (0..=k)
            .map(|i| {
                let b = Rational::from_integer(binomial(k as i64, i as i64));
                if i % 2 == 1 {
                    -b
                } else {
                    b
                }
            })
            .collect(),
    )
}

/// Coefficients of `theta(z) / (1 - z)^(n+1)` up to `z^order`.
pub fn series_from_numerator(theta: &IntVector, n: usize, order: usize) -> TruncatedSeries {
    let coeffs = (0..=order)
        .map(|m| {
            let s: BigInt = theta
                .0
                .iter()
                .enumerate()
                .filter(|(i, _)| *i <= m)
                .map(|(i, &t)| BigInt::from(t) * binomial((m - i + n) as i64, n as i64))
                .sum();
            Rational::from_integer(s)
        })
        .collect();
    TruncatedSeries::new(order, coeffs)
}

/// The degree `<= n` polynomial `m -> sum_i theta_i binom(m + n - i, n)`.
pub fn polynomial_from_theta(theta: &IntVector, n: usize) -> QPolynomial {
    theta
        .0
        .iter()
        .enumerate()
        .filter(|(_, &t)| t != 0)
        .fold(QPolynomial::zero(), |acc, (i, &t)| {
            &acc + &binomial_polynomial(n as i64 - i as i64, n).scale(&int(t as i64))
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn series_of_cross_polytope_numerator() {
        let s = series_from_numerator(&IntVector(vec![1, 2, 1]), 2, 3);
        let expect: Vec<Rational> = [1, 5, 13, 25].iter().map(|&v| int(v)).collect();
        assert_eq!(s.coeffs(), &expect[..]);
    }

    #[test]
    fn series_of_unit_numerator_is_binomial() {
        for n in 1..5usize {
            let mut theta = IntVector::zeros(n + 1);
            theta.0[0] = 1;
            let s = series_from_numerator(&theta, n, 6);
            for m in 0..=6usize {
                let b = binomial((m + n) as i64, n as i64);
                assert_eq!(s.coeff(m), Rational::from_integer(b));
            }
        }
        let zero = series_from_numerator(&IntVector::zeros(3), 2, 4);
        assert!(zero.coeffs().iter().all(Zero::is_zero));
    }

    #[test]
    fn polynomial_from_theta_worked_values() {
        // (3/2) m^2 + (3/2) m
        assert_eq!(
            polynomial_from_theta(&IntVector(vec![0, 3, 0]), 2),
            QPolynomial::new(vec![int(0), rat(3, 2), rat(3, 2)])
        );
        assert_eq!(
            polynomial_from_theta(&IntVector(vec![0, 1, 1]), 2),
            QPolynomial::from_ints(&[0, 0, 1])
        );
        assert_eq!(
            polynomial_from_theta(&IntVector(vec![1, 2, 1]), 2),
            QPolynomial::from_ints(&[1, 2, 2])
        );
        assert!(polynomial_from_theta(&IntVector(vec![0, 0, 0]), 2).is_zero());
    }

    #[test]
    fn reverse_examples() {
        let p = QPolynomial::from_ints(&[1, 4, 1]);
        assert_eq!(p.reverse(2).unwrap(), p);
        let z = QPolynomial::from_ints(&[0, 1]);
        assert_eq!(z.reverse(2).unwrap(), z);
        let two_z = QPolynomial::from_ints(&[0, 2]);
        assert_eq!(two_z.reverse(2).unwrap(), two_z);
        assert_eq!(
            two_z.reverse(3).unwrap(),
            QPolynomial::from_ints(&[0, 0, 2])
        );
        assert_eq!(
            QPolynomial::from_ints(&[0, 0, 0, 1]).reverse(2),
            Err(Error::DegreeTooLarge {
                degree: 3,
                bound: 2
            })
        );
    }

    #[test]
    fn ring_operations() {
        let p = QPolynomial::from_ints(&[1, 1]);
        assert_eq!(&p * &p, QPolynomial::from_ints(&[1, 2, 1]));
        assert_eq!(QPolynomial::from_ints(&[1, 2, 2]).evaluate_int(-1), int(1));
        let q = QPolynomial::new(vec![int(0), rat(3, 2), rat(5, 2)]);
        assert_eq!(q.evaluate_int(2), int(13));
        assert!((&p - &p).is_zero());
        assert_eq!(
            QPolynomial::from_ints(&[1, 2, 1]).shift(&int(-1)),
            QPolynomial::from_ints(&[0, 0, 1])
        );
    }

    #[test]
    fn division_and_gcd() {
        let a = QPolynomial::from_ints(&[-1, 0, 1]);
        let b = QPolynomial::from_ints(&[1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, QPolynomial::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        let g = a.gcd(&QPolynomial::from_ints(&[1, 2, 1]));
        assert_eq!(g, b);
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let pts: Vec<_> = [1i64, 5, 13]
            .iter()
            .enumerate()
            .map(|(i, &v)| (int(i as i64), int(v)))
            .collect();
        assert_eq!(
            lagrange_interpolate(&pts),
            QPolynomial::from_ints(&[1, 2, 2])
        );
    }

    #[test]
    fn display_is_readable() {
        let q = QPolynomial::new(vec![int(0), rat(3, 2), rat(5, 2)]);
        assert_eq!(q.display_with("m"), "5/2 m^2 + 3/2 m");
        assert_eq!(QPolynomial::from_ints(&[1, -1]).to_string(), "-X + 1");
    }

    #[test]
    fn spectrum_validation() {
        let mut atoms = BTreeMap::new();
        atoms.insert(rat(5, 2), 1);
        assert!(matches!(
            FractionalSpectrum::new(2, atoms),
            Err(Error::ExponentOutOfRange { .. })
        ));
        let s = FractionalSpectrum::from_pairs(2, [(rat(1, 2), 1), (int(1), 3), (rat(3, 2), 1)])
            .unwrap();
        assert_eq!(s.mu(), 5);
        assert!(s.is_symmetric());
        let t = FractionalSpectrum::from_pairs(2, [(int(0), 1), (int(1), 1)]).unwrap();
        assert!(!t.is_symmetric());
    }

    #[test]
    fn palindromes() {
        assert!(IntVector(vec![1, 2, 1]).is_palindromic(2));
        assert!(!IntVector(vec![1, 2]).is_palindromic(1));
        assert!(IntVector(vec![0, 1, 1, 0]).is_palindromic(3));
        assert!(IntVector(vec![0, 1, 1, 0]).is_palindromic(3));
        assert!(IntVector(vec![0, 3, 0]).is_palindromic(2));
    }
}
