//! Exact truncated q-series over arbitrary-precision rationals.
//!
//! A [`QSeries`] stores the coefficients of q^0 .. q^N for an explicit
//! truncation order N (its *precision*). Binary operations truncate to the
//! smaller operand precision, and reading a coefficient beyond the precision
//! is a hard error rather than a silent zero: a truncated series carries no
//! information there.
//!
//! The constructors provided here are the normalized Eisenstein series
//! E2 = 1 - 24 sum sigma_1(n) q^n, E4 = 1 + 240 sum sigma_3(n) q^n,
//! E6 = 1 - 504 sum sigma_5(n) q^n, the Jacobi theta function
//! theta = 1 + 2 sum q^(n^2), and the level-2 combination
//! E4inf = (E4(q) - E4(q^2)) / 240, whose q^n coefficient is
//! sigma_3(n) - sigma_3(n/2) (second term only for even n). E4inf is the
//! theta-like series counting 2-primitive class representatives, which is why
//! it shows up in every telltale formula.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// The coefficient field: arbitrary-precision rationals in canonical form
/// (reduced, positive denominator). Exactness is the whole point; nothing in
/// this crate ever rounds.
pub type Rational = BigRational;

/// Convenience constructor for integer rationals.
pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Convenience constructor for a ratio of machine integers (d != 0).
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Errors raised by series construction and coefficient access.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    /// Coefficient index past the truncation order. Never silently zero.
    #[error("coefficient index {index} exceeds series precision {precision}")]
    CoeffOutOfRange { index: usize, precision: usize },
    /// Only the weights 2, 4, 6 have Eisenstein constructors here.
    #[error("unsupported Eisenstein weight {0} (expected 2, 4, or 6)")]
    UnsupportedWeight(u32),
    /// Substituting q -> q^0 is not a series operation.
    #[error("substitute_power requires exponent m >= 1")]
    ZeroPower,
    /// A constructor was given an empty coefficient list.
    #[error("a series needs at least the q^0 coefficient")]
    Empty,
}

/// Parity of an exponent, for splitting a series into its even and odd parts.
/// Exponent 0 counts as even.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// A power series in q truncated at q^precision, with exact rational
/// coefficients. Immutable: every operation returns a new series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<Rational>,
}

impl QSeries {
    /// Builds a series from coefficients of q^0, q^1, ... (at least one).
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::Empty);
        }
        Ok(QSeries { coeffs })
    }

    /// Builds the series sum f(n) q^n for n = 0..=precision.
    pub fn from_fn(precision: usize, f: impl Fn(usize) -> Rational) -> Self {
        QSeries {
            coeffs: (0..=precision).map(f).collect(),
        }
    }

    /// The zero series at the given precision.
    pub fn zero(precision: usize) -> Self {
        QSeries {
            coeffs: vec![Rational::zero(); precision + 1],
        }
    }

    /// The constant series 1 at the given precision.
    pub fn one(precision: usize) -> Self {
        Self::from_fn(precision, |n| {
            if n == 0 {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    /// Truncation order N: coefficients of q^0 ..= q^N are stored.
    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The exact coefficient of q^n, or an error past the precision.
    pub fn coeff(&self, n: usize) -> Result<&Rational, SeriesError> {
        self.coeffs.get(n).ok_or(SeriesError::CoeffOutOfRange {
            index: n,
            precision: self.precision(),
        })
    }

    /// All stored coefficients, index = exponent.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Pointwise sum, truncated to the smaller precision.
    pub fn add(&self, rhs: &QSeries) -> QSeries {
        let n = self.precision().min(rhs.precision());
        QSeries::from_fn(n, |i| &self.coeffs[i] + &rhs.coeffs[i])
    }

    /// Pointwise difference, truncated to the smaller precision.
    pub fn sub(&self, rhs: &QSeries) -> QSeries {
        let n = self.precision().min(rhs.precision());
        QSeries::from_fn(n, |i| &self.coeffs[i] - &rhs.coeffs[i])
    }

    /// Cauchy product, truncated to the smaller precision.
    pub fn mul(&self, rhs: &QSeries) -> QSeries {
        let n = self.precision().min(rhs.precision());
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        QSeries { coeffs: out }
    }

    /// Scalar multiple by an exact rational.
    pub fn scale(&self, c: &Rational) -> QSeries {
        QSeries::from_fn(self.precision(), |i| c * &self.coeffs[i])
    }

    /// Negation.
    pub fn neg(&self) -> QSeries {
        QSeries::from_fn(self.precision(), |i| -&self.coeffs[i])
    }

    /// The differential operator D = q d/dq: coefficient n becomes n * a_n.
    pub fn derive(&self) -> QSeries {
        QSeries::from_fn(self.precision(), |i| {
            Rational::from_integer(BigInt::from(i)) * &self.coeffs[i]
        })
    }

    /// Substitutes q -> q^m (m >= 1), keeping the precision: the coefficient
    /// of q^(m n) in the result is a_n, and source coefficients beyond N/m
    /// fall outside the truncation.
    pub fn substitute_power(&self, m: usize) -> Result<QSeries, SeriesError> {
        if m == 0 {
            return Err(SeriesError::ZeroPower);
        }
        let n = self.precision();
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            match i.checked_mul(m) {
                Some(k) if k <= n => out[k] = a.clone(),
                _ => break,
            }
        }
        Ok(QSeries { coeffs: out })
    }

    /// Keeps the coefficients whose exponent has the given parity and zeroes
    /// the rest (exponent 0 is even).
    pub fn parity_part(&self, parity: Parity) -> QSeries {
        let keep = match parity {
            Parity::Even => 0,
            Parity::Odd => 1,
        };
        QSeries::from_fn(self.precision(), |i| {
            if i % 2 == keep {
                self.coeffs[i].clone()
            } else {
                Rational::zero()
            }
        })
    }

    /// Shorthand for the even-exponent part.
    pub fn even_part(&self) -> QSeries {
        self.parity_part(Parity::Even)
    }

    /// Shorthand for the odd-exponent part.
    pub fn odd_part(&self) -> QSeries {
        self.parity_part(Parity::Odd)
    }

    /// True if every stored coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The smallest exponent at which the two series differ, compared up
    /// to the shared precision; None when they agree everywhere there.
    pub fn first_difference(&self, other: &QSeries) -> Option<usize> {
        let last = self.precision().min(other.precision());
        (0..=last).find(|&i| self.coeffs[i] != other.coeffs[i])
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})q")?,
                _ => write!(f, "({c})q^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.precision() + 1)
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&QSeries> for &QSeries {
            type Output = QSeries;
            fn $method(self, rhs: &QSeries) -> QSeries {
                QSeries::$method(self, rhs)
            }
        }
    };
}

impl_binop!(Add, add);
impl_binop!(Sub, sub);
impl_binop!(Mul, mul);

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries::neg(self)
    }
}

/// The divisor sum sigma_k(n) = sum of d^k over the divisors d of n.
///
/// Panics if n = 0 (the divisor sum is undefined there).
pub fn divisor_sum(k: u32, n: u64) -> BigUint {
    assert!(n > 0, "divisor_sum is undefined at n = 0");
    let mut total = BigUint::zero();
    let mut d = 1u64;
    // Walk divisor pairs (d, n/d) up to sqrt(n).
    while d * d <= n {
        if n.is_multiple_of(d) {
            total += BigUint::from(d).pow(k);
            let e = n / d;
            if e != d {
                total += BigUint::from(e).pow(k);
            }
        }
        d += 1;
    }
    total
}

fn biguint_rational(n: BigUint) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The normalized Eisenstein series of weight 2, 4, or 6:
/// E2 = 1 - 24 sum sigma_1(n) q^n, E4 = 1 + 240 sum sigma_3(n) q^n,
/// E6 = 1 - 504 sum sigma_5(n) q^n.
pub fn eisenstein(weight: u32, precision: usize) -> Result<QSeries, SeriesError> {
    let (scale, power) = match weight {
        2 => (-24i64, 1u32),
        4 => (240, 3),
        6 => (-504, 5),
        other => return Err(SeriesError::UnsupportedWeight(other)),
    };
    Ok(QSeries::from_fn(precision, |n| {
        if n == 0 {
            Rational::one()
        } else {
            rational(scale) * biguint_rational(divisor_sum(power, n as u64))
        }
    }))
}

/// The Jacobi theta function 1 + 2 sum_{n >= 1} q^(n^2): detects squares.
pub fn theta(precision: usize) -> QSeries {
    let mut coeffs = vec![Rational::zero(); precision + 1];
    coeffs[0] = Rational::one();
    let mut n = 1usize;
    while let Some(sq) = n.checked_mul(n).filter(|&sq| sq <= precision) {
        coeffs[sq] = rational(2);
        n += 1;
    }
    QSeries { coeffs }
}

/// E4inf = (E4(q) - E4(q^2)) / 240, with q^n coefficient
/// sigma_3(n) - sigma_3(n/2) (the subtraction only for even n) and constant
/// term 0.
pub fn e4_infinity(precision: usize) -> QSeries {
    QSeries::from_fn(precision, |n| {
        if n == 0 {
            return Rational::zero();
        }
        let mut c = BigInt::from(divisor_sum(3, n as u64));
        if n % 2 == 0 {
            c -= BigInt::from(divisor_sum(3, (n / 2) as u64));
        }
        Rational::from_integer(c)
    })
}
