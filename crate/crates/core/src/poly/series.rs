use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::IntPoly;
use crate::error::{Error, Result};

/// Exact rational, always stored reduced with positive denominator.
pub type RatNum = BigRational;

/// Power-series prefix `Σ_{n≤N} aₙ xⁿ` over `Q`; always `N+1` coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatSeries {
    coeffs: Vec<RatNum>,
}

impl RatSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![RatNum::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = RatNum::one();
        s
    }

    /// Pads or truncates to exactly `order + 1` coefficients.
    pub fn from_coeffs(mut coeffs: Vec<RatNum>, order: usize) -> Self {
        coeffs.resize(order + 1, RatNum::zero());
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[BigInt], order: usize) -> Self {
        Self::from_coeffs(
            coeffs.iter().take(order + 1).cloned().map(RatNum::from_integer).collect(),
            order,
        )
    }

    pub fn from_poly(p: &IntPoly, order: usize) -> Self {
        Self::from_ints(p.coeffs(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[RatNum] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &RatNum {
        &self.coeffs[n]
    }

    /// Integer coefficients, or `None` if any is fractional.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn inverse(&self) -> Result<Self> {
        series_inverse(self)
    }
}

/// Multiplicative inverse up to the same order. Convolution recurrence
/// `b₀ = 1/f₀`, `bₙ = −(1/f₀) Σ_{j=1..n} f_j b_{n−j}`.
pub fn series_inverse(f: &RatSeries) -> Result<RatSeries> {
    let f0 = &f.coeffs[0];
    if f0.is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let inv0 = f0.recip();
    let n = f.order();
    let mut b: Vec<RatNum> = Vec::with_capacity(n + 1);
    b.push(inv0.clone());
    for k in 1..=n {
        let mut acc = RatNum::zero();
        for j in 1..=k {
            if !f.coeffs[j].is_zero() {
                acc += &f.coeffs[j] * &b[k - j];
            }
        }
        b.push(-(acc * &inv0));
    }
    Ok(RatSeries { coeffs: b })
}

impl Add for &RatSeries {
    type Output = RatSeries;
    fn add(self, rhs: &RatSeries) -> RatSeries {
        let n = self.order().min(rhs.order());
        RatSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &rhs.coeffs[i]).collect(),
        }
    }
}

impl Sub for &RatSeries {
    type Output = RatSeries;
    fn sub(self, rhs: &RatSeries) -> RatSeries {
        let n = self.order().min(rhs.order());
        RatSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] - &rhs.coeffs[i]).collect(),
        }
    }
}

/// Truncated Cauchy product at the smaller of the two orders.
impl Mul for &RatSeries {
    type Output = RatSeries;
    fn mul(self, rhs: &RatSeries) -> RatSeries {
        let n = self.order().min(rhs.order());
        let mut out = vec![RatNum::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] += a * b;
            }
        }
        RatSeries { coeffs: out }
    }
}
