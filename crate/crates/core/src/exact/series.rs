use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{factorial, UniPoly};
use crate::error::{Error, Result};

/// Power series in `t` truncated at a fixed order, with polynomial
/// coefficients in `x`.
///
/// Coefficients are the ordinary ones: `coeffs[n]` multiplies `t^n`.
/// Exponential generating function values `n! * coeffs[n]` are produced only
/// by [`TruncSeries::egf_coeff`] and consumed only by [`TruncSeries::from_egf`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    order: usize,
    coeffs: Vec<UniPoly>,
}

impl TruncSeries {
    /// Builds a series, dropping terms above `order` and padding with zeros.
    pub fn new(order: usize, mut coeffs: Vec<UniPoly>) -> Self {
        coeffs.resize(order + 1, UniPoly::zero());
        Self { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, UniPoly::one())
    }

    pub fn constant(order: usize, c: UniPoly) -> Self {
        Self::new(order, vec![c])
    }

    /// From EGF-normalized coefficients `a_n`, i.e. the series `Σ a_n t^n / n!`.
    pub fn from_egf(order: usize, egf: Vec<UniPoly>) -> Self {
        let coeffs = egf
            .into_iter()
            .take(order + 1)
            .enumerate()
            .map(|(n, a)| a.scale(&BigRational::new(BigInt::one(), factorial(n as u64))))
            .collect();
        Self::new(order, coeffs)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &UniPoly {
        &self.coeffs[n]
    }

    /// `n!` times the ordinary coefficient of `t^n`.
    pub fn egf_coeff(&self, n: usize) -> UniPoly {
        self.coeffs[n].scale_int(&factorial(n as u64))
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order, "truncation cannot raise the order");
        Self::new(order, self.coeffs[..=order].to_vec())
    }

    pub fn scale(&self, c: &UniPoly) -> Self {
        Self::new(self.order, self.coeffs.iter().map(|a| a * c).collect())
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self::new(
            self.order,
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self::new(
            self.order,
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = (0..=self.order)
            .map(|n| {
                (0..=n).fold(UniPoly::zero(), |acc, i| {
                    &acc + &(&self.coeffs[i] * &other.coeffs[n - i])
                })
            })
            .collect();
        Ok(Self::new(self.order, coeffs))
    }

    /// Derivative in `t`. The result has order one less.
    pub fn derivative(&self) -> Result<Self> {
        if self.order == 0 {
            return Err(Error::InsufficientOrder { needed: 1, have: 0 });
        }
        let coeffs = (1..=self.order)
            .map(|n| self.coeffs[n].scale_int(&BigInt::from(n)))
            .collect();
        Ok(Self::new(self.order - 1, coeffs))
    }

    /// `p(self)` for a polynomial `p` with constant (rational) coefficients.
    pub fn compose_poly(&self, p: &UniPoly) -> Self {
        p.coeffs()
            .iter()
            .rev()
            .fold(Self::zero(self.order), |acc, c| {
                let mut next = acc.mul(self).expect("same order");
                next.coeffs[0] = &next.coeffs[0] + &UniPoly::constant(c.clone());
                next
            })
    }

    /// `exp(c(x) t)` truncated at `order`: coefficients `c^n / n!`.
    pub fn exp_affine(c: &UniPoly, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = UniPoly::one();
        coeffs.push(term.clone());
        for n in 1..=order {
            term = (&term * c).scale(&BigRational::new(BigInt::one(), BigInt::from(n)));
            coeffs.push(term.clone());
        }
        Self::new(order, coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(UniPoly::is_zero)
    }

    /// True when every coefficient is a constant (no `x`).
    pub fn is_x_free(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.degree() <= super::Degree::Finite(0))
    }

    /// Constant coefficient of `t^n`, valid for `x`-free series.
    pub fn scalar(&self, n: usize) -> BigRational {
        debug_assert!(self.coeffs[n].degree() <= super::Degree::Finite(0));
        self.coeffs[n].coeff(0)
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;

    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        self.try_add(rhs).expect("series orders differ")
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;

    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        self.try_sub(rhs).expect("series orders differ")
    }
}

/// Scalar series from rational coefficients.
pub fn scalar_series(order: usize, coeffs: &[BigRational]) -> TruncSeries {
    TruncSeries::new(
        order,
        coeffs
            .iter()
            .map(|c| UniPoly::constant(c.clone()))
            .collect(),
    )
}
