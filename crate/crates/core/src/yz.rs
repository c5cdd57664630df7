//! Polynomials in the formal symbols `y = tan x` and `z = sec x`, with the
//! derivation `D(y) = z^2`, `D(z) = y z`.
//!
//! Iterates are computed in the free commutative algebra on `y, z`, where the
//! homogeneous expansions are unique. Reduction modulo `z^2 = 1 + y^2` is a
//! separate step ([`YZPoly::reduce_canonical`]).

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::UniPoly;
use crate::triangle::TriangleRow;

/// Sparse map from `(y-degree, z-degree)` to a nonzero integer coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct YZPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl YZPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: impl Into<BigInt>, a: u32, b: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(a, b, &c.into());
        p
    }

    pub fn y() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn z() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: u32, b: u32) -> BigInt {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, a: u32, b: u32, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((a, b)).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn mul_y(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a + 1, b), c.clone()))
                .collect(),
        }
    }

    /// One application of `D`: `y^a z^b ↦ a y^(a-1) z^(b+2) + b y^(a+1) z^b`.
    pub fn derive(&self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            if a > 0 {
                out.add_term(a - 1, b + 2, &(c * a));
            }
            if b > 0 {
                out.add_term(a + 1, b, &(c * b));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::monomial(1, 0, 0), |acc, _| &acc * self)
    }

    /// Common total degree `a + b` of every term, or `None` if the polynomial
    /// is zero or not homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|(a, b)| a + b);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn eval(&self, y0: &BigRational, z0: &BigRational) -> BigRational {
        self.terms
            .iter()
            .fold(BigRational::zero(), |acc, (&(a, b), c)| {
                acc + BigRational::from_integer(c.clone())
                    * num_traits::pow(y0.clone(), a as usize)
                    * num_traits::pow(z0.clone(), b as usize)
            })
    }

    /// The unique `(p0, p1)` with `self ≡ p0(y) + p1(y) z` modulo
    /// `z^2 - y^2 - 1`.
    pub fn reduce_canonical(&self) -> (UniPoly, UniPoly) {
        let one_plus_y2 = UniPoly::from_ints(&[1, 0, 1]);
        let mut even = UniPoly::zero();
        let mut odd = UniPoly::zero();
        for (&(a, b), c) in &self.terms {
            let term = one_plus_y2.pow(b / 2).shift(a as usize).scale_int(c);
            if b % 2 == 0 {
                even = &even + &term;
            } else {
                odd = &odd + &term;
            }
        }
        (even, odd)
    }
}

impl Add for &YZPoly {
    type Output = YZPoly;

    fn add(self, rhs: &YZPoly) -> YZPoly {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, c);
        }
        out
    }
}

impl Mul for &YZPoly {
    type Output = YZPoly;

    fn mul(self, rhs: &YZPoly) -> YZPoly {
        let mut out = YZPoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term(a1 + a2, b1 + b2, &(c1 * c2));
            }
        }
        out
    }
}

impl fmt::Display for YZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&(a, b), c) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            match a {
                0 => {}
                1 => f.write_str("*y")?,
                _ => write!(f, "*y^{a}")?,
            }
            match b {
                0 => {}
                1 => f.write_str("*z")?,
                _ => write!(f, "*z^{b}")?,
            }
        }
        Ok(())
    }
}

/// Which operator word is iterated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OpKind {
    /// `D` alone.
    D,
    /// Multiply by `y`, then differentiate.
    Dy,
    /// Differentiate, then multiply by `y`.
    YD,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Seed {
    Y,
    Z,
    YPlusZ,
}

impl Seed {
    pub fn poly(self) -> YZPoly {
        match self {
            Seed::Y => YZPoly::y(),
            Seed::Z => YZPoly::z(),
            Seed::YPlusZ => &YZPoly::y() + &YZPoly::z(),
        }
    }
}

impl OpKind {
    pub fn apply(self, p: &YZPoly) -> YZPoly {
        match self {
            OpKind::D => p.derive(),
            OpKind::Dy => p.mul_y().derive(),
            OpKind::YD => p.derive().mul_y(),
        }
    }

    /// Total degree of the `n`-th iterate on seed `y` or `z`.
    pub fn iterate_degree(self, n: usize) -> u32 {
        match self {
            OpKind::D => n as u32 + 1,
            OpKind::Dy | OpKind::YD => 2 * n as u32 + 1,
        }
    }
}

/// `kind^n (seed)`; `n = 0` returns the seed.
pub fn op_iterate(kind: OpKind, seed: Seed, n: usize) -> YZPoly {
    (0..n).fold(seed.poly(), |p, _| kind.apply(&p))
}

/// All iterates `kind^0(seed), kind^1(seed), ..., kind^n(seed)`.
pub fn op_orbit(kind: OpKind, seed: Seed, n: usize) -> Vec<YZPoly> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(seed.poly());
    for i in 0..n {
        let next = kind.apply(&out[i]);
        out.push(next);
    }
    out
}

/// Monomial pattern `k ↦ y^a z^b` used to read a coefficient row off an
/// expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtractionShape {
    /// `(Dy)^n(y) = Σ_{k=1}^n E(n,k) y^(2n-2k+1) z^(2k)`
    E,
    /// `(Dy)^n(z) = Σ_{k=0}^n H(n,k) y^(2n-2k) z^(2k+1)`
    H,
    /// `(Dy)^n(y+z) = Σ_{k=0}^{2n} J(2n,k) y^(2n-k) z^(k+1)`
    J,
    /// `(yD)^n(y) = Σ_{k=1}^n M(n,k) y^(2k-1) z^(2n-2k+2)`
    M,
    /// `(yD)^n(z) = Σ_{k=1}^n N(n,k) y^(2k) z^(2n-2k+1)`
    N,
    /// `D^n(y) = Σ_k W(n,k) y^(n-2k-1) z^(2k+2)`, interior peaks
    W,
    /// `D^n(z) = Σ_k W^l(n,k) y^(n-2k) z^(2k+1)`, left peaks
    WLeft,
}

impl ExtractionShape {
    pub fn name(self) -> &'static str {
        match self {
            ExtractionShape::E => "E",
            ExtractionShape::H => "H",
            ExtractionShape::J => "J",
            ExtractionShape::M => "M",
            ExtractionShape::N => "N",
            ExtractionShape::W => "W",
            ExtractionShape::WLeft => "Wl",
        }
    }

    /// The operator word and seed whose `n`-th iterate has this shape.
    pub fn source(self) -> (OpKind, Seed) {
        match self {
            ExtractionShape::E => (OpKind::Dy, Seed::Y),
            ExtractionShape::H => (OpKind::Dy, Seed::Z),
            ExtractionShape::J => (OpKind::Dy, Seed::YPlusZ),
            ExtractionShape::M => (OpKind::YD, Seed::Y),
            ExtractionShape::N => (OpKind::YD, Seed::Z),
            ExtractionShape::W => (OpKind::D, Seed::Y),
            ExtractionShape::WLeft => (OpKind::D, Seed::Z),
        }
    }

    /// Inclusive `k` range at row `n`.
    pub fn k_range(self, n: usize) -> Result<(usize, usize)> {
        let undefined = Err(Error::ShapeUndefined {
            shape: self.name(),
            n,
        });
        match self {
            ExtractionShape::E | ExtractionShape::M | ExtractionShape::N if n == 0 => undefined,
            ExtractionShape::J | ExtractionShape::W if n == 0 => undefined,
            ExtractionShape::E | ExtractionShape::M | ExtractionShape::N => Ok((1, n)),
            ExtractionShape::H => Ok((0, n)),
            ExtractionShape::J => Ok((0, 2 * n)),
            ExtractionShape::W => Ok((0, (n - 1) / 2)),
            ExtractionShape::WLeft => Ok((0, n / 2)),
        }
    }

    pub fn monomial(self, n: usize, k: usize) -> (u32, u32) {
        let (n, k) = (n as u32, k as u32);
        match self {
            ExtractionShape::E => (2 * n - 2 * k + 1, 2 * k),
            ExtractionShape::H => (2 * n - 2 * k, 2 * k + 1),
            ExtractionShape::J => (2 * n - k, k + 1),
            ExtractionShape::M => (2 * k - 1, 2 * n - 2 * k + 2),
            ExtractionShape::N => (2 * k, 2 * n - 2 * k + 1),
            ExtractionShape::W => (n - 2 * k - 1, 2 * k + 2),
            ExtractionShape::WLeft => (n - 2 * k, 2 * k + 1),
        }
    }
}

/// Reads the row at `n` off `p`, failing on any monomial outside the shape.
pub fn extract_row(p: &YZPoly, shape: ExtractionShape, n: usize) -> Result<TriangleRow> {
    let (lo, hi) = shape.k_range(n)?;
    let index: HashMap<(u32, u32), usize> =
        (lo..=hi).map(|k| (shape.monomial(n, k), k - lo)).collect();
    let mut entries = vec![BigInt::zero(); hi - lo + 1];
    for (&(a, b), c) in p.terms() {
        let slot = index.get(&(a, b)).ok_or(Error::UnexpectedMonomial {
            shape: shape.name(),
            n,
            a,
            b,
        })?;
        entries[*slot] = c.clone();
    }
    Ok(TriangleRow::new(n, lo, entries))
}

/// Iterates the shape's source operator and extracts row `n`.
pub fn shape_row(shape: ExtractionShape, n: usize) -> Result<TriangleRow> {
    let (kind, seed) = shape.source();
    extract_row(&op_iterate(kind, seed, n), shape, n)
}

/// `Σ_k c_k y^(n-k) z^k`: a univariate row read as a homogeneous form.
pub fn homogenize_row(row: &TriangleRow, n: usize) -> YZPoly {
    let mut out = YZPoly::zero();
    for (k, c) in row.iter() {
        out.add_term((n - k) as u32, k as u32, c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn derivation_on_generators() {
        assert_eq!(YZPoly::y().derive(), YZPoly::monomial(1, 0, 2));
        assert_eq!(YZPoly::z().derive(), YZPoly::monomial(1, 1, 1));
        assert_eq!(
            YZPoly::monomial(1, 2, 0).derive(),
            YZPoly::monomial(2, 1, 2)
        );
        let yz = YZPoly::monomial(1, 1, 1);
        assert_eq!(
            yz.derive(),
            &YZPoly::monomial(1, 2, 1) + &YZPoly::monomial(1, 0, 3)
        );
    }

    #[test]
    fn iterate_examples() {
        assert_eq!(
            op_iterate(OpKind::Dy, Seed::Y, 1),
            YZPoly::monomial(2, 1, 2)
        );
        assert_eq!(
            op_iterate(OpKind::YD, Seed::Y, 1),
            YZPoly::monomial(1, 1, 2)
        );
        assert_eq!(
            op_iterate(OpKind::Dy, Seed::Y, 2),
            &YZPoly::monomial(4, 3, 2) + &YZPoly::monomial(4, 1, 4)
        );
        assert_eq!(op_iterate(OpKind::D, Seed::Z, 0), YZPoly::z());
    }

    #[test]
    fn extract_examples() {
        let j1 = shape_row(ExtractionShape::J, 1).unwrap();
        assert_eq!(j1.entries(), ints(&[1, 2, 1]).as_slice());
        let h1 = shape_row(ExtractionShape::H, 1).unwrap();
        assert_eq!(h1.entries(), ints(&[1, 1]).as_slice());
        let w3 = shape_row(ExtractionShape::W, 3).unwrap();
        assert_eq!(w3.entries(), ints(&[4, 2]).as_slice());
    }

    #[test]
    fn extract_rejects_wrong_shape() {
        let p = op_iterate(OpKind::Dy, Seed::Y, 2);
        let err = extract_row(&p, ExtractionShape::H, 2).unwrap_err();
        assert!(matches!(err, Error::UnexpectedMonomial { shape: "H", .. }));
        assert!(matches!(
            ExtractionShape::E.k_range(0),
            Err(Error::ShapeUndefined { .. })
        ));
    }

    #[test]
    fn reduction_examples() {
        let (p0, p1) = YZPoly::monomial(1, 0, 2).reduce_canonical();
        assert_eq!(p0, UniPoly::from_ints(&[1, 0, 1]));
        assert!(p1.is_zero());
        let (p0, p1) = op_iterate(OpKind::D, Seed::Y, 3).reduce_canonical();
        assert_eq!(p0, UniPoly::from_ints(&[2, 0, 8, 0, 6]));
        assert!(p1.is_zero());
        let (p0, p1) = op_iterate(OpKind::D, Seed::Z, 2).reduce_canonical();
        assert!(p0.is_zero());
        assert_eq!(p1, UniPoly::from_ints(&[1, 0, 2]));
    }

    #[test]
    fn homogeneity_up_to_20() {
        for kind in [OpKind::D, OpKind::Dy, OpKind::YD] {
            for seed in [Seed::Y, Seed::Z, Seed::YPlusZ] {
                for (n, p) in op_orbit(kind, seed, 20).iter().enumerate() {
                    assert_eq!(p.homogeneous_degree(), Some(kind.iterate_degree(n)));
                }
            }
        }
    }

    fn arb_yz() -> impl Strategy<Value = YZPoly> {
        prop::collection::vec((-5i64..5, 0u32..4, 0u32..4), 0..5).prop_map(|terms| {
            terms.into_iter().fold(YZPoly::zero(), |acc, (c, a, b)| {
                &acc + &YZPoly::monomial(c, a, b)
            })
        })
    }

    proptest! {
        #[test]
        fn leibniz(p in arb_yz(), q in arb_yz()) {
            let lhs = (&p * &q).derive();
            let rhs = &(&p.derive() * &q) + &(&p * &q.derive());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn canonical_form_is_sound(p in arb_yz(), n in -12i64..12, d in 1i64..6) {
            // Rational points on z^2 = 1 + y^2: y = (1 - s^2)/(2s), z = (1 + s^2)/(2s).
            prop_assume!(n != 0);
            let s = ratio(n, d);
            let two_s = &s * rat(2);
            let y0 = (rat(1) - &s * &s) / &two_s;
            let z0 = (rat(1) + &s * &s) / &two_s;
            prop_assert_eq!(&z0 * &z0, rat(1) + &y0 * &y0);
            let (p0, p1) = p.reduce_canonical();
            prop_assert_eq!(p.eval(&y0, &z0), p0.eval(&y0) + p1.eval(&y0) * &z0);
        }
    }
}
