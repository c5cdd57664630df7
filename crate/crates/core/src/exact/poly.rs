use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Degree of a polynomial. The zero polynomial has degree `NegInfinity`,
/// which orders below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Dense univariate polynomial with exact rational coefficients.
///
/// `coeffs[i]` is the coefficient of `x^i`. Trailing zeros are never stored,
/// so structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_rationals(vec![c])
    }

    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_rationals(coeffs)
    }

    pub fn from_rationals(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_bigints<I: IntoIterator<Item = BigInt>>(coeffs: I) -> Self {
        Self::from_rationals(coeffs.into_iter().map(BigRational::from_integer).collect())
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_bigints(coeffs.iter().map(|&c| BigInt::from(c)))
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Coefficients as integers, or `None` if any coefficient is fractional.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn derivative(&self) -> Self {
        Self::from_rationals(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |p, _| p.derivative())
    }

    pub fn eval(&self, at: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * at + c)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        self.scale(&BigRational::from_integer(c.clone()))
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &UniPoly) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * inner) + &Self::constant(c.clone())
        })
    }

    /// `x^len * self(1/x)` for `len >= deg`, i.e. the coefficient vector
    /// reversed inside a window of length `len + 1`.
    pub fn reversed(&self, len: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); len + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            assert!(i <= len, "reversal window shorter than the degree");
            coeffs[len - i] = c.clone();
        }
        Self::from_rationals(coeffs)
    }

    /// Euclidean division over the rationals.
    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let lead = divisor.leading().ok_or(Error::DivisionByZero)?.clone();
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] / &lead;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * d;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_rationals(quot), Self::from_rationals(rem)))
    }

    /// Division that must leave no remainder.
    pub fn div_exact(&self, divisor: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonZeroRemainder(r.to_string()))
        }
    }

    /// Scales by a positive rational so that the coefficients become coprime
    /// integers. Signs are preserved.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let nums: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let g = nums.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        Self::from_bigints(nums.into_iter().map(|c| c / &g))
    }

    pub fn gcd(&self, other: &UniPoly) -> Self {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("divisor is nonzero");
            a = b;
            // content is irrelevant to the gcd and grows fast if kept
            b = r.primitive();
        }
        a.primitive()
    }

    /// `Σ_k p_k u^k v^(s-k)`: the degree-`s` homogenization of `self`
    /// evaluated at `(u, v)`.
    pub fn subst_pow(&self, u: &UniPoly, v: &UniPoly, s: usize) -> Result<UniPoly> {
        let degree = self.degree();
        if let Degree::Finite(d) = degree {
            if s < d {
                return Err(Error::SubstitutionDegree { s, degree: d });
            }
        }
        let mut u_pows = Vec::with_capacity(s + 1);
        let mut v_pows = Vec::with_capacity(s + 1);
        u_pows.push(UniPoly::one());
        v_pows.push(UniPoly::one());
        for i in 1..=s {
            u_pows.push(&u_pows[i - 1] * u);
            v_pows.push(&v_pows[i - 1] * v);
        }
        Ok(self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(UniPoly::zero(), |acc, (k, c)| {
                &acc + &(&u_pows[k] * &v_pows[s - k]).scale(c)
            }))
    }

    /// Paper-style compact rendering, e.g. `x+4x^2+x^3` or `945y^{11}`.
    pub fn to_compact(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if c.is_negative() {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if k == 0 || !magnitude.is_one() {
                out.push_str(&magnitude.to_string());
            }
            match k {
                0 => {}
                1 => out.push_str(var),
                k if k < 10 => out.push_str(&format!("{var}^{k}")),
                k => out.push_str(&format!("{var}^{{{k}}}")),
            }
        }
        out
    }

    /// Lowest degree first, `c0 + c1*x + c2*x^2`, zero terms omitted.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = match k {
                0 => c.abs().to_string(),
                1 => format!("{}*{var}", c.abs()),
                _ => format!("{}*{var}^{k}", c.abs()),
            };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            out.push_str(&term);
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_rationals((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;

    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_rationals((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;

    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_rationals(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $method(self, rhs: UniPoly) -> UniPoly {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for UniPoly {
    type Output = UniPoly;

    fn neg(self) -> UniPoly {
        -&self
    }
}

/// Shorthand for integer-valued rationals.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn binomial_square() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, 1]), p(&[1, 2, 1]));
        assert_eq!(&p(&[0, 1]) * &p(&[0, 1, 1]), p(&[0, 0, 1, 1]));
    }

    #[test]
    fn xj1_from_a1() {
        // (1+x)^2 * A_1(x) = x * J_1(x) with J_1 = 1 + 2x + x^2
        let lhs = &p(&[1, 1]).pow(2) * &p(&[0, 1]);
        assert_eq!(lhs, p(&[1, 2, 1]).shift(1));
    }

    #[test]
    fn derivative_cases() {
        assert_eq!(UniPoly::x().derivative(), UniPoly::one());
        assert_eq!(p(&[7]).derivative(), UniPoly::zero());
        assert_eq!(p(&[7]).derivative().degree(), Degree::NegInfinity);
        let w1 = p(&[0, 1, 1]);
        assert_eq!(w1.derivative(), p(&[1, 2]));
        assert_eq!(&p(&[0, 1, 1]) * &w1.derivative(), p(&[0, 1, 3, 2]));
    }

    #[test]
    fn zero_degree_sentinel_orders_first() {
        assert!(Degree::NegInfinity < Degree::Finite(0));
        assert_eq!(UniPoly::zero().degree().finite(), None);
    }

    #[test]
    fn subst_pow_examples() {
        let one_plus_y2 = p(&[1, 0, 1]);
        let y2 = p(&[0, 0, 1]);
        // A_1 = x, s = 1
        let a1 = p(&[0, 1]).subst_pow(&one_plus_y2, &y2, 1).unwrap();
        assert_eq!(a1, one_plus_y2);
        assert_eq!(a1.shift(1).scale(&rat(2)), p(&[0, 2, 0, 2]));
        // N_2 = 2x + x^2 -> T_2
        let t2 = p(&[0, 2, 1]).subst_pow(&y2, &one_plus_y2, 2).unwrap();
        assert_eq!(t2, p(&[0, 0, 2, 0, 3]));
        // N_3 = 4x + 10x^2 + x^3 -> R_3 / y
        let r3 = p(&[0, 4, 10, 1])
            .subst_pow(&one_plus_y2, &y2, 3)
            .unwrap()
            .shift(1);
        assert_eq!(r3, p(&[0, 1, 0, 13, 0, 27, 0, 15]));
    }

    #[test]
    fn subst_pow_rejects_small_s() {
        let err = p(&[0, 0, 1]).subst_pow(&UniPoly::x(), &UniPoly::one(), 1);
        assert_eq!(err, Err(Error::SubstitutionDegree { s: 1, degree: 2 }));
    }

    #[test]
    fn exact_division() {
        let a = &p(&[1, 1]) * &p(&[2, 0, 3]);
        assert_eq!(a.div_exact(&p(&[1, 1])).unwrap(), p(&[2, 0, 3]));
        assert!(matches!(
            p(&[1, 0, 1]).div_exact(&p(&[1, 1])),
            Err(Error::NonZeroRemainder(_))
        ));
        assert_eq!(
            p(&[1]).div_rem(&UniPoly::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn formatting() {
        assert_eq!(p(&[0, 1, 4, 1]).to_compact("x"), "x+4x^2+x^3");
        assert_eq!(p(&[2, 0, 8, 0, 6]).to_compact("u"), "2+8u^2+6u^4");
        assert_eq!(UniPoly::monomial(rat(945), 11).to_compact("y"), "945y^{11}");
        assert_eq!(p(&[1, -2, 0, 3]).display_in("x"), "1 - 2*x + 3*x^3");
        assert_eq!(
            UniPoly::from_rationals(vec![ratio(-1, 2), rat(1)]).to_string(),
            "-1/2 + 1*x"
        );
        assert_eq!(UniPoly::zero().to_string(), "0");
    }

    fn arb_poly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
        prop::collection::vec((-20i64..20, 1i64..5), 0..=max_deg + 1).prop_map(|v| {
            UniPoly::from_rationals(v.into_iter().map(|(n, d)| ratio(n, d)).collect())
        })
    }

    proptest! {
        #[test]
        fn distributive(a in arb_poly(6), b in arb_poly(6), c in arb_poly(6)) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        }

        #[test]
        fn leibniz(a in arb_poly(8), b in arb_poly(8)) {
            let lhs = (&a * &b).derivative();
            let rhs = &(&a.derivative() * &b) + &(&a * &b.derivative());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn product_degree(a in arb_poly(6), b in arb_poly(6)) {
            let prod = &a * &b;
            match (a.degree(), b.degree()) {
                (Degree::Finite(x), Degree::Finite(y)) => {
                    prop_assert_eq!(prod.degree(), Degree::Finite(x + y))
                }
                _ => prop_assert!(prod.is_zero()),
            }
        }

        #[test]
        fn subst_pow_matches_pointwise(
            a in arb_poly(5),
            u in arb_poly(3),
            v in arb_poly(3),
            points in prop::collection::vec((-30i64..30, 1i64..7), 20),
        ) {
            let s = a.degree().finite().unwrap_or(0) + 1;
            let h = a.subst_pow(&u, &v, s).unwrap();
            for (n, d) in points {
                let y0 = ratio(n, d);
                let v0 = v.eval(&y0);
                if v0.is_zero() {
                    continue;
                }
                let expect = num_traits::pow(v0.clone(), s) * a.eval(&(u.eval(&y0) / &v0));
                prop_assert_eq!(h.eval(&y0), expect);
            }
        }

        #[test]
        fn div_rem_reconstructs(a in arb_poly(8), b in arb_poly(4)) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b).unwrap();
            prop_assert!(r.degree() < b.degree());
            prop_assert_eq!(&(&q * &b) + &r, a);
        }
    }
}
