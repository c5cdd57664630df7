//! Two-term recurrence triangles `X(n+1,k) = α(n,k) X(n,k) + β(n,k) X(n,k-1)`.
//!
//! Every named family is data for one engine ([`TriangleSpec`]). The module
//! also carries the alternating-sum formulas, the assembled `J` rows, the
//! Worpitzky binomial transform and the polynomial recurrences (`F_n`, `f_n`,
//! `R_n`, `T_n`, `N_n`, `W_n`) that serve as second routes to the rows.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, pow2, rat, UniPoly};

/// The registered recurrence families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Eulerian numbers `A(n,k)`.
    A,
    /// Type-B Eulerian numbers `B(n,k)`.
    B,
    /// Stirling numbers of the second kind.
    S,
    /// Coefficients of `(Dy)^n(y)`.
    E,
    /// Coefficients of `(Dy)^n(z)`.
    H,
    /// Worpitzky triangle `a(n,k)`.
    Worpitzky,
    /// `G(n,k)`, coefficients of `G_{n,1}(x)`.
    G,
    /// `f(n,k)`, coefficients of `f_n(y)`.
    SecantF,
    /// Coefficients of `(yD)^n(y)`.
    M,
    /// Coefficients of `(yD)^n(z)`.
    N,
    /// Galton triangle of `R_n(y)`.
    R,
    /// Galton triangle of `T_n(y)`.
    T,
}

impl Family {
    pub const ALL: [Family; 12] = [
        Family::A,
        Family::B,
        Family::S,
        Family::E,
        Family::H,
        Family::Worpitzky,
        Family::G,
        Family::SecantF,
        Family::M,
        Family::N,
        Family::R,
        Family::T,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::S => "S",
            Family::E => "E",
            Family::H => "H",
            Family::Worpitzky => "a",
            Family::G => "G",
            Family::SecantF => "f",
            Family::M => "M",
            Family::N => "N",
            Family::R => "R",
            Family::T => "T",
        }
    }

    /// Variable used when the row is printed as a polynomial.
    pub fn var(self) -> &'static str {
        match self {
            Family::SecantF | Family::R | Family::T => "y",
            _ => "x",
        }
    }

    /// Exponent carried by entry `k` in the family's polynomial.
    pub fn exponent(self, k: usize) -> usize {
        match self {
            Family::Worpitzky => k + 1,
            Family::G => k - 1,
            Family::SecantF | Family::T => 2 * k,
            Family::R => 2 * k + 1,
            _ => k,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.symbol() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// `c0 + cn*n + ck*k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Affine {
    pub c0: i64,
    pub cn: i64,
    pub ck: i64,
}

impl Affine {
    pub const fn new(c0: i64, cn: i64, ck: i64) -> Self {
        Self { c0, cn, ck }
    }

    pub fn eval(&self, n: usize, k: i64) -> i64 {
        self.c0 + self.cn * n as i64 + self.ck * k
    }
}

/// One row of a triangle: `entries[i] = X(n, k_offset + i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleRow {
    n: usize,
    k_offset: usize,
    entries: Vec<BigInt>,
}

impl TriangleRow {
    pub fn new(n: usize, k_offset: usize, entries: Vec<BigInt>) -> Self {
        Self {
            n,
            k_offset,
            entries,
        }
    }

    pub fn from_ints(n: usize, k_offset: usize, entries: &[i64]) -> Self {
        Self::new(
            n,
            k_offset,
            entries.iter().map(|&e| BigInt::from(e)).collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k_offset(&self) -> usize {
        self.k_offset
    }

    pub fn k_max(&self) -> usize {
        self.k_offset + self.entries.len() - 1
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// `X(n,k)`, zero outside the stored support.
    pub fn get(&self, k: i64) -> BigInt {
        if k < self.k_offset as i64 {
            return BigInt::zero();
        }
        self.entries
            .get(k as usize - self.k_offset)
            .cloned()
            .unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.entries
            .iter()
            .enumerate()
            .map(move |(i, e)| (i + self.k_offset, e))
    }

    pub fn sum(&self) -> BigInt {
        self.entries.iter().sum()
    }

    /// Values indexed from `k = 0` with trailing zeros removed.
    pub fn dense(&self) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.k_offset];
        out.extend(self.entries.iter().cloned());
        trim_zeros(out)
    }

    /// `Σ_k X(n,k) x^k`.
    pub fn to_poly(&self) -> UniPoly {
        UniPoly::from_bigints(self.dense())
    }

    pub fn add_to_entry(&mut self, k: usize, delta: &BigInt) -> bool {
        match k
            .checked_sub(self.k_offset)
            .and_then(|i| self.entries.get_mut(i))
        {
            Some(e) => {
                *e += delta;
                true
            }
            None => false,
        }
    }
}

pub(crate) fn trim_zeros(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

/// Declarative description of a recurrence triangle.
///
/// Rows after the initial one span `k_lo(n)..=k_hi(n)`; entries of the
/// previous row outside its support count as zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleSpec {
    pub family: Family,
    pub alpha: Affine,
    pub beta: Affine,
    pub initial: TriangleRow,
    pub k_lo: Affine,
    pub k_hi: Affine,
}

impl TriangleSpec {
    pub fn first_n(&self) -> usize {
        self.initial.n
    }

    pub fn support(&self, n: usize) -> (usize, usize) {
        if n == self.initial.n {
            return (self.initial.k_offset, self.initial.k_max());
        }
        (self.k_lo.eval(n, 0) as usize, self.k_hi.eval(n, 0) as usize)
    }

    pub fn next_row(&self, row: &TriangleRow) -> TriangleRow {
        let n = row.n;
        let (lo, hi) = self.support(n + 1);
        let entries = (lo..=hi)
            .map(|k| {
                let k = k as i64;
                row.get(k) * self.alpha.eval(n, k) + row.get(k - 1) * self.beta.eval(n, k)
            })
            .collect();
        TriangleRow::new(n + 1, lo, entries)
    }

    /// Rows `first_n ..= n`.
    pub fn rows_through(&self, n: usize) -> Vec<TriangleRow> {
        let count = (n + 1).saturating_sub(self.first_n());
        generate_triangle(self, count)
    }

    pub fn row(&self, n: usize) -> Option<TriangleRow> {
        self.rows_through(n).pop().filter(|r| r.n == n)
    }
}

/// The first `rows` rows, starting at the initial row.
pub fn generate_triangle(spec: &TriangleSpec, rows: usize) -> Vec<TriangleRow> {
    let mut out: Vec<TriangleRow> = Vec::with_capacity(rows);
    if rows == 0 {
        return out;
    }
    out.push(spec.initial.clone());
    while out.len() < rows {
        let next = spec.next_row(out.last().expect("nonempty"));
        out.push(next);
    }
    out
}

pub fn named_spec(family: Family) -> TriangleSpec {
    let one_at = |n: usize, k: usize| TriangleRow::from_ints(n, k, &[1]);
    let k_from = |lo: i64| Affine::new(lo, 0, 0);
    let k_to_n = Affine::new(0, 1, 0);
    let (alpha, beta, initial, k_lo) = match family {
        // A(n+1,k) = k A(n,k) + (n-k+2) A(n,k-1)
        Family::A => (
            Affine::new(0, 0, 1),
            Affine::new(2, 1, -1),
            one_at(0, 0),
            k_from(1),
        ),
        // B(n+1,k) = (2k+1) B(n,k) + (2n-2k+3) B(n,k-1)
        Family::B => (
            Affine::new(1, 0, 2),
            Affine::new(3, 2, -2),
            one_at(0, 0),
            k_from(0),
        ),
        // S(n+1,k) = k S(n,k) + S(n,k-1)
        Family::S => (
            Affine::new(0, 0, 1),
            Affine::new(1, 0, 0),
            one_at(0, 0),
            k_from(1),
        ),
        // E(n+1,k) = 2k E(n,k) + 2(n-k+2) E(n,k-1), E(1,1) = 2
        Family::E => (
            Affine::new(0, 0, 2),
            Affine::new(4, 2, -2),
            TriangleRow::from_ints(1, 1, &[2]),
            k_from(1),
        ),
        // H(n+1,k) = (1+2k) H(n,k) + (2n-2k+3) H(n,k-1)
        Family::H => (
            Affine::new(1, 0, 2),
            Affine::new(3, 2, -2),
            one_at(0, 0),
            k_from(0),
        ),
        // a(n+1,k) = (k+1) a(n,k) + k a(n,k-1)
        Family::Worpitzky => (
            Affine::new(1, 0, 1),
            Affine::new(0, 0, 1),
            one_at(0, 0),
            k_from(0),
        ),
        // G(n+1,k) = k G(n,k) + k G(n,k-1), G(1,1) = 1
        Family::G => (
            Affine::new(0, 0, 1),
            Affine::new(0, 0, 1),
            one_at(1, 1),
            k_from(1),
        ),
        // f(n+1,k) = (1+2k) f(n,k) + 2k f(n,k-1)
        Family::SecantF => (
            Affine::new(1, 0, 2),
            Affine::new(0, 0, 2),
            one_at(0, 0),
            k_from(0),
        ),
        // M(n+1,k) = (2k-1) M(n,k) + (2n-2k+4) M(n,k-1), M(1,1) = 1
        Family::M => (
            Affine::new(-1, 0, 2),
            Affine::new(4, 2, -2),
            one_at(1, 1),
            k_from(1),
        ),
        // N(n+1,k) = 2k N(n,k) + (2n-2k+3) N(n,k-1), N_0 = 1
        Family::N => (
            Affine::new(0, 0, 2),
            Affine::new(3, 2, -2),
            one_at(0, 0),
            k_from(1),
        ),
        // R(n+1,k) = (2k+1) R(n,k) + (2k-1) R(n,k-1), R_0 = y
        Family::R => (
            Affine::new(1, 0, 2),
            Affine::new(-1, 0, 2),
            one_at(0, 0),
            k_from(0),
        ),
        // T(n+1,k) = 2k T(n,k) + (2k-1) T(n,k-1), T_0 = 1
        Family::T => (
            Affine::new(0, 0, 2),
            Affine::new(-1, 0, 2),
            one_at(0, 0),
            k_from(1),
        ),
    };
    TriangleSpec {
        family,
        alpha,
        beta,
        initial,
        k_lo,
        k_hi: k_to_n,
    }
}

/// The family's polynomial for a stored row, in its exponent convention.
pub fn row_poly(family: Family, row: &TriangleRow) -> UniPoly {
    let mut coeffs = Vec::new();
    for (k, c) in row.iter() {
        let e = family.exponent(k);
        if coeffs.len() <= e {
            coeffs.resize(e + 1, BigInt::zero());
        }
        coeffs[e] = c.clone();
    }
    UniPoly::from_bigints(coeffs)
}

fn support_error(family: &str, n: usize, k: i64) -> Error {
    Error::OutOfSupport {
        family: family.to_string(),
        n,
        k,
    }
}

/// `X(n,k)` from the alternating-sum formulas for `A`, `B` and `N`.
pub fn explicit_entry(family: Family, n: usize, k: i64) -> Result<BigInt> {
    let in_support = match family {
        Family::A => (n == 0 && k == 0) || (n >= 1 && 1 <= k && k <= n as i64),
        Family::B => 0 <= k && k <= n as i64,
        Family::N => n >= 1 && 1 <= k && k <= n as i64,
        other => {
            return Err(Error::UnknownFamily(format!(
                "{other} (no alternating-sum formula)"
            )))
        }
    };
    if !in_support {
        return Err(support_error(family.symbol(), n, k));
    }
    let k = k as usize;
    let signed = |i: usize, v: BigInt| if i.is_multiple_of(2) { v } else { -v };
    Ok(match family {
        Family::A => (0..=k)
            .map(|i| signed(i, binomial(n as u64 + 1, i as u64) * int_pow(k - i, n)))
            .sum(),
        Family::B => (0..=k)
            .map(|i| {
                signed(
                    i,
                    binomial(n as u64 + 1, i as u64) * int_pow(2 * k - 2 * i + 1, n),
                )
            })
            .sum(),
        _ => {
            let total: BigRational = (1..=k)
                .map(|i| {
                    let term = pow2_signed(n as i64 - 2 * i as i64)
                        * BigRational::from_integer(
                            binomial(2 * i as u64, i as u64)
                                * binomial((n - i) as u64, (k - i) as u64)
                                * factorial(i as u64)
                                * stirling2_explicit(n, i),
                        );
                    if (k - i).is_multiple_of(2) {
                        term
                    } else {
                        -term
                    }
                })
                .sum();
            assert!(total.is_integer(), "N(n,k) formula produced a fraction");
            total.to_integer()
        }
    })
}

fn int_pow(base: usize, e: usize) -> BigInt {
    num_traits::pow(BigInt::from(base), e)
}

/// `2^e` as a rational, `e` of either sign.
fn pow2_signed(e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from_integer(pow2(e as usize))
    } else {
        BigRational::new(BigInt::one(), pow2((-e) as usize))
    }
}

/// `S(n,k) = (1/k!) Σ_i (-1)^i C(k,i) (k-i)^n`.
pub fn stirling2_explicit(n: usize, k: usize) -> BigInt {
    let sum: BigInt = (0..=k)
        .map(|i| {
            let term = binomial(k as u64, i as u64) * int_pow(k - i, n);
            if i % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum();
    sum / factorial(k as u64)
}

/// `[J(2n,0), ..., J(2n,2n)]`: `B(n,k)` at even positions, `2^n A(n,k)` at
/// odd positions `2k-1`.
pub fn interleave_j_rows(a_row: &TriangleRow, b_row: &TriangleRow) -> TriangleRow {
    let n = a_row.n;
    let scale = pow2(n);
    let entries = (0..=2 * n)
        .map(|j| {
            if j % 2 == 0 {
                b_row.get((j / 2) as i64)
            } else {
                &scale * a_row.get(j.div_ceil(2) as i64)
            }
        })
        .collect();
    TriangleRow::new(n, 0, entries)
}

pub fn interleave_j(n: usize) -> TriangleRow {
    let a = named_spec(Family::A).row(n).expect("A row");
    let b = named_spec(Family::B).row(n).expect("B row");
    interleave_j_rows(&a, &b)
}

/// `a(n, n-k) = Σ_{i=k}^n C(i,k) A(n,i)`.
pub fn worpitzky_from_row(a_row: &TriangleRow) -> TriangleRow {
    let n = a_row.n;
    let mut entries = vec![BigInt::zero(); n + 1];
    for k in 0..=n {
        entries[n - k] = (k..=n)
            .map(|i| binomial(i as u64, k as u64) * a_row.get(i as i64))
            .sum();
    }
    TriangleRow::new(n, 0, entries)
}

pub fn worpitzky_from_a(n: usize) -> TriangleRow {
    worpitzky_from_row(&named_spec(Family::A).row(n).expect("A row"))
}

/// `m!!` for odd `m >= -1`, with `(-1)!! = 1`.
pub fn double_factorial(m: i64) -> Result<BigInt> {
    if m < -1 || m % 2 == 0 {
        return Err(Error::DoubleFactorialArgument(m));
    }
    Ok((1..=m).step_by(2).fold(BigInt::one(), |acc, i| acc * i))
}

/// `N_n(x) = Σ_k 2^(n-2k) C(2k,k) k! S(n,k) x^k (1-x)^(n-k)`.
pub fn n_poly_closed(n: usize) -> UniPoly {
    let one_minus_x = UniPoly::from_ints(&[1, -1]);
    (1..=n).fold(UniPoly::zero(), |acc, k| {
        let c = pow2_signed(n as i64 - 2 * k as i64)
            * BigRational::from_integer(
                binomial(2 * k as u64, k as u64) * factorial(k as u64) * stirling2_explicit(n, k),
            );
        &acc + &one_minus_x.pow((n - k) as u32).shift(k).scale(&c)
    })
}

fn orbit(seed: UniPoly, n: usize, step: impl Fn(usize, &UniPoly) -> UniPoly) -> Vec<UniPoly> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(seed);
    for i in 0..n {
        let next = step(i, &out[i]);
        out.push(next);
    }
    out
}

/// `F_0 = y`, `F_{n+1} = (1+y^2) F_n + y(1+y^2) F_n'`, for `0..=n`.
pub fn capital_f_polys(n: usize) -> Vec<UniPoly> {
    let one_plus_y2 = UniPoly::from_ints(&[1, 0, 1]);
    let y_one_plus_y2 = UniPoly::from_ints(&[0, 1, 0, 1]);
    orbit(UniPoly::x(), n, |_, p| {
        &(&one_plus_y2 * p) + &(&y_one_plus_y2 * &p.derivative())
    })
}

/// `f_0 = 1`, `f_{n+1} = (1+2y^2) f_n + y(1+y^2) f_n'`.
pub fn secant_f_polys(n: usize) -> Vec<UniPoly> {
    let one_plus_2y2 = UniPoly::from_ints(&[1, 0, 2]);
    let y_one_plus_y2 = UniPoly::from_ints(&[0, 1, 0, 1]);
    orbit(UniPoly::one(), n, |_, p| {
        &(&one_plus_2y2 * p) + &(&y_one_plus_y2 * &p.derivative())
    })
}

/// `R_0 = y`, `R_{n+1} = y(1+y^2) R_n'`.
pub fn r_polys(n: usize) -> Vec<UniPoly> {
    let y_one_plus_y2 = UniPoly::from_ints(&[0, 1, 0, 1]);
    orbit(UniPoly::x(), n, |_, p| &y_one_plus_y2 * &p.derivative())
}

/// `T_0 = 1`, `T_{n+1} = y^2 T_n + y(1+y^2) T_n'`.
pub fn t_polys(n: usize) -> Vec<UniPoly> {
    let y2 = UniPoly::from_ints(&[0, 0, 1]);
    let y_one_plus_y2 = UniPoly::from_ints(&[0, 1, 0, 1]);
    orbit(UniPoly::one(), n, |_, p| {
        &(&y2 * p) + &(&y_one_plus_y2 * &p.derivative())
    })
}

/// `N_0 = 1`, `N_{n+1} = (2n+1) x N_n + 2x(1-x) N_n'`.
pub fn n_polys(n: usize) -> Vec<UniPoly> {
    let two_x_one_minus_x = UniPoly::from_ints(&[0, 2, -2]);
    orbit(UniPoly::one(), n, |i, p| {
        &p.shift(1).scale(&rat(2 * i as i64 + 1)) + &(&two_x_one_minus_x * &p.derivative())
    })
}

/// `W_0 = x`, `W_{n+1} = (x+x^2) W_n'`.
pub fn w_polys(n: usize) -> Vec<UniPoly> {
    let x_plus_x2 = UniPoly::from_ints(&[0, 1, 1]);
    orbit(UniPoly::x(), n, |_, p| &x_plus_x2 * &p.derivative())
}

/// Polynomial families addressable by name: every registered triangle plus
/// `J`, the derivative polynomials `P`, `Q`, and `F`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PolyFamily {
    Triangle(Family),
    J,
    P,
    Q,
    CapitalF,
}

impl PolyFamily {
    pub fn var(self) -> &'static str {
        match self {
            PolyFamily::Triangle(f) => f.var(),
            PolyFamily::J => "x",
            PolyFamily::P | PolyFamily::Q => "u",
            PolyFamily::CapitalF => "y",
        }
    }
}

impl FromStr for PolyFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "J" => Ok(PolyFamily::J),
            "P" => Ok(PolyFamily::P),
            "Q" => Ok(PolyFamily::Q),
            "F" => Ok(PolyFamily::CapitalF),
            other => other.parse().map(PolyFamily::Triangle),
        }
    }
}

/// The `n`-th polynomial of a named family.
pub fn family_poly(name: &str, n: usize) -> Result<UniPoly> {
    let family: PolyFamily = name.parse()?;
    Ok(match family {
        PolyFamily::Triangle(f) => {
            let spec = named_spec(f);
            let row = spec.row(n).ok_or_else(|| support_error(f.symbol(), n, 0))?;
            row_poly(f, &row)
        }
        PolyFamily::J => {
            if n == 0 {
                return Err(support_error("J", 0, 0));
            }
            interleave_j(n).to_poly()
        }
        PolyFamily::P => crate::identities::derivative_polys_pq(n).0,
        PolyFamily::Q => crate::identities::derivative_polys_pq(n).1,
        PolyFamily::CapitalF => capital_f_polys(n).pop().expect("nonempty"),
    })
}

/// True when all entries are nonnegative.
pub fn is_nonnegative(row: &TriangleRow) -> bool {
    row.entries.iter().all(|e| !e.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    fn row(f: Family, n: usize) -> Vec<BigInt> {
        named_spec(f).row(n).unwrap().entries().to_vec()
    }

    #[test]
    fn printed_rows() {
        assert_eq!(row(Family::A, 3), ints(&[1, 4, 1]));
        assert_eq!(row(Family::B, 2), ints(&[1, 6, 1]));
        assert_eq!(row(Family::B, 3), ints(&[1, 23, 23, 1]));
        assert_eq!(row(Family::N, 5), ints(&[16, 296, 516, 116, 1]));
        assert_eq!(row(Family::Worpitzky, 4), ints(&[1, 15, 50, 60, 24]));
        assert_eq!(row(Family::R, 5), ints(&[1, 121, 990, 2550, 2625, 945]));
        assert_eq!(row(Family::T, 4), ints(&[8, 84, 180, 105]));
        assert_eq!(row(Family::SecantF, 4), ints(&[1, 80, 464, 768, 384]));
        assert_eq!(row(Family::G, 3), ints(&[1, 6, 6]));
    }

    #[test]
    fn registry_examples() {
        assert_eq!(
            named_spec(Family::S).initial,
            TriangleRow::from_ints(0, 0, &[1])
        );
        assert_eq!(
            named_spec(Family::B).initial,
            TriangleRow::from_ints(0, 0, &[1])
        );
        let e = named_spec(Family::E);
        for (n, k) in [(1, 1), (4, 2), (7, 5)] {
            assert_eq!(e.alpha.eval(n, k), 2 * k);
        }
        assert_eq!("a".parse::<Family>().unwrap(), Family::Worpitzky);
        assert_eq!("J".parse::<Family>(), Err(Error::UnknownFamily("J".into())));
        assert!("Z".parse::<PolyFamily>().is_err());
    }

    #[test]
    fn generate_counts_rows() {
        let rows = generate_triangle(&named_spec(Family::G), 4);
        assert_eq!(rows.len(), 4);
        assert_eq!(rows[0].n(), 1);
        assert_eq!(rows[3].n(), 4);
        assert!(generate_triangle(&named_spec(Family::A), 0).is_empty());
        assert_eq!(named_spec(Family::G).row(0), None);
    }

    #[test]
    fn explicit_examples() {
        assert_eq!(explicit_entry(Family::A, 3, 2).unwrap(), BigInt::from(4));
        assert_eq!(explicit_entry(Family::B, 3, 1).unwrap(), BigInt::from(23));
        assert_eq!(explicit_entry(Family::N, 4, 2).unwrap(), BigInt::from(60));
        assert!(matches!(
            explicit_entry(Family::A, 3, 0),
            Err(Error::OutOfSupport { .. })
        ));
        assert!(matches!(
            explicit_entry(Family::N, 2, 3),
            Err(Error::OutOfSupport { .. })
        ));
        assert!(explicit_entry(Family::S, 2, 1).is_err());
    }

    #[test]
    fn j_rows() {
        assert_eq!(interleave_j(1).entries(), ints(&[1, 2, 1]).as_slice());
        assert_eq!(interleave_j(2).entries(), ints(&[1, 4, 6, 4, 1]).as_slice());
        for n in 1..=12 {
            let expected = pow2(n + 1) * factorial(n as u64);
            assert_eq!(interleave_j(n).sum(), expected);
        }
    }

    #[test]
    fn worpitzky_examples() {
        assert_eq!(worpitzky_from_a(2).entries(), ints(&[1, 3, 2]).as_slice());
        assert_eq!(
            worpitzky_from_a(4).entries(),
            ints(&[1, 15, 50, 60, 24]).as_slice()
        );
        for n in 1..=12 {
            assert_eq!(worpitzky_from_a(n).get(n as i64), factorial(n as u64));
        }
    }

    #[test]
    fn family_poly_examples() {
        assert_eq!(
            family_poly("f", 3).unwrap(),
            UniPoly::from_ints(&[1, 0, 26, 0, 72, 0, 48])
        );
        assert_eq!(
            family_poly("T", 5).unwrap(),
            UniPoly::from_ints(&[0, 0, 16, 0, 360, 0, 1500, 0, 2100, 0, 945])
        );
        assert_eq!(family_poly("N", 1).unwrap(), UniPoly::x());
        assert_eq!(family_poly("a", 1).unwrap(), UniPoly::from_ints(&[0, 1, 1]));
        assert_eq!(family_poly("G", 3).unwrap(), UniPoly::from_ints(&[1, 6, 6]));
        assert_eq!(
            family_poly("P", 2).unwrap(),
            UniPoly::from_ints(&[0, 2, 0, 2])
        );
        assert_eq!(family_poly("J", 1).unwrap(), UniPoly::from_ints(&[1, 2, 1]));
        assert!(family_poly("J", 0).is_err());
        assert!(matches!(family_poly("Y", 2), Err(Error::UnknownFamily(_))));
    }

    #[test]
    fn closed_n_poly() {
        assert_eq!(n_poly_closed(1), UniPoly::x());
        assert_eq!(n_poly_closed(2), UniPoly::from_ints(&[0, 2, 1]));
        assert_eq!(n_poly_closed(3), UniPoly::from_ints(&[0, 4, 10, 1]));
    }

    #[test]
    fn double_factorials() {
        assert_eq!(double_factorial(-1).unwrap(), BigInt::from(1));
        assert_eq!(double_factorial(7).unwrap(), BigInt::from(105));
        assert_eq!(double_factorial(4), Err(Error::DoubleFactorialArgument(4)));
        assert_eq!(
            double_factorial(-3),
            Err(Error::DoubleFactorialArgument(-3))
        );
        assert_eq!(row(Family::R, 4)[4], double_factorial(7).unwrap());
    }

    #[test]
    fn registered_rows_are_nonnegative() {
        for f in Family::ALL {
            for r in named_spec(f).rows_through(20) {
                assert!(is_nonnegative(&r), "{f} row {}", r.n());
            }
        }
    }

    #[test]
    fn stirling_explicit_small() {
        assert_eq!(stirling2_explicit(0, 0), BigInt::from(1));
        assert_eq!(stirling2_explicit(3, 0), BigInt::from(0));
        assert_eq!(stirling2_explicit(5, 2), BigInt::from(15));
        assert_eq!(stirling2_explicit(10, 4), BigInt::from(34105));
    }

    #[test]
    fn polynomial_recurrences() {
        assert_eq!(capital_f_polys(1)[1], UniPoly::from_ints(&[0, 2, 0, 2]));
        assert_eq!(secant_f_polys(2)[2], UniPoly::from_ints(&[1, 0, 8, 0, 8]));
        assert_eq!(r_polys(2)[2], UniPoly::from_ints(&[0, 1, 0, 4, 0, 3]));
        assert_eq!(t_polys(3)[3], UniPoly::from_ints(&[0, 0, 4, 0, 18, 0, 15]));
        assert_eq!(n_polys(4)[4], UniPoly::from_ints(&[0, 8, 60, 36, 1]));
        assert_eq!(w_polys(3)[3], UniPoly::from_ints(&[0, 1, 7, 12, 6]));
    }
}
