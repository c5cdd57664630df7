//! Exact arithmetic substrate: big integers and rationals (from `num`),
//! dense rational polynomials, and truncated power series in `t` with
//! polynomial coefficients.

mod poly;
mod series;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use poly::{rat, ratio, Degree, UniPoly};
pub use series::{scalar_series, TruncSeries};

use num_traits::One;

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

pub fn pow2(e: usize) -> BigInt {
    BigInt::one() << e
}
