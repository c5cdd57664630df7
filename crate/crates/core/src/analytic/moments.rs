use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use statrs::function::erf::erfc;

use crate::error::{Error, Result};
use crate::exact::ratio;
use crate::triangle::{double_factorial, named_spec, Family, TriangleRow};

/// Allowed `|σ_n² - (2n+1)/24|` for `3 ≤ n ≤ 50`.
pub const VARIANCE_TOLERANCE: (i64, i64) = (1, 10);

/// Slack allowed when checking that CLT distances do not increase with `n`.
pub const CLT_MONOTONE_SLACK: f64 = 0.005;

/// Exact statistics of the distribution `k ↦ N(n,k) / N_n(1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentReport {
    pub n: usize,
    /// `N_n(1)`
    pub total: BigInt,
    /// `N_n'(1)`
    pub first_derivative: BigInt,
    /// `N_n''(1)`
    pub second_derivative: BigInt,
    pub mean: BigRational,
    pub variance: BigRational,
    /// Every `k` at which `N(n,k)` is maximal, increasing.
    pub modes: Vec<usize>,
}

pub fn moments_from_row(row: &TriangleRow) -> MomentReport {
    let mut total = BigInt::zero();
    let mut d1 = BigInt::zero();
    let mut d2 = BigInt::zero();
    let mut best: Option<&BigInt> = None;
    let mut modes = Vec::new();
    for (k, c) in row.iter() {
        total += c;
        d1 += c * k;
        d2 += c * (k * k.saturating_sub(1));
        match best.map(|b| c.cmp(b)) {
            None | Some(std::cmp::Ordering::Greater) => {
                best = Some(c);
                modes = vec![k];
            }
            Some(std::cmp::Ordering::Equal) => modes.push(k),
            Some(std::cmp::Ordering::Less) => {}
        }
    }
    let (mean, variance) = if total.is_zero() {
        (BigRational::zero(), BigRational::zero())
    } else {
        let t = BigRational::from_integer(total.clone());
        let mean = BigRational::from_integer(d1.clone()) / &t;
        let variance = BigRational::from_integer(d2.clone()) / &t + &mean - &mean * &mean;
        (mean, variance)
    };
    MomentReport {
        n: row.n(),
        total,
        first_derivative: d1,
        second_derivative: d2,
        mean,
        variance,
        modes,
    }
}

/// Moments of the `n`-th row of `N`, `n ≥ 1`.
pub fn moment_stats(n: usize) -> Result<MomentReport> {
    if n == 0 {
        return Err(Error::OutOfBounds {
            what: "moment statistics",
            n,
            min: 1,
            max: usize::MAX,
        });
    }
    let row = named_spec(Family::N)
        .row(n)
        .expect("N is defined for n >= 0");
    Ok(moments_from_row(&row))
}

/// `N_{n+1}'(1) = (2n+1)!! + (2n-1) N_n'(1)`.
pub fn first_moment_recurrence_holds(x_n: &BigInt, x_next: &BigInt, n: usize) -> bool {
    let df = double_factorial(2 * n as i64 + 1).expect("odd argument");
    *x_next == df + x_n * (2 * n as i64 - 1)
}

/// `|μ_n - (2n+1)/4| ≤ 1/(4(2n-1))`.
pub fn mean_gap_holds(r: &MomentReport) -> bool {
    let n = r.n as i64;
    let gap = (&r.mean - ratio(2 * n + 1, 4)).abs();
    gap <= ratio(1, 4 * (2 * n - 1))
}

/// `σ_n² - (2n+1)/24`.
pub fn variance_defect(r: &MomentReport) -> BigRational {
    &r.variance - ratio(2 * r.n as i64 + 1, 24)
}

/// Modes are one index or two adjacent ones, and each lies in
/// `{⌊μ_n⌋, ⌈μ_n⌉}` and in `{⌊(2n+1)/4⌋, ⌈(2n+1)/4⌉}`.
pub fn mode_in_bracket(r: &MomentReport) -> bool {
    let shape_ok = match r.modes.as_slice() {
        [_] => true,
        [a, b] => *b == a + 1,
        _ => false,
    };
    let bracket = |q: &BigRational| {
        let lo = q.floor().to_integer();
        let hi = q.ceil().to_integer();
        (lo, hi)
    };
    let (lo, hi) = bracket(&r.mean);
    let (plo, phi) = bracket(&ratio(2 * r.n as i64 + 1, 4));
    shape_ok
        && r.modes.iter().all(|&k| {
            let k = BigInt::from(k);
            (k == lo || k == hi) && (k == plo || k == phi)
        })
}

/// The closed form `(2n+1)!!/4` printed for `N_n'(1)`; it solves the
/// recurrence but not the initial value `N_1'(1) = 1`.
pub fn printed_first_moment(n: usize) -> BigRational {
    let df = double_factorial(2 * n as i64 + 1).expect("odd argument");
    BigRational::new(df, BigInt::from(4))
}

/// Kolmogorov distance between each normalized `N` row and the standard
/// normal, sampled at the integers.
#[derive(Clone, Debug, PartialEq)]
pub struct CltReport {
    pub ns: Vec<usize>,
    pub distances: Vec<f64>,
    /// Distances never rise by more than [`CLT_MONOTONE_SLACK`] along `ns`.
    pub monotone_with_slack: bool,
}

fn normal_cdf(z: f64) -> f64 {
    0.5 * erfc(-z / std::f64::consts::SQRT_2)
}

fn to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// `sup_k |F_n(k) - Φ((k - μ_n)/σ_n)|` for each `n` in `ns` (`1 ≤ n ≤ 200`).
pub fn clt_report(ns: &[usize]) -> Result<CltReport> {
    let max = ns.iter().copied().max().unwrap_or(0);
    if let Some(&bad) = ns.iter().find(|&&n| n == 0 || n > 200) {
        return Err(Error::OutOfBounds {
            what: "CLT report",
            n: bad,
            min: 1,
            max: 200,
        });
    }
    let rows = named_spec(Family::N).rows_through(max);
    let mut distances = Vec::with_capacity(ns.len());
    for &n in ns {
        let row = &rows[n];
        let m = moments_from_row(row);
        let mu = to_f64(&m.mean);
        let sigma = to_f64(&m.variance).sqrt();
        let total = BigRational::from_integer(m.total.clone());
        let mut cumulative = BigInt::zero();
        let mut sup = 0f64;
        for (k, c) in row.iter() {
            cumulative += c;
            let f = to_f64(&(BigRational::from_integer(cumulative.clone()) / &total));
            let phi = if sigma > 0.0 {
                normal_cdf((k as f64 - mu) / sigma)
            } else {
                f64::from(u8::from(k as f64 >= mu))
            };
            sup = sup.max((f - phi).abs());
        }
        distances.push(sup);
    }
    let monotone_with_slack = distances
        .windows(2)
        .all(|w| w[1] <= w[0] + CLT_MONOTONE_SLACK);
    Ok(CltReport {
        ns: ns.to_vec(),
        distances,
        monotone_with_slack,
    })
}
