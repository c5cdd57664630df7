//! Exhaustive enumeration of permutations, signed permutations, perfect
//! matchings and set partitions. These are the independent side of every
//! combinatorial interpretation the triangles claim.
//!
//! Enumeration is streaming: one object lives at a time, counters are `u64`
//! and converted to `BigInt` at the end. The bounds keep the largest case
//! (10! permutations, 15!! matchings) well inside a minute.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::triangle::{trim_zeros, TriangleRow};

/// Counts of objects by statistic value; `counts[i]` is the number with
/// value `offset + i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatDistribution {
    pub n: usize,
    pub offset: usize,
    pub counts: Vec<BigInt>,
}

impl StatDistribution {
    fn from_counts(n: usize, offset: usize, counts: &[u64]) -> Self {
        Self {
            n,
            offset,
            counts: counts[offset..].iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    pub fn total(&self) -> BigInt {
        self.counts.iter().sum()
    }

    /// Values indexed from 0, trailing zeros trimmed.
    pub fn dense(&self) -> Vec<BigInt> {
        let mut out = vec![BigInt::from(0); self.offset];
        out.extend(self.counts.iter().cloned());
        trim_zeros(out)
    }

    pub fn matches_row(&self, row: &TriangleRow) -> bool {
        self.dense() == row.dense()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PermStatistic {
    /// `des(π) + 1`
    DescentPlusOne,
    /// `#{2 ≤ i ≤ n-1 : π(i-1) < π(i) > π(i+1)}`
    InteriorPeak,
    /// interior peaks plus index 1 when `π(1) > π(2)`
    LeftPeak,
}

impl PermStatistic {
    fn eval(self, p: &[u8]) -> usize {
        let n = p.len();
        match self {
            PermStatistic::DescentPlusOne => 1 + p.windows(2).filter(|w| w[0] > w[1]).count(),
            PermStatistic::InteriorPeak => interior_peaks(p),
            PermStatistic::LeftPeak => interior_peaks(p) + usize::from(n >= 2 && p[0] > p[1]),
        }
    }

    fn min_value(self, n: usize) -> usize {
        match self {
            PermStatistic::DescentPlusOne => usize::from(n >= 1),
            _ => 0,
        }
    }

    fn max_value(self, n: usize) -> usize {
        match self {
            PermStatistic::DescentPlusOne => n,
            PermStatistic::InteriorPeak => n.saturating_sub(1) / 2,
            PermStatistic::LeftPeak => n / 2,
        }
    }
}

fn interior_peaks(p: &[u8]) -> usize {
    p.windows(3).filter(|w| w[0] < w[1] && w[1] > w[2]).count()
}

fn check_bounds(what: &'static str, n: usize, min: usize, max: usize) -> Result<()> {
    if (min..=max).contains(&n) {
        Ok(())
    } else {
        Err(Error::OutOfBounds { what, n, min, max })
    }
}

/// Steps `p` to its lexicographic successor; false after the last one.
fn next_permutation(p: &mut [u8]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn for_each_permutation(n: usize, mut f: impl FnMut(&[u8])) {
    let mut p: Vec<u8> = (1..=n as u8).collect();
    loop {
        f(&p);
        if !next_permutation(&mut p) {
            break;
        }
    }
}

/// Distribution of a permutation statistic over all of `S_n`, `1 ≤ n ≤ 10`.
pub fn perm_statistic_distribution(n: usize, stat: PermStatistic) -> Result<StatDistribution> {
    check_bounds("permutation enumeration", n, 1, 10)?;
    let mut counts = vec![0u64; stat.max_value(n) + 1];
    for_each_permutation(n, |p| counts[stat.eval(p)] += 1);
    Ok(StatDistribution::from_counts(n, stat.min_value(n), &counts))
}

/// Type-B descents over all `2^n n!` signed permutations, `1 ≤ n ≤ 7`:
/// `#{i ∈ [n] : w(i-1) > w(i)}` with `w(0) = 0`.
pub fn signed_perm_desb_distribution(n: usize) -> Result<StatDistribution> {
    check_bounds("signed permutation enumeration", n, 1, 7)?;
    let mut counts = vec![0u64; n + 1];
    let mut w = vec![0i8; n + 1];
    for_each_permutation(n, |p| {
        for signs in 0u32..(1 << n) {
            for i in 0..n {
                let v = p[i] as i8;
                w[i + 1] = if signs >> i & 1 == 1 { -v } else { v };
            }
            let des = w.windows(2).filter(|x| x[0] > x[1]).count();
            counts[des] += 1;
        }
    });
    Ok(StatDistribution::from_counts(n, 0, &counts))
}

/// Number of down-up permutations `π(1) > π(2) < π(3) > ...` of `[n]`,
/// `0 ≤ n ≤ 10`. The empty permutation counts, so `E_0 = 1`.
pub fn alternating_count(n: usize) -> Result<BigInt> {
    check_bounds("alternating permutation count", n, 0, 10)?;
    if n == 0 {
        return Ok(BigInt::from(1));
    }
    let mut count = 0u64;
    for_each_permutation(n, |p| {
        let alternating =
            p.windows(2)
                .enumerate()
                .all(|(i, w)| if i % 2 == 0 { w[0] > w[1] } else { w[0] < w[1] });
        count += u64::from(alternating);
    });
    Ok(BigInt::from(count))
}

/// Perfect matchings of `[2n]` by the number of blocks whose smaller element
/// is odd, `1 ≤ n ≤ 8`.
///
/// Matchings are generated canonically: pair the smallest unmatched element
/// with each larger unmatched one, then recurse.
pub fn matching_odd_smaller_distribution(n: usize) -> Result<StatDistribution> {
    check_bounds("perfect matching enumeration", n, 1, 8)?;
    fn recurse(used: &mut [bool], odd_blocks: usize, counts: &mut [u64]) {
        let Some(first) = used.iter().position(|&u| !u) else {
            counts[odd_blocks] += 1;
            return;
        };
        used[first] = true;
        // elements are 1-based: index i holds i + 1
        let odd = usize::from(first % 2 == 0);
        for partner in first + 1..used.len() {
            if !used[partner] {
                used[partner] = true;
                recurse(used, odd_blocks + odd, counts);
                used[partner] = false;
            }
        }
        used[first] = false;
    }
    let mut counts = vec![0u64; n + 1];
    recurse(&mut vec![false; 2 * n], 0, &mut counts);
    Ok(StatDistribution::from_counts(n, 1, &counts))
}

/// Set partitions of `[n]` by number of blocks, `1 ≤ n ≤ 10`, enumerated as
/// restricted growth strings.
pub fn set_partition_counts(n: usize) -> Result<StatDistribution> {
    check_bounds("set partition enumeration", n, 1, 10)?;
    fn recurse(remaining: usize, blocks: usize, counts: &mut [u64]) {
        if remaining == 0 {
            counts[blocks] += 1;
            return;
        }
        // join one of the existing blocks, or open a new one
        for _ in 0..blocks {
            recurse(remaining - 1, blocks, counts);
        }
        recurse(remaining - 1, blocks + 1, counts);
    }
    let mut counts = vec![0u64; n + 1];
    recurse(n, 0, &mut counts);
    Ok(StatDistribution::from_counts(n, 1, &counts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::factorial;
    use crate::triangle::double_factorial;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn permutation_statistics_small() {
        let d = perm_statistic_distribution(3, PermStatistic::DescentPlusOne).unwrap();
        assert_eq!(d.counts, ints(&[1, 4, 1]));
        assert_eq!(d.offset, 1);
        let d = perm_statistic_distribution(3, PermStatistic::InteriorPeak).unwrap();
        assert_eq!(d.counts, ints(&[4, 2]));
        let d = perm_statistic_distribution(2, PermStatistic::LeftPeak).unwrap();
        assert_eq!(d.counts, ints(&[1, 1]));
        for n in 1..=7 {
            for stat in [
                PermStatistic::DescentPlusOne,
                PermStatistic::InteriorPeak,
                PermStatistic::LeftPeak,
            ] {
                let d = perm_statistic_distribution(n, stat).unwrap();
                assert_eq!(d.total(), factorial(n as u64));
            }
        }
    }

    #[test]
    fn signed_descents() {
        assert_eq!(
            signed_perm_desb_distribution(1).unwrap().counts,
            ints(&[1, 1])
        );
        assert_eq!(
            signed_perm_desb_distribution(2).unwrap().counts,
            ints(&[1, 6, 1])
        );
        assert_eq!(
            signed_perm_desb_distribution(3).unwrap().counts,
            ints(&[1, 23, 23, 1])
        );
    }

    #[test]
    fn alternating_small() {
        let expected = [1, 1, 1, 2, 5, 16, 61];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(alternating_count(n).unwrap(), BigInt::from(e), "n = {n}");
        }
    }

    #[test]
    fn matchings_small() {
        assert_eq!(
            matching_odd_smaller_distribution(1).unwrap().counts,
            ints(&[1])
        );
        assert_eq!(
            matching_odd_smaller_distribution(2).unwrap().counts,
            ints(&[2, 1])
        );
        assert_eq!(
            matching_odd_smaller_distribution(4).unwrap().counts,
            ints(&[8, 60, 36, 1])
        );
        for n in 1..=6 {
            let d = matching_odd_smaller_distribution(n).unwrap();
            assert_eq!(d.total(), double_factorial(2 * n as i64 - 1).unwrap());
        }
    }

    #[test]
    fn partitions_small() {
        assert_eq!(set_partition_counts(1).unwrap().counts, ints(&[1]));
        assert_eq!(set_partition_counts(3).unwrap().counts, ints(&[1, 3, 1]));
        assert_eq!(set_partition_counts(5).unwrap().total(), BigInt::from(52));
    }

    #[test]
    fn bounds_are_enforced() {
        assert!(matches!(
            perm_statistic_distribution(0, PermStatistic::InteriorPeak),
            Err(Error::OutOfBounds { .. })
        ));
        assert!(perm_statistic_distribution(11, PermStatistic::LeftPeak).is_err());
        assert!(signed_perm_desb_distribution(8).is_err());
        assert!(alternating_count(11).is_err());
        assert!(matching_odd_smaller_distribution(9).is_err());
        assert!(set_partition_counts(0).is_err());
    }
}
