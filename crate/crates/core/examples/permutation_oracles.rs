//! Count permutations, signed permutations, matchings and set partitions by
//! statistic and compare with the triangle rows.

use tansec::oracle::{
    alternating_count, matching_odd_smaller_distribution, perm_statistic_distribution,
    set_partition_counts, signed_perm_desb_distribution, PermStatistic,
};
use tansec::triangle::{named_spec, Family};

pub fn run_example() -> tansec::Result<()> {
    let n = 6;
    let row = |f: Family| named_spec(f).row(n).expect("row");

    let descents = perm_statistic_distribution(n, PermStatistic::DescentPlusOne)?;
    println!("des+1 over S_{n}: {:?}", descents.counts);
    assert!(descents.matches_row(&row(Family::A)));

    let peaks = perm_statistic_distribution(n, PermStatistic::InteriorPeak)?;
    println!("interior peaks over S_{n}: {:?}", peaks.counts);

    let signed = signed_perm_desb_distribution(n)?;
    println!("type-B descents over B_{n}: {:?}", signed.counts);
    assert!(signed.matches_row(&row(Family::B)));

    let matchings = matching_odd_smaller_distribution(n)?;
    println!(
        "matchings of [{}] by odd-smaller blocks: {:?}",
        2 * n,
        matchings.counts
    );
    assert!(matchings.matches_row(&row(Family::N)));

    let partitions = set_partition_counts(n)?;
    assert!(partitions.matches_row(&row(Family::S)));

    let euler: Vec<_> = (0..=n).map(alternating_count).collect::<Result<_, _>>()?;
    println!("alternating permutations: {euler:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("oracle example");
}
