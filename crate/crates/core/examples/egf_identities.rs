//! Truncated series for `tan`, `sec`, the Eulerian EGF and the squared
//! `N` generating function.

use tansec::identities::{
    check_prop1, check_thm6, egf_a_closed, n_squared_identity_holds, tan_sec_series,
};
use tansec::triangle::n_polys;

pub fn run_example() -> tansec::Result<()> {
    let pair = tan_sec_series(12);
    let euler: Vec<_> = (0..=12).map(|n| pair.euler_number(n)).collect();
    println!("n! [t^n] (tan + sec): {euler:?}");
    println!("tan^2 + 1 = sec^2: {}", pair.pythagorean_holds());

    let egf = egf_a_closed(6);
    for n in 0..=6 {
        println!("A_{n}(x) = {}", egf.egf_coeff(n).to_compact("x"));
    }

    let prop1 = check_prop1(8, 16)?;
    println!(
        "derivative identity for n <= 8: {}",
        prop1.iter().all(|o| o.holds)
    );
    println!(
        "convolution for n <= 12: {}",
        check_thm6(12).iter().all(|o| o.holds)
    );
    println!(
        "N^2 identity through t^10: {}",
        n_squared_identity_holds(&n_polys(10), 10)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("series example");
}
