//! Sturm sequences, root isolation and interlacing for `N_n`, plus the
//! exact moments and the normal-approximation distances.

use tansec::analytic::{
    clt_report, count_real_roots, isolate_roots, moment_stats, sturm_chain, verify_interlacing,
    Bound,
};
use tansec::exact::rat;
use tansec::triangle::n_polys;

pub fn run_example() -> tansec::Result<()> {
    let n6 = &n_polys(6)[6];
    let chain = sturm_chain(n6)?;
    let roots = count_real_roots(&chain, &Bound::NegInf, &Bound::Finite(rat(0)))?;
    println!("N_6 has {roots} distinct roots on (-inf, 0]");
    for (a, b) in isolate_roots(n6)? {
        println!("  ({a}, {b}]");
    }

    for n in [5, 10, 15] {
        let r = verify_interlacing(n)?;
        println!("N_{n} interlaces N_{}: {}", n - 1, r.holds());
    }

    let m = moment_stats(10)?;
    println!(
        "n = 10: mean {}, variance {}, modes {:?}",
        m.mean, m.variance, m.modes
    );

    let clt = clt_report(&[10, 20, 40])?;
    println!("sup distances: {:?}", clt.distances);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("roots example");
}
