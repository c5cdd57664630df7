//! Run the verification suites in-process, then show that a corrupted
//! triangle entry is caught.

use tansec::verify::{exit_code, run_verify, summary_table, Status, Suite, TriangleStore};
use tansec::{BigInt, Family};

pub fn run_example() -> tansec::Result<()> {
    let max_n = 8;
    let store = TriangleStore::new(max_n);
    let records = run_verify(Suite::All, max_n, &store);
    print!("{}", summary_table(&records));
    assert_eq!(exit_code(&records), 0);

    let mut broken = store.clone();
    broken.perturb(Family::T, 5, 3, &BigInt::from(1))?;
    let records = run_verify(Suite::All, max_n, &broken);
    for r in records.iter().filter(|r| r.status == Status::Fail) {
        println!("{} {} n={}: {}", r.check, r.family, r.n, r.detail);
    }
    assert_eq!(exit_code(&records), 1);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("verify example");
}
