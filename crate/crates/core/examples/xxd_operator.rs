//! Normal ordering of `((x+x^2)D)^n` in the basis `(x+x^2)^k D^k`.

use tansec::exact::UniPoly;
use tansec::operator::{expand_xxd_power, from_basis, xxd_power};
use tansec::triangle::{named_spec, Family};

pub fn run_example() -> tansec::Result<()> {
    for n in 1..=4 {
        let g = expand_xxd_power(n)?;
        let shown: Vec<String> = g.iter().map(|p| p.to_compact("x")).collect();
        println!("n = {n}: G_(n,k) = {shown:?}");
    }

    // the coefficients of G_(n,1) are k! S(n,k)
    let g5 = &expand_xxd_power(5)?[0];
    let s5 = named_spec(Family::S).row(5).expect("row");
    println!(
        "G_(5,1) = {}, S(5,k) = {:?}",
        g5.to_compact("x"),
        s5.entries()
    );

    // applying the expansion equals applying the operator n times
    let op = from_basis(&expand_xxd_power(6)?);
    let t = UniPoly::from_ints(&[1, 0, 0, 1]);
    assert_eq!(op.apply(&t), xxd_power(6).apply(&t));
    println!(
        "((x+x^2)D)^6 x = {}",
        xxd_power(6).apply(&UniPoly::x()).to_compact("x")
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("operator example");
}
