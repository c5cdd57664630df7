//! Generate the registered triangles from their recurrences and cross-check
//! a few rows against closed forms.

use tansec::export::{emit_triangle, Format};
use tansec::triangle::{
    explicit_entry, interleave_j, n_poly_closed, named_spec, row_poly, worpitzky_from_a, Family,
};

pub fn run_example() -> tansec::Result<()> {
    for family in [Family::A, Family::B, Family::N, Family::T] {
        let rows = named_spec(family).rows_through(5);
        let last = rows.last().expect("rows");
        println!(
            "{family}_5 = {}",
            row_poly(family, last).to_compact(family.var())
        );
    }

    let a5: Vec<_> = (1..=5)
        .map(|k| explicit_entry(Family::A, 5, k))
        .collect::<Result<_, _>>()?;
    println!("A(5,k) from the alternating sum: {a5:?}");

    println!("J_3 row: {:?}", interleave_j(3).entries());
    println!(
        "a(4,k) by binomial transform: {:?}",
        worpitzky_from_a(4).entries()
    );
    println!(
        "N_4 from the Stirling form: {}",
        n_poly_closed(4).to_compact("x")
    );

    print!("{}", emit_triangle(Family::N, 4, Format::Csv)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("triangle example");
}
