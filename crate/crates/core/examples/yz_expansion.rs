//! Iterate `D`, `Dy` and `yD` on `y = tan`, `z = sec`, read triangle rows
//! off the expansions, and reduce with `z^2 = 1 + y^2`.

use tansec::identities::derivative_polys_pq;
use tansec::yz::{extract_row, op_iterate, shape_row, ExtractionShape, OpKind, Seed};

pub fn run_example() -> tansec::Result<()> {
    let e3 = op_iterate(OpKind::Dy, Seed::Y, 3);
    println!("(Dy)^3(y) = {e3}");
    println!(
        "E row 3: {:?}",
        extract_row(&e3, ExtractionShape::E, 3)?.entries()
    );

    for shape in [ExtractionShape::H, ExtractionShape::J, ExtractionShape::N] {
        let row = shape_row(shape, 4)?;
        println!("{} row 4: {:?}", shape.name(), row.entries());
    }

    // D^n(y) is P_n(y) and D^n(z) is z Q_n(y) once z^2 is eliminated
    let (p, q) = derivative_polys_pq(4);
    let (p_part, _) = op_iterate(OpKind::D, Seed::Y, 4).reduce_canonical();
    let (_, q_part) = op_iterate(OpKind::D, Seed::Z, 4).reduce_canonical();
    println!("P_4(u) = {}", p.display_in("u"));
    println!("Q_4(u) = {}", q.display_in("u"));
    assert_eq!(p_part, p);
    assert_eq!(q_part, q);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("yz expansion example");
}
