// The dual weak bialgebra and its compatibility with direct sums.

use weakhopf::fixtures::{c2, gpd2};
use weakhopf::weak::dualize;
use weakhopf::{direct_sum, FieldSpec};

pub fn run() -> weakhopf::Result<()> {
    let q = FieldSpec::Rationals;
    let g = gpd2(q);
    let d = dualize(&g)?;
    println!("GPD2*: basis {:?}, dim H_s {}", d.labels(), d.h_s().dim());
    println!("GPD2** has the same tensors: {}", dualize(&d)?.algebra().mult_tensor() == g.algebra().mult_tensor());

    let lhs = dualize(&direct_sum(&c2(q), &g)?)?;
    let rhs = direct_sum(&dualize(&c2(q))?, &d)?;
    let same = lhs.algebra().mult_tensor() == rhs.algebra().mult_tensor()
        && lhs.coalgebra().comult_tensor() == rhs.coalgebra().comult_tensor();
    println!("(C2 ⊕ GPD2)* = C2* ⊕ GPD2*: {same}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> weakhopf::Result<()> {
    run()
}
