// Comodules, the tensor product over the source subalgebra, and the
// coherence of the resulting monoidal category.

use std::sync::Arc;

use weakhopf::comodule::{associator, hom_space, pentagon, regular_comodule, tensor_over_source, triangle, unit_comodule, unitors};
use weakhopf::fixtures::gpd2;
use weakhopf::FieldSpec;

pub fn run() -> weakhopf::Result<()> {
    let h = Arc::new(gpd2(FieldSpec::Rationals));
    let reg = regular_comodule(&h);
    let unit = unit_comodule(&h)?;
    let uu = tensor_over_source(&unit, &unit)?;
    println!("unit: dim {}, unit ⊛ unit: dim {}", unit.dim(), uu.comodule.dim());
    let ru = tensor_over_source(&reg, &unit)?;
    println!("regular ⊛ unit: dim {} (relators span {})", ru.comodule.dim(), ru.relators.dim());

    let u = unitors(&reg)?;
    println!("l and r on the regular comodule are isomorphisms: {}", u.l.is_isomorphism() && u.r.is_isomorphism());
    println!("α(reg, unit, reg) is an isomorphism: {}", associator(&reg, &unit, &reg)?.is_isomorphism());

    let objects = [("unit", &unit), ("regular", &reg)];
    for (na, a) in objects {
        for (nb, b) in objects {
            println!("triangle({na}, {nb}): {}", triangle(a, b)?.is_pass());
        }
    }
    println!("pentagon(reg, unit, reg, unit): {}", pentagon(&reg, &unit, &reg, &unit)?.is_pass());
    println!("dim End(regular) = {}", hom_space(&reg, &reg)?.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> weakhopf::Result<()> {
    run()
}
