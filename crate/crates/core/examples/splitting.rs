// Split modules and comodules of a direct sum into pieces over the blocks.

use std::sync::Arc;

use weakhopf::comodule::regular_comodule;
use weakhopf::decompose::{split_comodule, split_module, LeftModule};
use weakhopf::fixtures::sum;
use weakhopf::{decompose, FieldSpec};

pub fn run() -> weakhopf::Result<()> {
    let h = Arc::new(sum(FieldSpec::Rationals));
    let splitting = decompose(&h)?.splitting;
    let m = split_module(&splitting, &LeftModule::regular(&h))?;
    println!("regular module splits into pieces of dims {:?}", m.pieces.iter().map(LeftModule::dim).collect::<Vec<_>>());
    let c = split_comodule(&splitting, &regular_comodule(&h))?;
    println!("regular comodule splits into pieces of dims {:?}", c.pieces.iter().map(|p| p.dim()).collect::<Vec<_>>());
    println!("basis change {}", c.basis_change);
    Ok(())
}

#[allow(dead_code)]
fn main() -> weakhopf::Result<()> {
    run()
}
