// Recover a weak bialgebra map from the coactions a functor assigns.
//
// With an argument, writes the functor data of the GPD2 swap to that path.

use std::sync::Arc;

use weakhopf::document::emit_functor;
use weakhopf::fixtures::{enumerate_automorphisms, gpd2, AUTOMORPHISM_DIM_BOUND};
use weakhopf::tannaka::{induced_functor, reconstruct_weak_bialgebra_map};
use weakhopf::comodule::regular_comodule;
use weakhopf::{FieldSpec, FunctorData};

pub fn run() -> weakhopf::Result<()> {
    let h = Arc::new(gpd2(FieldSpec::Rationals));
    let comodules = FunctorData::standard_comodules(&h)?;
    let autos = enumerate_automorphisms(&h, AUTOMORPHISM_DIM_BOUND)?;
    for phi in &autos {
        let fd = FunctorData::induced_by(phi, &comodules)?;
        let r = reconstruct_weak_bialgebra_map(&fd)?;
        for layer in &r.layers {
            println!("  {:<40} {}", layer.name, if layer.verdict.is_pass() { "pass" } else { "FAIL" });
        }
        println!("reconstructed φ = {} (matches: {})", r.phi, &r.phi == phi.matrix());
    }
    let reg = regular_comodule(&h);
    let coactions: Vec<_> = autos.iter().map(|a| induced_functor(a, &reg)).collect::<Result<_, _>>()?;
    println!("distinct maps give distinct coactions: {}", coactions[0] != coactions[1]);

    if let Some(path) = std::env::args().nth(1) {
        let fd = FunctorData::induced_by(&autos[1], &comodules)?;
        std::fs::write(&path, emit_functor(&fd)).map_err(|e| weakhopf::Error::Malformed(e.to_string()))?;
        println!("wrote {path}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> weakhopf::Result<()> {
    run()
}
