// Direct sums and their decomposition into indecomposable blocks.

use std::sync::Arc;

use weakhopf::decompose::{direct_sum_with_blocks, is_indecomposable};
use weakhopf::fixtures::{c2, gpd2, z3};
use weakhopf::{decompose, FieldSpec};

pub fn run() -> weakhopf::Result<()> {
    let q = FieldSpec::Rationals;
    let (g, c) = (gpd2(q), c2(q));
    let s = direct_sum_with_blocks(&[&g, &c, &g])?;
    let report = decompose(&s.whole)?;
    println!("GPD2 ⊕ C2 ⊕ GPD2: blocks of dims {:?}", report.block_dims());
    for (b, cert) in report.splitting.blocks.iter().zip(&report.certificates) {
        println!("  {:?}: {:?}", b.bialgebra.labels(), cert);
    }
    println!("GPD2 indecomposable: {:?}", is_indecomposable(&Arc::new(g))?);
    println!("Z/3 over GF(2) indecomposable: {:?}", is_indecomposable(&Arc::new(z3(FieldSpec::Prime(2))))?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> weakhopf::Result<()> {
    run()
}
