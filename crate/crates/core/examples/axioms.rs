// Build weak bialgebras from structure constants and watch the axiom
// checks name the first broken entries.

use weakhopf::fixtures::{gpd2, groupoid_algebra, GroupoidPresentation};
use weakhopf::weak::{solve_antipode, AntipodeSolution};
use weakhopf::{build_weak_bialgebra, Error, FieldSpec, FiniteAlgebra};

pub fn run() -> weakhopf::Result<()> {
    let q = FieldSpec::Rationals;
    let h = gpd2(q);
    println!("GPD2: dim {}, basis {:?}, ordinary bialgebra: {}", h.dim(), h.labels(), h.is_ordinary_bialgebra());

    // f·g = e2; moving that product to e1 breaks the algebra
    let mut mult = h.algebra().mult_tensor().to_vec();
    let n = h.dim();
    mult[(2 * n + 3) * n + 1] = q.zero();
    mult[(2 * n + 3) * n] = q.one();
    let alg = FiniteAlgebra::new(q, h.labels().to_vec(), mult, h.unit().to_vec())?;
    match build_weak_bialgebra(alg, h.coalgebra().clone()) {
        Err(e) => println!("perturbed: {e}"),
        Ok(_) => return Err(Error::Internal("perturbation went unnoticed".into())),
    }

    match solve_antipode(&h) {
        AntipodeSolution::Antipode(s) => println!("antipode solved from the axioms: {s}"),
        other => println!("antipode: {other:?}"),
    }

    let three = groupoid_algebra(&GroupoidPresentation::indiscrete(3)?, FieldSpec::Prime(5))?;
    println!("indiscrete groupoid on 3 objects over GF(5): dim {}, dim H_s {}", three.dim(), three.h_s().dim());
    Ok(())
}

#[allow(dead_code)]
fn main() -> weakhopf::Result<()> {
    run()
}
