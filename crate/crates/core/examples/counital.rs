// The counital maps, the counital subalgebras and the derived identities.

use weakhopf::fixtures::gpd2;
use weakhopf::weak::{counital, lemma_suite};
use weakhopf::{CounitalMap, FieldSpec};

pub fn run() -> weakhopf::Result<()> {
    let h = gpd2(FieldSpec::Rationals);
    for which in CounitalMap::ALL {
        println!("ε_{which} = {}", h.counital_matrix(which));
    }
    let f = h.basis_vec(2);
    println!("ε_t(f) = {:?}", counital(&h, CounitalMap::Target, &f)?.iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("ε_s(f) = {:?}", counital(&h, CounitalMap::Source, &f)?.iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("dim H_t = {}, dim H_s = {}", h.h_t().dim(), h.h_s().dim());

    let report = lemma_suite(&h)?;
    for c in &report.checks {
        println!("{:>4}  {}", if c.verdict.is_pass() { "ok" } else { "FAIL" }, c.name);
    }
    assert!(report.is_pass());
    Ok(())
}

#[allow(dead_code)]
fn main() -> weakhopf::Result<()> {
    run()
}
