//! Acceptance run: one line per criterion with its measured runtime.

mod common;

use std::sync::Arc;
use std::time::{Duration, Instant};

use weakhopf::comodule::{bimodule_checks, regular_comodule, tensor_over_source, unit_comodule, unitors, Comodule, TensorCache};
use weakhopf::decompose::{split_comodule, split_module, LeftModule};
use weakhopf::fixtures::{c2, enumerate_automorphisms, gpd2, k, monoid2, preset, sum, z3};
use weakhopf::structure::{check_algebra, check_coalgebra};
use weakhopf::tannaka::{induced_functor, reconstruct_weak_bialgebra_map};
use weakhopf::weak::{check_weak_axioms, dualize, lemma_suite, verify_antipode};
use weakhopf::{decompose, direct_sum, Certificate, FieldSpec, FiniteAlgebra, FiniteCoalgebra, FunctorData, Matrix, Violation, WeakBialgebra};

const Q: FieldSpec = FieldSpec::Rationals;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(x: E) -> String {
    x.to_string()
}

/// Groupoid GPD2 from its arrow table: basis e1, e2, f: 1→2, g: 2→1.
const ENDS: [(usize, usize); 4] = [(1, 1), (2, 2), (1, 2), (2, 1)];

/// `a·b` when `source(a) = target(b)`.
fn compose(a: usize, b: usize) -> Option<usize> {
    if ENDS[a].0 != ENDS[b].1 {
        return None;
    }
    ENDS.iter().position(|&x| x == (ENDS[b].0, ENDS[a].1))
}

fn inverse_of(a: usize) -> usize {
    ENDS.iter().position(|&x| x == (ENDS[a].1, ENDS[a].0)).unwrap()
}

/// Plain integer structure constants, evaluated without the library.
struct Oracle {
    n: usize,
    mu: Vec<i64>,
    unit: Vec<i64>,
    dl: Vec<i64>,
    eps: Vec<i64>,
}

impl Oracle {
    fn gpd2() -> Self {
        let n = 4;
        let mut mu = vec![0; n * n * n];
        let mut dl = vec![0; n * n * n];
        for a in 0..n {
            for b in 0..n {
                if let Some(c) = compose(a, b) {
                    mu[(a * n + b) * n + c] = 1;
                }
            }
            dl[(a * n + a) * n + a] = 1;
        }
        Oracle {
            n,
            mu,
            unit: vec![1, 1, 0, 0],
            dl,
            eps: vec![1; n],
        }
    }

    fn m(&self, a: usize, b: usize, c: usize) -> i64 {
        self.mu[(a * self.n + b) * self.n + c]
    }

    fn d(&self, a: usize, b: usize, c: usize) -> i64 {
        self.dl[(a * self.n + b) * self.n + c]
    }

    /// Whether the law instance named by a violation really fails.
    fn fails(&self, v: &Violation, labels: &[String]) -> Option<bool> {
        let n = self.n;
        let idx: Vec<usize> = v.witness.iter().map(|w| labels.iter().position(|l| l == w)).collect::<Option<_>>()?;
        let basis = |i: usize| (0..n).map(move |k| (k == i) as i64);
        Some(match (v.law.as_str(), idx.as_slice()) {
            ("associativity", &[a, b, c]) => (0..n).any(|t| {
                let l: i64 = (0..n).map(|m| self.m(a, b, m) * self.m(m, c, t)).sum();
                let r: i64 = (0..n).map(|m| self.m(b, c, m) * self.m(a, m, t)).sum();
                l != r
            }),
            ("unit law (1·x = x)", &[x]) => basis(x).enumerate().any(|(t, bx)| (0..n).map(|u| self.unit[u] * self.m(u, x, t)).sum::<i64>() != bx),
            ("unit law (x·1 = x)", &[x]) => basis(x).enumerate().any(|(t, bx)| (0..n).map(|u| self.unit[u] * self.m(x, u, t)).sum::<i64>() != bx),
            ("coassociativity", &[x]) => (0..n * n * n).any(|pqr| {
                let (p, q, r) = (pqr / (n * n), (pqr / n) % n, pqr % n);
                let l: i64 = (0..n).map(|m| self.d(x, m, r) * self.d(m, p, q)).sum();
                let rr: i64 = (0..n).map(|m| self.d(x, p, m) * self.d(m, q, r)).sum();
                l != rr
            }),
            ("counit law ((ε⊗id)Δ = id)", &[x]) => basis(x).enumerate().any(|(t, bx)| (0..n).map(|p| self.eps[p] * self.d(x, p, t)).sum::<i64>() != bx),
            ("counit law ((id⊗ε)Δ = id)", &[x]) => basis(x).enumerate().any(|(t, bx)| (0..n).map(|q| self.eps[q] * self.d(x, t, q)).sum::<i64>() != bx),
            ("Δ(xy) = Δ(x)Δ(y)", &[x, y]) => (0..n * n).any(|pq| {
                let (p, q) = (pq / n, pq % n);
                let l: i64 = (0..n).map(|m| self.m(x, y, m) * self.d(m, p, q)).sum();
                let mut r = 0;
                for a in 0..n {
                    for b in 0..n {
                        for c in 0..n {
                            for d in 0..n {
                                r += self.d(x, a, b) * self.d(y, c, d) * self.m(a, c, p) * self.m(b, d, q);
                            }
                        }
                    }
                }
                l != r
            }),
            _ => return None,
        })
    }
}

fn violations_of(alg: &FiniteAlgebra, coa: &FiniteCoalgebra) -> Result<Vec<Violation>, String> {
    let mut v = check_algebra(alg).violations;
    v.extend(check_coalgebra(coa).violations);
    if v.is_empty() {
        v = check_weak_axioms(alg, coa).map_err(e)?.violations;
    }
    Ok(v)
}

fn criterion_axioms() -> Outcome {
    for name in ["k", "c2", "gpd2", "z3@gf2", "sum"] {
        let h = preset(name, None).map_err(|x| format!("{name}: {x}"))?;
        let v = violations_of(h.algebra(), h.coalgebra())?;
        ensure(v.is_empty(), || format!("{name}: {}", v[0]))?;
    }
    // canonical antipode S(a) = a⁻¹, built from the arrow table
    let g = gpd2(Q);
    let s = Matrix::from_fn(Q, 4, 4, |r, c| if inverse_of(c) == r { Q.one() } else { Q.zero() });
    ensure(verify_antipode(&g, &s).map_err(e)?.is_pass(), || "gpd2 antipode".into())?;
    let c = c2(Q);
    ensure(verify_antipode(&c, &Matrix::identity(Q, 2)).map_err(e)?.is_pass(), || "c2 antipode".into())?;

    let labels = g.labels().to_vec();
    let mut confirmed = 0;
    for t in 0..20usize {
        let mut o = Oracle::gpd2();
        let mut mult = g.algebra().mult_tensor().to_vec();
        let mut comult = g.coalgebra().comult_tensor().to_vec();
        let what = if t < 12 {
            let i = (t * 37 + 5) % 64;
            mult[i] = &mult[i] + &Q.one();
            o.mu[i] += 1;
            format!("mult[{i}]")
        } else {
            let i = (t * 23 + 1) % 64;
            comult[i] = &comult[i] + &Q.one();
            o.dl[i] += 1;
            format!("comult[{i}]")
        };
        let alg = FiniteAlgebra::new(Q, labels.clone(), mult, g.unit().to_vec()).map_err(e)?;
        let coa = FiniteCoalgebra::new(Q, labels.clone(), comult, g.coalgebra().counit().to_vec()).map_err(e)?;
        let v = violations_of(&alg, &coa)?;
        let first = v.first().ok_or_else(|| format!("perturbation {what} went undetected"))?;
        ensure(o.fails(first, &labels) == Some(true), || format!("perturbation {what}: witness not confirmed: {first}"))?;
        for x in &v {
            ensure(o.fails(x, &labels) != Some(false), || format!("perturbation {what}: false witness {x}"))?;
        }
        confirmed += 1;
    }
    Ok(format!("5 fixtures pass, 2 antipodes verified, {confirmed}/20 perturbations caught with confirmed witnesses"))
}

fn all_fixtures() -> Vec<(String, WeakBialgebra)> {
    let mut out = vec![
        ("k".to_string(), k(Q)),
        ("c2".into(), c2(Q)),
        ("gpd2".into(), gpd2(Q)),
        ("z3@gf2".into(), z3(FieldSpec::Prime(2))),
        ("sum".into(), sum(Q)),
        ("monoid2".into(), monoid2(Q)),
        ("gpd2@gf3".into(), gpd2(FieldSpec::Prime(3))),
    ];
    let duals: Vec<_> = out.iter().map(|(n, h)| (format!("{n}*"), dualize(h).unwrap())).collect();
    out.extend(duals);
    out
}

fn criterion_lemmas() -> Outcome {
    let fixtures = all_fixtures();
    let mut checks = 0;
    for (name, h) in &fixtures {
        let r = lemma_suite(h).map_err(e)?;
        if let Some((check, v)) = r.first_failure() {
            return Err(format!("{name}: {check}: {v}"));
        }
        checks += r.checks.len();
    }
    Ok(format!("{checks} identity groups hold on {} structures", fixtures.len()))
}

fn criterion_monoidal() -> Outcome {
    let h = Arc::new(gpd2(Q));
    let reg = regular_comodule(&h);
    let unit = unit_comodule(&h).map_err(e)?;
    let uu = tensor_over_source(&unit, &unit).map_err(e)?;
    ensure(uu.comodule.dim() == 2, || format!("unit ⊛ unit has dim {}", uu.comodule.dim()))?;
    let ru = tensor_over_source(&reg, &unit).map_err(e)?.comodule;
    let objects: [(&str, &Comodule); 3] = [("unit", &unit), ("regular", &reg), ("regular*unit", &ru)];
    for (name, c) in objects {
        let u = unitors(c).map_err(e)?;
        ensure(u.l.is_isomorphism() && u.r.is_isomorphism(), || format!("unitors of {name}"))?;
        let b = bimodule_checks(c);
        ensure(b.is_pass(), || format!("bimodule identities on {name}: {}", b.violations[0]))?;
    }
    let cache = TensorCache::new();
    let (mut tri, mut pent) = (0, 0);
    for (na, a) in objects {
        for (nb, b) in objects {
            let v = cache.triangle(a, b).map_err(e)?;
            ensure(v.is_pass(), || format!("triangle({na}, {nb})"))?;
            tri += 1;
            for (nc, c) in objects {
                ensure(cache.associator(a, b, c).map_err(e)?.is_isomorphism(), || format!("α({na}, {nb}, {nc})"))?;
                for (nd, d) in objects {
                    let v = cache.pentagon(a, b, c, d).map_err(e)?;
                    ensure(v.is_pass(), || format!("pentagon({na}, {nb}, {nc}, {nd})"))?;
                    pent += 1;
                }
            }
        }
    }
    Ok(format!("{tri} triangles, {pent} pentagons, 27 associators"))
}

fn criterion_reconstruction() -> Outcome {
    // groupoid automorphisms of GPD2: the identity and the object swap
    let swap_obj = |o: usize| 3 - o;
    let swap = Matrix::from_fn(Q, 4, 4, |r, c| {
        let (s, t) = ENDS[c];
        if ENDS[r] == (swap_obj(s), swap_obj(t)) {
            Q.one()
        } else {
            Q.zero()
        }
    });
    let mut total = 0;
    for (name, h, expected) in [
        ("gpd2", Arc::new(gpd2(Q)), vec![Matrix::identity(Q, 4), swap]),
        ("c2", Arc::new(c2(Q)), vec![Matrix::identity(Q, 2)]),
    ] {
        let autos = enumerate_automorphisms(&h, 8).map_err(e)?;
        let found: Vec<&Matrix> = autos.iter().map(|a| a.matrix()).collect();
        ensure(found == expected.iter().collect::<Vec<_>>(), || format!("{name}: automorphisms {found:?}"))?;
        let comodules = FunctorData::standard_comodules(&h).map_err(e)?;
        for phi in &autos {
            let fd = FunctorData::induced_by(phi, &comodules).map_err(e)?;
            let r = reconstruct_weak_bialgebra_map(&fd).map_err(e)?;
            if let Some((layer, v)) = r.first_failure() {
                return Err(format!("{name}: layer {layer}: {v}"));
            }
            ensure(&r.phi == phi.matrix(), || format!("{name}: reconstructed {} instead of {}", r.phi, phi.matrix()))?;
            ensure(r.map.is_some(), || format!("{name}: no verified map"))?;
            total += 1;
        }
        if name == "gpd2" {
            let reg = regular_comodule(&h);
            let a = induced_functor(&autos[0], &reg).map_err(e)?;
            let b = induced_functor(&autos[1], &reg).map_err(e)?;
            ensure(a.coaction() != b.coaction(), || "id and swap give the same ρ^F".into())?;
        }
    }
    Ok(format!("{total} automorphisms reconstructed exactly; id and swap distinguished"))
}

fn same_tensors(a: &WeakBialgebra, b: &WeakBialgebra) -> bool {
    a.algebra().mult_tensor() == b.algebra().mult_tensor()
        && a.algebra().unit() == b.algebra().unit()
        && a.coalgebra().comult_tensor() == b.coalgebra().comult_tensor()
        && a.coalgebra().counit() == b.coalgebra().counit()
}

fn criterion_decomposition() -> Outcome {
    let (g, c) = (gpd2(Q), c2(Q));
    let s = Arc::new(direct_sum(&c, &g).map_err(e)?);
    let r = decompose(&s).map_err(e)?;
    ensure(r.block_dims() == vec![2, 4], || format!("sum blocks {:?}", r.block_dims()))?;
    r.splitting.verify_reassembly().map_err(e)?;

    let orders: [[&WeakBialgebra; 3]; 3] = [[&g, &g, &c], [&g, &c, &g], [&c, &g, &g]];
    for parts in orders {
        let whole = Arc::new(direct_sum(&direct_sum(parts[0], parts[1]).map_err(e)?, parts[2]).map_err(e)?);
        let r = decompose(&whole).map_err(e)?;
        r.splitting.verify_reassembly().map_err(e)?;
        let mut dims = r.block_dims();
        dims.sort();
        ensure(dims == vec![2, 4, 4], || format!("three summands: blocks {:?}", r.block_dims()))?;
        // each block matches one summand exactly, as a permutation
        let mut unused = vec![true; 3];
        for b in &r.splitting.blocks {
            let hit = (0..3).find(|&i| unused[i] && same_tensors(&b.bialgebra, parts[i]));
            let i = hit.ok_or_else(|| format!("block {:?} matches no summand", b.bialgebra.labels()))?;
            unused[i] = false;
        }
        ensure(r.certificates.iter().all(Certificate::is_complete), || "uncertified block".into())?;
    }

    let r = decompose(&Arc::new(g)).map_err(e)?;
    ensure(r.block_dims() == vec![4], || format!("gpd2 blocks {:?}", r.block_dims()))?;
    ensure(matches!(r.certificates[0], Certificate::Indecomposable { .. }), || format!("{:?}", r.certificates[0]))?;
    Ok("sum → {2,4}; three summands → {4,4,2} in every order; gpd2 certified indecomposable".into())
}

fn criterion_splitting() -> Outcome {
    let h = Arc::new(sum(Q));
    let sp = decompose(&h).map_err(e)?.splitting;
    let m = split_module(&sp, &LeftModule::regular(&h)).map_err(e)?;
    let dims: Vec<usize> = m.pieces.iter().map(LeftModule::dim).collect();
    ensure(dims == vec![2, 4], || format!("module pieces {dims:?}"))?;
    let regular = LeftModule::regular(&h);
    let qinv = m.basis_change.inverse().ok_or("module basis change is singular")?;
    for a in 0..h.dim() {
        let x = h.basis_vec(a);
        let conj = qinv.mul(&regular.act(&x)).mul(&m.basis_change);
        let blocks = sp
            .blocks
            .iter()
            .zip(&m.pieces)
            .map(|(b, p)| p.act(&b.projection.apply(&x)))
            .reduce(|acc, p| acc.block_diag(&p))
            .unwrap();
        ensure(conj == blocks, || format!("module action of {} is not block diagonal", h.labels()[a]))?;
    }

    let reg = regular_comodule(&h);
    let c = split_comodule(&sp, &reg).map_err(e)?;
    let dims: Vec<usize> = c.pieces.iter().map(|p| p.dim()).collect();
    ensure(dims == vec![2, 4], || format!("comodule pieces {dims:?}"))?;
    // (Q⊗I)·(⊕ (id⊗ι_i)ρ_i) = ρ·Q
    let n = h.dim();
    let lifted: Vec<Matrix> = sp
        .blocks
        .iter()
        .zip(&c.pieces)
        .map(|(b, p)| Matrix::identity(Q, p.dim()).kron(&b.embedding).mul(p.coaction()))
        .collect();
    let mut cols = Vec::new();
    let mut offset = 0;
    for (l, p) in lifted.iter().zip(&c.pieces) {
        let qa = c.basis_change.select_columns(&(offset..offset + p.dim()).collect::<Vec<_>>());
        let full = qa.kron(&Matrix::identity(Q, n)).mul(l);
        cols.extend(full.columns());
        offset += p.dim();
    }
    let g_of_f = Matrix::from_columns(Q, n * n, &cols);
    ensure(g_of_f == reg.coaction().mul(&c.basis_change), || "comodule pieces do not reassemble".into())?;
    Ok("module and comodule pieces (2, 4), reassembled exactly".into())
}

fn criterion_duality() -> Outcome {
    let q_fixtures = [("k", k(Q)), ("c2", c2(Q)), ("gpd2", gpd2(Q)), ("sum", sum(Q))];
    let gf2 = [("z3@gf2", z3(FieldSpec::Prime(2))), ("gpd2@gf2", gpd2(FieldSpec::Prime(2)))];
    let mut pairs = 0;
    for family in [&q_fixtures[..], &gf2[..]] {
        for (na, a) in family {
            let dd = dualize(&dualize(a).map_err(e)?).map_err(e)?;
            ensure(&dd == a, || format!("{na}** differs from {na}"))?;
            for (nb, b) in family {
                let lhs = dualize(&direct_sum(a, b).map_err(e)?).map_err(e)?;
                let rhs = direct_sum(&dualize(a).map_err(e)?, &dualize(b).map_err(e)?).map_err(e)?;
                ensure(lhs == rhs, || format!("({na} ⊕ {nb})* differs from {na}* ⊕ {nb}*"))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs commute with duality; double duals identical"))
}

fn criterion_cli() -> Outcome {
    let failures = common::run_golden_cases();
    ensure(failures.is_empty(), || failures.join("; "))?;
    let sum_doc = std::fs::read_to_string(common::golden_dir().join("inputs/sum.json")).map_err(e)?;
    ensure(common::wba(&["dsum", "c2.json", "gpd2.json"]).stdout == sum_doc, || "dsum(c2, gpd2) differs from the sum preset".into())?;
    let codes: Vec<i32> = common::CASES.iter().map(|c| c.2).collect();
    ensure([0, 1, 2].iter().all(|c| codes.contains(c)), || "exit codes 0, 1, 2 not all exercised".into())?;
    Ok(format!("{} golden cases byte-exact", common::CASES.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, u64); 8] = [
        ("axiom suite", criterion_axioms, 1000),
        ("derived identities", criterion_lemmas, 1000),
        ("monoidal category of comodules", criterion_monoidal, 5000),
        ("reconstruction round trip", criterion_reconstruction, 2000),
        ("decomposition", criterion_decomposition, 2000),
        ("splitting of modules and comodules", criterion_splitting, 1000),
        ("duality", criterion_duality, 1000),
        ("command line", criterion_cli, 2000),
    ];
    let mut failed = 0;
    for (i, (name, run, limit_ms)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let limit = Duration::from_millis(*limit_ms);
        let (status, detail) = match outcome {
            Ok(_) if took > limit => ("FAIL", format!("too slow: {} ms", took.as_millis())),
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("{status} {}. {name} [{} ms / {} ms]: {detail}", i + 1, took.as_millis(), limit_ms);
    }
    println!("{} of 8 criteria pass", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
