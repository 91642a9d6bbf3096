//! Weak bialgebras: axioms, counital maps, antipodes and the standard
//! identities between them.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result, Violation};
use crate::linalg::{self, fmt_vec, kernel, map_factor, outer, solve, unit_vec, vec_sub, Matrix, Subspace, Vector};
use crate::scalar::{FieldSpec, Scalar};
use crate::structure::{
    check_algebra, check_coalgebra, coopposite, dual_of_algebra, dual_of_coalgebra, expect_eq, opposite,
    FiniteAlgebra, FiniteCoalgebra, Verdict,
};

/// The four counital maps as matrices, with the target and source subalgebras.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounitalData {
    pub eps_t: Matrix,
    pub eps_s: Matrix,
    pub eps_t_prime: Matrix,
    pub eps_s_prime: Matrix,
    pub h_t: Subspace,
    pub h_s: Subspace,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CounitalMap {
    /// `ε_t(x) = ε(1₁x)1₂`
    Target,
    /// `ε_s(x) = 1₁ε(x1₂)`
    Source,
    /// `ε_t'(x) = ε(x1₁)1₂`
    TargetPrime,
    /// `ε_s'(x) = 1₁ε(1₂x)`
    SourcePrime,
}

impl CounitalMap {
    pub const ALL: [CounitalMap; 4] = [
        CounitalMap::Target,
        CounitalMap::Source,
        CounitalMap::TargetPrime,
        CounitalMap::SourcePrime,
    ];
}

impl fmt::Display for CounitalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CounitalMap::Target => "t",
            CounitalMap::Source => "s",
            CounitalMap::TargetPrime => "t'",
            CounitalMap::SourcePrime => "s'",
        })
    }
}

impl FromStr for CounitalMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "t" => Ok(CounitalMap::Target),
            "s" => Ok(CounitalMap::Source),
            "t'" | "t_prime" | "tp" => Ok(CounitalMap::TargetPrime),
            "s'" | "s_prime" | "sp" => Ok(CounitalMap::SourcePrime),
            _ => Err(Error::Malformed(format!("unknown counital map {s:?} (expected t, s, t' or s')"))),
        }
    }
}

/// A verified weak bialgebra with its counital data computed once.
///
/// Only the algebra, the coalgebra and the optional antipode are primary;
/// everything else is derived in [`build_weak_bialgebra`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakBialgebra {
    alg: FiniteAlgebra,
    coa: FiniteCoalgebra,
    antipode: Option<Matrix>,
    pairing: Matrix,
    delta_one: Vector,
    counital: CounitalData,
}

/// Runs every check that `build_weak_bialgebra` performs and returns all
/// violations: the algebra and coalgebra laws first, then the weak bialgebra axioms if
/// those pass.
pub fn check_weak_axioms(alg: &FiniteAlgebra, coa: &FiniteCoalgebra) -> Result<Verdict> {
    check_compatible(alg, coa)?;
    let mut verdict = check_algebra(alg);
    verdict.extend(check_coalgebra(coa));
    if verdict.is_pass() {
        verdict.extend(check_wh(alg, coa));
    }
    Ok(verdict)
}

fn check_compatible(alg: &FiniteAlgebra, coa: &FiniteCoalgebra) -> Result<()> {
    if alg.dim() != coa.dim() {
        return Err(Error::Malformed(format!(
            "algebra has dimension {} but coalgebra has dimension {}",
            alg.dim(),
            coa.dim()
        )));
    }
    if alg.field() != coa.field() {
        return Err(Error::Malformed(format!(
            "algebra is over {} but coalgebra is over {}",
            alg.field(),
            coa.field()
        )));
    }
    if alg.dim() == 0 {
        return Err(Error::Malformed("a weak bialgebra needs a nonzero underlying space".into()));
    }
    Ok(())
}

/// the weak bialgebra axioms, assuming the algebra and coalgebra are valid.
fn check_wh(alg: &FiniteAlgebra, coa: &FiniteCoalgebra) -> Verdict {
    let n = alg.dim();
    let field = alg.field();
    let labels = alg.labels();
    let mut verdict = Verdict::pass();

    for i in 0..n {
        for j in 0..n {
            let lhs = coa.delta(alg.basis_product(i, j));
            let rhs = alg.mul_tensor(2, coa.basis_coproduct(i), coa.basis_coproduct(j));
            expect_eq(&mut verdict, "Δ(xy) = Δ(x)Δ(y)", &[&labels[i], &labels[j]], &lhs, &rhs);
        }
    }

    let one = alg.unit();
    let d1 = coa.delta(one);
    let d2 = coa.delta_at(&d1, 2, 0);
    let left = alg.mul_tensor(3, &outer(&d1, one), &outer(one, &d1));
    let right = alg.mul_tensor(3, &outer(one, &d1), &outer(&d1, one));
    expect_eq(&mut verdict, "Δ²(1) = (Δ(1)⊗1)(1⊗Δ(1))", &["1"], &d2, &left);
    expect_eq(&mut verdict, "Δ²(1) = (1⊗Δ(1))(Δ(1)⊗1)", &["1"], &d2, &right);

    let e = pairing_matrix(alg, coa);
    for y in 0..n {
        let dy = Matrix::from_fn(field, n, n, |j, k| coa.comult_entry(y, j, k).clone());
        let my = Matrix::from_fn(field, n, n, |x, k| alg.mult_entry(x, y, k).clone());
        let triple = my.mul(&e);
        let wh3i = e.mul(&dy).mul(&e);
        let wh3ii = e.mul(&dy.transpose()).mul(&e);
        for x in 0..n {
            for z in 0..n {
                let w = [labels[x].as_str(), labels[y].as_str(), labels[z].as_str()];
                if triple[(x, z)] != wh3i[(x, z)] {
                    verdict.push(Violation::new(
                        "ε(xyz) = ε(xy₁)ε(y₂z)",
                        w.iter().map(|s| s.to_string()).collect(),
                        triple[(x, z)].to_string(),
                        wh3i[(x, z)].to_string(),
                    ));
                }
                if triple[(x, z)] != wh3ii[(x, z)] {
                    verdict.push(Violation::new(
                        "ε(xyz) = ε(xy₂)ε(y₁z)",
                        w.iter().map(|s| s.to_string()).collect(),
                        triple[(x, z)].to_string(),
                        wh3ii[(x, z)].to_string(),
                    ));
                }
            }
        }
    }
    verdict
}

/// `E[a][b] = ε(b_a b_b)`.
fn pairing_matrix(alg: &FiniteAlgebra, coa: &FiniteCoalgebra) -> Matrix {
    let n = alg.dim();
    Matrix::from_fn(alg.field(), n, n, |a, b| coa.eps(alg.basis_product(a, b)))
}

fn counital_data(field: FieldSpec, n: usize, e: &Matrix, d1: &[Scalar]) -> CounitalData {
    let c = |j: usize, k: usize| &d1[j * n + k];
    let mut eps_t = Matrix::zeros(field, n, n);
    let mut eps_s = Matrix::zeros(field, n, n);
    let mut eps_tp = Matrix::zeros(field, n, n);
    let mut eps_sp = Matrix::zeros(field, n, n);
    for j in 0..n {
        for k in 0..n {
            let cjk = c(j, k);
            if cjk.is_zero() {
                continue;
            }
            for i in 0..n {
                eps_t[(k, i)] = &eps_t[(k, i)] + &(cjk * &e[(j, i)]);
                eps_s[(j, i)] = &eps_s[(j, i)] + &(cjk * &e[(i, k)]);
                eps_tp[(k, i)] = &eps_tp[(k, i)] + &(cjk * &e[(i, j)]);
                eps_sp[(j, i)] = &eps_sp[(j, i)] + &(cjk * &e[(k, i)]);
            }
        }
    }
    let h_t = Subspace::column_space(&eps_t);
    let h_s = Subspace::column_space(&eps_s);
    CounitalData {
        eps_t,
        eps_s,
        eps_t_prime: eps_tp,
        eps_s_prime: eps_sp,
        h_t,
        h_s,
    }
}

/// Verifies the weak bialgebra axioms and caches the counital data.
///
/// Algebra or coalgebra law failures are reported as a precondition error;
/// failures of the weak bialgebra axioms as a violation list.
pub fn build_weak_bialgebra(alg: FiniteAlgebra, coa: FiniteCoalgebra) -> Result<WeakBialgebra> {
    check_compatible(&alg, &coa)?;
    if alg.labels() != coa.labels() {
        return Err(Error::Malformed("algebra and coalgebra use different basis labels".into()));
    }
    for (what, v) in [("algebra", check_algebra(&alg)), ("coalgebra", check_coalgebra(&coa))] {
        if let Some(first) = v.violations.first() {
            return Err(Error::Precondition(format!(
                "{what} check failed: {first}{}",
                if v.violations.len() > 1 {
                    format!(" (+{} more)", v.violations.len() - 1)
                } else {
                    String::new()
                }
            )));
        }
    }
    check_wh(&alg, &coa).into_result("weak bialgebra axioms")?;
    Ok(assemble(alg, coa))
}

fn assemble(alg: FiniteAlgebra, coa: FiniteCoalgebra) -> WeakBialgebra {
    let n = alg.dim();
    let field = alg.field();
    let pairing = pairing_matrix(&alg, &coa);
    let delta_one = coa.delta(alg.unit());
    let counital = counital_data(field, n, &pairing, &delta_one);
    WeakBialgebra {
        alg,
        coa,
        antipode: None,
        pairing,
        delta_one,
        counital,
    }
}

impl WeakBialgebra {
    pub fn field(&self) -> FieldSpec {
        self.alg.field()
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn labels(&self) -> &[String] {
        self.alg.labels()
    }

    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.alg
    }

    pub fn coalgebra(&self) -> &FiniteCoalgebra {
        &self.coa
    }

    pub fn counital_data(&self) -> &CounitalData {
        &self.counital
    }

    pub fn antipode(&self) -> Option<&Matrix> {
        self.antipode.as_ref()
    }

    /// Attaches an antipode after checking the antipode axioms.
    pub fn with_antipode(mut self, s: Matrix) -> Result<Self> {
        verify_antipode(&self, &s)?.into_result("antipode")?;
        self.antipode = Some(s);
        Ok(self)
    }

    pub fn without_antipode(mut self) -> Self {
        self.antipode = None;
        self
    }

    /// `ε(b_a b_b)` as a matrix.
    pub fn pairing(&self) -> &Matrix {
        &self.pairing
    }

    /// `Δ(1)` in `H⊗H` coordinates.
    pub fn delta_one(&self) -> &[Scalar] {
        &self.delta_one
    }

    pub fn unit(&self) -> &[Scalar] {
        self.alg.unit()
    }

    pub fn h_t(&self) -> &Subspace {
        &self.counital.h_t
    }

    pub fn h_s(&self) -> &Subspace {
        &self.counital.h_s
    }

    pub fn counital_matrix(&self, which: CounitalMap) -> &Matrix {
        match which {
            CounitalMap::Target => &self.counital.eps_t,
            CounitalMap::Source => &self.counital.eps_s,
            CounitalMap::TargetPrime => &self.counital.eps_t_prime,
            CounitalMap::SourcePrime => &self.counital.eps_s_prime,
        }
    }

    pub fn basis_vec(&self, i: usize) -> Vector {
        unit_vec(self.field(), self.dim(), i)
    }

    pub(crate) fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.alg.mul(x, y)
    }

    pub(crate) fn delta(&self, x: &[Scalar]) -> Vector {
        self.coa.delta(x)
    }

    pub(crate) fn eps(&self, x: &[Scalar]) -> Scalar {
        self.coa.eps(x)
    }

    /// True when `Δ(1) = 1⊗1`, i.e. this is an ordinary bialgebra.
    pub fn is_ordinary_bialgebra(&self) -> bool {
        self.delta_one == outer(self.unit(), self.unit())
    }

    /// The same structure in another basis. Column `i` of `p` holds the new
    /// basis vector `b'_i` in old coordinates; `p` must be invertible.
    pub fn change_basis(&self, p: &Matrix, labels: Vec<String>) -> Result<WeakBialgebra> {
        let n = self.dim();
        let field = self.field();
        if p.shape() != (n, n) || p.field() != field || labels.len() != n {
            return Err(Error::Malformed(format!("change of basis must be {n}×{n} over {field} with {n} labels")));
        }
        let q = p.inverse().ok_or_else(|| Error::Malformed("change of basis matrix is singular".into()))?;
        let cols = p.columns();
        let qq = q.kron(&q);
        let mut mult = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                mult.extend(q.apply(&self.mul(&cols[i], &cols[j])));
            }
        }
        let mut comult = Vec::with_capacity(n * n * n);
        for col in &cols {
            comult.extend(qq.apply(&self.delta(col)));
        }
        let unit = q.apply(self.unit());
        let counit: Vector = cols.iter().map(|c| self.eps(c)).collect();
        let alg = FiniteAlgebra::new(field, labels.clone(), mult, unit)?;
        let coa = FiniteCoalgebra::new(field, labels, comult, counit)?;
        let mut out = build_weak_bialgebra(alg, coa).map_err(|e| Error::Internal(format!("change of basis broke the axioms: {e}")))?;
        if let Some(s) = &self.antipode {
            out.antipode = Some(q.mul(s).mul(p));
        }
        Ok(out)
    }

    /// `H^op = (H, μ^op, η, Δ, ε)`.
    pub fn op(&self) -> Result<WeakBialgebra> {
        rebuild(opposite(&self.alg), self.coa.clone(), "H^op")
    }

    /// `H^cop = (H, μ, η, Δ^cop, ε)`.
    pub fn cop(&self) -> Result<WeakBialgebra> {
        rebuild(self.alg.clone(), coopposite(&self.coa), "H^cop")
    }

    /// `H^opcop`; keeps the antipode, which is also an antipode there.
    pub fn opcop(&self) -> Result<WeakBialgebra> {
        let mut h = rebuild(opposite(&self.alg), coopposite(&self.coa), "H^opcop")?;
        h.antipode = self.antipode.clone();
        Ok(h)
    }
}

fn rebuild(alg: FiniteAlgebra, coa: FiniteCoalgebra, what: &str) -> Result<WeakBialgebra> {
    build_weak_bialgebra(alg, coa).map_err(|e| Error::Internal(format!("{what} is not a weak bialgebra: {e}")))
}

/// Applies one of the counital maps.
pub fn counital(h: &WeakBialgebra, which: CounitalMap, x: &[Scalar]) -> Result<Vector> {
    if x.len() != h.dim() {
        return Err(Error::Malformed(format!("counital: vector of length {} in dimension {}", x.len(), h.dim())));
    }
    Ok(h.counital_matrix(which).apply(x))
}

/// Checks the three antipode axioms for a candidate antipode on every basis element.
pub fn verify_antipode(h: &WeakBialgebra, s: &Matrix) -> Result<Verdict> {
    let n = h.dim();
    if s.shape() != (n, n) || s.field() != h.field() {
        return Err(Error::Malformed(format!(
            "antipode must be a {n}×{n} matrix over {}, got {}×{} over {}",
            h.field(),
            s.rows(),
            s.cols(),
            s.field()
        )));
    }
    let field = h.field();
    let labels = h.labels();
    let s_cols = s.columns();
    let mut verdict = Verdict::pass();
    // S(x₁)x₂ per basis element; S(x₁)x₂S(x₃) is then Σ Δ(x)_jk · S(b_j₁)b_j₂ · S(b_k)
    let mut left = Vec::with_capacity(n);
    for x in 0..n {
        let mut l = linalg::zero_vec(field, n);
        for (jk, c) in h.coa.basis_coproduct(x).iter().enumerate() {
            if !c.is_zero() {
                linalg::axpy(&mut l, c, &h.mul(&s_cols[jk / n], &h.basis_vec(jk % n)));
            }
        }
        left.push(l);
    }
    for x in 0..n {
        let dx = h.coa.basis_coproduct(x);
        let mut lhs_i = linalg::zero_vec(field, n);
        let mut lhs_iii = linalg::zero_vec(field, n);
        for (jk, c) in dx.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (j, k) = (jk / n, jk % n);
            linalg::axpy(&mut lhs_i, c, &h.mul(&h.basis_vec(j), &s_cols[k]));
            linalg::axpy(&mut lhs_iii, c, &h.mul(&left[j], &s_cols[k]));
        }
        let w = [labels[x].as_str()];
        expect_eq(&mut verdict, "antipode: x₁S(x₂) = ε_t(x)", &w, &lhs_i, &h.counital.eps_t.column(x));
        expect_eq(&mut verdict, "antipode: S(x₁)x₂ = ε_s(x)", &w, &left[x], &h.counital.eps_s.column(x));
        expect_eq(&mut verdict, "antipode: S(x₁)x₂S(x₃) = S(x)", &w, &lhs_iii, &s_cols[x]);
    }
    Ok(verdict)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AntipodeSolution {
    Antipode(Matrix),
    /// No linear map satisfies the conditions.
    None,
    /// The linear conditions leave a solution space of this dimension.
    Undetermined(usize),
}

/// Solves for the entries of `S`.
///
/// The first two antipode axioms are linear in `S`. Given (ii) and coassociativity,
/// `S(x₁)x₂S(x₃) = ε_s(x₁)S(x₂)`, so (iii) becomes the linear condition
/// `ε_s(x₁)S(x₂) = S(x)`. A unique solution of the combined system is
/// re-verified against the original three identities.
pub fn solve_antipode(h: &WeakBialgebra) -> AntipodeSolution {
    let n = h.dim();
    let field = h.field();
    let unknowns = n * n;
    // unknown S[p][q] (coefficient of b_p in S(b_q)) sits at column p * n + q
    let mut a = Matrix::zeros(field, 3 * n * n, unknowns);
    let mut b = Matrix::zeros(field, 3 * n * n, 1);
    let es: Vec<Vector> = h.counital.eps_s.columns();
    for x in 0..n {
        for (jk, c) in h.coa.basis_coproduct(x).iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (j, k) = (jk / n, jk % n);
            for p in 0..n {
                // (i): b_j S(b_k), the b_p component of S(b_k) contributes μ[j][p][r]
                for (r, m) in h.alg.basis_product(j, p).iter().enumerate() {
                    if !m.is_zero() {
                        let row = x * n + r;
                        a[(row, p * n + k)] = &a[(row, p * n + k)] + &(c * m);
                    }
                }
                // (ii): S(b_j) b_k
                for (r, m) in h.alg.basis_product(p, k).iter().enumerate() {
                    if !m.is_zero() {
                        let row = n * n + x * n + r;
                        a[(row, p * n + j)] = &a[(row, p * n + j)] + &(c * m);
                    }
                }
                // (iii): ε_s(b_j) S(b_k)
                for (r, m) in h.mul(&es[j], &h.basis_vec(p)).iter().enumerate() {
                    if !m.is_zero() {
                        let row = 2 * n * n + x * n + r;
                        a[(row, p * n + k)] = &a[(row, p * n + k)] + &(c * m);
                    }
                }
            }
        }
        for r in 0..n {
            let row = 2 * n * n + x * n + r;
            a[(row, r * n + x)] = &a[(row, r * n + x)] - &field.one();
        }
        for r in 0..n {
            b[(x * n + r, 0)] = h.counital.eps_t[(r, x)].clone();
            b[(n * n + x * n + r, 0)] = h.counital.eps_s[(r, x)].clone();
        }
    }
    let sol = match solve(&a, &b).expect("row counts agree") {
        None => return AntipodeSolution::None,
        Some(sol) => sol,
    };
    let rank = a.rank();
    if rank < unknowns {
        return AntipodeSolution::Undetermined(unknowns - rank);
    }
    let s = Matrix::from_fn(field, n, n, |p, q| sol[(p * n + q, 0)].clone());
    match verify_antipode(h, &s) {
        Ok(v) if v.is_pass() => AntipodeSolution::Antipode(s),
        _ => AntipodeSolution::None,
    }
}

/// The dual weak bialgebra on the dual basis. An antipode dualizes to its
/// transpose.
pub fn dualize(h: &WeakBialgebra) -> Result<WeakBialgebra> {
    let alg = dual_of_coalgebra(&h.coa);
    let coa = dual_of_algebra(&h.alg);
    let mut out = build_weak_bialgebra(alg, coa).map_err(|e| Error::Internal(format!("dual failed verification: {e}")))?;
    if let Some(s) = &h.antipode {
        let st = s.transpose();
        let v = verify_antipode(&out, &st)?;
        if !v.is_pass() {
            return Err(Error::Internal(format!(
                "transposed antipode fails on the dual: {}",
                v.violations[0]
            )));
        }
        out.antipode = Some(st);
    }
    Ok(out)
}

/// One named identity of the counital calculus and its outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaCheck {
    pub name: String,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LemmaReport {
    pub checks: Vec<LemmaCheck>,
}

impl LemmaReport {
    pub fn is_pass(&self) -> bool {
        self.checks.iter().all(|c| c.verdict.is_pass())
    }

    /// The first failing identity and its first witness.
    pub fn first_failure(&self) -> Option<(&str, &Violation)> {
        self.checks
            .iter()
            .find_map(|c| c.verdict.violations.first().map(|v| (c.name.as_str(), v)))
    }

    fn record(&mut self, name: &str, verdict: Verdict) {
        self.checks.push(LemmaCheck {
            name: name.to_string(),
            verdict,
        });
    }
}

/// Like [`lemma_suite`], starting from raw structure tensors: anything that
/// is not a weak bialgebra is a precondition error.
pub fn run_lemma_suite(alg: FiniteAlgebra, coa: FiniteCoalgebra) -> Result<LemmaReport> {
    let h = build_weak_bialgebra(alg, coa).map_err(|e| match e {
        Error::Violations { .. } => Error::Precondition(e.to_string()),
        other => other,
    })?;
    lemma_suite(&h)
}

/// Evaluates every identity of the counital calculus on basis elements
/// (and on bases of `H_t`, `H_s` where the identity quantifies over them).
pub fn lemma_suite(h: &WeakBialgebra) -> Result<LemmaReport> {
    let mut report = LemmaReport::default();
    let cx = Ctx::new(h);
    cx.idempotency(&mut report);
    cx.delta_and_counital(&mut report);
    cx.fixed_points(&mut report)?;
    cx.triple_identities(&mut report);
    cx.counital_products(&mut report);
    cx.subalgebras(&mut report);
    cx.comultiplication_by_subalgebras(&mut report);
    variants(h, &mut report)?;
    Ok(report)
}

struct Ctx<'a> {
    h: &'a WeakBialgebra,
    n: usize,
    field: FieldSpec,
    one: Vector,
    d1: Vector,
    basis: Vec<Vector>,
    et: Vec<Vector>,
    es: Vec<Vector>,
    ht: Vec<Vector>,
    hs: Vec<Vector>,
}

impl<'a> Ctx<'a> {
    fn new(h: &'a WeakBialgebra) -> Self {
        let n = h.dim();
        Ctx {
            h,
            n,
            field: h.field(),
            one: h.unit().to_vec(),
            d1: h.delta_one.clone(),
            basis: (0..n).map(|i| h.basis_vec(i)).collect(),
            et: h.counital.eps_t.columns(),
            es: h.counital.eps_s.columns(),
            ht: h.counital.h_t.basis_vectors(),
            hs: h.counital.h_s.basis_vectors(),
        }
    }

    fn label(&self, i: usize) -> &str {
        &self.h.labels()[i]
    }

    fn et(&self, x: &[Scalar]) -> Vector {
        self.h.counital.eps_t.apply(x)
    }

    fn es(&self, x: &[Scalar]) -> Vector {
        self.h.counital.eps_s.apply(x)
    }

    fn mul2(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.h.alg.mul_tensor(2, x, y)
    }

    /// Applies a matrix to factor `pos` of an `order`-fold tensor.
    fn on_factor(&self, x: &[Scalar], order: usize, pos: usize, m: &Matrix) -> Vector {
        let n = self.n;
        map_factor(x, &vec![n; order], pos, m.rows(), self.field, |b| m.column(b))
    }

    /// Applies `ε` to factor `pos`.
    fn eps_factor(&self, x: &[Scalar], order: usize, pos: usize) -> Vector {
        let n = self.n;
        map_factor(x, &vec![n; order], pos, 1, self.field, |b| vec![self.h.coa.counit()[b].clone()])
    }

    /// `Σ c_jk f(b_j, b_k)` over the nonzero terms of a tensor `t` in `H⊗H`.
    fn sum_terms(&self, t: &[Scalar], f: impl Fn(usize, usize) -> Vector) -> Vector {
        let n = self.n;
        let mut acc = linalg::zero_vec(self.field, n);
        let mut len = None;
        for (jk, c) in t.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = f(jk / n, jk % n);
            if len.is_none() {
                len = Some(v.len());
                acc = linalg::zero_vec(self.field, v.len());
            }
            linalg::axpy(&mut acc, c, &v);
        }
        acc
    }

    fn idempotency(&self, report: &mut LemmaReport) {
        let c = &self.h.counital;
        for (name, m) in [("ε_t∘ε_t = ε_t", &c.eps_t), ("ε_s∘ε_s = ε_s", &c.eps_s)] {
            let mut v = Verdict::pass();
            let sq = m.mul(m);
            for i in 0..self.n {
                expect_eq(&mut v, name, &[self.label(i)], &sq.column(i), &m.column(i));
            }
            report.record(name, v);
        }
    }

    fn delta_and_counital(&self, report: &mut LemmaReport) {
        let c = &self.h.counital;
        let mut vt = Verdict::pass();
        let mut vs = Verdict::pass();
        for (i, b) in self.basis.iter().enumerate() {
            let d = self.h.delta(b);
            let lhs = self.on_factor(&d, 2, 1, &c.eps_t);
            let rhs = self.mul2(&self.d1, &outer(b, &self.one));
            expect_eq(&mut vt, "(id⊗ε_t)Δ(x) = 1₁x⊗1₂", &[self.label(i)], &lhs, &rhs);
            let lhs = self.on_factor(&d, 2, 0, &c.eps_s);
            let rhs = self.mul2(&outer(&self.one, b), &self.d1);
            expect_eq(&mut vs, "(ε_s⊗id)Δ(x) = 1₁⊗x1₂", &[self.label(i)], &lhs, &rhs);
        }
        report.record("(id⊗ε_t)Δ(x) = 1₁x⊗1₂", vt);
        report.record("(ε_s⊗id)Δ(x) = 1₁⊗x1₂", vs);

        let mut v = Verdict::pass();
        let a = self.on_factor(&self.d1, 2, 1, &c.eps_t);
        let b = self.on_factor(&self.d1, 2, 0, &c.eps_s);
        expect_eq(&mut v, "1₁⊗ε_t(1₂) = Δ(1)", &["1"], &a, &self.d1);
        expect_eq(&mut v, "ε_s(1₁)⊗1₂ = Δ(1)", &["1"], &b, &self.d1);
        report.record("1₁⊗ε_t(1₂) = Δ(1) = ε_s(1₁)⊗1₂", v);
    }

    fn fixed_points(&self, report: &mut LemmaReport) -> Result<()> {
        let n = self.n;
        let field = self.field;
        let id = Matrix::identity(field, n);
        // x ↦ Δ(x) - 1₁x⊗1₂ and x ↦ Δ(x) - 1₁⊗x1₂ as n²×n matrices
        let t_cols: Vec<Vector> = self
            .basis
            .iter()
            .map(|b| vec_sub(&self.h.delta(b), &self.mul2(&self.d1, &outer(b, &self.one))))
            .collect();
        let s_cols: Vec<Vector> = self
            .basis
            .iter()
            .map(|b| vec_sub(&self.h.delta(b), &self.mul2(&outer(&self.one, b), &self.d1)))
            .collect();
        for (name, eps, cols) in [
            ("ε_t(x) = x ⇔ Δ(x) = 1₁x⊗1₂", &self.h.counital.eps_t, t_cols),
            ("ε_s(x) = x ⇔ Δ(x) = 1₁⊗x1₂", &self.h.counital.eps_s, s_cols),
        ] {
            let fixed = kernel(&eps.sub(&id));
            let solutions = kernel(&Matrix::from_columns(field, n * n, &cols));
            let mut v = Verdict::pass();
            if fixed != solutions {
                v.push(Violation::new(
                    name,
                    vec![],
                    format!("fixed points {}", fmt_basis(&fixed)),
                    format!("solutions {}", fmt_basis(&solutions)),
                ));
            }
            report.record(name, v);
        }
        Ok(())
    }

    /// Puts `t ∈ H⊗H` into factors 0 and 2 of `H⊗H⊗H`, with 1 in the middle.
    fn spread(&self, t: &[Scalar]) -> Vector {
        let n = self.n;
        let mut out = linalg::zero_vec(self.field, n * n * n);
        for (jk, c) in t.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (j, k) = (jk / n, jk % n);
            for (m, u) in self.one.iter().enumerate() {
                if !u.is_zero() {
                    let idx = (j * n + m) * n + k;
                    out[idx] = &out[idx] + &(c * u);
                }
            }
        }
        out
    }

    fn triple_identities(&self, report: &mut LemmaReport) {
        let c = &self.h.counital;
        let d2 = self.h.coa.delta_at(&self.d1, 2, 0);
        let mut v = Verdict::pass();
        // 1₁1_[1] ⊗ 1₂ ⊗ 1_[2] = (Δ(1)⊗1)·(1_[1]⊗1⊗1_[2])
        let lhs = self.h.alg.mul_tensor(3, &outer(&self.d1, &self.one), &self.spread(&self.d1));
        let rhs = self.on_factor(&d2, 3, 1, &c.eps_t);
        expect_eq(&mut v, "1₁1_[1]⊗1₂⊗1_[2] = 1₁⊗ε_t(1₂)⊗1₃", &["1"], &lhs, &rhs);
        let lhs = self.h.alg.mul_tensor(3, &self.spread(&self.d1), &outer(&self.one, &self.d1));
        let rhs = self.on_factor(&d2, 3, 1, &c.eps_s);
        expect_eq(&mut v, "1₁⊗1_[1]⊗1₂1_[2] = 1₁⊗ε_s(1₂)⊗1₃", &["1"], &lhs, &rhs);
        report.record("Δ²(1) with ε_t, ε_s in the middle factor", v);
    }

    fn counital_products(&self, report: &mut LemmaReport) {
        let n = self.n;
        let h = self.h;
        let mut v1 = Verdict::pass();
        let mut v2 = Verdict::pass();
        let mut v5 = Verdict::pass();
        for x in 0..n {
            let bx = &self.basis[x];
            let dx = h.coa.basis_coproduct(x);
            for y in 0..n {
                let by = &self.basis[y];
                let w = [self.label(x), self.label(y)];
                let xy = h.mul(bx, by);
                expect_eq(&mut v1, "ε_t(xε_t(y)) = ε_t(xy)", &w, &self.et(&h.mul(bx, &self.et[y])), &self.et(&xy));
                expect_eq(&mut v1, "ε_s(ε_s(x)y) = ε_s(xy)", &w, &self.es(&h.mul(&self.es[x], by)), &self.es(&xy));
                expect_eq(&mut v2, "ε(xε_t(y)) = ε(xy)", &w, &[h.eps(&h.mul(bx, &self.et[y]))], &[h.eps(&xy)]);
                expect_eq(&mut v2, "ε(ε_s(x)y) = ε(xy)", &w, &[h.eps(&h.mul(&self.es[x], by))], &[h.eps(&xy)]);

                let lhs = h.mul(bx, &self.et[y]);
                let rhs = self.sum_terms(dx, |j, k| h.mul(&self.et(&h.mul(&self.basis[j], by)), &self.basis[k]));
                expect_eq(&mut v5, "xε_t(y) = ε_t(x₁y)x₂", &w, &lhs, &rhs);
                let lhs = h.mul(&self.es[x], by);
                let rhs = self.sum_terms(h.coa.basis_coproduct(y), |j, k| {
                    h.mul(&self.basis[j], &self.es(&h.mul(bx, &self.basis[k])))
                });
                expect_eq(&mut v5, "ε_s(x)y = y₁ε_s(xy₂)", &w, &lhs, &rhs);
            }
        }
        report.record("ε_t(xε_t(y)) = ε_t(xy), ε_s(ε_s(x)y) = ε_s(xy)", v1);
        report.record("ε(xε_t(y)) = ε(xy) = ε(ε_s(x)y)", v2);

        let mut v3 = Verdict::pass();
        let mut v4 = Verdict::pass();
        for x in 0..n {
            let eps_x = [h.coa.counit()[x].clone()];
            expect_eq(&mut v3, "ε∘ε_t = ε", &[self.label(x)], &[h.eps(&self.et[x])], &eps_x);
            expect_eq(&mut v3, "ε∘ε_s = ε", &[self.label(x)], &[h.eps(&self.es[x])], &eps_x);
            let dx = h.coa.basis_coproduct(x);
            let a = self.sum_terms(dx, |j, k| h.mul(&self.et[j], &self.basis[k]));
            let b = self.sum_terms(dx, |j, k| h.mul(&self.basis[j], &self.es[k]));
            expect_eq(&mut v4, "x = ε_t(x₁)x₂", &[self.label(x)], &a, &self.basis[x]);
            expect_eq(&mut v4, "x = x₁ε_s(x₂)", &[self.label(x)], &b, &self.basis[x]);
        }
        report.record("ε∘ε_t = ε = ε∘ε_s", v3);
        report.record("x = ε_t(x₁)x₂ = x₁ε_s(x₂)", v4);
        report.record("xε_t(y) = ε_t(x₁y)x₂, ε_s(x)y = y₁ε_s(xy₂)", v5);
    }

    fn subalgebras(&self, report: &mut LemmaReport) {
        let h = self.h;
        let (ht, hs) = (&h.counital.h_t, &h.counital.h_s);
        let mut v1 = Verdict::pass();
        let mut v2 = Verdict::pass();
        for z in &self.ht {
            for y in 0..self.n {
                let w = [fmt_vec(z), self.label(y).to_string()];
                let w: Vec<&str> = w.iter().map(String::as_str).collect();
                expect_eq(&mut v1, "zε_t(y) = ε_t(zy) for z ∈ H_t", &w, &h.mul(z, &self.et[y]), &self.et(&h.mul(z, &self.basis[y])));
            }
        }
        for x in 0..self.n {
            for y in &self.hs {
                let w = [self.label(x).to_string(), fmt_vec(y)];
                let w: Vec<&str> = w.iter().map(String::as_str).collect();
                expect_eq(&mut v2, "ε_s(x)y = ε_s(xy) for y ∈ H_s", &w, &h.mul(&self.es[x], y), &self.es(&h.mul(&self.basis[x], y)));
            }
        }
        report.record("zε_t(y) = ε_t(zy) for z ∈ H_t", v1);
        report.record("ε_s(x)y = ε_s(xy) for y ∈ H_s", v2);

        let mut v = Verdict::pass();
        for z in &self.ht {
            for y in &self.hs {
                let w = [fmt_vec(z), fmt_vec(y)];
                let w: Vec<&str> = w.iter().map(String::as_str).collect();
                expect_eq(&mut v, "zy = yz for z ∈ H_t, y ∈ H_s", &w, &h.mul(z, y), &h.mul(y, z));
            }
        }
        report.record("H_t and H_s commute", v);

        let full = Subspace::full(self.field, self.n);
        let mut v = Verdict::pass();
        for (name, sub, vecs, coideal) in [
            ("H_t", ht, &self.ht, full.tensor(ht)),
            ("H_s", hs, &self.hs, hs.tensor(&full)),
        ] {
            if !sub.contains(&self.one) {
                v.push(Violation::new(format!("1 ∈ {name}"), vec![], fmt_vec(&self.one), format!("{name} = {}", fmt_basis(sub))));
            }
            for a in vecs.iter() {
                for b in vecs.iter() {
                    let p = h.mul(a, b);
                    if !sub.contains(&p) {
                        v.push(Violation::new(
                            format!("{name} closed under multiplication"),
                            vec![fmt_vec(a), fmt_vec(b)],
                            fmt_vec(&p),
                            format!("an element of {name}"),
                        ));
                    }
                }
                let d = h.delta(a);
                if !coideal.contains(&d) {
                    let side = if name == "H_t" { "H⊗H_t" } else { "H_s⊗H" };
                    v.push(Violation::new(
                        format!("Δ({name}) ⊆ {side}"),
                        vec![fmt_vec(a)],
                        fmt_vec(&d),
                        format!("an element of {side}"),
                    ));
                }
            }
        }
        report.record("H_t left coideal subalgebra, H_s right coideal subalgebra", v);

        let mut v = Verdict::pass();
        if !hs.tensor(ht).contains(&self.d1) {
            v.push(Violation::new("Δ(1) ∈ H_s⊗H_t", vec!["1".into()], fmt_vec(&self.d1), "an element of H_s⊗H_t"));
        }
        report.record("Δ(1) ∈ H_s⊗H_t", v);
    }

    fn comultiplication_by_subalgebras(&self, report: &mut LemmaReport) {
        let h = self.h;
        let one = &self.one;
        let mut v = Verdict::pass();
        let mut w = Verdict::pass();
        for x in 0..self.n {
            let bx = &self.basis[x];
            let dx = h.coa.basis_coproduct(x);
            for z in &self.ht {
                let wit = [self.label(x).to_string(), fmt_vec(z)];
                let wit: Vec<&str> = wit.iter().map(String::as_str).collect();
                expect_eq(&mut v, "Δ(xz) = x₁z⊗x₂", &wit, &h.delta(&h.mul(bx, z)), &self.mul2(dx, &outer(z, one)));
                expect_eq(&mut v, "Δ(zx) = zx₁⊗x₂", &wit, &h.delta(&h.mul(z, bx)), &self.mul2(&outer(z, one), dx));
                let e = self.eps_factor(&self.mul2(dx, &outer(z, one)), 2, 0);
                expect_eq(&mut w, "xz = ε(x₁z)x₂", &wit, &h.mul(bx, z), &e);
                let e = self.eps_factor(&self.mul2(&outer(z, one), dx), 2, 0);
                expect_eq(&mut w, "zx = ε(zx₁)x₂", &wit, &h.mul(z, bx), &e);
            }
            for y in &self.hs {
                let wit = [self.label(x).to_string(), fmt_vec(y)];
                let wit: Vec<&str> = wit.iter().map(String::as_str).collect();
                expect_eq(&mut v, "Δ(xy) = x₁⊗x₂y", &wit, &h.delta(&h.mul(bx, y)), &self.mul2(dx, &outer(one, y)));
                expect_eq(&mut v, "Δ(yx) = x₁⊗yx₂", &wit, &h.delta(&h.mul(y, bx)), &self.mul2(&outer(one, y), dx));
                let e = self.eps_factor(&self.mul2(dx, &outer(one, y)), 2, 1);
                expect_eq(&mut w, "xy = x₁ε(x₂y)", &wit, &h.mul(bx, y), &e);
                let e = self.eps_factor(&self.mul2(&outer(one, y), dx), 2, 1);
                expect_eq(&mut w, "yx = x₁ε(yx₂)", &wit, &h.mul(y, bx), &e);
            }
        }
        report.record("Δ of products with H_t, H_s", v);
        report.record("products with H_t, H_s via ε", w);
    }
}

fn fmt_basis(s: &Subspace) -> String {
    let parts: Vec<String> = s.basis_vectors().iter().map(|v| fmt_vec(v)).collect();
    format!("span{{{}}}", parts.join(", "))
}

/// Counital maps and subalgebras of `H^op`, `H^cop`, `H^opcop` against the
/// primed and unprimed maps of `H`.
fn variants(h: &WeakBialgebra, report: &mut LemmaReport) -> Result<()> {
    use CounitalMap::*;
    let op = h.op()?;
    let cop = h.cop()?;
    let opcop = h.opcop()?;
    let mut v = Verdict::pass();
    let cases: [(&str, &WeakBialgebra, CounitalMap, CounitalMap); 6] = [
        ("(ε_op)_t = ε_t'", &op, Target, TargetPrime),
        ("(ε_op)_s = ε_s'", &op, Source, SourcePrime),
        ("(ε_cop)_t = ε_s'", &cop, Target, SourcePrime),
        ("(ε_cop)_s = ε_t'", &cop, Source, TargetPrime),
        ("(ε_opcop)_t = ε_s", &opcop, Target, Source),
        ("(ε_opcop)_s = ε_t", &opcop, Source, Target),
    ];
    for (name, var, theirs, ours) in cases {
        let a = var.counital_matrix(theirs);
        let b = h.counital_matrix(ours);
        for i in 0..h.dim() {
            expect_eq(&mut v, name, &[&h.labels()[i]], &a.column(i), &b.column(i));
        }
    }
    let subs: [(&str, &Subspace, &Subspace); 6] = [
        ("(H^op)_t = H_t", op.h_t(), h.h_t()),
        ("(H^op)_s = H_s", op.h_s(), h.h_s()),
        ("(H^cop)_t = H_s", cop.h_t(), h.h_s()),
        ("(H^cop)_s = H_t", cop.h_s(), h.h_t()),
        ("(H^opcop)_t = H_s", opcop.h_t(), h.h_s()),
        ("(H^opcop)_s = H_t", opcop.h_s(), h.h_t()),
    ];
    for (name, a, b) in subs {
        if a != b {
            v.push(Violation::new(name, vec![], fmt_basis(a), fmt_basis(b)));
        }
    }
    if let Some(s) = h.antipode() {
        for violation in verify_antipode(&opcop, s)?.violations {
            v.push(Violation::new(
                format!("antipode of H^opcop: {}", violation.law),
                violation.witness,
                violation.lhs,
                violation.rhs,
            ));
        }
    }
    report.record("op/cop counital identifications", v);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn labels(ls: &[&str]) -> Vec<String> {
        ls.iter().map(|s| s.to_string()).collect()
    }

    /// Groupoid with objects 1, 2 and arrows f: 1→2, g: 2→1, written out by hand.
    /// Basis [e1, e2, f, g]; (src, tgt) per arrow.
    const ENDS: [(usize, usize); 4] = [(1, 1), (2, 2), (1, 2), (2, 1)];

    fn compose(a: usize, b: usize) -> Option<usize> {
        // a·b defined when source(a) = target(b); result goes source(b) → target(a)
        if ENDS[a].0 != ENDS[b].1 {
            return None;
        }
        let ends = (ENDS[b].0, ENDS[a].1);
        ENDS.iter().position(|&e| e == ends)
    }

    fn gpd2_raw() -> (FiniteAlgebra, FiniteCoalgebra) {
        let l = labels(&["e1", "e2", "f", "g"]);
        let alg = FiniteAlgebra::from_fn(Q, l.clone(), vec![Q.int(1), Q.int(1), Q.int(0), Q.int(0)], |i, j, k| {
            Q.int((compose(i, j) == Some(k)) as i64)
        })
        .unwrap();
        let coa = FiniteCoalgebra::from_fn(Q, l, vec![Q.int(1); 4], |i, j, k| Q.int((i == j && j == k) as i64)).unwrap();
        (alg, coa)
    }

    fn gpd2() -> WeakBialgebra {
        let (a, c) = gpd2_raw();
        build_weak_bialgebra(a, c).unwrap()
    }

    fn c2() -> WeakBialgebra {
        let l = labels(&["1", "g"]);
        let alg = FiniteAlgebra::from_fn(Q, l.clone(), vec![Q.int(1), Q.int(0)], |i, j, k| Q.int(((i + j) % 2 == k) as i64)).unwrap();
        let coa = FiniteCoalgebra::from_fn(Q, l, vec![Q.int(1), Q.int(1)], |i, j, k| Q.int((i == j && j == k) as i64)).unwrap();
        build_weak_bialgebra(alg, coa).unwrap()
    }

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Q.int(x)).collect()
    }

    #[test]
    fn composition_convention() {
        let (a, _) = gpd2_raw();
        assert_eq!(a.multiply(&v(&[0, 0, 0, 1]), &v(&[0, 0, 1, 0])).unwrap(), v(&[1, 0, 0, 0]));
        assert_eq!(a.multiply(&v(&[0, 0, 1, 0]), &v(&[0, 0, 0, 1])).unwrap(), v(&[0, 1, 0, 0]));
        assert!(check_algebra(&a).is_pass());
    }

    #[test]
    fn counital_subalgebras() {
        let c = c2();
        assert_eq!(c.h_t().dim(), 1);
        assert_eq!(c.h_s().dim(), 1);
        assert!(c.is_ordinary_bialgebra());
        assert_eq!(counital(&c, CounitalMap::Target, &v(&[0, 1])).unwrap(), v(&[1, 0]));

        let g = gpd2();
        assert_eq!(g.h_t().dim(), 2);
        assert_eq!(g.h_s().dim(), 2);
        assert_eq!(*g.h_s(), Subspace::span(Q, 4, &[v(&[1, 0, 0, 0]), v(&[0, 1, 0, 0])]));
        let f = v(&[0, 0, 1, 0]);
        assert_eq!(counital(&g, CounitalMap::Source, &f).unwrap(), v(&[1, 0, 0, 0]));
        assert_eq!(counital(&g, CounitalMap::Target, &f).unwrap(), v(&[0, 1, 0, 0]));
        assert!(counital(&g, CounitalMap::Target, &v(&[1])).is_err());
        for m in CounitalMap::ALL {
            let e = g.counital_matrix(m);
            assert_eq!(e.mul(e), *e, "{m} idempotent");
        }
    }

    #[test]
    fn counit_perturbation_fails_coalgebra_layer() {
        let (a, c) = gpd2_raw();
        let mut counit = c.counit().to_vec();
        counit[2] = Q.int(0);
        let c = FiniteCoalgebra::new(Q, c.labels().to_vec(), c.comult_tensor().to_vec(), counit).unwrap();
        match build_weak_bialgebra(a, c) {
            Err(Error::Precondition(msg)) => assert!(msg.contains("counit law"), "{msg}"),
            other => panic!("expected precondition error, got {other:?}"),
        }
    }

    #[test]
    fn wh2_failure_is_reported_and_gates_the_suite() {
        // two orthogonal idempotents paired with the coalgebra
        // Δ(e1) = e1⊗e1, Δ(e2) = e1⊗e2 + e2⊗e1: Δ is not multiplicative
        let l = labels(&["e1", "e2"]);
        let alg = FiniteAlgebra::from_fn(Q, l.clone(), v(&[1, 1]), |i, j, k| Q.int((i == j && j == k) as i64)).unwrap();
        let coa = FiniteCoalgebra::from_fn(Q, l, v(&[1, 0]), |i, j, k| match (i, j, k) {
            (0, 0, 0) => Q.int(1),
            (1, 0, 1) | (1, 1, 0) => Q.int(1),
            _ => Q.int(0),
        })
        .unwrap();
        assert!(check_coalgebra(&coa).is_pass());
        let verdict = check_weak_axioms(&alg, &coa).unwrap();
        assert!(!verdict.is_pass());
        assert!(matches!(run_lemma_suite(alg, coa), Err(Error::Precondition(_))));
    }

    #[test]
    fn antipodes() {
        let g = gpd2();
        let swap = Matrix::from_ints(Q, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]]);
        assert!(verify_antipode(&g, &swap).unwrap().is_pass());
        let bad = verify_antipode(&g, &Matrix::identity(Q, 4)).unwrap();
        let first = &bad.violations[0];
        assert!(first.law.starts_with("antipode: x₁S(x₂)"));
        assert_eq!(first.witness, vec!["f".to_string()]);
        assert_eq!(solve_antipode(&g), AntipodeSolution::Antipode(swap.clone()));

        let c = c2();
        assert!(verify_antipode(&c, &Matrix::identity(Q, 2)).unwrap().is_pass());
        assert_eq!(solve_antipode(&c), AntipodeSolution::Antipode(Matrix::identity(Q, 2)));
        assert!(verify_antipode(&c, &Matrix::identity(Q, 3)).is_err());
    }

    #[test]
    fn idempotent_monoid_has_no_antipode() {
        let l = labels(&["1", "x"]);
        // 1·1 = 1, 1·x = x·1 = x·x = x
        let alg = FiniteAlgebra::from_fn(Q, l.clone(), v(&[1, 0]), |i, j, k| Q.int(((i.max(j)) == k) as i64)).unwrap();
        let coa = FiniteCoalgebra::from_fn(Q, l, v(&[1, 1]), |i, j, k| Q.int((i == j && j == k) as i64)).unwrap();
        let h = build_weak_bialgebra(alg, coa).unwrap();
        assert!(lemma_suite(&h).unwrap().is_pass());
        assert_eq!(solve_antipode(&h), AntipodeSolution::None);
    }

    #[test]
    fn suite_passes_on_fixtures() {
        for h in [gpd2(), c2()] {
            let report = lemma_suite(&h).unwrap();
            assert!(report.is_pass(), "{:?}", report.first_failure());
            assert!(report.checks.len() >= 15);
        }
    }

    #[test]
    fn dual_round_trip() {
        let g = gpd2().with_antipode(Matrix::from_ints(Q, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]])).unwrap();
        let d = dualize(&g).unwrap();
        assert_eq!(d.h_s().dim(), 2);
        assert!(d.antipode().is_some());
        let dd = dualize(&d).unwrap();
        assert_eq!(dd.algebra(), g.algebra());
        assert_eq!(dd.coalgebra(), g.coalgebra());
        assert_eq!(dd.antipode(), g.antipode());

        let dc = dualize(&c2()).unwrap();
        assert!(lemma_suite(&dc).unwrap().is_pass());
    }

    #[test]
    fn change_of_basis_preserves_the_axioms() {
        let g = gpd2();
        let p = Matrix::from_ints(Q, &[&[1, 1, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 2], &[0, 0, 0, 1]]);
        let h = g.change_basis(&p, labels(&["a", "b", "c", "d"])).unwrap();
        assert!(lemma_suite(&h).unwrap().is_pass());
        assert_eq!(h.h_t().dim(), 2);
        assert!(g.change_basis(&Matrix::zeros(Q, 4, 4), labels(&["a", "b", "c", "d"])).is_err());
    }
}
