//! Direct sums, block decomposition into indecomposable summands, and the
//! splitting of module and comodule categories along a decomposition.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::comodule::{same_bialgebra, Comodule};
use crate::error::{Error, Result, Violation};
use crate::linalg::{self, fmt_vec, intersect, is_zero_vec, kernel, solve, unit_vec, vec_sub, zero_vec, Matrix, Subspace, Vector};
use crate::scalar::{FieldSpec, Scalar};
use crate::structure::{center, FiniteAlgebra, FiniteCoalgebra};
use crate::weak::{build_weak_bialgebra, CounitalMap, WeakBialgebra};

/// One summand `eH` of a weak bialgebra, with its place in the whole.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub bialgebra: Arc<WeakBialgebra>,
    /// The block unit `e` in the coordinates of the whole.
    pub unit: Vector,
    /// `n × n_i`; column `a` is the `a`-th block basis vector in the whole.
    pub embedding: Matrix,
    /// `n_i × n`; `x ↦` coordinates of `e·x`.
    pub projection: Matrix,
}

/// A weak bialgebra written as an internal direct sum of blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Splitting {
    pub whole: Arc<WeakBialgebra>,
    pub blocks: Vec<Block>,
}

impl Splitting {
    /// `Q = [embedding_1 | embedding_2 | …]`, the basis adapted to the blocks.
    pub fn basis_change(&self) -> Matrix {
        let field = self.whole.field();
        let cols: Vec<Vector> = self.blocks.iter().flat_map(|b| b.embedding.columns()).collect();
        Matrix::from_columns(field, self.whole.dim(), &cols)
    }

    /// Checks that the block-diagonal sum of the blocks is exactly the whole
    /// written in the adapted basis.
    pub fn verify_reassembly(&self) -> Result<()> {
        let parts: Vec<&WeakBialgebra> = self.blocks.iter().map(|b| b.bialgebra.as_ref()).collect();
        let rebuilt = sum_tensors(&parts)?;
        let q = self.basis_change();
        let labels = rebuilt.labels().to_vec();
        let moved = self.whole.change_basis(&q, labels)?;
        if moved.algebra() != rebuilt.algebra() || moved.coalgebra() != rebuilt.coalgebra() {
            return Err(Error::Internal("blocks do not reassemble to the whole".into()));
        }
        Ok(())
    }
}

fn prefix(i: usize) -> String {
    let mut s = String::new();
    let mut k = i;
    loop {
        s.insert(0, (b'A' + (k % 26) as u8) as char);
        if k < 26 {
            break;
        }
        k = k / 26 - 1;
    }
    s
}

/// Block-diagonal algebra and coalgebra tensors; labels get `A.`, `B.`, … prefixes.
fn sum_tensors(parts: &[&WeakBialgebra]) -> Result<WeakBialgebra> {
    let field = parts
        .first()
        .ok_or_else(|| Error::Precondition("direct sum of no summands".into()))?
        .field();
    if let Some(p) = parts.iter().find(|p| p.field() != field) {
        return Err(Error::Malformed(format!("direct sum of structures over {field} and {}", p.field())));
    }
    let n: usize = parts.iter().map(|p| p.dim()).sum();
    let offsets: Vec<usize> = parts
        .iter()
        .scan(0, |acc, p| {
            let o = *acc;
            *acc += p.dim();
            Some(o)
        })
        .collect();
    let mut labels = Vec::with_capacity(n);
    let mut mult = vec![field.zero(); n * n * n];
    let mut comult = vec![field.zero(); n * n * n];
    let mut unit = Vec::with_capacity(n);
    let mut counit = Vec::with_capacity(n);
    for (idx, (p, &o)) in parts.iter().zip(&offsets).enumerate() {
        let d = p.dim();
        let pre = prefix(idx);
        labels.extend(p.labels().iter().map(|l| format!("{pre}.{l}")));
        unit.extend(p.unit().iter().cloned());
        counit.extend(p.coalgebra().counit().iter().cloned());
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    mult[((o + i) * n + o + j) * n + o + k] = p.algebra().mult_entry(i, j, k).clone();
                    comult[((o + i) * n + o + j) * n + o + k] = p.coalgebra().comult_entry(i, j, k).clone();
                }
            }
        }
    }
    let alg = FiniteAlgebra::new(field, labels.clone(), mult, unit)?;
    let coa = FiniteCoalgebra::new(field, labels, comult, counit)?;
    let mut sum = build_weak_bialgebra(alg, coa).map_err(|e| Error::Internal(format!("direct sum failed verification: {e}")))?;
    if parts.iter().all(|p| p.antipode().is_some()) {
        let s = parts
            .iter()
            .skip(1)
            .fold(parts[0].antipode().unwrap().clone(), |acc, p| acc.block_diag(p.antipode().unwrap()));
        sum = sum.with_antipode(s).map_err(|e| Error::Internal(format!("direct sum antipode: {e}")))?;
    }
    Ok(sum)
}

/// `A ⊕ B`: product algebra, direct sum coalgebra.
pub fn direct_sum(a: &WeakBialgebra, b: &WeakBialgebra) -> Result<WeakBialgebra> {
    Ok(direct_sum_with_blocks(&[a, b])?.whole.as_ref().clone())
}

/// Direct sum of any number of summands, keeping the block data, with the
/// counital maps and subalgebras checked against the summands'.
pub fn direct_sum_with_blocks(parts: &[&WeakBialgebra]) -> Result<Splitting> {
    let sum = sum_tensors(parts)?;
    let field = sum.field();
    let n = sum.dim();
    for which in CounitalMap::ALL {
        let expected = parts
            .iter()
            .skip(1)
            .fold(parts[0].counital_matrix(which).clone(), |acc, p| acc.block_diag(p.counital_matrix(which)));
        if &expected != sum.counital_matrix(which) {
            return Err(Error::Internal(format!("ε_{which} of the sum is not the sum of the ε_{which}")));
        }
    }
    let mut blocks = Vec::with_capacity(parts.len());
    let mut offset = 0;
    let mut h_t = Subspace::zero(field, n);
    let mut h_s = Subspace::zero(field, n);
    for p in parts {
        let d = p.dim();
        let embedding = Matrix::from_fn(field, n, d, |r, c| if r == offset + c { field.one() } else { field.zero() });
        let projection = embedding.transpose();
        h_t = h_t.sum(&p.h_t().image_under(&embedding));
        h_s = h_s.sum(&p.h_s().image_under(&embedding));
        blocks.push(Block {
            bialgebra: Arc::new((*p).clone()),
            unit: embedding.apply(p.unit()),
            embedding,
            projection,
        });
        offset += d;
    }
    if &h_t != sum.h_t() || &h_s != sum.h_s() {
        return Err(Error::Internal("H_t, H_s of the sum are not the sums of the summands'".into()));
    }
    Ok(Splitting {
        whole: Arc::new(sum),
        blocks,
    })
}

/// Checks that `e` is a nontrivial central idempotent with `Δ(e) ∈ eH⊗eH`.
fn check_block_idempotent(h: &WeakBialgebra, e: &[Scalar]) -> Result<()> {
    let n = h.dim();
    if e.len() != n {
        return Err(Error::Malformed(format!("idempotent of length {} in dimension {n}", e.len())));
    }
    let fail = |what: &str| Err(Error::Precondition(format!("{} {what}", fmt_vec(e))));
    if h.mul(e, e) != e {
        return fail("is not idempotent");
    }
    for i in 0..n {
        let b = h.basis_vec(i);
        if h.mul(e, &b) != h.mul(&b, e) {
            return Err(Error::Precondition(format!(
                "{} is not central: it does not commute with {}",
                fmt_vec(e),
                h.labels()[i]
            )));
        }
    }
    if is_zero_vec(e) || e == h.unit() {
        return fail("gives a trivial split (one side would be zero-dimensional)");
    }
    let f = vec_sub(h.unit(), e);
    for (x, name) in [(e.to_vec(), "e"), (f, "1 - e")] {
        let d = h.delta(&x);
        let not_x = vec_sub(h.unit(), &x);
        let one = h.unit().to_vec();
        let left = h.algebra().mul_tensor(2, &linalg::outer(&not_x, &one), &d);
        let right = h.algebra().mul_tensor(2, &linalg::outer(&one, &not_x), &d);
        if !is_zero_vec(&left) || !is_zero_vec(&right) {
            return Err(Error::Precondition(format!("comultiplication leaks: Δ({name}) ∉ ({name})H⊗({name})H")));
        }
    }
    Ok(())
}

/// Restricts `h` to the ideal `eH` for a block idempotent `e`.
fn restrict_to_block(h: &Arc<WeakBialgebra>, e: &[Scalar]) -> Result<Block> {
    let n = h.dim();
    let field = h.field();
    let le = h.algebra().left_mult_matrix(e);
    let space = Subspace::column_space(&le);
    let basis = space.basis_vectors();
    let piv = space.pivots().to_vec();
    let d = basis.len();
    let coords = |v: &[Scalar]| -> Result<Vector> {
        space
            .coordinates(v)
            .ok_or_else(|| Error::Internal(format!("{} left the block", fmt_vec(v))))
    };
    let labels: Vec<String> = basis
        .iter()
        .enumerate()
        .map(|(a, v)| {
            let support: Vec<usize> = (0..n).filter(|&i| !v[i].is_zero()).collect();
            match support.as_slice() {
                [i] if v[*i].is_one() => h.labels()[*i].clone(),
                _ => format!("u{a}"),
            }
        })
        .collect();
    let mut mult = Vec::with_capacity(d * d * d);
    for x in &basis {
        for y in &basis {
            mult.extend(coords(&h.mul(x, y))?);
        }
    }
    let mut comult = Vec::with_capacity(d * d * d);
    for x in &basis {
        let t = h.delta(x);
        let c: Vector = (0..d * d).map(|ab| t[piv[ab / d] * n + piv[ab % d]].clone()).collect();
        let mut back = zero_vec(field, n * n);
        for (ab, x) in c.iter().enumerate() {
            if !x.is_zero() {
                linalg::axpy(&mut back, x, &linalg::outer(&basis[ab / d], &basis[ab % d]));
            }
        }
        if back != t {
            return Err(Error::Internal("Δ of a block element leaves the block".into()));
        }
        comult.extend(c);
    }
    let unit = coords(e)?;
    let counit: Vector = basis.iter().map(|x| h.eps(x)).collect();
    let alg = FiniteAlgebra::new(field, labels.clone(), mult, unit)?;
    let coa = FiniteCoalgebra::new(field, labels, comult, counit)?;
    let mut block = build_weak_bialgebra(alg, coa).map_err(|e| Error::Internal(format!("block failed verification: {e}")))?;
    if let Some(s) = h.antipode() {
        let restricted: Option<Vec<Vector>> = basis.iter().map(|x| space.coordinates(&s.apply(x))).collect();
        if let Some(cols) = restricted {
            block = block
                .with_antipode(Matrix::from_columns(field, d, &cols))
                .map_err(|e| Error::Internal(format!("restricted antipode: {e}")))?;
        }
    }
    let embedding = Matrix::from_columns(field, n, &basis);
    let projection = le.select_rows(&piv);
    Ok(Block {
        bialgebra: Arc::new(block),
        unit: e.to_vec(),
        embedding,
        projection,
    })
}

fn splitting_from_idempotents(h: &Arc<WeakBialgebra>, idempotents: &[Vector]) -> Result<Splitting> {
    let blocks = idempotents.iter().map(|e| restrict_to_block(h, e)).collect::<Result<Vec<_>>>()?;
    let s = Splitting {
        whole: h.clone(),
        blocks,
    };
    s.verify_reassembly()?;
    Ok(s)
}

/// Splits `h = eH ⊕ (1-e)H` along a block idempotent.
pub fn split_by_idempotent(h: &Arc<WeakBialgebra>, e: &[Scalar]) -> Result<Splitting> {
    check_block_idempotent(h, e)?;
    splitting_from_idempotents(h, &[e.to_vec(), vec_sub(h.unit(), e)])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// No finer system of block idempotents exists.
    Indecomposable { reason: String },
    /// The central idempotents could not be fully determined over this field.
    Undecided { reason: String },
}

impl Certificate {
    pub fn is_complete(&self) -> bool {
        matches!(self, Certificate::Indecomposable { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionReport {
    /// `Z(H) ∩ H_t ∩ H_s`.
    pub search_space: Subspace,
    /// Primitive idempotents found in the search space.
    pub primitive_idempotents: Vec<Vector>,
    pub splitting: Splitting,
    pub certificates: Vec<Certificate>,
}

impl DecompositionReport {
    pub fn block_idempotents(&self) -> Vec<Vector> {
        self.splitting.blocks.iter().map(|b| b.unit.clone()).collect()
    }

    pub fn block_dims(&self) -> Vec<usize> {
        self.splitting.blocks.iter().map(|b| b.bialgebra.dim()).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Indecomposability {
    Yes,
    No,
    Undecided,
}

pub fn is_indecomposable(h: &Arc<WeakBialgebra>) -> Result<Indecomposability> {
    let r = decompose(h)?;
    Ok(if r.splitting.blocks.len() > 1 {
        Indecomposability::No
    } else if r.certificates.iter().all(Certificate::is_complete) {
        Indecomposability::Yes
    } else {
        Indecomposability::Undecided
    })
}

/// Decomposes `h` into indecomposable weak bialgebras.
///
/// Block units are central idempotents lying in `H_t ∩ H_s`, so they are
/// sums of primitive idempotents of `K = Z(H) ∩ H_t ∩ H_s`. Primitive
/// idempotents `p_i, p_j, p_k` are forced into one block whenever
/// `(p_i⊗p_j)Δ(p_k) ≠ 0`; the connected components of that relation are the
/// finest valid blocks.
pub fn decompose(h: &Arc<WeakBialgebra>) -> Result<DecompositionReport> {
    let z = center(h.algebra())?;
    let k = intersect(&intersect(&z, h.h_t())?, h.h_s())?;
    let (prims, undecided) = primitive_idempotents(h, &k)?;

    let m = prims.len();
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for kk in 0..m {
        let d = h.delta(&prims[kk]);
        for i in 0..m {
            for j in 0..m {
                let piece = h.algebra().mul_tensor(2, &linalg::outer(&prims[i], &prims[j]), &d);
                if !is_zero_vec(&piece) {
                    for x in [i, j] {
                        let (a, b) = (find(&mut parent, x), find(&mut parent, kk));
                        parent[a] = b;
                    }
                }
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut root_of: Vec<Option<usize>> = vec![None; m];
    for i in 0..m {
        let r = find(&mut parent, i);
        match root_of[r] {
            Some(g) => groups[g].push(i),
            None => {
                root_of[r] = Some(groups.len());
                groups.push(vec![i]);
            }
        }
    }
    let field = h.field();
    let mut units: Vec<Vector> = groups
        .iter()
        .map(|g| g.iter().fold(zero_vec(field, h.dim()), |acc, &i| linalg::vec_add(&acc, &prims[i])))
        .collect();
    // order blocks by the first basis element they contain
    let first = |e: &Vector| -> usize {
        let le = h.algebra().left_mult_matrix(e);
        Subspace::column_space(&le).pivots().first().copied().unwrap_or(usize::MAX)
    };
    let mut order: Vec<usize> = (0..units.len()).collect();
    order.sort_by_key(|&i| first(&units[i]));
    units = order.iter().map(|&i| units[i].clone()).collect();
    let groups: Vec<Vec<usize>> = order.iter().map(|&i| groups[i].clone()).collect();

    if units.len() > 1 {
        for e in &units {
            check_block_idempotent(h, e).map_err(|err| Error::Internal(format!("block unit rejected: {err}")))?;
        }
    }
    let splitting = splitting_from_idempotents(h, &units)?;
    let certificates = groups
        .iter()
        .map(|g| match g.iter().find_map(|&i| undecided[i].clone()) {
            Some(reason) => Certificate::Undecided { reason },
            None if g.len() == 1 => Certificate::Indecomposable {
                reason: "its unit is a primitive idempotent of Z(H) ∩ H_t ∩ H_s".into(),
            },
            None => Certificate::Indecomposable {
                reason: format!("the comultiplication links all {} primitive idempotents of its unit", g.len()),
            },
        })
        .collect();
    Ok(DecompositionReport {
        search_space: k,
        primitive_idempotents: prims,
        splitting,
        certificates,
    })
}

/// Primitive idempotents of the commutative subalgebra `k` of `h`, each with
/// an optional note when primitivity could not be certified.
fn primitive_idempotents(h: &WeakBialgebra, k: &Subspace) -> Result<(Vec<Vector>, Vec<Option<String>>)> {
    let field = h.field();
    let candidates_global: Vec<Vector> = match field {
        FieldSpec::Prime(p) => frobenius_fixed_space(h, k, p).basis_vectors(),
        FieldSpec::Rationals => k.basis_vectors(),
    };
    let mut done: Vec<(Vector, Option<String>)> = Vec::new();
    let mut todo: Vec<Vector> = vec![h.unit().to_vec()];
    while let Some(f) = todo.pop() {
        let block = Subspace::span(field, h.dim(), &k.basis_vectors().iter().map(|x| h.mul(&f, x)).collect::<Vec<_>>());
        let mut split = None;
        for c in &candidates_global {
            let x = h.mul(&f, c);
            if is_zero_vec(&x) {
                continue;
            }
            let poly = min_poly(h, &f, &x, block.dim())?;
            let roots = match poly_roots(&poly) {
                Some(r) => r,
                None => continue,
            };
            let sqfree_deg = squarefree_degree(&poly);
            if roots.len() >= 2 || (roots.len() == 1 && sqfree_deg > 1) {
                split = Some(fitting_split(h, &block, &f, &x, &roots)?);
                break;
            }
        }
        match split {
            Some(pieces) => todo.extend(pieces),
            None => {
                let note = certify_local(h, &block, &f, field)?;
                done.push((f, note));
            }
        }
    }
    if let FieldSpec::Prime(p) = field {
        let expected = frobenius_fixed_space(h, k, p).dim();
        let found = done.len();
        if found != expected {
            for d in done.iter_mut() {
                d.1.get_or_insert_with(|| format!("found {found} idempotents but the Frobenius fixed space has dimension {expected}"));
            }
        }
    }
    // order by support, earliest basis element first
    done.sort_by_key(|(e, _)| e.iter().map(|x| x.is_zero()).collect::<Vec<_>>());
    Ok(done.into_iter().unzip())
}

/// `{x ∈ K : x^p = x}`; its dimension is the number of primitive idempotents.
fn frobenius_fixed_space(h: &WeakBialgebra, k: &Subspace, p: u64) -> Subspace {
    let basis = k.basis_vectors();
    let field = h.field();
    let cols: Vec<Vector> = basis
        .iter()
        .map(|x| {
            let fx = power(h, x, p);
            let d = vec_sub(&fx, x);
            k.coordinates(&d).expect("K is a subalgebra")
        })
        .collect();
    let frob_minus_id = Matrix::from_columns(field, basis.len(), &cols);
    let ker = kernel(&frob_minus_id);
    let vs: Vec<Vector> = ker
        .basis_vectors()
        .iter()
        .map(|c| {
            let mut v = zero_vec(field, h.dim());
            for (ci, b) in c.iter().zip(&basis) {
                linalg::axpy(&mut v, ci, b);
            }
            v
        })
        .collect();
    Subspace::span(field, h.dim(), &vs)
}

fn power(h: &WeakBialgebra, x: &[Scalar], mut e: u64) -> Vector {
    let mut acc = h.unit().to_vec();
    let mut base = x.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = h.mul(&acc, &base);
        }
        base = h.mul(&base, &base);
        e >>= 1;
    }
    acc
}

/// Minimal polynomial of `x` in the algebra `fH` with unit `f`, low degree first.
fn min_poly(h: &WeakBialgebra, f: &[Scalar], x: &[Scalar], bound: usize) -> Result<Vec<Scalar>> {
    let field = h.field();
    let mut powers = vec![f.to_vec()];
    loop {
        let next = h.mul(powers.last().unwrap(), x);
        let a = Matrix::from_columns(field, h.dim(), &powers);
        let b = Matrix::from_columns(field, h.dim(), &[next.clone()]);
        if let Some(sol) = solve(&a, &b)? {
            let mut poly: Vec<Scalar> = (0..powers.len()).map(|i| -&sol[(i, 0)]).collect();
            poly.push(field.one());
            return Ok(poly);
        }
        if powers.len() > bound + 1 {
            return Err(Error::Internal("minimal polynomial degree exceeds the block dimension".into()));
        }
        powers.push(next);
    }
}

fn eval(poly: &[Scalar], t: &Scalar) -> Scalar {
    poly.iter().rev().fold(t.field().zero(), |acc, c| &(&acc * t) + c)
}

fn derivative(poly: &[Scalar]) -> Vec<Scalar> {
    poly.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * &c.field().int(i as i64))
        .collect()
}

fn trim(mut p: Vec<Scalar>) -> Vec<Scalar> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_rem(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut r = trim(a.to_vec());
    let b = trim(b.to_vec());
    let lead_inv = b.last().unwrap().inv().unwrap();
    while r.len() >= b.len() && !r.is_empty() {
        let c = r.last().unwrap() * &lead_inv;
        let shift = r.len() - b.len();
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &(&c * bi);
        }
        r = trim(r);
    }
    r
}

fn poly_gcd(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = poly_rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

/// Degree of the square-free part `p / gcd(p, p')`.
fn squarefree_degree(poly: &[Scalar]) -> usize {
    let d = trim(derivative(poly));
    let deg = poly.len() - 1;
    if d.is_empty() {
        // p' = 0 only for p-th powers in characteristic p
        return deg.min(1);
    }
    let g = poly_gcd(poly, &d);
    deg - (g.len() - 1)
}

/// Distinct roots in the base field, or `None` when they cannot be enumerated.
fn poly_roots(poly: &[Scalar]) -> Option<Vec<Scalar>> {
    let field = poly[0].field();
    match field {
        FieldSpec::Prime(p) => {
            if p > 1_000_000 {
                return None;
            }
            Some(field.elements()?.filter(|t| eval(poly, t).is_zero()).collect())
        }
        FieldSpec::Rationals => rational_roots(poly),
    }
}

fn rational_roots(poly: &[Scalar]) -> Option<Vec<Scalar>> {
    let rats: Vec<&BigRational> = poly.iter().map(|c| c.as_rational().expect("rational polynomial")).collect();
    let lcm = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = rats.iter().map(|r| (*r * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let mut roots = Vec::new();
    let mut start = 0;
    while ints[start].is_zero() {
        start += 1;
    }
    if start > 0 {
        roots.push(FieldSpec::Rationals.zero());
    }
    let a0 = ints[start].abs();
    let an = ints.last().unwrap().abs();
    let ps = divisors(&a0)?;
    let qs = divisors(&an)?;
    let mut seen = std::collections::BTreeSet::new();
    for p in &ps {
        for q in &qs {
            for sign in [1i64, -1] {
                let r = BigRational::new(BigInt::from(sign) * p.clone(), q.clone());
                if seen.insert(r.clone()) {
                    let t = Scalar::Rational(r);
                    if eval(poly, &t).is_zero() {
                        roots.push(t);
                    }
                }
            }
        }
    }
    Some(roots)
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.to_u64()?;
    if n > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// Splits the block idempotent `f` along the generalized eigenspaces of
/// multiplication by `x` for each rational eigenvalue, plus the remainder.
fn fitting_split(h: &WeakBialgebra, block: &Subspace, f: &[Scalar], x: &[Scalar], roots: &[Scalar]) -> Result<Vec<Vector>> {
    let field = h.field();
    let basis = block.basis_vectors();
    let r = basis.len();
    let coords = |v: &[Scalar]| block.coordinates(v).ok_or_else(|| Error::Internal("element left the block".into()));
    let mx_cols = basis.iter().map(|b| coords(&h.mul(x, b))).collect::<Result<Vec<_>>>()?;
    let mx = Matrix::from_columns(field, r, &mx_cols);
    let f_coords = coords(f)?;
    let mut pieces = Vec::new();
    let mut rest = f.to_vec();
    for lambda in roots {
        let shifted = mx.sub(&Matrix::identity(field, r).scale(lambda));
        let mut n = Matrix::identity(field, r);
        for _ in 0..r {
            n = n.mul(&shifted);
        }
        let ker = kernel(&n).basis_columns();
        let img = Subspace::column_space(&n).basis_columns();
        let both = ker.hstack(&img);
        let sol = solve(&both, &Matrix::from_columns(field, r, &[f_coords.clone()]))?
            .ok_or_else(|| Error::Internal("Fitting decomposition failed".into()))?;
        let kpart: Vector = ker.apply(&(0..ker.cols()).map(|i| sol[(i, 0)].clone()).collect::<Vec<_>>());
        let mut e = zero_vec(field, h.dim());
        for (c, b) in kpart.iter().zip(&basis) {
            linalg::axpy(&mut e, c, b);
        }
        if !is_zero_vec(&e) {
            rest = vec_sub(&rest, &e);
            pieces.push(e);
        }
    }
    if !is_zero_vec(&rest) {
        pieces.push(rest);
    }
    for e in &pieces {
        if h.mul(e, e) != *e {
            return Err(Error::Internal(format!("split piece {} is not idempotent", fmt_vec(e))));
        }
    }
    Ok(pieces)
}

/// `None` when the block `fK` is certified local (so `f` is primitive).
fn certify_local(h: &WeakBialgebra, block: &Subspace, f: &[Scalar], field: FieldSpec) -> Result<Option<String>> {
    if block.dim() <= 1 {
        return Ok(None);
    }
    if let FieldSpec::Prime(_) = field {
        // counted against the Frobenius fixed space by the caller
        return Ok(None);
    }
    for x in block.basis_vectors() {
        let poly = min_poly(h, f, &x, block.dim())?;
        let roots = poly_roots(&poly);
        let local = matches!(&roots, Some(r) if r.len() == 1 && squarefree_degree(&poly) == 1);
        if !local {
            return Ok(Some(format!(
                "{} has a minimal polynomial without a full set of rational roots",
                fmt_vec(&x)
            )));
        }
    }
    Ok(None)
}

/// A left module over a weak bialgebra: one action matrix per basis element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftModule {
    over: Arc<WeakBialgebra>,
    dim: usize,
    action: Vec<Matrix>,
}

impl LeftModule {
    pub fn new(over: Arc<WeakBialgebra>, action: Vec<Matrix>) -> Result<Self> {
        let n = over.dim();
        let field = over.field();
        if action.len() != n {
            return Err(Error::Malformed(format!("{} action matrices for dimension {n}", action.len())));
        }
        let dim = action.first().map(|m| m.rows()).unwrap_or(0);
        if action.iter().any(|m| m.shape() != (dim, dim) || m.field() != field) {
            return Err(Error::Malformed("action matrices must be square of one size over the base field".into()));
        }
        let module = LeftModule { over, dim, action };
        let mut violations = Vec::new();
        let combo = |v: &[Scalar]| module.act(v);
        if !combo(module.over.unit()).is_identity() {
            violations.push(Violation::new("1·x = x", vec![], "action of 1", "identity"));
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = module.action[i].mul(&module.action[j]);
                let rhs = combo(module.over.algebra().basis_product(i, j));
                if lhs != rhs {
                    let l = module.over.labels();
                    violations.push(Violation::new("a·(b·x) = (ab)·x", vec![l[i].clone(), l[j].clone()], lhs.to_string(), rhs.to_string()));
                }
            }
        }
        if !violations.is_empty() {
            return Err(Error::violations("left module", violations));
        }
        Ok(module)
    }

    pub fn regular(h: &Arc<WeakBialgebra>) -> Self {
        let action = (0..h.dim()).map(|i| h.algebra().left_mult_matrix(&h.basis_vec(i))).collect();
        LeftModule {
            over: h.clone(),
            dim: h.dim(),
            action,
        }
    }

    pub fn over(&self) -> &Arc<WeakBialgebra> {
        &self.over
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    /// Matrix of `x ↦ a·x` for an element `a`.
    pub fn act(&self, a: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.over.field(), self.dim, self.dim);
        for (c, m) in a.iter().zip(&self.action) {
            if !c.is_zero() {
                out = out.add(&m.scale(c));
            }
        }
        out
    }
}

/// The pieces of an object under the splitting functor, with the basis in
/// which the object is the direct sum of its pieces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Split<T> {
    pub pieces: Vec<T>,
    /// Columns: the bases of the pieces inside the original space, in order.
    pub basis_change: Matrix,
}

fn check_splitting_of(splitting: &Splitting, over: &Arc<WeakBialgebra>) -> Result<()> {
    if !same_bialgebra(&splitting.whole, over) {
        return Err(Error::Precondition("object is not over the split weak bialgebra".into()));
    }
    Ok(())
}

/// `X ↦ (1_A·X, 1_B·X, …)` with the restricted actions; verifies that the
/// pieces reassemble to `X`.
pub fn split_module(splitting: &Splitting, m: &LeftModule) -> Result<Split<LeftModule>> {
    check_splitting_of(splitting, &m.over)?;
    let field = m.over.field();
    let mut pieces = Vec::new();
    let mut columns: Vec<Vector> = Vec::new();
    for block in &splitting.blocks {
        let e_act = m.act(&block.unit);
        let space = Subspace::column_space(&e_act);
        let basis = space.basis_vectors();
        let d = basis.len();
        let action = (0..block.bialgebra.dim())
            .map(|a| {
                let act = m.act(&block.embedding.column(a));
                let cols = basis
                    .iter()
                    .map(|x| space.coordinates(&act.apply(x)).ok_or_else(|| Error::Internal("1_A·X is not a submodule".into())))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Matrix::from_columns(field, d, &cols))
            })
            .collect::<Result<Vec<_>>>()?;
        pieces.push(if d == 0 {
            LeftModule {
                over: block.bialgebra.clone(),
                dim: 0,
                action,
            }
        } else {
            LeftModule::new(block.bialgebra.clone(), action)?
        });
        columns.extend(basis);
    }
    let q = Matrix::from_columns(field, m.dim, &columns);
    if columns.len() != m.dim || q.inverse().is_none() {
        return Err(Error::Internal("the pieces do not span the module".into()));
    }
    // G(U, V) = U × V: x acts on the piece for block i through π_i(x)
    for a in 0..m.over.dim() {
        let x = m.over.basis_vec(a);
        let mut blocks_act: Option<Matrix> = None;
        for (block, piece) in splitting.blocks.iter().zip(&pieces) {
            let part = piece.act(&block.projection.apply(&x));
            blocks_act = Some(match blocks_act {
                None => part,
                Some(acc) => acc.block_diag(&part),
            });
        }
        let g = blocks_act.unwrap_or_else(|| Matrix::zeros(field, 0, 0));
        if m.action[a].mul(&q) != q.mul(&g) {
            return Err(Error::Internal(format!("G(F(X)) ≇ X at {}", m.over.labels()[a])));
        }
    }
    Ok(Split { pieces, basis_change: q })
}

/// `(X, ρ) ↦ ((ε_A∘π_A)·X, (id⊗π_A)ρ)` for every block; verifies that the
/// pieces reassemble to `X`.
pub fn split_comodule(splitting: &Splitting, c: &Comodule) -> Result<Split<Comodule>> {
    check_splitting_of(splitting, c.bialgebra())?;
    let h = c.bialgebra();
    let field = h.field();
    let (m, n) = (c.dim(), h.dim());
    let mut pieces = Vec::new();
    let mut columns: Vec<Vector> = Vec::new();
    let mut checks: Vec<(Vec<Vector>, Matrix, usize)> = Vec::new();
    for block in &splitting.blocks {
        let na = block.bialgebra.dim();
        let eps_pi: Vector = (0..n).map(|k| block.bialgebra.eps(&block.projection.column(k))).collect();
        let e_a = Matrix::from_fn(field, m, m, |i, j| {
            let mut acc = field.zero();
            for (k, w) in eps_pi.iter().enumerate() {
                let r = &c.coaction()[(i * n + k, j)];
                if !w.is_zero() && !r.is_zero() {
                    acc = &acc + &(r * w);
                }
            }
            acc
        });
        let space = Subspace::column_space(&e_a);
        let basis = space.basis_vectors();
        let piv = space.pivots().to_vec();
        let d = basis.len();
        let id_pi = Matrix::identity(field, m).kron(&block.projection);
        let mut rho = Matrix::zeros(field, d * na, d);
        for (a, x) in basis.iter().enumerate() {
            let t = id_pi.apply(&c.coact(x));
            for b in 0..d {
                for k in 0..na {
                    rho[(b * na + k, a)] = t[piv[b] * na + k].clone();
                }
            }
            let mut back = zero_vec(field, m * na);
            for b in 0..d {
                for k in 0..na {
                    let v = &rho[(b * na + k, a)];
                    if !v.is_zero() {
                        linalg::axpy(&mut back, v, &linalg::outer(&basis[b], &unit_vec(field, na, k)));
                    }
                }
            }
            if back != t {
                return Err(Error::Internal("(id⊗π_A)ρ leaves the piece".into()));
            }
        }
        let piece = Comodule::new(block.bialgebra.clone(), rho).map_err(|e| Error::Internal(format!("split piece: {e}")))?;
        checks.push((basis.clone(), block.embedding.clone(), d));
        pieces.push(piece);
        columns.extend(basis);
    }
    let q = Matrix::from_columns(field, m, &columns);
    if columns.len() != m || q.inverse().is_none() {
        return Err(Error::Internal("the pieces do not span the comodule".into()));
    }
    // G: the coaction of X restricted to each piece is (incl⊗ι_A)∘ρ_A
    for ((basis, embedding, d), piece) in checks.iter().zip(&pieces) {
        let qa = Matrix::from_columns(field, m, basis);
        let lift = qa.kron(embedding);
        for a in 0..*d {
            let expected = lift.apply(&piece.coaction().column(a));
            if c.coact(&basis[a]) != expected {
                return Err(Error::Internal("G(F(X)) ≇ X: coaction differs on a piece".into()));
            }
        }
    }
    Ok(Split { pieces, basis_change: q })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comodule::regular_comodule;
    use crate::fixtures::{c2, gpd2, k, sum, z3};

    const Q: FieldSpec = FieldSpec::Rationals;

    fn arc(h: WeakBialgebra) -> Arc<WeakBialgebra> {
        Arc::new(h)
    }

    #[test]
    fn sum_splits_into_two_blocks() {
        let r = decompose(&arc(sum(Q))).unwrap();
        assert_eq!(r.block_dims(), vec![2, 4]);
        assert!(r.certificates.iter().all(Certificate::is_complete));
        assert_eq!(r.block_idempotents()[0], linalg::vec_add(&unit_vec(Q, 6, 0), &zero_vec(Q, 6)));
        let b = &r.splitting.blocks[1].bialgebra;
        assert_eq!(b.labels(), ["B.e1", "B.e2", "B.f", "B.g"]);
        assert!(b.antipode().is_some());
    }

    #[test]
    fn indecomposable_fixtures() {
        for (name, h) in [("k", k(Q)), ("c2", c2(Q)), ("gpd2", gpd2(Q)), ("z3", z3(FieldSpec::Prime(2)))] {
            assert_eq!(is_indecomposable(&arc(h)).unwrap(), Indecomposability::Yes, "{name}");
        }
    }

    #[test]
    fn gpd2_search_space_is_spanned_by_unit() {
        // e1 is in H_t ∩ H_s but is not central; only 1 survives
        let r = decompose(&arc(gpd2(Q))).unwrap();
        assert_eq!(r.search_space.dim(), 1);
        assert_eq!(r.primitive_idempotents.len(), 1);
    }

    #[test]
    fn three_summands_any_order() {
        let (g, c) = (gpd2(Q), c2(Q));
        for parts in [[&g, &g, &c], [&c, &g, &g], [&g, &c, &g]] {
            let s = direct_sum_with_blocks(&parts).unwrap();
            let r = decompose(&s.whole).unwrap();
            let mut dims = r.block_dims();
            dims.sort();
            assert_eq!(dims, vec![2, 4, 4]);
        }
    }

    #[test]
    fn split_by_idempotent_preconditions() {
        let h = arc(gpd2(Q));
        let e1 = unit_vec(Q, 4, 0);
        let err = split_by_idempotent(&h, &e1).unwrap_err().to_string();
        assert!(err.contains("not central"), "{err}");
        let err = split_by_idempotent(&h, h.unit()).unwrap_err().to_string();
        assert!(err.contains("trivial split"), "{err}");
        let err = split_by_idempotent(&h, &linalg::vec_scale(&Q.int(2), h.unit())).unwrap_err().to_string();
        assert!(err.contains("not idempotent"), "{err}");

        let s = arc(sum(Q));
        let e = unit_vec(Q, 6, 0);
        let sp = split_by_idempotent(&s, &e).unwrap();
        assert_eq!(sp.blocks.iter().map(|b| b.bialgebra.dim()).collect::<Vec<_>>(), vec![2, 4]);
    }

    #[test]
    fn group_algebra_idempotents_do_not_split() {
        // (1+g)/2 is a central idempotent of C2 but Δ links it to (1-g)/2
        let h = arc(c2(Q));
        let half = FieldSpec::Rationals.parse("1/2").unwrap();
        let e = vec![half.clone(), half];
        let err = split_by_idempotent(&h, &e).unwrap_err().to_string();
        assert!(err.contains("leaks"), "{err}");
    }

    #[test]
    fn module_and_comodule_splitting() {
        let h = arc(sum(Q));
        let sp = decompose(&h).unwrap().splitting;
        let m = split_module(&sp, &LeftModule::regular(&h)).unwrap();
        assert_eq!(m.pieces.iter().map(LeftModule::dim).collect::<Vec<_>>(), vec![2, 4]);
        let c = split_comodule(&sp, &regular_comodule(&h)).unwrap();
        assert_eq!(c.pieces.iter().map(Comodule::dim).collect::<Vec<_>>(), vec![2, 4]);
        assert!(c.basis_change.inverse().is_some());
    }

    #[test]
    fn polynomial_helpers() {
        let p: Vec<Scalar> = [-2, 1, 1].iter().map(|&x| Q.int(x)).collect(); // t² + t - 2
        let mut roots = rational_roots(&p).unwrap();
        roots.sort_by_key(|r| r.to_string());
        assert_eq!(roots, vec![Q.int(-2), Q.int(1)]);
        let sq: Vec<Scalar> = [1, -2, 1].iter().map(|&x| Q.int(x)).collect(); // (t-1)²
        assert_eq!(squarefree_degree(&sq), 1);
    }
}
