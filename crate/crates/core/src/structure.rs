//! Algebras and coalgebras given by structure constants.
//!
//! Conventions, used throughout the crate:
//!
//! * `mult[i][j][k]` is the coefficient of `b_k` in `b_i · b_j`;
//! * `comult[i][j][k]` is the coefficient of `b_j ⊗ b_k` in `Δ(b_i)`;
//! * tensor coordinates are row-major, so `b_j ⊗ b_k` sits at `j * n + k`
//!   (and `b_i ⊗ b_j ⊗ b_k` at `(i * n + j) * n + k`).

use crate::error::{Error, Result, Violation};
use crate::linalg::{self, fmt_vec, kernel, unit_vec, zero_vec, Matrix, Subspace, Vector};
use crate::scalar::{FieldSpec, Scalar};

/// Outcome of an exhaustive law check: every violation found, in basis order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Verdict {
    pub violations: Vec<Violation>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict::default()
    }

    pub fn is_pass(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }

    pub fn extend(&mut self, other: Verdict) {
        self.violations.extend(other.violations);
    }

    pub fn into_result(self, context: &str) -> Result<()> {
        if self.is_pass() {
            Ok(())
        } else {
            Err(Error::violations(context, self.violations))
        }
    }
}

/// Records a violation when two vectors differ.
pub(crate) fn expect_eq(verdict: &mut Verdict, law: &str, witness: &[&str], lhs: &[Scalar], rhs: &[Scalar]) -> bool {
    if lhs == rhs {
        true
    } else {
        verdict.push(Violation::new(
            law,
            witness.iter().map(|s| s.to_string()).collect(),
            fmt_vec(lhs),
            fmt_vec(rhs),
        ));
        false
    }
}

fn check_entries(field: FieldSpec, what: &str, v: &[Scalar], len: usize) -> Result<()> {
    if v.len() != len {
        return Err(Error::Malformed(format!("{what} has {} entries, expected {len}", v.len())));
    }
    if let Some(x) = v.iter().find(|x| x.field() != field) {
        return Err(Error::Malformed(format!("{what} contains an element of {}, expected {field}", x.field())));
    }
    Ok(())
}

/// A unital algebra on `field^n` with basis `b_0 .. b_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteAlgebra {
    field: FieldSpec,
    labels: Vec<String>,
    mult: Vec<Scalar>,
    unit: Vector,
}

impl FiniteAlgebra {
    /// `mult` is the flattened `n×n×n` tensor.
    pub fn new(field: FieldSpec, labels: Vec<String>, mult: Vec<Scalar>, unit: Vector) -> Result<Self> {
        let n = labels.len();
        check_entries(field, "multiplication tensor", &mult, n * n * n)?;
        check_entries(field, "unit", &unit, n)?;
        Ok(FiniteAlgebra { field, labels, mult, unit })
    }

    pub fn from_fn(field: FieldSpec, labels: Vec<String>, unit: Vector, f: impl Fn(usize, usize, usize) -> Scalar) -> Result<Self> {
        let n = labels.len();
        let mut mult = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    mult.push(f(i, j, k));
                }
            }
        }
        Self::new(field, labels, mult, unit)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn mult_entry(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let n = self.dim();
        &self.mult[(i * n + j) * n + k]
    }

    pub fn mult_tensor(&self) -> &[Scalar] {
        &self.mult
    }

    /// `b_i · b_j` in coordinates.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let n = self.dim();
        &self.mult[(i * n + j) * n..(i * n + j + 1) * n]
    }

    /// Product of two elements; errors on length mismatch.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        let n = self.dim();
        if x.len() != n || y.len() != n {
            return Err(Error::Malformed(format!(
                "multiply: operands of length {} and {} in dimension {n}",
                x.len(),
                y.len()
            )));
        }
        Ok(self.mul(x, y))
    }

    pub(crate) fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = zero_vec(self.field, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                linalg::axpy(&mut out, &c, self.basis_product(i, j));
            }
        }
        out
    }

    /// Componentwise product in the `order`-fold tensor power of the algebra.
    pub fn mul_tensor(&self, order: usize, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim();
        let len = n.pow(order as u32);
        debug_assert_eq!(x.len(), len);
        debug_assert_eq!(y.len(), len);
        let mut out = zero_vec(self.field, len);
        let support = |v: &[Scalar]| -> Vec<(Vec<usize>, Scalar)> {
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(mut u, c)| {
                    let mut d = vec![0; order];
                    for slot in d.iter_mut().rev() {
                        *slot = u % n;
                        u /= n;
                    }
                    (d, c.clone())
                })
                .collect()
        };
        // nonzero entries of every b_i b_j
        let products: Vec<Vec<(usize, &Scalar)>> = (0..n * n)
            .map(|ij| {
                let p = self.basis_product(ij / n, ij % n);
                p.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
            })
            .collect();
        let ys = support(y);
        for (du, xu) in support(x) {
            for (dv, yv) in &ys {
                if (0..order).any(|t| products[du[t] * n + dv[t]].is_empty()) {
                    continue;
                }
                let mut terms = vec![(0usize, &xu * yv)];
                for t in 0..order {
                    let p = &products[du[t] * n + dv[t]];
                    terms = terms
                        .iter()
                        .flat_map(|(idx, c)| p.iter().map(move |&(k, pk)| (idx * n + k, c * pk)))
                        .collect();
                }
                for (idx, c) in terms {
                    out[idx] = &out[idx] + &c;
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.mul(x, &unit_vec(self.field, n, j))).collect();
        Matrix::from_columns(self.field, n, &cols)
    }

    /// Matrix of `y ↦ y·x`.
    pub fn right_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.mul(&unit_vec(self.field, n, j), x)).collect();
        Matrix::from_columns(self.field, n, &cols)
    }

    pub fn basis_vec(&self, i: usize) -> Vector {
        unit_vec(self.field, self.dim(), i)
    }
}

/// A counital coalgebra on `field^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteCoalgebra {
    field: FieldSpec,
    labels: Vec<String>,
    comult: Vec<Scalar>,
    counit: Vector,
}

impl FiniteCoalgebra {
    pub fn new(field: FieldSpec, labels: Vec<String>, comult: Vec<Scalar>, counit: Vector) -> Result<Self> {
        let n = labels.len();
        check_entries(field, "comultiplication tensor", &comult, n * n * n)?;
        check_entries(field, "counit", &counit, n)?;
        Ok(FiniteCoalgebra {
            field,
            labels,
            comult,
            counit,
        })
    }

    pub fn from_fn(field: FieldSpec, labels: Vec<String>, counit: Vector, f: impl Fn(usize, usize, usize) -> Scalar) -> Result<Self> {
        let n = labels.len();
        let mut comult = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    comult.push(f(i, j, k));
                }
            }
        }
        Self::new(field, labels, comult, counit)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn comult_entry(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let n = self.dim();
        &self.comult[(i * n + j) * n + k]
    }

    pub fn comult_tensor(&self) -> &[Scalar] {
        &self.comult
    }

    /// `Δ(b_i)` in `H⊗H` coordinates.
    pub fn basis_coproduct(&self, i: usize) -> &[Scalar] {
        let n = self.dim();
        &self.comult[i * n * n..(i + 1) * n * n]
    }

    /// `Δ(x)`; errors on length mismatch.
    pub fn comultiply(&self, x: &[Scalar]) -> Result<Vector> {
        if x.len() != self.dim() {
            return Err(Error::Malformed(format!(
                "comultiply: operand of length {} in dimension {}",
                x.len(),
                self.dim()
            )));
        }
        Ok(self.delta(x))
    }

    pub(crate) fn delta(&self, x: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = zero_vec(self.field, n * n);
        for (i, xi) in x.iter().enumerate() {
            linalg::axpy(&mut out, xi, self.basis_coproduct(i));
        }
        out
    }

    /// `ε(x)`.
    pub fn eps(&self, x: &[Scalar]) -> Scalar {
        let mut acc = self.field.zero();
        for (xi, ci) in x.iter().zip(&self.counit) {
            if !xi.is_zero() && !ci.is_zero() {
                acc = &acc + &(xi * ci);
            }
        }
        acc
    }

    /// The `n²×n` matrix of `Δ`.
    pub fn comult_matrix(&self) -> Matrix {
        let n = self.dim();
        Matrix::from_fn(self.field, n * n, n, |jk, i| self.comult[i * n * n + jk].clone())
    }

    /// `Δ` applied to factor `pos` of an element of `H^{⊗order}`.
    pub fn delta_at(&self, x: &[Scalar], order: usize, pos: usize) -> Vector {
        let n = self.dim();
        let shape = vec![n; order];
        linalg::map_factor(x, &shape, pos, n * n, self.field, |b| self.basis_coproduct(b).to_vec())
    }
}

/// Checks associativity and the unit law on every basis triple.
pub fn check_algebra(a: &FiniteAlgebra) -> Verdict {
    let n = a.dim();
    let labels = a.labels();
    let mut verdict = Verdict::pass();
    for i in 0..n {
        let bi = a.basis_vec(i);
        let l = a.mul(a.unit(), &bi);
        let r = a.mul(&bi, a.unit());
        expect_eq(&mut verdict, "unit law (1·x = x)", &[&labels[i]], &l, &bi);
        expect_eq(&mut verdict, "unit law (x·1 = x)", &[&labels[i]], &r, &bi);
    }
    for i in 0..n {
        for j in 0..n {
            let ij = a.basis_product(i, j).to_vec();
            for k in 0..n {
                let lhs = a.mul(&ij, &a.basis_vec(k));
                let rhs = a.mul(&a.basis_vec(i), a.basis_product(j, k));
                expect_eq(&mut verdict, "associativity", &[&labels[i], &labels[j], &labels[k]], &lhs, &rhs);
            }
        }
    }
    verdict
}

/// Checks coassociativity and the counit law on every basis element.
pub fn check_coalgebra(c: &FiniteCoalgebra) -> Verdict {
    let n = c.dim();
    let field = c.field();
    let labels = c.labels();
    let mut verdict = Verdict::pass();
    for i in 0..n {
        let d = c.basis_coproduct(i);
        let left = c.delta_at(d, 2, 0);
        let right = c.delta_at(d, 2, 1);
        expect_eq(&mut verdict, "coassociativity", &[&labels[i]], &left, &right);
        let bi = unit_vec(field, n, i);
        let eps_left = linalg::map_factor(d, &[n, n], 0, 1, field, |b| vec![c.counit[b].clone()]);
        let eps_right = linalg::map_factor(d, &[n, n], 1, 1, field, |b| vec![c.counit[b].clone()]);
        expect_eq(&mut verdict, "counit law ((ε⊗id)Δ = id)", &[&labels[i]], &eps_left, &bi);
        expect_eq(&mut verdict, "counit law ((id⊗ε)Δ = id)", &[&labels[i]], &eps_right, &bi);
    }
    verdict
}

fn toggle_dual_label(label: &str) -> String {
    match label.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{label}*"),
    }
}

/// Dual algebra of a coalgebra: `(δ_i δ_j)(b_k) = Δ[k][i][j]`, unit `ε`.
pub fn dual_of_coalgebra(c: &FiniteCoalgebra) -> FiniteAlgebra {
    let labels = c.labels().iter().map(|l| toggle_dual_label(l)).collect();
    FiniteAlgebra::from_fn(c.field(), labels, c.counit().to_vec(), |i, j, k| c.comult_entry(k, i, j).clone())
        .expect("transposed tensor has the right shape")
}

/// Dual coalgebra of an algebra: `Δ(δ_i)(b_j⊗b_k) = μ[j][k][i]`, counit `1`.
pub fn dual_of_algebra(a: &FiniteAlgebra) -> FiniteCoalgebra {
    let labels = a.labels().iter().map(|l| toggle_dual_label(l)).collect();
    FiniteCoalgebra::from_fn(a.field(), labels, a.unit().to_vec(), |i, j, k| a.mult_entry(j, k, i).clone())
        .expect("transposed tensor has the right shape")
}

/// `μ^op(x, y) = μ(y, x)`.
pub fn opposite(a: &FiniteAlgebra) -> FiniteAlgebra {
    FiniteAlgebra::from_fn(a.field(), a.labels().to_vec(), a.unit().to_vec(), |i, j, k| a.mult_entry(j, i, k).clone())
        .expect("same shape")
}

/// `Δ^cop = τ∘Δ`.
pub fn coopposite(c: &FiniteCoalgebra) -> FiniteCoalgebra {
    FiniteCoalgebra::from_fn(c.field(), c.labels().to_vec(), c.counit().to_vec(), |i, j, k| {
        c.comult_entry(i, k, j).clone()
    })
    .expect("same shape")
}

/// Center `{z : z·b_i = b_i·z for all i}` as the kernel of the commutator system.
pub fn center(a: &FiniteAlgebra) -> Result<Subspace> {
    let verdict = check_algebra(a);
    if !verdict.is_pass() {
        return Err(Error::Precondition(format!(
            "center of an invalid algebra: {}",
            verdict.violations[0]
        )));
    }
    let n = a.dim();
    // rows (i, k): Σ_z z_m (μ[m][i][k] - μ[i][m][k]) = 0
    let system = Matrix::from_fn(a.field(), n * n, n, |ik, m| {
        let (i, k) = (ik / n, ik % n);
        a.mult_entry(m, i, k) - a.mult_entry(i, m, k)
    });
    Ok(kernel(&system))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{is_zero_vec, outer};

    const Q: FieldSpec = FieldSpec::Rationals;

    fn labels(ls: &[&str]) -> Vec<String> {
        ls.iter().map(|s| s.to_string()).collect()
    }

    /// Group algebra of Z/2 as a separate pair of tensors.
    fn c2() -> (FiniteAlgebra, FiniteCoalgebra) {
        let alg = FiniteAlgebra::from_fn(Q, labels(&["1", "g"]), vec![Q.int(1), Q.int(0)], |i, j, k| {
            Q.int(((i + j) % 2 == k) as i64)
        })
        .unwrap();
        let coa = FiniteCoalgebra::from_fn(Q, labels(&["1", "g"]), vec![Q.int(1), Q.int(1)], |i, j, k| {
            Q.int((i == j && j == k) as i64)
        })
        .unwrap();
        (alg, coa)
    }

    fn k() -> (FiniteAlgebra, FiniteCoalgebra) {
        let alg = FiniteAlgebra::from_fn(Q, labels(&["1"]), vec![Q.int(1)], |_, _, _| Q.int(1)).unwrap();
        let coa = FiniteCoalgebra::from_fn(Q, labels(&["1"]), vec![Q.int(1)], |_, _, _| Q.int(1)).unwrap();
        (alg, coa)
    }

    #[test]
    fn one_dimensional_field() {
        let (a, c) = k();
        assert!(check_algebra(&a).is_pass());
        assert!(check_coalgebra(&c).is_pass());
        assert_eq!(dual_of_algebra(&a).comult_tensor(), c.comult_tensor());
        assert_eq!(center(&a).unwrap().dim(), 1);
    }

    #[test]
    fn group_like_coalgebra() {
        let (a, c) = c2();
        assert!(check_coalgebra(&c).is_pass());
        let g = unit_vec(Q, 2, 1);
        assert_eq!(c.comultiply(&g).unwrap(), outer(&g, &g));
        assert!(c.comultiply(&[Q.int(1)]).is_err());

        let broken = FiniteCoalgebra::new(Q, c.labels().to_vec(), c.comult_tensor().to_vec(), vec![Q.int(0), Q.int(0)]).unwrap();
        let v = check_coalgebra(&broken);
        assert!(!v.is_pass());
        assert!(v.violations.iter().all(|x| x.law.starts_with("counit law")));

        assert_eq!(coopposite(&c), c);
        assert_eq!(opposite(&a), a);
        assert_eq!(center(&a).unwrap().dim(), 2);
    }

    #[test]
    fn dual_of_group_like_is_function_algebra() {
        let (_, c) = c2();
        let d = dual_of_coalgebra(&c);
        assert!(check_algebra(&d).is_pass());
        // δ_1, δ_g are orthogonal idempotents summing to the unit
        let d1 = unit_vec(Q, 2, 0);
        let dg = unit_vec(Q, 2, 1);
        assert_eq!(d.mul(&d1, &d1), d1);
        assert_eq!(d.mul(&dg, &dg), dg);
        assert!(is_zero_vec(&d.mul(&d1, &dg)));
        assert_eq!(d.unit(), &[Q.int(1), Q.int(1)]);
        assert_eq!(d.labels(), &["1*".to_string(), "g*".to_string()]);
        let back = dual_of_algebra(&d);
        assert_eq!(back, c);
    }

    #[test]
    fn shape_errors() {
        assert!(matches!(
            FiniteAlgebra::new(Q, labels(&["a", "b"]), vec![Q.int(0); 7], vec![Q.int(1), Q.int(0)]),
            Err(Error::Malformed(_))
        ));
        let (a, _) = c2();
        assert!(a.multiply(&[Q.int(1)], &[Q.int(1), Q.int(0)]).is_err());
    }

    #[test]
    fn tensor_product_multiplication_is_componentwise() {
        let (a, _) = c2();
        let g = unit_vec(Q, 2, 1);
        let one = unit_vec(Q, 2, 0);
        let x = outer(&g, &one);
        let y = outer(&g, &g);
        assert_eq!(a.mul_tensor(2, &x, &y), outer(&one, &g));
    }
}
