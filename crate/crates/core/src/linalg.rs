//! Dense exact linear algebra: matrices, echelon forms, kernels, solving,
//! subspaces and quotient coordinates.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

/// A coordinate vector.
pub type Vector = Vec<Scalar>;

pub fn zero_vec(field: FieldSpec, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit_vec(field: FieldSpec, n: usize, i: usize) -> Vector {
    let mut v = zero_vec(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `acc += c * v`
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    debug_assert_eq!(acc.len(), v.len());
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = &*a + &(c * x);
        }
    }
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_scale(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

/// Outer (Kronecker) product of two coordinate vectors, index `(i, j) -> i * b.len() + j`.
pub fn outer(a: &[Scalar], b: &[Scalar]) -> Vector {
    let field = a.first().or(b.first()).map(Scalar::field);
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(if x.is_zero() || y.is_zero() {
                field.unwrap().zero()
            } else {
                x * y
            });
        }
    }
    out
}

/// Applies a linear map to one tensor factor.
///
/// `x` lives in the tensor product with factor dimensions `shape`; the factor
/// at `pos` is replaced by `f(basis index)`, a vector of length `out_dim`.
pub fn map_factor(
    x: &[Scalar],
    shape: &[usize],
    pos: usize,
    out_dim: usize,
    field: FieldSpec,
    f: impl Fn(usize) -> Vector,
) -> Vector {
    let pre: usize = shape[..pos].iter().product();
    let mid = shape[pos];
    let post: usize = shape[pos + 1..].iter().product();
    debug_assert_eq!(x.len(), pre * mid * post);
    let mut images: Vec<Option<Vector>> = vec![None; mid];
    let mut out = zero_vec(field, pre * out_dim * post);
    for (u, xu) in x.iter().enumerate() {
        if xu.is_zero() {
            continue;
        }
        let c = u % post;
        let b = (u / post) % mid;
        let a = u / (post * mid);
        let image = images[b].get_or_insert_with(|| f(b));
        for (d, coeff) in image.iter().enumerate() {
            if !coeff.is_zero() {
                let idx = (a * out_dim + d) * post + c;
                out[idx] = &out[idx] + &(xu * coeff);
            }
        }
    }
    out
}

/// Renders a vector as `[a, b, c]`.
pub fn fmt_vec(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

/// Dense row-major matrix over one field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_fn(field: FieldSpec, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field, rows, cols, data }
    }

    /// Builds a matrix from rows, rejecting ragged input and entries from
    /// another field.
    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(n_rows * n_cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n_cols {
                return Err(Error::Malformed(format!(
                    "row {i} has {} entries, expected {n_cols}",
                    row.len()
                )));
            }
            for (j, x) in row.into_iter().enumerate() {
                if x.field() != field {
                    return Err(Error::Malformed(format!(
                        "entry ({i}, {j}) lies in {} but the matrix is over {field}",
                        x.field()
                    )));
                }
                data.push(x);
            }
        }
        Ok(Matrix {
            field,
            rows: n_rows,
            cols: n_cols,
            data,
        })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: FieldSpec, rows: usize, cols: &[Vector]) -> Self {
        Self::from_fn(field, rows, cols.len(), |i, j| cols[j][i].clone())
    }

    /// Integer-valued matrix, convenient in tests and fixtures.
    pub fn from_ints(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let n_cols = rows.first().map_or(0, |r| r.len());
        Self::from_fn(field, rows.len(), n_cols, |i, j| field.int(rows[i][j]))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Matrix product; panics on inner-dimension mismatch.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = &out[(i, j)] + &(a * b);
                    }
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        let mut out = zero_vec(self.field, self.rows);
        for (k, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = &self[(i, k)];
                if !a.is_zero() {
                    *o = &*o + &(a * x);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape());
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: vec_add(&self.data, &rhs.data),
        }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape());
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: vec_sub(&self.data, &rhs.data),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: vec_scale(c, &self.data),
        }
    }

    /// Kronecker product; index `(i, j)` of the left factor and `(k, l)` of
    /// the right land at `(i * rhs.rows + k, j * rhs.cols + l)`.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = &rhs[(k, l)];
                        if !b.is_zero() {
                            out[(i * rhs.rows + k, j * rhs.cols + l)] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows);
        Matrix::from_fn(self.field, self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                rhs[(i, j - self.cols)].clone()
            }
        })
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, rhs: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows + rhs.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..rhs.rows {
            for j in 0..rhs.cols {
                out[(self.rows + i, self.cols + j)] = rhs[(i, j)].clone();
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, rows.len(), self.cols, |i, j| self[(rows[i], j)].clone())
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, cols.len(), |i, j| self[(i, cols[j])].clone())
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    /// Two-sided inverse, `None` when singular or not square.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        solve(self, &Matrix::identity(self.field, self.rows)).ok().flatten().filter(|x| self.mul(x).is_identity())
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;

    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows).map(|i| fmt_vec(self.row(i))).collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// Reduced row-echelon form and pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..a.cols {
                a.data.swap(p * a.cols + j, r * a.cols + j);
            }
        }
        let inv = a[(r, c)].inv().expect("nonzero pivot");
        for j in c..a.cols {
            if !a[(r, j)].is_zero() {
                a[(r, j)] = &a[(r, j)] * &inv;
            }
        }
        let pivot_row: Vector = a.row(r).to_vec();
        for i in 0..a.rows {
            if i == r {
                continue;
            }
            let factor = a[(i, c)].clone();
            if factor.is_zero() {
                continue;
            }
            for (j, pv) in pivot_row.iter().enumerate().skip(c) {
                if !pv.is_zero() {
                    a[(i, j)] = &a[(i, j)] - &(&factor * pv);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Solves `a * x = b`. Returns `Ok(None)` when the system is inconsistent;
/// free variables are set to zero.
pub fn solve(a: &Matrix, b: &Matrix) -> Result<Option<Matrix>> {
    if a.rows != b.rows {
        return Err(Error::Malformed(format!(
            "solve: lhs has {} rows, rhs has {}",
            a.rows, b.rows
        )));
    }
    if a.field != b.field {
        return Err(Error::Malformed("solve: operands over different fields".into()));
    }
    let (r, pivots) = rref(&a.hstack(b));
    if pivots.iter().any(|&c| c >= a.cols) {
        return Ok(None);
    }
    let mut x = Matrix::zeros(a.field, a.cols, b.cols);
    for (row, &c) in pivots.iter().enumerate() {
        for j in 0..b.cols {
            x[(c, j)] = r[(row, a.cols + j)].clone();
        }
    }
    Ok(Some(x))
}

/// Solves `a * x = v` for a single right-hand side.
pub fn solve_vec(a: &Matrix, v: &[Scalar]) -> Result<Option<Vector>> {
    let b = Matrix::from_columns(a.field, a.rows, &[v.to_vec()]);
    Ok(solve(a, &b)?.map(|x| x.column(0)))
}

/// Null space of `m` as a subspace of its column space.
pub fn kernel(m: &Matrix) -> Subspace {
    let (r, pivots) = rref(m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    let vectors: Vec<Vector> = free
        .iter()
        .map(|&f| {
            let mut v = unit_vec(m.field, m.cols, f);
            for (row, &c) in pivots.iter().enumerate() {
                v[c] = -&r[(row, f)];
            }
            v
        })
        .collect();
    Subspace::span(m.field, m.cols, &vectors)
}

/// A subspace of `field^ambient_dim`, stored by its reduced echelon basis.
/// Two subspaces are equal iff their echelon bases agree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: FieldSpec,
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            field,
            ambient_dim,
            basis: Matrix::zeros(field, 0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            field,
            ambient_dim,
            basis: Matrix::identity(field, ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of a list of vectors, each of length `ambient_dim`.
    pub fn span(field: FieldSpec, ambient_dim: usize, vectors: &[Vector]) -> Self {
        let m = Matrix::from_fn(field, vectors.len(), ambient_dim, |i, j| vectors[i][j].clone());
        Self::row_space(&m)
    }

    pub fn row_space(m: &Matrix) -> Self {
        let (r, pivots) = rref(m);
        let rank = pivots.len();
        Subspace {
            field: m.field,
            ambient_dim: m.cols,
            basis: r.select_rows(&(0..rank).collect::<Vec<_>>()),
            pivots,
        }
    }

    pub fn column_space(m: &Matrix) -> Self {
        Self::row_space(&m.transpose())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Echelon basis as rows.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.to_rows()
    }

    /// Echelon basis as the columns of an `ambient_dim × dim` matrix.
    pub fn basis_columns(&self) -> Matrix {
        self.basis.transpose()
    }

    /// Reduces `v` modulo this subspace: the result vanishes on every pivot.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut out = v.to_vec();
        for (row, &c) in self.pivots.iter().enumerate() {
            let coeff = out[c].clone();
            if !coeff.is_zero() {
                axpy(&mut out, &-&coeff, self.basis.row(row));
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Coordinates of `v` in the echelon basis, `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if self.contains(v) {
            Some(self.pivots.iter().map(|&c| v[c].clone()).collect())
        } else {
            None
        }
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && (0..self.dim()).all(|i| other.contains(self.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vs = self.basis_vectors();
        vs.extend(other.basis_vectors());
        Subspace::span(self.field, self.ambient_dim, &vs)
    }

    /// Image of this subspace under a linear map.
    pub fn image_under(&self, map: &Matrix) -> Subspace {
        let vs: Vec<Vector> = self.basis_vectors().iter().map(|v| map.apply(v)).collect();
        Subspace::span(self.field, map.rows(), &vs)
    }

    /// `self ⊗ other` inside the tensor product of the ambient spaces.
    pub fn tensor(&self, other: &Subspace) -> Subspace {
        let mut vs = Vec::new();
        for a in self.basis_vectors() {
            for b in other.basis_vectors() {
                vs.push(outer(&a, &b));
            }
        }
        Subspace::span(self.field, self.ambient_dim * other.ambient_dim, &vs)
    }
}

/// Intersection via the kernel of the stacked-basis system `[Aᵀ | -Bᵀ]`.
pub fn intersect(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    if a.ambient_dim != b.ambient_dim || a.field != b.field {
        return Err(Error::Malformed(format!(
            "intersect: ambient dimensions {} and {} differ",
            a.ambient_dim, b.ambient_dim
        )));
    }
    let at = a.basis_columns();
    let neg_bt = b.basis_columns().scale(&-&a.field.one());
    let k = kernel(&at.hstack(&neg_bt));
    let vs: Vec<Vector> = k
        .basis_vectors()
        .iter()
        .map(|sol| at.apply(&sol[..a.dim()]))
        .collect();
    Ok(Subspace::span(a.field, a.ambient_dim, &vs))
}

/// Coordinates on `ambient / relators`.
///
/// The representatives are the standard basis positions that are not pivots
/// of the relators' echelon basis. `projection` maps ambient coordinates to
/// quotient coordinates and `section` sends each quotient basis vector to its
/// representative, so `projection * section = I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    pub representatives: Vec<usize>,
    pub projection: Matrix,
    pub section: Matrix,
}

impl Quotient {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.projection.cols()
    }
}

pub fn quotient_basis(ambient_dim: usize, relators: &Subspace) -> Result<Quotient> {
    if relators.ambient_dim != ambient_dim {
        return Err(Error::Malformed(format!(
            "quotient: relators live in dimension {}, not {ambient_dim}",
            relators.ambient_dim
        )));
    }
    let field = relators.field;
    let representatives: Vec<usize> = (0..ambient_dim).filter(|c| !relators.pivots.contains(c)).collect();
    let q = representatives.len();
    let mut projection = Matrix::zeros(field, q, ambient_dim);
    for j in 0..ambient_dim {
        let reduced = relators.reduce(&unit_vec(field, ambient_dim, j));
        for (r, &c) in representatives.iter().enumerate() {
            projection[(r, j)] = reduced[c].clone();
        }
    }
    let mut section = Matrix::zeros(field, ambient_dim, q);
    for (r, &c) in representatives.iter().enumerate() {
        section[(c, r)] = field.one();
    }
    Ok(Quotient {
        representatives,
        projection,
        section,
    })
}
