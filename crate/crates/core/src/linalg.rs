//! Dense complex linear algebra: matrices, orthonormal subspaces, Hermitian
//! eigensplitting, linear solving and nullspaces.
//!
//! Everything is double precision. Eigendecomposition is delegated to
//! nalgebra's Hermitian solver; elimination-based solving and nullspace
//! extraction are local so rank decisions share one tolerance convention.

use crate::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;
use std::fmt;

/// Complex double-precision scalar.
pub type Scalar = Complex64;

/// `ω_k^power` where `ω_k = e^{2πi/k}`.
///
/// The exponent is reduced mod `k` first so large powers do not lose angular
/// precision.
pub fn root_of_unity(k: u64, power: i64) -> Result<Scalar> {
    if k == 0 {
        return Err(Error::Domain("root_of_unity: k must be >= 1".into()));
    }
    let p = power.rem_euclid(k as i64) as f64;
    let theta = 2.0 * PI * p / (k as f64);
    Ok(Scalar::new(theta.cos(), theta.sin()))
}

/// Dense row-major complex matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn<F: FnMut(usize, usize) -> Scalar>(rows: usize, cols: usize, mut f: F) -> Self {
        let mut m = Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Builds a matrix from rows; all rows must have equal length.
    pub fn from_rows(rows: &[Vec<Scalar>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("from_rows: ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.iter().flatten().copied().collect(),
        })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vec<Scalar>]) -> Result<Self> {
        let c = cols.len();
        let r = cols.first().map_or(0, |col| col.len());
        if cols.iter().any(|col| col.len() != r) {
            return Err(Error::Dimension("from_cols: ragged columns".into()));
        }
        Ok(Matrix::from_fn(r, c, |i, j| cols[j][i]))
    }

    /// Permutation matrix sending `e_x` to `e_{images[x]}`.
    pub fn permutation(images: &[usize]) -> Self {
        let n = images.len();
        let mut m = Matrix::zeros(n, n);
        for (x, &y) in images.iter().enumerate() {
            m[(y, x)] = Scalar::new(1.0, 0.0);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        out
    }

    pub fn scale(&self, s: Scalar) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a *= s;
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn conj(&self) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = a.conj();
        }
        out
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square());
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `‖self − other‖_max`.
    pub fn max_diff(&self, other: &Matrix) -> f64 {
        self.sub(other).max_abs()
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.is_square() && self.max_diff(&self.adjoint()) <= tol
    }

    /// Whether `selfᴴ · self` is the identity within `tol` (entrywise).
    pub fn is_unitary(&self, tol: f64) -> bool {
        self.is_square()
            && self
                .adjoint()
                .mul(self)
                .max_diff(&Matrix::identity(self.rows))
                <= tol
    }

}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| format!("{:.4}{:+.4}i", self[(i, j)].re, self[(i, j)].im))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Kronecker product `a ⊗ b`.
pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let (ar, ac) = (a.rows(), a.cols());
    let (br, bc) = (b.rows(), b.cols());
    let mut out = Matrix::zeros(ar * br, ac * bc);
    for i1 in 0..ar {
        for j1 in 0..ac {
            let factor = a[(i1, j1)];
            if factor.norm_sqr() == 0.0 {
                continue;
            }
            for i2 in 0..br {
                for j2 in 0..bc {
                    out[(i1 * br + i2, j1 * bc + j2)] = factor * b[(i2, j2)];
                }
            }
        }
    }
    out
}

/// Modified Gram-Schmidt with a second reorthogonalization pass.
///
/// Columns whose residual norm drops below `drop_tol` times their original
/// norm (or an absolute floor) are discarded, so the result is an orthonormal
/// basis of the span.
pub fn orthonormalize(cols: &[Vec<Scalar>], drop_tol: f64) -> Vec<Vec<Scalar>> {
    let mut basis: Vec<Vec<Scalar>> = Vec::new();
    for col in cols {
        let orig_norm = vec_norm(col);
        if orig_norm == 0.0 {
            continue;
        }
        let mut v = col.clone();
        for _pass in 0..2 {
            for b in &basis {
                let coeff = dot(b, &v);
                for (vi, bi) in v.iter_mut().zip(b) {
                    *vi -= coeff * bi;
                }
            }
        }
        let norm = vec_norm(&v);
        if norm <= drop_tol * orig_norm.max(1.0) {
            continue;
        }
        for vi in v.iter_mut() {
            *vi /= norm;
        }
        basis.push(v);
    }
    basis
}

/// `⟨a, b⟩ = Σ conj(a_i) b_i`.
pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

pub fn vec_norm(v: &[Scalar]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Orthonormal basis of a subspace of `C^ambient`.
///
/// The basis matrix is `ambient × k` with orthonormal columns, `1 ≤ k ≤
/// ambient`.
#[derive(Clone, Debug)]
pub struct Subspace {
    basis: Matrix,
}

impl Subspace {
    /// Orthonormalizes the given basis columns. Errors if any column is
    /// linearly dependent on the previous ones (to the drop tolerance) or the
    /// column count is outside `1..=ambient`.
    pub fn new(basis: Matrix, eps: f64) -> Result<Self> {
        let ambient = basis.rows();
        let k = basis.cols();
        if k == 0 || k > ambient {
            return Err(Error::Dimension(format!(
                "subspace dimension {k} out of range 1..={ambient}"
            )));
        }
        let cols: Vec<Vec<Scalar>> = (0..k).map(|j| basis.col(j)).collect();
        let ortho = orthonormalize(&cols, eps);
        if ortho.len() != k {
            return Err(Error::Contract(format!(
                "subspace basis is rank deficient: {} of {} columns independent",
                ortho.len(),
                k
            )));
        }
        Ok(Subspace {
            basis: Matrix::from_cols(&ortho)?,
        })
    }

    /// The whole space `C^n`.
    pub fn full(n: usize) -> Self {
        Subspace {
            basis: Matrix::identity(n),
        }
    }

    /// One-dimensional subspace spanned by `v`.
    pub fn line(v: &[Scalar], eps: f64) -> Result<Self> {
        Subspace::new(Matrix::from_cols(&[v.to_vec()])?, eps)
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// `‖BᴴB − I‖_max`.
    pub fn orthonormality_residual(&self) -> f64 {
        self.basis
            .adjoint()
            .mul(&self.basis)
            .max_diff(&Matrix::identity(self.dim()))
    }

    /// Orthogonal projector `BBᴴ` onto the subspace.
    pub fn projector(&self) -> Matrix {
        self.basis.mul(&self.basis.adjoint())
    }
}

const JACOBI_MAX_SWEEPS: usize = 64;

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
///
/// Returns unsorted eigenvalues and the unitary matrix whose columns are the
/// matching eigenvectors. Each rotation annihilates one off-diagonal entry
/// with a phased Givens rotation; sweeps repeat until the largest
/// off-diagonal entry is at rounding level.
fn jacobi_hermitian(h: &Matrix) -> (Vec<f64>, Matrix) {
    let n = h.rows();
    let mut a = h.clone();
    let mut v = Matrix::identity(n);
    let scale = h.max_abs().max(f64::MIN_POSITIVE);
    for _sweep in 0..JACOBI_MAX_SWEEPS {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in 0..n {
                if p != q {
                    off = off.max(a[(p, q)].norm());
                }
            }
        }
        if off <= 1e-15 * scale {
            break;
        }
        for p in 0..n.saturating_sub(1) {
            for q in (p + 1)..n {
                let b = a[(p, q)];
                let abs_b = b.norm();
                if abs_b <= 1e-18 * scale {
                    continue;
                }
                let alpha = a[(p, p)].re;
                let beta = a[(q, q)].re;
                let phase = b / Scalar::new(abs_b, 0.0);
                // Small root of t^2 - 2 tau t - 1 = 0.
                let tau = (beta - alpha) / (2.0 * abs_b);
                let t = -tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let sigma = phase * Scalar::new(t * c, 0.0);
                // G has entries G[p][p] = G[q][q] = c, G[p][q] = -sigma,
                // G[q][p] = conj(sigma); apply A <- G^H A G, V <- V G.
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = Scalar::new(c, 0.0) * apk + sigma * aqk;
                    a[(q, k)] = -sigma.conj() * apk + Scalar::new(c, 0.0) * aqk;
                }
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = Scalar::new(c, 0.0) * akp + sigma.conj() * akq;
                    a[(k, q)] = -sigma * akp + Scalar::new(c, 0.0) * akq;
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = Scalar::new(c, 0.0) * vkp + sigma.conj() * vkq;
                    v[(k, q)] = -sigma * vkp + Scalar::new(c, 0.0) * vkq;
                }
                a[(p, q)] = Scalar::new(0.0, 0.0);
                a[(q, p)] = Scalar::new(0.0, 0.0);
            }
        }
    }
    ((0..n).map(|i| a[(i, i)].re).collect(), v)
}

/// Eigensplit of a Hermitian matrix: eigenvalues grouped when within `tol` of
/// each other, each group paired with its orthonormal eigenspace.
///
/// Groups are returned in ascending eigenvalue order and their dimensions sum
/// to the size of `m`. The same `tol` bounds how far `m` may be from exactly
/// Hermitian.
pub fn hermitian_eigensplit(m: &Matrix, tol: f64) -> Result<Vec<(f64, Subspace)>> {
    if !m.is_square() {
        return Err(Error::Dimension("hermitian_eigensplit: matrix not square".into()));
    }
    let herm_residual = m.max_diff(&m.adjoint());
    if herm_residual > tol {
        return Err(Error::Contract(format!(
            "hermitian_eigensplit: input deviates from Hermitian by {herm_residual:.3e} > {tol:.3e}"
        )));
    }
    let n = m.rows();
    // Hermitianize exactly before diagonalizing.
    let h = m.add(&m.adjoint()).scale(Scalar::new(0.5, 0.0));
    let (eigenvalues, vectors) = jacobi_hermitian(&h);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eigenvalues[a].total_cmp(&eigenvalues[b]));

    let mut out = Vec::new();
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && eigenvalues[order[end]] - eigenvalues[order[end - 1]] <= tol {
            end += 1;
        }
        let group = &order[start..end];
        let value = group.iter().map(|&i| eigenvalues[i]).sum::<f64>() / group.len() as f64;
        let cols: Vec<Vec<Scalar>> = group.iter().map(|&i| vectors.col(i)).collect();
        let ortho = orthonormalize(&cols, 1e-8);
        if ortho.len() != group.len() {
            return Err(Error::Contract(
                "hermitian_eigensplit: eigenvector block lost rank".into(),
            ));
        }
        out.push((value, Subspace {
            basis: Matrix::from_cols(&ortho)?,
        }));
        start = end;
    }
    Ok(out)
}

/// Result of [`solve_linear`]: either a solution or a singularity flag.
#[derive(Clone, Debug)]
pub enum SolveOutcome {
    Solved(Matrix),
    Singular,
}

/// Solves `a · x = b` for square `a` by Gaussian elimination with partial
/// pivoting. Returns [`SolveOutcome::Singular`] when `a` is rank deficient
/// relative to `eps`.
pub fn solve_linear(a: &Matrix, b: &Matrix, eps: f64) -> Result<SolveOutcome> {
    if !a.is_square() {
        return Err(Error::Dimension("solve_linear: a must be square".into()));
    }
    if a.rows() != b.rows() {
        return Err(Error::Dimension(format!(
            "solve_linear: a is {}x{} but b has {} rows",
            a.rows(),
            a.cols(),
            b.rows()
        )));
    }
    let n = a.rows();
    let threshold = eps * a.max_abs().max(1.0);
    let mut aug = a.clone();
    let mut rhs = b.clone();
    for k in 0..n {
        let pivot_row = (k..n)
            .max_by(|&i, &j| aug[(i, k)].norm().total_cmp(&aug[(j, k)].norm()))
            .unwrap();
        if aug[(pivot_row, k)].norm() <= threshold {
            return Ok(SolveOutcome::Singular);
        }
        if pivot_row != k {
            for j in 0..n {
                let tmp = aug[(k, j)];
                aug[(k, j)] = aug[(pivot_row, j)];
                aug[(pivot_row, j)] = tmp;
            }
            for j in 0..rhs.cols() {
                let tmp = rhs[(k, j)];
                rhs[(k, j)] = rhs[(pivot_row, j)];
                rhs[(pivot_row, j)] = tmp;
            }
        }
        let pivot = aug[(k, k)];
        for i in (k + 1)..n {
            let factor = aug[(i, k)] / pivot;
            if factor.norm_sqr() == 0.0 {
                continue;
            }
            for j in k..n {
                let v = aug[(k, j)];
                aug[(i, j)] -= factor * v;
            }
            for j in 0..rhs.cols() {
                let v = rhs[(k, j)];
                rhs[(i, j)] -= factor * v;
            }
        }
    }
    // Back substitution.
    let mut x = Matrix::zeros(n, rhs.cols());
    for j in 0..rhs.cols() {
        for i in (0..n).rev() {
            let mut acc = rhs[(i, j)];
            for k in (i + 1)..n {
                acc -= aug[(i, k)] * x[(k, j)];
            }
            x[(i, j)] = acc / aug[(i, i)];
        }
    }
    Ok(SolveOutcome::Solved(x))
}

/// Inverse of a square matrix, or an error when singular to `eps`.
pub fn inverse(a: &Matrix, eps: f64) -> Result<Matrix> {
    match solve_linear(a, &Matrix::identity(a.rows()), eps)? {
        SolveOutcome::Solved(x) => Ok(x),
        SolveOutcome::Singular => Err(Error::Contract("inverse of singular matrix".into())),
    }
}

/// Orthonormal basis of the nullspace of `a` (possibly zero columns), found by
/// row echelon reduction with pivot threshold `rank_tol` (relative to the
/// largest entry of `a`).
pub fn nullspace(a: &Matrix, rank_tol: f64) -> Result<Vec<Vec<Scalar>>> {
    let (rows, cols) = (a.rows(), a.cols());
    let threshold = rank_tol * a.max_abs().max(1.0);
    let mut m = a.clone();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row >= rows {
            break;
        }
        let pivot_row = (row..rows)
            .max_by(|&i, &j| m[(i, col)].norm().total_cmp(&m[(j, col)].norm()))
            .unwrap();
        if m[(pivot_row, col)].norm() <= threshold {
            continue;
        }
        if pivot_row != row {
            for j in 0..cols {
                let tmp = m[(row, j)];
                m[(row, j)] = m[(pivot_row, j)];
                m[(pivot_row, j)] = tmp;
            }
        }
        let pivot = m[(row, col)];
        for i in 0..rows {
            if i == row {
                continue;
            }
            let factor = m[(i, col)] / pivot;
            if factor.norm_sqr() == 0.0 {
                continue;
            }
            for j in col..cols {
                let v = m[(row, j)];
                m[(i, j)] -= factor * v;
            }
        }
        pivot_cols.push(col);
        row += 1;
    }
    let mut kernel = Vec::new();
    let free_cols: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    for &fc in &free_cols {
        let mut v = vec![Scalar::new(0.0, 0.0); cols];
        v[fc] = Scalar::new(1.0, 0.0);
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -m[(r, fc)] / m[(r, pc)];
        }
        kernel.push(v);
    }
    Ok(orthonormalize(&kernel, 1e-12))
}
