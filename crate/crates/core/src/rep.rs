//! Quandle representations and their decomposition.
//!
//! A representation assigns an invertible complex matrix to every quandle
//! element so that `ρ(x∗y) = ρ(y) ρ(x) ρ(y)⁻¹`. The regular representation
//! permutes basis vectors by right translation. Unitary representations are
//! decomposed into irreducibles by repeatedly eigensplitting a random
//! Hermitian element of the commutant.

use crate::dihedral::IrrepLabel;
use crate::linalg::{
    self, hermitian_eigensplit, inverse, orthonormalize, Matrix, Scalar, Subspace,
};
use crate::quandle::{right_translation, FiniteQuandle, PermutationGroup};
use crate::{Error, Result, Tol};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A quandle representation: one invertible `dim × dim` matrix per element,
/// satisfying the conjugation axiom.
#[derive(Clone, Debug)]
pub struct Representation {
    quandle: FiniteQuandle,
    dim: usize,
    rho: Vec<Matrix>,
}

impl Representation {
    /// Validates shapes, invertibility, and the representation axiom
    /// `ρ(x∗y) = ρ(y) ρ(x) ρ(y)⁻¹` over all pairs.
    pub fn new(quandle: FiniteQuandle, rho: Vec<Matrix>, tol: &Tol) -> Result<Self> {
        let n = quandle.order();
        if rho.len() != n {
            return Err(Error::Dimension(format!(
                "expected {n} matrices, got {}",
                rho.len()
            )));
        }
        let dim = rho.first().map_or(0, |m| m.rows());
        if dim == 0 || rho.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::Dimension(
                "representation matrices must be square of equal size".into(),
            ));
        }
        let rep = Representation { quandle, dim, rho };
        let residual = rep.axiom_residual(tol)?;
        if residual > tol.eps {
            return Err(Error::Contract(format!(
                "representation axiom violated: residual {residual:.3e} > {:.3e}",
                tol.eps
            )));
        }
        Ok(rep)
    }

    /// Wraps matrices without validating the axiom. Used for restrictions to
    /// invariant subspaces, where the axiom is inherited.
    pub(crate) fn new_unchecked(quandle: FiniteQuandle, dim: usize, rho: Vec<Matrix>) -> Self {
        Representation { quandle, dim, rho }
    }

    pub fn quandle(&self) -> &FiniteQuandle {
        &self.quandle
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The matrix assigned to element `x`.
    pub fn rho(&self, x: usize) -> &Matrix {
        &self.rho[x]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.rho
    }

    /// Largest entrywise deviation of `ρ(x∗y)` from `ρ(y) ρ(x) ρ(y)⁻¹`.
    pub fn axiom_residual(&self, tol: &Tol) -> Result<f64> {
        let n = self.quandle.order();
        let mut worst = 0.0f64;
        for y in 0..n {
            let inv_y = inverse(&self.rho[y], tol.eps).map_err(|_| {
                Error::Contract(format!("representation matrix at {y} is singular"))
            })?;
            for x in 0..n {
                let conjugated = self.rho[y].mul(&self.rho[x]).mul(&inv_y);
                worst = worst.max(self.rho[self.quandle.op(x, y)].max_diff(&conjugated));
            }
        }
        Ok(worst)
    }

    /// Whether every `ρ(x)` is unitary to `eps`.
    pub fn is_unitary(&self, eps: f64) -> bool {
        self.rho.iter().all(|m| m.is_unitary(eps))
    }

    /// Restriction `σ(x) = Bᴴ ρ(x) B` to an invariant subspace with
    /// orthonormal basis `B`. The caller is responsible for invariance.
    pub fn restrict(&self, s: &Subspace) -> Representation {
        let b = s.basis();
        let bh = b.adjoint();
        let rho = self.rho.iter().map(|m| bh.mul(m).mul(b)).collect();
        Representation::new_unchecked(self.quandle.clone(), s.dim(), rho)
    }
}

/// The regular representation: `ρ(t)` is the permutation matrix sending
/// `e_x` to `e_{x∗t}`.
pub fn regular_representation(q: &FiniteQuandle) -> Representation {
    let rho = (0..q.order())
        .map(|t| right_translation(q, t).matrix())
        .collect();
    Representation::new_unchecked(q.clone(), q.order(), rho)
}

/// Builds the quandle representation induced by a group representation of
/// `Inn(X)`, given images for the right translations of the elements in
/// `gens`.
///
/// The chosen translations must generate `Inn(X)`, and the images must
/// satisfy the relations of that group. The relation check walks every stored
/// word both ways: `M(g∘p)` must equal `M(g)·M(p)` for all elements `p` and
/// generators `g`.
pub fn induced_representation(
    q: &FiniteQuandle,
    gens: &[usize],
    images: &[Matrix],
    tol: &Tol,
) -> Result<Representation> {
    if gens.is_empty() || gens.len() != images.len() {
        return Err(Error::Dimension(
            "need one image matrix per generator label".into(),
        ));
    }
    let n = q.order();
    if gens.iter().any(|&g| g >= n) {
        return Err(Error::Domain("generator label out of range".into()));
    }
    let dim = images[0].rows();
    if dim == 0 || images.iter().any(|m| m.rows() != dim || m.cols() != dim) {
        return Err(Error::Dimension(
            "generator images must be square of equal size".into(),
        ));
    }
    let labeled: Vec<(usize, crate::quandle::Permutation)> = gens
        .iter()
        .map(|&g| (g, right_translation(q, g)))
        .collect();
    let group = PermutationGroup::generate(n, labeled);

    for x in 0..n {
        if !group.contains(&right_translation(q, x)) {
            return Err(Error::Domain(format!(
                "generators do not generate Inn(X): R_{} not reached",
                x + 1
            )));
        }
    }

    let image_of = |label: usize| -> &Matrix {
        let pos = gens.iter().position(|&g| g == label).unwrap();
        &images[pos]
    };
    let mut mats: Vec<Matrix> = Vec::with_capacity(group.order());
    for i in 0..group.order() {
        let mut acc = Matrix::identity(dim);
        for &label in group.word_of_index(i) {
            acc = image_of(label).mul(&acc);
        }
        mats.push(acc);
    }

    for (i, p) in group.elements().iter().enumerate() {
        for (label, gp) in group.generators() {
            let target = gp.compose(p);
            let j = group
                .elements()
                .iter()
                .position(|e| e == &target)
                .expect("closure is closed under generators");
            let residual = image_of(*label).mul(&mats[i]).max_diff(&mats[j]);
            if residual > tol.eps {
                return Err(Error::Relation(format!(
                    "generator images violate a group relation (residual {residual:.3e})"
                )));
            }
        }
    }

    let rho: Vec<Matrix> = (0..n)
        .map(|x| {
            let pos = group
                .elements()
                .iter()
                .position(|e| e == &right_translation(q, x))
                .expect("R_x is in the closure");
            mats[pos].clone()
        })
        .collect();
    Representation::new(q.clone(), rho, tol)
}

/// Whether the subspace is invariant under every `ρ(x)`:
/// `‖(I − BBᴴ) ρ(x) B‖_max ≤ eps` for all `x`.
pub fn is_invariant(rep: &Representation, s: &Subspace, eps: f64) -> Result<bool> {
    Ok(invariance_residual(rep, s)? <= eps)
}

/// `max_x ‖(I − BBᴴ) ρ(x) B‖_max`.
pub fn invariance_residual(rep: &Representation, s: &Subspace) -> Result<f64> {
    if s.ambient_dim() != rep.dim() {
        return Err(Error::Dimension(format!(
            "subspace ambient dim {} does not match representation dim {}",
            s.ambient_dim(),
            rep.dim()
        )));
    }
    let complement = Matrix::identity(rep.dim()).sub(&s.projector());
    let mut worst = 0.0f64;
    for m in rep.matrices() {
        worst = worst.max(complement.mul(m).mul(s.basis()).max_abs());
    }
    Ok(worst)
}

/// Pivot threshold used when extracting joint kernels (commutants and
/// intertwiners). Looser than the base epsilon to absorb eigensolver error in
/// restricted representations.
const KERNEL_RANK_TOL: f64 = 1e-7;

/// Orthonormal basis of `{φ : φ·A(x) = B(x)·φ for all x}` where `φ` is
/// `dim_b × dim_a`, from the normal equations of the stacked linear system.
fn joint_kernel(a_mats: &[Matrix], b_mats: &[Matrix]) -> Result<Vec<Matrix>> {
    let da = a_mats[0].rows();
    let db = b_mats[0].rows();
    let size = da * db;
    // Gram matrix Σ LᴴL with L = (A(x)ᵀ ⊗ I) − (I ⊗ B(x)) acting on vec(φ)
    // stacked column-major.
    let mut gram = Matrix::zeros(size, size);
    let id_a = Matrix::identity(da);
    let id_b = Matrix::identity(db);
    for (a, b) in a_mats.iter().zip(b_mats) {
        let at = a.transpose();
        let abar = a.conj();
        let bh = b.adjoint();
        gram = gram
            .add(&linalg::kron(&abar.mul(&at), &id_b))
            .add(&linalg::kron(&id_a, &bh.mul(b)))
            .sub(&linalg::kron(&abar, b))
            .sub(&linalg::kron(&at, &bh));
    }
    let kernel = linalg::nullspace(&gram, KERNEL_RANK_TOL)?;
    Ok(kernel
        .into_iter()
        .map(|v| Matrix::from_fn(db, da, |i, j| v[i + db * j]))
        .collect())
}

/// Basis of the commutant `{M : M ρ(x) = ρ(x) M for all x}`.
///
/// Its dimension is 1 exactly when a unitary representation is irreducible.
pub fn commutant_basis(rep: &Representation) -> Result<Vec<Matrix>> {
    joint_kernel(rep.matrices(), rep.matrices())
}

/// Basis of the intertwiner space `{φ : φ ρ_a(x) = ρ_b(x) φ for all x}`.
///
/// Two irreducibles are equivalent exactly when this space has dimension 1
/// and its basis element is invertible.
pub fn intertwiner_space(a: &Representation, b: &Representation) -> Result<Vec<Matrix>> {
    if a.quandle() != b.quandle() {
        return Err(Error::Domain(
            "intertwiner_space: representations are over different quandles".into(),
        ));
    }
    joint_kernel(a.matrices(), b.matrices())
}

/// One invariant component found by [`decompose`].
#[derive(Clone, Debug)]
pub struct Component {
    pub subspace: Subspace,
    pub label: Option<IrrepLabel>,
    pub dimension: usize,
}

/// Decomposition of a representation into irreducible invariant subspaces.
#[derive(Clone, Debug)]
pub struct DecompositionReport {
    pub ambient: Representation,
    pub components: Vec<Component>,
    pub seed: u64,
}

impl DecompositionReport {
    /// Sum of component dimensions.
    pub fn total_dim(&self) -> usize {
        self.components.iter().map(|c| c.dimension).sum()
    }

    /// Largest invariance residual over all components.
    pub fn max_invariance_residual(&self) -> Result<f64> {
        let mut worst = 0.0f64;
        for c in &self.components {
            worst = worst.max(invariance_residual(&self.ambient, &c.subspace)?);
        }
        Ok(worst)
    }

    /// Largest orthonormality residual over all component bases.
    pub fn max_orthonormality_residual(&self) -> f64 {
        self.components
            .iter()
            .map(|c| c.subspace.orthonormality_residual())
            .fold(0.0, f64::max)
    }

    /// Rank of all component basis columns stacked together.
    pub fn stacked_rank(&self) -> usize {
        let cols: Vec<Vec<Scalar>> = self
            .components
            .iter()
            .flat_map(|c| (0..c.subspace.dim()).map(|j| c.subspace.basis().col(j)))
            .collect();
        orthonormalize(&cols, 1e-9).len()
    }
}

/// Maximum redraw attempts when a random commutant element fails to split a
/// reducible block.
const MAX_DEGENERATE_DRAWS: usize = 16;

/// Decomposes a unitary representation into irreducible invariant subspaces
/// by recursive eigensplitting of random Hermitian commutant elements.
///
/// A random element is `H = C + Cᴴ` where `C` combines a commutant basis with
/// complex coefficients whose parts are drawn uniformly from `[−1, 1]` by a
/// ChaCha PRNG seeded with `seed`. Components come back in canonical order
/// (descending dimension, then discovery order) and the result is
/// deterministic for a fixed seed.
pub fn decompose(rep: &Representation, seed: u64, tol: &Tol) -> Result<DecompositionReport> {
    if !rep.is_unitary(tol.eps) {
        return Err(Error::Decomposition(
            "decompose requires a unitary representation; complete reducibility \
             is not guaranteed otherwise"
                .into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut leaves: Vec<Subspace> = Vec::new();
    split_into_irreducibles(rep, Subspace::full(rep.dim()), &mut rng, tol, &mut leaves)?;

    leaves.sort_by_key(|leaf| std::cmp::Reverse(leaf.dim()));
    let components = leaves
        .into_iter()
        .map(|subspace| Component {
            dimension: subspace.dim(),
            label: None,
            subspace,
        })
        .collect();
    let report = DecompositionReport {
        ambient: rep.clone(),
        components,
        seed,
    };
    if report.total_dim() != rep.dim() || report.stacked_rank() != rep.dim() {
        return Err(Error::Decomposition(
            "components do not span the ambient space".into(),
        ));
    }
    Ok(report)
}

fn split_into_irreducibles(
    ambient: &Representation,
    node: Subspace,
    rng: &mut ChaCha8Rng,
    tol: &Tol,
    out: &mut Vec<Subspace>,
) -> Result<()> {
    let restricted = ambient.restrict(&node);
    let commutant = commutant_basis(&restricted)?;
    if commutant.len() <= 1 {
        out.push(node);
        return Ok(());
    }
    for _attempt in 0..MAX_DEGENERATE_DRAWS {
        let k = restricted.dim();
        let mut candidate = Matrix::zeros(k, k);
        for basis_elem in &commutant {
            let coeff = Scalar::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0));
            candidate = candidate.add(&basis_elem.scale(coeff));
        }
        let hermitian = candidate.add(&candidate.adjoint());
        let groups = hermitian_eigensplit(&hermitian, tol.eig_gap)?;
        if groups.len() < 2 {
            continue; // degenerate draw
        }
        for (_eigenvalue, eigenspace) in groups {
            let child_basis = node.basis().mul(eigenspace.basis());
            let child = Subspace::new(child_basis, tol.eps)?;
            split_into_irreducibles(ambient, child, rng, tol, out)?;
        }
        return Ok(());
    }
    Err(Error::Decomposition(format!(
        "commutant of dimension {} produced no split after {MAX_DEGENERATE_DRAWS} draws",
        commutant.len()
    )))
}
