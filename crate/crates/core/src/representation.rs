//! Finite-dimensional representations of a quiver and maps between them.

use alloc::vec;
use alloc::vec::Vec;

use crate::gentle::GentleAlgebra;
use crate::linalg::{complement_basis, Field, Matrix};
use crate::quiver::{ArrowId, QuiverPresentation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepresentationError {
    #[error("expected {expected} vertex dimensions, found {found}")]
    VertexCount { expected: usize, found: usize },
    #[error("expected {expected} arrow matrices, found {found}")]
    ArrowCount { expected: usize, found: usize },
    #[error("matrix for arrow {arrow} has shape {found:?}, expected {expected:?}")]
    Shape { arrow: ArrowId, expected: (usize, usize), found: (usize, usize) },
}

/// A vector space per vertex and a matrix per arrow (`dim target x dim source`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation<F> {
    dims: Vec<usize>,
    /// `(source, target)` of every arrow, kept so that shapes can be checked
    /// without the quiver at hand.
    ends: Vec<(usize, usize)>,
    actions: Vec<Matrix<F>>,
}

impl<F: Field> Representation<F> {
    pub fn new(q: &QuiverPresentation, dims: Vec<usize>, actions: Vec<Matrix<F>>) -> Result<Self, RepresentationError> {
        if dims.len() != q.vertex_count() {
            return Err(RepresentationError::VertexCount { expected: q.vertex_count(), found: dims.len() });
        }
        if actions.len() != q.arrow_count() {
            return Err(RepresentationError::ArrowCount { expected: q.arrow_count(), found: actions.len() });
        }
        for (i, (a, m)) in q.arrows().iter().zip(&actions).enumerate() {
            let expected = (dims[a.target], dims[a.source]);
            if m.shape() != expected {
                return Err(RepresentationError::Shape { arrow: i, expected, found: m.shape() });
            }
        }
        Ok(Representation { dims, ends: q.arrows().iter().map(|a| (a.source, a.target)).collect(), actions })
    }

    /// All arrows act by zero.
    pub fn zero_with_dims(q: &QuiverPresentation, dims: Vec<usize>) -> Self {
        let actions = q.arrows().iter().map(|a| Matrix::zeros(dims[a.target], dims[a.source])).collect();
        Representation { dims, ends: q.arrows().iter().map(|a| (a.source, a.target)).collect(), actions }
    }

    pub fn zero(q: &QuiverPresentation) -> Self {
        Self::zero_with_dims(q, vec![0; q.vertex_count()])
    }

    /// The simple module at `v`.
    pub fn simple(q: &QuiverPresentation, v: usize) -> Self {
        let mut dims = vec![0; q.vertex_count()];
        dims[v] = 1;
        Self::zero_with_dims(q, dims)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn vertex_count(&self) -> usize {
        self.dims.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.actions.len()
    }

    pub fn source(&self, a: ArrowId) -> usize {
        self.ends[a].0
    }

    pub fn target(&self, a: ArrowId) -> usize {
        self.ends[a].1
    }

    pub fn action(&self, a: ArrowId) -> &Matrix<F> {
        &self.actions[a]
    }

    pub(crate) fn set_action(&mut self, a: ArrowId, m: Matrix<F>) {
        assert_eq!(m.shape(), (self.dims[self.ends[a].1], self.dims[self.ends[a].0]));
        self.actions[a] = m;
    }

    /// Whether this is a representation of the same quiver shape as `alg`.
    pub fn fits(&self, alg: &GentleAlgebra) -> bool {
        let q = alg.quiver();
        self.dims.len() == q.vertex_count()
            && self.ends.len() == q.arrow_count()
            && q.arrows().iter().zip(&self.ends).all(|(a, &(s, t))| a.source == s && a.target == t)
    }

    /// Whether every relation `b*a` acts by zero.
    pub fn satisfies_relations(&self, q: &QuiverPresentation) -> bool {
        q.relations().iter().all(|r| self.actions[r.second].mul(&self.actions[r.first]).is_zero())
    }

    /// The action of a path, arrows in traversal order.
    pub fn path_action(&self, path: &[ArrowId], start: usize) -> Matrix<F> {
        path.iter().fold(Matrix::identity(self.dims[start]), |acc, &a| self.actions[a].mul(&acc))
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        assert_eq!(self.ends, other.ends, "direct sum of representations of different quivers");
        Representation {
            dims: self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect(),
            ends: self.ends.clone(),
            actions: self.actions.iter().zip(&other.actions).map(|(a, b)| a.block_diag(b)).collect(),
        }
    }

    /// The vector-space dual: a representation of the opposite quiver.
    pub fn dual(&self) -> Self {
        Representation {
            dims: self.dims.clone(),
            ends: self.ends.iter().map(|&(s, t)| (t, s)).collect(),
            actions: self.actions.iter().map(Matrix::transpose).collect(),
        }
    }

    /// The submodule spanned at each vertex by the columns of `bases[v]`.
    ///
    /// The columns must be independent and the spans closed under the arrows.
    pub fn restrict(&self, bases: &[Matrix<F>]) -> Self {
        assert_eq!(bases.len(), self.dims.len());
        let left_inverses: Vec<(Vec<usize>, Matrix<F>)> = bases
            .iter()
            .map(|b| {
                let rows = b.transpose().independent_columns();
                let square = b.select_rows(&rows);
                (rows, square.inverse().expect("basis columns must be independent"))
            })
            .collect();
        let actions = self
            .actions
            .iter()
            .zip(&self.ends)
            .map(|(m, &(s, t))| {
                let image = m.mul(&bases[s]);
                let (rows, inv) = &left_inverses[t];
                let coords = inv.mul(&image.select_rows(rows));
                debug_assert_eq!(bases[t].mul(&coords), image, "subspaces not closed under arrow action");
                coords
            })
            .collect();
        Representation { dims: bases.iter().map(Matrix::cols).collect(), ends: self.ends.clone(), actions }
    }

    /// The quotient by the submodule spanned by `bases`, with the projection.
    pub fn quotient(&self, bases: &[Matrix<F>]) -> (Self, ModuleMap<F>) {
        assert_eq!(bases.len(), self.dims.len());
        let mut complements = Vec::with_capacity(bases.len());
        let mut projections = Vec::with_capacity(bases.len());
        for b in bases {
            let c = complement_basis(b);
            let full = b.hstack(&c);
            let inv = full.inverse().expect("basis plus complement is invertible");
            let rows: Vec<usize> = (b.cols()..full.cols()).collect();
            projections.push(inv.select_rows(&rows));
            complements.push(c);
        }
        let actions = self
            .actions
            .iter()
            .zip(&self.ends)
            .map(|(m, &(s, t))| projections[t].mul(&m.mul(&complements[s])))
            .collect();
        let quotient =
            Representation { dims: complements.iter().map(Matrix::cols).collect(), ends: self.ends.clone(), actions };
        (quotient, ModuleMap { blocks: projections })
    }
}

/// A homomorphism of representations: one block per vertex
/// (`dim target_v x dim source_v`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleMap<F> {
    pub blocks: Vec<Matrix<F>>,
}

impl<F: Field> ModuleMap<F> {
    pub fn zero(source: &Representation<F>, target: &Representation<F>) -> Self {
        ModuleMap { blocks: source.dims.iter().zip(&target.dims).map(|(&s, &t)| Matrix::zeros(t, s)).collect() }
    }

    pub fn identity(m: &Representation<F>) -> Self {
        ModuleMap { blocks: m.dims.iter().map(|&d| Matrix::identity(d)).collect() }
    }

    /// Checks shapes and commutation with every arrow.
    pub fn is_homomorphism(&self, source: &Representation<F>, target: &Representation<F>) -> bool {
        self.blocks.len() == source.dims.len()
            && self.blocks.iter().enumerate().all(|(v, b)| b.shape() == (target.dims[v], source.dims[v]))
            && source
                .ends
                .iter()
                .enumerate()
                .all(|(a, &(s, t))| target.actions[a].mul(&self.blocks[s]) == self.blocks[t].mul(&source.actions[a]))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Self) -> Self {
        ModuleMap { blocks: self.blocks.iter().zip(&inner.blocks).map(|(a, b)| a.mul(b)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(Matrix::rank).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.rows())
    }

    /// All block entries concatenated, for rank computations on sets of maps.
    pub fn flatten(&self) -> Vec<F> {
        self.blocks.iter().flat_map(|b| b.entries().iter().cloned()).collect()
    }

    /// Per-vertex kernel bases (columns).
    pub fn kernel_bases(&self) -> Vec<Matrix<F>> {
        self.blocks.iter().map(Matrix::kernel_basis).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::linalg::Rational;

    type Q = Rational;

    #[test]
    fn shape_checks() {
        let q = families::path_a2();
        assert!(Representation::<Q>::new(&q, vec![1], vec![]).is_err());
        assert!(Representation::<Q>::new(&q, vec![1, 1], vec![]).is_err());
        assert!(matches!(
            Representation::<Q>::new(&q, vec![1, 2], vec![Matrix::zeros(1, 1)]),
            Err(RepresentationError::Shape { .. })
        ));
        let m = Representation::<Q>::new(&q, vec![1, 1], vec![Matrix::identity(1)]).unwrap();
        assert_eq!(m.total_dim(), 2);
    }

    #[test]
    fn radical_of_projective_as_sub_and_quotient() {
        let a = families::a2();
        let p: Representation<Q> = a.projective_representation(0);
        assert_eq!(p.dims(), &[1, 1]);
        // rad P_1 = S_2
        let bases = vec![Matrix::zeros(1, 0), Matrix::identity(1)];
        let rad = p.restrict(&bases);
        assert_eq!(rad.dims(), &[0, 1]);
        let (top, pi) = p.quotient(&bases);
        assert_eq!(top.dims(), &[1, 0]);
        assert!(pi.is_homomorphism(&p, &top));
        assert!(pi.is_surjective());
    }

    #[test]
    fn dual_of_dual_is_identity() {
        let a = families::example();
        let p: Representation<Q> = a.projective_representation(3);
        assert_eq!(p.dual().dual(), p);
        assert!(p.dual().satisfies_relations(&a.quiver().opposite()));
    }

    #[test]
    fn direct_sum_adds_dimensions() {
        let a = families::example();
        let p: Representation<Q> = a.projective_representation(0);
        let s = p.direct_sum(&p);
        assert_eq!(s.total_dim(), 2 * p.total_dim());
        assert!(s.satisfies_relations(a.quiver()));
    }
}
