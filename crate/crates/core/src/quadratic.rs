//! Quadratic refinements of mod-2 intersection forms, symplectic bases over
//! GF(2), and the Arf invariant — with an independent majority-count oracle.

use thiserror::Error;

use crate::exact_linear::{Gf2Matrix, Gf2Span, Gf2Vec};
use crate::surfaces::{ClosedSurface, CycleZ2, SurfaceError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormError {
    #[error("Gram matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("Gram matrix must be symmetric with zero diagonal")]
    NotAlternating,
    #[error("Gram matrix is degenerate (rank {rank} < {dim})")]
    Degenerate { rank: usize, dim: usize },
    #[error("expected {expected} basis values, got {got}")]
    BasisMismatch { expected: usize, got: usize },
    #[error("cycles do not form a basis of H_1(M; Z/2)")]
    NotABasis,
    #[error("dimension {0} too large for full enumeration (max 24)")]
    TooLarge(usize),
    #[error("vector length {got} does not match form dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Surface(Box<SurfaceError>),
    #[error("hyperbolic pair extraction failed on a supposedly nondegenerate form")]
    ExtractionFailure,
}

impl From<SurfaceError> for FormError {
    fn from(e: SurfaceError) -> Self {
        FormError::Surface(Box::new(e))
    }
}

fn check_gram(gram: &Gf2Matrix) -> Result<(), FormError> {
    if gram.rows() != gram.cols() {
        return Err(FormError::NotSquare {
            rows: gram.rows(),
            cols: gram.cols(),
        });
    }
    if !gram.is_symmetric() || !gram.has_zero_diagonal() {
        return Err(FormError::NotAlternating);
    }
    let rank = gram.rank();
    if rank != gram.rows() {
        return Err(FormError::Degenerate {
            rank,
            dim: gram.rows(),
        });
    }
    Ok(())
}

/// Function q on GF(2)^2g with q(x+y) = q(x) + q(y) + x^T G y, determined by
/// its Gram matrix and its values on the standard basis.
#[derive(Clone, Debug)]
pub struct QuadraticRefinement {
    gram: Gf2Matrix,
    basis_values: Gf2Vec,
}

/// Extend q from basis values to the whole space by the refinement
/// relation; the extension is unique.
pub fn build_refinement(
    gram: Gf2Matrix,
    basis_values: Gf2Vec,
) -> Result<QuadraticRefinement, FormError> {
    check_gram(&gram)?;
    if basis_values.len() != gram.rows() {
        return Err(FormError::BasisMismatch {
            expected: gram.rows(),
            got: basis_values.len(),
        });
    }
    Ok(QuadraticRefinement { gram, basis_values })
}

/// Refinement attached to a surface: the Gram matrix is the intersection
/// form in the given cycle basis, the basis values are the supplied
/// residues.
pub fn refinement_from_surface(
    surface: &ClosedSurface,
    residues: &[(CycleZ2, bool)],
) -> Result<QuadraticRefinement, FormError> {
    let g = surface.genus().ok_or_else(|| {
        FormError::Surface(Box::new(SurfaceError::NonOrientable))
    })?;
    if residues.len() != 2 * g {
        return Err(FormError::BasisMismatch {
            expected: 2 * g,
            got: residues.len(),
        });
    }
    // the classes must span H_1: boundaries plus the cycles reach full rank
    let b2 = surface
        .complex()
        .boundary_matrix_gf2(2)
        .map_err(SurfaceError::Structure)?;
    let mut span = Gf2Span::new();
    for t in 0..surface.complex().count(2) {
        let mut col = Gf2Vec::zeros(surface.edge_count());
        for e in 0..surface.edge_count() {
            if b2.get(e, t) {
                col.set(e, true);
            }
        }
        span.insert(&col);
    }
    for (cycle, _) in residues {
        if !span.insert(cycle.bits()) {
            return Err(FormError::NotABasis);
        }
    }

    let dim = 2 * g;
    let mut gram = Gf2Matrix::zeros(dim, dim);
    for i in 0..dim {
        for j in 0..dim {
            gram.set(
                i,
                j,
                surface.intersection_number(&residues[i].0, &residues[j].0)?,
            );
        }
    }
    let mut basis_values = Gf2Vec::zeros(dim);
    for (i, (_, r)) in residues.iter().enumerate() {
        basis_values.set(i, *r);
    }
    build_refinement(gram, basis_values)
}

impl QuadraticRefinement {
    /// Dimension 2g of the underlying GF(2) space.
    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn genus(&self) -> usize {
        self.dim() / 2
    }

    pub fn gram(&self) -> &Gf2Matrix {
        &self.gram
    }

    pub fn basis_values(&self) -> &Gf2Vec {
        &self.basis_values
    }

    /// Evaluate q by folding the refinement relation over the set bits.
    pub fn q(&self, x: &Gf2Vec) -> Result<bool, FormError> {
        if x.len() != self.dim() {
            return Err(FormError::DimensionMismatch {
                expected: self.dim(),
                got: x.len(),
            });
        }
        let mut value = false;
        let mut partial = Gf2Vec::zeros(self.dim());
        for i in x.ones() {
            // q(p + e_i) = q(p) + q(e_i) + I(p, e_i)
            value ^= self.basis_values.get(i) ^ partial.dot(self.gram.row(i));
            partial.set(i, true);
        }
        Ok(value)
    }

    /// q over bitmask coordinates; valid when dim <= 24.
    fn q_mask(&self, x: u32, gram_rows: &[u32]) -> bool {
        let mut value = false;
        let mut partial = 0u32;
        let mut rest = x;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            value ^= self.basis_values.get(i) ^ ((gram_rows[i] & partial).count_ones() & 1 == 1);
            partial |= 1 << i;
        }
        value
    }

    fn gram_row_masks(&self) -> Vec<u32> {
        (0..self.dim())
            .map(|i| {
                self.gram
                    .row(i)
                    .ones()
                    .fold(0u32, |acc, j| acc | (1 << j))
            })
            .collect()
    }

    /// Full value table as masks -> q, for dim <= 24.
    pub fn value_table(&self) -> Result<Vec<bool>, FormError> {
        if self.dim() > 24 {
            return Err(FormError::TooLarge(self.dim()));
        }
        let rows = self.gram_row_masks();
        let size = 1usize << self.dim();
        let mut table = vec![false; size];
        for (mask, slot) in table.iter_mut().enumerate() {
            *slot = self.q_mask(mask as u32, &rows);
        }
        Ok(table)
    }
}

/// Basis vectors a_1..a_g, b_1..b_g with I(a_i, b_i) = 1 and all other
/// pairings zero.
#[derive(Clone, Debug)]
pub struct SymplecticBasis {
    pub a: Vec<Gf2Vec>,
    pub b: Vec<Gf2Vec>,
}

impl SymplecticBasis {
    pub fn genus(&self) -> usize {
        self.a.len()
    }
}

/// Greedy hyperbolic-pair extraction: pick the first remaining vector, find
/// a partner pairing to 1, project the rest into the symplectic complement,
/// recurse. Ties break to the lowest index, so the output is deterministic.
pub fn symplectic_basis(gram: &Gf2Matrix) -> Result<SymplecticBasis, FormError> {
    check_gram(gram)?;
    let dim = gram.rows();
    let mut space: Vec<Gf2Vec> = (0..dim).map(|i| Gf2Vec::basis(dim, i)).collect();
    let mut a_vecs = Vec::with_capacity(dim / 2);
    let mut b_vecs = Vec::with_capacity(dim / 2);
    while !space.is_empty() {
        let a = space.remove(0);
        let partner = space
            .iter()
            .position(|v| gram.bilinear(&a, v))
            .ok_or(FormError::ExtractionFailure)?;
        let b = space.remove(partner);
        for w in &mut space {
            // kill the pairings with a and b; the form restricted to the
            // projected span stays nondegenerate
            if gram.bilinear(w, &b) {
                w.xor_assign(&a);
            }
            if gram.bilinear(w, &a) {
                w.xor_assign(&b);
            }
        }
        a_vecs.push(a);
        b_vecs.push(b);
    }
    let basis = SymplecticBasis {
        a: a_vecs,
        b: b_vecs,
    };
    verify_symplectic(gram, &basis)?;
    Ok(basis)
}

fn verify_symplectic(gram: &Gf2Matrix, basis: &SymplecticBasis) -> Result<(), FormError> {
    let g = basis.genus();
    let all: Vec<&Gf2Vec> = basis.a.iter().chain(basis.b.iter()).collect();
    let mut span = Gf2Span::new();
    for v in &all {
        if !span.insert(v) {
            return Err(FormError::ExtractionFailure);
        }
    }
    for i in 0..2 * g {
        for j in 0..2 * g {
            let expected = (i + g == j) || (j + g == i);
            if gram.bilinear(all[i], all[j]) != expected {
                return Err(FormError::ExtractionFailure);
            }
        }
    }
    Ok(())
}

/// Arf invariant: sum of q(a_i) q(b_i) over a symplectic basis.
pub fn arf(refinement: &QuadraticRefinement) -> bool {
    let basis =
        symplectic_basis(refinement.gram()).expect("refinement carries a valid Gram matrix");
    let mut acc = false;
    for (a, b) in basis.a.iter().zip(&basis.b) {
        let qa = refinement.q(a).expect("basis vector has the right length");
        let qb = refinement.q(b).expect("basis vector has the right length");
        acc ^= qa & qb;
    }
    acc
}

/// Independent oracle: the Arf invariant is the value q takes on the
/// majority of vectors. Full enumeration, so capped at dim 24; the counts
/// can never tie for a nondegenerate form, and a tie aborts loudly.
pub fn arf_democratic(refinement: &QuadraticRefinement) -> Result<bool, FormError> {
    let table = refinement.value_table()?;
    let ones = table.iter().filter(|&&v| v).count();
    let zeros = table.len() - ones;
    assert_ne!(
        zeros, ones,
        "democratic count tie: corrupted quadratic refinement"
    );
    Ok(ones > zeros)
}
