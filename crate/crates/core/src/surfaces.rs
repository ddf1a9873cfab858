//! Closed combinatorial surfaces: validation, genus, mod-2 cycle bases,
//! Poincare duality, and the intersection form.
//!
//! Intersection numbers are computed algebraically: both cycles are turned
//! into dual 1-cocycles and paired through the simplicial cup product
//! evaluated on the fundamental class. On homology this agrees with the
//! geometric transversal crossing count, without any PL perturbation.

use thiserror::Error;

use crate::complexes::{ComplexError, FundamentalClass, SimplicialComplex, Vertex};
use crate::exact_linear::{Gf2Matrix, Gf2Span, Gf2Vec};
use crate::quadratic::{self, FormError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("expected a 2-dimensional complex, got dimension {0}")]
    NotTwoDimensional(usize),
    #[error(transparent)]
    Structure(#[from] ComplexError),
    #[error("operation requires an orientable surface")]
    NonOrientable,
    #[error("edge {0:?} is not an edge of the surface")]
    UnknownEdge((Vertex, Vertex)),
    #[error("edge chain is not a mod-2 cycle: vertex {0} has odd incidence")]
    NotACycle(Vertex),
    #[error("cycle vector has length {got}, surface has {expected} edges")]
    EdgeCountMismatch { expected: usize, got: usize },
    #[error("Poincare duality system is inconsistent; the surface data is invalid")]
    DualityFailure,
    #[error("intersection form is degenerate; the surface data is invalid")]
    DegenerateForm,
    #[error(transparent)]
    Form(#[from] FormError),
}

/// Validated closed connected surface with orientation data.
#[derive(Clone, Debug)]
pub struct ClosedSurface {
    complex: SimplicialComplex,
    fundamental: FundamentalClass,
    genus: Option<usize>,
}

impl ClosedSurface {
    /// Checks that the complex is a closed connected 2-manifold-like
    /// pseudomanifold and computes orientability and genus.
    pub fn validate(complex: SimplicialComplex) -> Result<Self, SurfaceError> {
        if complex.is_empty() || complex.dim() != 2 {
            return Err(SurfaceError::NotTwoDimensional(complex.dim()));
        }
        // every edge in exactly two triangles + strong connectivity
        let fundamental = complex.fundamental_class()?;
        let genus = if fundamental.orientable() {
            let chi = complex.euler_characteristic();
            debug_assert!(chi <= 2 && chi % 2 == 0);
            Some(((2 - chi) / 2) as usize)
        } else {
            None
        };
        Ok(ClosedSurface {
            complex,
            fundamental,
            genus,
        })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn orientable(&self) -> bool {
        self.fundamental.orientable()
    }

    /// Genus; None for non-orientable surfaces.
    pub fn genus(&self) -> Option<usize> {
        self.genus
    }

    pub fn fundamental_class(&self) -> &FundamentalClass {
        &self.fundamental
    }

    pub fn edge_count(&self) -> usize {
        self.complex.count(1)
    }

    fn require_orientable(&self) -> Result<usize, SurfaceError> {
        self.genus.ok_or(SurfaceError::NonOrientable)
    }

    /// 2g cycles whose classes form a basis of H_1(M; Z/2): the nullspace of
    /// the edge boundary operator, reduced modulo the image of the triangle
    /// boundary operator.
    pub fn h1_basis(&self) -> Result<Vec<CycleZ2>, SurfaceError> {
        let g = self.require_orientable()?;
        let b1 = self.complex.boundary_matrix_gf2(1).expect("dim 2");
        let b2 = self.complex.boundary_matrix_gf2(2).expect("dim 2");

        let mut span = Gf2Span::new();
        for t in 0..self.complex.count(2) {
            let mut col = Gf2Vec::zeros(self.edge_count());
            for e in 0..self.edge_count() {
                if b2.get(e, t) {
                    col.set(e, true);
                }
            }
            span.insert(&col);
        }
        let mut basis = Vec::with_capacity(2 * g);
        for z in b1.nullspace() {
            if span.insert(&z) {
                basis.push(CycleZ2 { edges: z });
            }
        }
        debug_assert_eq!(basis.len(), 2 * g);
        Ok(basis)
    }

    /// Build a cycle from a bit vector over edges, verifying it is closed.
    pub fn cycle_from_bits(&self, edges: Gf2Vec) -> Result<CycleZ2, SurfaceError> {
        if edges.len() != self.edge_count() {
            return Err(SurfaceError::EdgeCountMismatch {
                expected: self.edge_count(),
                got: edges.len(),
            });
        }
        let b1 = self.complex.boundary_matrix_gf2(1).expect("dim 2");
        let boundary = b1.mul_vec(&edges);
        if let Some(v) = boundary.ones().next() {
            return Err(SurfaceError::NotACycle(self.complex.simplex(0, v)[0]));
        }
        Ok(CycleZ2 { edges })
    }

    /// Build a cycle from a list of vertex pairs.
    pub fn cycle_from_edges(&self, edges: &[(Vertex, Vertex)]) -> Result<CycleZ2, SurfaceError> {
        let mut bits = Gf2Vec::zeros(self.edge_count());
        for &(a, b) in edges {
            let key = if a <= b { vec![a, b] } else { vec![b, a] };
            let idx = self
                .complex
                .index_of(1, &key)
                .ok_or(SurfaceError::UnknownEdge((a, b)))?;
            // repeated edges cancel mod 2
            bits.set(idx, !bits.get(idx));
        }
        self.cycle_from_bits(bits)
    }

    /// A 1-cocycle alpha with cap(alpha, [M]) homologous to x: the Poincare
    /// dual. Found by solving the combined GF(2) system
    /// delta(alpha) = 0, cap(alpha) + boundary(beta) = x.
    pub fn poincare_dual(&self, x: &CycleZ2) -> Result<Gf2Vec, SurfaceError> {
        self.require_orientable()?;
        let e = self.edge_count();
        let f = self.complex.count(2);
        let b2 = self.complex.boundary_matrix_gf2(2).expect("dim 2");

        // unknowns: alpha (e bits) then beta (f bits)
        let mut system = Gf2Matrix::zeros(f + e, e + f);
        // delta(alpha) = 0: for each triangle, the sum of alpha over its
        // edges vanishes
        for t in 0..f {
            for edge in 0..e {
                if b2.get(edge, t) {
                    system.set(t, edge, true);
                }
            }
        }
        // cap(alpha)(back edge) picks up alpha(front edge) per triangle
        for t in 0..f {
            let (front, back) = self.front_back_edges(t);
            let row = f + back;
            let cur = system.get(row, front);
            system.set(row, front, !cur);
        }
        // + boundary(beta) = x
        for t in 0..f {
            for edge in 0..e {
                if b2.get(edge, t) {
                    system.set(f + edge, e + t, true);
                }
            }
        }
        let mut rhs = Gf2Vec::zeros(f + e);
        for i in x.edges.ones() {
            rhs.set(f + i, true);
        }
        let solution = system
            .solve(&rhs)
            .expect("dimensions agree")
            .ok_or(SurfaceError::DualityFailure)?;
        let mut alpha = Gf2Vec::zeros(e);
        for i in 0..e {
            if solution.get(i) {
                alpha.set(i, true);
            }
        }
        Ok(alpha)
    }

    /// Front edge [v0,v1] and back edge [v1,v2] of triangle t under the
    /// ascending-label convention.
    fn front_back_edges(&self, t: usize) -> (usize, usize) {
        let tri = self.complex.simplex(2, t);
        let front = self
            .complex
            .index_of(1, &[tri[0], tri[1]])
            .expect("closed under faces");
        let back = self
            .complex
            .index_of(1, &[tri[1], tri[2]])
            .expect("closed under faces");
        (front, back)
    }

    /// Evaluate the cup product of two 1-cochains on the mod-2 fundamental
    /// class: sum over triangles of alpha(front) * beta(back).
    fn cup_on_fundamental(&self, alpha: &Gf2Vec, beta: &Gf2Vec) -> bool {
        let mut acc = false;
        for t in 0..self.complex.count(2) {
            let (front, back) = self.front_back_edges(t);
            acc ^= alpha.get(front) & beta.get(back);
        }
        acc
    }

    /// Mod-2 intersection number of two cycles.
    pub fn intersection_number(&self, x: &CycleZ2, y: &CycleZ2) -> Result<bool, SurfaceError> {
        let alpha = self.poincare_dual(x)?;
        let beta = self.poincare_dual(y)?;
        Ok(self.cup_on_fundamental(&alpha, &beta))
    }

    /// Symplectic cycle basis with its Gram matrix; nondegenerate of rank 2g.
    pub fn intersection_form(&self) -> Result<IntersectionForm, SurfaceError> {
        let g = self.require_orientable()?;
        let raw = self.h1_basis()?;
        let mut raw_gram = Gf2Matrix::zeros(2 * g, 2 * g);
        let duals: Vec<Gf2Vec> = raw
            .iter()
            .map(|c| self.poincare_dual(c))
            .collect::<Result<_, _>>()?;
        for i in 0..2 * g {
            for j in 0..2 * g {
                raw_gram.set(i, j, self.cup_on_fundamental(&duals[i], &duals[j]));
            }
        }
        if raw_gram.rank() != 2 * g {
            return Err(SurfaceError::DegenerateForm);
        }
        let sb = quadratic::symplectic_basis(&raw_gram)?;

        // change basis: each symplectic vector is a combination of raw cycles
        let combine = |coords: &Gf2Vec| -> CycleZ2 {
            let mut edges = Gf2Vec::zeros(self.edge_count());
            for i in coords.ones() {
                edges.xor_assign(&raw[i].edges);
            }
            CycleZ2 { edges }
        };
        let mut basis: Vec<CycleZ2> = sb.a.iter().map(&combine).collect();
        basis.extend(sb.b.iter().map(&combine));

        // recompute the Gram matrix in the new basis and insist on the
        // standard symplectic shape
        let mut gram = Gf2Matrix::zeros(2 * g, 2 * g);
        for i in 0..2 * g {
            for j in 0..2 * g {
                gram.set(i, j, self.intersection_number(&basis[i], &basis[j])?);
            }
        }
        for i in 0..2 * g {
            for j in 0..2 * g {
                let expected = (i + g == j) || (j + g == i);
                if gram.get(i, j) != expected {
                    return Err(SurfaceError::DegenerateForm);
                }
            }
        }
        Ok(IntersectionForm { basis, gram })
    }
}

/// Mod-2 one-cycle on a surface, stored as an edge indicator vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleZ2 {
    edges: Gf2Vec,
}

impl CycleZ2 {
    pub fn bits(&self) -> &Gf2Vec {
        &self.edges
    }

    pub fn sum(&self, other: &CycleZ2) -> CycleZ2 {
        let mut edges = self.edges.clone();
        edges.xor_assign(&other.edges);
        CycleZ2 { edges }
    }

    pub fn is_zero(&self) -> bool {
        self.edges.is_zero()
    }
}

/// Cycle basis in symplectic order (a_1..a_g, b_1..b_g) with the pairing
/// Gram matrix.
#[derive(Clone, Debug)]
pub struct IntersectionForm {
    pub basis: Vec<CycleZ2>,
    pub gram: Gf2Matrix,
}

impl IntersectionForm {
    pub fn genus(&self) -> usize {
        self.basis.len() / 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models;
    use rand::{Rng, SeedableRng};

    fn torus() -> ClosedSurface {
        ClosedSurface::validate(models::torus_7()).unwrap()
    }

    fn grid_torus() -> ClosedSurface {
        ClosedSurface::validate(models::torus_grid(3, 3)).unwrap()
    }

    fn random_cycle(s: &ClosedSurface, rng: &mut impl Rng) -> CycleZ2 {
        // random combination of homology basis cycles and triangle boundaries
        let b2 = s.complex().boundary_matrix_gf2(2).unwrap();
        let mut bits = Gf2Vec::zeros(s.edge_count());
        for c in s.h1_basis().unwrap() {
            if rng.gen_bool(0.5) {
                bits.xor_assign(c.bits());
            }
        }
        for t in 0..s.complex().count(2) {
            if rng.gen_bool(0.3) {
                let mut col = Gf2Vec::zeros(s.edge_count());
                for e in 0..s.edge_count() {
                    if b2.get(e, t) {
                        col.set(e, true);
                    }
                }
                bits.xor_assign(&col);
            }
        }
        s.cycle_from_bits(bits).unwrap()
    }

    #[test]
    fn validate_sphere() {
        let s = ClosedSurface::validate(models::sphere_tetrahedron()).unwrap();
        assert!(s.orientable());
        assert_eq!(s.genus(), Some(0));
    }

    #[test]
    fn validate_torus() {
        let s = torus();
        assert!(s.orientable());
        assert_eq!(s.genus(), Some(1));
    }

    #[test]
    fn validate_rp2_nonorientable() {
        let s = ClosedSurface::validate(models::rp2_6()).unwrap();
        assert!(!s.orientable());
        assert_eq!(s.genus(), None);
        assert!(matches!(s.h1_basis(), Err(SurfaceError::NonOrientable)));
    }

    #[test]
    fn validate_rejects_open_surface() {
        let err = ClosedSurface::validate(models::mobius_7()).unwrap_err();
        assert!(matches!(
            err,
            SurfaceError::Structure(ComplexError::NotClosed { .. })
        ));
    }

    #[test]
    fn validate_rejects_wrong_dimension() {
        let err = ClosedSurface::validate(models::triangle_circle()).unwrap_err();
        assert!(matches!(err, SurfaceError::NotTwoDimensional(1)));
    }

    #[test]
    fn h1_basis_sizes() {
        assert!(ClosedSurface::validate(models::sphere_tetrahedron())
            .unwrap()
            .h1_basis()
            .unwrap()
            .is_empty());
        assert_eq!(torus().h1_basis().unwrap().len(), 2);
        assert_eq!(
            ClosedSurface::validate(models::genus_2())
                .unwrap()
                .h1_basis()
                .unwrap()
                .len(),
            4
        );
        assert_eq!(
            ClosedSurface::validate(models::genus_g(3))
                .unwrap()
                .h1_basis()
                .unwrap()
                .len(),
            6
        );
    }

    #[test]
    fn poincare_dual_of_zero_cycle() {
        let s = torus();
        let zero = s.cycle_from_bits(Gf2Vec::zeros(s.edge_count())).unwrap();
        let alpha = s.poincare_dual(&zero).unwrap();
        // alpha = 0 is admissible; the solver's particular solution with a
        // zero right-hand side is zero
        assert!(alpha.is_zero());
    }

    #[test]
    fn poincare_dual_pairs_meridian_with_longitude() {
        let s = grid_torus();
        // vertex (i,j) has label 3i + j; meridian = row j=0, longitude = column i=0
        let meridian = s.cycle_from_edges(&[(0, 3), (3, 6), (0, 6)]).unwrap();
        let longitude = s.cycle_from_edges(&[(0, 1), (1, 2), (0, 2)]).unwrap();
        let alpha = s.poincare_dual(&meridian).unwrap();
        // evaluate the dual cocycle on the longitude: must pair to 1
        let pairing = longitude
            .bits()
            .ones()
            .fold(false, |acc, e| acc ^ alpha.get(e));
        assert!(pairing);
    }

    #[test]
    fn poincare_dual_of_boundary_pairs_trivially() {
        let s = torus();
        let b2 = s.complex().boundary_matrix_gf2(2).unwrap();
        let mut bits = Gf2Vec::zeros(s.edge_count());
        for e in 0..s.edge_count() {
            if b2.get(e, 0) {
                bits.set(e, true);
            }
        }
        let boundary_cycle = s.cycle_from_bits(bits).unwrap();
        for c in s.h1_basis().unwrap() {
            assert!(!s.intersection_number(&boundary_cycle, &c).unwrap());
        }
    }

    #[test]
    fn intersection_is_alternating_and_symmetric() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for s in [
            torus(),
            grid_torus(),
            ClosedSurface::validate(models::genus_2()).unwrap(),
            ClosedSurface::validate(models::genus_g(3)).unwrap(),
        ] {
            for _ in 0..8 {
                let x = random_cycle(&s, &mut rng);
                let y = random_cycle(&s, &mut rng);
                assert!(!s.intersection_number(&x, &x).unwrap(), "I(x,x) != 0");
                assert_eq!(
                    s.intersection_number(&x, &y).unwrap(),
                    s.intersection_number(&y, &x).unwrap()
                );
            }
        }
    }

    #[test]
    fn intersection_depends_only_on_homology_class() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        let s = torus();
        let b2 = s.complex().boundary_matrix_gf2(2).unwrap();
        for _ in 0..8 {
            let x = random_cycle(&s, &mut rng);
            let y = random_cycle(&s, &mut rng);
            // perturb x by the boundary of a random 2-chain
            let mut chain = Gf2Vec::zeros(s.complex().count(2));
            for t in 0..chain.len() {
                chain.set(t, rng.gen_bool(0.5));
            }
            let mut perturbed = x.bits().clone();
            perturbed.xor_assign(&b2.mul_vec(&chain));
            let x2 = s.cycle_from_bits(perturbed).unwrap();
            assert_eq!(
                s.intersection_number(&x, &y).unwrap(),
                s.intersection_number(&x2, &y).unwrap()
            );
        }
    }

    #[test]
    fn cup_pairing_matches_geometric_crossing_count_on_grid_torus() {
        // on the 3x3 grid torus the meridian (row 0) and longitude (column
        // 0) are edge-disjoint closed curves meeting transversally at the
        // single vertex 0: exactly one crossing
        let s = grid_torus();
        let meridian = s.cycle_from_edges(&[(0, 3), (3, 6), (0, 6)]).unwrap();
        let longitude = s.cycle_from_edges(&[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(s.intersection_number(&meridian, &longitude).unwrap());
    }

    #[test]
    fn intersection_form_of_sphere_is_empty() {
        let s = ClosedSurface::validate(models::sphere_tetrahedron()).unwrap();
        let form = s.intersection_form().unwrap();
        assert_eq!(form.genus(), 0);
        assert!(form.basis.is_empty());
        assert_eq!(form.gram.rows(), 0);
    }

    #[test]
    fn intersection_form_of_torus_is_hyperbolic() {
        let form = torus().intersection_form().unwrap();
        assert_eq!(form.genus(), 1);
        assert_eq!(form.gram, Gf2Matrix::from_rows(&[vec![0, 1], vec![1, 0]]));
    }

    #[test]
    fn intersection_form_of_genus_two_has_rank_four() {
        let form = ClosedSurface::validate(models::genus_2())
            .unwrap()
            .intersection_form()
            .unwrap();
        assert_eq!(form.genus(), 2);
        assert_eq!(form.gram.rank(), 4);
        assert!(form.gram.has_zero_diagonal());
    }
}
