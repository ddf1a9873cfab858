//! Degrees of simplicial maps between closed oriented pseudomanifolds of
//! equal dimension, computed two independent ways: a signed preimage count
//! over target top simplices, and the induced map on top homology with the
//! kernel of the boundary operator identified through Smith normal form.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::complexes::{ComplexError, FundamentalClass, SimplicialComplex, Vertex};
use crate::exact_linear::smith_normal_form;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("vertex {0} of the domain has no image")]
    MissingVertex(Vertex),
    #[error("image of simplex {0:?} does not span a simplex of the codomain")]
    NonSimplicial(Vec<Vertex>),
    #[error("domain dimension {domain} != codomain dimension {codomain}")]
    DimensionMismatch { domain: usize, codomain: usize },
    #[error("orientation data missing: {0}")]
    NotOriented(String),
    #[error("complex is not a closed pseudomanifold: {0}")]
    BadComplex(#[from] ComplexError),
    #[error("signed preimage counts disagree across target simplices: {0:?}")]
    InconsistentCounts(Vec<i64>),
    #[error("chain image of the fundamental cycle is not a multiple of the codomain fundamental cycle")]
    NotAMultiple,
    #[error("composition mismatch: codomain of the first map differs from domain of the second")]
    NotComposable,
}

/// Vertex map between two complexes. Validation checks it is simplicial.
#[derive(Clone, Debug)]
pub struct SimplicialMap {
    domain: SimplicialComplex,
    codomain: SimplicialComplex,
    vertex_map: BTreeMap<Vertex, Vertex>,
}

impl SimplicialMap {
    pub fn new(
        domain: SimplicialComplex,
        codomain: SimplicialComplex,
        vertex_map: BTreeMap<Vertex, Vertex>,
    ) -> Self {
        SimplicialMap {
            domain,
            codomain,
            vertex_map,
        }
    }

    pub fn domain(&self) -> &SimplicialComplex {
        &self.domain
    }

    pub fn codomain(&self) -> &SimplicialComplex {
        &self.codomain
    }

    pub fn vertex_map(&self) -> &BTreeMap<Vertex, Vertex> {
        &self.vertex_map
    }

    /// g after self; defined when self's codomain equals g's domain.
    pub fn compose(&self, g: &SimplicialMap) -> Result<SimplicialMap, MapError> {
        if self.codomain != g.domain {
            return Err(MapError::NotComposable);
        }
        let vm = self
            .vertex_map
            .iter()
            .map(|(&v, w)| (v, g.vertex_map[w]))
            .collect();
        Ok(SimplicialMap::new(
            self.domain.clone(),
            g.codomain.clone(),
            vm,
        ))
    }
}

/// A map whose simplicial-ness has been verified, with its degenerate top
/// simplices recorded.
#[derive(Clone, Debug)]
pub struct ValidatedMap {
    map: SimplicialMap,
    degenerate_top: Vec<usize>,
}

pub fn validate_map(map: SimplicialMap) -> Result<ValidatedMap, MapError> {
    for v in map.domain.vertices() {
        if !map.vertex_map.contains_key(&v) {
            return Err(MapError::MissingVertex(v));
        }
    }
    for k in 0..=map.domain.dim() {
        for simplex in map.domain.simplices(k) {
            let image = image_set(simplex, &map.vertex_map);
            if map.codomain.index_of(image.len() - 1, &image).is_none() {
                return Err(MapError::NonSimplicial(simplex.clone()));
            }
        }
    }
    let n = map.domain.dim();
    let degenerate_top = map
        .domain
        .simplices(n)
        .iter()
        .enumerate()
        .filter(|(_, s)| image_set(s, &map.vertex_map).len() < s.len())
        .map(|(i, _)| i)
        .collect();
    Ok(ValidatedMap {
        map,
        degenerate_top,
    })
}

impl ValidatedMap {
    pub fn map(&self) -> &SimplicialMap {
        &self.map
    }

    /// Indices of top simplices whose image collapses.
    pub fn degenerate_top(&self) -> &[usize] {
        &self.degenerate_top
    }
}

fn image_set(simplex: &[Vertex], vm: &BTreeMap<Vertex, Vertex>) -> Vec<Vertex> {
    let mut image: Vec<Vertex> = simplex.iter().map(|v| vm[v]).collect();
    image.sort_unstable();
    image.dedup();
    image
}

/// Sign of the permutation sorting the image vertices, 0 when degenerate.
fn image_sign(simplex: &[Vertex], vm: &BTreeMap<Vertex, Vertex>) -> (Vec<Vertex>, i64) {
    let image: Vec<Vertex> = simplex.iter().map(|v| vm[v]).collect();
    let mut inversions = 0usize;
    for i in 0..image.len() {
        for j in i + 1..image.len() {
            if image[i] == image[j] {
                return (Vec::new(), 0);
            }
            if image[i] > image[j] {
                inversions += 1;
            }
        }
    }
    let mut sorted = image;
    sorted.sort_unstable();
    (sorted, if inversions % 2 == 0 { 1 } else { -1 })
}

fn oriented_classes(
    vm: &ValidatedMap,
) -> Result<(FundamentalClass, FundamentalClass), MapError> {
    let dom = vm.map.domain.fundamental_class()?;
    let cod = vm.map.codomain.fundamental_class()?;
    Ok((dom, cod))
}

fn check_preconditions(
    vm: &ValidatedMap,
    dom: &FundamentalClass,
    cod: &FundamentalClass,
) -> Result<(), MapError> {
    if vm.map.domain.dim() != vm.map.codomain.dim() {
        return Err(MapError::DimensionMismatch {
            domain: vm.map.domain.dim(),
            codomain: vm.map.codomain.dim(),
        });
    }
    if !dom.orientable() {
        return Err(MapError::NotOriented("domain is non-orientable".into()));
    }
    if !cod.orientable() {
        return Err(MapError::NotOriented("codomain is non-orientable".into()));
    }
    Ok(())
}

/// Degree by signed preimage counting with canonical orientations.
pub fn degree_by_preimage(vm: &ValidatedMap) -> Result<i64, MapError> {
    let (dom, cod) = oriented_classes(vm)?;
    degree_by_preimage_oriented(vm, &dom, &cod)
}

/// Degree by signed preimage counting: for each target top simplex, sum the
/// orientation signs of the top simplices mapping onto it; all target
/// simplices must agree.
pub fn degree_by_preimage_oriented(
    vm: &ValidatedMap,
    dom: &FundamentalClass,
    cod: &FundamentalClass,
) -> Result<i64, MapError> {
    check_preconditions(vm, dom, cod)?;
    let n = vm.map.domain.dim();
    if vm.degenerate_top.len() == vm.map.domain.count(n) {
        // degenerate everywhere: no regular simplex, degree 0 by the
        // homology convention
        return Ok(0);
    }
    let dom_signs = dom.signs().expect("orientable");
    let cod_signs = cod.signs().expect("orientable");

    let mut totals = vec![0i64; vm.map.codomain.count(n)];
    for (t, simplex) in vm.map.domain.simplices(n).iter().enumerate() {
        let (image, sign) = image_sign(simplex, &vm.map.vertex_map);
        if sign == 0 {
            continue;
        }
        let target = vm
            .map
            .codomain
            .index_of(n, &image)
            .expect("validated simplicial map");
        totals[target] += i64::from(dom_signs[t]) * sign;
    }
    let degrees: Vec<i64> = totals
        .iter()
        .zip(cod_signs)
        .map(|(&total, &eps)| total * i64::from(eps))
        .collect();
    let first = degrees[0];
    if degrees.iter().any(|&d| d != first) {
        return Err(MapError::InconsistentCounts(degrees));
    }
    Ok(first)
}

/// Degree via the induced map on top homology with canonical orientations.
pub fn degree_by_homology(vm: &ValidatedMap) -> Result<i64, MapError> {
    let (dom, cod) = oriented_classes(vm)?;
    degree_by_homology_oriented(vm, &dom, &cod)
}

/// Degree via top homology: push the domain fundamental cycle through the
/// chain map and express it against the generator of ker(boundary), which
/// Smith normal form produces.
pub fn degree_by_homology_oriented(
    vm: &ValidatedMap,
    dom: &FundamentalClass,
    cod: &FundamentalClass,
) -> Result<i64, MapError> {
    check_preconditions(vm, dom, cod)?;
    let n = vm.map.domain.dim();
    let dom_signs = dom.signs().expect("orientable");
    let cod_signs = cod.signs().expect("orientable");

    // chain image of the fundamental cycle
    let mut image_chain = vec![BigInt::zero(); vm.map.codomain.count(n)];
    for (t, simplex) in vm.map.domain.simplices(n).iter().enumerate() {
        let (image, sign) = image_sign(simplex, &vm.map.vertex_map);
        if sign == 0 {
            continue;
        }
        let target = vm
            .map
            .codomain
            .index_of(n, &image)
            .expect("validated simplicial map");
        image_chain[target] += BigInt::from(i64::from(dom_signs[t]) * sign);
    }

    // generator of the top cycle lattice of the codomain
    let generator: Vec<BigInt> = if n == 0 {
        vec![BigInt::from(1)]
    } else {
        let boundary = vm.map.codomain.boundary_matrix(n)?;
        let snf = smith_normal_form(&boundary);
        let kernel_cols: Vec<usize> = (0..snf.d.cols())
            .filter(|&j| j >= snf.d.rows() || snf.d.at(j, j).is_zero())
            .collect();
        if kernel_cols.len() != 1 {
            return Err(MapError::NotAMultiple);
        }
        let j = kernel_cols[0];
        (0..snf.v.rows()).map(|i| snf.v.at(i, j).clone()).collect()
    };

    // the generator must be +-(codomain fundamental cycle)
    let fundamental: Vec<BigInt> = cod_signs.iter().map(|&s| BigInt::from(s)).collect();
    let flip = if generator == fundamental {
        1i64
    } else if generator.iter().zip(&fundamental).all(|(g, f)| *g == -f) {
        -1i64
    } else {
        return Err(MapError::NotAMultiple);
    };

    // image_chain = d * generator
    let pivot = generator
        .iter()
        .position(|g| !g.is_zero())
        .ok_or(MapError::NotAMultiple)?;
    let (q, r) = num_integer::Integer::div_rem(&image_chain[pivot], &generator[pivot]);
    if !r.is_zero() {
        return Err(MapError::NotAMultiple);
    }
    for (c, g) in image_chain.iter().zip(&generator) {
        if *c != g * &q {
            return Err(MapError::NotAMultiple);
        }
    }
    let d = q
        .to_i64()
        .filter(|d| d.abs() < i64::MAX / 2)
        .ok_or(MapError::NotAMultiple)?;
    Ok(d * flip)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models;

    fn both_degrees(map: SimplicialMap) -> (i64, i64) {
        let vm = validate_map(map).unwrap();
        (
            degree_by_preimage(&vm).unwrap(),
            degree_by_homology(&vm).unwrap(),
        )
    }

    #[test]
    fn validate_identity_and_constant() {
        let sphere = models::sphere_tetrahedron();
        let id = validate_map(models::identity_map(&sphere)).unwrap();
        assert!(id.degenerate_top().is_empty());

        let constant = SimplicialMap::new(
            sphere.clone(),
            sphere.clone(),
            sphere.vertices().map(|v| (v, 0)).collect(),
        );
        let vc = validate_map(constant).unwrap();
        assert_eq!(vc.degenerate_top().len(), sphere.count(2));
    }

    #[test]
    fn validate_double_cover_edges() {
        let map = models::circle_winding_map(2, 3);
        let vm = validate_map(map).unwrap();
        assert!(vm.degenerate_top().is_empty());
        assert_eq!(vm.map().domain().count(1), 6);
    }

    #[test]
    fn validate_rejects_non_simplicial() {
        // hexagon -> triangle sending adjacent vertices to non-adjacent ones
        let hexagon = models::polygon_circle(6);
        let square = models::polygon_circle(4);
        let vm: BTreeMap<_, _> = (0..6u32).map(|v| (v, v % 4)).collect();
        // edge {5, 0} maps to {1, 0}: fine; edge {3,4} -> {3,0}: an edge of
        // the square; but {2,3} -> {2,3} fine... use a genuinely bad map:
        let bad: BTreeMap<_, _> = [(0, 0), (1, 2), (2, 0), (3, 2), (4, 0), (5, 2)]
            .into_iter()
            .collect();
        let err = validate_map(SimplicialMap::new(hexagon.clone(), square.clone(), bad))
            .unwrap_err();
        assert!(matches!(err, MapError::NonSimplicial(_)));
        // the v % 4 map is also non-simplicial: {4,5} -> {0,1} ok, {5,0} -> {1,0} ok,
        // {3,4} -> {3,0} ok on the square; all edges land on edges, so it validates
        assert!(validate_map(SimplicialMap::new(hexagon, square, vm)).is_ok());
    }

    #[test]
    fn degree_identity_is_one() {
        for k in [
            models::sphere_tetrahedron(),
            models::octahedron(),
            models::triangle_circle(),
        ] {
            assert_eq!(both_degrees(models::identity_map(&k)), (1, 1));
        }
    }

    #[test]
    fn degree_constant_is_zero() {
        let sphere = models::sphere_tetrahedron();
        let constant = SimplicialMap::new(
            sphere.clone(),
            sphere.clone(),
            sphere.vertices().map(|v| (v, 0)).collect(),
        );
        assert_eq!(both_degrees(constant), (0, 0));
    }

    #[test]
    fn degree_double_cover_is_two() {
        let (p, h) = both_degrees(models::circle_winding_map(2, 3));
        assert_eq!((p, h), (2, 2));
    }

    #[test]
    fn degree_octahedron_reflection_is_minus_one() {
        assert_eq!(both_degrees(models::octahedron_reflection()), (-1, -1));
    }

    #[test]
    fn degree_witnesses_match_both_methods() {
        for d in [-1i64, 0, 1, 2, 3, -2] {
            let (p, h) = both_degrees(models::circle_winding_map(d, 3));
            assert_eq!(p, d);
            assert_eq!(h, d);
            // suspended to the 2-sphere the degree is unchanged
            let (p, h) = both_degrees(models::suspend_map(&models::circle_winding_map(d, 3)));
            assert_eq!(p, d);
            assert_eq!(h, d);
        }
    }

    #[test]
    fn degree_of_composition_multiplies() {
        let f = models::circle_winding_map(2, 6); // C12 -> C6
        let g = models::circle_winding_map(2, 3); // C6 -> C3
        assert_eq!(f.codomain(), g.domain());
        let composed = f.compose(&g).unwrap();
        assert_eq!(both_degrees(composed), (4, 4));

        let bad = g.compose(&f).unwrap_err();
        assert!(matches!(bad, MapError::NotComposable));
    }

    #[test]
    fn reversed_orientation_negates_degree() {
        let vm = validate_map(models::circle_winding_map(2, 3)).unwrap();
        let dom = vm.map().domain().fundamental_class().unwrap();
        let cod = vm.map().codomain().fundamental_class().unwrap();
        let d = degree_by_preimage_oriented(&vm, &dom, &cod).unwrap();
        assert_eq!(
            degree_by_preimage_oriented(&vm, &dom.reversed(), &cod).unwrap(),
            -d
        );
        assert_eq!(
            degree_by_homology_oriented(&vm, &dom.reversed(), &cod).unwrap(),
            -d
        );
    }

    #[test]
    fn preimage_count_agrees_on_every_target_simplex() {
        // degree_by_preimage_oriented already asserts all target simplices
        // agree; exercise it on a map with an uneven-looking preimage
        let map = models::suspend_map(&models::circle_winding_map(2, 3));
        let vm = validate_map(map).unwrap();
        assert_eq!(degree_by_preimage(&vm).unwrap(), 2);
    }

    #[test]
    fn non_orientable_domain_is_rejected() {
        let rp2 = models::rp2_6();
        let vm = validate_map(models::identity_map(&rp2)).unwrap();
        assert!(matches!(
            degree_by_preimage(&vm),
            Err(MapError::NotOriented(_))
        ));
    }
}
