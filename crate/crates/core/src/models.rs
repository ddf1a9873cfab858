//! Built-in witness complexes and maps: minimal triangulations of the
//! standard surfaces, circle models, and degree-d self-maps. These back the
//! stems report and the regression suites, so `report stems` runs with zero
//! setup.

use std::collections::BTreeMap;

use crate::complexes::{SimplicialComplex, Vertex};
use crate::degree::SimplicialMap;

/// Boundary of the 3-simplex: the minimal S^2.
pub fn sphere_tetrahedron() -> SimplicialComplex {
    SimplicialComplex::build(&[vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]])
        .expect("valid complex")
}

/// The 7-vertex torus: faces {i, i+1, i+3} and {i, i+2, i+3} mod 7.
pub fn torus_7() -> SimplicialComplex {
    let mut faces = Vec::new();
    for i in 0..7u32 {
        faces.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
        faces.push(vec![i, (i + 2) % 7, (i + 3) % 7]);
    }
    SimplicialComplex::build(&faces).expect("valid complex")
}

/// The 6-vertex real projective plane (antipodal quotient of the
/// icosahedron).
pub fn rp2_6() -> SimplicialComplex {
    SimplicialComplex::build(&[
        vec![0, 1, 2],
        vec![0, 1, 3],
        vec![0, 2, 4],
        vec![0, 3, 5],
        vec![0, 4, 5],
        vec![1, 2, 5],
        vec![1, 3, 4],
        vec![1, 4, 5],
        vec![2, 3, 4],
        vec![2, 3, 5],
    ])
    .expect("valid complex")
}

/// Torus from an m x n grid with both directions wrapped.
pub fn torus_grid(m: usize, n: usize) -> SimplicialComplex {
    assert!(m >= 3 && n >= 3, "grid too small to stay simplicial");
    let v = |i: usize, j: usize| -> Vertex { ((i % m) * n + (j % n)) as Vertex };
    SimplicialComplex::build(&grid_faces(m, n, v)).expect("valid complex")
}

/// Klein bottle from a 4 x 4 grid: horizontal wrap, vertical wrap with a
/// reflection.
pub fn klein_bottle() -> SimplicialComplex {
    let (m, n) = (4usize, 4usize);
    let v = move |i: usize, j: usize| -> Vertex {
        let (i, j) = (i % (2 * m), j);
        if j >= n {
            // crossing the identified edge reverses the horizontal direction
            ((((2 * m - i) % m) * n) + (j - n)) as Vertex
        } else {
            (((i % m) * n) + j) as Vertex
        }
    };
    SimplicialComplex::build(&grid_faces(m, n, v)).expect("valid complex")
}

fn grid_faces(m: usize, n: usize, v: impl Fn(usize, usize) -> Vertex) -> Vec<Vec<Vertex>> {
    let mut faces = Vec::with_capacity(2 * m * n);
    for i in 0..m {
        for j in 0..n {
            let (a, b, c, d) = (v(i, j), v(i + 1, j), v(i, j + 1), v(i + 1, j + 1));
            faces.push(vec![a, b, d]);
            faces.push(vec![a, d, c]);
        }
    }
    faces
}

/// Connected sum of two closed surfaces: remove the first triangle of
/// each, identify the boundary triangles vertex-wise, keep the other
/// vertices of the second surface on fresh labels.
pub fn connected_sum(a: &SimplicialComplex, b: &SimplicialComplex) -> SimplicialComplex {
    let tri_a = a.simplices(2)[0].clone();
    let tri_b = b.simplices(2)[0].clone();
    let mut faces: Vec<Vec<Vertex>> = a
        .simplices(2)
        .iter()
        .filter(|f| **f != tri_a)
        .cloned()
        .collect();
    let mut relabel: BTreeMap<Vertex, Vertex> =
        tri_b.iter().copied().zip(tri_a.iter().copied()).collect();
    let mut next = a.vertices().max().map_or(0, |v| v + 1);
    for f in b.simplices(2) {
        if *f == tri_b {
            continue;
        }
        let mut g: Vec<Vertex> = f
            .iter()
            .map(|v| {
                *relabel.entry(*v).or_insert_with(|| {
                    let fresh = next;
                    next += 1;
                    fresh
                })
            })
            .collect();
        g.sort_unstable();
        faces.push(g);
    }
    SimplicialComplex::build(&faces).expect("valid complex")
}

/// Orientable surface of any genus: iterated connected sums of the
/// 7-vertex torus.
pub fn genus_g(g: usize) -> SimplicialComplex {
    if g == 0 {
        return sphere_tetrahedron();
    }
    let mut surface = torus_7();
    for _ in 1..g {
        surface = connected_sum(&surface, &torus_7());
    }
    surface
}

/// Genus-2 surface: two 7-vertex tori glued along a removed triangle.
pub fn genus_2() -> SimplicialComplex {
    genus_g(2)
}

/// Mobius band on 7 vertices: triangles {i, i+1, i+2} mod 7.
pub fn mobius_7() -> SimplicialComplex {
    let faces: Vec<Vec<Vertex>> = (0..7u32)
        .map(|i| vec![i, (i + 1) % 7, (i + 2) % 7])
        .collect();
    SimplicialComplex::build(&faces).expect("valid complex")
}

/// Octahedron boundary: vertices 0..6 with antipodal pairs (0,3), (1,4),
/// (2,5).
pub fn octahedron() -> SimplicialComplex {
    let mut faces = Vec::new();
    for x in [0u32, 3] {
        for y in [1u32, 4] {
            for z in [2u32, 5] {
                faces.push(vec![x, y, z]);
            }
        }
    }
    SimplicialComplex::build(&faces).expect("valid complex")
}

/// Polygon circle with k vertices (k >= 3).
pub fn polygon_circle(k: usize) -> SimplicialComplex {
    assert!(k >= 3);
    let edges: Vec<Vec<Vertex>> = (0..k)
        .map(|i| vec![i as Vertex, ((i + 1) % k) as Vertex])
        .collect();
    SimplicialComplex::build(&edges).expect("valid complex")
}

/// Triangle model of the circle.
pub fn triangle_circle() -> SimplicialComplex {
    polygon_circle(3)
}

/// Self-map of circle models with any prescribed degree: winds a subdivided
/// polygon d times around a smaller one (constant map for d = 0).
pub fn circle_winding_map(d: i64, base: usize) -> SimplicialMap {
    assert!(base >= 3);
    let codomain = polygon_circle(base);
    if d == 0 {
        let domain = polygon_circle(base);
        let vm: BTreeMap<Vertex, Vertex> = (0..base as Vertex).map(|v| (v, 0)).collect();
        return SimplicialMap::new(domain, codomain, vm);
    }
    let m = base * d.unsigned_abs() as usize;
    let domain = polygon_circle(m);
    let vm: BTreeMap<Vertex, Vertex> = (0..m as Vertex)
        .map(|v| {
            let image = if d > 0 {
                v as usize % base
            } else {
                (base - (v as usize % base)) % base
            };
            (v, image as Vertex)
        })
        .collect();
    SimplicialMap::new(domain, codomain, vm)
}

/// Identity self-map of any complex.
pub fn identity_map(k: &SimplicialComplex) -> SimplicialMap {
    let vm: BTreeMap<Vertex, Vertex> = k.vertices().map(|v| (v, v)).collect();
    SimplicialMap::new(k.clone(), k.clone(), vm)
}

/// Reflection of the octahedron swapping the antipodal pair (2, 5).
pub fn octahedron_reflection() -> SimplicialMap {
    let oct = octahedron();
    let vm: BTreeMap<Vertex, Vertex> = oct
        .vertices()
        .map(|v| {
            let w = match v {
                2 => 5,
                5 => 2,
                other => other,
            };
            (v, w)
        })
        .collect();
    SimplicialMap::new(oct.clone(), oct, vm)
}

/// Suspension of a complex: two fresh cone points joined to every simplex.
pub fn suspension(k: &SimplicialComplex) -> SimplicialComplex {
    let top = k.vertices().max().map_or(0, |v| v + 1);
    let (north, south) = (top, top + 1);
    let mut faces: Vec<Vec<Vertex>> = Vec::new();
    let d = k.dim();
    for s in k.simplices(d) {
        for pole in [north, south] {
            let mut f = s.clone();
            f.push(pole);
            faces.push(f);
        }
    }
    SimplicialComplex::build(&faces).expect("valid complex")
}

/// Suspend a simplicial map: cone points go to cone points.
pub fn suspend_map(map: &SimplicialMap) -> SimplicialMap {
    let dom = suspension(map.domain());
    let cod = suspension(map.codomain());
    let dom_top = map.domain().vertices().max().map_or(0, |v| v + 1);
    let cod_top = map.codomain().vertices().max().map_or(0, |v| v + 1);
    let mut vm: BTreeMap<Vertex, Vertex> = map.vertex_map().clone();
    vm.insert(dom_top, cod_top);
    vm.insert(dom_top + 1, cod_top + 1);
    SimplicialMap::new(dom, cod, vm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::Coefficients;

    #[test]
    fn grid_torus_matches_seven_vertex_torus() {
        let grid = torus_grid(3, 3);
        assert_eq!(grid.euler_characteristic(), 0);
        for k in 0..=2 {
            assert_eq!(
                grid.homology(k, Coefficients::Z).unwrap(),
                torus_7().homology(k, Coefficients::Z).unwrap()
            );
        }
    }

    #[test]
    fn klein_bottle_is_closed_and_nonorientable() {
        let k = klein_bottle();
        assert_eq!(k.euler_characteristic(), 0);
        assert!(!k.fundamental_class().unwrap().orientable());
    }

    #[test]
    fn genus_two_counts() {
        let k = genus_2();
        assert_eq!((k.count(0), k.count(1), k.count(2)), (11, 39, 26));
        assert!(k.fundamental_class().unwrap().orientable());
        assert_eq!(k.homology(1, Coefficients::Z).unwrap().betti, 4);
    }

    #[test]
    fn genus_g_series() {
        for g in 0..=3 {
            let k = genus_g(g);
            assert_eq!(k.euler_characteristic(), 2 - 2 * g as i64);
            assert!(k.fundamental_class().unwrap().orientable());
            assert_eq!(k.homology(1, Coefficients::Z).unwrap().betti, 2 * g);
        }
    }

    #[test]
    fn suspension_of_circle_is_sphere() {
        let s2 = suspension(&polygon_circle(4));
        assert_eq!(s2.euler_characteristic(), 2);
        assert_eq!(s2.homology(2, Coefficients::Z).unwrap().betti, 1);
        assert_eq!(s2.homology(1, Coefficients::Z).unwrap().betti, 0);
    }
}
