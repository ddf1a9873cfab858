//! Abstract simplicial complexes: boundary operators, homology over Z and
//! Z/2, orientability and fundamental classes of closed pseudomanifolds.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::exact_linear::{smith_normal_form, Gf2Matrix, IntMatrix};

pub type Vertex = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("simplex {0:?} repeats a vertex")]
    DuplicateVertex(Vec<Vertex>),
    #[error("dimension {dim} out of range for a complex of dimension {max}")]
    DimensionOutOfRange { dim: usize, max: usize },
    #[error("face {face:?} lies in {count} top simplices, expected exactly 2")]
    NotClosed { face: Vec<Vertex>, count: usize },
    #[error("complex is not strongly connected through codimension-1 faces")]
    NotStronglyConnected,
    #[error("complex has no top-dimensional simplices")]
    Empty,
}

/// Finite abstract simplicial complex, closed under faces.
///
/// Simplices are stored per dimension in lexicographic order of their
/// ascending vertex tuples, which fixes all matrix layouts downstream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    // by_dim[k] lists the k-simplices as ascending vertex tuples
    by_dim: Vec<Vec<Vec<Vertex>>>,
    index: Vec<HashMap<Vec<Vertex>, usize>>,
}

impl SimplicialComplex {
    /// Close the given maximal simplices under faces and index everything.
    pub fn build(maximal_simplices: &[Vec<Vertex>]) -> Result<Self, ComplexError> {
        let mut faces: Vec<BTreeSet<Vec<Vertex>>> = Vec::new();
        for simplex in maximal_simplices {
            let mut sorted = simplex.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(ComplexError::DuplicateVertex(simplex.clone()));
            }
            insert_with_faces(&mut faces, sorted);
        }
        let by_dim: Vec<Vec<Vec<Vertex>>> = faces
            .into_iter()
            .map(|set| set.into_iter().collect())
            .collect();
        let index = by_dim
            .iter()
            .map(|list| {
                list.iter()
                    .enumerate()
                    .map(|(i, s)| (s.clone(), i))
                    .collect()
            })
            .collect();
        Ok(SimplicialComplex { by_dim, index })
    }

    /// Dimension of the complex; 0 for the empty complex.
    pub fn dim(&self) -> usize {
        self.by_dim.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.by_dim.is_empty()
    }

    /// Number of k-simplices.
    pub fn count(&self, k: usize) -> usize {
        self.by_dim.get(k).map_or(0, Vec::len)
    }

    pub fn simplices(&self, k: usize) -> &[Vec<Vertex>] {
        self.by_dim.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn simplex(&self, k: usize, i: usize) -> &[Vertex] {
        &self.by_dim[k][i]
    }

    pub fn index_of(&self, k: usize, simplex: &[Vertex]) -> Option<usize> {
        self.index.get(k)?.get(simplex).copied()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.simplices(0).iter().map(|s| s[0])
    }

    /// Alternating sum of face counts.
    pub fn euler_characteristic(&self) -> i64 {
        self.by_dim
            .iter()
            .enumerate()
            .map(|(k, list)| {
                let n = list.len() as i64;
                if k % 2 == 0 {
                    n
                } else {
                    -n
                }
            })
            .sum()
    }

    /// Boundary operator from k-chains to (k-1)-chains over Z.
    ///
    /// Entry (i, j) is the incidence sign of face i in simplex j: simplices
    /// are oriented by ascending vertex labels and omitting the r-th vertex
    /// contributes (-1)^r.
    pub fn boundary_matrix(&self, k: usize) -> Result<IntMatrix, ComplexError> {
        if k == 0 || k > self.dim() || self.is_empty() {
            return Err(ComplexError::DimensionOutOfRange {
                dim: k,
                max: self.dim(),
            });
        }
        let mut m = IntMatrix::zeros(self.count(k - 1), self.count(k));
        for (j, simplex) in self.simplices(k).iter().enumerate() {
            for (r, face) in omitted_faces(simplex) {
                let i = self.index_of(k - 1, &face).expect("complex closed under faces");
                let sign = if r % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                m.set(i, j, sign);
            }
        }
        Ok(m)
    }

    /// Boundary operator with coefficients reduced mod 2.
    pub fn boundary_matrix_gf2(&self, k: usize) -> Result<Gf2Matrix, ComplexError> {
        if k == 0 || k > self.dim() || self.is_empty() {
            return Err(ComplexError::DimensionOutOfRange {
                dim: k,
                max: self.dim(),
            });
        }
        let mut m = Gf2Matrix::zeros(self.count(k - 1), self.count(k));
        for (j, simplex) in self.simplices(k).iter().enumerate() {
            for (_, face) in omitted_faces(simplex) {
                let i = self.index_of(k - 1, &face).expect("complex closed under faces");
                m.set(i, j, true);
            }
        }
        Ok(m)
    }

    /// Unreduced homology in dimension k. Over Z this yields betti number
    /// and torsion coefficients from Smith normal form; over Z/2 only the
    /// dimension of the homology vector space.
    pub fn homology(&self, k: usize, coefficients: Coefficients) -> Result<HomologyGroup, ComplexError> {
        if k > self.dim() {
            return Err(ComplexError::DimensionOutOfRange {
                dim: k,
                max: self.dim(),
            });
        }
        let chains = self.count(k);
        match coefficients {
            Coefficients::Z => {
                let rank_down = if k == 0 {
                    0
                } else {
                    smith_normal_form(&self.boundary_matrix(k)?).rank()
                };
                let (rank_up, torsion) = if k < self.dim() {
                    let snf = smith_normal_form(&self.boundary_matrix(k + 1)?);
                    let torsion = snf
                        .divisors()
                        .into_iter()
                        .filter(|d| *d > BigInt::one())
                        .collect();
                    (snf.rank(), torsion)
                } else {
                    (0, Vec::new())
                };
                Ok(HomologyGroup {
                    betti: chains - rank_down - rank_up,
                    torsion,
                })
            }
            Coefficients::Z2 => {
                let rank_down = if k == 0 {
                    0
                } else {
                    self.boundary_matrix_gf2(k)?.rank()
                };
                let rank_up = if k < self.dim() {
                    self.boundary_matrix_gf2(k + 1)?.rank()
                } else {
                    0
                };
                Ok(HomologyGroup {
                    betti: chains - rank_down - rank_up,
                    torsion: Vec::new(),
                })
            }
        }
    }

    /// Checks the closed-pseudomanifold conditions and propagates an
    /// orientation across the dual graph. A consistent assignment gives the
    /// integral fundamental class; a contradiction flags the complex as
    /// non-orientable, where only the mod-2 class survives.
    pub fn fundamental_class(&self) -> Result<FundamentalClass, ComplexError> {
        let n = self.dim();
        if self.is_empty() || self.count(n) == 0 {
            return Err(ComplexError::Empty);
        }
        let tops = self.simplices(n);

        // each ridge in exactly two top simplices
        let mut coface: HashMap<&[Vertex], Vec<(usize, usize)>> = HashMap::new();
        if n > 0 {
            for (j, simplex) in tops.iter().enumerate() {
                for (r, face) in omitted_faces(simplex) {
                    let i = self.index_of(n - 1, &face).expect("closed under faces");
                    coface
                        .entry(self.simplex(n - 1, i))
                        .or_default()
                        .push((j, r));
                }
            }
            for (face, cofs) in &coface {
                if cofs.len() != 2 {
                    return Err(ComplexError::NotClosed {
                        face: face.to_vec(),
                        count: cofs.len(),
                    });
                }
            }
        }

        // propagate signs across shared ridges; incidence signs on the two
        // sides must cancel in the signed boundary
        let mut signs: Vec<i8> = vec![0; tops.len()];
        signs[0] = 1;
        let mut orientable = true;
        if n > 0 {
            let mut queue = VecDeque::from([0usize]);
            let mut visited = 1usize;
            while let Some(j) = queue.pop_front() {
                let simplex = &tops[j];
                for (r, face) in omitted_faces(simplex) {
                    let pair = &coface[face.as_slice()];
                    let &(other, r_other) =
                        if pair[0] == (j, r) { &pair[1] } else { &pair[0] };
                    let eps_here = if r % 2 == 0 { 1 } else { -1 };
                    let eps_other = if r_other % 2 == 0 { 1 } else { -1 };
                    let wanted = -signs[j] * eps_here * eps_other;
                    if signs[other] == 0 {
                        signs[other] = wanted;
                        visited += 1;
                        queue.push_back(other);
                    } else if signs[other] != wanted {
                        orientable = false;
                    }
                }
            }
            if visited != tops.len() {
                return Err(ComplexError::NotStronglyConnected);
            }
        } else if tops.len() > 1 {
            return Err(ComplexError::NotStronglyConnected);
        }
        Ok(if orientable {
            FundamentalClass {
                orientable: true,
                signs: Some(signs),
                top_count: tops.len(),
            }
        } else {
            FundamentalClass {
                orientable: false,
                signs: None,
                top_count: tops.len(),
            }
        })
    }
}

fn insert_with_faces(faces: &mut Vec<BTreeSet<Vec<Vertex>>>, simplex: Vec<Vertex>) {
    let k = simplex.len() - 1;
    while faces.len() <= k {
        faces.push(BTreeSet::new());
    }
    if !faces[k].insert(simplex.clone()) {
        return;
    }
    if k > 0 {
        for (_, face) in omitted_faces(&simplex) {
            insert_with_faces(faces, face);
        }
    }
}

/// All faces of an ascending simplex obtained by omitting one vertex,
/// together with the omitted position.
fn omitted_faces(simplex: &[Vertex]) -> impl Iterator<Item = (usize, Vec<Vertex>)> + '_ {
    (0..simplex.len()).map(move |r| {
        let face: Vec<Vertex> = simplex
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != r)
            .map(|(_, &v)| v)
            .collect();
        (r, face)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coefficients {
    Z,
    Z2,
}

/// Finitely generated abelian group presented as Z^betti plus cyclic torsion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup {
    pub betti: usize,
    /// Torsion coefficients, sorted and each dividing the next.
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn trivial() -> Self {
        HomologyGroup {
            betti: 0,
            torsion: Vec::new(),
        }
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.betti == 0 && self.torsion.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Orientation data of a closed pseudomanifold: a coherent sign for every
/// top simplex when orientable, otherwise only the mod-2 class (which is
/// the full top chain and is always a cycle).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalClass {
    orientable: bool,
    signs: Option<Vec<i8>>,
    top_count: usize,
}

impl FundamentalClass {
    pub fn orientable(&self) -> bool {
        self.orientable
    }

    /// Per-top-simplex signs of the integral fundamental cycle.
    pub fn signs(&self) -> Option<&[i8]> {
        self.signs.as_deref()
    }

    /// Number of top simplices (the support of the mod-2 class).
    pub fn top_count(&self) -> usize {
        self.top_count
    }

    pub fn reversed(&self) -> FundamentalClass {
        FundamentalClass {
            orientable: self.orientable,
            signs: self
                .signs
                .as_ref()
                .map(|s| s.iter().map(|&x| -x).collect()),
            top_count: self.top_count,
        }
    }
}
