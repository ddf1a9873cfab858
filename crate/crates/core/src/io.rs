//! JSON input formats: complexes, surfaces with named cycles, framed links,
//! quadratic forms, and simplicial maps. Each file type deserializes with
//! serde and converts into the validated domain objects.

use std::collections::BTreeMap;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complexes::{ComplexError, SimplicialComplex, Vertex};
use crate::degree::{validate_map, MapError, SimplicialMap, ValidatedMap};
use crate::exact_linear::{Gf2Matrix, Gf2Vec};
use crate::framed_loops::{FramedLink, FramedLoop, LoopError};
use crate::quadratic::{build_refinement, refinement_from_surface, FormError, QuadraticRefinement};
use crate::surfaces::{ClosedSurface, SurfaceError};

#[derive(Debug, Error)]
pub enum FileError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Loop(#[from] LoopError),
    #[error(transparent)]
    Form(#[from] FormError),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error("vertex key {0:?} is not an integer")]
    BadVertexKey(String),
    #[error("cycle {name:?} has no residue entry")]
    MissingResidue { name: String },
    #[error("residue {name:?} has no matching cycle")]
    MissingCycle { name: String },
    #[error("gram row {row} has length {got}, expected {expected}")]
    RaggedGram {
        row: usize,
        expected: usize,
        got: usize,
    },
}

/// {"maximal_simplices": [[0,1,2], ...]}
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexFile {
    pub maximal_simplices: Vec<Vec<Vertex>>,
}

impl ComplexFile {
    pub fn parse(text: &str) -> Result<Self, FileError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn build(&self) -> Result<SimplicialComplex, FileError> {
        Ok(SimplicialComplex::build(&self.maximal_simplices)?)
    }
}

/// Complex plus optional named edge cycles:
/// {"maximal_simplices": ..., "cycles": {"a": [[0,1],[1,3],...], ...}}
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SurfaceFile {
    pub maximal_simplices: Vec<Vec<Vertex>>,
    #[serde(default)]
    pub cycles: BTreeMap<String, Vec<[Vertex; 2]>>,
}

impl SurfaceFile {
    pub fn parse(text: &str) -> Result<Self, FileError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn build(&self) -> Result<ClosedSurface, FileError> {
        let complex = SimplicialComplex::build(&self.maximal_simplices)?;
        Ok(ClosedSurface::validate(complex)?)
    }
}

/// A link component: either explicit points and frames, or a built-in
/// standard circle.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ComponentSpec {
    Standard { standard: StandardCircleSpec },
    Explicit {
        points: Vec<Vec<f64>>,
        frames: Vec<Vec<Vec<f64>>>,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StandardCircleSpec {
    pub twists: i64,
    pub samples: usize,
}

/// {"ambient": 4, "components": [...]}
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LinkFile {
    pub ambient: usize,
    pub components: Vec<ComponentSpec>,
}

impl LinkFile {
    pub fn parse(text: &str) -> Result<Self, FileError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn build(&self) -> Result<FramedLink, FileError> {
        let mut components = Vec::with_capacity(self.components.len());
        for spec in &self.components {
            let component = match spec {
                ComponentSpec::Standard { standard } => {
                    FramedLoop::standard_circle(self.ambient, standard.twists, standard.samples)?
                }
                ComponentSpec::Explicit { points, frames } => {
                    let points = points
                        .iter()
                        .map(|p| DVector::from_vec(p.clone()))
                        .collect();
                    let frames = frames
                        .iter()
                        .map(|f| f.iter().map(|v| DVector::from_vec(v.clone())).collect())
                        .collect();
                    FramedLoop::new(self.ambient, points, frames)?
                }
            };
            components.push(component);
        }
        Ok(FramedLink::new(components)?)
    }
}

/// Quadratic form data: either a Gram matrix with basis values, or a
/// surface with named cycles and residues.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FormFile {
    Direct {
        gram: Vec<Vec<u8>>,
        basis_q: Vec<u8>,
    },
    FromSurface {
        surface: ComplexFile,
        cycles: BTreeMap<String, Vec<[Vertex; 2]>>,
        residues: BTreeMap<String, u8>,
    },
}

impl FormFile {
    pub fn parse(text: &str) -> Result<Self, FileError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn build(&self) -> Result<QuadraticRefinement, FileError> {
        match self {
            FormFile::Direct { gram, basis_q } => {
                let n = gram.len();
                let mut m = Gf2Matrix::zeros(n, n);
                for (i, row) in gram.iter().enumerate() {
                    if row.len() != n {
                        return Err(FileError::RaggedGram {
                            row: i,
                            expected: n,
                            got: row.len(),
                        });
                    }
                    for (j, &bit) in row.iter().enumerate() {
                        m.set(i, j, bit & 1 == 1);
                    }
                }
                Ok(build_refinement(m, Gf2Vec::from_bits(basis_q))?)
            }
            FormFile::FromSurface {
                surface,
                cycles,
                residues,
            } => {
                let complex = surface.build()?;
                let closed = ClosedSurface::validate(complex)?;
                for name in residues.keys() {
                    if !cycles.contains_key(name) {
                        return Err(FileError::MissingCycle { name: name.clone() });
                    }
                }
                let mut named = Vec::with_capacity(cycles.len());
                for (name, edges) in cycles {
                    let residue = residues.get(name).ok_or_else(|| FileError::MissingResidue {
                        name: name.clone(),
                    })?;
                    let pairs: Vec<(Vertex, Vertex)> =
                        edges.iter().map(|[a, b]| (*a, *b)).collect();
                    let cycle = closed.cycle_from_edges(&pairs)?;
                    named.push((cycle, residue & 1 == 1));
                }
                Ok(refinement_from_surface(&closed, &named)?)
            }
        }
    }
}

/// {"domain": <complex>, "codomain": <complex>, "vertex_map": {"0": 1, ...}}
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MapFile {
    pub domain: ComplexFile,
    pub codomain: ComplexFile,
    pub vertex_map: BTreeMap<String, Vertex>,
}

impl MapFile {
    pub fn parse(text: &str) -> Result<Self, FileError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn build(&self) -> Result<ValidatedMap, FileError> {
        let domain = self.domain.build()?;
        let codomain = self.codomain.build()?;
        let mut vm = BTreeMap::new();
        for (key, &image) in &self.vertex_map {
            let v: Vertex = key
                .parse()
                .map_err(|_| FileError::BadVertexKey(key.clone()))?;
            vm.insert(v, image);
        }
        Ok(validate_map(SimplicialMap::new(domain, codomain, vm))?)
    }
}

/// Rotation matrices serialized row-major (used by the report's JSON twin).
pub fn matrix_rows(m: &DMatrix<f64>) -> Vec<Vec<f64>> {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| m[(i, j)]).collect())
        .collect()
}
