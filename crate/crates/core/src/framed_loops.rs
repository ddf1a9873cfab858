//! Framed 1-manifolds in R^N: polygonal circles carrying orthonormal normal
//! frames. The tangent-plus-frame map of each component is a rotation loop
//! whose pi_1 class, summed with the component count mod 2, is the residue
//! invariant.

use nalgebra::{DMatrix, DVector};
use thiserror::Error;

use crate::spin::{pi1_class, Pi1Class, RotationLoop, SpinError};

/// Admission tolerance for frame orthonormality.
pub const FRAME_TOL: f64 = 1e-9;
/// Admission tolerance for frame-tangent orthogonality; Gram-Schmidt then
/// makes the stored frames exact.
pub const TANGENT_TOL: f64 = 1e-6;
/// Components of a link must keep at least this distance apart.
pub const DISJOINTNESS_TOL: f64 = 1e-6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LoopError {
    #[error("ambient dimension {0} out of range (need 3..=8)")]
    AmbientOutOfRange(usize),
    #[error("need at least {need} samples, got {got}")]
    TooFewSamples { need: usize, got: usize },
    #[error("point {0} has the wrong ambient dimension")]
    PointDimension(usize),
    #[error("sample {sample} carries {got} frame vectors, expected {expected}")]
    FrameCount {
        sample: usize,
        expected: usize,
        got: usize,
    },
    #[error("points {0} and {1} coincide")]
    DuplicatePoints(usize, usize),
    #[error("degenerate tangent at sample {0} (consecutive duplicate points)")]
    DegenerateTangent(usize),
    #[error("frame at sample {sample} is not orthonormal (defect {defect:.2e})")]
    FrameNotOrthonormal { sample: usize, defect: f64 },
    #[error("frame at sample {sample} is not orthogonal to the tangent (defect {defect:.2e})")]
    FrameNotNormal { sample: usize, defect: f64 },
    #[error("tangent-plus-frame basis at sample {sample} is not positively oriented")]
    NotPositivelyOriented { sample: usize },
    #[error("twist data: {0}")]
    BadTwist(String),
    #[error("link components are not pairwise disjoint (distance {0:.2e})")]
    NotDisjoint(f64),
    #[error("link has no components")]
    EmptyLink,
    #[error("component {component} has ambient {got}, link has ambient {expected}")]
    AmbientMismatch {
        component: usize,
        expected: usize,
        got: usize,
    },
    #[error(transparent)]
    Spin(#[from] SpinError),
}

/// Closed polyline in R^N with an orthonormal frame of N-1 normal vectors
/// at every sample; (tangent, frame) is positively oriented.
#[derive(Clone, Debug)]
pub struct FramedLoop {
    ambient: usize,
    points: Vec<DVector<f64>>,
    // frames[i][k] is the k-th normal vector at sample i, stored exactly
    // orthonormal and orthogonal to the discrete tangent
    frames: Vec<Vec<DVector<f64>>>,
}

impl FramedLoop {
    /// Validate and admit a framed loop. Frames must be orthonormal within
    /// 1e-9 and orthogonal to the central-difference tangent within 1e-6;
    /// they are re-orthonormalized against the tangent before storage.
    pub fn new(
        ambient: usize,
        points: Vec<DVector<f64>>,
        frames: Vec<Vec<DVector<f64>>>,
    ) -> Result<Self, LoopError> {
        if ambient < 2 {
            return Err(LoopError::AmbientOutOfRange(ambient));
        }
        let m = points.len();
        if m < 3 {
            return Err(LoopError::TooFewSamples { need: 3, got: m });
        }
        if frames.len() != m {
            return Err(LoopError::FrameCount {
                sample: 0,
                expected: m,
                got: frames.len(),
            });
        }
        for (i, p) in points.iter().enumerate() {
            if p.len() != ambient {
                return Err(LoopError::PointDimension(i));
            }
        }
        for i in 0..m {
            for j in i + 1..m {
                if (&points[i] - &points[j]).norm() < 1e-9 {
                    return Err(LoopError::DuplicatePoints(i, j));
                }
            }
        }

        let tangents = discrete_tangents(&points)?;
        let mut stored = Vec::with_capacity(m);
        for (i, frame) in frames.iter().enumerate() {
            if frame.len() != ambient - 1 {
                return Err(LoopError::FrameCount {
                    sample: i,
                    expected: ambient - 1,
                    got: frame.len(),
                });
            }
            for v in frame {
                if v.len() != ambient {
                    return Err(LoopError::PointDimension(i));
                }
            }
            // orthonormality of the raw frame
            let mut defect = 0.0f64;
            for (a, va) in frame.iter().enumerate() {
                defect = defect.max((va.norm() - 1.0).abs());
                for vb in frame.iter().take(a) {
                    defect = defect.max(va.dot(vb).abs());
                }
            }
            if defect > FRAME_TOL {
                return Err(LoopError::FrameNotOrthonormal { sample: i, defect });
            }
            // orthogonality to the tangent
            let tangent_defect = frame
                .iter()
                .map(|v| v.dot(&tangents[i]).abs())
                .fold(0.0f64, f64::max);
            if tangent_defect > TANGENT_TOL {
                return Err(LoopError::FrameNotNormal {
                    sample: i,
                    defect: tangent_defect,
                });
            }
            let exact = gram_schmidt(&tangents[i], frame)
                .ok_or(LoopError::FrameNotOrthonormal { sample: i, defect: 1.0 })?;
            // orientation: det(tangent | frame) = +1
            let mut basis = DMatrix::zeros(ambient, ambient);
            basis.column_mut(0).copy_from(&tangents[i]);
            for (k, v) in exact.iter().enumerate() {
                basis.column_mut(k + 1).copy_from(v);
            }
            if (basis.determinant() - 1.0).abs() > 1e-6 {
                return Err(LoopError::NotPositivelyOriented { sample: i });
            }
            stored.push(exact);
        }

        Ok(FramedLoop {
            ambient,
            points,
            frames: stored,
        })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn samples(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[DVector<f64>] {
        &self.points
    }

    pub fn frames(&self) -> &[Vec<DVector<f64>>] {
        &self.frames
    }

    /// Planar unit circle with the canonical framing, twisted k full turns
    /// about the tangent in the (normal, e_3) plane over one traversal.
    pub fn standard_circle(ambient: usize, twists: i64, samples: usize) -> Result<Self, LoopError> {
        if ambient < 3 {
            return Err(LoopError::AmbientOutOfRange(ambient));
        }
        if samples < 16 {
            return Err(LoopError::TooFewSamples {
                need: 16,
                got: samples,
            });
        }
        let mut points = Vec::with_capacity(samples);
        let mut frames = Vec::with_capacity(samples);
        for i in 0..samples {
            let theta = std::f64::consts::TAU * i as f64 / samples as f64;
            let phi = std::f64::consts::TAU * twists as f64 * i as f64 / samples as f64;
            let mut p = DVector::zeros(ambient);
            p[0] = theta.cos();
            p[1] = theta.sin();
            points.push(p);

            let mut inward = DVector::zeros(ambient);
            inward[0] = -theta.cos();
            inward[1] = -theta.sin();
            let mut e3 = DVector::zeros(ambient);
            e3[2] = 1.0;

            let mut frame = Vec::with_capacity(ambient - 1);
            frame.push(&inward * phi.cos() + &e3 * phi.sin());
            frame.push(&inward * -phi.sin() + &e3 * phi.cos());
            for axis in 3..ambient {
                let mut v = DVector::zeros(ambient);
                v[axis] = 1.0;
                frame.push(v);
            }
            frames.push(frame);
        }
        FramedLoop::new(ambient, points, frames)
    }

    /// Replace the framing by nu'_i = sum_j g_ij nu_j at every sample.
    pub fn twist(&self, g: &[DMatrix<f64>]) -> Result<FramedLoop, LoopError> {
        if g.len() != self.samples() {
            return Err(LoopError::BadTwist(format!(
                "expected {} matrices, got {}",
                self.samples(),
                g.len()
            )));
        }
        let k = self.ambient - 1;
        for (i, gi) in g.iter().enumerate() {
            if gi.nrows() != k || gi.ncols() != k {
                return Err(LoopError::BadTwist(format!(
                    "matrix {i} is {}x{}, expected {k}x{k}",
                    gi.nrows(),
                    gi.ncols()
                )));
            }
            let defect = (gi.transpose() * gi - DMatrix::identity(k, k))
                .iter()
                .fold(0.0f64, |a, x| a.max(x.abs()))
                .max((gi.determinant() - 1.0).abs());
            if defect > FRAME_TOL {
                return Err(LoopError::BadTwist(format!(
                    "matrix {i} is not special orthogonal (defect {defect:.2e})"
                )));
            }
        }
        let frames = self
            .frames
            .iter()
            .zip(g)
            .map(|(frame, gi)| {
                (0..k)
                    .map(|row| {
                        let mut v = DVector::zeros(self.ambient);
                        for (col, nu) in frame.iter().enumerate() {
                            v += nu * gi[(row, col)];
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        FramedLoop::new(self.ambient, self.points.clone(), frames)
    }

    /// Raise the ambient dimension by one: pad with zeros and append the
    /// constant normal vector along the new axis.
    pub fn stabilize(&self) -> FramedLoop {
        let ambient = self.ambient + 1;
        let points = self.points.iter().map(|p| pad(p, ambient)).collect();
        let frames = self
            .frames
            .iter()
            .map(|frame| {
                let mut padded: Vec<DVector<f64>> =
                    frame.iter().map(|v| pad(v, ambient)).collect();
                let mut last = DVector::zeros(ambient);
                last[ambient - 1] = 1.0;
                padded.push(last);
                padded
            })
            .collect();
        FramedLoop::new(ambient, points, frames).expect("stabilization preserves validity")
    }

    /// Double the sampling: chord midpoints with averaged frames,
    /// re-orthonormalized against the refined tangents.
    pub fn refine(&self) -> Result<FramedLoop, LoopError> {
        let m = self.samples();
        let mut points = Vec::with_capacity(2 * m);
        let mut rough_frames = Vec::with_capacity(2 * m);
        for i in 0..m {
            let next = (i + 1) % m;
            points.push(self.points[i].clone());
            rough_frames.push(self.frames[i].clone());
            points.push((&self.points[i] + &self.points[next]) * 0.5);
            rough_frames.push(
                self.frames[i]
                    .iter()
                    .zip(&self.frames[next])
                    .map(|(a, b)| (a + b) * 0.5)
                    .collect(),
            );
        }
        let tangents = discrete_tangents(&points)?;
        let frames: Vec<Vec<DVector<f64>>> = rough_frames
            .iter()
            .zip(&tangents)
            .enumerate()
            .map(|(i, (frame, tangent))| {
                gram_schmidt(tangent, frame).ok_or(LoopError::FrameNotOrthonormal {
                    sample: i,
                    defect: 1.0,
                })
            })
            .collect::<Result<_, _>>()?;
        FramedLoop::new(self.ambient, points, frames)
    }

    /// Apply a global rigid rotation to points and frames.
    pub fn transformed(&self, q: &DMatrix<f64>) -> Result<FramedLoop, LoopError> {
        let n = self.ambient;
        if q.nrows() != n || q.ncols() != n {
            return Err(LoopError::PointDimension(0));
        }
        let defect = (q.transpose() * q - DMatrix::identity(n, n))
            .iter()
            .fold(0.0f64, |a, x| a.max(x.abs()))
            .max((q.determinant() - 1.0).abs());
        if defect > FRAME_TOL {
            return Err(LoopError::BadTwist(format!(
                "transform is not special orthogonal (defect {defect:.2e})"
            )));
        }
        let points = self.points.iter().map(|p| q * p).collect();
        let frames = self
            .frames
            .iter()
            .map(|frame| frame.iter().map(|v| q * v).collect())
            .collect();
        FramedLoop::new(self.ambient, points, frames)
    }

    /// The tangent-plus-frame rotation loop h: per sample, the matrix with
    /// columns (tangent, nu_1, ..., nu_{N-1}).
    pub fn h_loop(&self) -> Result<RotationLoop, LoopError> {
        let tangents = discrete_tangents(&self.points)?;
        let steps = tangents
            .iter()
            .zip(&self.frames)
            .map(|(tangent, frame)| {
                let mut m = DMatrix::zeros(self.ambient, self.ambient);
                m.column_mut(0).copy_from(tangent);
                for (k, v) in frame.iter().enumerate() {
                    m.column_mut(k + 1).copy_from(v);
                }
                m
            })
            .collect();
        Ok(RotationLoop::new(steps)?)
    }
}

fn pad(v: &DVector<f64>, ambient: usize) -> DVector<f64> {
    let mut out = DVector::zeros(ambient);
    out.rows_mut(0, v.len()).copy_from(v);
    out
}

fn discrete_tangents(points: &[DVector<f64>]) -> Result<Vec<DVector<f64>>, LoopError> {
    let m = points.len();
    (0..m)
        .map(|i| {
            let diff = &points[(i + 1) % m] - &points[(i + m - 1) % m];
            let norm = diff.norm();
            if norm < 1e-9 {
                return Err(LoopError::DegenerateTangent(i));
            }
            Ok(diff / norm)
        })
        .collect()
}

/// Orthonormalize (tangent, frame...) starting from the tangent; returns
/// the frame part. None if the vectors become dependent.
fn gram_schmidt(tangent: &DVector<f64>, frame: &[DVector<f64>]) -> Option<Vec<DVector<f64>>> {
    let mut ortho: Vec<DVector<f64>> = vec![tangent.clone()];
    for v in frame {
        let mut w = v.clone();
        for u in &ortho {
            w -= u * u.dot(v);
        }
        let norm = w.norm();
        if norm < 1e-6 {
            return None;
        }
        ortho.push(w / norm);
    }
    Some(ortho.split_off(1))
}

/// Disjoint union of framed loops in a common ambient space.
#[derive(Clone, Debug)]
pub struct FramedLink {
    ambient: usize,
    components: Vec<FramedLoop>,
}

impl FramedLink {
    pub fn new(components: Vec<FramedLoop>) -> Result<Self, LoopError> {
        let first = components.first().ok_or(LoopError::EmptyLink)?;
        let ambient = first.ambient();
        for (i, c) in components.iter().enumerate() {
            if c.ambient() != ambient {
                return Err(LoopError::AmbientMismatch {
                    component: i,
                    expected: ambient,
                    got: c.ambient(),
                });
            }
        }
        for i in 0..components.len() {
            for j in i + 1..components.len() {
                let mut min = f64::INFINITY;
                for p in components[i].points() {
                    for q in components[j].points() {
                        min = min.min((p - q).norm());
                    }
                }
                if min <= DISJOINTNESS_TOL {
                    return Err(LoopError::NotDisjoint(min));
                }
            }
        }
        Ok(FramedLink {
            ambient,
            components,
        })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn components(&self) -> &[FramedLoop] {
        &self.components
    }

    pub fn stabilize(&self) -> FramedLink {
        FramedLink::new(self.components.iter().map(FramedLoop::stabilize).collect())
            .expect("stabilization preserves disjointness")
    }
}

/// Per-component pi_1 classes of the tangent-plus-frame loops.
pub fn component_classes(link: &FramedLink) -> Result<Vec<Pi1Class>, LoopError> {
    if !(3..=8).contains(&link.ambient()) {
        return Err(LoopError::AmbientOutOfRange(link.ambient()));
    }
    link.components()
        .iter()
        .map(|c| Ok(pi1_class(&c.h_loop()?)?))
        .collect()
}

/// Residue of a framed link: the sum of the component h-classes plus the
/// number of components, mod 2.
pub fn residue(link: &FramedLink) -> Result<u8, LoopError> {
    let classes = component_classes(link)?;
    let sum: u8 = classes.iter().map(Pi1Class::parity).sum::<u8>() % 2;
    Ok((sum + link.components().len() as u8 % 2) % 2)
}
