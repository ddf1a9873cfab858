//! The class of a loop of rotations in pi_1(SO(n)): an integer winding
//! number for n = 2 and a Z/2 class for n >= 3, detected by lifting the
//! loop step by step through the double cover Spin(n) realized inside the
//! Clifford algebra Cl(n) with positive-definite signature. The loop is
//! trivial exactly when the ordered product of step lifts lands on +1
//! rather than -1.

use nalgebra::DMatrix;
use thiserror::Error;

pub const MAX_DIM: usize = 8;

/// Input orthogonality tolerance.
pub const ORTHOGONALITY_TOL: f64 = 1e-9;
/// Consecutive steps must stay within this operator-norm distance of the
/// identity so the principal logarithm is unique.
pub const STEP_CLOSENESS: f64 = 0.5;
/// Power series are summed until terms drop below this.
pub const SERIES_TOL: f64 = 1e-12;
/// A step lift must reproduce its rotation through the adjoint action this
/// accurately.
pub const ADJOINT_TOL: f64 = 1e-8;
/// The final lift product must land within this distance of +-1.
pub const ENDPOINT_TOL: f64 = 1e-6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpinError {
    #[error("matrix size {0} outside the supported range 2..=8")]
    UnsupportedDimension(usize),
    #[error("step {index} is not special orthogonal (defect {defect:.2e})")]
    NotSpecialOrthogonal { index: usize, defect: f64 },
    #[error("step {index} too coarse: distance {distance:.3} from identity exceeds 0.5; refine the sampling")]
    StepTooCoarse { index: usize, distance: f64 },
    #[error("loop must have at least one step")]
    EmptyLoop,
    #[error("numerical failure: {0}; refine the sampling")]
    NumericalFailure(String),
}

/// Cyclic sequence of special orthogonal matrices, validated on
/// construction.
#[derive(Clone, Debug)]
pub struct RotationLoop {
    n: usize,
    steps: Vec<DMatrix<f64>>,
}

impl RotationLoop {
    pub fn new(steps: Vec<DMatrix<f64>>) -> Result<Self, SpinError> {
        if steps.is_empty() {
            return Err(SpinError::EmptyLoop);
        }
        let n = steps[0].nrows();
        if !(2..=MAX_DIM).contains(&n) {
            return Err(SpinError::UnsupportedDimension(n));
        }
        for (index, r) in steps.iter().enumerate() {
            if r.nrows() != n || r.ncols() != n {
                return Err(SpinError::UnsupportedDimension(r.nrows()));
            }
            let defect = orthogonality_defect(r);
            if defect > ORTHOGONALITY_TOL {
                return Err(SpinError::NotSpecialOrthogonal { index, defect });
            }
        }
        let m = steps.len();
        for index in 0..m {
            let step = steps[index].transpose() * &steps[(index + 1) % m];
            if let Some(distance) = identity_distance_at_least(&step, STEP_CLOSENESS) {
                return Err(SpinError::StepTooCoarse { index, distance });
            }
        }
        Ok(RotationLoop { n, steps })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[DMatrix<f64>] {
        &self.steps
    }

    /// Relative step i -> i+1 (cyclically).
    pub fn relative_step(&self, i: usize) -> DMatrix<f64> {
        self.steps[i].transpose() * &self.steps[(i + 1) % self.steps.len()]
    }

    /// Insert geodesic midpoints between consecutive samples; the class is
    /// unchanged and every relative step shrinks by half.
    pub fn subdivide(&self) -> Result<RotationLoop, SpinError> {
        let mut refined = Vec::with_capacity(2 * self.steps.len());
        for i in 0..self.steps.len() {
            let log = rotation_log(&self.relative_step(i))?;
            let half = rotation_exp(&(log * 0.5));
            refined.push(self.steps[i].clone());
            refined.push(&self.steps[i] * half);
        }
        RotationLoop::new(refined)
    }
}

fn orthogonality_defect(r: &DMatrix<f64>) -> f64 {
    let n = r.nrows();
    let gram = r.transpose() * r - DMatrix::identity(n, n);
    let gram_defect = gram.iter().fold(0.0f64, |a, x| a.max(x.abs()));
    let det_defect = (r.determinant() - 1.0).abs();
    gram_defect.max(det_defect)
}

/// Largest singular value.
fn operator_norm(m: &DMatrix<f64>) -> f64 {
    m.clone().svd(false, false).singular_values.max()
}

/// Operator-norm distance of r from the identity when it reaches `bound`,
/// None when it stays below. The Frobenius norm dominates the operator
/// norm, so it settles the common case without a singular value
/// decomposition.
fn identity_distance_at_least(r: &DMatrix<f64>, bound: f64) -> Option<f64> {
    let n = r.nrows();
    let x = r - DMatrix::identity(n, n);
    if x.norm() < bound {
        return None;
    }
    let distance = operator_norm(&x);
    (distance >= bound).then_some(distance)
}

/// Principal logarithm of a special orthogonal matrix near the identity:
/// the Mercator series in X = R - I, skew-symmetrized to kill rounding.
pub fn rotation_log(r: &DMatrix<f64>) -> Result<DMatrix<f64>, SpinError> {
    let n = r.nrows();
    if let Some(distance) = identity_distance_at_least(r, STEP_CLOSENESS) {
        return Err(SpinError::StepTooCoarse { index: 0, distance });
    }
    let x = r - DMatrix::identity(n, n);
    let mut log = DMatrix::zeros(n, n);
    let mut power = x.clone();
    for k in 1..200 {
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        let term = &power * (sign / k as f64);
        log += &term;
        if term.norm() < SERIES_TOL * 1e-3 {
            break;
        }
        power = &power * &x;
    }
    // the true log is skew; discard the symmetric rounding residue
    let skew = (&log - log.transpose()) * 0.5;
    Ok(skew)
}

/// Matrix exponential by power series (arguments here are always small).
pub fn rotation_exp(a: &DMatrix<f64>) -> DMatrix<f64> {
    let n = a.nrows();
    let mut sum = DMatrix::identity(n, n);
    let mut term = DMatrix::<f64>::identity(n, n);
    for k in 1..200 {
        term = &term * a / k as f64;
        sum += &term;
        if term.norm() < SERIES_TOL * 1e-3 {
            break;
        }
    }
    sum
}

/// Element of the Clifford algebra Cl(n) with e_i^2 = +1; coefficients are
/// indexed by blade bitmask.
#[derive(Clone, Debug)]
pub struct CliffordElement {
    n: usize,
    coeffs: Vec<f64>,
}

/// Sign of the canonical blade product e_A e_B (positive-definite metric).
fn reorder_sign(a: usize, b: usize) -> f64 {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

impl CliffordElement {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_DIM, "Clifford dimension capped at {MAX_DIM}");
        CliffordElement {
            n,
            coeffs: vec![0.0; 1 << n],
        }
    }

    pub fn one(n: usize) -> Self {
        let mut e = Self::zero(n);
        e.coeffs[0] = 1.0;
        e
    }

    /// The generator e_i (zero-based).
    pub fn basis_vector(n: usize, i: usize) -> Self {
        assert!(i < n);
        let mut e = Self::zero(n);
        e.coeffs[1 << i] = 1.0;
        e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, blade: usize) -> f64 {
        self.coeffs[blade]
    }

    pub fn scale(&self, s: f64) -> Self {
        CliffordElement {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        CliffordElement {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        let mut out = Self::zero(self.n);
        for (a, &ca) in self.coeffs.iter().enumerate() {
            if ca == 0.0 {
                continue;
            }
            for (b, &cb) in rhs.coeffs.iter().enumerate() {
                if cb == 0.0 {
                    continue;
                }
                out.coeffs[a ^ b] += ca * cb * reorder_sign(a, b);
            }
        }
        out
    }

    /// Reversion: blades of grade k pick up (-1)^(k(k-1)/2). For products
    /// of bivector exponentials this is the group inverse.
    pub fn reverse(&self) -> Self {
        let mut out = self.clone();
        for (blade, c) in out.coeffs.iter_mut().enumerate() {
            let k = blade.count_ones() as usize;
            if (k * (k.wrapping_sub(1)) / 2) % 2 == 1 {
                *c = -*c;
            }
        }
        out
    }

    /// Euclidean coefficient norm; 1 for spin group members.
    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    /// Distance to the scalar s.
    pub fn distance_to_scalar(&self, s: f64) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(blade, &c)| {
                let target = if blade == 0 { s } else { 0.0 };
                (c - target) * (c - target)
            })
            .sum::<f64>()
            .sqrt()
    }

    /// Exponential by power series.
    pub fn exp(&self) -> Self {
        let mut sum = Self::one(self.n);
        let mut term = Self::one(self.n);
        for k in 1..200 {
            term = term.mul(self).scale(1.0 / k as f64);
            sum = sum.add(&term);
            if term.norm() < SERIES_TOL * 1e-3 {
                break;
            }
        }
        sum
    }
}

/// Lift of a Lie algebra element: exp(1/2 sum_{j<k} A_jk e_j e_k), the
/// spin(n) image of the skew matrix A. Unit norm by construction.
pub fn clifford_lift_step(a: &DMatrix<f64>) -> CliffordElement {
    let n = a.nrows();
    debug_assert!(a.ncols() == n);
    debug_assert!(
        (a + a.transpose()).iter().all(|x| x.abs() < 1e-9),
        "lift input must be skew-symmetric"
    );
    let mut bivector = CliffordElement::zero(n);
    for j in 0..n {
        for k in j + 1..n {
            bivector.coeffs[(1 << j) | (1 << k)] = 0.5 * a[(j, k)];
        }
    }
    bivector.exp()
}

/// Largest deviation of s e_j s^-1 from the rotated basis vector
/// sum_i R_ij e_i, over all j.
pub fn adjoint_residual(s: &CliffordElement, r: &DMatrix<f64>) -> f64 {
    let n = s.n();
    let s_rev = s.reverse();
    let mut worst = 0.0f64;
    for j in 0..n {
        let conjugated = s.mul(&CliffordElement::basis_vector(n, j)).mul(&s_rev);
        let mut expected = CliffordElement::zero(n);
        for i in 0..n {
            expected.coeffs[1 << i] = r[(i, j)];
        }
        let diff = conjugated.add(&expected.scale(-1.0));
        worst = worst.max(diff.norm());
    }
    worst
}

/// Homotopy class of a rotation loop: winding number in SO(2), Z/2 parity
/// of the Spin lift endpoint for n >= 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pi1Class {
    Winding(i64),
    Parity(u8),
}

impl Pi1Class {
    /// Mod-2 value: winding parity for n = 2, the bit itself for n >= 3.
    pub fn parity(&self) -> u8 {
        match *self {
            Pi1Class::Winding(w) => (w.rem_euclid(2)) as u8,
            Pi1Class::Parity(p) => p,
        }
    }
}

pub fn pi1_class(rotation_loop: &RotationLoop) -> Result<Pi1Class, SpinError> {
    let n = rotation_loop.n();
    if n == 2 {
        let mut total = 0.0f64;
        for i in 0..rotation_loop.len() {
            let step = rotation_loop.relative_step(i);
            total += step[(1, 0)].atan2(step[(0, 0)]);
        }
        let winding = total / std::f64::consts::TAU;
        let rounded = winding.round();
        if (winding - rounded).abs() > 1e-6 {
            return Err(SpinError::NumericalFailure(format!(
                "winding {winding} is not close to an integer"
            )));
        }
        return Ok(Pi1Class::Winding(rounded as i64));
    }

    let mut product = CliffordElement::one(n);
    for i in 0..rotation_loop.len() {
        let step = rotation_loop.relative_step(i);
        let log = rotation_log(&step)?;
        let lift = clifford_lift_step(&log);
        let residual = adjoint_residual(&lift, &step);
        if residual > ADJOINT_TOL {
            return Err(SpinError::NumericalFailure(format!(
                "step {i} lift fails the adjoint check by {residual:.2e}"
            )));
        }
        product = product.mul(&lift);
    }
    if product.distance_to_scalar(1.0) <= ENDPOINT_TOL {
        Ok(Pi1Class::Parity(0))
    } else if product.distance_to_scalar(-1.0) <= ENDPOINT_TOL {
        Ok(Pi1Class::Parity(1))
    } else {
        Err(SpinError::NumericalFailure(format!(
            "lift product is {:.3e} away from +1 and {:.3e} from -1",
            product.distance_to_scalar(1.0),
            product.distance_to_scalar(-1.0),
        )))
    }
}

/// The loop t -> rotation by (2 pi t k) in the (axis0, axis1) coordinate
/// plane of R^n, sampled in m steps.
pub fn planar_rotation_loop(
    n: usize,
    axis0: usize,
    axis1: usize,
    turns: i64,
    samples: usize,
) -> Result<RotationLoop, SpinError> {
    let steps = (0..samples)
        .map(|i| {
            let theta = std::f64::consts::TAU * turns as f64 * i as f64 / samples as f64;
            planar_rotation(n, axis0, axis1, theta)
        })
        .collect();
    RotationLoop::new(steps)
}

/// Rotation by theta in the (axis0, axis1) plane.
pub fn planar_rotation(n: usize, axis0: usize, axis1: usize, theta: f64) -> DMatrix<f64> {
    let mut r = DMatrix::identity(n, n);
    r[(axis0, axis0)] = theta.cos();
    r[(axis1, axis1)] = theta.cos();
    r[(axis0, axis1)] = -theta.sin();
    r[(axis1, axis0)] = theta.sin();
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn random_skew(n: usize, scale: f64, rng: &mut impl Rng) -> DMatrix<f64> {
        let mut a = DMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..i {
                let v = rng.gen_range(-scale..scale);
                a[(i, j)] = v;
                a[(j, i)] = -v;
            }
        }
        a
    }

    fn random_rotation(n: usize, rng: &mut impl Rng) -> DMatrix<f64> {
        rotation_exp(&random_skew(n, 1.0, rng))
    }

    /// Loop closing at the identity: a trig-polynomial path times `turns`
    /// full rotations in the (0,1) plane.
    fn random_loop(n: usize, turns: i64, samples: usize, rng: &mut impl Rng) -> RotationLoop {
        let s1 = random_skew(n, 0.4, rng);
        let s2 = random_skew(n, 0.4, rng);
        let steps = (0..samples)
            .map(|i| {
                let t = i as f64 / samples as f64;
                let wobble = rotation_exp(
                    &(&s1 * (std::f64::consts::PI * t).sin()
                        + &s2 * (std::f64::consts::TAU * t).sin()),
                );
                wobble * planar_rotation(n, 0, 1, std::f64::consts::TAU * turns as f64 * t)
            })
            .collect();
        RotationLoop::new(steps).unwrap()
    }

    #[test]
    fn log_of_identity_is_zero() {
        let id = DMatrix::<f64>::identity(4, 4);
        let log = rotation_log(&id).unwrap();
        assert!(log.iter().all(|x| x.abs() < 1e-14));
    }

    #[test]
    fn log_of_planar_rotation() {
        let r = planar_rotation(3, 0, 1, 0.1);
        let a = rotation_log(&r).unwrap();
        assert!((a[(0, 1)] - (-0.1)).abs() < 1e-12);
        assert!((a[(1, 0)] - 0.1).abs() < 1e-12);
        assert!(a[(2, 2)].abs() < 1e-14);
    }

    #[test]
    fn log_exp_round_trip() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for n in 2..=6 {
            for _ in 0..10 {
                let a = random_skew(n, 0.2, &mut rng);
                let r = rotation_exp(&a);
                let back = rotation_exp(&rotation_log(&r).unwrap());
                assert!(operator_norm(&(back - r)) < 1e-8);
            }
        }
    }

    #[test]
    fn log_rejects_coarse_steps() {
        let r = planar_rotation(3, 0, 1, 2.0);
        assert!(matches!(
            rotation_log(&r),
            Err(SpinError::StepTooCoarse { .. })
        ));
    }

    #[test]
    fn lift_of_zero_is_one() {
        let lift = clifford_lift_step(&DMatrix::zeros(3, 3));
        assert!(lift.distance_to_scalar(1.0) < 1e-14);
    }

    #[test]
    fn lift_of_planar_rotation_closed_form() {
        // A with A_01 = theta lifts to cos(theta/2) + sin(theta/2) e0 e1
        let theta = 0.3f64;
        let mut a = DMatrix::zeros(4, 4);
        a[(0, 1)] = theta;
        a[(1, 0)] = -theta;
        let lift = clifford_lift_step(&a);
        assert!((lift.coeff(0) - (theta / 2.0).cos()).abs() < 1e-12);
        assert!((lift.coeff(0b11) - (theta / 2.0).sin()).abs() < 1e-12);
        let others: f64 = (0..16)
            .filter(|&b| b != 0 && b != 3)
            .map(|b| lift.coeff(b).abs())
            .sum();
        assert!(others < 1e-12);
    }

    #[test]
    fn lift_satisfies_adjoint_check() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for n in 2..=6 {
            for _ in 0..10 {
                let a = random_skew(n, 0.2, &mut rng);
                let r = rotation_exp(&a);
                let lift = clifford_lift_step(&a);
                assert!(adjoint_residual(&lift, &r) < 1e-10);
                assert!((lift.norm() - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn constant_loop_is_trivial() {
        let steps = vec![DMatrix::<f64>::identity(3, 3); 8];
        let class = pi1_class(&RotationLoop::new(steps).unwrap()).unwrap();
        assert_eq!(class, Pi1Class::Parity(0));
    }

    #[test]
    fn full_turn_in_so3_is_nontrivial() {
        let l = planar_rotation_loop(3, 0, 1, 1, 64).unwrap();
        assert_eq!(pi1_class(&l).unwrap(), Pi1Class::Parity(1));
    }

    #[test]
    fn double_turn_in_so3_is_trivial() {
        let l = planar_rotation_loop(3, 0, 1, 2, 128).unwrap();
        assert_eq!(pi1_class(&l).unwrap(), Pi1Class::Parity(0));
    }

    #[test]
    fn winding_in_so2() {
        for turns in [-2i64, -1, 0, 1, 3] {
            let l = planar_rotation_loop(2, 0, 1, turns, 64.max(32 * turns.unsigned_abs() as usize))
                .unwrap();
            assert_eq!(pi1_class(&l).unwrap(), Pi1Class::Winding(turns));
        }
    }

    #[test]
    fn class_invariant_under_subdivision_rotation_conjugation() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        for n in 3..=5 {
            for turns in [0i64, 1] {
                let l = random_loop(n, turns, 48, &mut rng);
                let class = pi1_class(&l).unwrap();
                assert_eq!(class, Pi1Class::Parity((turns % 2) as u8));

                let subdivided = l.subdivide().unwrap();
                assert_eq!(pi1_class(&subdivided).unwrap(), class);

                let mut rotated = l.steps().to_vec();
                rotated.rotate_left(5);
                assert_eq!(
                    pi1_class(&RotationLoop::new(rotated).unwrap()).unwrap(),
                    class
                );

                let q = random_rotation(n, &mut rng);
                let conjugated: Vec<_> =
                    l.steps().iter().map(|r| &q * r * q.transpose()).collect();
                assert_eq!(
                    pi1_class(&RotationLoop::new(conjugated).unwrap()).unwrap(),
                    class
                );
            }
        }
    }

    #[test]
    fn concatenation_adds_classes() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        // n >= 3: parity adds mod 2
        for (t1, t2) in [(0i64, 1i64), (1, 1), (1, 2)] {
            let l1 = random_loop(4, t1, 48, &mut rng);
            let l2 = random_loop(4, t2, 48, &mut rng);
            let mut steps = l1.steps().to_vec();
            steps.extend_from_slice(l2.steps());
            let both = RotationLoop::new(steps).unwrap();
            assert_eq!(
                pi1_class(&both).unwrap().parity(),
                (pi1_class(&l1).unwrap().parity() + pi1_class(&l2).unwrap().parity()) % 2
            );
        }
        // n = 2: integer windings add
        let l1 = planar_rotation_loop(2, 0, 1, 1, 64).unwrap();
        let l2 = planar_rotation_loop(2, 0, 1, 2, 128).unwrap();
        let mut steps = l1.steps().to_vec();
        steps.extend_from_slice(l2.steps());
        let both = RotationLoop::new(steps).unwrap();
        assert_eq!(pi1_class(&both).unwrap(), Pi1Class::Winding(3));
    }

    #[test]
    fn block_diagonal_stabilization_preserves_class() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(37);
        for turns in [0i64, 1] {
            let l = random_loop(3, turns, 48, &mut rng);
            let class = pi1_class(&l).unwrap();
            let embedded: Vec<DMatrix<f64>> = l
                .steps()
                .iter()
                .map(|r| {
                    let mut big = DMatrix::identity(4, 4);
                    big.view_mut((0, 0), (3, 3)).copy_from(r);
                    big
                })
                .collect();
            let stabilized = RotationLoop::new(embedded).unwrap();
            assert_eq!(pi1_class(&stabilized).unwrap(), class);
        }
        // SO(2) into SO(3): winding collapses to its parity
        for turns in [1i64, 2] {
            let l = planar_rotation_loop(2, 0, 1, turns, 64 * turns.unsigned_abs() as usize)
                .unwrap();
            let embedded: Vec<DMatrix<f64>> = l
                .steps()
                .iter()
                .map(|r| {
                    let mut big = DMatrix::identity(3, 3);
                    big.view_mut((0, 0), (2, 2)).copy_from(r);
                    big
                })
                .collect();
            let stabilized = RotationLoop::new(embedded).unwrap();
            assert_eq!(
                pi1_class(&stabilized).unwrap().parity(),
                pi1_class(&l).unwrap().parity()
            );
        }
    }

    #[test]
    fn loop_validation_errors() {
        assert!(matches!(
            RotationLoop::new(vec![]),
            Err(SpinError::EmptyLoop)
        ));
        let not_orthogonal = DMatrix::from_diagonal_element(3, 3, 1.5);
        assert!(matches!(
            RotationLoop::new(vec![not_orthogonal]),
            Err(SpinError::NotSpecialOrthogonal { .. })
        ));
        // a 4-sample full turn jumps 90 degrees per step: too coarse
        assert!(matches!(
            planar_rotation_loop(3, 0, 1, 1, 4),
            Err(SpinError::StepTooCoarse { .. })
        ));
        let reflection = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![-1.0, 1.0, 1.0]));
        assert!(matches!(
            RotationLoop::new(vec![reflection]),
            Err(SpinError::NotSpecialOrthogonal { .. })
        ));
    }

    #[test]
    fn dimension_cap() {
        let steps = vec![DMatrix::<f64>::identity(9, 9)];
        assert!(matches!(
            RotationLoop::new(steps),
            Err(SpinError::UnsupportedDimension(9))
        ));
    }
}
