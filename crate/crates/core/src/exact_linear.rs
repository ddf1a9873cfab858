//! Exact linear algebra over the integers and over GF(2).
//!
//! Everything downstream (homology, intersection forms, Arf invariants)
//! reduces to two primitives: Smith normal form of an integer matrix and
//! Gaussian elimination over GF(2). Both are implemented exactly — integer
//! entries are arbitrary precision, GF(2) rows are bit-packed words.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("dimension mismatch: expected length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// Dense matrix of arbitrary-precision integers, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let data = rows
            .iter()
            .flat_map(|row| row.iter().map(|&x| BigInt::from(x)))
            .collect();
        IntMatrix { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must agree");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a * rhs.at(k, j);
                    let cur = out.at(i, j) + prod;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    /// Matrix-vector product with i64 coefficients, exact.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j) * &v[j]).sum())
            .collect()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant needs a square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.data.clone();
        let mut denom = BigInt::one();
        let mut sign = BigInt::one();
        for k in 0..n - 1 {
            if m[k * n + k].is_zero() {
                match (k + 1..n).find(|&i| !m[i * n + k].is_zero()) {
                    Some(i) => {
                        for j in 0..n {
                            m.swap(k * n + j, i * n + j);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j];
                    m[i * n + j] = num / &denom;
                }
                m[i * n + k] = BigInt::zero();
            }
            denom = m[k * n + k].clone();
        }
        sign * m[(n - 1) * n + (n - 1)].clone()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[i] -= q * row[j]
    fn row_sub_mul(&mut self, i: usize, j: usize, q: &BigInt) {
        for c in 0..self.cols {
            let delta = q * self.at(j, c);
            let v = self.at(i, c) - delta;
            self.set(i, c, v);
        }
    }

    /// col[i] -= q * col[j]
    fn col_sub_mul(&mut self, i: usize, j: usize, q: &BigInt) {
        for r in 0..self.rows {
            let delta = q * self.at(r, j);
            let v = self.at(r, i) - delta;
            self.set(r, i, v);
        }
    }

    /// row[i] += row[j]
    fn row_add(&mut self, i: usize, j: usize) {
        for c in 0..self.cols {
            let v = self.at(i, c) + self.at(j, c);
            self.set(i, c, v);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let v = -self.at(i, c);
            self.set(i, c, v);
        }
    }
}

/// Result of Smith normal form: `d = u * a * v` with `u`, `v` unimodular,
/// `d` diagonal with nonnegative entries and d1 | d2 | ...
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// Nonzero diagonal entries (the elementary divisors).
    pub fn divisors(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.at(i, i).clone())
            .take_while(|d| !d.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.divisors().len()
    }
}

fn smallest_pivot(m: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..m.rows() {
        for j in t..m.cols() {
            let v = m.at(i, j);
            if v.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if m.at(bi, bj).abs() <= v.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Smith normal form by elementary row/column operations.
///
/// Pivot selection takes the entry of smallest nonzero absolute value in the
/// remaining submatrix, which bounds entry growth and makes the output
/// deterministic. Total on every rectangular integer matrix, including 0x0.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    let mut t = 0;
    while t < m.min(n) {
        let Some((pi, pj)) = smallest_pivot(&d, t) else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            // Clear column t and row t by division with remainder. Any
            // nonzero remainder is strictly smaller than the pivot, so
            // re-picking the pivot makes progress.
            let mut dirty = false;
            for i in t + 1..m {
                if !d.at(i, t).is_zero() {
                    let q = d.at(i, t) / d.at(t, t);
                    if !q.is_zero() {
                        d.row_sub_mul(i, t, &q);
                        u.row_sub_mul(i, t, &q);
                    }
                    if !d.at(i, t).is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..n {
                if !d.at(t, j).is_zero() {
                    let q = d.at(t, j) / d.at(t, t);
                    if !q.is_zero() {
                        d.col_sub_mul(j, t, &q);
                        v.col_sub_mul(j, t, &q);
                    }
                    if !d.at(t, j).is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                let (pi, pj) = smallest_pivot(&d, t).expect("dirty submatrix has a pivot");
                d.swap_rows(t, pi);
                u.swap_rows(t, pi);
                d.swap_cols(t, pj);
                v.swap_cols(t, pj);
                continue;
            }
            // Row and column are clear. The divisibility chain needs the
            // pivot to divide the whole remaining submatrix; if it does not,
            // pull the offending row up and keep reducing.
            let offender = (t + 1..m)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !(d.at(i, j) % d.at(t, t)).is_zero());
            match offender {
                Some((i, _)) => {
                    d.row_add(t, i);
                    u.row_add(t, i);
                }
                None => break,
            }
        }
        t += 1;
    }

    for k in 0..m.min(n) {
        if d.at(k, k).is_negative() {
            d.negate_row(k);
            u.negate_row(k);
        }
    }

    SmithDecomposition { d, u, v }
}

const WORD_BITS: usize = 64;

/// Bit vector over GF(2).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gf2Vec {
    len: usize,
    words: Vec<u64>,
}

impl Gf2Vec {
    pub fn zeros(len: usize) -> Self {
        Gf2Vec {
            len,
            words: vec![0; len.div_ceil(WORD_BITS)],
        }
    }

    pub fn basis(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b & 1 == 1);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, b: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if b {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn xor_assign(&mut self, other: &Gf2Vec) {
        assert_eq!(self.len, other.len);
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w ^= o;
        }
    }

    /// Parity of the AND of two vectors: the GF(2) inner product.
    pub fn dot(&self, other: &Gf2Vec) -> bool {
        assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }
}

/// Rectangular matrix over GF(2) with bit-packed rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Gf2Vec>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Gf2Matrix {
            rows,
            cols,
            data: vec![Gf2Vec::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u8>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Gf2Matrix {
            rows: r,
            cols: c,
            data: rows.iter().map(|row| Gf2Vec::from_bits(row)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, b: bool) {
        self.data[i].set(j, b);
    }

    pub fn row(&self, i: usize) -> &Gf2Vec {
        &self.data[i]
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let mut t = Gf2Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in self.data[i].ones() {
                t.set(j, i, true);
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &Gf2Vec) -> Gf2Vec {
        assert_eq!(v.len(), self.cols);
        let mut out = Gf2Vec::zeros(self.rows);
        for i in 0..self.rows {
            out.set(i, self.data[i].dot(v));
        }
        out
    }

    /// x^T A y: the bilinear form attached to this matrix.
    pub fn bilinear(&self, x: &Gf2Vec, y: &Gf2Vec) -> bool {
        x.dot(&self.mul_vec(y))
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (0..self.rows.min(self.cols)).all(|i| !self.get(i, i))
    }

    /// Rank over GF(2).
    pub fn rank(&self) -> usize {
        let mut rows = self.data.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot = rows[rank].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != rank && row.get(col) {
                    row.xor_assign(&pivot);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Some solution x of A x = b, or None when the system is inconsistent.
    pub fn solve(&self, b: &Gf2Vec) -> Result<Option<Gf2Vec>, LinAlgError> {
        if b.len() != self.rows {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.rows,
                got: b.len(),
            });
        }
        let mut rows = self.data.clone();
        let mut rhs: Vec<bool> = (0..self.rows).map(|i| b.get(i)).collect();
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(rank, p);
            rhs.swap(rank, p);
            let pivot = rows[rank].clone();
            let pivot_rhs = rhs[rank];
            for i in 0..rows.len() {
                if i != rank && rows[i].get(col) {
                    rows[i].xor_assign(&pivot);
                    rhs[i] ^= pivot_rhs;
                }
            }
            pivots.push((rank, col));
            rank += 1;
        }
        if (rank..rows.len()).any(|i| rhs[i]) {
            return Ok(None);
        }
        let mut x = Gf2Vec::zeros(self.cols);
        for &(r, c) in &pivots {
            x.set(c, rhs[r]);
        }
        Ok(Some(x))
    }

    /// A basis of the right kernel, of size cols - rank.
    pub fn nullspace(&self) -> Vec<Gf2Vec> {
        let mut rows = self.data.clone();
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot = rows[rank].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != rank && row.get(col) {
                    row.xor_assign(&pivot);
                }
            }
            pivots.push((rank, col));
            rank += 1;
        }
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let mut basis = Vec::with_capacity(self.cols - rank);
        for free in (0..self.cols).filter(|c| !pivot_cols.contains(c)) {
            let mut v = Gf2Vec::zeros(self.cols);
            v.set(free, true);
            for &(r, c) in &pivots {
                if rows[r].get(free) {
                    v.set(c, true);
                }
            }
            basis.push(v);
        }
        basis
    }
}

/// Incremental GF(2) row-space tracker: feeds vectors one at a time and
/// reports whether each enlarged the span. Used to pick independent
/// representatives deterministically.
#[derive(Clone, Debug, Default)]
pub struct Gf2Span {
    echelon: Vec<(usize, Gf2Vec)>,
}

impl Gf2Span {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.echelon.len()
    }

    /// Reduce v by the current echelon; if a nonzero residue remains, absorb
    /// it and return true.
    pub fn insert(&mut self, v: &Gf2Vec) -> bool {
        let mut w = v.clone();
        for (pivot, row) in &self.echelon {
            if w.get(*pivot) {
                w.xor_assign(row);
            }
        }
        let pivot = w.ones().next();
        match pivot {
            Some(pivot) => {
                self.echelon.push((pivot, w));
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: &Gf2Vec) -> bool {
        let mut w = v.clone();
        for (pivot, row) in &self.echelon {
            if w.get(*pivot) {
                w.xor_assign(row);
            }
        }
        w.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use proptest::prelude::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    /// gcd of all k x k minors; the elementary-divisor oracle d1...dk =
    /// gcd of k-minors / gcd of (k-1)-minors.
    fn minors_gcd(a: &IntMatrix, k: usize) -> BigInt {
        fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in 0..n {
                for mut rest in combos(n, k - 1) {
                    if rest.iter().all(|&r| r > first) {
                        rest.insert(0, first);
                        out.push(rest);
                    }
                }
            }
            out
        }
        let mut g = BigInt::zero();
        for rs in combos(a.rows(), k) {
            for cs in combos(a.cols(), k) {
                let mut sub = IntMatrix::zeros(k, k);
                for (si, &i) in rs.iter().enumerate() {
                    for (sj, &j) in cs.iter().enumerate() {
                        sub.set(si, sj, a.at(i, j).clone());
                    }
                }
                g = g.gcd(&sub.determinant());
            }
        }
        g
    }

    fn check_snf(a: &IntMatrix) {
        let snf = smith_normal_form(a);
        // reconstruction
        assert_eq!(snf.u.mul(a).mul(&snf.v), snf.d, "d != u a v");
        // unimodularity
        assert_eq!(snf.u.determinant().abs(), big(1));
        assert_eq!(snf.v.determinant().abs(), big(1));
        // diagonal, nonnegative, divisibility chain
        for i in 0..snf.d.rows() {
            for j in 0..snf.d.cols() {
                if i != j {
                    assert!(snf.d.at(i, j).is_zero(), "off-diagonal at {i},{j}");
                }
            }
        }
        let divs = snf.divisors();
        for w in divs.windows(2) {
            assert!(!w[0].is_zero() && (&w[1] % &w[0]).is_zero(), "chain broken");
        }
        // elementary divisors against the gcd-of-minors oracle
        let mut prev = BigInt::one();
        for (k, d) in divs.iter().enumerate() {
            let g = minors_gcd(a, k + 1);
            assert_eq!(d * &prev, g, "divisor {k} disagrees with minors gcd");
            prev = g;
        }
    }

    #[test]
    fn snf_empty_matrix() {
        let a = IntMatrix::zeros(0, 0);
        let snf = smith_normal_form(&a);
        assert_eq!(snf.d.rows(), 0);
        assert_eq!(snf.u.rows(), 0);
        assert_eq!(snf.v.rows(), 0);
        assert!(snf.divisors().is_empty());
    }

    #[test]
    fn snf_diag_2_3() {
        let a = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let snf = smith_normal_form(&a);
        assert_eq!(snf.divisors(), vec![big(1), big(6)]);
        check_snf(&a);
    }

    #[test]
    fn snf_2_4_6_8() {
        let a = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        let snf = smith_normal_form(&a);
        assert_eq!(snf.divisors(), vec![big(2), big(4)]);
        check_snf(&a);
    }

    #[test]
    fn snf_rectangular_and_zero() {
        check_snf(&IntMatrix::from_rows(&[vec![0, 0, 0]]));
        check_snf(&IntMatrix::from_rows(&[vec![1], vec![2], vec![3]]));
        check_snf(&IntMatrix::from_rows(&[vec![-4, 6], vec![2, -2], vec![0, 8]]));
    }

    proptest! {
        #[test]
        fn snf_reconstruction_random(
            rows in 1usize..=6,
            cols in 1usize..=6,
            seed in any::<u64>(),
        ) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let entries: Vec<Vec<i64>> = (0..rows)
                .map(|_| (0..cols).map(|_| rng.gen_range(-9..=9)).collect())
                .collect();
            check_snf(&IntMatrix::from_rows(&entries));
        }
    }

    #[test]
    fn gf2_rank_examples() {
        assert_eq!(Gf2Matrix::zeros(3, 3).rank(), 0);
        assert_eq!(Gf2Matrix::identity(4).rank(), 4);
        assert_eq!(Gf2Matrix::from_rows(&[vec![1, 1], vec![1, 1]]).rank(), 1);
    }

    #[test]
    fn gf2_rank_by_enumeration() {
        // [[1,1],[1,1]] has row span {00, 11}: rank 1.
        let a = Gf2Matrix::from_rows(&[vec![1, 1], vec![1, 1]]);
        let mut span = std::collections::HashSet::new();
        for mask in 0..4u8 {
            let mut acc = Gf2Vec::zeros(2);
            if mask & 1 == 1 {
                acc.xor_assign(a.row(0));
            }
            if mask & 2 == 2 {
                acc.xor_assign(a.row(1));
            }
            span.insert((acc.get(0), acc.get(1)));
        }
        assert_eq!(span.len(), 1 << a.rank());
    }

    #[test]
    fn gf2_solve_examples() {
        let id = Gf2Matrix::identity(3);
        let b = Gf2Vec::from_bits(&[1, 0, 1]);
        assert_eq!(id.solve(&b).unwrap(), Some(b.clone()));

        let a = Gf2Matrix::from_rows(&[vec![1, 1]]);
        let b = Gf2Vec::from_bits(&[1]);
        let x = a.solve(&b).unwrap().unwrap();
        assert!(a.mul_vec(&x) == b);
        // the full candidate set is {10, 01}
        assert_eq!(x.count_ones(), 1);

        let a = Gf2Matrix::from_rows(&[vec![0, 0]]);
        assert_eq!(a.solve(&Gf2Vec::from_bits(&[1])).unwrap(), None);

        let a = Gf2Matrix::identity(2);
        assert!(matches!(
            a.solve(&Gf2Vec::zeros(3)),
            Err(LinAlgError::DimensionMismatch { expected: 2, got: 3 })
        ));
    }

    #[test]
    fn gf2_nullspace_examples() {
        assert!(Gf2Matrix::identity(4).nullspace().is_empty());
        assert_eq!(Gf2Matrix::zeros(1, 3).nullspace().len(), 3);

        let a = Gf2Matrix::from_rows(&[vec![1, 1, 0]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 2);
        // enumeration oracle: exactly 4 of the 8 vectors lie in the kernel
        let kernel_size = (0..8u8)
            .filter(|m| {
                let v = Gf2Vec::from_bits(&[m & 1, (m >> 1) & 1, (m >> 2) & 1]);
                a.mul_vec(&v).is_zero()
            })
            .count();
        assert_eq!(kernel_size, 4);
        for v in &ns {
            assert!(a.mul_vec(v).is_zero());
        }
        let mut span = Gf2Span::new();
        for v in &ns {
            assert!(span.insert(v), "nullspace basis not independent");
        }
    }

    proptest! {
        #[test]
        fn gf2_rank_transpose_and_solve(
            rows in 1usize..=8,
            cols in 1usize..=8,
            seed in any::<u64>(),
        ) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let entries: Vec<Vec<u8>> = (0..rows)
                .map(|_| (0..cols).map(|_| rng.gen_range(0..=1)).collect())
                .collect();
            let a = Gf2Matrix::from_rows(&entries);
            prop_assert_eq!(a.rank(), a.transpose().rank());

            let b_bits: Vec<u8> = (0..rows).map(|_| rng.gen_range(0..=1)).collect();
            let b = Gf2Vec::from_bits(&b_bits);
            if let Some(x) = a.solve(&b).unwrap() {
                prop_assert!(a.mul_vec(&x) == b);
            }
            let ns = a.nullspace();
            prop_assert_eq!(ns.len(), cols - a.rank());
            let mut span = Gf2Span::new();
            for value in &ns {
                prop_assert!(a.mul_vec(value).is_zero());
                prop_assert!(span.insert(value));
            }
        }
    }
}
