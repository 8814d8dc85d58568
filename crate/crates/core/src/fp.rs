//! Dense exact linear algebra over the prime fields Z/p. This is the rank
//! oracle every dimension claim in the crate is checked against.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FpError {
    #[error("{0} is not a prime in the supported range 2..=97")]
    BadPrime(u32),
    #[error("matrix dimensions do not match: {0}")]
    Shape(String),
}

/// A validated prime modulus, capped at 97.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Prime(u32);

impl Prime {
    pub const MAX: u32 = 97;

    pub fn new(p: u32) -> Result<Self, FpError> {
        let prime = p >= 2 && (2..p).all(|k| k * k > p || !p.is_multiple_of(k));
        if prime && p <= Self::MAX {
            Ok(Prime(p))
        } else {
            Err(FpError::BadPrime(p))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.0 as i64) as u32
    }

    pub fn add(self, a: u32, b: u32) -> u32 {
        (a + b) % self.0
    }

    pub fn sub(self, a: u32, b: u32) -> u32 {
        (a + self.0 - b % self.0) % self.0
    }

    pub fn neg(self, a: u32) -> u32 {
        (self.0 - a % self.0) % self.0
    }

    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    /// Multiplicative inverse of a nonzero residue (Fermat).
    pub fn inv(self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.0), "division by zero mod {}", self.0);
        let mut result = 1u32;
        let mut base = a % self.0;
        let mut exp = self.0 - 2;
        while exp > 0 {
            if exp & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        result
    }
}

impl TryFrom<u32> for Prime {
    type Error = FpError;
    fn try_from(p: u32) -> Result<Self, FpError> {
        Prime::new(p)
    }
}

impl From<Prime> for u32 {
    fn from(p: Prime) -> u32 {
        p.0
    }
}

/// Dense matrix over Z/p, entries stored row-major and always reduced.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FpMatrix {
    p: Prime,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl std::fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "FpMatrix {}x{} mod {}", self.rows, self.cols, self.p.get())?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        Ok(())
    }
}

/// Result of Gaussian elimination: the rank, a basis of the kernel and a
/// basis of the column space (pivot columns of the original matrix).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankData {
    pub rank: usize,
    pub kernel: Vec<Vec<u32>>,
    pub image: Vec<Vec<u32>>,
}

impl FpMatrix {
    pub fn zeros(p: Prime, rows: usize, cols: usize) -> Self {
        Self { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: Prime, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(p: Prime, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c));
        let data = rows.iter().flat_map(|row| row.iter().map(|&x| p.reduce(x))).collect();
        Self { p, rows: r, cols: c, data }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(c, r)] = self[(r, c)];
            }
        }
        out
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matmul shape mismatch");
        assert_eq!(self.p, other.p);
        let mut out = Self::zeros(self.p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = self.p.add(out[(i, j)], self.p.mul(a, other[(k, j)]));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                v.iter()
                    .enumerate()
                    .fold(0, |acc, (c, &x)| self.p.add(acc, self.p.mul(self[(r, c)], x)))
            })
            .collect()
    }

    /// Stack another matrix below this one (same column count).
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        assert_eq!(self.p, other.p);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Self { p: self.p, rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Append columns of another matrix (same row count).
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.p, other.p);
        let mut out = Self::zeros(self.p, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(r, c)] = self[(r, c)];
            }
            for c in 0..other.cols {
                out[(r, self.cols + c)] = other[(r, c)];
            }
        }
        out
    }

    /// Reduced row echelon form; returns (rref, pivot column indices).
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let p = self.p;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m[(i, c)] != 0) else {
                continue;
            };
            for j in 0..m.cols {
                let tmp = m[(r, j)];
                m[(r, j)] = m[(pr, j)];
                m[(pr, j)] = tmp;
            }
            let inv = p.inv(m[(r, c)]);
            for j in 0..m.cols {
                m[(r, j)] = p.mul(m[(r, j)], inv);
            }
            for i in 0..m.rows {
                if i != r && m[(i, c)] != 0 {
                    let f = m[(i, c)];
                    for j in 0..m.cols {
                        let sub = p.mul(f, m[(r, j)]);
                        m[(i, j)] = p.sub(m[(i, j)], sub);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Gaussian elimination giving rank, kernel basis and image basis.
    /// Always `rank + dim kernel = cols`.
    pub fn rank_kernel_image(&self) -> RankData {
        let p = self.p;
        let (rref, pivots) = self.rref();
        let rank = pivots.len();
        let image = pivots.iter().map(|&c| self.col(c)).collect();
        let mut kernel = Vec::new();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        for free in (0..self.cols).filter(|c| !pivot_set.contains(c)) {
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = p.neg(rref[(ri, free)]);
            }
            kernel.push(v);
        }
        RankData { rank, kernel, image }
    }

    /// Does the column span of `self` equal the column span of `other`?
    pub fn same_column_span(&self, other: &Self) -> bool {
        let ra = self.rank();
        let rb = other.rank();
        ra == rb && self.hstack(other).rank() == ra
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }
}

impl std::ops::Index<(usize, usize)> for FpMatrix {
    type Output = u32;
    fn index(&self, (r, c): (usize, usize)) -> &u32 {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for FpMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut u32 {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: u32) -> Prime {
        Prime::new(v).unwrap()
    }

    #[test]
    fn prime_validation() {
        for good in [2u32, 3, 5, 7, 11, 97] {
            assert!(Prime::new(good).is_ok());
        }
        for bad in [0u32, 1, 4, 9, 91, 101] {
            assert!(Prime::new(bad).is_err());
        }
    }

    #[test]
    fn identity_rank() {
        let m = FpMatrix::identity(p(5), 3);
        let rd = m.rank_kernel_image();
        assert_eq!(rd.rank, 3);
        assert!(rd.kernel.is_empty());
    }

    #[test]
    fn zero_matrix_rank() {
        let m = FpMatrix::zeros(p(3), 4, 2);
        let rd = m.rank_kernel_image();
        assert_eq!(rd.rank, 0);
        assert_eq!(rd.kernel.len(), 2);
    }

    #[test]
    fn rank_one_example() {
        // [[1,2],[2,4]] over F_5 row reduces to rank 1
        let m = FpMatrix::from_rows(p(5), &[vec![1, 2], vec![2, 4]]);
        let rd = m.rank_kernel_image();
        assert_eq!(rd.rank, 1);
        assert_eq!(rd.kernel.len(), 1);
        // kernel vector annihilates the matrix
        assert!(m.mul_vec(&rd.kernel[0]).iter().all(|&x| x == 0));
    }

    #[test]
    fn image_basis_spans() {
        let m = FpMatrix::from_rows(p(3), &[vec![1, 2, 0], vec![0, 1, 1], vec![1, 0, 1]]);
        let rd = m.rank_kernel_image();
        assert_eq!(rd.rank, 2);
        assert_eq!(rd.image.len(), 2);
    }

    #[test]
    fn span_comparison() {
        let a = FpMatrix::from_rows(p(5), &[vec![1, 0], vec![0, 1], vec![0, 0]]);
        let b = FpMatrix::from_rows(p(5), &[vec![1, 2], vec![3, 2], vec![0, 0]]);
        assert!(a.same_column_span(&b));
        let c = FpMatrix::from_rows(p(5), &[vec![1], vec![0], vec![1]]);
        assert!(!a.same_column_span(&c));
    }

    proptest! {
        #[test]
        fn rank_nullity_holds(rows in 1usize..6, cols in 1usize..6,
                              seed in any::<u64>(), pv in prop::sample::select(vec![2u32,3,5,7])) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let pr = p(pv);
            let mut m = FpMatrix::zeros(pr, rows, cols);
            for r in 0..rows {
                for c in 0..cols {
                    m[(r, c)] = rng.gen_range(0..pv);
                }
            }
            let rd = m.rank_kernel_image();
            prop_assert_eq!(rd.rank + rd.kernel.len(), cols);
            for k in &rd.kernel {
                prop_assert!(m.mul_vec(k).iter().all(|&x| x == 0));
            }
            // rank of transpose agrees
            prop_assert_eq!(m.transpose().rank(), rd.rank);
        }
    }
}
