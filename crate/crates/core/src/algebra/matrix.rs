use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::exact::Exact;

/// Square matrix with exact entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExactMatrix<const N: usize> {
    pub entries: [[Exact; N]; N],
}

pub type Matrix3C = ExactMatrix<3>;
pub type Matrix4C = ExactMatrix<4>;

impl<const N: usize> ExactMatrix<N> {
    pub fn zero() -> Self {
        Self {
            entries: [[Exact::zero(); N]; N],
        }
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for k in 0..N {
            m.entries[k][k] = Exact::one();
        }
        m
    }

    pub fn from_fn(f: impl Fn(usize, usize) -> Exact) -> Self {
        Self {
            entries: std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))),
        }
    }

    /// Gaussian-integer entries given as `(re, im)` pairs.
    pub fn gaussian(rows: [[(i64, i64); N]; N]) -> Self {
        Self::from_fn(|i, j| Exact::gaussian(rows[i][j].0, rows[i][j].1))
    }

    /// Entries `(re + i·im)/√2`.
    pub fn gaussian_over_sqrt2(rows: [[(i64, i64); N]; N]) -> Self {
        Self::from_fn(|i, j| Exact::gaussian_over_sqrt2(rows[i][j].0, rows[i][j].1))
    }

    /// Real integer entries.
    pub fn integer(rows: [[i64; N]; N]) -> Self {
        Self::from_fn(|i, j| Exact::int(rows[i][j]))
    }

    pub fn get(&self, row: usize, col: usize) -> Exact {
        self.entries[row][col]
    }

    pub fn row(&self, row: usize) -> [Exact; N] {
        self.entries[row]
    }

    pub fn scale(&self, s: Exact) -> Self {
        Self::from_fn(|i, j| s * self.entries[i][j])
    }

    /// `self·other − other·self`
    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Exact::is_zero)
    }

    pub fn to_complex(&self) -> [[Complex64; N]; N] {
        std::array::from_fn(|i| std::array::from_fn(|j| self.entries[i][j].to_complex()))
    }
}

impl Matrix4C {
    /// `block-diag(1, m)` when `corner` is one, `block-diag(0, m)` when zero.
    pub fn bordered(corner: Exact, m: &Matrix3C) -> Self {
        Self::from_fn(|i, j| match (i, j) {
            (0, 0) => corner,
            (0, _) | (_, 0) => Exact::zero(),
            _ => m.entries[i - 1][j - 1],
        })
    }

    /// Lower-right 3×3 block.
    pub fn spatial_block(&self) -> Matrix3C {
        Matrix3C::from_fn(|i, j| self.entries[i + 1][j + 1])
    }
}

impl<const N: usize> Add for ExactMatrix<N> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::from_fn(|i, j| self.entries[i][j] + o.entries[i][j])
    }
}

impl<const N: usize> Sub for ExactMatrix<N> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::from_fn(|i, j| self.entries[i][j] - o.entries[i][j])
    }
}

impl<const N: usize> Neg for ExactMatrix<N> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::from_fn(|i, j| -self.entries[i][j])
    }
}

impl<const N: usize> Mul for ExactMatrix<N> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::from_fn(|i, j| {
            let mut acc = Exact::zero();
            for k in 0..N {
                acc += self.entries[i][k] * o.entries[k][j];
            }
            acc
        })
    }
}

impl<const N: usize> fmt::Display for ExactMatrix<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Float matrix-vector product for 4×4 complex matrices.
pub fn apply4(m: &[[Complex64; 4]; 4], v: &[Complex64; 4]) -> [Complex64; 4] {
    std::array::from_fn(|i| (0..4).map(|k| m[i][k] * v[k]).sum())
}
