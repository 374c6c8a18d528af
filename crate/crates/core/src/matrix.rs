//! Exact integer matrices and residue matrices.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{AlgebraError, ParseError};

/// A 3×3 matrix over ℤ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactMat3 {
    e: [[BigInt; 3]; 3],
}

impl ExactMat3 {
    pub fn from_rows(e: [[BigInt; 3]; 3]) -> Self {
        ExactMat3 { e }
    }

    pub fn from_i64(rows: [[i64; 3]; 3]) -> Self {
        ExactMat3 {
            e: rows.map(|r| r.map(BigInt::from)),
        }
    }

    pub fn identity() -> Self {
        Self::scalar(1)
    }

    pub fn scalar(s: i64) -> Self {
        let mut m = Self::from_i64([[0; 3]; 3]);
        for i in 0..3 {
            m.e[i][i] = BigInt::from(s);
        }
        m
    }

    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.e[row][col]
    }

    pub fn rows(&self) -> &[[BigInt; 3]; 3] {
        &self.e
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn det(&self) -> BigInt {
        let e = &self.e;
        &e[0][0] * (&e[1][1] * &e[2][2] - &e[1][2] * &e[2][1])
            - &e[0][1] * (&e[1][0] * &e[2][2] - &e[1][2] * &e[2][0])
            + &e[0][2] * (&e[1][0] * &e[2][1] - &e[1][1] * &e[2][0])
    }

    fn adjugate(&self) -> [[BigInt; 3]; 3] {
        let e = &self.e;
        let minor = |r0: usize, r1: usize, c0: usize, c1: usize| {
            &e[r0][c0] * &e[r1][c1] - &e[r0][c1] * &e[r1][c0]
        };
        // adj[i][j] = cofactor[j][i]
        std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let rows: Vec<usize> = (0..3).filter(|&r| r != j).collect();
                let cols: Vec<usize> = (0..3).filter(|&c| c != i).collect();
                let m = minor(rows[0], rows[1], cols[0], cols[1]);
                if (i + j) % 2 == 0 {
                    m
                } else {
                    -m
                }
            })
        })
    }

    /// Integral inverse; requires determinant ±1.
    pub fn inverse(&self) -> Result<ExactMat3, AlgebraError> {
        let det = self.det();
        if det.abs() != BigInt::one() {
            return Err(AlgebraError::NotUnimodular {
                det: det.to_string(),
            });
        }
        let adj = self.adjugate();
        Ok(ExactMat3 {
            e: adj.map(|r| r.map(|x| x * &det)),
        })
    }

    pub fn reduce_mod(&self, modulus: u32) -> ResidueMat3 {
        let k = BigInt::from(modulus);
        let e = self.e.clone().map(|r| {
            r.map(|x| {
                let r = x.mod_floor(&k);
                u32::try_from(&r).expect("residue fits u32")
            })
        });
        ResidueMat3::from_reduced(modulus, e)
    }
}

impl Mul for &ExactMat3 {
    type Output = ExactMat3;

    fn mul(self, rhs: &ExactMat3) -> ExactMat3 {
        let mut out: [[BigInt; 3]; 3] = Default::default();
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let mut acc = BigInt::zero();
                for l in 0..3 {
                    if !self.e[i][l].is_zero() && !rhs.e[l][j].is_zero() {
                        acc += &self.e[i][l] * &rhs.e[l][j];
                    }
                }
                *cell = acc;
            }
        }
        ExactMat3 { e: out }
    }
}

impl Mul for ExactMat3 {
    type Output = ExactMat3;

    fn mul(self, rhs: ExactMat3) -> ExactMat3 {
        &self * &rhs
    }
}

impl fmt::Display for ExactMat3 {
    /// Right-aligned rows, one per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .e
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        write_grid(f, &cells)
    }
}

fn write_grid(f: &mut fmt::Formatter<'_>, cells: &[Vec<String>]) -> fmt::Result {
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    for (idx, row) in cells.iter().enumerate() {
        if idx > 0 {
            writeln!(f)?;
        }
        write!(f, "[")?;
        for (j, c) in row.iter().enumerate() {
            if j > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c:>width$}")?;
        }
        write!(f, "]")?;
    }
    Ok(())
}

impl FromStr for ExactMat3 {
    type Err = ParseError;

    /// Nine integers in row-major order, separated by commas and/or
    /// whitespace. Brackets are ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let tokens: Vec<&str> = s
            .split(|c: char| c == ',' || c == '[' || c == ']' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .collect();
        if tokens.len() != 9 {
            return Err(ParseError::MatrixArity {
                found: tokens.len(),
            });
        }
        let mut e: [[BigInt; 3]; 3] = Default::default();
        for (idx, tok) in tokens.iter().enumerate() {
            e[idx / 3][idx % 3] = tok.parse().map_err(|_| ParseError::BadInteger {
                token: tok.to_string(),
            })?;
        }
        Ok(ExactMat3 { e })
    }
}

/// A 2×2 matrix over ℤ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactMat2 {
    e: [[BigInt; 2]; 2],
}

impl ExactMat2 {
    pub fn from_rows(e: [[BigInt; 2]; 2]) -> Self {
        ExactMat2 { e }
    }

    pub fn from_i64(rows: [[i64; 2]; 2]) -> Self {
        ExactMat2 {
            e: rows.map(|r| r.map(BigInt::from)),
        }
    }

    pub fn identity() -> Self {
        Self::from_i64([[1, 0], [0, 1]])
    }

    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.e[row][col]
    }

    pub fn rows(&self) -> &[[BigInt; 2]; 2] {
        &self.e
    }

    pub fn det(&self) -> BigInt {
        &self.e[0][0] * &self.e[1][1] - &self.e[0][1] * &self.e[1][0]
    }

    pub fn is_sl2(&self) -> bool {
        self.det().is_one()
    }

    pub fn neg(&self) -> ExactMat2 {
        ExactMat2 {
            e: self.e.clone().map(|r| r.map(|x| -x)),
        }
    }

    /// Inverse of an SL₂(ℤ) matrix.
    pub fn inverse(&self) -> Result<ExactMat2, AlgebraError> {
        if !self.is_sl2() {
            return Err(AlgebraError::NotSl2 {
                det: self.det().to_string(),
            });
        }
        let [[p, q], [r, s]] = self.e.clone();
        Ok(ExactMat2 {
            e: [[s, -q], [-r, p]],
        })
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, v: &[BigInt; 2]) -> [BigInt; 2] {
        [
            &v[0] * &self.e[0][0] + &v[1] * &self.e[1][0],
            &v[0] * &self.e[0][1] + &v[1] * &self.e[1][1],
        ]
    }
}

impl Mul for &ExactMat2 {
    type Output = ExactMat2;

    fn mul(self, rhs: &ExactMat2) -> ExactMat2 {
        let a = &self.e;
        let b = &rhs.e;
        ExactMat2 {
            e: [
                [
                    &a[0][0] * &b[0][0] + &a[0][1] * &b[1][0],
                    &a[0][0] * &b[0][1] + &a[0][1] * &b[1][1],
                ],
                [
                    &a[1][0] * &b[0][0] + &a[1][1] * &b[1][0],
                    &a[1][0] * &b[0][1] + &a[1][1] * &b[1][1],
                ],
            ],
        }
    }
}

impl Mul for ExactMat2 {
    type Output = ExactMat2;

    fn mul(self, rhs: ExactMat2) -> ExactMat2 {
        &self * &rhs
    }
}

impl fmt::Display for ExactMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .e
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        write_grid(f, &cells)
    }
}

/// Largest modulus whose 3×3 residue matrices pack into a `u64` key.
pub const MAX_PACKED_MODULUS: u32 = 137;

/// A 3×3 matrix over ℤ/k with entries in `[0, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ResidueMat3 {
    modulus: u32,
    e: [[u32; 3]; 3],
}

impl ResidueMat3 {
    pub fn new(modulus: u32, rows: [[i64; 3]; 3]) -> Result<Self, AlgebraError> {
        if modulus < 2 {
            return Err(AlgebraError::BadModulus(modulus.into()));
        }
        let k = i64::from(modulus);
        Ok(Self::from_reduced(
            modulus,
            rows.map(|r| r.map(|x| x.rem_euclid(k) as u32)),
        ))
    }

    pub(crate) fn from_reduced(modulus: u32, e: [[u32; 3]; 3]) -> Self {
        debug_assert!(e.iter().flatten().all(|&x| x < modulus));
        ResidueMat3 { modulus, e }
    }

    pub fn identity(modulus: u32) -> Self {
        let mut e = [[0; 3]; 3];
        for (i, row) in e.iter_mut().enumerate() {
            row[i] = 1 % modulus;
        }
        ResidueMat3 { modulus, e }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn get(&self, row: usize, col: usize) -> u32 {
        self.e[row][col]
    }

    pub fn rows(&self) -> &[[u32; 3]; 3] {
        &self.e
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.modulus)
    }

    pub fn det(&self) -> u32 {
        let k = u64::from(self.modulus);
        let e = self.e.map(|r| r.map(u64::from));
        let term = |a: u64, b: u64, c: u64, d: u64| (a * b % k + k - c * d % k) % k;
        let t0 = e[0][0] * term(e[1][1], e[2][2], e[1][2], e[2][1]) % k;
        let t1 = e[0][1] * term(e[1][0], e[2][2], e[1][2], e[2][0]) % k;
        let t2 = e[0][2] * term(e[1][0], e[2][1], e[1][1], e[2][0]) % k;
        ((t0 + k - t1 + t2) % k) as u32
    }

    pub fn try_mul(&self, rhs: &ResidueMat3) -> Result<ResidueMat3, AlgebraError> {
        if self.modulus != rhs.modulus {
            return Err(AlgebraError::ModulusMismatch(self.modulus, rhs.modulus));
        }
        Ok(self.mul_unchecked(rhs))
    }

    fn mul_unchecked(&self, rhs: &ResidueMat3) -> ResidueMat3 {
        let k = u64::from(self.modulus);
        let mut e = [[0u32; 3]; 3];
        for (i, row) in e.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let acc: u64 = (0..3)
                    .map(|l| u64::from(self.e[i][l]) * u64::from(rhs.e[l][j]))
                    .sum();
                *cell = (acc % k) as u32;
            }
        }
        ResidueMat3 {
            modulus: self.modulus,
            e,
        }
    }

    pub fn pow(&self, mut n: u64) -> ResidueMat3 {
        let mut base = *self;
        let mut acc = Self::identity(self.modulus);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            base = base.mul_unchecked(&base);
            n >>= 1;
        }
        acc
    }

    /// Inverse modulo k, if the determinant is a unit.
    pub fn inverse(&self) -> Option<ResidueMat3> {
        let k = i64::from(self.modulus);
        let det = i64::from(self.det());
        let g = det.extended_gcd(&k);
        if g.gcd != 1 {
            return None;
        }
        let det_inv = g.x.rem_euclid(k);
        let exact = ExactMat3::from_i64(self.e.map(|r| r.map(i64::from)));
        let adj = exact.adjugate();
        let e = adj.map(|r| {
            r.map(|x| {
                let x = (x * det_inv).mod_floor(&BigInt::from(k));
                u32::try_from(&x).expect("residue fits u32")
            })
        });
        Some(ResidueMat3 {
            modulus: self.modulus,
            e,
        })
    }

    /// Mixed-radix encoding of the entries in row-major order. Injective for
    /// a fixed modulus up to [`MAX_PACKED_MODULUS`].
    pub fn key(&self) -> u64 {
        let k = u64::from(self.modulus);
        self.e
            .iter()
            .flatten()
            .fold(0u64, |acc, &x| acc * k + u64::from(x))
    }

    pub fn from_key(modulus: u32, mut key: u64) -> ResidueMat3 {
        let k = u64::from(modulus);
        let mut e = [[0u32; 3]; 3];
        for idx in (0..9).rev() {
            e[idx / 3][idx % 3] = (key % k) as u32;
            key /= k;
        }
        ResidueMat3 { modulus, e }
    }
}

impl Mul for ResidueMat3 {
    type Output = ResidueMat3;

    /// Panics when the moduli differ; see [`ResidueMat3::try_mul`].
    fn mul(self, rhs: ResidueMat3) -> ResidueMat3 {
        self.try_mul(&rhs)
            .expect("residue matrix moduli must agree")
    }
}

impl fmt::Display for ResidueMat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .e
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        write_grid(f, &cells)?;
        write!(f, " (mod {})", self.modulus)
    }
}
