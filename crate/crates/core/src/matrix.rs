//! Dense square matrices over `Z[q, q^-1]` and their specializations.
//!
//! Determinants and inverses use fraction-free (Bareiss) elimination, so
//! every intermediate division is exact in the Laurent ring and no
//! fraction type is needed.

use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{add_mod, mul_mod, ComplexValue, LaurentPoly, ModularValue};

/// Row-major `dim x dim` matrix of Laurent polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    dim: usize,
    entries: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![LaurentPoly::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = LaurentPoly::one();
        }
        m
    }

    /// Builds a matrix from rows; fails unless the rows form a square.
    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimMismatch {
                    left: dim,
                    right: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Self { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &LaurentPoly {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: LaurentPoly) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[LaurentPoly]> {
        self.entries.chunks(self.dim.max(1)).take(self.dim)
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(k, e)| {
            if k / self.dim == k % self.dim {
                e.is_one()
            } else {
                e.is_zero()
            }
        })
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let d = self.dim;
        let mut out = PolyMatrix::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * d + j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Determinant by Bareiss elimination.
    pub fn det(&self) -> LaurentPoly {
        let n = self.dim;
        if n == 0 {
            return LaurentPoly::one();
        }
        let mut m: Vec<Vec<LaurentPoly>> = self.rows().map(|r| r.to_vec()).collect();
        let mut negate = false;
        let mut prev = LaurentPoly::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(i, k);
                        negate = !negate;
                    }
                    None => return LaurentPoly::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = t
                        .div_exact(&prev)
                        .expect("Bareiss step divides exactly");
                }
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        if negate {
            -det
        } else {
            det
        }
    }

    /// Exact inverse over `Z[q, q^-1]`.
    ///
    /// Fraction-free Gauss-Jordan on `[A | I]` ends with `[d I | d A^-1]`
    /// where `d = ±det A`; the right block is then divided by the unit `d`.
    pub fn inverse(&self) -> Result<PolyMatrix> {
        let n = self.dim;
        let not_unit = |det: &LaurentPoly| Error::NotInvertibleOverRing {
            det: det.to_string(),
        };
        let mut m: Vec<Vec<LaurentPoly>> = self
            .rows()
            .enumerate()
            .map(|(i, r)| {
                let mut row = r.to_vec();
                row.extend((0..n).map(|j| if i == j { LaurentPoly::one() } else { LaurentPoly::zero() }));
                row
            })
            .collect();
        let mut prev = LaurentPoly::one();
        for k in 0..n {
            if m[k][k].is_zero() {
                let Some(i) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return Err(not_unit(&LaurentPoly::zero()));
                };
                m.swap(i, k);
            }
            let pivot_row = m[k].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i == k {
                    continue;
                }
                let factor = row[k].clone();
                for j in 0..2 * n {
                    let t = &(&row[j] * &pivot_row[k]) - &(&factor * &pivot_row[j]);
                    row[j] = t.div_exact(&prev)?;
                }
            }
            prev = pivot_row[k].clone();
        }
        let d = prev;
        if d.as_unit().is_none() {
            return Err(not_unit(&d));
        }
        let mut out = PolyMatrix::zeros(n);
        for (i, row) in m.iter().enumerate() {
            for j in 0..n {
                out.entries[i * n + j] = row[n + j].div_exact(&d)?;
            }
        }
        Ok(out)
    }

    pub fn specialize_complex(&self, q0: ComplexValue) -> Result<ComplexMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.eval_complex(q0))
            .collect::<Result<_>>()?;
        Ok(ComplexMatrix {
            dim: self.dim,
            entries,
        })
    }

    pub fn specialize_mod(&self, q0: ModularValue) -> Result<ModularMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.eval_mod(q0).map(ModularValue::residue))
            .collect::<Result<_>>()?;
        Ok(ModularMatrix {
            dim: self.dim,
            modulus: q0.modulus(),
            entries,
        })
    }
}

/// Panics on a dimension mismatch; use [`PolyMatrix::mul`] to get an error.
impl Mul<&PolyMatrix> for &PolyMatrix {
    type Output = PolyMatrix;
    fn mul(self, rhs: &PolyMatrix) -> PolyMatrix {
        PolyMatrix::mul(self, rhs).expect("matrix dimensions agree")
    }
}

/// Text grid with right-aligned columns.
impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write_grid(f, self.dim, &cells)
    }
}

fn write_grid(f: &mut fmt::Formatter<'_>, dim: usize, cells: &[String]) -> fmt::Result {
    let widths: Vec<usize> = (0..dim)
        .map(|j| (0..dim).map(|i| cells[i * dim + j].len()).max().unwrap_or(0))
        .collect();
    for i in 0..dim {
        f.write_str("[ ")?;
        for j in 0..dim {
            if j > 0 {
                f.write_str("  ")?;
            }
            write!(f, "{:>w$}", cells[i * dim + j], w = widths[j])?;
        }
        f.write_str(" ]")?;
        if i + 1 < dim {
            f.write_str("\n")?;
        }
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    dim: usize,
    entries: Vec<Vec<LaurentPoly>>,
}

impl Serialize for PolyMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson {
            dim: self.dim,
            entries: self.rows().map(|r| r.to_vec()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PolyMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = MatrixJson::deserialize(deserializer)?;
        let m = PolyMatrix::from_rows(raw.entries).map_err(serde::de::Error::custom)?;
        if m.dim != raw.dim {
            return Err(serde::de::Error::custom(format!(
                "declared dim {} but found {} rows",
                raw.dim, m.dim
            )));
        }
        Ok(m)
    }
}

/// A matrix of complex numbers obtained by specializing `q`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    pub fn mul(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let d = self.dim;
        let mut entries = vec![Complex64::new(0.0, 0.0); d * d];
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                for j in 0..d {
                    entries[i * d + j] += a * other.get(k, j);
                }
            }
        }
        Ok(ComplexMatrix { dim: d, entries })
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_norm_diff(&self, other: &ComplexMatrix) -> f64 {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Max-norm distance to the identity is at most `tol`.
    pub fn is_identity_within(&self, tol: f64) -> bool {
        self.entries.iter().enumerate().all(|(k, e)| {
            let target = if k / self.dim == k % self.dim { 1.0 } else { 0.0 };
            (e - target).norm() <= tol
        })
    }
}

impl fmt::Display for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self
            .entries
            .iter()
            .map(|z| {
                let sign = if z.im < 0.0 { '-' } else { '+' };
                format!("{:.6}{}{:.6}i", z.re, sign, z.im.abs())
            })
            .collect();
        write_grid(f, self.dim, &cells)
    }
}

/// A matrix over `Z/pZ` obtained by specializing `q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModularMatrix {
    dim: usize,
    modulus: u64,
    entries: Vec<u64>,
}

impl ModularMatrix {
    pub fn identity(dim: usize, modulus: u64) -> Self {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1 % modulus;
        }
        Self {
            dim,
            modulus,
            entries,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> u64 {
        self.entries[row * self.dim + col]
    }

    pub fn mul(&self, other: &ModularMatrix) -> Result<ModularMatrix> {
        if self.dim != other.dim {
            return Err(Error::DimMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        assert_eq!(self.modulus, other.modulus, "moduli differ");
        let (d, p) = (self.dim, self.modulus);
        let mut entries = vec![0u64; d * d];
        for i in 0..d {
            for k in 0..d {
                let a = self.entries[i * d + k];
                if a == 0 {
                    continue;
                }
                for j in 0..d {
                    let t = mul_mod(a, other.entries[k * d + j], p);
                    entries[i * d + j] = add_mod(entries[i * d + j], t, p);
                }
            }
        }
        Ok(ModularMatrix {
            dim: d,
            modulus: p,
            entries,
        })
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim, self.modulus)
    }
}
