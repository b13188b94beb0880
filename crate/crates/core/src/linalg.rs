//! Small dense exact linear algebra over arbitrary-precision rationals.
//!
//! Everything here is sized for rank <= 9 ambient spaces; no pivoting
//! strategy beyond "first nonzero" is needed for exact arithmetic.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Shorthand for `n/d`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

/// Row-major dense rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMat {
    rows: Vec<Vec<Rat>>,
}

impl RatMat {
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        if let Some(first) = rows.first() {
            let n = first.len();
            assert!(rows.iter().all(|r| r.len() == n), "ragged matrix");
        }
        RatMat { rows }
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect())
            .collect();
        RatMat { rows }
    }

    /// Identity scaled by a rational factor.
    pub fn scaled_identity(n: usize, s: &Rat) -> Self {
        let mut m = Self::identity(n);
        for i in 0..n {
            m.rows[i][i] = s.clone();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.ncols(), v.len());
        self.rows
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn mul(&self, other: &RatMat) -> RatMat {
        assert_eq!(self.ncols(), other.nrows());
        let rows = self
            .rows
            .iter()
            .map(|row| {
                (0..other.ncols())
                    .map(|j| row.iter().enumerate().map(|(k, a)| a * other.at(k, j)).sum())
                    .collect()
            })
            .collect();
        RatMat { rows }
    }

    pub fn transpose(&self) -> RatMat {
        let rows = (0..self.ncols())
            .map(|j| (0..self.nrows()).map(|i| self.rows[i][j].clone()).collect())
            .collect();
        RatMat { rows }
    }

    /// Exact inverse by Gauss-Jordan elimination; `None` for singular input.
    pub fn inverse(&self) -> Option<RatMat> {
        let n = self.nrows();
        assert_eq!(n, self.ncols());
        let mut a = self.rows.clone();
        let mut inv = RatMat::identity(n).rows;
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].clone();
            for j in 0..n {
                a[col][j] = &a[col][j] / &p;
                inv[col][j] = &inv[col][j] / &p;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for j in 0..n {
                        let av = &a[col][j] * &f;
                        a[r][j] = &a[r][j] - &av;
                        let iv = &inv[col][j] * &f;
                        inv[r][j] = &inv[r][j] - &iv;
                    }
                }
            }
        }
        Some(RatMat { rows: inv })
    }

    /// Solve `self * x = b` for square nonsingular `self`.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        Some(self.inverse()?.mul_vec(b))
    }

    pub fn det(&self) -> Rat {
        let n = self.nrows();
        assert_eq!(n, self.ncols());
        let mut a = self.rows.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let pivot = match (col..n).find(|&r| !a[r][col].is_zero()) {
                Some(p) => p,
                None => return Rat::zero(),
            };
            if pivot != col {
                a.swap(col, pivot);
                det = -det;
            }
            let p = a[col][col].clone();
            det *= &p;
            for r in col + 1..n {
                if !a[r][col].is_zero() {
                    let f = &a[r][col] / &p;
                    for j in col..n {
                        let v = &a[col][j] * &f;
                        a[r][j] = &a[r][j] - &v;
                    }
                }
            }
        }
        det
    }
}

/// Coordinates of `v` in the column space of `basis` (vectors as coordinate
/// slices), or `None` if `v` lies outside the span. Works for bases of proper
/// subspaces: solves the Euclidean normal equations, then verifies the
/// residual exactly.
pub fn coords_in_span(basis: &[Vec<Rat>], v: &[Rat]) -> Option<Vec<Rat>> {
    let k = basis.len();
    if k == 0 {
        return if v.iter().all(Rat::is_zero) { Some(vec![]) } else { None };
    }
    let dot = |x: &[Rat], y: &[Rat]| -> Rat { x.iter().zip(y).map(|(a, b)| a * b).sum() };
    let gram = RatMat::from_rows(
        (0..k)
            .map(|i| (0..k).map(|j| dot(&basis[i], &basis[j])).collect())
            .collect(),
    );
    let rhs: Vec<Rat> = (0..k).map(|i| dot(&basis[i], v)).collect();
    let x = gram.solve(&rhs)?;
    // residual must vanish exactly
    for (c, vc) in v.iter().enumerate() {
        let rec: Rat = (0..k).map(|i| &x[i] * &basis[i][c]).sum();
        if &rec != vc {
            return None;
        }
    }
    Some(x)
}

pub fn is_integral(x: &Rat) -> bool {
    x.is_integer()
}

/// Exact extraction of an integer, if the rational is one.
pub fn to_i64(x: &Rat) -> Option<i64> {
    use num_traits::ToPrimitive;
    if x.is_integer() {
        x.to_integer().to_i64()
    } else {
        None
    }
}

/// f64 approximation (used only on the numeric side of tolerance checks).
pub fn to_f64(x: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or_else(|| {
        // fall back to a quotient of approximations for extreme magnitudes
        let n = x.numer().to_f64().unwrap_or(f64::NAN);
        let d = x.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

pub fn abs(x: &Rat) -> Rat {
    if x.is_negative() {
        -x.clone()
    } else {
        x.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_roundtrip() {
        let m = RatMat::from_rows(vec![
            vec![rat(2), rat(-1)],
            vec![rat(-1), rat(2)],
        ]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), RatMat::identity(2));
        assert_eq!(m.det(), rat(3));
    }

    #[test]
    fn singular_has_no_inverse() {
        let m = RatMat::from_rows(vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]]);
        assert!(m.inverse().is_none());
        assert_eq!(m.det(), rat(0));
    }

    #[test]
    fn span_coordinates() {
        // plane x+y+z = 0 inside R^3
        let b1 = vec![rat(1), rat(-1), rat(0)];
        let b2 = vec![rat(0), rat(1), rat(-1)];
        let v = vec![rat(2), rat(-1), rat(-1)];
        let c = coords_in_span(&[b1, b2], &v).unwrap();
        assert_eq!(c, vec![rat(2), rat(1)]);
        let off = vec![rat(1), rat(0), rat(0)];
        assert!(coords_in_span(&[vec![rat(1), rat(-1), rat(0)]], &off).is_none());
    }
}
