//! Integral lattices inside the weight space: bases, duals, scalings, and
//! finite quotients with Smith-normal-form structure.
//!
//! A [`Lattice`] is a full-rank-in-its-span list of basis vectors together
//! with its Gram matrix. Quotients L1/L2 are computed exactly over BigInt,
//! yielding invariant factors, canonical coset representatives, and a
//! coset classifier.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::liealg::{RootSystem, WeightVec};
use crate::linalg::{coords_in_span, rat, Rat, RatMat};

/// An integral lattice, presented by a basis of ambient-coordinate vectors.
#[derive(Debug, Clone)]
pub struct Lattice {
    basis: Vec<WeightVec>,
    gram: RatMat,
}

impl Lattice {
    /// Build from a basis, taking inner products with the root system's form.
    /// The basis must be linearly independent.
    pub fn from_basis(rs: &RootSystem, basis: Vec<WeightVec>) -> Lattice {
        let gram = RatMat::from_rows(
            basis
                .iter()
                .map(|x| basis.iter().map(|y| rs.ip(x, y)).collect())
                .collect(),
        );
        assert!(
            !gram.det().is_zero(),
            "lattice basis must be linearly independent"
        );
        Lattice { basis, gram }
    }

    fn from_parts(basis: Vec<WeightVec>, gram: RatMat) -> Lattice {
        Lattice { basis, gram }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[WeightVec] {
        &self.basis
    }

    pub fn gram(&self) -> &RatMat {
        &self.gram
    }

    /// Rational coordinates of `v` in this basis, if `v` lies in the span.
    pub fn coords(&self, v: &WeightVec) -> Option<Vec<Rat>> {
        let b: Vec<Vec<Rat>> = self.basis.iter().map(|w| w.coords().to_vec()).collect();
        coords_in_span(&b, v.coords())
    }

    /// Integer coordinates of `v`, if `v` is a lattice point.
    pub fn integral_coords(&self, v: &WeightVec) -> Option<Vec<BigInt>> {
        self.coords(v)?
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn contains(&self, v: &WeightVec) -> bool {
        self.integral_coords(v).is_some()
    }

    /// The lattice point with the given integer coordinates.
    pub fn point(&self, coords: &[BigInt]) -> WeightVec {
        assert_eq!(coords.len(), self.rank());
        let dim = self.basis[0].dim();
        coords
            .iter()
            .zip(&self.basis)
            .fold(WeightVec::zero(dim), |acc, (c, b)| {
                acc.add(&b.scaled(&Rat::from_integer(c.clone())))
            })
    }

    /// Basis-independent equality: mutual containment of bases.
    pub fn same_lattice(&self, other: &Lattice) -> bool {
        self.basis.iter().all(|v| other.contains(v))
            && other.basis.iter().all(|v| self.contains(v))
    }
}

/// The root lattice Q, spanned by the simple roots.
pub fn root_lattice(rs: &RootSystem) -> Lattice {
    Lattice::from_basis(rs, rs.simple_roots().to_vec())
}

/// The weight lattice P, spanned by the fundamental weights.
pub fn weight_lattice(rs: &RootSystem) -> Lattice {
    Lattice::from_basis(rs, rs.fundamental_weights().to_vec())
}

/// The sublattice Q_L of Q spanned by the long roots. An integral basis is
/// extracted from the long-root generating set by Hermite-style reduction of
/// their simple-root coordinates.
pub fn long_root_lattice(rs: &RootSystem) -> Lattice {
    let generators: Vec<Vec<BigInt>> = rs
        .positive_roots()
        .iter()
        .filter(|a| rs.norm2(a) == rat(2))
        .map(|a| {
            rs.in_root_span(a)
                .expect("roots lie in the simple-root span")
                .iter()
                .map(|c| {
                    assert!(c.is_integer());
                    c.to_integer()
                })
                .collect()
        })
        .collect();
    let rows = integral_row_basis(generators);
    assert_eq!(rows.len(), rs.rank(), "long roots span the full rank");
    let basis = rows
        .iter()
        .map(|row| {
            row.iter()
                .zip(rs.simple_roots())
                .fold(WeightVec::zero(rs.ambient_dim()), |acc, (c, a)| {
                    acc.add(&a.scaled(&Rat::from_integer(c.clone())))
                })
        })
        .collect();
    Lattice::from_basis(rs, basis)
}

/// The scaled lattice mL: basis times m, Gram times m^2.
pub fn scale(l: &Lattice, m: u32) -> Lattice {
    assert!(m >= 1);
    let f = rat(m as i64);
    let basis = l.basis.iter().map(|b| b.scaled(&f)).collect();
    let f2 = &f * &f;
    let gram = RatMat::from_rows(
        l.gram
            .rows()
            .iter()
            .map(|row| row.iter().map(|x| x * &f2).collect())
            .collect(),
    );
    Lattice::from_parts(basis, gram)
}

/// The dual lattice { v in span(L) : <v, x> in Z for all x in L }, computed
/// by applying the inverse Gram matrix to the basis.
pub fn dual_lattice(l: &Lattice) -> Result<Lattice> {
    let inv = l.gram.inverse().ok_or(Error::DegenerateGram)?;
    let dim = l.basis[0].dim();
    let basis: Vec<WeightVec> = (0..l.rank())
        .map(|i| {
            (0..l.rank()).fold(WeightVec::zero(dim), |acc, j| {
                acc.add(&l.basis[j].scaled(inv.at(i, j)))
            })
        })
        .collect();
    Ok(Lattice::from_parts(basis, inv))
}

/// A finite quotient L1/L2 with its Smith normal form structure.
#[derive(Debug, Clone)]
pub struct QuotientGroup {
    ambient: Lattice,
    sub: Lattice,
    snf_diag: Vec<u64>,
    reps: Vec<WeightVec>,
    order: u64,
    /// Left unimodular transform of the SNF: maps ambient-basis coordinates
    /// to coordinates in the adapted basis where the subgroup is diagonal.
    u_mat: Vec<Vec<BigInt>>,
}

/// Hard cap on coset enumeration; quotients beyond this are not desk scale.
const MAX_QUOTIENT_ORDER: u64 = 1 << 24;

/// Compute the quotient L1/L2 with canonical coset representatives.
///
/// Representatives are indexed lexicographically by their SNF digit vectors
/// (d_i-ary digits, first digit most significant), so `reps[0]` is zero and
/// the indexing is stable across runs.
pub fn quotient(l1: &Lattice, l2: &Lattice) -> Result<QuotientGroup> {
    if l2.rank() != l1.rank() {
        return Err(Error::NotFiniteIndex);
    }
    // sub basis in ambient-lattice coordinates; must be integral
    let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(l2.rank());
    for b in l2.basis() {
        match l1.integral_coords(b) {
            Some(c) => m.push(c),
            None => return Err(Error::NotASublattice(b.to_string())),
        }
    }
    // columns of M are the sub-basis vectors: transpose the coordinate rows
    let n = l1.rank();
    let mt: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| m[j][i].clone()).collect())
        .collect();
    let (u, d, _v) = smith_normal_form(&mt);
    let mut diag: Vec<BigInt> = (0..n).map(|i| d[i][i].clone()).collect();
    if diag.iter().any(Zero::is_zero) {
        return Err(Error::NotFiniteIndex);
    }
    for x in diag.iter_mut() {
        if x.is_negative() {
            *x = -x.clone();
        }
    }
    let mut order: u64 = 1;
    for x in &diag {
        let xi = x
            .to_u64()
            .ok_or_else(|| Error::QuotientTooLarge(x.to_string()))?;
        order = order
            .checked_mul(xi)
            .ok_or_else(|| Error::QuotientTooLarge(format!("{order}*{xi}")))?;
    }
    if order > MAX_QUOTIENT_ORDER {
        return Err(Error::QuotientTooLarge(order.to_string()));
    }
    let snf_diag: Vec<u64> = diag.iter().map(|x| x.to_u64().unwrap()).collect();

    // adapted basis B' = B * U^{-1}: the quotient is the direct sum of
    // Z b'_i / d_i Z b'_i
    let u_rat = RatMat::from_rows(
        u.iter()
            .map(|row| row.iter().map(|x| Rat::from_integer(x.clone())).collect())
            .collect(),
    );
    let u_inv = u_rat.inverse().expect("U is unimodular");
    let dim = l1.basis()[0].dim();
    let basis_primed: Vec<WeightVec> = (0..n)
        .map(|i| {
            (0..n).fold(WeightVec::zero(dim), |acc, j| {
                acc.add(&l1.basis()[j].scaled(u_inv.at(j, i)))
            })
        })
        .collect();

    let mut reps = Vec::with_capacity(order as usize);
    let mut digits = vec![0u64; n];
    'outer: loop {
        let rep = digits
            .iter()
            .zip(&basis_primed)
            .fold(WeightVec::zero(dim), |acc, (&s, b)| {
                acc.add(&b.scaled(&rat(s as i64)))
            });
        reps.push(rep);
        // increment the mixed-radix counter, last digit fastest
        let mut k = n;
        while k > 0 {
            k -= 1;
            digits[k] += 1;
            if digits[k] < snf_diag[k] {
                continue 'outer;
            }
            digits[k] = 0;
        }
        break;
    }
    assert_eq!(reps.len(), order as usize);

    Ok(QuotientGroup {
        ambient: l1.clone(),
        sub: l2.clone(),
        snf_diag,
        reps,
        order,
        u_mat: u,
    })
}

impl QuotientGroup {
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn snf_diag(&self) -> &[u64] {
        &self.snf_diag
    }

    pub fn reps(&self) -> &[WeightVec] {
        &self.reps
    }

    pub fn rep(&self, index: usize) -> &WeightVec {
        &self.reps[index]
    }

    pub fn ambient(&self) -> &Lattice {
        &self.ambient
    }

    pub fn sub(&self) -> &Lattice {
        &self.sub
    }

    /// SNF digit vector of the coset of `v`.
    fn digits_of(&self, v: &WeightVec) -> Result<Vec<u64>> {
        let x = self
            .ambient
            .integral_coords(v)
            .ok_or_else(|| Error::NotInLattice(v.to_string()))?;
        Ok(self
            .u_mat
            .iter()
            .zip(&self.snf_diag)
            .map(|(row, &d)| {
                let s: BigInt = row.iter().zip(&x).map(|(a, b)| a * b).sum();
                s.mod_floor(&BigInt::from(d)).to_u64().unwrap()
            })
            .collect())
    }

    fn index_of_digits(&self, digits: &[u64]) -> usize {
        let mut idx = 0u64;
        for (s, d) in digits.iter().zip(&self.snf_diag) {
            idx = idx * d + s;
        }
        idx as usize
    }

    /// Index of the coset containing `v`.
    pub fn coset_of(&self, v: &WeightVec) -> Result<usize> {
        Ok(self.index_of_digits(&self.digits_of(v)?))
    }

    /// SNF digit vector of a coset index.
    pub fn digits(&self, index: usize) -> Result<Vec<u64>> {
        if index >= self.order as usize {
            return Err(Error::CosetOutOfRange {
                index,
                order: self.order,
            });
        }
        let mut idx = index as u64;
        let mut out = vec![0u64; self.snf_diag.len()];
        for (slot, &d) in out.iter_mut().zip(&self.snf_diag).rev() {
            *slot = idx % d;
            idx /= d;
        }
        Ok(out)
    }

    /// Coset index with the given SNF digits.
    pub fn index_from_digits(&self, digits: &[u64]) -> Result<usize> {
        if digits.len() != self.snf_diag.len()
            || digits.iter().zip(&self.snf_diag).any(|(s, d)| s >= d)
        {
            return Err(Error::Parse {
                kind: "coset digits",
                text: format!("{digits:?}"),
                reason: format!("expected digits below {:?}", self.snf_diag),
            });
        }
        Ok(self.index_of_digits(digits))
    }

    /// Group law on coset indices.
    pub fn add(&self, i: usize, j: usize) -> Result<usize> {
        let a = self.digits(i)?;
        let b = self.digits(j)?;
        let sum: Vec<u64> = a
            .iter()
            .zip(&b)
            .zip(&self.snf_diag)
            .map(|((x, y), &d)| (x + y) % d)
            .collect();
        Ok(self.index_of_digits(&sum))
    }

    pub fn neg(&self, i: usize) -> Result<usize> {
        let a = self.digits(i)?;
        let neg: Vec<u64> = a
            .iter()
            .zip(&self.snf_diag)
            .map(|(x, &d)| (d - x) % d)
            .collect();
        Ok(self.index_of_digits(&neg))
    }
}

/// Smith normal form of a square integer matrix: returns (U, D, V) with
/// U*M*V = D diagonal, U and V unimodular, and the divisibility chain
/// d_1 | d_2 | ... along the diagonal (zeros last).
pub fn smith_normal_form(
    m: &[Vec<BigInt>],
) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let n = m.len();
    let cols = if n == 0 { 0 } else { m[0].len() };
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut u = identity_int(n);
    let mut v = identity_int(cols);

    let min_dim = n.min(cols);
    for t in 0..min_dim {
        loop {
            // move the entry of smallest nonzero magnitude to the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..n {
                for j in t..cols {
                    if !a[i][j].is_zero()
                        && best
                            .map(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                            .unwrap_or(true)
                    {
                        best = Some((i, j));
                    }
                }
            }
            let (pi, pj) = match best {
                Some(p) => p,
                None => return (u, a, v), // rest of the matrix is zero
            };
            a.swap(t, pi);
            u.swap(t, pi);
            swap_cols(&mut a, t, pj);
            swap_cols(&mut v, t, pj);

            // clear the pivot row and column with floor-division steps
            let mut dirty = false;
            for i in t + 1..n {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    row_sub(&mut a, i, t, &q);
                    row_sub(&mut u, i, t, &q);
                    if !a[i][t].is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    col_sub(&mut a, j, t, &q);
                    col_sub(&mut v, j, t, &q);
                    if !a[t][j].is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // pivot must divide every remaining entry; if not, fold the
            // offending row in and redo the reduction at this pivot
            let mut fixed = true;
            'scan: for i in t + 1..n {
                for j in t + 1..cols {
                    if !(&a[i][j] % &a[t][t]).is_zero() {
                        let one = BigInt::one();
                        row_add(&mut a, t, i, &one);
                        row_add(&mut u, t, i, &one);
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        if a[t][t].is_negative() {
            for j in 0..cols {
                a[t][j] = -a[t][j].clone();
            }
            for j in 0..n {
                u[t][j] = -u[t][j].clone();
            }
        }
    }
    (u, a, v)
}

fn identity_int(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

fn swap_cols(a: &mut [Vec<BigInt>], i: usize, j: usize) {
    if i != j {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    }
}

/// row_i -= q * row_j
fn row_sub(a: &mut [Vec<BigInt>], i: usize, j: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let rj = a[j].clone();
    for (x, y) in a[i].iter_mut().zip(&rj) {
        *x -= q * y;
    }
}

/// row_i += q * row_j
fn row_add(a: &mut [Vec<BigInt>], i: usize, j: usize, q: &BigInt) {
    let rj = a[j].clone();
    for (x, y) in a[i].iter_mut().zip(&rj) {
        *x += q * y;
    }
}

/// col_i -= q * col_j
fn col_sub(a: &mut [Vec<BigInt>], i: usize, j: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for row in a.iter_mut() {
        let y = row[j].clone();
        row[i] -= q * &y;
    }
}

/// Hermite-style integral basis of the row lattice of `rows`.
fn integral_row_basis(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut basis: Vec<Vec<BigInt>> = Vec::new();
    for col in 0..cols {
        loop {
            let mut nonzero: Vec<usize> = (0..rows.len())
                .filter(|&r| !rows[r][col].is_zero())
                .collect();
            if nonzero.len() <= 1 {
                break;
            }
            // reduce the larger of the two smallest against the smaller
            nonzero.sort_by_key(|&r| rows[r][col].abs());
            let (small, big) = (nonzero[0], nonzero[1]);
            let q = rows[big][col].div_floor(&rows[small][col]);
            let sr = rows[small].clone();
            for (x, y) in rows[big].iter_mut().zip(&sr) {
                *x -= &q * y;
            }
        }
        if let Some(r) = (0..rows.len()).find(|&r| !rows[r][col].is_zero()) {
            let mut pivot = rows.remove(r);
            if pivot[col].is_negative() {
                for x in pivot.iter_mut() {
                    *x = -x.clone();
                }
            }
            basis.push(pivot);
        }
    }
    basis
}
