//! Exact root-system data for the simple Lie types.
//!
//! A [`RootSystem`] carries simple/positive roots, fundamental weights, the
//! highest root with its marks, and the invariant bilinear form, all with
//! rational coordinates normalized so long roots have squared length 2.
//! Short-root families are realized in a rescaled ambient space whose Gram
//! matrix is a rational multiple of the identity, so no coordinate is ever
//! irrational.

mod build;

use std::collections::HashSet;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{coords_in_span, rat, to_i64, Rat, RatMat};

/// The seven families of simple Lie algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        match c.to_ascii_uppercase() {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            'E' => Some(Family::E),
            'F' => Some(Family::F),
            'G' => Some(Family::G),
            _ => None,
        }
    }
}

/// A validated (family, rank) pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<SimpleType> {
        let (ok, constraint) = match family {
            Family::A => (rank >= 1, "rank >= 1"),
            Family::B => (rank >= 2, "rank >= 2"),
            Family::C => (rank >= 2, "rank >= 2"),
            Family::D => (rank >= 4, "rank >= 4"),
            Family::E => (matches!(rank, 6..=8), "rank in {6,7,8}"),
            Family::F => (rank == 4, "rank = 4"),
            Family::G => (rank == 2, "rank = 2"),
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::InvalidRank {
                family: family.letter(),
                rank,
                constraint,
            })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Order of the Weyl group, from the classification tables.
    pub fn weyl_order(&self) -> u64 {
        let l = self.rank as u64;
        let fact = |n: u64| (1..=n).product::<u64>();
        match self.family {
            Family::A => fact(l + 1),
            Family::B | Family::C => (1u64 << l) * fact(l),
            Family::D => (1u64 << (l - 1)) * fact(l),
            Family::E => match self.rank {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1_152,
            Family::G => 12,
        }
    }

    /// Number of positive roots, from the classification tables.
    pub fn positive_root_count(&self) -> usize {
        let l = self.rank;
        match self.family {
            Family::A => l * (l + 1) / 2,
            Family::B | Family::C => l * l,
            Family::D => l * (l - 1),
            Family::E => match l {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A vector in the ambient coordinate space of a root system, with exact
/// rational entries. Used for roots, weights and lattice vectors alike.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightVec {
    coords: Vec<Rat>,
}

impl WeightVec {
    pub fn new(coords: Vec<Rat>) -> WeightVec {
        WeightVec { coords }
    }

    pub fn zero(dim: usize) -> WeightVec {
        WeightVec {
            coords: vec![Rat::zero(); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rat::is_zero)
    }

    pub fn add(&self, other: &WeightVec) -> WeightVec {
        debug_assert_eq!(self.dim(), other.dim());
        WeightVec {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &WeightVec) -> WeightVec {
        debug_assert_eq!(self.dim(), other.dim());
        WeightVec {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> WeightVec {
        WeightVec {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn scaled(&self, s: &Rat) -> WeightVec {
        WeightVec {
            coords: self.coords.iter().map(|a| a * s).collect(),
        }
    }
}

impl fmt::Display for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

/// An element of the Weyl group, stored as an exact orthogonal matrix on the
/// ambient coordinates together with its determinant.
#[derive(Debug, Clone)]
pub struct WeylElement {
    pub matrix: RatMat,
    pub det: i8,
}

impl WeylElement {
    pub fn apply(&self, v: &WeightVec) -> WeightVec {
        WeightVec::new(self.matrix.mul_vec(v.coords()))
    }
}

/// Default cap on Weyl group enumeration (covers every rank <= 4 type,
/// including F4 at 1152).
pub const DEFAULT_WEYL_BOUND: usize = 2000;

/// Complete exact data of one simple root system.
#[derive(Debug, Clone)]
pub struct RootSystem {
    stype: SimpleType,
    ambient_dim: usize,
    gram: RatMat,
    simple_roots: Vec<WeightVec>,
    positive_roots: Vec<WeightVec>,
    highest_root: WeightVec,
    fundamental_weights: Vec<WeightVec>,
    rho: WeightVec,
    cartan: Vec<Vec<i64>>,
    marks: Vec<u64>,
    comarks: Vec<u64>,
    set_i: Vec<usize>,
    dual_coxeter: u64,
    root_set: HashSet<WeightVec>,
}

/// Construct the root system of the given simple type.
///
/// Realizations: A_l on the sum-zero hyperplane of R^{l+1}; B_l, D_l in R^l
/// and F4 in R^4 with the standard dot product; C_l in R^l with Gram (1/2)I
/// (coordinates rescaled by sqrt(2)); G2 on the sum-zero plane of R^3 with
/// Gram (1/3)I (rescaled by sqrt(3)); E6, E7 inside the E8 realization of
/// R^8. Simple roots are ordered so the marks match the Kac labeling.
pub fn build_root_system(t: SimpleType) -> RootSystem {
    build::construct(t)
}

impl RootSystem {
    pub fn simple_type(&self) -> SimpleType {
        self.stype
    }

    pub fn rank(&self) -> usize {
        self.stype.rank()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn gram(&self) -> &RatMat {
        &self.gram
    }

    pub fn simple_roots(&self) -> &[WeightVec] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[WeightVec] {
        &self.positive_roots
    }

    pub fn highest_root(&self) -> &WeightVec {
        &self.highest_root
    }

    pub fn fundamental_weights(&self) -> &[WeightVec] {
        &self.fundamental_weights
    }

    pub fn rho(&self) -> &WeightVec {
        &self.rho
    }

    /// Cartan matrix with entries `C[i][j] = 2<a_i, a_j>/<a_j, a_j>`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Marks a_i of the highest root, theta = sum a_i alpha_i.
    pub fn marks(&self) -> &[u64] {
        &self.marks
    }

    /// Comarks: the level pairing <Lambda_i, theta> of each fundamental weight.
    pub fn comarks(&self) -> &[u64] {
        &self.comarks
    }

    /// The set I = { i : a_i = 1 } of unit marks, 1-based.
    pub fn set_i(&self) -> &[usize] {
        &self.set_i
    }

    pub fn dual_coxeter(&self) -> u64 {
        self.dual_coxeter
    }

    /// The invariant bilinear form, exactly.
    pub fn inner(&self, x: &WeightVec, y: &WeightVec) -> Result<Rat> {
        if x.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: x.dim(),
            });
        }
        if y.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: y.dim(),
            });
        }
        Ok(self.ip(x, y))
    }

    /// Unchecked bilinear form for internal hot paths.
    pub(crate) fn ip(&self, x: &WeightVec, y: &WeightVec) -> Rat {
        let gy = self.gram.mul_vec(y.coords());
        x.coords().iter().zip(&gy).map(|(a, b)| a * b).sum()
    }

    pub fn norm2(&self, x: &WeightVec) -> Rat {
        self.ip(x, x)
    }

    pub fn is_root(&self, v: &WeightVec) -> bool {
        self.root_set.contains(v)
    }

    /// True if `alpha` is a long root, i.e. has squared length 2.
    pub fn is_long_root(&self, alpha: &WeightVec) -> bool {
        self.is_root(alpha) && self.norm2(alpha) == rat(2)
    }

    /// Reflection of `v` in the hyperplane orthogonal to the root `alpha`.
    pub fn reflect(&self, alpha: &WeightVec, v: &WeightVec) -> Result<WeightVec> {
        if alpha.dim() != self.ambient_dim || v.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: alpha.dim().max(v.dim()),
            });
        }
        if !self.is_root(alpha) {
            return Err(Error::NotARoot(alpha.to_string()));
        }
        Ok(self.reflect_unchecked(alpha, v))
    }

    pub(crate) fn reflect_unchecked(&self, alpha: &WeightVec, v: &WeightVec) -> WeightVec {
        let c = rat(2) * self.ip(v, alpha) / self.norm2(alpha);
        v.sub(&alpha.scaled(&c))
    }

    /// Pairing with the coroot of the i-th simple root: `2<v,a_i>/<a_i,a_i>`.
    pub fn simple_coroot_pairing(&self, v: &WeightVec, i: usize) -> Rat {
        let a = &self.simple_roots[i];
        rat(2) * self.ip(v, a) / self.norm2(a)
    }

    /// Map `v` to its unique Weyl image in the closed dominant chamber,
    /// recording the determinant of the Weyl element used. Returns sign 0
    /// when `v` lies on a reflection wall (so the orbit has a stabilizer),
    /// which is the degenerate case of the shifted Racah-Speiser scan.
    pub fn dominant_shifted(&self, v: &WeightVec) -> (WeightVec, i8) {
        let mut w = v.clone();
        let mut sign = 1i8;
        'ascent: loop {
            for i in 0..self.rank() {
                if self.ip(&w, &self.simple_roots[i]).is_negative() {
                    w = self.reflect_unchecked(&self.simple_roots[i], &w);
                    sign = -sign;
                    continue 'ascent;
                }
            }
            break;
        }
        for i in 0..self.rank() {
            if self.ip(&w, &self.simple_roots[i]).is_zero() {
                return (w, 0);
            }
        }
        (w, sign)
    }

    /// Dominant representative of the Weyl orbit of `v` (no sign tracking;
    /// wall vectors are fine).
    pub fn dominant_representative(&self, v: &WeightVec) -> WeightVec {
        let mut w = v.clone();
        'ascent: loop {
            for i in 0..self.rank() {
                if self.ip(&w, &self.simple_roots[i]).is_negative() {
                    w = self.reflect_unchecked(&self.simple_roots[i], &w);
                    continue 'ascent;
                }
            }
            return w;
        }
    }

    /// True if all simple-coroot pairings are nonnegative.
    pub fn is_dominant(&self, v: &WeightVec) -> bool {
        (0..self.rank()).all(|i| !self.ip(v, &self.simple_roots[i]).is_negative())
    }

    /// Coordinates of `v` in the simple-root basis, if `v` lies in their span.
    pub fn in_root_span(&self, v: &WeightVec) -> Option<Vec<Rat>> {
        let basis: Vec<Vec<Rat>> = self.simple_roots.iter().map(|a| a.coords().to_vec()).collect();
        coords_in_span(&basis, v.coords())
    }

    /// Full enumeration of the Weyl group with the default order bound.
    pub fn weyl_group_elements(&self) -> Result<Vec<WeylElement>> {
        self.weyl_group_elements_bounded(DEFAULT_WEYL_BOUND)
    }

    /// Breadth-first closure of the simple reflections, as exact matrices.
    /// Fails if the group order would exceed `bound`.
    pub fn weyl_group_elements_bounded(&self, bound: usize) -> Result<Vec<WeylElement>> {
        let expected = self.stype.weyl_order();
        if expected as u128 > bound as u128 {
            return Err(Error::WeylBoundExceeded(bound));
        }
        let n = self.ambient_dim;
        let gens: Vec<RatMat> = (0..self.rank())
            .map(|i| self.reflection_matrix(&self.simple_roots[i]))
            .collect();

        let key = |m: &RatMat| -> Vec<Rat> {
            m.rows().iter().flat_map(|r| r.iter().cloned()).collect()
        };
        let mut seen: HashSet<Vec<Rat>> = HashSet::new();
        let mut out: Vec<WeylElement> = Vec::new();
        let mut queue = std::collections::VecDeque::new();
        let id = WeylElement {
            matrix: RatMat::identity(n),
            det: 1,
        };
        seen.insert(key(&id.matrix));
        queue.push_back(id.clone());
        out.push(id);
        while let Some(w) = queue.pop_front() {
            for g in &gens {
                let m = g.mul(&w.matrix);
                let k = key(&m);
                if seen.insert(k) {
                    if out.len() >= bound {
                        return Err(Error::WeylBoundExceeded(bound));
                    }
                    let e = WeylElement {
                        matrix: m,
                        det: -w.det,
                    };
                    queue.push_back(e.clone());
                    out.push(e);
                }
            }
        }
        if out.len() as u64 != expected {
            return Err(Error::consistency(
                "|W| = standard order",
                format!("enumerated {} elements, tables give {}", out.len(), expected),
            ));
        }
        Ok(out)
    }

    /// Matrix of the reflection in `alpha` acting on ambient coordinates.
    fn reflection_matrix(&self, alpha: &WeightVec) -> RatMat {
        let n = self.ambient_dim;
        let c = rat(2) / self.norm2(alpha);
        let galpha = self.gram.mul_vec(alpha.coords());
        let rows = (0..n)
            .map(|r| {
                (0..n)
                    .map(|s| {
                        let mut v = if r == s { rat(1) } else { rat(0) };
                        v -= &(&alpha.coords()[r] * &galpha[s]) * &c;
                        v
                    })
                    .collect()
            })
            .collect();
        RatMat::from_rows(rows)
    }

    /// The weight with the given Dynkin labels, as an ambient vector.
    pub fn weight_from_dynkin(&self, labels: &[i64]) -> WeightVec {
        assert_eq!(labels.len(), self.rank());
        let mut v = WeightVec::zero(self.ambient_dim);
        for (i, &m) in labels.iter().enumerate() {
            if m != 0 {
                v = v.add(&self.fundamental_weights[i].scaled(&rat(m)));
            }
        }
        v
    }

    /// Dynkin labels of `v`, when they are all integers (i.e. `v` is in the
    /// weight lattice).
    pub fn dynkin_labels(&self, v: &WeightVec) -> Option<Vec<i64>> {
        (0..self.rank())
            .map(|i| to_i64(&self.simple_coroot_pairing(v, i)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ratio;

    fn rs(f: Family, l: usize) -> RootSystem {
        build_root_system(SimpleType::new(f, l).unwrap())
    }

    #[test]
    fn rank_constraints() {
        assert!(SimpleType::new(Family::A, 1).is_ok());
        assert!(SimpleType::new(Family::A, 0).is_err());
        assert!(SimpleType::new(Family::B, 1).is_err());
        assert!(SimpleType::new(Family::D, 3).is_err());
        assert!(SimpleType::new(Family::E, 9).is_err());
        assert!(SimpleType::new(Family::F, 3).is_err());
        assert!(SimpleType::new(Family::G, 3).is_err());
        let err = SimpleType::new(Family::D, 2).unwrap_err();
        assert!(err.to_string().contains("rank >= 4"), "diagnostic names the constraint");
    }

    #[test]
    fn a1_data() {
        let r = rs(Family::A, 1);
        assert_eq!(r.positive_roots().len(), 1);
        let a = &r.simple_roots()[0];
        assert_eq!(r.inner(a, a).unwrap(), rat(2));
        assert_eq!(r.fundamental_weights()[0], a.scaled(&ratio(1, 2)));
        assert_eq!(r.rho(), &r.fundamental_weights()[0]);
        assert_eq!(r.dual_coxeter(), 2);
        assert_eq!(r.marks(), &[1]);
        assert_eq!(r.set_i(), &[1]);
    }

    #[test]
    fn b2_data() {
        let r = rs(Family::B, 2);
        let a1 = &r.simple_roots()[0];
        let a2 = &r.simple_roots()[1];
        assert_eq!(r.inner(a2, a2).unwrap(), rat(1), "alpha_2 is short");
        assert_eq!(r.inner(a1, a1).unwrap(), rat(2));
        let expect = vec![
            a1.clone(),
            a2.clone(),
            a1.add(a2),
            a1.add(&a2.scaled(&rat(2))),
        ];
        for root in &expect {
            assert!(r.positive_roots().contains(root));
        }
        assert_eq!(r.positive_roots().len(), 4);
        assert_eq!(r.highest_root(), &a1.add(&a2.scaled(&rat(2))));
        assert_eq!(r.marks(), &[1, 2]);
        assert_eq!(r.set_i(), &[1]);
        assert_eq!(r.cartan(), &[vec![2, -2], vec![-1, 2]]);
    }

    #[test]
    fn g2_data() {
        let r = rs(Family::G, 2);
        assert_eq!(r.positive_roots().len(), 6);
        assert_eq!(r.marks(), &[2, 3]);
        assert!(r.set_i().is_empty());
        assert_eq!(r.dual_coxeter(), 4);
        assert_eq!(r.cartan(), &[vec![2, -3], vec![-1, 2]]);
    }

    #[test]
    fn inner_is_bilinear_and_checked() {
        let r = rs(Family::B, 2);
        let z = WeightVec::zero(2);
        assert_eq!(r.inner(&z, r.highest_root()).unwrap(), rat(0));
        let bad = WeightVec::zero(5);
        assert!(matches!(
            r.inner(&bad, &z),
            Err(Error::DimensionMismatch { expected: 2, got: 5 })
        ));
    }

    #[test]
    fn reflections() {
        let a1 = rs(Family::A, 1);
        let alpha = &a1.simple_roots()[0].clone();
        let lam = &a1.fundamental_weights()[0].clone();
        assert_eq!(a1.reflect(alpha, lam).unwrap(), lam.neg());
        assert_eq!(a1.reflect(alpha, alpha).unwrap(), alpha.neg());

        let b2 = rs(Family::B, 2);
        let b_a1 = b2.simple_roots()[0].clone();
        let b_a2 = b2.simple_roots()[1].clone();
        assert_eq!(
            b2.reflect(&b_a2, &b_a1).unwrap(),
            b_a1.add(&b_a2.scaled(&rat(2)))
        );
        // a fundamental weight is not a root
        let w = b2.fundamental_weights()[1].clone();
        assert!(matches!(b2.reflect(&w, &b_a1), Err(Error::NotARoot(_))));
    }

    #[test]
    fn simple_reflection_permutes_other_positive_roots() {
        for (f, l) in [(Family::A, 3), (Family::B, 2), (Family::C, 3), (Family::G, 2)] {
            let r = rs(f, l);
            for i in 0..r.rank() {
                let alpha = r.simple_roots()[i].clone();
                let mut image: Vec<WeightVec> = r
                    .positive_roots()
                    .iter()
                    .filter(|&b| *b != alpha)
                    .map(|b| r.reflect(&alpha, b).unwrap())
                    .collect();
                image.sort();
                let mut rest: Vec<WeightVec> = r
                    .positive_roots()
                    .iter()
                    .filter(|&b| *b != alpha)
                    .cloned()
                    .collect();
                rest.sort();
                assert_eq!(image, rest, "{f:?}{l} reflection {i}");
            }
        }
    }

    #[test]
    fn dominant_shifted_cases() {
        let r = rs(Family::A, 1);
        let lam = r.fundamental_weights()[0].clone();
        let (v, s) = r.dominant_shifted(&lam);
        assert_eq!((v, s), (lam.clone(), 1));
        let (v, s) = r.dominant_shifted(&WeightVec::zero(2));
        assert_eq!((v, s), (WeightVec::zero(2), 0));
        let (v, s) = r.dominant_shifted(&lam.neg());
        assert_eq!((v, s), (lam, -1));
    }

    #[test]
    fn weyl_group_orders() {
        assert_eq!(rs(Family::A, 1).weyl_group_elements().unwrap().len(), 2);
        assert_eq!(rs(Family::B, 2).weyl_group_elements().unwrap().len(), 8);
        assert_eq!(rs(Family::G, 2).weyl_group_elements().unwrap().len(), 12);
        assert_eq!(rs(Family::F, 4).weyl_group_elements().unwrap().len(), 1152);
        // E6 exceeds the default bound
        assert!(matches!(
            rs(Family::E, 6).weyl_group_elements(),
            Err(Error::WeylBoundExceeded(DEFAULT_WEYL_BOUND))
        ));
        // determinants multiply to the parity of the word length: spot-check
        // that exactly half the elements of B2 are rotations
        let w = rs(Family::B, 2).weyl_group_elements().unwrap();
        assert_eq!(w.iter().filter(|e| e.det == 1).count(), 4);
    }

    #[test]
    fn kac_labeling_for_e_series() {
        assert_eq!(rs(Family::E, 6).marks(), &[1, 2, 3, 2, 1, 2]);
        assert_eq!(rs(Family::E, 6).set_i(), &[1, 5]);
        assert_eq!(rs(Family::E, 7).marks(), &[2, 3, 4, 3, 2, 1, 2]);
        assert_eq!(rs(Family::E, 7).set_i(), &[6]);
        assert_eq!(rs(Family::E, 8).marks(), &[2, 3, 4, 5, 6, 4, 2, 3]);
        assert!(rs(Family::E, 8).set_i().is_empty());
        assert_eq!(rs(Family::F, 4).marks(), &[2, 3, 4, 2]);
        assert!(rs(Family::F, 4).set_i().is_empty());
    }

    #[test]
    fn dual_coxeter_table() {
        let table = [
            (Family::A, 3, 4),
            (Family::B, 3, 5),
            (Family::C, 3, 4),
            (Family::D, 4, 6),
            (Family::E, 6, 12),
            (Family::E, 7, 18),
            (Family::E, 8, 30),
            (Family::F, 4, 9),
            (Family::G, 2, 4),
        ];
        for (f, l, hv) in table {
            assert_eq!(rs(f, l).dual_coxeter(), hv, "{f:?}{l}");
        }
    }

    #[test]
    fn dynkin_label_roundtrip() {
        let r = rs(Family::C, 3);
        let v = r.weight_from_dynkin(&[2, 0, 1]);
        assert_eq!(r.dynkin_labels(&v).unwrap(), vec![2, 0, 1]);
        assert!(r.is_dominant(&v));
    }
}
