//! Construction of the root-system data from exact coordinate realizations.

use std::collections::HashSet;

use num_traits::{One, Zero};

use super::{Family, RootSystem, SimpleType, WeightVec};
use crate::linalg::{rat, ratio, to_i64, Rat, RatMat};

/// Ambient coordinate realization of the simple roots, with the bilinear
/// form normalized so long roots have squared length 2. Simple roots are
/// ordered to match the Kac labeling (the one the marks tables follow).
fn realization(t: SimpleType) -> (usize, RatMat, Vec<WeightVec>) {
    let l = t.rank();
    // unit vector helper
    let e = |dim: usize, i: usize| -> Vec<Rat> {
        let mut v = vec![Rat::zero(); dim];
        v[i] = Rat::one();
        v
    };
    let diff = |dim: usize, i: usize, j: usize| -> WeightVec {
        let mut v = vec![Rat::zero(); dim];
        v[i] = Rat::one();
        v[j] = -Rat::one();
        WeightVec::new(v)
    };
    match t.family() {
        Family::A => {
            let dim = l + 1;
            let roots = (0..l).map(|i| diff(dim, i, i + 1)).collect();
            (dim, RatMat::identity(dim), roots)
        }
        Family::B => {
            let mut roots: Vec<WeightVec> = (0..l - 1).map(|i| diff(l, i, i + 1)).collect();
            roots.push(WeightVec::new(e(l, l - 1)));
            (l, RatMat::identity(l), roots)
        }
        Family::C => {
            // coordinates rescaled by sqrt(2): Gram is I/2, the long simple
            // root becomes 2*e_l
            let mut roots: Vec<WeightVec> = (0..l - 1).map(|i| diff(l, i, i + 1)).collect();
            let mut last = vec![Rat::zero(); l];
            last[l - 1] = rat(2);
            roots.push(WeightVec::new(last));
            (l, RatMat::scaled_identity(l, &ratio(1, 2)), roots)
        }
        Family::D => {
            let mut roots: Vec<WeightVec> = (0..l - 1).map(|i| diff(l, i, i + 1)).collect();
            let mut last = vec![Rat::zero(); l];
            last[l - 2] = Rat::one();
            last[l - 1] = Rat::one();
            roots.push(WeightVec::new(last));
            (l, RatMat::identity(l), roots)
        }
        Family::E => {
            // Bourbaki simple roots of E8 in R^8; E6 and E7 are the first 6
            // and 7 of them. Reordered below so the marks follow Kac's tables
            // (that ordering is what makes I = {1,5} for E6 and {6} for E7).
            let mut b: Vec<WeightVec> = Vec::new();
            let mut a1 = vec![-ratio(1, 2); 8];
            a1[0] = ratio(1, 2);
            a1[7] = ratio(1, 2);
            for k in [2, 3, 4] {
                a1[k - 1] = -ratio(1, 2);
            }
            b.push(WeightVec::new(a1)); // (1/2)(e1+e8) - (1/2)(e2+...+e7)
            let mut a2 = vec![Rat::zero(); 8];
            a2[0] = Rat::one();
            a2[1] = Rat::one();
            b.push(WeightVec::new(a2)); // e1+e2
            b.push(diff(8, 1, 0)); // e2-e1
            b.push(diff(8, 2, 1)); // e3-e2
            b.push(diff(8, 3, 2)); // e4-e3
            b.push(diff(8, 4, 3)); // e5-e4
            b.push(diff(8, 5, 4)); // e6-e5
            b.push(diff(8, 6, 5)); // e7-e6
            let kac_to_bourbaki: &[usize] = match l {
                6 => &[1, 3, 4, 5, 6, 2],
                7 => &[1, 3, 4, 5, 6, 7, 2],
                _ => &[8, 7, 6, 5, 4, 3, 1, 2],
            };
            let roots = kac_to_bourbaki.iter().map(|&j| b[j - 1].clone()).collect();
            (8, RatMat::identity(8), roots)
        }
        Family::F => {
            let roots = vec![
                diff(4, 1, 2),
                diff(4, 2, 3),
                WeightVec::new(e(4, 3)),
                WeightVec::new(vec![ratio(1, 2), -ratio(1, 2), -ratio(1, 2), -ratio(1, 2)]),
            ];
            (4, RatMat::identity(4), roots)
        }
        Family::G => {
            // plane orthogonal to (1,1,1) in R^3, rescaled by sqrt(3):
            // Gram is I/3, long roots keep squared length 2
            let roots = vec![
                WeightVec::new(vec![rat(-2), rat(1), rat(1)]),
                WeightVec::new(vec![rat(1), rat(-1), rat(0)]),
            ];
            (3, RatMat::scaled_identity(3, &ratio(1, 3)), roots)
        }
    }
}

/// Generate all positive roots from the simple ones by closing root strings
/// upward in height. `beta + alpha_i` is a root iff the string through
/// `beta` continues: p - <beta, alpha_i^v> >= -1+... precisely, with p the
/// number of known lower elements `beta - j alpha_i`, the upper string
/// length is p - <beta, alpha_i^v>.
fn positive_roots(
    rs_gram: &RatMat,
    simple: &[WeightVec],
) -> Vec<WeightVec> {
    let ip = |x: &WeightVec, y: &WeightVec| -> Rat {
        let gy = rs_gram.mul_vec(y.coords());
        x.coords().iter().zip(&gy).map(|(a, b)| a * b).sum()
    };
    let mut known: HashSet<WeightVec> = simple.iter().cloned().collect();
    let mut level: Vec<WeightVec> = simple.to_vec();
    let mut all: Vec<WeightVec> = simple.to_vec();
    while !level.is_empty() {
        let mut next: Vec<WeightVec> = Vec::new();
        for beta in &level {
            for alpha in simple {
                let cand = beta.add(alpha);
                if known.contains(&cand) {
                    continue;
                }
                // downward string length through beta in direction alpha
                let mut p = 0u32;
                let mut probe = beta.sub(alpha);
                while known.contains(&probe) {
                    p += 1;
                    probe = probe.sub(alpha);
                }
                let c = rat(2) * ip(beta, alpha) / ip(alpha, alpha);
                let c = to_i64(&c).expect("coroot pairing of roots must be integral");
                if p as i64 - c >= 1 {
                    known.insert(cand.clone());
                    next.push(cand);
                }
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }
    all
}

pub(super) fn construct(t: SimpleType) -> RootSystem {
    let l = t.rank();
    let (ambient_dim, gram, simple_roots) = realization(t);
    let ip = |x: &WeightVec, y: &WeightVec| -> Rat {
        let gy = gram.mul_vec(y.coords());
        x.coords().iter().zip(&gy).map(|(a, b)| a * b).sum()
    };

    let positive_roots = positive_roots(&gram, &simple_roots);
    assert_eq!(
        positive_roots.len(),
        t.positive_root_count(),
        "positive root count for {t}"
    );

    // Cartan matrix C[i][j] = 2<a_i,a_j>/<a_j,a_j>
    let cartan: Vec<Vec<i64>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let v = rat(2) * ip(&simple_roots[i], &simple_roots[j])
                        / ip(&simple_roots[j], &simple_roots[j]);
                    to_i64(&v).expect("Cartan entries are integers")
                })
                .collect()
        })
        .collect();

    // fundamental weights: Lambda_i = sum_j x_j a_j with <Lambda_i, a_m^v> =
    // delta_im, i.e. C^T x = e_i
    let ct = RatMat::from_rows(
        (0..l)
            .map(|j| (0..l).map(|m| rat(cartan[m][j])).collect())
            .collect(),
    );
    let ct_inv = ct.inverse().expect("Cartan matrix is invertible");
    let fundamental_weights: Vec<WeightVec> = (0..l)
        .map(|i| {
            let mut rhs = vec![Rat::zero(); l];
            rhs[i] = Rat::one();
            let x = ct_inv.mul_vec(&rhs);
            let mut v = WeightVec::zero(ambient_dim);
            for (j, c) in x.iter().enumerate() {
                v = v.add(&simple_roots[j].scaled(c));
            }
            v
        })
        .collect();

    let rho = fundamental_weights
        .iter()
        .fold(WeightVec::zero(ambient_dim), |acc, w| acc.add(w));

    // highest root: the unique positive root of maximal height
    let basis: Vec<Vec<Rat>> = simple_roots.iter().map(|a| a.coords().to_vec()).collect();
    let mut highest: Option<(Rat, WeightVec, Vec<i64>)> = None;
    for r in &positive_roots {
        let coords = crate::linalg::coords_in_span(&basis, r.coords())
            .expect("positive roots lie in the simple-root span");
        let h: Rat = coords.iter().sum();
        let ints: Vec<i64> = coords
            .iter()
            .map(|c| to_i64(c).expect("root coordinates are integers"))
            .collect();
        match &highest {
            Some((best, _, _)) if *best >= h => {}
            _ => highest = Some((h, r.clone(), ints)),
        }
    }
    let (_, highest_root, marks_i64) = highest.expect("nonempty root system");
    assert_eq!(ip(&highest_root, &highest_root), rat(2), "theta is long");
    let marks: Vec<u64> = marks_i64.iter().map(|&m| {
        assert!(m >= 1, "marks are positive");
        m as u64
    }).collect();
    let set_i: Vec<usize> = marks
        .iter()
        .enumerate()
        .filter(|(_, &a)| a == 1)
        .map(|(i, _)| i + 1)
        .collect();

    // dual Coxeter number h^v = 1 + <rho, theta>
    let hv = rat(1) + ip(&rho, &highest_root);
    let dual_coxeter = to_i64(&hv).expect("h^v is a positive integer") as u64;

    // comarks <Lambda_i, theta>
    let comarks: Vec<u64> = fundamental_weights
        .iter()
        .map(|w| to_i64(&ip(w, &highest_root)).expect("comarks are integers") as u64)
        .collect();

    let mut root_set: HashSet<WeightVec> = positive_roots.iter().cloned().collect();
    root_set.extend(positive_roots.iter().map(WeightVec::neg));

    let rs = RootSystem {
        stype: t,
        ambient_dim,
        gram,
        simple_roots,
        positive_roots,
        highest_root,
        fundamental_weights,
        rho,
        cartan,
        marks,
        comarks,
        set_i,
        dual_coxeter,
        root_set,
    };
    verify_construction(&rs);
    rs
}

/// Structural sanity of a freshly built system. These are construction
/// invariants, not user-input checks, so violations panic.
fn verify_construction(rs: &RootSystem) {
    let l = rs.rank();
    // duality of fundamental weights and simple coroots
    for i in 0..l {
        for j in 0..l {
            let p = rs.simple_coroot_pairing(&rs.fundamental_weights[i], j);
            let expect = if i == j { rat(1) } else { rat(0) };
            assert_eq!(p, expect, "fundamental weight duality at ({i},{j})");
        }
    }
    // theta = sum marks * alpha, dominant, and a root
    let mut theta = WeightVec::zero(rs.ambient_dim());
    for (i, &a) in rs.marks.iter().enumerate() {
        theta = theta.add(&rs.simple_roots[i].scaled(&rat(a as i64)));
    }
    assert_eq!(&theta, rs.highest_root(), "marks reproduce theta");
    assert!(rs.is_dominant(rs.highest_root()), "theta is dominant");
    assert!(rs.is_root(rs.highest_root()));
    // sum of positive roots = 2 rho
    let sum = rs
        .positive_roots
        .iter()
        .fold(WeightVec::zero(rs.ambient_dim()), |acc, r| acc.add(r));
    assert_eq!(sum, rs.rho.scaled(&rat(2)), "sum of positive roots is 2 rho");
}
