//! Finite-dimensional representation data of the underlying Lie algebra:
//! weight systems, multiplicities by the Freudenthal recursion, dimensions
//! by the Weyl product formula, and tensor-product decompositions by the
//! signed Racah-Speiser reflection scan. All arithmetic is exact.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::liealg::{RootSystem, WeightVec};
use crate::linalg::{rat, to_i64, Rat};

/// A dominant integral weight, stored by its Dynkin labels.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DominantWeight {
    labels: Vec<u64>,
}

impl DominantWeight {
    pub fn new(labels: Vec<u64>) -> DominantWeight {
        DominantWeight { labels }
    }

    pub fn zero(rank: usize) -> DominantWeight {
        DominantWeight {
            labels: vec![0; rank],
        }
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn is_zero(&self) -> bool {
        self.labels.iter().all(|&m| m == 0)
    }

    pub fn to_weight(&self, rs: &RootSystem) -> WeightVec {
        let labels: Vec<i64> = self.labels.iter().map(|&m| m as i64).collect();
        rs.weight_from_dynkin(&labels)
    }

    /// Read a dominant integral ambient vector back into Dynkin labels.
    pub fn from_weight(rs: &RootSystem, v: &WeightVec) -> Option<DominantWeight> {
        let labels = rs.dynkin_labels(v)?;
        if labels.iter().any(|&m| m < 0) {
            return None;
        }
        Some(DominantWeight {
            labels: labels.iter().map(|&m| m as u64).collect(),
        })
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, m) in self.labels.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "]")
    }
}

/// Sparse weight -> multiplicity map of one irreducible module.
pub type WeightMultiset = BTreeMap<WeightVec, u64>;

/// All weights of L(Lambda), grouped by depth below the highest weight.
/// A candidate mu - alpha_i is a weight iff its alpha_i-string up from mu
/// extends: p + <mu, alpha_i^v> >= 1, with p the number of weights above.
fn weight_levels(rs: &RootSystem, highest: &DominantWeight) -> Vec<Vec<WeightVec>> {
    let top = highest.to_weight(rs);
    let mut known: std::collections::HashSet<WeightVec> = [top.clone()].into();
    let mut levels = vec![vec![top]];
    loop {
        let mut next = Vec::new();
        for mu in levels.last().unwrap().clone() {
            for i in 0..rs.rank() {
                let alpha = &rs.simple_roots()[i];
                let cand = mu.sub(alpha);
                if known.contains(&cand) {
                    continue;
                }
                let mut p = 0i64;
                let mut probe = mu.add(alpha);
                while known.contains(&probe) {
                    p += 1;
                    probe = probe.add(alpha);
                }
                let c = to_i64(&rs.simple_coroot_pairing(&mu, i))
                    .expect("weights pair integrally with coroots");
                if p + c >= 1 {
                    known.insert(cand.clone());
                    next.push(cand);
                }
            }
        }
        if next.is_empty() {
            return levels;
        }
        levels.push(next);
    }
}

/// Exact weight multiplicities of L(Lambda) by the Freudenthal recursion,
/// evaluated level by level downward from the highest weight.
pub fn weight_multiplicities(rs: &RootSystem, highest: &DominantWeight) -> WeightMultiset {
    let levels = weight_levels(rs, highest);
    let rho = rs.rho();
    let top = highest.to_weight(rs);
    let top_shift = top.add(rho);
    let top_norm = rs.ip(&top_shift, &top_shift);

    let mut mult: HashMap<WeightVec, u64> = HashMap::new();
    mult.insert(top.clone(), 1);
    for level in levels.iter().skip(1) {
        for mu in level {
            let mu_shift = mu.add(rho);
            let denom = &top_norm - rs.ip(&mu_shift, &mu_shift);
            assert!(denom.is_positive(), "Freudenthal denominator positive");
            let mut sum = Rat::zero();
            for alpha in rs.positive_roots() {
                let mut j = 1i64;
                loop {
                    let up = mu.add(&alpha.scaled(&rat(j)));
                    match mult.get(&up) {
                        Some(&m) => {
                            sum += rat(m as i64) * rs.ip(&up, alpha);
                        }
                        None => break,
                    }
                    j += 1;
                }
            }
            let m = rat(2) * sum / denom;
            let m = to_i64(&m).expect("multiplicities are integers");
            assert!(m >= 1, "weights of the system have positive multiplicity");
            mult.insert(mu.clone(), m as u64);
        }
    }
    mult.into_iter().collect()
}

/// Dimension of L(Lambda) by the Weyl product formula
/// prod <Lambda+rho, alpha> / <rho, alpha> over positive roots.
pub fn weyl_dim(rs: &RootSystem, highest: &DominantWeight) -> BigUint {
    let rho = rs.rho();
    let shifted = highest.to_weight(rs).add(rho);
    let mut num = Rat::one();
    for alpha in rs.positive_roots() {
        num *= rs.ip(&shifted, alpha) / rs.ip(rho, alpha);
    }
    assert!(num.is_integer() && num.is_positive(), "Weyl dimension is a positive integer");
    num.to_integer().to_biguint().expect("positive")
}

/// Decomposition of L(a) (x) L(b) into irreducibles with multiplicities,
/// by the rho-shifted reflection scan over the weight system of the smaller
/// factor. Weights landing on a chamber wall cancel and contribute nothing.
pub fn tensor_decompose(
    rs: &RootSystem,
    a: &DominantWeight,
    b: &DominantWeight,
) -> BTreeMap<DominantWeight, u64> {
    // iterate over the smaller weight system
    let (host, scan) = if weyl_dim(rs, a) >= weyl_dim(rs, b) {
        (a, b)
    } else {
        (b, a)
    };
    let host_vec = host.to_weight(rs);
    let rho = rs.rho();
    let mut acc: BTreeMap<DominantWeight, i64> = BTreeMap::new();
    for (nu, m) in weight_multiplicities(rs, scan) {
        let shifted = host_vec.add(&nu).add(rho);
        let (dom, sign) = rs.dominant_shifted(&shifted);
        if sign == 0 {
            continue;
        }
        let target = dom.sub(rho);
        let label = DominantWeight::from_weight(rs, &target)
            .expect("shifted-dominant image minus rho is dominant integral");
        *acc.entry(label).or_insert(0) += sign as i64 * m as i64;
    }
    acc.retain(|_, &mut m| m != 0);
    assert!(
        acc.values().all(|&m| m > 0),
        "net tensor multiplicities are nonnegative"
    );
    acc.into_iter().map(|(k, m)| (k, m as u64)).collect()
}
