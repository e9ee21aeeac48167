use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expansion::SchurExpansion;
use crate::kostka::KostkaTable;
use crate::lr::LrTable;
use crate::oracle::kron_product;
use crate::partition::{distinct_permutations, partitions_bounded, Composition, Partition};

/// Permutation-closed set of exponent vectors in `k` variables of common degree.
///
/// Only sorted (weakly decreasing) representatives are stored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialSupport {
    k: usize,
    degree: u32,
    sorted_points: BTreeSet<Vec<u32>>,
}

impl MonomialSupport {
    pub fn new(k: usize, degree: u32) -> Self {
        MonomialSupport { k, degree, sorted_points: BTreeSet::new() }
    }

    /// Builds a support from explicit vectors, which must form a permutation-closed set.
    pub fn from_points(k: usize, points: &[Vec<u32>]) -> Result<Self> {
        let degree = points.first().map(|p| p.iter().sum()).unwrap_or(0);
        let mut s = MonomialSupport::new(k, degree);
        let given: BTreeSet<&Vec<u32>> = points.iter().collect();
        for p in points {
            if p.len() != k || p.iter().sum::<u32>() != degree {
                return Err(Error::Precondition(format!("{p:?} has the wrong length or degree")));
            }
            s.sorted_points.insert(sort_desc(p));
        }
        if s.expanded().len() != given.len() {
            return Err(Error::Precondition("point set is not closed under permutations".into()));
        }
        Ok(s)
    }

    /// Points `a` with some term `ν` of `e` satisfying `ν ⪰ sort(a)`.
    pub fn from_schur(e: &SchurExpansion, k: usize) -> Self {
        let n = e.degree();
        let terms: Vec<&Partition> = e.support().collect();
        let mut s = MonomialSupport::new(k, n);
        for theta in partitions_bounded(n, k, n) {
            if terms.iter().any(|t| t.dominates(&theta)) {
                s.sorted_points.insert(theta.padded(k));
            }
        }
        s
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_empty(&self) -> bool {
        self.sorted_points.is_empty()
    }

    pub fn sorted_points(&self) -> impl Iterator<Item = &Vec<u32>> {
        self.sorted_points.iter().rev()
    }

    pub fn contains(&self, a: &[u32]) -> bool {
        a.len() == self.k && self.sorted_points.contains(&sort_desc(a))
    }

    /// All points, every permutation listed explicitly.
    pub fn expanded(&self) -> Vec<Vec<u32>> {
        self.sorted_points().flat_map(|p| distinct_permutations(p)).collect()
    }

    pub fn len(&self) -> usize {
        self.sorted_points().map(|p| distinct_permutations(p).len()).sum()
    }

    /// Checks permutation closure of the explicit point set.
    pub fn is_permutation_closed(&self) -> bool {
        let pts: BTreeSet<Vec<u32>> = self.expanded().into_iter().collect();
        pts.iter().all(|p| distinct_permutations(p).iter().all(|q| pts.contains(q)))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "k": self.k,
            "degree": self.degree,
            "sorted_points": self.sorted_points().collect::<Vec<_>>(),
        })
    }
}

fn sort_desc(a: &[u32]) -> Vec<u32> {
    let mut v = a.to_vec();
    v.sort_unstable_by(|x, y| y.cmp(x));
    v
}

/// Monomial support of `s_λ ∗ s_μ` in `k` variables.
pub fn monomial_support(lambda: &Partition, mu: &Partition, k: usize) -> Result<MonomialSupport> {
    let e = kron_product(lambda, mu)?;
    let s = MonomialSupport::from_schur(&e, k);
    debug_assert!(s.is_permutation_closed());
    Ok(s)
}

/// Coefficient of `x^a` in `s_μ ∗ s_ν` as `Σ_α c^μ_{α^1…α^k} c^ν_{α^1…α^k}` over `α^i ⊢ a_i`.
pub fn monomial_coeff_multilr(mu: &Partition, nu: &Partition, a: &Composition) -> Result<BigUint> {
    monomial_coeff_multilr_with(&mut LrTable::new(), mu, nu, a)
}

/// As [`monomial_coeff_multilr`], reusing a caller-owned memo table.
pub fn monomial_coeff_multilr_with(
    table: &mut LrTable,
    mu: &Partition,
    nu: &Partition,
    a: &Composition,
) -> Result<BigUint> {
    let n = mu.size();
    if nu.size() != n || a.size() != n {
        return Err(Error::SizeMismatch(format!("{mu}, {nu}, {:?}", a.0)));
    }
    let max_len = mu.len().min(nu.len());
    let choices: Vec<Vec<Partition>> = a
        .0
        .iter()
        .map(|&ai| {
            partitions_bounded(ai, max_len, mu.first().min(nu.first()).min(ai))
                .into_iter()
                .filter(|p| mu.contains(p) && nu.contains(p))
                .collect()
        })
        .collect();
    let mut total = BigUint::zero();
    let mut cur = Vec::with_capacity(a.0.len());
    fn rec(
        t: &mut LrTable,
        mu: &Partition,
        nu: &Partition,
        choices: &[Vec<Partition>],
        cur: &mut Vec<Partition>,
        total: &mut BigUint,
    ) {
        if cur.len() == choices.len() {
            let x = t.multi(mu, cur);
            if !x.is_zero() {
                *total += x * t.multi(nu, cur);
            }
            return;
        }
        for p in &choices[cur.len()] {
            cur.push(p.clone());
            rec(t, mu, nu, choices, cur, total);
            cur.pop();
        }
    }
    rec(table, mu, nu, &choices, &mut cur, &mut total);
    Ok(total)
}

/// Coefficient of `x^a` in `s_μ ∗ s_ν` as `Σ_θ g(μ,ν,θ) K_{θ,a}`.
pub fn monomial_coeff_kostka(e: &SchurExpansion, a: &Composition, kostka: &mut KostkaTable) -> BigUint {
    e.iter().map(|(theta, g)| g * kostka.get(theta, &a.0)).sum()
}
