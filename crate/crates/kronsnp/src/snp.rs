//! Newton polytope membership and saturation checks.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::expansion::SchurExpansion;
use crate::kronecker::{monomial_support, MonomialSupport};
use crate::oracle::{dominance_maximal_terms, kron_product, KroneckerOracle};
use crate::partition::{partitions, partitions_bounded, Partition};
use crate::polytopes::{lp_feasible, simplex_point, LinearSystem, Q};

/// Outcome of a saturation check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnpReport {
    pub saturated: bool,
    /// Sorted lattice points in the hull but outside the support.
    pub missing: Vec<Vec<u32>>,
    /// For each missing point, support points with positive weights summing to one.
    pub witnesses: Vec<Vec<(Vec<u32>, Q)>>,
}

impl SnpReport {
    pub fn to_json(&self) -> serde_json::Value {
        let w: Vec<serde_json::Value> = self
            .witnesses
            .iter()
            .map(|c| {
                c.iter()
                    .map(|(p, t)| serde_json::json!({"point": p, "weight": format!("{}/{}", t.numer(), t.denom())}))
                    .collect()
            })
            .collect();
        serde_json::json!({"saturated": self.saturated, "missing": self.missing, "witnesses": w})
    }

    /// Every missing point is integral of the right degree, outside the
    /// support, and equals its witness combination.
    pub fn is_consistent_with(&self, support: &MonomialSupport) -> bool {
        self.saturated == self.missing.is_empty()
            && self.missing.len() == self.witnesses.len()
            && self.missing.iter().zip(&self.witnesses).all(|(p, w)| {
                let k = support.k();
                let degree_ok = p.len() == k && p.iter().sum::<u32>() == support.degree() && !support.contains(p);
                let total: Q = w.iter().map(|(_, t)| t.clone()).sum();
                let mut comb = vec![Q::zero(); k];
                for (x, t) in w {
                    for i in 0..k {
                        comb[i] += t * Q::from_integer(BigInt::from(x[i]));
                    }
                }
                degree_ok
                    && total.is_one()
                    && w.iter().all(|(x, t)| t.is_positive() && support.contains(x))
                    && comb.iter().zip(p).all(|(c, &v)| *c == Q::from_integer(BigInt::from(v)))
            })
    }
}

fn partial_sums(v: &[u32]) -> Vec<i64> {
    let mut s = 0i64;
    v.iter()
        .map(|&x| {
            s += x as i64;
            s
        })
        .collect()
}

fn sorted_desc(p: &[u32]) -> Vec<u32> {
    let mut v = p.to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Whether `p` lies in the convex hull of the support, by exact LP.
///
/// Supports are closed under permutations, so `p` is in the hull exactly when
/// `sort(p)` is majorized by a convex combination of sorted representatives.
pub fn in_hull(p: &[u32], support: &MonomialSupport) -> bool {
    if p.len() != support.k() || support.is_empty() || p.iter().sum::<u32>() != support.degree() {
        return false;
    }
    if support.contains(p) {
        return true;
    }
    let target = partial_sums(&sorted_desc(p));
    let reps: Vec<Vec<i64>> = support.sorted_points().map(|r| partial_sums(r)).collect();
    let k = support.k();
    // cheap necessary condition: every partial sum is reachable by some representative
    if (0..k).any(|m| reps.iter().all(|r| r[m] < target[m])) {
        return false;
    }
    let names: Vec<String> = (0..reps.len()).map(|i| format!("t{i}")).collect();
    let mut sys = LinearSystem::new(names);
    let qi = |x: i64| Q::from_integer(BigInt::from(x));
    sys.add_eq(vec![Q::one(); reps.len()], Q::one());
    for m in 0..k.saturating_sub(1) {
        sys.add_ge(reps.iter().map(|r| qi(r[m])).collect(), qi(target[m]));
    }
    for v in 0..reps.len() {
        sys.restrict(v, Some(Q::zero()), Some(Q::one()));
    }
    lp_feasible(&sys)
}

/// Convex combination of explicit support points equal to `p`, if any.
pub fn hull_witness(p: &[u32], support: &MonomialSupport) -> Option<Vec<(Vec<u32>, Q)>> {
    let k = support.k();
    if p.len() != k {
        return None;
    }
    let pts = support.expanded();
    let mut sys = LinearSystem::new((0..pts.len()).map(|i| format!("t{i}")));
    let qi = |x: u32| Q::from_integer(BigInt::from(x));
    sys.add_eq(vec![Q::one(); pts.len()], Q::one());
    for i in 0..k {
        sys.add_eq(pts.iter().map(|x| qi(x[i])).collect(), qi(p[i]));
    }
    for v in 0..pts.len() {
        sys.restrict(v, Some(Q::zero()), None);
    }
    let sol = simplex_point(&sys)?;
    Some(pts.into_iter().zip(sol.0).filter(|(_, t)| t.is_positive()).collect())
}

/// Lattice points of the right degree in the hull but outside the support.
pub fn snp_verdict(support: &MonomialSupport) -> SnpReport {
    let mut missing = Vec::new();
    let mut witnesses = Vec::new();
    if !support.is_empty() {
        let max_first = support.sorted_points().map(|r| r[0]).max().unwrap_or(0);
        for theta in partitions_bounded(support.degree(), support.k(), max_first) {
            let p = theta.padded(support.k());
            if !support.contains(&p) && in_hull(&p, support) {
                witnesses.push(hull_witness(&p, support).expect("hull membership has a witness"));
                missing.push(p);
            }
        }
    }
    SnpReport { saturated: missing.is_empty(), missing, witnesses }
}

/// `{a : λ ⪰ sort(a)}`, the support of `s_λ(x_1,…,x_k)`.
pub fn schur_support(lambda: &Partition, k: usize) -> MonomialSupport {
    let mut e = SchurExpansion::new(lambda.size());
    e.insert(lambda.clone(), One::one());
    MonomialSupport::from_schur(&e, k)
}

/// Support of a Schur expansion restricted to terms that fit in `k` rows.
pub fn schur_expansion_support(e: &SchurExpansion, k: usize) -> MonomialSupport {
    MonomialSupport::from_schur(e, k)
}

/// Saturation of `s_λ ∗ s_μ` in `k` variables, by lattice enumeration.
pub fn snp_check_kron(lambda: &Partition, mu: &Partition, k: usize) -> Result<SnpReport> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(format!("{lambda} and {mu}")));
    }
    Ok(snp_verdict(&monomial_support(lambda, mu, k)?))
}

/// Saturation certified from a unique dominance-maximal term, when there is one.
pub fn snp_check_kron_fast(lambda: &Partition, mu: &Partition) -> Result<Option<SnpReport>> {
    let e = kron_product(lambda, mu)?;
    Ok((dominance_maximal_terms(&e).len() == 1).then(|| SnpReport {
        saturated: true,
        missing: Vec::new(),
        witnesses: Vec::new(),
    }))
}

/// A rational combination of two sorted support points that was tested for absorption.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Combination {
    pub a: Vec<u32>,
    pub b: Vec<u32>,
    /// Weight of `a`.
    pub t: Q,
    pub point: Vec<Q>,
}

/// Result of the finite approximation to convexity of `∪_p (1/p) M_k(s_{pλ} ∗ s_{pμ})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitReport {
    pub p_max: u32,
    pub checked: usize,
    /// Combinations first found at level `p ≥ 2`.
    pub absorbed_later: Vec<(Combination, u32)>,
    /// Combinations not found at any level `p ≤ p_max`; this is not a refutation.
    pub not_absorbed: Vec<Combination>,
}

impl LimitReport {
    pub fn all_absorbed(&self) -> bool {
        self.not_absorbed.is_empty()
    }
}

/// Monomial membership at a scaled level, by searching `θ ⪰ sort(a)` with
/// `g(pλ, pμ, θ) > 0`.
struct LevelOracle {
    lambda: Partition,
    mu: Partition,
    full: BTreeMap<u32, MonomialSupport>,
    oracles: BTreeMap<u32, KroneckerOracle>,
    k: usize,
}

const FULL_PRODUCT_DEGREE: u32 = 24;

impl LevelOracle {
    fn contains(&mut self, p: u32, a: &[u32]) -> Result<bool> {
        let (lp, mp) = (self.lambda.scale(p), self.mu.scale(p));
        if lp.size() <= FULL_PRODUCT_DEGREE || p == 1 {
            if !self.full.contains_key(&p) {
                self.full.insert(p, monomial_support(&lp, &mp, self.k)?);
            }
            return Ok(self.full[&p].contains(a));
        }
        let target = Partition::new(a.to_vec())?;
        let max_len = lp.len() * mp.len();
        let oracle = self.oracles.entry(p).or_insert_with(|| KroneckerOracle::new(lp.size()));
        if !oracle.coeff(&lp, &mp, &target)?.is_zero() {
            return Ok(true);
        }
        for theta in partitions_bounded(lp.size(), max_len.min(target.len()), lp.size()) {
            if theta != target && theta.dominates(&target) && !oracle.coeff(&lp, &mp, &theta)?.is_zero() {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Checks pairwise combinations `t a + (1−t) b` of sorted points of
/// `M_k(s_λ ∗ s_μ)` with denominators up to `p_max` for membership in
/// `(1/p) M_k(s_{pλ} ∗ s_{pμ})` for some `p ≤ p_max`.
pub fn limit_convexity_check(lambda: &Partition, mu: &Partition, k: usize, p_max: u32) -> Result<LimitReport> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(format!("{lambda} and {mu}")));
    }
    let mut levels = LevelOracle {
        lambda: lambda.clone(),
        mu: mu.clone(),
        full: BTreeMap::new(),
        oracles: BTreeMap::new(),
        k,
    };
    let base = monomial_support(lambda, mu, k)?;
    levels.full.insert(1, base.clone());
    let reps: Vec<Vec<u32>> = base.sorted_points().cloned().collect();
    let mut report = LimitReport { p_max, checked: 0, absorbed_later: Vec::new(), not_absorbed: Vec::new() };
    let mut seen: BTreeSet<Vec<Q>> = BTreeSet::new();
    let qi = |x: u32| Q::from_integer(BigInt::from(x));
    for (ia, a) in reps.iter().enumerate() {
        for b in &reps[ia + 1..] {
            for d in 2..=p_max {
                for j in 1..d {
                    if num_integer::gcd(j, d) != 1 {
                        continue;
                    }
                    let t = Q::new(BigInt::from(j), BigInt::from(d));
                    let point: Vec<Q> =
                        a.iter().zip(b).map(|(&x, &y)| &t * qi(x) + (Q::one() - &t) * qi(y)).collect();
                    if !seen.insert(point.clone()) {
                        continue;
                    }
                    report.checked += 1;
                    let mut found = None;
                    for p in 1..=p_max {
                        let scaled: Vec<Q> = point.iter().map(|c| c * qi(p)).collect();
                        if !scaled.iter().all(|c| c.is_integer()) {
                            continue;
                        }
                        let v: Vec<u32> = scaled.iter().map(|c| u32::try_from(c.to_integer()).unwrap()).collect();
                        if levels.contains(p, &v)? {
                            found = Some(p);
                            break;
                        }
                    }
                    let comb = Combination { a: a.clone(), b: b.clone(), t, point };
                    match found {
                        Some(1) => {}
                        Some(p) => report.absorbed_later.push((comb, p)),
                        None => report.not_absorbed.push(comb),
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Smallest `p ≤ p_max` with `g(pλ, pμ, pν) > 0`.
pub fn schur_absorption_level(lambda: &Partition, mu: &Partition, nu: &Partition, p_max: u32) -> Result<Option<u32>> {
    if lambda.size() != mu.size() || mu.size() != nu.size() {
        return Err(Error::SizeMismatch(format!("{lambda}, {mu}, {nu}")));
    }
    for p in 1..=p_max {
        let mut o = KroneckerOracle::new(lambda.size() * p);
        if !o.coeff(&lambda.scale(p), &mu.scale(p), &nu.scale(p))?.is_zero() {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

/// `{ν : g(2λ, 2μ, 2ν) > 0 and g(λ, μ, ν) = 0}`, in reverse-lexicographic order.
pub fn doubling_gap(lambda: &Partition, mu: &Partition) -> Result<Vec<Partition>> {
    let n = lambda.size();
    if mu.size() != n {
        return Err(Error::SizeMismatch(format!("{lambda} and {mu}")));
    }
    let base = kron_product(lambda, mu)?;
    let (l2, m2) = (lambda.scale(2), mu.scale(2));
    let mut o = KroneckerOracle::new(2 * n);
    let max_len = lambda.len() * mu.len();
    let mut out = Vec::new();
    for nu in partitions(n) {
        if base.contains(&nu) || nu.len() > max_len {
            continue;
        }
        if !o.coeff(&l2, &m2, &nu.scale(2))?.is_zero() {
            out.push(nu);
        }
    }
    Ok(out)
}

/// Weighted combination `Σ t_i α^i` of partitions.
#[derive(Clone, Debug)]
pub struct PartitionCombo {
    pub weights: Vec<Q>,
    pub parts: Vec<Partition>,
}

/// For every combination, whether some `θ ⪰ sort(Σ t_i α^i)` has `g(λ,μ,θ) > 0`.
///
/// Each `α^i` must itself have `g(λ,μ,α^i) > 0` and the combination must be integral.
pub fn snp_positivity_consequence(lambda: &Partition, mu: &Partition, combos: &[PartitionCombo]) -> Result<bool> {
    let e = kron_product(lambda, mu)?;
    let mut all = true;
    for c in combos {
        if c.weights.len() != c.parts.len() || c.parts.is_empty() {
            return Err(Error::Precondition("weights and partitions differ in number".into()));
        }
        if c.weights.iter().any(|t| t.is_negative()) || c.weights.iter().cloned().sum::<Q>() != Q::one() {
            return Err(Error::Precondition("weights must be nonnegative and sum to one".into()));
        }
        for a in &c.parts {
            if !e.contains(a) {
                return Err(Error::Precondition(format!("g({lambda},{mu},{a}) = 0")));
            }
        }
        let len = c.parts.iter().map(Partition::len).max().unwrap_or(0);
        let mut v = vec![Q::zero(); len];
        for (t, a) in c.weights.iter().zip(&c.parts) {
            for (i, x) in a.padded(len).into_iter().enumerate() {
                v[i] += t * Q::from_integer(BigInt::from(x));
            }
        }
        if !v.iter().all(|x| x.is_integer()) {
            return Err(Error::Precondition("combination is not integral".into()));
        }
        let target = Partition::new(v.iter().map(|x| u32::try_from(x.to_integer()).unwrap()).collect())?;
        all &= e.support().any(|theta| theta.dominates(&target));
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn pts(k: usize, v: &[&[u32]]) -> MonomialSupport {
        MonomialSupport::from_points(k, &v.iter().map(|x| x.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn hull_basics() {
        let s = pts(2, &[&[2, 0], &[0, 2]]);
        assert!(in_hull(&[2, 0], &s));
        assert!(in_hull(&[1, 1], &s));
        assert!(!in_hull(&[2, 1], &s));
        let r = snp_verdict(&s);
        assert!(!r.saturated);
        assert_eq!(r.missing, vec![vec![1, 1]]);
        assert!(r.is_consistent_with(&s));
        assert_eq!(
            r.to_json().to_string(),
            r#"{"saturated":false,"missing":[[1,1]],"witnesses":[[{"point":[2,0],"weight":"1/2"},{"point":[0,2],"weight":"1/2"}]]}"#
        );
    }

    #[test]
    fn schur_supports() {
        assert_eq!(schur_support(&part![1, 1], 2).expanded(), vec![vec![1, 1]]);
        assert_eq!(schur_support(&part![2], 2).len(), 3);
        assert_eq!(schur_support(&part![3, 1], 2).expanded(), vec![vec![3, 1], vec![1, 3], vec![2, 2]]);
        assert!(schur_support(&part![1, 1, 1], 2).is_empty());
        assert!(snp_verdict(&schur_support(&part![4, 2, 1], 3)).saturated);
    }

    #[test]
    fn kron_snp_small() {
        let r = snp_check_kron(&part![2, 2], &part![2, 2], 4).unwrap();
        assert!(r.saturated);
        assert!(snp_check_kron(&part![2, 1], &part![2], 2).is_err());
        assert!(snp_check_kron_fast(&part![3, 1], &part![2, 2]).unwrap().is_some());
    }

    #[test]
    fn limit_trivial() {
        let r = limit_convexity_check(&part![2, 1], &part![2, 1], 3, 1).unwrap();
        assert_eq!(r.checked, 0);
        assert!(r.all_absorbed());
        let r = limit_convexity_check(&part![2, 2], &part![2, 2], 3, 2).unwrap();
        assert!(r.all_absorbed());
    }

    #[test]
    fn positivity_consequence_identity() {
        let (l, m) = (part![3, 1], part![2, 2]);
        let c = PartitionCombo { weights: vec![Q::one()], parts: vec![part![3, 1]] };
        assert!(snp_positivity_consequence(&l, &m, &[c]).unwrap());
        let bad = PartitionCombo { weights: vec![Q::one()], parts: vec![part![4]] };
        assert!(snp_positivity_consequence(&l, &m, &[bad]).is_err());
    }
}
