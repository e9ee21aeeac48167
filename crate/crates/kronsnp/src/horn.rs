//! LR-consistent triples, Horn inequalities and necessary conditions for
//! Kronecker positivity.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lr::LrTable;
use crate::partition::{partitions_bounded, Partition};

/// Largest `r` generated without an explicit override.
pub const DEFAULT_HORN_CAP: usize = 8;

/// `ρ(I) = (i_s − s, …, i_1 − 1)` for a strictly increasing `I ⊂ [r]`.
pub fn rho(set: &[usize]) -> Partition {
    debug_assert!(set.windows(2).all(|w| w[0] < w[1]) && set.first() != Some(&0));
    let parts: Vec<u32> = set.iter().enumerate().rev().map(|(s, &i)| (i - s - 1) as u32).collect();
    Partition::new(parts).expect("strictly increasing set gives a partition")
}

/// Equal-size subsets `I, J, K ⊂ [r]` with `c^{ρ(I)}_{ρ(J),ρ(K)} = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LrTriple {
    pub r: usize,
    pub i: Vec<usize>,
    pub j: Vec<usize>,
    pub k: Vec<usize>,
}

impl LrTriple {
    pub fn size(&self) -> usize {
        self.i.len()
    }

    /// Checks `c^{ρ(I)}_{ρ(J),ρ(K)} = 1` directly.
    pub fn is_consistent(&self) -> bool {
        let ok = |s: &[usize]| s.windows(2).all(|w| w[0] < w[1]) && s.iter().all(|&x| 1 <= x && x <= self.r);
        ok(&self.i)
            && ok(&self.j)
            && ok(&self.k)
            && self.i.len() == self.j.len()
            && self.j.len() == self.k.len()
            && crate::lr::lr_coeff(&rho(&self.i), &rho(&self.j), &rho(&self.k)).is_one()
    }

    /// The same triple with `J` and `K` exchanged.
    pub fn swapped(&self) -> LrTriple {
        LrTriple { r: self.r, i: self.i.clone(), j: self.k.clone(), k: self.j.clone() }
    }

    /// `[I, J, K]` as a JSON array of three index arrays.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!([self.i, self.j, self.k])
    }
}

fn subsets(r: usize, s: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, r: usize, s: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == s {
            out.push(cur.clone());
            return;
        }
        for x in start..=r {
            if r - x + 1 < s - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, r, s, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, r, s, &mut Vec::new(), &mut out);
    out
}

fn generate(r: usize) -> Vec<LrTriple> {
    let mut all = Vec::new();
    for s in 1..=r {
        let sets: Vec<(Vec<usize>, Partition)> = subsets(r, s).into_iter().map(|x| {
            let p = rho(&x);
            (x, p)
        }).collect();
        let found: Vec<Vec<LrTriple>> = sets
            .par_iter()
            .map_init(LrTable::new, |table, (i, ri)| {
                let mut out = Vec::new();
                for (j, rj) in &sets {
                    if !ri.contains(rj) {
                        continue;
                    }
                    for (k, rk) in &sets {
                        if rj.size() + rk.size() != ri.size() || !ri.contains(rk) {
                            continue;
                        }
                        if table.lr(ri, rj, rk).is_one() {
                            out.push(LrTriple { r, i: i.clone(), j: j.clone(), k: k.clone() });
                        }
                    }
                }
                out
            })
            .collect();
        all.extend(found.into_iter().flatten());
    }
    all
}

fn cache() -> &'static Mutex<HashMap<usize, Arc<Vec<LrTriple>>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<LrTriple>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// All LR-consistent triples over `[r]`, every size `1..=r`, ordered by size
/// and then lexicographically. Fails for `r` above [`DEFAULT_HORN_CAP`].
pub fn lr_consistent_triples(r: usize) -> Result<Arc<Vec<LrTriple>>> {
    if r > DEFAULT_HORN_CAP {
        return Err(Error::BudgetExceeded(format!(
            "r = {r} exceeds the triple generation cap {DEFAULT_HORN_CAP}; use lr_consistent_triples_uncapped"
        )));
    }
    Ok(lr_consistent_triples_uncapped(r))
}

/// As [`lr_consistent_triples`] without the size cap.
pub fn lr_consistent_triples_uncapped(r: usize) -> Arc<Vec<LrTriple>> {
    if let Some(v) = cache().lock().unwrap().get(&r) {
        return v.clone();
    }
    let v = Arc::new(generate(r));
    cache().lock().unwrap().insert(r, v.clone());
    v
}

fn check_decreasing(v: &[u32]) -> Result<()> {
    if v.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Precondition(format!("{v:?} is not weakly decreasing")));
    }
    Ok(())
}

/// Horn's criterion for `c^λ_{μν} > 0`; inputs are zero-padded to a common length.
pub fn horn_positive(lambda: &[u32], mu: &[u32], nu: &[u32]) -> Result<bool> {
    for v in [lambda, mu, nu] {
        check_decreasing(v)?;
    }
    let trim = |v: &[u32]| v.iter().take_while(|&&x| x > 0).count();
    let r = trim(lambda).max(trim(mu)).max(trim(nu));
    let sum = |v: &[u32]| v.iter().map(|&x| x as u64).sum::<u64>();
    if sum(lambda) != sum(mu) + sum(nu) {
        return Ok(false);
    }
    let at = |v: &[u32], i: usize| v.get(i - 1).copied().unwrap_or(0) as u64;
    let triples = lr_consistent_triples(r)?;
    Ok(triples.iter().all(|t| {
        t.i.iter().map(|&i| at(lambda, i)).sum::<u64>()
            <= t.j.iter().map(|&j| at(mu, j)).sum::<u64>() + t.k.iter().map(|&k| at(nu, k)).sum::<u64>()
    }))
}

/// An LR-consistent triple over `[ℓk]` with `|I ∩ block_j| = |K ∩ block_j|` for every block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MlrTriple {
    pub triple: LrTriple,
    pub ell: usize,
    pub k: usize,
}

impl MlrTriple {
    pub fn satisfies_block_condition(t: &LrTriple, ell: usize, k: usize) -> bool {
        (0..k).all(|b| {
            let inb = |x: &&usize| **x > ell * b && **x <= ell * (b + 1);
            t.i.iter().filter(inb).count() == t.k.iter().filter(inb).count()
        })
    }

    /// `D(I) = {(i, j) ∈ [k]×[ℓ] : ℓ(i−1)+j ∈ I}`.
    pub fn d_set(&self) -> Vec<(usize, usize)> {
        d_set(&self.triple.i, self.ell)
    }
}

/// `D(I) = {(i, j) : ℓ(i−1)+j ∈ I}` with `1 ≤ j ≤ ℓ`.
pub fn d_set(set: &[usize], ell: usize) -> Vec<(usize, usize)> {
    set.iter().map(|&x| ((x - 1) / ell + 1, (x - 1) % ell + 1)).collect()
}

/// The mLR-consistent triples for block size `ℓ` and `k` blocks.
pub fn mlr_consistent_triples(ell: usize, k: usize) -> Result<Vec<MlrTriple>> {
    Ok(mlr_cached(ell, k)?.as_ref().clone())
}

fn mlr_cached(ell: usize, k: usize) -> Result<Arc<Vec<MlrTriple>>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), Arc<Vec<MlrTriple>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&(ell, k)) {
        return Ok(v.clone());
    }
    let v = Arc::new(mlr_from(&lr_consistent_triples(ell * k)?, ell, k)?);
    cache.lock().unwrap().insert((ell, k), v.clone());
    Ok(v)
}

fn mlr_from(all: &[LrTriple], ell: usize, k: usize) -> Result<Vec<MlrTriple>> {
    Ok(all
        .iter()
        .filter(|t| MlrTriple::satisfies_block_condition(t, ell, k))
        .map(|t| MlrTriple { triple: t.clone(), ell, k })
        .collect())
}

/// Inequality `Σ_{vars} x ≤ bound` over a flat variable vector.
struct SumRow {
    vars: Vec<usize>,
    bound: i64,
    neg: Vec<usize>,
}

/// Depth-first search for integers `x_v ∈ [lo_v, hi_v]` with prescribed row sums
/// over consecutive groups, weakly decreasing inside each group, and every
/// `SumRow` satisfied. Rows are checked once their last variable is fixed.
struct GroupSearch<'a> {
    groups: &'a [(usize, usize, i64)],
    lo: Vec<i64>,
    hi: Vec<i64>,
    decreasing: bool,
    rows_by_last: Vec<Vec<&'a SumRow>>,
}

impl GroupSearch<'_> {
    fn run(&self) -> bool {
        let nvars = self.lo.len();
        let mut x = vec![0i64; nvars];
        self.rec(0, &mut x)
    }

    fn group_of(&self, v: usize) -> (usize, usize, i64) {
        *self.groups.iter().find(|(s, e, _)| *s <= v && v < *e).expect("variable in a group")
    }

    fn rec(&self, v: usize, x: &mut Vec<i64>) -> bool {
        if v == x.len() {
            return true;
        }
        let (start, end, total) = self.group_of(v);
        let used: i64 = x[start..v].iter().sum();
        let rest = total - used;
        let later = (end - v - 1) as i64;
        let mut hi = self.hi[v].min(rest);
        let mut lo = self.lo[v];
        if self.decreasing && v > start {
            hi = hi.min(x[v - 1]);
        }
        if v + 1 == end {
            lo = lo.max(rest);
        } else if self.decreasing {
            // the remaining group entries are at most x_v each
            if later > 0 {
                lo = lo.max((rest + later) / (later + 1));
            }
        }
        if lo > hi {
            return false;
        }
        for val in lo..=hi {
            x[v] = val;
            let ok = self.rows_by_last[v].iter().all(|row| {
                let s: i64 = row.vars.iter().map(|&u| x[u]).sum::<i64>() - row.neg.iter().map(|&u| x[u]).sum::<i64>();
                s <= row.bound
            });
            if ok && self.rec(v + 1, x) {
                return true;
            }
        }
        x[v] = 0;
        false
    }
}

fn check_sizes(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<()> {
    if lambda.size() != mu.size() || mu.size() != nu.size() {
        return Err(Error::SizeMismatch(format!("{lambda}, {mu}, {nu}")));
    }
    Ok(())
}

fn prefix_sum(p: &Partition, idx: &[usize]) -> i64 {
    idx.iter().map(|&j| p.part(j) as i64).sum()
}

/// Decides the mLR-triple system for `(λ, μ, ν)` from an explicit triple list.
pub fn kron_necessary_general_explicit(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<bool> {
    check_sizes(lambda, mu, nu)?;
    let ell = mu.len().min(nu.len());
    let k = lambda.len();
    if ell == 0 || k == 0 {
        return Ok(lambda.is_empty() && mu.is_empty() && nu.is_empty());
    }
    let triples = mlr_cached(ell, k)?;
    let mut rows = Vec::with_capacity(triples.len());
    for t in triples.iter() {
        let vars: Vec<usize> = t.d_set().into_iter().map(|(i, j)| (i - 1) * ell + (j - 1)).collect();
        let bound = prefix_sum(mu, &t.triple.j).min(prefix_sum(nu, &t.triple.j));
        rows.push(SumRow { vars, bound, neg: Vec::new() });
    }
    let groups: Vec<(usize, usize, i64)> =
        (0..k).map(|i| (i * ell, (i + 1) * ell, lambda.parts()[i] as i64)).collect();
    let nvars = ell * k;
    let mut rows_by_last: Vec<Vec<&SumRow>> = vec![Vec::new(); nvars];
    for row in &rows {
        if let Some(&last) = row.vars.iter().max() {
            rows_by_last[last].push(row);
        }
    }
    let hi: Vec<i64> = (0..nvars).map(|v| lambda.parts()[v / ell] as i64).collect();
    let search = GroupSearch { groups: &groups, lo: vec![0; nvars], hi, decreasing: true, rows_by_last };
    Ok(search.run())
}

/// Decides the same system through `∃ α: c^μ_α > 0 and c^ν_α > 0`, with
/// `α^i ⊢ λ_i` of length at most `min(ℓ(μ), ℓ(ν))`.
pub fn kron_necessary_general_lr(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<bool> {
    check_sizes(lambda, mu, nu)?;
    let ell = mu.len().min(nu.len());
    let k = lambda.len();
    if mu.len() > ell * k || nu.len() > ell * k {
        return Ok(false);
    }
    let cap = mu.first().min(nu.first());
    let choices: Vec<Vec<Partition>> = lambda
        .parts()
        .iter()
        .map(|&li| {
            partitions_bounded(li, ell, cap.min(li))
                .into_iter()
                .filter(|p| mu.contains(p) && nu.contains(p))
                .collect()
        })
        .collect();
    fn rec(t: &mut LrTable, mu: &Partition, nu: &Partition, choices: &[Vec<Partition>], cur: &mut Vec<Partition>) -> bool {
        if cur.len() == choices.len() {
            return !t.multi(mu, cur).is_zero() && !t.multi(nu, cur).is_zero();
        }
        for p in &choices[cur.len()] {
            cur.push(p.clone());
            if rec(t, mu, nu, choices, cur) {
                return true;
            }
            cur.pop();
        }
        false
    }
    Ok(rec(&mut LrTable::new(), mu, nu, &choices, &mut Vec::new()))
}

/// Necessary condition for `g(λ,μ,ν) > 0` from mLR-consistent triples.
///
/// Uses the explicit triple system when `ℓk ≤ cap` and the equivalent LR
/// positivity search otherwise.
pub fn kron_necessary_general_with_cap(lambda: &Partition, mu: &Partition, nu: &Partition, cap: usize) -> Result<bool> {
    check_sizes(lambda, mu, nu)?;
    let ell = mu.len().min(nu.len());
    if ell * lambda.len() <= cap.min(DEFAULT_HORN_CAP) {
        kron_necessary_general_explicit(lambda, mu, nu)
    } else {
        kron_necessary_general_lr(lambda, mu, nu)
    }
}

pub fn kron_necessary_general(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<bool> {
    kron_necessary_general_with_cap(lambda, mu, nu, DEFAULT_HORN_CAP)
}

/// One inequality of the two-row corollary: `Σ_{A∪C} λ_i + Σ_B y_i − Σ_C y_i ≤ bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoRowInequality {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub c: Vec<usize>,
    pub j: Vec<usize>,
    pub bound: i64,
}

/// The two index sets `J` attached to `r = 2|A|+|C|`, `b = |B|`.
pub fn two_row_j_sets(r: usize, b: usize) -> Vec<Vec<usize>> {
    let first: Vec<usize> = (1..=r).chain(r + 2..=r + b + 1).collect();
    if b == 0 {
        return vec![(1..=r).collect()];
    }
    let second: Vec<usize> = (1..r + b).chain(std::iter::once(r + 2 * b)).collect();
    if first == second {
        vec![first]
    } else {
        vec![first, second]
    }
}

/// All inequalities of the two-row corollary for `k = ℓ(λ)`.
pub fn two_row_inequalities(lambda: &Partition, mu: &Partition, nu: &Partition) -> Vec<TwoRowInequality> {
    let k = lambda.len();
    let mut out = Vec::new();
    let mut labels = vec![0u8; k];
    loop {
        let pick = |l: u8| -> Vec<usize> { (0..k).filter(|&i| labels[i] == l).map(|i| i + 1).collect() };
        let (a, b, c) = (pick(1), pick(2), pick(3));
        if !(a.is_empty() && b.is_empty() && c.is_empty()) {
            let r = 2 * a.len() + c.len();
            for j in two_row_j_sets(r, b.len()) {
                let bound = prefix_sum(mu, &j).min(prefix_sum(nu, &j));
                out.push(TwoRowInequality { a: a.clone(), b: b.clone(), c: c.clone(), j, bound });
            }
        }
        let mut pos = 0;
        while pos < k && labels[pos] == 3 {
            labels[pos] = 0;
            pos += 1;
        }
        if pos == k {
            break;
        }
        labels[pos] += 1;
    }
    out
}

/// Necessary condition for `g(λ,μ,ν) > 0` when one of the three has exactly two rows.
///
/// Arguments are permuted so that a two-row partition plays the role of `μ`.
pub fn kron_necessary_two_row(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<bool> {
    check_sizes(lambda, mu, nu)?;
    let (lambda, mu, nu) = if mu.len() == 2 {
        (lambda, mu, nu)
    } else if nu.len() == 2 {
        (lambda, nu, mu)
    } else if lambda.len() == 2 {
        (mu, lambda, nu)
    } else {
        return Err(Error::Precondition(format!("none of {lambda}, {mu}, {nu} has exactly two rows")));
    };
    let k = lambda.len();
    let lam: Vec<i64> = lambda.parts().iter().map(|&x| x as i64).collect();
    // keep the tightest bound for each (B, C); A only shifts the constant
    let mut tight: BTreeMap<(Vec<usize>, Vec<usize>), i64> = BTreeMap::new();
    for ineq in two_row_inequalities(lambda, mu, nu) {
        let constant: i64 = ineq.a.iter().chain(&ineq.c).map(|&i| lam[i - 1]).sum();
        let slack = ineq.bound - constant;
        let e = tight.entry((ineq.b, ineq.c)).or_insert(slack);
        *e = (*e).min(slack);
    }
    let rows: Vec<SumRow> = tight
        .into_iter()
        .map(|((b, c), bound)| SumRow {
            vars: b.iter().map(|&i| i - 1).collect(),
            neg: c.iter().map(|&i| i - 1).collect(),
            bound,
        })
        .collect();
    let mut rows_by_last: Vec<Vec<&SumRow>> = vec![Vec::new(); k];
    let mut always_false = false;
    for row in &rows {
        match row.vars.iter().chain(&row.neg).max() {
            Some(&last) => rows_by_last[last].push(row),
            None => always_false |= row.bound < 0,
        }
    }
    if always_false {
        return Ok(false);
    }
    let hi: Vec<i64> = lam.iter().map(|&l| l / 2).collect();
    Ok(FreeSearch { hi, rows_by_last }.run())
}

/// Depth-first search over independent boxes `x_v ∈ [0, hi_v]`.
struct FreeSearch<'a> {
    hi: Vec<i64>,
    rows_by_last: Vec<Vec<&'a SumRow>>,
}

impl FreeSearch<'_> {
    fn run(&self) -> bool {
        let mut x = vec![0i64; self.hi.len()];
        self.rec(0, &mut x)
    }

    fn rec(&self, v: usize, x: &mut Vec<i64>) -> bool {
        if v == x.len() {
            return true;
        }
        for val in 0..=self.hi[v] {
            x[v] = val;
            let ok = self.rows_by_last[v].iter().all(|row| {
                let s: i64 = row.vars.iter().map(|&u| x[u]).sum::<i64>() - row.neg.iter().map(|&u| x[u]).sum::<i64>();
                s <= row.bound
            });
            if ok && self.rec(v + 1, x) {
                return true;
            }
        }
        x[v] = 0;
        false
    }
}

/// Triples as listed in a machine-readable Horn table: `{"r": r, "triples": [[I,J,K], …]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HornFixture {
    pub r: usize,
    pub triples: Vec<[Vec<usize>; 3]>,
}

impl HornFixture {
    pub fn parse(text: &str) -> Result<Self> {
        let f: HornFixture = serde_json::from_str(text).map_err(|e| Error::Fixture(e.to_string()))?;
        for [i, j, k] in &f.triples {
            let t = LrTriple { r: f.r, i: i.clone(), j: j.clone(), k: k.clone() };
            if i.len() != j.len() || j.len() != k.len() || i.iter().chain(j).chain(k).any(|&x| x == 0 || x > f.r) {
                return Err(Error::Fixture(format!("malformed triple {:?}", t.to_json())));
            }
        }
        Ok(f)
    }
}

/// `(I, min(J,K), max(J,K))`, identifying a triple with its `J ↔ K` swap.
pub fn swap_normal_form(i: &[usize], j: &[usize], k: &[usize]) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
    let (a, b) = if j <= k { (j, k) } else { (k, j) };
    (i.to_vec(), a.to_vec(), b.to_vec())
}

/// Outcome of comparing generated triples against a table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HornComparison {
    pub generated: usize,
    pub listed: usize,
    pub only_generated: Vec<(Vec<usize>, Vec<usize>, Vec<usize>)>,
    pub only_listed: Vec<(Vec<usize>, Vec<usize>, Vec<usize>)>,
}

impl HornComparison {
    pub fn equal(&self) -> bool {
        self.only_generated.is_empty() && self.only_listed.is_empty()
    }
}

/// Compares `lr_consistent_triples(r)` with a table that lists one
/// representative per `J ↔ K` swap class and omits the full-set triple.
pub fn compare_with_table(fixture: &HornFixture) -> Result<HornComparison> {
    let r = fixture.r;
    let gen: BTreeSet<_> = lr_consistent_triples(r)?
        .iter()
        .filter(|t| t.size() < r)
        .map(|t| swap_normal_form(&t.i, &t.j, &t.k))
        .collect();
    let listed: BTreeSet<_> = fixture.triples.iter().map(|[i, j, k]| swap_normal_form(i, j, k)).collect();
    Ok(HornComparison {
        generated: gen.len(),
        listed: listed.len(),
        only_generated: gen.difference(&listed).cloned().collect(),
        only_listed: listed.difference(&gen).cloned().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn rho_values() {
        assert_eq!(rho(&[1, 2, 3]), Partition::empty());
        assert_eq!(rho(&[2]), part![1]);
        assert_eq!(rho(&[3, 5, 6]), part![3, 3, 2]);
    }

    #[test]
    fn small_triples() {
        let t1 = lr_consistent_triples(1).unwrap();
        assert_eq!(t1.len(), 1);
        assert_eq!((t1[0].i.clone(), t1[0].j.clone(), t1[0].k.clone()), (vec![1], vec![1], vec![1]));
        let t2 = lr_consistent_triples(2).unwrap();
        let sets: Vec<_> = t2.iter().map(|t| (t.i.clone(), t.j.clone(), t.k.clone())).collect();
        assert_eq!(
            sets,
            vec![
                (vec![1], vec![1], vec![1]),
                (vec![2], vec![1], vec![2]),
                (vec![2], vec![2], vec![1]),
                (vec![1, 2], vec![1, 2], vec![1, 2]),
            ]
        );
        assert!(lr_consistent_triples(9).is_err());
    }

    #[test]
    fn horn_examples() {
        assert!(horn_positive(&[6, 4, 3], &[3, 1], &[4, 3, 2]).unwrap());
        assert!(horn_positive(&[3, 1], &[3, 1], &[]).unwrap());
        assert!(!horn_positive(&[2, 2], &[3], &[1]).unwrap());
        assert!(horn_positive(&[1, 2], &[1], &[2]).is_err());
    }

    #[test]
    fn d_sets_and_blocks() {
        assert_eq!(d_set(&[1, 2, 4], 2), vec![(1, 1), (1, 2), (2, 2)]);
        let m = mlr_consistent_triples(1, 1).unwrap();
        assert_eq!(m.len(), 1);
        for t in mlr_consistent_triples(2, 2).unwrap() {
            assert!(MlrTriple::satisfies_block_condition(&t.triple, 2, 2) && t.triple.is_consistent());
        }
    }

    #[test]
    fn two_row_j() {
        assert_eq!(two_row_j_sets(0, 1), vec![vec![2]]);
        assert_eq!(two_row_j_sets(2, 0), vec![vec![1, 2]]);
        assert_eq!(two_row_j_sets(1, 2), vec![vec![1, 3, 4], vec![1, 2, 5]]);
    }

    #[test]
    fn engines_agree_small() {
        for n in 1..=6u32 {
            let ps = crate::partition::partitions(n);
            for l in &ps {
                for m in &ps {
                    for v in &ps {
                        let a = kron_necessary_general_explicit(l, m, v);
                        if let Ok(a) = a {
                            assert_eq!(a, kron_necessary_general_lr(l, m, v).unwrap(), "{l} {m} {v}");
                        }
                    }
                }
            }
        }
    }
}
