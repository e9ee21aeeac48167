use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{partitions_inside, Composition, Partition};

/// Skew shape `outer / inner` with `inner ⊆ outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::Precondition(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> u32 {
        self.outer.size() - self.inner.size()
    }

    /// Row lengths sorted into a partition.
    pub fn row_partition(&self) -> Partition {
        let mut rows: Vec<u32> = (1..=self.outer.len()).map(|i| self.outer.part(i) - self.inner.part(i)).collect();
        rows.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_sorted(rows)
    }
}

/// Target with an ordered list of factors, for `c^target_{factors}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiLrInstance {
    pub target: Partition,
    pub factors: Vec<Partition>,
}

type RowKey = (usize, Vec<u32>, Vec<u32>);

/// Counts LR tableaux of shape `lam / mu` and content `nu`, one row at a time.
///
/// A row is a weakly increasing word, so it is fixed by its letter counts.
/// Column strictness is checked against the previous row and the ballot
/// condition against the running content (a row is read right to left).
struct LrCounter<'a> {
    lam: &'a [u32],
    mu: &'a Partition,
    nu: &'a [u32],
    memo: HashMap<RowKey, BigUint>,
}

impl LrCounter<'_> {
    fn count(&mut self, i: usize, tot: &[u32], prev: &[u32]) -> BigUint {
        if i == self.lam.len() {
            return if tot == self.nu { BigUint::one() } else { BigUint::zero() };
        }
        let key = (i, tot.to_vec(), prev.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let start = self.mu.part(i + 1) as usize;
        let width = self.lam[i] as usize - start;
        let prev_start = if i == 0 { 0 } else { self.mu.part(i) as usize };
        let top = (i + 1).min(self.nu.len());
        let mut rows = Vec::new();
        let mut cur = vec![0u32; self.nu.len()];
        self.rows(1, top, start, width, prev_start, prev, tot, &mut cur, &mut rows);
        let mut total = BigUint::zero();
        for row in rows {
            let next: Vec<u32> = tot.iter().zip(&row).map(|(a, b)| a + b).collect();
            total += self.count(i + 1, &next, &row);
        }
        self.memo.insert(key, total.clone());
        total
    }

    #[allow(clippy::too_many_arguments)]
    fn rows(
        &self,
        j: usize,
        top: usize,
        col: usize,
        left: usize,
        prev_start: usize,
        prev: &[u32],
        tot: &[u32],
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        if j > top {
            return;
        }
        let cap = self.nu[j - 1] - tot[j - 1];
        let ballot = if j >= 2 { tot[j - 2] - tot[j - 1] } else { u32::MAX };
        let max_m = (left as u32).min(cap).min(ballot);
        for m in (0..=max_m).rev() {
            if m > 0 {
                let last = col + m as usize - 1;
                if last >= prev_start && prev_value(prev, prev_start, last) >= j as u32 {
                    continue;
                }
            }
            cur[j - 1] = m;
            self.rows(j + 1, top, col + m as usize, left - m as usize, prev_start, prev, tot, cur, out);
            cur[j - 1] = 0;
        }
    }
}

/// Letter at column `c` of a row filled with `counts`, starting at `start`.
fn prev_value(counts: &[u32], start: usize, c: usize) -> u32 {
    let mut edge = start;
    for (j, &m) in counts.iter().enumerate() {
        edge += m as usize;
        if c < edge {
            return j as u32 + 1;
        }
    }
    0
}

fn lr_count(lam: &Partition, mu: &Partition, nu: &Partition) -> BigUint {
    if lam.size() != mu.size() + nu.size() || !lam.contains(mu) || !lam.contains(nu) {
        return BigUint::zero();
    }
    if nu.is_empty() {
        return BigUint::one();
    }
    let mut c = LrCounter { lam: lam.parts(), mu, nu: nu.parts(), memo: HashMap::new() };
    let zero = vec![0u32; nu.len()];
    c.count(0, &zero, &zero)
}

/// Memo tables for LR and multi-LR coefficients.
#[derive(Default)]
pub struct LrTable {
    lr: HashMap<(Partition, Partition, Partition), BigUint>,
    multi: HashMap<(Partition, Vec<Partition>), BigUint>,
}

impl LrTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `c^λ_{μν}`.
    pub fn lr(&mut self, lam: &Partition, mu: &Partition, nu: &Partition) -> BigUint {
        let (a, b) = if mu <= nu { (mu, nu) } else { (nu, mu) };
        let key = (lam.clone(), a.clone(), b.clone());
        if let Some(v) = self.lr.get(&key) {
            return v.clone();
        }
        let v = if a.size() <= b.size() { lr_count(lam, b, a) } else { lr_count(lam, a, b) };
        self.lr.insert(key, v.clone());
        v
    }

    /// `c^λ_{ν^1,…,ν^k}` by peeling off the first factor.
    pub fn multi(&mut self, lam: &Partition, factors: &[Partition]) -> BigUint {
        let total: u32 = factors.iter().map(Partition::size).sum();
        if total != lam.size() {
            return BigUint::zero();
        }
        match factors.len() {
            0 => return if lam.is_empty() { BigUint::one() } else { BigUint::zero() },
            1 => return if lam == &factors[0] { BigUint::one() } else { BigUint::zero() },
            2 => return self.lr(lam, &factors[0], &factors[1]),
            _ => {}
        }
        let key = (lam.clone(), factors.to_vec());
        if let Some(v) = self.multi.get(&key) {
            return v.clone();
        }
        let rest_size = lam.size() - factors[0].size();
        let mut sum = BigUint::zero();
        for tau in partitions_inside(lam, rest_size) {
            let c = self.lr(lam, &factors[0], &tau);
            if !c.is_zero() {
                let m = self.multi(&tau, &factors[1..]);
                if !m.is_zero() {
                    sum += c * m;
                }
            }
        }
        self.multi.insert(key, sum.clone());
        sum
    }
}

/// Littlewood–Richardson coefficient `c^λ_{μν}`.
pub fn lr_coeff(lam: &Partition, mu: &Partition, nu: &Partition) -> BigUint {
    lr_count(lam, mu, nu)
}

/// Multi-LR coefficient `c^target_{factors}`.
pub fn multi_lr(inst: &MultiLrInstance) -> BigUint {
    LrTable::new().multi(&inst.target, &inst.factors)
}

/// Reduction of a multi-LR coefficient to `c^{ω(α)}_{target, δ_k}`.
///
/// Returns `(ω(α), target, δ_k(n, ℓ))` with
/// `ω(α) = ((n(k−1))^ℓ + α^1, …, α^k)` and `δ_k = ((n(k−1))^ℓ, …, 0^ℓ)`.
pub fn embed_multi_lr(inst: &MultiLrInstance, ell: usize) -> Result<(Partition, Partition, Partition)> {
    let n = inst.target.size();
    let total: u32 = inst.factors.iter().map(Partition::size).sum();
    if total != n {
        return Err(Error::SizeMismatch(format!("factors have total size {total}, target {n}")));
    }
    if let Some(f) = inst.factors.iter().find(|f| f.len() > ell) {
        return Err(Error::Precondition(format!("factor {f} is longer than {ell}")));
    }
    let k = inst.factors.len() as u32;
    let mut omega = Vec::with_capacity(ell * k as usize);
    let mut delta = Vec::with_capacity(ell * k as usize);
    for (i, f) in inst.factors.iter().enumerate() {
        let shift = n * (k - 1 - i as u32);
        for j in 1..=ell {
            omega.push(shift + f.part(j));
            delta.push(shift);
        }
    }
    Ok((Partition::new(omega)?, inst.target.clone(), Partition::from_sorted(delta)))
}

/// Whether `α` lies in `P(μ; a)`: matching sizes and `c^μ_{α^1…α^k} > 0`.
pub fn p_set_membership(mu: &Partition, a: &Composition, alpha: &[Partition]) -> bool {
    alpha.len() == a.0.len()
        && alpha.iter().zip(&a.0).all(|(p, &s)| p.size() == s)
        && !LrTable::new().multi(mu, alpha).is_zero()
}

/// A point of `P(μ; a)`, built by peeling `a_k, a_{k−1}, …` boxes off `μ` in
/// reverse row-reading order and taking the sorted row lengths of each strip.
pub fn p_set_witness(mu: &Partition, a: &Composition) -> Result<Vec<Partition>> {
    if mu.size() != a.size() {
        return Err(Error::SizeMismatch(format!("|{mu}| != |{:?}|", a.0)));
    }
    let mut shape = mu.clone();
    let mut alpha = vec![Partition::empty(); a.0.len()];
    for (i, &ai) in a.0.iter().enumerate().rev() {
        let keep = shape.size() - ai;
        let mut rows = Vec::new();
        let mut left = keep;
        for &p in shape.parts() {
            let t = p.min(left);
            rows.push(t);
            left -= t;
        }
        let inner = Partition::from_sorted(rows);
        alpha[i] = SkewShape::new(shape.clone(), inner.clone())?.row_partition();
        shape = inner;
    }
    debug_assert!(p_set_membership(mu, a, &alpha));
    Ok(alpha)
}
