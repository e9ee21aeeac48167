use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::partition::Partition;

/// Partitions `nu ⊆ lambda` such that `lambda / nu` is a horizontal strip of `m` boxes.
pub fn horizontal_strips_removed(lambda: &Partition, m: u32) -> Vec<Partition> {
    fn rec(lam: &[u32], i: usize, rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == lam.len() {
            if rest == 0 {
                out.push(Partition::from_sorted(cur.clone()));
            }
            return;
        }
        let lo = lam.get(i + 1).copied().unwrap_or(0);
        let room: u32 = (i..lam.len()).map(|j| lam[j] - lam.get(j + 1).copied().unwrap_or(0)).sum();
        if room < rest {
            return;
        }
        let max_take = (lam[i] - lo).min(rest);
        for take in 0..=max_take {
            cur.push(lam[i] - take);
            rec(lam, i + 1, rest - take, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda.parts(), 0, m, &mut Vec::new(), &mut out);
    out
}

/// Memoized Kostka numbers. The memo lives as long as the table.
#[derive(Default)]
pub struct KostkaTable {
    memo: HashMap<(Partition, Partition), BigUint>,
}

impl KostkaTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of SSYT of shape `lambda` and content `weight`.
    pub fn get(&mut self, lambda: &Partition, weight: &[u32]) -> BigUint {
        if lambda.size() != weight.iter().sum::<u32>() {
            return BigUint::zero();
        }
        let mut w = weight.to_vec();
        w.sort_unstable_by(|a, b| b.cmp(a));
        let w = Partition::from_sorted(w);
        if !lambda.dominates(&w) {
            return BigUint::zero();
        }
        self.rec(lambda, &w)
    }

    fn rec(&mut self, lambda: &Partition, w: &Partition) -> BigUint {
        if w.is_empty() {
            return if lambda.is_empty() { BigUint::one() } else { BigUint::zero() };
        }
        if lambda.len() > w.len() {
            return BigUint::zero();
        }
        if w.len() == 1 {
            return if lambda.len() == 1 { BigUint::one() } else { BigUint::zero() };
        }
        let key = (lambda.clone(), w.clone());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let last = *w.parts().last().unwrap();
        let rest = Partition::from_sorted(w.parts()[..w.len() - 1].to_vec());
        let mut total = BigUint::zero();
        for nu in horizontal_strips_removed(lambda, last) {
            total += self.rec(&nu, &rest);
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// Kostka number `K_{lambda, weight}` for a weak composition `weight`.
pub fn kostka(lambda: &Partition, weight: &[u32]) -> BigUint {
    KostkaTable::new().get(lambda, weight)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn small_values() {
        assert_eq!(kostka(&part![3, 2], &[2, 2, 1]), BigUint::from(2u32));
        assert_eq!(kostka(&part![2, 1], &[1, 1, 1]), BigUint::from(2u32));
        assert_eq!(kostka(&part![3, 1, 1], &[1, 1, 1, 1, 1]), BigUint::from(6u32));
        assert_eq!(kostka(&part![2, 2], &[3, 1]), BigUint::zero());
        assert_eq!(kostka(&part![2, 1], &[0, 1, 2]), BigUint::from(1u32));
        assert_eq!(kostka(&Partition::empty(), &[]), BigUint::one());
    }

    #[test]
    fn strips() {
        let s = horizontal_strips_removed(&part![3, 1], 2);
        assert_eq!(s, vec![part![2], part![1, 1]]);
    }
}
