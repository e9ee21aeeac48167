use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Largest first-part-plus-length supported by the bead encoding.
pub const MAX_BETA: u32 = 128;

trait CharValue: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn signed_add(&self, other: &Self, negate: bool) -> Option<Self>;
}

impl CharValue for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn signed_add(&self, other: &Self, negate: bool) -> Option<Self> {
        if negate {
            self.checked_sub(*other)
        } else {
            self.checked_add(*other)
        }
    }
}

impl CharValue for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn signed_add(&self, other: &Self, negate: bool) -> Option<Self> {
        Some(if negate { self - other } else { self + other })
    }
}

/// Beta-set of a partition as a bitmask with exactly `len` beads.
fn beta_mask(lambda: &Partition) -> u128 {
    let l = lambda.len() as u32;
    lambda
        .parts()
        .iter()
        .enumerate()
        .fold(0u128, |m, (i, &p)| m | (1u128 << (p + l - 1 - i as u32)))
}

fn normalize(mask: u128) -> u128 {
    let t = mask.trailing_ones();
    if t >= 128 {
        0
    } else {
        mask >> t
    }
}

/// Murnaghan–Nakayama evaluation with a memo keyed on (shape, remaining cycle type).
///
/// Cycle parts are stripped largest first, so the memo is shared between all
/// class representatives with a common tail of small cycles.
#[derive(Default)]
pub struct CharacterTable {
    suffix_ids: HashMap<Vec<u32>, u32>,
    small: HashMap<(u128, u32), i128>,
    big: HashMap<(u128, u32), BigInt>,
}

impl CharacterTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `chi^lambda(rho)`.
    pub fn chi(&mut self, lambda: &Partition, rho: &Partition) -> Result<BigInt> {
        if lambda.size() != rho.size() {
            return Err(Error::SizeMismatch(format!("character of {lambda} at class {rho}")));
        }
        if lambda.first() + lambda.len() as u32 > MAX_BETA {
            return Err(Error::Precondition(format!(
                "{lambda} exceeds the supported bead range {MAX_BETA}"
            )));
        }
        let ids: Vec<u32> = (0..=rho.len()).map(|i| self.suffix_id(&rho.parts()[i..])).collect();
        let mask = beta_mask(lambda);
        if let Some(v) = mn_rec::<i128>(&mut self.small, mask, rho.parts(), 0, &ids) {
            return Ok(BigInt::from(v));
        }
        Ok(mn_rec::<BigInt>(&mut self.big, mask, rho.parts(), 0, &ids).expect("exact arithmetic"))
    }

    fn suffix_id(&mut self, s: &[u32]) -> u32 {
        let next = self.suffix_ids.len() as u32;
        *self.suffix_ids.entry(s.to_vec()).or_insert(next)
    }
}

fn mn_rec<T: CharValue>(
    memo: &mut HashMap<(u128, u32), T>,
    mask: u128,
    rho: &[u32],
    i: usize,
    ids: &[u32],
) -> Option<T> {
    if i == rho.len() {
        return Some(if mask == 0 { T::one() } else { T::zero() });
    }
    let key = (mask, ids[i]);
    if let Some(v) = memo.get(&key) {
        return Some(v.clone());
    }
    let r = rho[i];
    let mut acc = T::zero();
    let mut beads = mask >> r;
    let mut b = r;
    while beads != 0 {
        let tz = beads.trailing_zeros();
        b += tz;
        beads >>= tz;
        let target = b - r;
        if mask & (1u128 << target) == 0 {
            let between = if r > 1 {
                let hi = (1u128 << b) - 1;
                let lo = (1u128 << (target + 1)) - 1;
                (mask & hi & !lo).count_ones()
            } else {
                0
            };
            let moved = (mask & !(1u128 << b)) | (1u128 << target);
            let sub = mn_rec(memo, normalize(moved), rho, i + 1, ids)?;
            acc = acc.signed_add(&sub, between % 2 == 1)?;
        }
        beads >>= 1;
        b += 1;
    }
    memo.insert(key, acc.clone());
    Some(acc)
}

/// `chi^lambda(rho)` with a fresh memo.
pub fn character(lambda: &Partition, rho: &Partition) -> Result<BigInt> {
    CharacterTable::new().chi(lambda, rho)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::partition::partitions;
    use num_bigint::BigUint;

    #[test]
    fn s3_table() {
        let c = |l: Partition, r: Partition| character(&l, &r).unwrap();
        assert_eq!(c(part![2, 1], part![1, 1, 1]), BigInt::from(2));
        assert_eq!(c(part![2, 1], part![2, 1]), BigInt::from(0));
        assert_eq!(c(part![2, 1], part![3]), BigInt::from(-1));
        assert_eq!(c(part![1, 1, 1], part![2, 1]), BigInt::from(-1));
        assert_eq!(c(part![3, 1], part![2, 2]), BigInt::from(-1));
        assert_eq!(c(part![2, 2], part![2, 2]), BigInt::from(2));
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=7u32 {
            let ps = partitions(n);
            let mut t = CharacterTable::new();
            for rho in &ps {
                let s: BigInt = ps.iter().map(|l| t.chi(l, rho).unwrap().pow(2)).sum();
                assert_eq!(s, BigInt::from(rho.z()), "n={n} rho={rho}");
            }
        }
    }

    #[test]
    fn degree_squares_sum_to_factorial() {
        let n = 10u32;
        let id = Partition::column(n);
        let mut t = CharacterTable::new();
        let s: BigInt = partitions(n).iter().map(|l| t.chi(l, &id).unwrap().pow(2)).sum();
        let fact: BigUint = (1..=n).map(BigUint::from).product();
        assert_eq!(s, BigInt::from(fact));
    }
}
