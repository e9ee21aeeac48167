use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};

/// Integer partition in canonical form: weakly decreasing, no trailing zeros.
///
/// The derived order is lexicographic on the parts, so sorting in reverse
/// gives the reverse-lexicographic listing used for expansions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<u32>::deserialize(d)?;
        Partition::new(v).map_err(serde::de::Error::custom)
    }
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Caller guarantees the parts are weakly decreasing.
    pub(crate) fn from_sorted(mut parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn row(n: u32) -> Self {
        Partition::from_sorted(vec![n])
    }

    pub fn column(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// 1-based part, zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u32 {
        self.part(1)
    }

    pub fn padded(&self, k: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        if v.len() < k {
            v.resize(k, 0);
        }
        v
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.first() as usize;
        let mut c = vec![0u32; first];
        for &p in &self.0 {
            for slot in c.iter_mut().take(p as usize) {
                *slot += 1;
            }
        }
        Partition(c)
    }

    pub fn scale(&self, p: u32) -> Partition {
        Partition::from_sorted(self.0.iter().map(|&x| x * p).collect())
    }

    /// Componentwise sum, which is again a partition.
    pub fn add(&self, other: &Partition) -> Partition {
        let l = self.len().max(other.len());
        Partition::from_sorted((1..=l).map(|i| self.part(i) + other.part(i)).collect())
    }

    /// Young diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Dominance `self ⪰ other`; partitions of different sizes are incomparable.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let l = self.len().max(other.len());
        let (mut a, mut b) = (0u32, 0u32);
        for i in 1..=l {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Dominance comparison as a partial order.
    pub fn dominance_cmp(&self, other: &Partition) -> Option<Ordering> {
        match (self.dominates(other), other.dominates(self)) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Greater),
            (false, true) => Some(Ordering::Less),
            (false, false) => None,
        }
    }

    /// Order of the centralizer of a permutation with this cycle type.
    pub fn z(&self) -> num_bigint::BigUint {
        let mut z = num_bigint::BigUint::from(1u32);
        let mut i = 0;
        while i < self.0.len() {
            let p = self.0[i];
            let mut m = 0u32;
            while i < self.0.len() && self.0[i] == p {
                m += 1;
                i += 1;
                z *= p;
                z *= m;
            }
        }
        z
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses `"a,b,c"`; `"0"`, `"-"` and `""` denote the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() || s == "-" || s == "0" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

/// Builds a partition from a literal; panics on invalid input.
#[macro_export]
macro_rules! part {
    () => { $crate::Partition::empty() };
    ($($x:expr),+ $(,)?) => { $crate::Partition::new(vec![$($x),+]).expect("valid partition literal") };
}

/// Weak composition (an exponent vector).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(pub Vec<u32>);

impl Composition {
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn sorted(&self) -> Partition {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_sorted(v)
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn partitions(n: u32) -> Vec<Partition> {
    partitions_bounded(n, usize::MAX, n)
}

/// Partitions of `n` with at most `max_len` parts, each at most `max_part`,
/// in reverse-lexicographic order.
pub fn partitions_bounded(n: u32, max_len: usize, max_part: u32) -> Vec<Partition> {
    fn rec(rest: u32, max_part: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 || (max_part as u128) * (slots as u128) < rest as u128 {
            return;
        }
        for p in (1..=max_part.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_part, max_len, &mut Vec::new(), &mut out);
    out
}

/// Partitions contained in `outer` with exactly `size` boxes.
pub fn partitions_inside(outer: &Partition, size: u32) -> Vec<Partition> {
    fn rec(outer: &[u32], i: usize, rest: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::from_sorted(cur.clone()));
            return;
        }
        if i >= outer.len() {
            return;
        }
        let room: u32 = outer[i..].iter().map(|&o| o.min(cap)).sum();
        if room < rest {
            return;
        }
        for p in (1..=outer[i].min(cap).min(rest)).rev() {
            cur.push(p);
            rec(outer, i + 1, rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(outer.parts(), 0, size, u32::MAX, &mut Vec::new(), &mut out);
    out
}

/// Weak compositions of `n` into exactly `k` parts, lexicographically decreasing.
pub fn compositions(n: u32, k: usize) -> Vec<Composition> {
    fn rec(rest: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if k == 1 {
            cur.push(rest);
            out.push(Composition(cur.clone()));
            cur.pop();
            return;
        }
        for p in (0..=rest).rev() {
            cur.push(p);
            rec(rest - p, k - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        if n == 0 {
            out.push(Composition(Vec::new()));
        }
        return out;
    }
    rec(n, k, &mut Vec::new(), &mut out);
    out
}

/// Distinct permutations of `v`, in lexicographically decreasing order.
pub fn distinct_permutations(v: &[u32]) -> Vec<Vec<u32>> {
    let mut cur: Vec<u32> = v.to_vec();
    cur.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = vec![cur.clone()];
    // previous permutation in lexicographic order
    loop {
        let n = cur.len();
        if n < 2 {
            break;
        }
        let mut i = n - 1;
        while i > 0 && cur[i - 1] <= cur[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = n - 1;
        while cur[j] >= cur[i - 1] {
            j -= 1;
        }
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
    out
}

/// Maximal elements of a set of same-size partitions under dominance.
pub fn dominance_maximal(set: &[Partition]) -> Vec<Partition> {
    let mut out: Vec<Partition> = set
        .iter()
        .filter(|p| !set.iter().any(|q| q != *p && q.dominates(p)))
        .cloned()
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_and_parsing() {
        assert_eq!(Partition::new(vec![3, 1, 0, 0]).unwrap(), part![3, 1]);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!("5,3,1".parse::<Partition>().unwrap(), part![5, 3, 1]);
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("-".parse::<Partition>().unwrap(), Partition::empty());
        assert!("3,x".parse::<Partition>().is_err());
        assert_eq!(part![4, 2].to_string(), "(4,2)");
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=12).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
        assert_eq!(partitions(4)[0], part![4]);
        assert_eq!(partitions(4)[4], part![1, 1, 1, 1]);
        assert_eq!(partitions_bounded(6, 2, 6).len(), 4);
        assert_eq!(partitions_inside(&part![2, 2], 2), vec![part![2], part![1, 1]]);
    }

    #[test]
    fn dominance_and_conjugate() {
        assert!(part![3, 1].dominates(&part![2, 2]));
        assert!(!part![2, 2].dominates(&part![3, 1]));
        assert_eq!(part![3, 1, 1, 1].dominance_cmp(&part![2, 2, 2]), None);
        assert_eq!(part![4, 2, 1].conjugate(), part![3, 2, 1, 1]);
        assert_eq!(part![3, 3].z(), num_bigint::BigUint::from(18u32));
    }

    #[test]
    fn permutations_and_compositions() {
        assert_eq!(distinct_permutations(&[1, 1, 0]).len(), 3);
        assert_eq!(compositions(3, 3).len(), 10);
        assert_eq!(compositions(2, 2)[0], Composition(vec![2, 0]));
    }
}
