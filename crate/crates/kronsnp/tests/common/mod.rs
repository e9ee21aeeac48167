#![allow(dead_code)]

use std::collections::BTreeMap;

use kronsnp::partition::partitions;
use kronsnp::Partition;
use proptest::prelude::*;

/// A partition of some `n` in `lo..=hi`.
pub fn any_partition(lo: u32, hi: u32) -> impl Strategy<Value = Partition> {
    (lo..=hi).prop_flat_map(|n| {
        let ps = partitions(n);
        (0..ps.len()).prop_map(move |i| ps[i].clone())
    })
}

/// A partition of exactly `n`.
pub fn partition_of(n: u32) -> impl Strategy<Value = Partition> {
    let ps = partitions(n);
    (0..ps.len()).prop_map(move |i| ps[i].clone())
}

/// Semistandard tableaux of `shape` with content `content`, counted by filling cells one at a time.
pub fn brute_kostka(shape: &[u32], content: &[u32]) -> u64 {
    let cells: Vec<(usize, usize)> =
        shape.iter().enumerate().flat_map(|(r, &l)| (0..l as usize).map(move |c| (r, c))).collect();
    if cells.len() as u32 != content.iter().sum::<u32>() {
        return 0;
    }
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l as usize]).collect();
    let mut left = content.to_vec();
    fn rec(i: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, left: &mut Vec<u32>) -> u64 {
        if i == cells.len() {
            return 1;
        }
        let (r, c) = cells[i];
        let mut total = 0;
        for v in 0..left.len() {
            if left[v] == 0 || (c > 0 && grid[r][c - 1] > v) || (r > 0 && grid[r - 1][c] >= v) {
                continue;
            }
            grid[r][c] = v;
            left[v] -= 1;
            total += rec(i + 1, cells, grid, left);
            left[v] += 1;
        }
        total
    }
    rec(0, &cells, &mut grid, &mut left)
}

pub type Poly = BTreeMap<Vec<i64>, i64>;

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Power sum `p_m` in `k` variables.
pub fn power_sum(m: u32, k: usize) -> Poly {
    (0..k)
        .map(|i| {
            let mut e = vec![0; k];
            e[i] = m as i64;
            (e, 1)
        })
        .collect()
}

/// Vandermonde determinant `a_δ` in `k` variables as a signed sum over permutations.
pub fn vandermonde(k: usize) -> Poly {
    let mut out = Poly::new();
    let mut perm: Vec<usize> = (0..k).collect();
    fn heap(m: usize, perm: &mut Vec<usize>, out: &mut Poly) {
        if m <= 1 {
            let k = perm.len();
            let mut inv = 0;
            for i in 0..k {
                for j in i + 1..k {
                    if perm[i] > perm[j] {
                        inv += 1;
                    }
                }
            }
            let e: Vec<i64> = perm.iter().map(|&p| (k - 1 - p) as i64).collect();
            *out.entry(e).or_default() += if inv % 2 == 0 { 1 } else { -1 };
            return;
        }
        for i in 0..m {
            heap(m - 1, perm, out);
            let j = if m % 2 == 0 { i } else { 0 };
            perm.swap(j, m - 1);
        }
    }
    heap(k, &mut perm, &mut out);
    out
}

/// `χ^λ(ρ)` as the coefficient of `x^{λ+δ}` in `a_δ p_ρ` (Frobenius).
pub fn frobenius_character(lambda: &Partition, rho: &Partition) -> i64 {
    let k = lambda.len().max(1);
    let mut f = vandermonde(k);
    for &r in rho.parts() {
        f = poly_mul(&f, &power_sum(r, k));
    }
    let key: Vec<i64> = (0..k).map(|i| lambda.part(i + 1) as i64 + (k - 1 - i) as i64).collect();
    f.get(&key).copied().unwrap_or(0)
}
