//! Closed forms for Kronecker coefficients of two-row partitions.
//!
//! Points `(i, j)` use the matrix convention of the source: row `i`,
//! column `j`, first entry `(0, 0)`.

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::util::{ceil_div, floor_div};

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

/// `σ_{k,l}(h)`: lattice points of a `k × l` rectangle reachable from `(0,h)`
/// by southwest and northwest steps.
pub fn rosas_sigma(k: i64, l: i64, h: i64) -> BigInt {
    let (lo, hi) = (k.min(l), k.max(l));
    if h < 0 {
        BigInt::zero()
    } else if h < lo {
        floor_div(&num_traits::Pow::pow(big(h) + 2, 2u32), &big(4))
    } else if h < hi {
        let s = if (h - lo) % 2 == 0 { lo - 2 } else { lo - 1 };
        rosas_sigma(k, l, s) + big((h - s) / 2) * lo
    } else if h % 2 == 0 {
        ceil_div(&big(k * l), &big(2)) - rosas_sigma(k, l, k + l - h - 4)
    } else {
        floor_div(&big(k * l), &big(2)) - rosas_sigma(k, l, k + l - h - 4)
    }
}

fn rosas_delta(a: i64, b: i64, x: i64) -> BigInt {
    if x < a {
        BigInt::zero()
    } else if x <= a + b {
        ceil_div(&big(x - a + 1), &big(2))
    } else if (x - a - b) % 2 == 0 {
        ceil_div(&big(b + 1), &big(2))
    } else {
        floor_div(&big(b + 1), &big(2))
    }
}

/// `φ(a,b,c,d)(x,y)`: points of the rectangle with corners `(a,c)` and
/// `(a+b,c+d)` reachable from `(x,y)`.
pub fn rosas_phi(a: i64, b: i64, c: i64, d: i64, x: i64, y: i64) -> BigInt {
    if y <= c {
        rosas_sigma(b + 1, d + 1, x + y - a - c)
    } else if y < c + d {
        rosas_sigma(b + 1, y - c + 1, x - a) + rosas_sigma(b + 1, c + d - y + 1, x - a) - rosas_delta(a, b, x)
    } else {
        rosas_sigma(b + 1, d + 1, x - y + c + d - a)
    }
}

fn to_nonneg(v: BigInt, what: &str) -> Result<BigUint> {
    if v.is_negative() {
        return Err(Error::Precondition(format!("{what} evaluated to {v}")));
    }
    Ok(v.to_biguint().expect("nonnegative"))
}

fn parts_i64(p: &Partition, k: usize) -> Vec<i64> {
    p.padded(k).into_iter().map(i64::from).collect()
}

/// `g(β,γ,α)` for two-row `β, γ` with `γ_2 ≤ β_2` and `ℓ(α) ≤ 4`.
pub fn rosas_kron_tworow_pair(beta: &Partition, gamma: &Partition, alpha: &Partition) -> Result<BigUint> {
    let n = beta.size();
    if gamma.size() != n || alpha.size() != n {
        return Err(Error::SizeMismatch(format!("{beta}, {gamma}, {alpha}")));
    }
    if beta.len() > 2 || gamma.len() > 2 || alpha.len() > 4 {
        return Err(Error::Precondition(format!("{beta}, {gamma} must have two rows and {alpha} at most four")));
    }
    if gamma.part(2) > beta.part(2) {
        return Err(Error::Precondition(format!("γ_2 = {} exceeds β_2 = {}", gamma.part(2), beta.part(2))));
    }
    let al = parts_i64(alpha, 4);
    let a = al[2] + al[3];
    let b = al[1] - al[2];
    let c = (al[0] - al[1]).min(al[2] - al[3]);
    let d = (al[0] + al[3] - al[1] - al[2]).abs();
    let x = i64::from(gamma.part(2));
    let y = i64::from(beta.part(2)) + 1;
    let v = rosas_phi(a, b, a + b + 1, c, x, y) - rosas_phi(a, b, a + b + c + d + 2, c, x, y);
    to_nonneg(v, "two-row pair formula")
}

/// `g(α,β,γ)` for three two-row partitions; arguments are sorted internally
/// so that `γ_2 ≤ β_2 ≤ α_2`.
pub fn rosas_kron_tworow_triple(alpha: &Partition, beta: &Partition, gamma: &Partition) -> Result<BigUint> {
    let n = alpha.size();
    if beta.size() != n || gamma.size() != n {
        return Err(Error::SizeMismatch(format!("{alpha}, {beta}, {gamma}")));
    }
    if alpha.len() > 2 || beta.len() > 2 || gamma.len() > 2 {
        return Err(Error::Precondition(format!("{alpha}, {beta}, {gamma} must have at most two rows")));
    }
    let mut s = [alpha.part(2) as i64, beta.part(2) as i64, gamma.part(2) as i64];
    s.sort_unstable();
    let (g2, b2, a2) = (s[0], s[1], s[2]);
    let n = i64::from(n);
    let x = ceil_div(&big(b2 + g2 + a2 - n), &big(2)).max(BigInt::zero());
    let y = ceil_div(&big(b2 + g2 - a2 + 1), &big(2));
    Ok((y - x).max(BigInt::zero()).to_biguint().expect("nonnegative"))
}

/// Whether `⟨s_μ ∗ s_ν, h_λ⟩ > 0` for two-row partitions with `μ_2 ≥ ν_2`.
pub fn two_row_h_positive(mu: &Partition, nu: &Partition, lambda: &Partition) -> Result<bool> {
    let n = mu.size();
    if nu.size() != n || lambda.size() != n {
        return Err(Error::SizeMismatch(format!("{mu}, {nu}, {lambda}")));
    }
    if mu.len() > 2 || nu.len() > 2 || lambda.len() > 2 {
        return Err(Error::Precondition("all arguments must have at most two rows".into()));
    }
    if mu.part(2) < nu.part(2) {
        return Err(Error::Precondition(format!("μ_2 = {} is below ν_2 = {}", mu.part(2), nu.part(2))));
    }
    Ok(lambda.part(2) >= mu.part(2) - nu.part(2))
}

/// Largest first row in `s_μ ∗ s_ν` for two-row `μ` and three-row `ν` with `μ_1 ≤ ν_1`.
pub fn dvir_max_first_row(mu: &Partition, nu: &Partition) -> Result<u32> {
    if mu.size() != nu.size() {
        return Err(Error::SizeMismatch(format!("{mu}, {nu}")));
    }
    if mu.len() > 2 || nu.len() > 3 || mu.first() > nu.first() {
        return Err(Error::Precondition(format!("need ℓ({mu}) ≤ 2, ℓ({nu}) ≤ 3 and μ_1 ≤ ν_1")));
    }
    Ok(mu.first() + nu.part(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn worked_example() {
        assert_eq!(rosas_sigma(2, 2, -1), BigInt::zero());
        assert_eq!(rosas_sigma(2, 2, 1), big(2));
        assert_eq!(rosas_phi(4, 1, 6, 1, 5, 7), big(2));
        assert_eq!(rosas_phi(4, 1, 9, 1, 5, 7), big(0));
        let g = rosas_kron_tworow_pair(&part![7, 6], &part![8, 5], &part![5, 4, 3, 1]).unwrap();
        assert_eq!(g, BigUint::from(2u32));
        assert!(rosas_kron_tworow_pair(&part![8, 5], &part![7, 6], &part![5, 4, 3, 1]).is_err());
    }

    #[test]
    fn triple_examples() {
        let g = |a: Partition| rosas_kron_tworow_triple(&a, &a, &a).unwrap();
        assert_eq!(g(part![1, 1]), BigUint::zero());
        assert_eq!(g(part![2, 2]), BigUint::from(1u32));
    }

    #[test]
    fn h_positivity_and_first_row() {
        assert!(two_row_h_positive(&part![7, 6], &part![8, 5], &part![12, 1]).unwrap());
        assert!(!two_row_h_positive(&part![7, 6], &part![8, 5], &part![13]).unwrap());
        assert_eq!(dvir_max_first_row(&part![3, 3], &part![4, 1, 1]).unwrap(), 4);
        assert!(dvir_max_first_row(&part![4, 2], &part![3, 2, 1]).is_err());
    }
}
