//! Plethysm `s_λ[s_μ]` by monomial substitution.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::expansion::SchurExpansion;
use crate::kostka::KostkaTable;
use crate::kronecker::MonomialSupport;
use crate::partition::{compositions, partitions_bounded, Composition, Partition};
use crate::snp::{snp_verdict, SnpReport};

/// Schur expansion of a plethysm computed in finitely many variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlethysmResult {
    pub expansion: SchurExpansion,
    pub nvars: usize,
    /// Set when `nvars` is too small to see every term; only terms with at
    /// most `nvars` rows are then present.
    pub truncated: bool,
}

/// Variables needed to resolve every term of `s_λ[s_μ]`.
pub fn plethysm_default_vars(lambda: &Partition, mu: &Partition) -> usize {
    let a = lambda.size() as usize;
    (a * mu.len()).min(a * mu.size() as usize).max(1)
}

/// Exponent vectors of `s_μ(x_1,…,x_k)`, each repeated by its multiplicity.
fn schur_monomials(mu: &Partition, k: usize, kostka: &mut KostkaTable) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for a in compositions(mu.size(), k) {
        let m = kostka.get(mu, &a.0);
        let m: usize = usize::try_from(&m).expect("multiplicity fits in usize");
        for _ in 0..m {
            out.push(a.0.clone());
        }
    }
    out
}

/// Coefficients of `x^θ` for partitions `θ` in `s_λ(y_1,…,y_N)` after substituting
/// the monomials `y`. Semistandard tableaux are enumerated row by row.
fn dominant_monomials(lambda: &Partition, ys: &[Vec<u32>], k: usize) -> BTreeMap<Vec<u32>, BigUint> {
    struct Walk<'a> {
        shape: &'a [u32],
        ys: &'a [Vec<u32>],
        k: usize,
        cells: Vec<usize>,
        acc: Vec<u32>,
        out: BTreeMap<Vec<u32>, BigUint>,
        row_start: Vec<usize>,
    }
    impl Walk<'_> {
        fn rec(&mut self, row: usize, col: usize) {
            if row == self.shape.len() {
                if self.acc.windows(2).all(|w| w[0] >= w[1]) {
                    *self.out.entry(self.acc.clone()).or_default() += 1u32;
                }
                return;
            }
            if col == self.shape[row] as usize {
                self.rec(row + 1, 0);
                return;
            }
            let here = self.row_start[row] + col;
            let mut lo = 0;
            if col > 0 {
                lo = self.cells[here - 1];
            }
            if row > 0 {
                lo = lo.max(self.cells[self.row_start[row - 1] + col] + 1);
            }
            // leave room below: each lower cell in this column needs a strictly larger letter
            let below = self.shape[row + 1..].iter().take_while(|&&l| l as usize > col).count();
            let n = self.ys.len();
            if n < below + 1 {
                return;
            }
            for v in lo..n - below {
                self.cells[here] = v;
                for i in 0..self.k {
                    self.acc[i] += self.ys[v][i];
                }
                self.rec(row, col + 1);
                for i in 0..self.k {
                    self.acc[i] -= self.ys[v][i];
                }
            }
        }
    }
    let shape = lambda.parts();
    let mut row_start = Vec::with_capacity(shape.len());
    let mut s = 0;
    for &l in shape {
        row_start.push(s);
        s += l as usize;
    }
    let mut w = Walk {
        shape,
        ys,
        k,
        cells: vec![0; s],
        acc: vec![0; k],
        out: BTreeMap::new(),
        row_start,
    };
    w.rec(0, 0);
    w.out
}

/// `s_λ[s_μ]` in `nvars` variables, recovered from dominant monomials by
/// subtracting `c·s_θ` for the lexicographically largest remaining `θ`.
pub fn plethysm(lambda: &Partition, mu: &Partition, nvars: usize) -> Result<PlethysmResult> {
    if nvars == 0 {
        return Err(Error::Precondition("need at least one variable".into()));
    }
    let degree = lambda.size() * mu.size();
    let mut kostka = KostkaTable::new();
    let ys = schur_monomials(mu, nvars, &mut kostka);
    let mut mono = dominant_monomials(lambda, &ys, nvars);
    let mut e = SchurExpansion::new(degree);
    let lower: Vec<Partition> = partitions_bounded(degree, nvars, degree);
    while let Some((top, c)) = mono.iter().rev().find(|(_, c)| !c.is_zero()).map(|(k, c)| (k.clone(), c.clone())) {
        let theta = Partition::new(top)?;
        for rho in &lower {
            if !theta.dominates(rho) {
                continue;
            }
            let kk = kostka.get(&theta, rho.parts());
            if kk.is_zero() {
                continue;
            }
            let key = rho.padded(nvars);
            let sub = &c * kk;
            let cur = mono.entry(key).or_default();
            if *cur < sub {
                return Err(Error::Precondition(format!(
                    "negative intermediate coefficient at {rho} while removing s{theta}"
                )));
            }
            *cur -= sub;
        }
        e.insert(theta, c);
        mono.retain(|_, v| !v.is_zero());
    }
    Ok(PlethysmResult { expansion: e, nvars, truncated: nvars < plethysm_default_vars(lambda, mu) })
}

/// `s_λ[s_μ]` with enough variables for the full expansion.
pub fn plethysm_full(lambda: &Partition, mu: &Partition) -> Result<SchurExpansion> {
    Ok(plethysm(lambda, mu, plethysm_default_vars(lambda, mu))?.expansion)
}

/// `λ_1 μ^1 + … + λ_ℓ μ^ℓ` for the `ℓ = ℓ(λ)` lexicographically largest
/// exponent vectors `μ^i` of `s_μ`, padded to the fewest variables
/// `L ≥ |μ|` offering at least `ℓ` of them.
pub fn plethysm_max_monomial(lambda: &Partition, mu: &Partition) -> Result<Composition> {
    let ell = lambda.len();
    if ell == 0 || mu.is_empty() {
        return Ok(Composition(Vec::new()));
    }
    let mut kostka = KostkaTable::new();
    let mut len = mu.size() as usize;
    loop {
        let mut support: Vec<Vec<u32>> =
            compositions(mu.size(), len).into_iter().map(|c| c.0).filter(|a| !kostka.get(mu, a).is_zero()).collect();
        if support.len() >= ell {
            support.sort_unstable_by(|a, b| b.cmp(a));
            let mut nu = vec![0u32; len];
            for (li, v) in lambda.parts().iter().zip(&support) {
                for (x, y) in nu.iter_mut().zip(v) {
                    *x += li * y;
                }
            }
            while nu.last() == Some(&0) {
                nu.pop();
            }
            return Ok(Composition(nu));
        }
        if len > 64 * mu.size() as usize {
            return Err(Error::Precondition(format!("s{mu} has fewer than {ell} exponent vectors")));
        }
        len += 1;
    }
}

/// Saturation data for `s_λ[s_μ]` in `k` variables; exploratory output.
pub fn snp_check_plethysm(lambda: &Partition, mu: &Partition, k: usize) -> Result<SnpReport> {
    let nvars = k.min(plethysm_default_vars(lambda, mu));
    let r = plethysm(lambda, mu, nvars)?;
    Ok(snp_verdict(&MonomialSupport::from_schur(&r.expansion, k)))
}
