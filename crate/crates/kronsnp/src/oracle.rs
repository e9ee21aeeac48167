use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::character::{CharacterTable, MAX_BETA};
use crate::error::{Error, Result};
use crate::expansion::SchurExpansion;
use crate::partition::{dominance_maximal, partitions, Partition};

/// Character-theoretic Kronecker coefficients for a fixed degree `n`.
///
/// `g(λ,μ,ν) = (1/n!) Σ_ρ |C_ρ| χ^λ(ρ) χ^μ(ρ) χ^ν(ρ)`. Character vectors are
/// cached per shape for the lifetime of the oracle.
pub struct KroneckerOracle {
    n: u32,
    classes: Vec<Partition>,
    class_sizes: Vec<BigInt>,
    factorial: BigInt,
    table: CharacterTable,
    vectors: HashMap<Partition, Arc<Vec<BigInt>>>,
}

impl KroneckerOracle {
    pub fn new(n: u32) -> Self {
        let classes = partitions(n);
        let factorial: BigUint = (1..=n).map(BigUint::from).product();
        let class_sizes = classes.iter().map(|r| BigInt::from(&factorial / r.z())).collect();
        KroneckerOracle {
            n,
            classes,
            class_sizes,
            factorial: BigInt::from(factorial),
            table: CharacterTable::new(),
            vectors: HashMap::new(),
        }
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn classes(&self) -> &[Partition] {
        &self.classes
    }

    fn check(&self, p: &Partition) -> Result<()> {
        if p.size() != self.n {
            return Err(Error::SizeMismatch(format!("{p} is not a partition of {}", self.n)));
        }
        Ok(())
    }

    /// Values `χ^λ(ρ)` over all classes, in the order of [`Self::classes`].
    pub fn character_vector(&mut self, lambda: &Partition) -> Result<Arc<Vec<BigInt>>> {
        self.check(lambda)?;
        if let Some(v) = self.vectors.get(lambda) {
            return Ok(v.clone());
        }
        let v = self
            .classes
            .iter()
            .map(|rho| self.table.chi(lambda, rho))
            .collect::<Result<Vec<_>>>()?;
        let v = Arc::new(v);
        self.vectors.insert(lambda.clone(), v.clone());
        Ok(v)
    }

    /// Weighted pair vector `|C_ρ| χ^λ(ρ) χ^μ(ρ)`.
    fn pair_weights(&mut self, lambda: &Partition, mu: &Partition) -> Result<Vec<BigInt>> {
        let a = self.character_vector(lambda)?;
        let b = self.character_vector(mu)?;
        Ok(a.iter().zip(b.iter()).zip(&self.class_sizes).map(|((x, y), c)| x * y * c).collect())
    }

    fn finish(&self, total: BigInt) -> BigUint {
        let (q, r) = (&total / &self.factorial, &total % &self.factorial);
        assert!(r.is_zero() && !q.is_negative(), "character sum is not a nonnegative multiple of n!");
        q.to_biguint().unwrap()
    }

    pub fn coeff(&mut self, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigUint> {
        let w = self.pair_weights(lambda, mu)?;
        let c = self.character_vector(nu)?;
        let total: BigInt = w.iter().zip(c.iter()).filter(|(x, _)| !x.is_zero()).map(|(x, y)| x * y).sum();
        Ok(self.finish(total))
    }

    /// Expansion of `s_λ * s_μ`; target shapes are evaluated in parallel.
    pub fn product(&mut self, lambda: &Partition, mu: &Partition) -> Result<SchurExpansion> {
        if self.n + 1 > MAX_BETA {
            return Err(Error::Precondition(format!("degree {} exceeds the supported bead range", self.n)));
        }
        let w = self.pair_weights(lambda, mu)?;
        let nz: Vec<usize> = (0..w.len()).filter(|&i| !w[i].is_zero()).collect();
        let classes: Vec<Partition> = nz.iter().map(|&i| self.classes[i].clone()).collect();
        let targets = self.classes.clone();
        let rows: Vec<(Partition, BigInt)> = targets
            .par_iter()
            .map_init(CharacterTable::new, |t, nu| {
                let s: BigInt = nz
                    .iter()
                    .zip(&classes)
                    .map(|(&i, rho)| &w[i] * t.chi(nu, rho).expect("degree within bead range"))
                    .sum();
                (nu.clone(), s)
            })
            .collect();
        let mut e = SchurExpansion::new(self.n);
        for (nu, s) in rows {
            let g = self.finish(s);
            if !g.is_zero() {
                e.insert(nu, g);
            }
        }
        Ok(e)
    }
}

/// Kronecker coefficient `g(λ,μ,ν)` via the character formula.
pub fn kron_coeff_oracle(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigUint> {
    let n = lambda.size();
    if mu.size() != n || nu.size() != n {
        return Err(Error::SizeMismatch(format!("{lambda}, {mu}, {nu} have different sizes")));
    }
    KroneckerOracle::new(n).coeff(lambda, mu, nu)
}

/// Full Schur expansion of `s_λ * s_μ`.
pub fn kron_product(lambda: &Partition, mu: &Partition) -> Result<SchurExpansion> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(format!("{lambda} and {mu} have different sizes")));
    }
    KroneckerOracle::new(lambda.size()).product(lambda, mu)
}

/// Dominance-maximal partitions with a nonzero coefficient.
pub fn dominance_maximal_terms(e: &SchurExpansion) -> Vec<Partition> {
    let support: Vec<Partition> = e.support().cloned().collect();
    dominance_maximal(&support)
}
