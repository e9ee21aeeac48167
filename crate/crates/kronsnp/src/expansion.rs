use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Nonnegative Schur-basis expansion of a homogeneous symmetric function.
///
/// Zero coefficients are never stored. Iteration is reverse-lexicographic.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    n: u32,
    terms: BTreeMap<Partition, BigUint>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Partition,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct ExpansionJson {
    n: u32,
    terms: Vec<TermJson>,
}

impl SchurExpansion {
    pub fn new(n: u32) -> Self {
        SchurExpansion { n, terms: BTreeMap::new() }
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    /// Adds `c` to the coefficient of `p`.
    pub fn insert(&mut self, p: Partition, c: BigUint) {
        assert_eq!(p.size(), self.n, "term {p} has the wrong degree");
        if c.is_zero() {
            return;
        }
        *self.terms.entry(p).or_default() += c;
    }

    pub fn coeff(&self, p: &Partition) -> BigUint {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn contains(&self, p: &Partition) -> bool {
        self.terms.contains_key(p)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigUint)> {
        self.terms.iter().rev()
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.terms.keys().rev()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let j = ExpansionJson {
            n: self.n,
            terms: self
                .iter()
                .map(|(p, c)| TermJson { partition: p.clone(), coeff: c.to_string() })
                .collect(),
        };
        serde_json::to_value(j).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let j: ExpansionJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut e = SchurExpansion::new(j.n);
        for t in j.terms {
            if t.partition.size() != j.n {
                return Err(Error::SizeMismatch(format!("term {} in degree {}", t.partition, j.n)));
            }
            let c: BigUint = t.coeff.parse().map_err(|_| Error::Parse(format!("coefficient {:?}", t.coeff)))?;
            e.insert(t.partition, c);
        }
        Ok(e)
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c == &BigUint::from(1u32) {
                write!(f, "s{p}")?;
            } else {
                write!(f, "{c} s{p}")?;
            }
        }
        Ok(())
    }
}
