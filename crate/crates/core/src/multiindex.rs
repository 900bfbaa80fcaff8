//! Multi-indices `k = (k_1, ..., k_n)` of nonnegative integers.
//!
//! They play three roles: exponents of series terms `z^k`, orders of partial
//! derivatives `∂^α`, and keys of coefficient tables. Ordering is graded
//! lexicographic (degree first, then components left to right), which fixes
//! the iteration order of every coefficient table and hence every file the
//! toolkit writes.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(components: Vec<u32>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptyMultiIndex);
        }
        Ok(Self(components))
    }

    /// The zero index of length `n`.
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "multi-index length must be at least 1");
        Self(vec![0; n])
    }

    /// The `j`-th unit index of length `n`.
    pub fn unit(n: usize, j: usize) -> Self {
        let mut k = Self::zeros(n);
        k.0[j] = 1;
        k
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[u32] {
        &self.0
    }

    /// `|k| = Σ k_j`.
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&c| u64::from(c)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// `k! = Π k_j!`, computed in checked 128-bit arithmetic.
    pub fn factorial(&self) -> Result<u128> {
        let mut acc: u128 = 1;
        for &c in &self.0 {
            for i in 2..=u128::from(c) {
                acc = acc
                    .checked_mul(i)
                    .ok_or_else(|| Error::FactorialOverflow(self.to_string()))?;
            }
        }
        Ok(acc)
    }

    /// `k!` as a float. Exact up to 2^53 and correctly rounded beyond that,
    /// since it goes through the checked integer product.
    pub fn factorial_f64(&self) -> Result<f64> {
        self.factorial().map(|v| v as f64)
    }

    /// `Π_j k_j! / (k_j - α_j)!`, the factor produced by differentiating
    /// `z^k` with `∂^α`. Zero when some `α_j > k_j`.
    pub fn falling_factorial(&self, alpha: &MultiIndex) -> f64 {
        debug_assert_eq!(self.dim(), alpha.dim());
        let mut acc = 1.0;
        for (&k, &a) in self.0.iter().zip(&alpha.0) {
            if a > k {
                return 0.0;
            }
            for i in (k - a + 1)..=k {
                acc *= f64::from(i);
            }
        }
        acc
    }

    /// Componentwise `k ≥ α`.
    pub fn dominates(&self, alpha: &MultiIndex) -> bool {
        self.dim() == alpha.dim() && self.0.iter().zip(&alpha.0).all(|(k, a)| k >= a)
    }

    /// `k - α` when `k ≥ α` componentwise.
    pub fn checked_sub(&self, alpha: &MultiIndex) -> Option<MultiIndex> {
        if !self.dominates(alpha) {
            return None;
        }
        Some(Self(
            self.0.iter().zip(&alpha.0).map(|(k, a)| k - a).collect(),
        ))
    }

    /// Componentwise sum. Panics on length mismatch.
    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        assert_eq!(self.dim(), other.dim(), "multi-index length mismatch");
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// All indices of length `n` with every component `≥ min_component` and
    /// degree `≤ max_degree`, in graded lexicographic order.
    pub fn enumerate(n: usize, max_degree: u32, min_component: u32) -> Vec<MultiIndex> {
        assert!(n >= 1, "multi-index length must be at least 1");
        let mut out = Vec::new();
        let floor = min_component as u64 * n as u64;
        for d in 0..=max_degree {
            if u64::from(d) < floor {
                continue;
            }
            let mut current = Vec::with_capacity(n);
            push_compositions(d, n, min_component, &mut current, &mut out);
        }
        out
    }

    /// Parses `"1,2,0"` (whitespace tolerated).
    pub fn parse_list(s: &str) -> Result<Self> {
        s.parse()
    }
}

fn push_compositions(
    remaining: u32,
    slots: usize,
    min: u32,
    current: &mut Vec<u32>,
    out: &mut Vec<MultiIndex>,
) {
    if slots == 1 {
        if remaining >= min {
            current.push(remaining);
            out.push(MultiIndex(current.clone()));
            current.pop();
        }
        return;
    }
    let reserve = min * (slots as u32 - 1);
    if remaining < reserve + min {
        return;
    }
    for first in min..=(remaining - reserve) {
        current.push(first);
        push_compositions(remaining - first, slots - 1, min, current, out);
        current.pop();
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<u32>> for MultiIndex {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<MultiIndex> for Vec<u32> {
    fn from(k: MultiIndex) -> Self {
        k.0
    }
}

impl FromStr for MultiIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|p| {
                p.trim().parse::<u32>().map_err(|_| {
                    Error::InvalidParameter(format!("bad multi-index component {p:?} in {s:?}"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
