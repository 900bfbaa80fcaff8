use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::automorphism::MobiusFactor;
use crate::error::{Error, Result};
use crate::multiindex::MultiIndex;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Coefficients attached to one multi-index `k`.
///
/// `a` multiplies `z^k`; `b` is stored unconjugated and the series term is
/// `conj(b) * conj(z)^k`.
#[derive(Clone, Debug, PartialEq)]
pub struct Term {
    pub a: Vec<Complex64>,
    pub b: Vec<Complex64>,
}

impl Term {
    pub fn zero(codim: usize) -> Self {
        Self {
            a: vec![ZERO; codim],
            b: vec![ZERO; codim],
        }
    }

    fn is_zero(&self) -> bool {
        self.a.iter().chain(&self.b).all(|c| *c == ZERO)
    }
}

/// Where a finite series came from, when that matters for certification.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Provenance {
    /// Truncated Taylor expansion of a Colonna-type map
    /// `(2γ/π) arg((1 + w)/(1 - w))`, `w = Π_j ψ_j(z_j)`.
    Colonna {
        gamma: Complex64,
        factors: Vec<MobiusFactor>,
        degree: u32,
    },
}

/// Finite pluriharmonic series `f(z) = Σ a_k z^k + Σ conj(b_k) conj(z)^k`
/// from `𝔻ⁿ` to `ℂᴺ`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesMap {
    n: usize,
    codim: usize,
    terms: BTreeMap<MultiIndex, Term>,
    provenance: Option<Provenance>,
}

impl SeriesMap {
    pub fn new(n: usize, codim: usize) -> Self {
        assert!(n >= 1 && codim >= 1, "dimensions must be at least 1");
        Self {
            n,
            codim,
            terms: BTreeMap::new(),
            provenance: None,
        }
    }

    /// Scalar-valued map (`N = 1`).
    pub fn scalar(n: usize) -> Self {
        Self::new(n, 1)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Term)> {
        self.terms.iter()
    }

    pub fn term(&self, k: &MultiIndex) -> Option<&Term> {
        self.terms.get(k)
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = Some(provenance);
        self
    }

    fn check_shape(&self, k: &MultiIndex, v: &[Complex64]) -> Result<()> {
        if k.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: k.dim(),
            });
        }
        if v.len() != self.codim {
            return Err(Error::DimensionMismatch {
                expected: self.codim,
                got: v.len(),
            });
        }
        if v.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "non-finite coefficient at {k}"
            )));
        }
        Ok(())
    }

    /// Adds `a` to the holomorphic coefficient at `k`.
    pub fn add_holo(&mut self, k: MultiIndex, a: &[Complex64]) -> Result<()> {
        self.check_shape(&k, a)?;
        let codim = self.codim;
        let term = self.terms.entry(k).or_insert_with(|| Term::zero(codim));
        for (t, v) in term.a.iter_mut().zip(a) {
            *t += v;
        }
        Ok(())
    }

    /// Adds `b` to the (unconjugated) anti-holomorphic coefficient at `k`.
    pub fn add_anti(&mut self, k: MultiIndex, b: &[Complex64]) -> Result<()> {
        self.check_shape(&k, b)?;
        let codim = self.codim;
        let term = self.terms.entry(k).or_insert_with(|| Term::zero(codim));
        for (t, v) in term.b.iter_mut().zip(b) {
            *t += v;
        }
        Ok(())
    }

    /// Builder form of [`add_holo`](Self::add_holo) for scalar maps.
    ///
    /// Panics if `k` has the wrong length or the map is not scalar.
    pub fn holo(mut self, k: &[u32], a: Complex64) -> Self {
        let k = MultiIndex::new(k.to_vec()).expect("non-empty multi-index");
        self.add_holo(k, &[a])
            .expect("scalar map with matching dimension");
        self
    }

    /// Builder form of [`add_anti`](Self::add_anti) for scalar maps: adds
    /// `conj(b) conj(z)^k`.
    pub fn anti(mut self, k: &[u32], b: Complex64) -> Self {
        let k = MultiIndex::new(k.to_vec()).expect("non-empty multi-index");
        self.add_anti(k, &[b])
            .expect("scalar map with matching dimension");
        self
    }

    /// Vector builder for the holomorphic part.
    pub fn holo_vec(mut self, k: &[u32], a: &[Complex64]) -> Self {
        let k = MultiIndex::new(k.to_vec()).expect("non-empty multi-index");
        self.add_holo(k, a).expect("matching dimensions");
        self
    }

    /// Vector builder for the anti-holomorphic part.
    pub fn anti_vec(mut self, k: &[u32], b: &[Complex64]) -> Self {
        let k = MultiIndex::new(k.to_vec()).expect("non-empty multi-index");
        self.add_anti(k, b).expect("matching dimensions");
        self
    }

    /// Removes all-zero terms.
    pub fn prune(&mut self) {
        self.terms.retain(|_, t| !t.is_zero());
    }

    pub fn max_degree(&self) -> u64 {
        self.terms.keys().map(MultiIndex::degree).max().unwrap_or(0)
    }

    pub fn is_holomorphic(&self) -> bool {
        self.terms
            .iter()
            .all(|(k, t)| k.is_zero() || t.b.iter().all(|c| *c == ZERO))
    }

    /// `Σ_k ‖a_k‖ + Σ_k ‖b_k‖`, an upper bound for `sup ‖f‖` on the closed
    /// polydisk.
    pub fn l1_norm(&self) -> f64 {
        self.terms
            .values()
            .map(|t| vec_norm(&t.a) + vec_norm(&t.b))
            .sum()
    }

    /// `f(0) = a_0 + conj(b_0)`.
    pub fn value_at_origin(&self) -> Vec<Complex64> {
        match self.terms.get(&MultiIndex::zeros(self.n)) {
            Some(t) => t.a.iter().zip(&t.b).map(|(a, b)| a + b.conj()).collect(),
            None => vec![ZERO; self.codim],
        }
    }

    /// `‖f(0)‖² + Σ_{|β|≥1} (‖a_β‖² + ‖b_β‖²)`.
    pub fn l2_coefficient_sum(&self) -> f64 {
        let origin: f64 = self.value_at_origin().iter().map(|c| c.norm_sqr()).sum();
        origin
            + self
                .terms
                .iter()
                .filter(|(k, _)| !k.is_zero())
                .map(|(_, t)| vec_norm_sqr(&t.a) + vec_norm_sqr(&t.b))
                .sum::<f64>()
    }

    /// Drops the constant term so that `f(0) = 0`.
    pub fn drop_constant(&mut self) {
        self.terms.remove(&MultiIndex::zeros(self.n));
    }

    /// Rescales every coefficient so that the ℓ¹ norm equals `target`.
    /// No-op on the zero map.
    pub fn rescale_l1(&mut self, target: f64) {
        let norm = self.l1_norm();
        if norm == 0.0 {
            return;
        }
        let s = target / norm;
        for t in self.terms.values_mut() {
            for c in t.a.iter_mut().chain(t.b.iter_mut()) {
                *c *= s;
            }
        }
    }

    fn powers(&self, z: &[Complex64]) -> Vec<Vec<Complex64>> {
        let mut max_exp = vec![0u32; self.n];
        for k in self.terms.keys() {
            for (m, &c) in max_exp.iter_mut().zip(k.components()) {
                *m = (*m).max(c);
            }
        }
        z.iter()
            .zip(&max_exp)
            .map(|(&zj, &e)| {
                let mut p = Vec::with_capacity(e as usize + 1);
                let mut acc = Complex64::new(1.0, 0.0);
                p.push(acc);
                for _ in 0..e {
                    acc *= zj;
                    p.push(acc);
                }
                p
            })
            .collect()
    }

    /// `(h(z), g(z))` with `h = Σ a_k z^k`, `g = Σ b_k z^k`.
    pub(crate) fn parts_raw(&self, z: &[Complex64]) -> (Vec<Complex64>, Vec<Complex64>) {
        let pw = self.powers(z);
        let mut h = vec![ZERO; self.codim];
        let mut g = vec![ZERO; self.codim];
        for (k, t) in &self.terms {
            let mono: Complex64 = k
                .components()
                .iter()
                .enumerate()
                .map(|(j, &e)| pw[j][e as usize])
                .product();
            for i in 0..self.codim {
                h[i] += t.a[i] * mono;
                g[i] += t.b[i] * mono;
            }
        }
        (h, g)
    }

    pub(crate) fn eval_raw(&self, z: &[Complex64]) -> Vec<Complex64> {
        let (h, g) = self.parts_raw(z);
        h.iter().zip(&g).map(|(h, g)| h + g.conj()).collect()
    }

    /// Term-by-term `(∂^α_z f, ∂^α_z̄ f)`.
    pub(crate) fn derivative_raw(
        &self,
        z: &[Complex64],
        alpha: &MultiIndex,
    ) -> (Vec<Complex64>, Vec<Complex64>) {
        let pw = self.powers(z);
        let mut dh = vec![ZERO; self.codim];
        let mut dg = vec![ZERO; self.codim];
        for (k, t) in &self.terms {
            let Some(rest) = k.checked_sub(alpha) else {
                continue;
            };
            let scale = k.falling_factorial(alpha);
            let mono: Complex64 = rest
                .components()
                .iter()
                .enumerate()
                .map(|(j, &e)| pw[j][e as usize])
                .product::<Complex64>()
                * scale;
            for i in 0..self.codim {
                dh[i] += t.a[i] * mono;
                dg[i] += t.b[i] * mono;
            }
        }
        (dh, dg.into_iter().map(|c| c.conj()).collect())
    }
}

pub(crate) fn vec_norm_sqr(v: &[Complex64]) -> f64 {
    v.iter().map(|c| c.norm_sqr()).sum()
}

pub(crate) fn vec_norm(v: &[Complex64]) -> f64 {
    vec_norm_sqr(v).sqrt()
}
