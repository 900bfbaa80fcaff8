//! Maps kept in closed form: the Colonna extremal family (and its
//! product-of-Möbius extension to several variables) and finite Blaschke
//! products. Both are evaluated from their formulas and differentiated
//! exactly through Taylor jets.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::automorphism::{check_unimodular, MobiusFactor};
use super::series::{Provenance, SeriesMap};
use crate::error::{Error, Result};
use crate::jet::Jet;
use crate::multiindex::MultiIndex;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// `f(z) = (2γ/π) arg((1 + w)/(1 - w))` with `w = Π_j ψ_j(z_j)`.
///
/// For `n = 1` this is exactly the extremal family of the harmonic
/// Schwarz-Pick lemma. For `n > 1` it is a pluriharmonic map into the unit
/// disk (a harmonic function composed with a holomorphic map into `𝔻`), used
/// as a search candidate only; nothing is claimed about extremality.
///
/// Splitting: with `L(w) = log(1 + w) - log(1 - w)`, the holomorphic parts
/// are `h = -(iγ/π) L(w)` and `g = -(i conj(γ)/π) L(w)`, so `f = h + conj(g)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ColonnaMap {
    gamma: Complex64,
    factors: Vec<MobiusFactor>,
}

impl ColonnaMap {
    pub fn new(gamma: Complex64, factors: Vec<MobiusFactor>) -> Result<Self> {
        check_unimodular("gamma", gamma)?;
        if factors.is_empty() {
            return Err(Error::InvalidParameter(
                "at least one Möbius factor is required".into(),
            ));
        }
        for f in &factors {
            MobiusFactor::new(f.a, f.lambda)?;
        }
        Ok(Self { gamma, factors })
    }

    pub fn gamma(&self) -> Complex64 {
        self.gamma
    }

    pub fn factors(&self) -> &[MobiusFactor] {
        &self.factors
    }

    pub fn dim(&self) -> usize {
        self.factors.len()
    }

    fn inner(&self, z: &[Complex64]) -> Complex64 {
        self.factors
            .iter()
            .zip(z)
            .map(|(f, &zj)| f.eval(zj))
            .product()
    }

    pub(crate) fn eval_raw(&self, z: &[Complex64]) -> Complex64 {
        let w = self.inner(z);
        self.gamma * (2.0 / PI) * ((1.0 + w) / (1.0 - w)).arg()
    }

    pub(crate) fn parts_raw(&self, z: &[Complex64]) -> (Complex64, Complex64) {
        let w = self.inner(z);
        let l = (1.0 + w).ln() - (1.0 - w).ln();
        (
            -(I * self.gamma / PI) * l,
            -(I * self.gamma.conj() / PI) * l,
        )
    }

    /// Taylor jet of `t ↦ L(w(z + t))`, box-truncated at `orders`.
    fn log_jet(&self, z: &[Complex64], orders: &[usize]) -> Jet {
        let mut w = Jet::constant(orders, Complex64::new(1.0, 0.0));
        for (j, f) in self.factors.iter().enumerate() {
            let uni = Jet::univariate(orders, j, &f.taylor_at(z[j], orders[j]));
            w = w.mul(&uni);
        }
        let w0 = w.value();
        let total: usize = orders.iter().sum();
        let mut taylor = Vec::with_capacity(total + 1);
        taylor.push((1.0 + w0).ln() - (1.0 - w0).ln());
        let (p, q) = (1.0 / (1.0 + w0), 1.0 / (1.0 - w0));
        let (mut pp, mut qq) = (Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0));
        for m in 1..=total {
            pp *= p;
            qq *= q;
            let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
            taylor.push((sign * pp + qq) / m as f64);
        }
        w.compose(&taylor)
    }

    pub(crate) fn derivative_raw(
        &self,
        z: &[Complex64],
        alpha: &MultiIndex,
    ) -> Result<(Complex64, Complex64)> {
        let orders: Vec<usize> = alpha.components().iter().map(|&a| a as usize).collect();
        let jet = self.log_jet(z, &orders);
        let dl = jet.coeff(alpha.components()) * alpha.factorial_f64()?;
        let dh = -(I * self.gamma / PI) * dl;
        let dg = -(I * self.gamma.conj() / PI) * dl;
        Ok((dh, dg.conj()))
    }

    /// Taylor expansion about the origin truncated at total degree `degree`.
    pub fn series_expansion(&self, degree: u32) -> SeriesMap {
        let n = self.dim();
        let origin = vec![Complex64::new(0.0, 0.0); n];
        let jet = self.log_jet(&origin, &vec![degree as usize; n]);
        let ch = -(I * self.gamma / PI);
        let cg = -(I * self.gamma.conj() / PI);
        let mut map = SeriesMap::scalar(n);
        for k in MultiIndex::enumerate(n, degree, 0) {
            let l = jet.coeff(k.components());
            if l == Complex64::new(0.0, 0.0) {
                continue;
            }
            map.add_holo(k.clone(), &[ch * l]).expect("shape");
            map.add_anti(k, &[cg * l]).expect("shape");
        }
        map.with_provenance(Provenance::Colonna {
            gamma: self.gamma,
            factors: self.factors.clone(),
            degree,
        })
    }
}

/// Finite Blaschke product `B(z) = ρ Π_k (z - a_k)/(1 - conj(a_k) z)`, a
/// holomorphic self-map of the unit disk.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlaschkeProduct {
    rotation: Complex64,
    zeros: Vec<Complex64>,
}

impl BlaschkeProduct {
    pub fn new(rotation: Complex64, zeros: Vec<Complex64>) -> Result<Self> {
        check_unimodular("rotation", rotation)?;
        for &a in &zeros {
            MobiusFactor::new(a, Complex64::new(1.0, 0.0))?;
        }
        Ok(Self { rotation, zeros })
    }

    /// Random product of `1..=max_factors` factors with `|a_k| ≤ max_zero`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, max_factors: usize, max_zero: f64) -> Self {
        let count = rng.random_range(1..=max_factors.max(1));
        let zeros = (0..count)
            .map(|_| {
                let r = max_zero * rng.random::<f64>().sqrt();
                Complex64::from_polar(r, rng.random_range(0.0..std::f64::consts::TAU))
            })
            .collect();
        let rotation = Complex64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU));
        Self { rotation, zeros }
    }

    pub fn zeros(&self) -> &[Complex64] {
        &self.zeros
    }

    pub fn rotation(&self) -> Complex64 {
        self.rotation
    }

    fn factors(&self) -> impl Iterator<Item = MobiusFactor> + '_ {
        self.zeros.iter().map(|&a| MobiusFactor {
            a,
            lambda: Complex64::new(1.0, 0.0),
        })
    }

    pub(crate) fn eval_raw(&self, z: Complex64) -> Complex64 {
        self.rotation * self.factors().map(|f| f.eval(z)).product::<Complex64>()
    }

    pub(crate) fn derivative_raw(&self, z: Complex64, order: u32) -> Complex64 {
        let orders = [order as usize];
        let mut jet = Jet::constant(&orders, self.rotation);
        for f in self.factors() {
            jet = jet.mul(&Jet::univariate(
                &orders,
                0,
                &f.taylor_at(z, order as usize),
            ));
        }
        let fact: f64 = (1..=order).map(f64::from).product();
        jet.coeff(&[order]) * fact
    }
}
