use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::PolydiskPoint;
use crate::error::{Error, Result};

/// Tolerance on `|λ| = 1` for unimodular parameters.
pub const UNIMODULAR_TOL: f64 = 1e-12;

pub(crate) fn check_unimodular(name: &str, value: Complex64) -> Result<()> {
    if !value.is_finite() || (value.norm() - 1.0).abs() > UNIMODULAR_TOL {
        return Err(Error::InvalidParameter(format!(
            "{name} must be unimodular, got modulus {}",
            value.norm()
        )));
    }
    Ok(())
}

pub(crate) fn check_in_disk(name: &str, value: Complex64) -> Result<()> {
    if !value.is_finite() || value.norm() >= 1.0 {
        return Err(Error::InvalidParameter(format!(
            "{name} must lie in the open unit disk, got modulus {}",
            value.norm()
        )));
    }
    Ok(())
}

/// Disk automorphism `ψ(z) = λ (z - a) / (1 - ā z)`, sending `a` to 0.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MobiusFactor {
    pub a: Complex64,
    pub lambda: Complex64,
}

impl MobiusFactor {
    pub fn new(a: Complex64, lambda: Complex64) -> Result<Self> {
        check_in_disk("a", a)?;
        check_unimodular("lambda", lambda)?;
        Ok(Self { a, lambda })
    }

    pub fn identity() -> Self {
        Self {
            a: Complex64::new(0.0, 0.0),
            lambda: Complex64::new(1.0, 0.0),
        }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.lambda * (z - self.a) / (1.0 - self.a.conj() * z)
    }

    /// Taylor coefficients of `t ↦ ψ(z + t)` up to `t^order`.
    pub fn taylor_at(&self, z: Complex64, order: usize) -> Vec<Complex64> {
        let denom = 1.0 - self.a.conj() * z;
        let q = self.a.conj() / denom;
        let lead = self.lambda / denom;
        let offset = z - self.a;
        let mut out = Vec::with_capacity(order + 1);
        out.push(lead * offset);
        let mut q_prev = Complex64::new(1.0, 0.0);
        for _ in 1..=order {
            let q_cur = q_prev * q;
            out.push(lead * (offset * q_cur + q_prev));
            q_prev = q_cur;
        }
        out
    }
}

/// Holomorphic automorphism of the polydisk acting coordinatewise:
/// `φ_j(ζ_j) = (c_j + ρ_j ζ_j) / (1 + c̄_j ρ_j ζ_j)` with center `c` and
/// unimodular rotations `ρ`. The rotation is applied before the Möbius step,
/// so `φ(0) = c` exactly.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolydiskAutomorphism {
    center: PolydiskPoint,
    rotations: Vec<Complex64>,
}

impl PolydiskAutomorphism {
    pub fn new(center: PolydiskPoint, rotations: Vec<Complex64>) -> Result<Self> {
        if rotations.len() != center.dim() {
            return Err(Error::DimensionMismatch {
                expected: center.dim(),
                got: rotations.len(),
            });
        }
        for &r in &rotations {
            check_unimodular("rotation", r)?;
        }
        Ok(Self { center, rotations })
    }

    /// Möbius shift to `center` without rotation.
    pub fn centered_at(center: PolydiskPoint) -> Self {
        let n = center.dim();
        Self {
            center,
            rotations: vec![Complex64::new(1.0, 0.0); n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::centered_at(PolydiskPoint::origin(n))
    }

    /// Random automorphism with `‖center‖∞ ≤ max_radius`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, n: usize, max_radius: f64) -> Self {
        let center = PolydiskPoint::random(rng, n, max_radius);
        let rotations = (0..n)
            .map(|_| Complex64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU)))
            .collect();
        Self { center, rotations }
    }

    pub fn dim(&self) -> usize {
        self.center.dim()
    }

    pub fn center(&self) -> &PolydiskPoint {
        &self.center
    }

    pub fn rotations(&self) -> &[Complex64] {
        &self.rotations
    }

    pub(crate) fn apply_coord(&self, j: usize, zeta: Complex64) -> Complex64 {
        let c = self.center.coords()[j];
        let w = self.rotations[j] * zeta;
        (c + w) / (1.0 + c.conj() * w)
    }

    pub(crate) fn apply_raw(&self, zeta: &[Complex64]) -> Vec<Complex64> {
        zeta.iter()
            .enumerate()
            .map(|(j, &z)| self.apply_coord(j, z))
            .collect()
    }

    pub fn apply(&self, zeta: &PolydiskPoint) -> Result<PolydiskPoint> {
        if zeta.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: zeta.dim(),
            });
        }
        PolydiskPoint::new(self.apply_raw(zeta.coords()))
    }

    /// `Dφ(0)`, the diagonal matrix with entries `ρ_j (1 - |c_j|²)`.
    pub fn derivative_at_zero(&self) -> Vec<Vec<Complex64>> {
        let n = self.dim();
        let mut m = vec![vec![Complex64::new(0.0, 0.0); n]; n];
        for (j, row) in m.iter_mut().enumerate() {
            let c = self.center.coords()[j];
            row[j] = self.rotations[j] * (1.0 - c.norm_sqr());
        }
        m
    }
}
