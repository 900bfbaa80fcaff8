//! Equal-weight trapezoidal quadrature on circles and tori.
//!
//! On a circle the trapezoidal rule with `M` nodes integrates every
//! trigonometric polynomial of degree `< M` exactly and converges
//! geometrically for analytic periodic integrands. That makes it the natural
//! tool for three jobs here:
//!
//! * Fourier coefficient extraction on a torus of radii `r_j`: `a_k` and
//!   `b_k` are torus means of `f` against `e^{∓i k·θ}`, divided by `r^k`;
//! * Cauchy-integral derivatives `∂^α h(z) = α!/(2πi)ⁿ ∮ h(η)/Π(η_j - z_j)^{α_j+1} dη`;
//! * the `∫|cos(mθ + γ)| dθ = 4` identity, where the integrand has kinks
//!   and the plain rule only converges at second order (see
//!   [`abs_cos_integral`]).
//!
//! Grid sums use a fixed pairwise reduction so results are bitwise
//! reproducible for a given node count.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mapping::{PluriharmonicMap, PolydiskPoint};
use crate::multiindex::MultiIndex;

/// Node count used for the `|cos|` integral when none is given.
pub const DEFAULT_LEMMA_NODES: usize = 4096;

/// Node count per dimension and one radius per coordinate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    nodes_per_dim: usize,
    radii: Vec<f64>,
}

impl QuadratureSpec {
    pub fn new(nodes_per_dim: usize, radii: Vec<f64>) -> Result<Self> {
        if nodes_per_dim < 8 || !nodes_per_dim.is_power_of_two() {
            return Err(Error::InvalidParameter(format!(
                "nodes per dimension must be a power of two >= 8, got {nodes_per_dim}"
            )));
        }
        if radii.is_empty() {
            return Err(Error::InvalidParameter(
                "at least one radius is required".into(),
            ));
        }
        if let Some(r) = radii.iter().find(|r| !(**r > 0.0 && **r < 1.0)) {
            return Err(Error::InvalidParameter(format!(
                "quadrature radius must lie in (0, 1), got {r}"
            )));
        }
        Ok(Self {
            nodes_per_dim,
            radii,
        })
    }

    pub fn uniform(n: usize, nodes_per_dim: usize, radius: f64) -> Result<Self> {
        Self::new(nodes_per_dim, vec![radius; n])
    }

    /// Default contour radius for a point with `‖z‖∞ = z_inf`: midway to
    /// the boundary, capped at 0.95 while the cap still encloses the point.
    pub fn default_radius(z_inf: f64) -> f64 {
        let mid = 0.5 * (z_inf + 1.0);
        if z_inf < 0.95 {
            mid.min(0.95)
        } else {
            mid
        }
    }

    /// Cauchy contour for `z` with the default radius in every coordinate.
    pub fn for_point(z: &PolydiskPoint, nodes_per_dim: usize) -> Result<Self> {
        Self::uniform(z.dim(), nodes_per_dim, Self::default_radius(z.inf_norm()))
    }

    /// Default nodes per dimension, chosen so a full grid stays below about
    /// 300k integrand evaluations.
    pub fn default_nodes(n: usize) -> usize {
        match n {
            1 => 512,
            2 => 128,
            _ => 32,
        }
    }

    pub fn nodes_per_dim(&self) -> usize {
        self.nodes_per_dim
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn dim(&self) -> usize {
        self.radii.len()
    }

    fn check_dim(&self, n: usize) -> Result<()> {
        if self.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: self.dim(),
            });
        }
        Ok(())
    }
}

/// Radius of the extraction torus when none is given. Small enough that
/// aliasing from terms of degree `>= nodes` stays far below `1e-6`.
pub const DEFAULT_EXTRACTION_RADIUS: f64 = 0.4;

/// Optional overrides for the node count and a uniform radius, resolved
/// against per-task defaults.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSettings {
    pub nodes: Option<usize>,
    pub radius: Option<f64>,
}

impl QuadratureSettings {
    /// Cauchy contour for derivatives at `z`.
    pub fn contour(&self, z: &PolydiskPoint) -> Result<QuadratureSpec> {
        let nodes = self
            .nodes
            .unwrap_or_else(|| QuadratureSpec::default_nodes(z.dim()));
        match self.radius {
            Some(r) => QuadratureSpec::uniform(z.dim(), nodes, r),
            None => QuadratureSpec::for_point(z, nodes),
        }
    }

    /// Torus for coefficient extraction from `map`. Finite series get at
    /// least `2d + 1` nodes (rounded up to a power of two) so extraction is
    /// exact.
    pub fn extraction(&self, map: &PluriharmonicMap) -> Result<QuadratureSpec> {
        let n = map.dim();
        let nodes = self.nodes.unwrap_or_else(|| {
            let base = match n {
                1 | 2 => 64,
                3 => 32,
                _ => 16,
            };
            let degree = map.as_series().map_or(0, |s| s.max_degree() as usize);
            base.max((2 * degree + 1).next_power_of_two())
        });
        QuadratureSpec::uniform(n, nodes, self.radius.unwrap_or(DEFAULT_EXTRACTION_RADIUS))
    }
}

/// Provenance of a quadrature result.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadMeta {
    pub nodes: usize,
    pub radii: Vec<f64>,
    /// A priori error estimate for maps bounded by 1 (heuristic).
    pub est_error: f64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

pub(crate) fn pairwise_sum(v: &[Complex64]) -> Complex64 {
    if v.len() <= 32 {
        v.iter().sum()
    } else {
        let (a, b) = v.split_at(v.len() / 2);
        pairwise_sum(a) + pairwise_sum(b)
    }
}

fn grid_size(n: usize, nodes: usize) -> Result<usize> {
    u32::try_from(n)
        .ok()
        .and_then(|e| nodes.checked_pow(e))
        .ok_or_else(|| Error::InvalidParameter(format!("grid {nodes}^{n} is too large")))
}

/// Row-major grid indices (last coordinate fastest).
fn decode(mut flat: usize, nodes: usize, out: &mut [usize]) {
    for slot in out.iter_mut().rev() {
        *slot = flat % nodes;
        flat /= nodes;
    }
}

fn roots_of_unity(nodes: usize) -> Vec<Complex64> {
    (0..nodes)
        .map(|i| Complex64::from_polar(1.0, TAU * i as f64 / nodes as f64))
        .collect()
}

/// Mean of `integrand` over the tensor grid `θ_j = 2π i_j / nodes`, i.e.
/// the equal-weight trapezoidal rule with the `1/(2π)ⁿ` normalization.
pub fn torus_trapezoid<F>(mut integrand: F, n: usize, nodes: usize) -> Result<Complex64>
where
    F: FnMut(&[f64]) -> Complex64,
{
    if n == 0 || nodes == 0 {
        return Err(Error::InvalidParameter(
            "torus dimension and node count must be positive".into(),
        ));
    }
    let size = grid_size(n, nodes)?;
    let mut idx = vec![0; n];
    let mut theta = vec![0.0; n];
    let mut values = Vec::with_capacity(size);
    for flat in 0..size {
        decode(flat, nodes, &mut idx);
        for (t, &i) in theta.iter_mut().zip(&idx) {
            *t = TAU * i as f64 / nodes as f64;
        }
        let v = integrand(&theta);
        if !v.is_finite() {
            return Err(Error::NonFiniteIntegrand(flat));
        }
        values.push(v);
    }
    Ok(pairwise_sum(&values) / size as f64)
}

fn check_lemma_order(m: u32) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidParameter(
            "m must be a positive integer (for m = 0 the integral is 2π|cos γ|)".into(),
        ));
    }
    Ok(())
}

/// Plain trapezoidal value of `∫₀^{2π} |cos(mθ + γ)| dθ`. The integrand has
/// `2m` kinks per period, so this converges only like `O(m² h²)`.
pub fn abs_cos_trapezoid_raw(m: u32, gamma: f64, nodes: usize) -> Result<f64> {
    check_lemma_order(m)?;
    let mf = f64::from(m);
    let mean = torus_trapezoid(
        |t| Complex64::new((mf * t[0] + gamma).cos().abs(), 0.0),
        1,
        nodes,
    )?;
    Ok(TAU * mean.re)
}

/// `∫₀^{2π} |cos(mθ + γ)| dθ` by the trapezoidal rule with an
/// Euler-Maclaurin jump correction.
///
/// For a periodic function that is smooth except for derivative jumps
/// `J_k = f'(x_k+) - f'(x_k-)`, the trapezoidal sum `T_h` satisfies
/// `∫ f = T_h + (h²/2) Σ_k J_k B₂(s_k) + O(h⁴)`, where `s_k` is the
/// fractional grid offset of `x_k` and `B₂(s) = s² - s + 1/6`. Here the
/// kinks sit where `mθ + γ ≡ π/2 (mod π)` and every jump is `2m`. The
/// correction turns the `O(m² h²)` error of the raw sum into roughly
/// `1e-10` at 4096 nodes for `m ≤ 10`.
pub fn abs_cos_integral(m: u32, gamma: f64, nodes: usize) -> Result<f64> {
    let raw = abs_cos_trapezoid_raw(m, gamma, nodes)?;
    let mf = f64::from(m);
    let h = TAU / nodes as f64;
    let jump = 2.0 * mf;
    let correction: f64 = (0..2 * m)
        .map(|k| {
            let kink = ((0.5 * PI + f64::from(k) * PI - gamma) / mf).rem_euclid(TAU);
            let s = (kink / h).rem_euclid(1.0);
            jump * (s * s - s + 1.0 / 6.0)
        })
        .sum();
    Ok(raw + 0.5 * h * h * correction)
}

/// Samples of one function on the torus of radii `r_j`.
struct TorusSamples {
    nodes: usize,
    codim: usize,
    /// `values[flat * codim + i]`.
    values: Vec<Complex64>,
}

impl TorusSamples {
    fn weighted_mean(&self, weights: &[Complex64], component: usize) -> Complex64 {
        let prod: Vec<Complex64> = weights
            .iter()
            .enumerate()
            .map(|(flat, w)| self.values[flat * self.codim + component] * w)
            .collect();
        pairwise_sum(&prod) / weights.len() as f64
    }
}

fn torus_points(radii: &[f64], nodes: usize) -> Result<Vec<Vec<Complex64>>> {
    let size = grid_size(radii.len(), nodes)?;
    let roots = roots_of_unity(nodes);
    let mut idx = vec![0; radii.len()];
    Ok((0..size)
        .map(|flat| {
            decode(flat, nodes, &mut idx);
            idx.iter().zip(radii).map(|(&i, &r)| roots[i] * r).collect()
        })
        .collect())
}

fn sample_values(map: &PluriharmonicMap, radii: &[f64], nodes: usize) -> Result<TorusSamples> {
    let codim = map.codim();
    let points = torus_points(radii, nodes)?;
    let mut values = Vec::with_capacity(points.len() * codim);
    for (flat, eta) in points.iter().enumerate() {
        let v = map.eval_raw(eta);
        if v.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFiniteIntegrand(flat));
        }
        values.extend(v);
    }
    Ok(TorusSamples {
        nodes,
        codim,
        values,
    })
}

fn sample_parts(
    map: &PluriharmonicMap,
    radii: &[f64],
    nodes: usize,
) -> Result<(TorusSamples, TorusSamples)> {
    let codim = map.codim();
    let points = torus_points(radii, nodes)?;
    let mut hv = Vec::with_capacity(points.len() * codim);
    let mut gv = Vec::with_capacity(points.len() * codim);
    for (flat, eta) in points.iter().enumerate() {
        let (h, g) = map.parts_raw(eta);
        if h.iter().chain(&g).any(|c| !c.is_finite()) {
            return Err(Error::NonFiniteIntegrand(flat));
        }
        hv.extend(h);
        gv.extend(g);
    }
    let wrap = |values| TorusSamples {
        nodes,
        codim,
        values,
    };
    Ok((wrap(hv), wrap(gv)))
}

/// Tensor-product weights `Π_j table_j[i_j]` over the grid.
fn separable_weights(tables: &[Vec<Complex64>], nodes: usize) -> Vec<Complex64> {
    let n = tables.len();
    let size = nodes.pow(n as u32);
    let mut idx = vec![0; n];
    (0..size)
        .map(|flat| {
            decode(flat, nodes, &mut idx);
            idx.iter().zip(tables).map(|(&i, t)| t[i]).product()
        })
        .collect()
}

/// Estimated coefficients `(a_k, b_k)` with quadrature metadata.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoefficientEstimate {
    pub k: MultiIndex,
    pub a: Vec<Complex64>,
    pub b: Vec<Complex64>,
    /// For `k = 0` only the mean `a_0 + conj(b_0)` is observable; it is
    /// reported in `a` and `b` is zero.
    pub constant_merged: bool,
    pub meta: QuadMeta,
}

/// `(a_k, b_k)` by torus quadrature.
pub fn extract_coefficient(
    map: &PluriharmonicMap,
    k: &MultiIndex,
    spec: &QuadratureSpec,
) -> Result<CoefficientEstimate> {
    Ok(extract_coefficients(map, std::slice::from_ref(k), spec)?.remove(0))
}

/// Batch form of [`extract_coefficient`]: the map is sampled once.
///
/// `a_k r^k` is the torus mean of `f(r e^{iθ}) e^{-i k·θ}` and
/// `conj(b_k) r^k` the mean against `e^{+i k·θ}`. For a finite series of
/// degree `d` and `nodes > 2d` both are exact up to rounding.
pub fn extract_coefficients(
    map: &PluriharmonicMap,
    ks: &[MultiIndex],
    spec: &QuadratureSpec,
) -> Result<Vec<CoefficientEstimate>> {
    let n = map.dim();
    spec.check_dim(n)?;
    for k in ks {
        if k.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: k.dim(),
            });
        }
        for (j, (&kj, &r)) in k.components().iter().zip(spec.radii()).enumerate() {
            if kj > 0 && r <= 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "radius {j} vanishes while k_{j} = {kj} > 0"
                )));
            }
        }
    }
    let m = spec.nodes_per_dim();
    let samples = sample_values(map, spec.radii(), m)?;
    let roots = roots_of_unity(m);

    let series_degree = map.as_series().map(|s| s.max_degree());
    let mut warnings = Vec::new();
    if let Some(d) = series_degree {
        if (m as u64) <= 2 * d {
            warnings.push(format!(
                "{m} nodes per dimension is at or below the Nyquist limit for a degree-{d} series"
            ));
        }
    }

    ks.iter()
        .map(|k| {
            let scale: f64 = k
                .components()
                .iter()
                .zip(spec.radii())
                .map(|(&kj, &r)| r.powi(kj as i32))
                .product();
            let tables: Vec<Vec<Complex64>> = k
                .components()
                .iter()
                .map(|&kj| {
                    let step = (m - (kj as usize % m)) % m;
                    (0..m).map(|i| roots[(step * i) % m]).collect()
                })
                .collect();
            let weights = separable_weights(&tables, samples.nodes);
            let conj_weights: Vec<Complex64> = weights.iter().map(|w| w.conj()).collect();
            let mut a = Vec::with_capacity(samples.codim);
            let mut b = Vec::with_capacity(samples.codim);
            let merged = k.is_zero();
            for i in 0..samples.codim {
                a.push(samples.weighted_mean(&weights, i) / scale);
                if merged {
                    b.push(Complex64::new(0.0, 0.0));
                } else {
                    b.push(samples.weighted_mean(&conj_weights, i).conj() / scale);
                }
            }
            let est_error = match series_degree {
                Some(d) if (m as u64) > 2 * d => f64::EPSILON * m as f64 / scale,
                _ => k
                    .components()
                    .iter()
                    .zip(spec.radii())
                    .map(|(&kj, &r)| {
                        let tail = r.powi(m as i32) + r.powi((m as i32 - 2 * kj as i32).max(0));
                        tail / (1.0 - r.powi(m as i32))
                    })
                    .sum(),
            };
            Ok(CoefficientEstimate {
                k: k.clone(),
                a,
                b,
                constant_merged: merged,
                meta: QuadMeta {
                    nodes: m,
                    radii: spec.radii().to_vec(),
                    est_error,
                    warnings: warnings.clone(),
                },
            })
        })
        .collect()
}

/// `(∂^α_z f(z), ∂^α_z̄ f(z))` by the Cauchy integral formula.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CauchyDerivative {
    pub alpha: MultiIndex,
    pub holo: Vec<Complex64>,
    pub anti: Vec<Complex64>,
    pub meta: QuadMeta,
}

/// Cauchy-integral derivative on the torus `|η_j| = r_j`.
///
/// With `η_j = r_j e^{iθ_j}`, `dη_j = i η_j dθ_j`, so
/// `∂^α h(z) = α! · mean_θ [ h(η) Π_j η_j / (η_j - z_j)^{α_j+1} ]`, and the
/// `z̄` derivative is the conjugate of the same integral applied to `g`.
pub fn cauchy_derivative(
    map: &PluriharmonicMap,
    z: &PolydiskPoint,
    alpha: &MultiIndex,
    spec: &QuadratureSpec,
) -> Result<CauchyDerivative> {
    Ok(cauchy_derivatives(map, z, std::slice::from_ref(alpha), spec)?.remove(0))
}

/// Batch form of [`cauchy_derivative`]: `h` and `g` are sampled once.
pub fn cauchy_derivatives(
    map: &PluriharmonicMap,
    z: &PolydiskPoint,
    alphas: &[MultiIndex],
    spec: &QuadratureSpec,
) -> Result<Vec<CauchyDerivative>> {
    let n = map.dim();
    if z.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: z.dim(),
        });
    }
    spec.check_dim(n)?;
    for alpha in alphas {
        if alpha.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: alpha.dim(),
            });
        }
    }
    for (j, (zj, &r)) in z.coords().iter().zip(spec.radii()).enumerate() {
        if zj.norm() >= r {
            return Err(Error::ContourTooSmall {
                coord: j,
                radius: r,
                modulus: zj.norm(),
            });
        }
    }
    let m = spec.nodes_per_dim();
    let (hs, gs) = sample_parts(map, spec.radii(), m)?;
    let roots = roots_of_unity(m);
    let scale = hs
        .values
        .iter()
        .chain(&gs.values)
        .map(|c| c.norm())
        .fold(0.0, f64::max);

    alphas
        .iter()
        .map(|alpha| {
            let tables: Vec<Vec<Complex64>> = alpha
                .components()
                .iter()
                .zip(z.coords())
                .zip(spec.radii())
                .map(|((&aj, &zj), &r)| {
                    roots
                        .iter()
                        .map(|w| {
                            let eta = w * r;
                            eta / (eta - zj).powu(aj + 1)
                        })
                        .collect()
                })
                .collect();
            let weights = separable_weights(&tables, m);
            let fact = alpha.factorial_f64()?;
            let holo = (0..hs.codim)
                .map(|i| hs.weighted_mean(&weights, i) * fact)
                .collect();
            let anti = (0..gs.codim)
                .map(|i| (gs.weighted_mean(&weights, i) * fact).conj())
                .collect();
            let mut amplification = fact;
            let mut aliasing = 0.0;
            for ((&aj, zj), &r) in alpha.components().iter().zip(z.coords()).zip(spec.radii()) {
                amplification /= (r - zj.norm()).powi(aj as i32);
                aliasing += (zj.norm() / r).powi(m as i32) + r.powi(m as i32);
            }
            Ok(CauchyDerivative {
                alpha: alpha.clone(),
                holo,
                anti,
                meta: QuadMeta {
                    nodes: m,
                    radii: spec.radii().to_vec(),
                    est_error: scale * amplification * (aliasing + f64::EPSILON * m as f64),
                    warnings: Vec::new(),
                },
            })
        })
        .collect()
}

/// Coefficient ℓ¹ norm `Σ‖a_k‖ + Σ‖b_k‖`, a certified upper bound for
/// `sup ‖f‖` on the closed polydisk. Finite series only.
pub fn sup_bound_l1(map: &PluriharmonicMap) -> Result<f64> {
    map.as_series()
        .map(|s| s.l1_norm())
        .ok_or(Error::UnsupportedForm {
            operation: "the coefficient l1 bound",
            form: map.form_name(),
        })
}

/// Torus mean of `‖f‖²` on radii `ξ_j`.
pub fn torus_mean_sq_norm(map: &PluriharmonicMap, radii: &[f64], nodes: usize) -> Result<f64> {
    let spec = QuadratureSpec::new(nodes, radii.to_vec())?;
    spec.check_dim(map.dim())?;
    let samples = sample_values(map, spec.radii(), nodes)?;
    let sq: Vec<Complex64> = samples
        .values
        .chunks(samples.codim)
        .map(|v| Complex64::new(v.iter().map(|c| c.norm_sqr()).sum(), 0.0))
        .collect();
    Ok(pairwise_sum(&sq).re / sq.len() as f64)
}

/// Degree-`m` parts along the complex line through `z`:
/// `(Σ_{|β|=m} a_β z^β, Σ_{|β|=m} conj(b_β) conj(z)^β)` as the circle means
/// of `f(e^{iθ} z)` against `e^{-imθ}` and `e^{imθ}`.
pub fn homogeneous_parts(
    map: &PluriharmonicMap,
    z: &PolydiskPoint,
    m: u32,
    nodes: usize,
) -> Result<(Vec<Complex64>, Vec<Complex64>)> {
    if z.dim() != map.dim() {
        return Err(Error::DimensionMismatch {
            expected: map.dim(),
            got: z.dim(),
        });
    }
    if nodes == 0 {
        return Err(Error::InvalidParameter(
            "node count must be positive".into(),
        ));
    }
    let roots = roots_of_unity(nodes);
    let codim = map.codim();
    let mut fwd = vec![Vec::with_capacity(nodes); codim];
    let mut bwd = vec![Vec::with_capacity(nodes); codim];
    for (i, w) in roots.iter().enumerate() {
        let point: Vec<Complex64> = z.coords().iter().map(|c| c * w).collect();
        let v = map.eval_raw(&point);
        if v.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFiniteIntegrand(i));
        }
        let phase = roots[(i * m as usize) % nodes];
        for c in 0..codim {
            fwd[c].push(v[c] * phase.conj());
            bwd[c].push(v[c] * phase);
        }
    }
    let mean = |v: &Vec<Complex64>| pairwise_sum(v) / nodes as f64;
    Ok((
        fwd.iter().map(mean).collect(),
        bwd.iter().map(mean).collect(),
    ))
}
