//! Right-hand sides of the estimates and the routines that check them on
//! concrete maps.
//!
//! Every `verify_*` routine first certifies the hypothesis of the estimate
//! it checks (see [`certify`]). A map that cannot be certified is refused
//! with [`Error::Hypothesis`]; a failed [`BoundReport`] only ever comes from
//! a certified map.
//!
//! | check | lhs | rhs |
//! |---|---|---|
//! | `derivative_polydisk` | `\|∂^α f\| + \|∂^α_z̄ f\|` | [`rhs_polydisk`] |
//! | `coefficient` | `\|a_k\| + \|b_k\|` | `4/π` |
//! | `homogeneous` | `‖Σ_{\|β\|=m} a_β z^β + Σ_{\|β\|=m} conj(b_β) conj(z)^β‖` | `4/π` |
//! | `l2_coefficients` | `‖f(0)‖² + Σ (‖a_β‖² + ‖b_β‖²)` | `1` |
//! | `gradient` | `max_θ ‖Df θ + D̄f conj(θ)‖` (sampled) | [`rhs_gradient`] |
//! | `growth` | `‖f(z)‖` | [`rhs_growth`] |
//! | `szasz` | `\|f^{(2m+1)}(z)\|` | [`rhs_szasz`] |
//! | `ruscheweyh` | `\|f^{(k)}(z)\|` | [`rhs_ruscheweyh`] |
//!
//! The homogeneous check uses `conj(b_β) conj(z)^β` for the second sum: it
//! is the `e^{+imθ}` Fourier mode of `θ ↦ f(e^{iθ} z)`, which is what the
//! bound controls. Repeating `a_β z^β` in both sums would count the
//! holomorphic part twice and drop `g`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mapping::{jacobian_pair, PluriharmonicMap, PolydiskPoint, Provenance};
use crate::multiindex::MultiIndex;
use crate::quadrature::{self, QuadMeta, QuadratureSettings, QuadratureSpec};
use crate::search;

pub const FOUR_OVER_PI: f64 = 4.0 / PI;

/// Tolerance for left-hand sides computed from exact series arithmetic.
pub const TOL_EXACT: f64 = 1e-9;

/// Tolerance for left-hand sides computed by quadrature.
pub const TOL_QUADRATURE: f64 = 1e-7;

/// Largest `‖f(0)‖` accepted as `f(0) = 0`.
pub const ORIGIN_TOL: f64 = 1e-12;

/// Nodes on the circle `θ ↦ e^{iθ} z` for non-series homogeneous parts.
pub const HOMOGENEOUS_NODES: usize = 256;

/// Directions sampled by the gradient check before refinement.
pub const DEFAULT_DIRECTION_SAMPLES: usize = 256;

/// Refinement sweeps used by the gradient check.
pub const DEFAULT_REFINE_STEPS: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckId {
    DerivativePolydisk,
    Coefficient,
    Homogeneous,
    L2Coefficients,
    Gradient,
    Growth,
    Szasz,
    Ruscheweyh,
}

impl CheckId {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::DerivativePolydisk => "derivative_polydisk",
            Self::Coefficient => "coefficient",
            Self::Homogeneous => "homogeneous",
            Self::L2Coefficients => "l2_coefficients",
            Self::Gradient => "gradient",
            Self::Growth => "growth",
            Self::Szasz => "szasz",
            Self::Ruscheweyh => "ruscheweyh",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How derivatives are obtained.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Method {
    /// Exact series or jet arithmetic.
    #[default]
    Exact,
    /// Cauchy integrals on a contour resolved from the settings.
    Cauchy(QuadratureSettings),
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Exact => "exact",
            Self::Cauchy(_) => "cauchy",
        }
    }

    pub fn default_tol(&self) -> f64 {
        match self {
            Self::Exact => TOL_EXACT,
            Self::Cauchy(_) => TOL_QUADRATURE,
        }
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Self::Exact),
            "cauchy" => Ok(Self::Cauchy(QuadratureSettings::default())),
            other => Err(Error::InvalidParameter(format!(
                "unknown method {other:?} (expected exact or cauchy)"
            ))),
        }
    }
}

/// The instance a report is about.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct CheckParams {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z: Option<PolydiskPoint>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<MultiIndex>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<MultiIndex>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<Vec<Complex64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quadrature: Option<QuadMeta>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// One checked inequality instance `lhs ≤ rhs`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub check_id: CheckId,
    pub params: CheckParams,
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs - lhs`, signed and never clamped.
    pub margin: f64,
    pub tol: f64,
    /// `lhs ≤ rhs + tol`.
    pub pass: bool,
}

impl BoundReport {
    pub fn new(check_id: CheckId, params: CheckParams, lhs: f64, rhs: f64, tol: f64) -> Self {
        Self {
            check_id,
            params,
            lhs,
            rhs,
            margin: rhs - lhs,
            tol,
            pass: lhs <= rhs + tol,
        }
    }
}

/// Target of a certified map.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Codomain {
    /// `𝔻`, scalar maps.
    Disk,
    /// `𝔹ᴺ`, the Euclidean unit ball.
    Ball,
}

/// Why a map is accepted as a self-map into the unit ball.
#[derive(Clone, Debug, PartialEq)]
pub enum Certificate {
    /// `sup ‖f‖ ≤ Σ‖a_k‖ + Σ‖b_k‖ = bound ≤ 1`.
    CoefficientL1 { bound: f64 },
    /// Colonna-type and Blaschke maps have known range.
    ClosedForm { form: &'static str },
    /// A truncated Taylor expansion of a closed-form map. Its coefficients
    /// are those of the closed form, but the truncation itself may overshoot
    /// the disk near the boundary.
    TruncatedExtremal { degree: u32 },
}

impl Certificate {
    pub fn note(&self) -> Option<String> {
        match self {
            Self::TruncatedExtremal { degree } => Some(format!(
                "truncated closed-form map (degree {degree}); hypothesis inherited from the closed form"
            )),
            _ => None,
        }
    }
}

/// Certifies `f ∈ 𝒫(𝔻ⁿ, 𝔹ᴺ)`, or `𝒫(𝔻ⁿ, 𝔻)` when `codomain` is
/// [`Codomain::Disk`].
pub fn certify(map: &PluriharmonicMap, codomain: Codomain) -> Result<Certificate> {
    if codomain == Codomain::Disk && map.codim() != 1 {
        return Err(Error::Hypothesis(format!(
            "the estimate is stated for scalar maps, got N = {}",
            map.codim()
        )));
    }
    let target = if map.codim() == 1 {
        "unit disk"
    } else {
        "unit ball"
    };
    match map {
        PluriharmonicMap::Series(s) => {
            let bound = s.l1_norm();
            if bound <= 1.0 {
                Ok(Certificate::CoefficientL1 { bound })
            } else if let Some(Provenance::Colonna { degree, .. }) = s.provenance() {
                Ok(Certificate::TruncatedExtremal { degree: *degree })
            } else {
                Err(Error::Hypothesis(format!(
                    "map not certified into the {target} (coefficient l1 bound {bound:.6} > 1)"
                )))
            }
        }
        PluriharmonicMap::Colonna(_) => Ok(Certificate::ClosedForm { form: "colonna" }),
        PluriharmonicMap::Blaschke(_) => Ok(Certificate::ClosedForm { form: "blaschke" }),
        PluriharmonicMap::Composed { outer, .. } => certify(outer, codomain),
    }
}

fn check_unit(name: &str, t: f64) -> Result<()> {
    if !(0.0..1.0).contains(&t) {
        return Err(Error::InvalidParameter(format!(
            "{name} must lie in [0, 1), got {t}"
        )));
    }
    Ok(())
}

fn check_positive_alpha(alpha: &MultiIndex) -> Result<()> {
    if alpha.components().contains(&0) {
        return Err(Error::InvalidParameter(format!(
            "every component of alpha must be at least 1, got {alpha}"
        )));
    }
    Ok(())
}

/// `α! (4/π) (1 + t)^{|α| - n} / (1 - t²)^{|α|}` with `n = len(α)` and
/// `t = ‖z‖∞`.
pub fn rhs_polydisk(alpha: &MultiIndex, z_inf: f64) -> Result<f64> {
    check_positive_alpha(alpha)?;
    check_unit("z_inf", z_inf)?;
    let degree = alpha.degree() as i32;
    let excess = degree - alpha.dim() as i32;
    let num = (1.0 + z_inf).powi(excess);
    let den = (1.0 - z_inf * z_inf).powi(degree);
    Ok(alpha.factorial_f64()? * FOUR_OVER_PI * num / den)
}

/// `(4/π) / (1 - |z|²)`.
pub fn rhs_colonna(z_abs: f64) -> Result<f64> {
    check_unit("|z|", z_abs)?;
    Ok(FOUR_OVER_PI / (1.0 - z_abs * z_abs))
}

/// `k! (1 - |f(z)|²) / ((1 - |z|)^k (1 + |z|))`, the sharp bound for the
/// `k`-th derivative of a holomorphic self-map of the disk.
pub fn rhs_ruscheweyh(order: u32, z_abs: f64, f_abs: f64) -> Result<f64> {
    if order == 0 {
        return Err(Error::InvalidParameter("order must be at least 1".into()));
    }
    check_unit("|z|", z_abs)?;
    check_unit("|f(z)|", f_abs)?;
    let fact: f64 = (1..=order).map(f64::from).product();
    // (1 - t)^k (1 + t) = (1 - t)^{k-1} (1 - t²)
    let den = (1.0 - z_abs).powi(order as i32 - 1) * (1.0 - z_abs * z_abs);
    Ok(fact * (1.0 - f_abs * f_abs) / den)
}

/// `(2m+1)! / (1 - |z|²)^{2m+1} · Σ_{k=0}^{m} C(m,k)² |z|^{2k}`, the bound
/// for derivatives of odd order `2m + 1`.
pub fn rhs_szasz(m: u32, z_abs: f64) -> Result<f64> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    check_unit("|z|", z_abs)?;
    let order = 2 * m + 1;
    let fact: f64 = (1..=order).map(f64::from).product();
    let t2 = z_abs * z_abs;
    let mut binom = 1.0;
    let mut sum = 0.0;
    for k in 0..=m {
        sum += binom * binom * t2.powi(k as i32);
        binom = binom * f64::from(m - k) / f64::from(k + 1);
    }
    Ok(fact / (1.0 - t2).powi(order as i32) * sum)
}

/// `4 / (π (1 - ‖z‖∞²))`.
pub fn rhs_gradient(z_inf: f64) -> Result<f64> {
    check_unit("z_inf", z_inf)?;
    Ok(FOUR_OVER_PI / (1.0 - z_inf * z_inf))
}

/// `(4/π) arctan ‖z‖∞`.
pub fn rhs_growth(z_inf: f64) -> Result<f64> {
    check_unit("z_inf", z_inf)?;
    Ok(FOUR_OVER_PI * z_inf.atan())
}

fn point_params(z: &PolydiskPoint) -> CheckParams {
    CheckParams {
        z: Some(z.clone()),
        ..CheckParams::default()
    }
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

/// `(∂^α f(z), ∂^α_z̄ f(z))` by the requested method, with metadata for
/// the Cauchy path.
fn derivative_by(
    map: &PluriharmonicMap,
    z: &PolydiskPoint,
    alpha: &MultiIndex,
    method: &Method,
) -> Result<(Vec<Complex64>, Vec<Complex64>, Option<QuadMeta>)> {
    match method {
        Method::Exact => {
            let (dh, dg) = map.derivative_exact(z, alpha)?;
            Ok((dh, dg, None))
        }
        Method::Cauchy(settings) => {
            let spec = settings.contour(z)?;
            let d = quadrature::cauchy_derivative(map, z, alpha, &spec)?;
            Ok((d.holo, d.anti, Some(d.meta)))
        }
    }
}

/// `|∂^α f(z)| + |∂^α_z̄ f(z)| ≤ rhs_polydisk(α, ‖z‖∞)` for scalar
/// `f ∈ 𝒫(𝔻ⁿ, 𝔻)` and `α_j ≥ 1`.
pub fn verify_derivative_bound(
    map: &PluriharmonicMap,
    z: &PolydiskPoint,
    alpha: &MultiIndex,
    method: &Method,
    tol: f64,
) -> Result<BoundReport> {
    let cert = certify(map, Codomain::Disk)?;
    let rhs = rhs_polydisk(alpha, z.inf_norm())?;
    let (dh, dg, meta) = derivative_by(map, z, alpha, method)?;
    let lhs = dh[0].norm() + dg[0].norm();
    let params = CheckParams {
        alpha: Some(alpha.clone()),
        method: Some(method.name().into()),
        quadrature: meta,
        note: cert.note(),
        ..point_params(z)
    };
    Ok(BoundReport::new(
        CheckId::DerivativePolydisk,
        params,
        lhs,
        rhs,
        tol,
    ))
}

/// `|a_k| + |b_k| ≤ 4/π` for every `1 ≤ |k| ≤ max_degree`, with the
/// coefficients extracted by torus quadrature on `spec`.
///
/// The coefficients are computed at the fixed radii of `spec` (no limit
/// `r → 1` is taken); the quadrature error estimate is attached to each
/// report.
pub fn verify_coefficient_bound(
    map: &PluriharmonicMap,
    max_degree: u32,
    spec: &QuadratureSpec,
) -> Result<Vec<BoundReport>> {
    let cert = certify(map, Codomain::Disk)?;
    let ks: Vec<MultiIndex> = MultiIndex::enumerate(map.dim(), max_degree, 0)
        .into_iter()
        .filter(|k| !k.is_zero())
        .collect();
    let estimates = quadrature::extract_coefficients(map, &ks, spec)?;
    Ok(estimates
        .into_iter()
        .map(|e| {
            let lhs = e.a[0].norm() + e.b[0].norm();
            let params = CheckParams {
                k: Some(e.k),
                method: Some("quadrature".into()),
                quadrature: Some(e.meta),
                note: cert.note(),
                ..CheckParams::default()
            };
            BoundReport::new(
                CheckId::Coefficient,
                params,
                lhs,
                FOUR_OVER_PI,
                TOL_QUADRATURE,
            )
        })
        .collect())
}

/// `‖Σ_{|β|=m} a_β z^β + Σ_{|β|=m} conj(b_β) conj(z)^β‖ ≤ 4/π` for
/// `f ∈ 𝒫(𝔻ⁿ, 𝔹ᴺ)` and `m ≥ 1`.
///
/// Finite series are summed exactly; other maps use the Fourier modes of
/// `θ ↦ f(e^{iθ} z)` on [`HOMOGENEOUS_NODES`] nodes.
pub fn verify_homogeneous_bound(
    map: &PluriharmonicMap,
    m: u32,
    z: &PolydiskPoint,
) -> Result<BoundReport> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    let cert = certify(map, Codomain::Ball)?;
    if z.dim() != map.dim() {
        return Err(Error::DimensionMismatch {
            expected: map.dim(),
            got: z.dim(),
        });
    }
    let (value, method, tol) = match map.as_series() {
        Some(s) => {
            let mut v = vec![Complex64::new(0.0, 0.0); s.codim()];
            for (k, t) in s.terms().filter(|(k, _)| k.degree() == u64::from(m)) {
                let mono: Complex64 = k
                    .components()
                    .iter()
                    .zip(z.coords())
                    .map(|(&e, zj)| zj.powu(e))
                    .product();
                for (vi, (a, b)) in v.iter_mut().zip(t.a.iter().zip(&t.b)) {
                    *vi += a * mono + (b * mono).conj();
                }
            }
            (v, "exact", TOL_EXACT)
        }
        None => {
            let (p, q) = quadrature::homogeneous_parts(map, z, m, HOMOGENEOUS_NODES)?;
            let v = p.iter().zip(&q).map(|(p, q)| p + q).collect();
            (v, "quadrature", TOL_QUADRATURE)
        }
    };
    let params = CheckParams {
        m: Some(m),
        method: Some(method.into()),
        note: cert.note(),
        ..point_params(z)
    };
    Ok(BoundReport::new(
        CheckId::Homogeneous,
        params,
        norm(&value),
        FOUR_OVER_PI,
        tol,
    ))
}

/// `‖f(0)‖² + Σ_{|β|≥1} (‖a_β‖² + ‖b_β‖²) ≤ 1` for a finite series in
/// `𝒫(𝔻ⁿ, 𝔹ᴺ)`.
pub fn verify_l2_bound(map: &PluriharmonicMap) -> Result<BoundReport> {
    let series = map.as_series().ok_or(Error::UnsupportedForm {
        operation: "the l2 coefficient check",
        form: map.form_name(),
    })?;
    let cert = certify(map, Codomain::Ball)?;
    let params = CheckParams {
        method: Some("exact".into()),
        note: cert.note(),
        ..CheckParams::default()
    };
    Ok(BoundReport::new(
        CheckId::L2Coefficients,
        params,
        series.l2_coefficient_sum(),
        1.0,
        TOL_EXACT,
    ))
}

/// `max_{‖θ‖∞=1} ‖Df(z)θ + D̄f(z) conj(θ)‖ ≤ 4/(π(1 - ‖z‖∞²))` for
/// `f ∈ 𝒫(𝔻ⁿ, 𝔹ᴺ)`.
///
/// The maximum is estimated by [`search::direction_max`], which returns a
/// value attained at a concrete `θ`. The lhs is therefore a lower estimate
/// of the true maximum and a pass certifies the sampled directions only.
pub fn verify_gradient_bound(
    map: &PluriharmonicMap,
    z: &PolydiskPoint,
    direction_samples: usize,
) -> Result<BoundReport> {
    let cert = certify(map, Codomain::Ball)?;
    let rhs = rhs_gradient(z.inf_norm())?;
    let jp = jacobian_pair(map, z)?;
    let best = search::direction_max(&jp, direction_samples, DEFAULT_REFINE_STEPS);
    let (method, tol) = match map {
        PluriharmonicMap::Composed { .. } => ("cauchy", TOL_QUADRATURE),
        _ => ("exact", TOL_EXACT),
    };
    let mut note =
        String::from("lhs is the best sampled direction, a lower estimate of the maximum");
    if let Some(extra) = cert.note() {
        note.push_str("; ");
        note.push_str(&extra);
    }
    let params = CheckParams {
        method: Some(method.into()),
        theta: Some(best.theta),
        note: Some(note),
        ..point_params(z)
    };
    Ok(BoundReport::new(
        CheckId::Gradient,
        params,
        best.value,
        rhs,
        tol,
    ))
}

/// `‖f(z)‖ ≤ (4/π) arctan ‖z‖∞` for `f ∈ 𝒫(𝔻ⁿ, 𝔹ᴺ)` with `f(0) = 0`.
pub fn verify_growth_bound(map: &PluriharmonicMap, z: &PolydiskPoint) -> Result<BoundReport> {
    let cert = certify(map, Codomain::Ball)?;
    let at_origin = norm(&map.evaluate(&PolydiskPoint::origin(map.dim()))?);
    if at_origin > ORIGIN_TOL {
        return Err(Error::Hypothesis(format!(
            "the growth estimate needs f(0) = 0, got ‖f(0)‖ = {at_origin:.3e}"
        )));
    }
    let rhs = rhs_growth(z.inf_norm())?;
    let lhs = norm(&map.evaluate(z)?);
    let params = CheckParams {
        method: Some("exact".into()),
        note: cert.note(),
        ..point_params(z)
    };
    Ok(BoundReport::new(
        CheckId::Growth,
        params,
        lhs,
        rhs,
        TOL_EXACT,
    ))
}

/// Refuses anything that is not a holomorphic self-map of the disk.
fn certify_holomorphic_disk(map: &PluriharmonicMap) -> Result<Certificate> {
    if map.dim() != 1 {
        return Err(Error::Hypothesis(format!(
            "the classical estimates are for maps of one variable, got n = {}",
            map.dim()
        )));
    }
    let cert = certify(map, Codomain::Disk)?;
    if !map.is_holomorphic() {
        return Err(Error::Hypothesis(
            "the classical estimates need a holomorphic map".into(),
        ));
    }
    Ok(cert)
}

fn classical_derivative(
    map: &PluriharmonicMap,
    z: &PolydiskPoint,
    order: u32,
    settings: &QuadratureSettings,
) -> Result<(f64, QuadMeta)> {
    let spec = settings.contour(z)?;
    let alpha = MultiIndex::new(vec![order])?;
    let d = quadrature::cauchy_derivative(map, z, &alpha, &spec)?;
    Ok((d.holo[0].norm(), d.meta))
}

/// Quadrature tolerance scaled to the size of the rhs, since high-order
/// derivatives near the boundary are large.
fn scaled_tol(rhs: f64) -> f64 {
    TOL_QUADRATURE * rhs.max(1.0)
}

/// `|f^{(2m+1)}(z)| ≤ rhs_szasz(m, |z|)` for a holomorphic self-map of
/// the disk, with the derivative from a Cauchy integral.
pub fn verify_szasz(
    map: &PluriharmonicMap,
    z: &PolydiskPoint,
    m: u32,
    settings: &QuadratureSettings,
) -> Result<BoundReport> {
    certify_holomorphic_disk(map)?;
    let rhs = rhs_szasz(m, z.inf_norm())?;
    let (lhs, meta) = classical_derivative(map, z, 2 * m + 1, settings)?;
    let params = CheckParams {
        m: Some(m),
        method: Some("cauchy".into()),
        quadrature: Some(meta),
        ..point_params(z)
    };
    Ok(BoundReport::new(
        CheckId::Szasz,
        params,
        lhs,
        rhs,
        scaled_tol(rhs),
    ))
}

/// `|f^{(k)}(z)| ≤ rhs_ruscheweyh(k, |z|, |f(z)|)` for a holomorphic
/// self-map of the disk, with the derivative from a Cauchy integral.
pub fn verify_ruscheweyh(
    map: &PluriharmonicMap,
    z: &PolydiskPoint,
    order: u32,
    settings: &QuadratureSettings,
) -> Result<BoundReport> {
    certify_holomorphic_disk(map)?;
    let f_abs = map.evaluate(z)?[0].norm();
    let rhs = rhs_ruscheweyh(order, z.inf_norm(), f_abs)?;
    let (lhs, meta) = classical_derivative(map, z, order, settings)?;
    let params = CheckParams {
        alpha: Some(MultiIndex::new(vec![order])?),
        method: Some("cauchy".into()),
        quadrature: Some(meta),
        ..point_params(z)
    };
    Ok(BoundReport::new(
        CheckId::Ruscheweyh,
        params,
        lhs,
        rhs,
        scaled_tol(rhs),
    ))
}
