//! Pluriharmonic mappings `f = h + conj(g)` on the unit polydisk.
//!
//! A [`PluriharmonicMap`] is one of:
//!
//! * a finite series ([`SeriesMap`]), evaluable and differentiable exactly;
//! * a closed-form map ([`ColonnaMap`], [`BlaschkeProduct`]), evaluated from
//!   its formula and differentiated exactly through Taylor jets;
//! * a lazy composition `f ∘ φ` with a polydisk automorphism. Composition is
//!   never expanded symbolically: it is evaluated pointwise, its derivatives
//!   come from Cauchy integrals and its coefficients from torus quadrature.
//!
//! Every variant exposes the holomorphic pair `(h(z), g(z))` pointwise,
//! which is what the Cauchy formulas integrate.

mod automorphism;
mod closed_form;
pub mod io;
mod series;

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub use automorphism::{MobiusFactor, PolydiskAutomorphism, UNIMODULAR_TOL};
pub use closed_form::{BlaschkeProduct, ColonnaMap};
pub use series::{Provenance, SeriesMap, Term};

use crate::error::{Error, Result};
use crate::multiindex::MultiIndex;
use crate::quadrature::{self, QuadratureSpec};

/// A point of the open unit polydisk, `max_j |z_j| < 1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Complex64>", into = "Vec<Complex64>")]
pub struct PolydiskPoint(Vec<Complex64>);

impl PolydiskPoint {
    pub fn new(coords: Vec<Complex64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidParameter(
                "a point needs at least one coordinate".into(),
            ));
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidParameter("non-finite coordinate".into()));
        }
        let inf_norm = inf_norm(&coords);
        if inf_norm >= 1.0 {
            return Err(Error::OutsidePolydisk { inf_norm });
        }
        Ok(Self(coords))
    }

    pub fn origin(n: usize) -> Self {
        assert!(n >= 1, "dimension must be at least 1");
        Self(vec![Complex64::new(0.0, 0.0); n])
    }

    /// Convenience constructor from `(re, im)` pairs.
    pub fn from_pairs(pairs: &[(f64, f64)]) -> Result<Self> {
        Self::new(
            pairs
                .iter()
                .map(|&(re, im)| Complex64::new(re, im))
                .collect(),
        )
    }

    /// Uniform sample of the polydisk of radius `max_norm` (uniform in area in
    /// each coordinate).
    pub fn random<R: Rng + ?Sized>(rng: &mut R, n: usize, max_norm: f64) -> Self {
        let coords = (0..n)
            .map(|_| {
                let r = max_norm * rng.random::<f64>().sqrt();
                Complex64::from_polar(r, rng.random_range(0.0..TAU))
            })
            .collect();
        Self(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Complex64] {
        &self.0
    }

    /// `‖z‖∞ = max_j |z_j|`.
    pub fn inf_norm(&self) -> f64 {
        inf_norm(&self.0)
    }
}

impl TryFrom<Vec<Complex64>> for PolydiskPoint {
    type Error = Error;

    fn try_from(v: Vec<Complex64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<PolydiskPoint> for Vec<Complex64> {
    fn from(p: PolydiskPoint) -> Self {
        p.0
    }
}

pub(crate) fn inf_norm(z: &[Complex64]) -> f64 {
    z.iter().map(|c| c.norm()).fold(0.0, f64::max)
}

/// A pluriharmonic map from `𝔻ⁿ` to `ℂᴺ`.
#[derive(Clone, Debug, PartialEq)]
pub enum PluriharmonicMap {
    Series(SeriesMap),
    Colonna(ColonnaMap),
    Blaschke(BlaschkeProduct),
    Composed {
        inner: PolydiskAutomorphism,
        outer: Box<PluriharmonicMap>,
    },
}

impl From<SeriesMap> for PluriharmonicMap {
    fn from(m: SeriesMap) -> Self {
        Self::Series(m)
    }
}

impl From<ColonnaMap> for PluriharmonicMap {
    fn from(m: ColonnaMap) -> Self {
        Self::Colonna(m)
    }
}

impl From<BlaschkeProduct> for PluriharmonicMap {
    fn from(m: BlaschkeProduct) -> Self {
        Self::Blaschke(m)
    }
}

/// `Df` and `D̄f` at a point: `N × n` matrices of `∂f_i/∂z_m` and
/// `∂f_i/∂z̄_m`, stored row-major (`d[i][m]`).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JacobianPair {
    pub d: Vec<Vec<Complex64>>,
    pub dbar: Vec<Vec<Complex64>>,
}

impl JacobianPair {
    pub fn rows(&self) -> usize {
        self.d.len()
    }

    pub fn cols(&self) -> usize {
        self.d.first().map_or(0, Vec::len)
    }

    /// `Df θ + D̄f conj(θ)`.
    pub fn apply(&self, theta: &[Complex64]) -> Vec<Complex64> {
        self.d
            .iter()
            .zip(&self.dbar)
            .map(|(row, rowbar)| {
                row.iter()
                    .zip(rowbar)
                    .zip(theta)
                    .map(|((d, db), t)| d * t + db * t.conj())
                    .sum()
            })
            .collect()
    }
}

impl PluriharmonicMap {
    /// Domain dimension `n`.
    pub fn dim(&self) -> usize {
        match self {
            Self::Series(s) => s.dim(),
            Self::Colonna(c) => c.dim(),
            Self::Blaschke(_) => 1,
            Self::Composed { inner, .. } => inner.dim(),
        }
    }

    /// Codomain dimension `N`.
    pub fn codim(&self) -> usize {
        match self {
            Self::Series(s) => s.codim(),
            Self::Colonna(_) | Self::Blaschke(_) => 1,
            Self::Composed { outer, .. } => outer.codim(),
        }
    }

    pub fn form_name(&self) -> &'static str {
        match self {
            Self::Series(_) => "series",
            Self::Colonna(_) => "colonna",
            Self::Blaschke(_) => "blaschke",
            Self::Composed { .. } => "composed",
        }
    }

    pub fn as_series(&self) -> Option<&SeriesMap> {
        match self {
            Self::Series(s) => Some(s),
            _ => None,
        }
    }

    /// True when `g` is constant, i.e. the map is holomorphic.
    pub fn is_holomorphic(&self) -> bool {
        match self {
            Self::Series(s) => s.is_holomorphic(),
            Self::Colonna(_) => false,
            Self::Blaschke(_) => true,
            Self::Composed { outer, .. } => outer.is_holomorphic(),
        }
    }

    fn check_point(&self, z: &PolydiskPoint) -> Result<()> {
        if z.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: z.dim(),
            });
        }
        Ok(())
    }

    /// `f(z)`.
    pub fn evaluate(&self, z: &PolydiskPoint) -> Result<Vec<Complex64>> {
        self.check_point(z)?;
        Ok(self.eval_raw(z.coords()))
    }

    /// `(h(z), g(z))`, the holomorphic pair with `f = h + conj(g)`.
    pub fn holomorphic_parts(&self, z: &PolydiskPoint) -> Result<(Vec<Complex64>, Vec<Complex64>)> {
        self.check_point(z)?;
        Ok(self.parts_raw(z.coords()))
    }

    /// Unchecked evaluation; callers guarantee dimension and interiority.
    pub(crate) fn eval_raw(&self, z: &[Complex64]) -> Vec<Complex64> {
        match self {
            Self::Series(s) => s.eval_raw(z),
            Self::Colonna(c) => vec![c.eval_raw(z)],
            Self::Blaschke(b) => vec![b.eval_raw(z[0])],
            Self::Composed { inner, outer } => outer.eval_raw(&inner.apply_raw(z)),
        }
    }

    pub(crate) fn parts_raw(&self, z: &[Complex64]) -> (Vec<Complex64>, Vec<Complex64>) {
        match self {
            Self::Series(s) => s.parts_raw(z),
            Self::Colonna(c) => {
                let (h, g) = c.parts_raw(z);
                (vec![h], vec![g])
            }
            Self::Blaschke(b) => (vec![b.eval_raw(z[0])], vec![Complex64::new(0.0, 0.0)]),
            Self::Composed { inner, outer } => outer.parts_raw(&inner.apply_raw(z)),
        }
    }

    /// Exact `(∂^α_z f(z), ∂^α_z̄ f(z))`.
    ///
    /// The second entry is the derivative of `f` with respect to `z̄`, i.e.
    /// `conj(∂^α g)`; for `α = 0` the two entries are `h(z)` and `conj(g(z))`
    /// and sum to `f(z)`. Mixed `∂z ∂z̄` derivatives vanish identically and
    /// are not represented.
    ///
    /// Series maps differentiate term by term; closed-form maps go through
    /// Taylor jets. Composed maps have no exact path: use
    /// [`quadrature::cauchy_derivative`].
    pub fn derivative_exact(
        &self,
        z: &PolydiskPoint,
        alpha: &MultiIndex,
    ) -> Result<(Vec<Complex64>, Vec<Complex64>)> {
        self.check_point(z)?;
        if alpha.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: alpha.dim(),
            });
        }
        match self {
            Self::Series(s) => Ok(s.derivative_raw(z.coords(), alpha)),
            Self::Colonna(c) => {
                let (dh, dg) = c.derivative_raw(z.coords(), alpha)?;
                Ok((vec![dh], vec![dg]))
            }
            Self::Blaschke(b) => {
                let order = alpha.components()[0];
                let dh = b.derivative_raw(z.coords()[0], order);
                Ok((vec![dh], vec![Complex64::new(0.0, 0.0)]))
            }
            Self::Composed { .. } => Err(Error::UnsupportedForm {
                operation: "exact differentiation",
                form: "composed",
            }),
        }
    }

    /// Exact derivative when available, otherwise the Cauchy integral with
    /// the default contour for `z`.
    pub fn derivative(
        &self,
        z: &PolydiskPoint,
        alpha: &MultiIndex,
    ) -> Result<(Vec<Complex64>, Vec<Complex64>)> {
        match self {
            Self::Composed { .. } => {
                let spec = QuadratureSpec::for_point(z, QuadratureSpec::default_nodes(self.dim()))?;
                let d = quadrature::cauchy_derivative(self, z, alpha, &spec)?;
                Ok((d.holo, d.anti))
            }
            _ => self.derivative_exact(z, alpha),
        }
    }
}

/// `Df(z)` and `D̄f(z)`, exact where possible and by Cauchy integrals for
/// composed maps.
pub fn jacobian_pair(map: &PluriharmonicMap, z: &PolydiskPoint) -> Result<JacobianPair> {
    let (n, codim) = (map.dim(), map.codim());
    let zero = Complex64::new(0.0, 0.0);
    let mut d = vec![vec![zero; n]; codim];
    let mut dbar = vec![vec![zero; n]; codim];
    for m in 0..n {
        let (dh, dg) = map.derivative(z, &MultiIndex::unit(n, m))?;
        for i in 0..codim {
            d[i][m] = dh[i];
            dbar[i][m] = dg[i];
        }
    }
    Ok(JacobianPair { d, dbar })
}

/// The extremal `f(z) = (2γ/π) arg((1 + ψ(z))/(1 - ψ(z)))` with
/// `ψ(z) = λ (z - a)/(1 - ā z)`, kept in closed form.
pub fn make_extremal_colonna(
    gamma: Complex64,
    a: Complex64,
    lambda: Complex64,
) -> Result<PluriharmonicMap> {
    Ok(ColonnaMap::new(gamma, vec![MobiusFactor::new(a, lambda)?])?.into())
}

/// Lazy composition `f ∘ φ`.
pub fn compose_with_automorphism(
    map: &PluriharmonicMap,
    phi: &PolydiskAutomorphism,
) -> Result<PluriharmonicMap> {
    if map.dim() != phi.dim() {
        return Err(Error::DimensionMismatch {
            expected: map.dim(),
            got: phi.dim(),
        });
    }
    Ok(PluriharmonicMap::Composed {
        inner: phi.clone(),
        outer: Box::new(map.clone()),
    })
}

/// Random finite series with every multi-index of degree `≤ degree`,
/// rescaled so that its coefficient ℓ¹ norm is exactly `1 - margin`. This
/// makes `sup ‖f‖ < 1` on the polydisk hold by construction.
///
/// Coefficient `a_k` (resp. `b_k`) for the `i`-th index in graded order is
/// drawn from ChaCha stream `2i` (resp. `2i + 1`) of `seed`. `b_0` is left
/// zero since it would merge with `a_0`.
pub fn random_bounded_map(
    n: usize,
    codim: usize,
    degree: u32,
    seed: u64,
    margin: f64,
) -> Result<PluriharmonicMap> {
    if n == 0 || codim == 0 {
        return Err(Error::InvalidParameter(
            "dimensions must be at least 1".into(),
        ));
    }
    if !(margin > 0.0 && margin < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "margin must lie in (0, 1), got {margin}"
        )));
    }
    let draw = |stream: u64| -> Vec<Complex64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        (0..codim)
            .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect()
    };
    let mut map = SeriesMap::new(n, codim);
    for (i, k) in MultiIndex::enumerate(n, degree, 0).into_iter().enumerate() {
        let i = i as u64;
        map.add_holo(k.clone(), &draw(2 * i))?;
        if !k.is_zero() {
            map.add_anti(k, &draw(2 * i + 1))?;
        }
    }
    map.rescale_l1(1.0 - margin);
    Ok(map.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn pt(pairs: &[(f64, f64)]) -> PolydiskPoint {
        PolydiskPoint::from_pairs(pairs).unwrap()
    }

    fn colonna_id() -> PluriharmonicMap {
        make_extremal_colonna(c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)).unwrap()
    }

    #[test]
    fn point_validation() {
        assert!(PolydiskPoint::from_pairs(&[(0.5, 0.0), (0.0, 0.99)]).is_ok());
        assert!(matches!(
            PolydiskPoint::from_pairs(&[(0.5, 0.0), (0.6, 0.8)]),
            Err(Error::OutsidePolydisk { .. })
        ));
        assert!(PolydiskPoint::from_pairs(&[(f64::NAN, 0.0)]).is_err());
        assert!(serde_json::from_str::<PolydiskPoint>("[[1.0,0.0]]").is_err());
    }

    #[test]
    fn evaluate_examples() {
        let f: PluriharmonicMap = SeriesMap::scalar(2).holo(&[1, 1], c(1.0, 0.0)).into();
        let v = f.evaluate(&pt(&[(0.5, 0.0), (0.5, 0.0)])).unwrap();
        assert!((v[0] - c(0.25, 0.0)).norm() < 1e-15);

        let f: PluriharmonicMap = SeriesMap::scalar(2)
            .holo(&[2, 0], c(0.3, 0.0))
            .anti(&[0, 1], c(0.2, 0.0))
            .into();
        let v = f.evaluate(&pt(&[(0.0, 0.5), (0.4, 0.0)])).unwrap();
        assert!((v[0] - c(0.005, 0.0)).norm() < 1e-15);

        let v = colonna_id().evaluate(&pt(&[(0.0, 0.5)])).unwrap();
        assert!((v[0].re - 0.5903344).abs() < 1e-7);
        assert!((v[0].re - 4.0 / PI * 0.5f64.atan()).abs() < 1e-15);
    }

    #[test]
    fn evaluate_dimension_mismatch() {
        let f: PluriharmonicMap = SeriesMap::scalar(2).holo(&[1, 1], c(1.0, 0.0)).into();
        assert!(matches!(
            f.evaluate(&pt(&[(0.1, 0.0)])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn derivative_exact_examples() {
        let f: PluriharmonicMap = SeriesMap::scalar(2)
            .holo(&[1, 1], c(1.0, 0.0))
            .anti(&[2, 0], c(1.0, 0.0))
            .into();
        let alpha = MultiIndex::new(vec![1, 1]).unwrap();
        for z in [
            pt(&[(0.0, 0.0), (0.0, 0.0)]),
            pt(&[(0.3, -0.2), (0.1, 0.7)]),
        ] {
            let (dh, dg) = f.derivative_exact(&z, &alpha).unwrap();
            assert!((dh[0] - c(1.0, 0.0)).norm() < 1e-15);
            assert_eq!(dg[0], c(0.0, 0.0));
        }

        let f: PluriharmonicMap = SeriesMap::scalar(2).holo(&[2, 0], c(0.3, 0.0)).into();
        let (dh, dg) = f
            .derivative_exact(
                &pt(&[(0.1, 0.0), (0.7, 0.0)]),
                &MultiIndex::new(vec![2, 0]).unwrap(),
            )
            .unwrap();
        assert!((dh[0] - c(0.6, 0.0)).norm() < 1e-15);
        assert_eq!(dg[0], c(0.0, 0.0));

        let (dh, dg) = colonna_id()
            .derivative_exact(&PolydiskPoint::origin(1), &MultiIndex::unit(1, 0))
            .unwrap();
        assert!((dh[0] - c(0.0, -2.0 / PI)).norm() < 1e-15);
        assert!((dh[0].norm() + dg[0].norm() - 4.0 / PI).abs() < 1e-15);
    }

    #[test]
    fn derivative_exact_rejects_composed() {
        let f =
            compose_with_automorphism(&colonna_id(), &PolydiskAutomorphism::identity(1)).unwrap();
        assert!(matches!(
            f.derivative_exact(&PolydiskPoint::origin(1), &MultiIndex::unit(1, 0)),
            Err(Error::UnsupportedForm { .. })
        ));
        assert!(colonna_id()
            .derivative_exact(&PolydiskPoint::origin(1), &MultiIndex::unit(2, 0))
            .is_err());
    }

    #[test]
    fn zero_order_derivative_splits_evaluate() {
        let f = random_bounded_map(2, 2, 4, 11, 0.1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let z = PolydiskPoint::random(&mut rng, 2, 0.95);
            let (h, gbar) = f.derivative_exact(&z, &MultiIndex::zeros(2)).unwrap();
            let v = f.evaluate(&z).unwrap();
            for i in 0..2 {
                assert!((h[i] + gbar[i] - v[i]).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn jacobian_examples() {
        let re_z1: PluriharmonicMap = SeriesMap::scalar(2)
            .holo(&[1, 0], c(0.5, 0.0))
            .anti(&[1, 0], c(0.5, 0.0))
            .into();
        let jp = jacobian_pair(&re_z1, &PolydiskPoint::origin(2)).unwrap();
        assert_eq!(jp.d, vec![vec![c(0.5, 0.0), c(0.0, 0.0)]]);
        assert_eq!(jp.dbar, vec![vec![c(0.5, 0.0), c(0.0, 0.0)]]);

        let f: PluriharmonicMap = SeriesMap::new(2, 2)
            .holo_vec(&[1, 0], &[c(1.0, 0.0), c(0.0, 0.0)])
            .anti_vec(&[0, 1], &[c(0.0, 0.0), c(1.0, 0.0)])
            .into();
        let jp = jacobian_pair(&f, &PolydiskPoint::origin(2)).unwrap();
        let (o, z) = (c(1.0, 0.0), c(0.0, 0.0));
        assert_eq!(jp.d, vec![vec![o, z], vec![z, z]]);
        assert_eq!(jp.dbar, vec![vec![z, z], vec![z, o]]);

        let jp = jacobian_pair(&colonna_id(), &PolydiskPoint::origin(1)).unwrap();
        assert!((jp.d[0][0] - c(0.0, -2.0 / PI)).norm() < 1e-15);
        assert!((jp.dbar[0][0].norm() - 2.0 / PI).abs() < 1e-15);
    }

    #[test]
    fn jacobian_of_composed_uses_quadrature() {
        let f = random_bounded_map(2, 2, 3, 5, 0.05).unwrap();
        let phi = PolydiskAutomorphism::centered_at(pt(&[(0.3, 0.1), (-0.2, 0.4)]));
        let t = compose_with_automorphism(&f, &phi).unwrap();
        let jp = jacobian_pair(&t, &PolydiskPoint::origin(2)).unwrap();
        // Chain rule at 0: D(f∘φ)(0) = Df(c) Dφ(0).
        let jf = jacobian_pair(&f, phi.center()).unwrap();
        let dphi = phi.derivative_at_zero();
        for i in 0..2 {
            for (m, row) in dphi.iter().enumerate() {
                assert!((jp.d[i][m] - jf.d[i][m] * row[m]).norm() < 1e-10);
                assert!((jp.dbar[i][m] - jf.dbar[i][m] * row[m].conj()).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn colonna_examples() {
        let f = colonna_id();
        assert_eq!(
            f.evaluate(&PolydiskPoint::origin(1)).unwrap()[0],
            c(0.0, 0.0)
        );
        let near = f.evaluate(&pt(&[(0.0, 0.999_999)])).unwrap()[0].re;
        assert!(near > 0.999_999 && near < 1.0);
        assert!(make_extremal_colonna(c(1.1, 0.0), c(0.0, 0.0), c(1.0, 0.0)).is_err());
        assert!(make_extremal_colonna(c(1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)).is_err());
        assert!(make_extremal_colonna(c(1.0, 0.0), c(0.0, 0.0), c(0.0, 1.0 + 1e-9)).is_err());
    }

    #[test]
    fn colonna_real_and_bounded() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let f = make_extremal_colonna(c(1.0, 0.0), c(0.4, -0.3), Complex64::from_polar(1.0, 2.0))
            .unwrap();
        for _ in 0..1000 {
            let z = PolydiskPoint::random(&mut rng, 1, 0.999_999);
            let v = f.evaluate(&z).unwrap()[0];
            assert_eq!(v.im, 0.0);
            assert!(v.re.abs() < 1.0);
        }
    }

    #[test]
    fn colonna_parts_reproduce_closed_formula() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let f = make_extremal_colonna(
            Complex64::from_polar(1.0, 0.4),
            c(-0.5, 0.2),
            Complex64::from_polar(1.0, -1.0),
        )
        .unwrap();
        for _ in 0..200 {
            let z = PolydiskPoint::random(&mut rng, 1, 0.99);
            let (h, g) = f.holomorphic_parts(&z).unwrap();
            let v = f.evaluate(&z).unwrap();
            assert!((h[0] + g[0].conj() - v[0]).norm() < 1e-13);
        }
    }

    #[test]
    fn colonna_series_matches_log_linear_expansion() {
        // Independent route: L(ψ(z)) = log(p0 + p1 z) - log(q0 + q1 z) with
        // p0 = 1 - λa, p1 = λ - ā, q0 = 1 + λa, q1 = -(λ + ā).
        let (gamma, a, lambda) = (c(1.0, 0.0), c(0.3, 0.2), Complex64::from_polar(1.0, 0.9));
        let map = ColonnaMap::new(gamma, vec![MobiusFactor::new(a, lambda).unwrap()]).unwrap();
        let series = map.series_expansion(12);
        let (p0, p1) = (1.0 - lambda * a, lambda - a.conj());
        let (q0, q1) = (1.0 + lambda * a, -(lambda + a.conj()));
        let log_lin = |c0: Complex64, c1: Complex64, j: u32| -> Complex64 {
            if j == 0 {
                return c0.ln();
            }
            let sign = if j % 2 == 1 { 1.0 } else { -1.0 };
            sign * (c1 / c0).powu(j) / f64::from(j)
        };
        for j in 0..=12u32 {
            let l = log_lin(p0, p1, j) - log_lin(q0, q1, j);
            let expect = -(c(0.0, 1.0) * gamma / PI) * l;
            let k = MultiIndex::new(vec![j]).unwrap();
            let got = series.term(&k).unwrap().a[0];
            assert!((got - expect).norm() < 1e-13, "j={j}: {got} vs {expect}");
        }
    }

    #[test]
    fn colonna_jet_derivatives_match_finite_differences() {
        let factors = vec![
            MobiusFactor::new(c(0.2, 0.1), Complex64::from_polar(1.0, 0.3)).unwrap(),
            MobiusFactor::new(c(-0.4, 0.3), Complex64::from_polar(1.0, 2.1)).unwrap(),
        ];
        let f: PluriharmonicMap = ColonnaMap::new(Complex64::from_polar(1.0, 0.7), factors)
            .unwrap()
            .into();
        let z = pt(&[(0.1, -0.3), (0.25, 0.2)]);
        let h = 1e-5;
        for m in 0..2 {
            let (dh, dg) = f.derivative_exact(&z, &MultiIndex::unit(2, m)).unwrap();
            let shift = |delta: Complex64| {
                let mut coords = z.coords().to_vec();
                coords[m] += delta;
                f.evaluate(&PolydiskPoint::new(coords).unwrap()).unwrap()[0]
            };
            let fx = (shift(c(h, 0.0)) - shift(c(-h, 0.0))) / (2.0 * h);
            let fy = (shift(c(0.0, h)) - shift(c(0.0, -h))) / (2.0 * h);
            let dz = 0.5 * (fx - c(0.0, 1.0) * fy);
            let dzbar = 0.5 * (fx + c(0.0, 1.0) * fy);
            assert!((dz - dh[0]).norm() < 1e-8);
            assert!((dzbar - dg[0]).norm() < 1e-8);
        }
    }

    #[test]
    fn composition_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let f = random_bounded_map(2, 1, 4, 3, 0.1).unwrap();
        let id = compose_with_automorphism(&f, &PolydiskAutomorphism::identity(2)).unwrap();
        for _ in 0..20 {
            let z = PolydiskPoint::random(&mut rng, 2, 0.99);
            let d = (id.evaluate(&z).unwrap()[0] - f.evaluate(&z).unwrap()[0]).norm();
            assert!(d < 1e-14);
        }

        let phi = PolydiskAutomorphism::random(&mut rng, 2, 0.8);
        let t = compose_with_automorphism(&f, &phi).unwrap();
        let at0 = t.evaluate(&PolydiskPoint::origin(2)).unwrap();
        assert_eq!(at0, f.evaluate(phi.center()).unwrap());
        for _ in 0..20 {
            let z = PolydiskPoint::random(&mut rng, 2, 0.95);
            let lhs = t.evaluate(&z).unwrap()[0];
            let rhs = f.evaluate(&phi.apply(&z).unwrap()).unwrap()[0];
            assert!((lhs - rhs).norm() < 1e-13);
        }
        assert!(compose_with_automorphism(&f, &PolydiskAutomorphism::identity(3)).is_err());
    }

    #[test]
    fn random_map_contract() {
        let f = random_bounded_map(3, 2, 4, 99, 0.05).unwrap();
        assert!(f.as_series().unwrap().l1_norm() <= 0.95 + 1e-12);
        assert_eq!(f, random_bounded_map(3, 2, 4, 99, 0.05).unwrap());
        assert_ne!(f, random_bounded_map(3, 2, 4, 100, 0.05).unwrap());

        let constant = random_bounded_map(2, 1, 0, 4, 0.2).unwrap();
        let s = constant.as_series().unwrap();
        assert_eq!(s.max_degree(), 0);
        assert!(s.value_at_origin()[0].norm() <= 0.8 + 1e-12);
        assert!(random_bounded_map(2, 1, 2, 4, 0.0).is_err());
    }

    #[test]
    fn blaschke_derivatives_match_difference_quotients() {
        let b: PluriharmonicMap = BlaschkeProduct::new(
            Complex64::from_polar(1.0, 0.5),
            vec![c(0.3, 0.1), c(-0.5, 0.4)],
        )
        .unwrap()
        .into();
        let z = pt(&[(0.2, -0.1)]);
        let h = 1e-4;
        let ev = |dz: f64| b.evaluate(&pt(&[(0.2 + dz, -0.1)])).unwrap()[0];
        let (d1, g1) = b.derivative_exact(&z, &MultiIndex::unit(1, 0)).unwrap();
        let (d2, _) = b
            .derivative_exact(&z, &MultiIndex::new(vec![2]).unwrap())
            .unwrap();
        assert!((d1[0] - (ev(h) - ev(-h)) / (2.0 * h)).norm() < 1e-7);
        assert!((d2[0] - (ev(h) - 2.0 * ev(0.0) + ev(-h)) / (h * h)).norm() < 1e-5);
        assert_eq!(g1[0], c(0.0, 0.0));
        assert!(b.is_holomorphic());
    }
}
