//! Numerical verification of Schwarz-Pick type estimates for pluriharmonic
//! mappings `f = h + conj(g)` of the unit polydisk `𝔻ⁿ`.
//!
//! * [`multiindex`]: exponents and derivative orders.
//! * [`mapping`]: finite series, closed-form extremals, Blaschke products and
//!   lazy compositions with polydisk automorphisms.
//! * [`quadrature`]: trapezoidal rules on tori for coefficients, Cauchy
//!   derivatives and the `∫|cos(mθ + γ)| dθ = 4` identity.
//! * [`bounds`]: right-hand sides of the estimates and certified checks.
//! * [`search`]: derivative-free sharpness probing.
//! * [`report`]: JSON-lines and CSV output.
//!
//! ```
//! use num_complex::Complex64;
//! use polyschwarz::{bounds, make_extremal_colonna, Method, MultiIndex, PolydiskPoint};
//!
//! let f = make_extremal_colonna(
//!     Complex64::new(1.0, 0.0),
//!     Complex64::new(0.0, 0.0),
//!     Complex64::new(1.0, 0.0),
//! )?;
//! let z = PolydiskPoint::origin(1);
//! let alpha = MultiIndex::new(vec![1])?;
//! let report = bounds::verify_derivative_bound(&f, &z, &alpha, &Method::Exact, bounds::TOL_EXACT)?;
//! assert!(report.pass);
//! assert!(report.margin.abs() < 1e-12);
//! # Ok::<(), polyschwarz::Error>(())
//! ```

pub mod bounds;
pub mod error;
mod jet;
pub mod mapping;
pub mod multiindex;
pub mod quadrature;
pub mod report;
pub mod search;

pub use bounds::{BoundReport, Certificate, CheckId, CheckParams, Codomain, Method};
pub use error::{Error, Result};
pub use mapping::{
    compose_with_automorphism, jacobian_pair, make_extremal_colonna, random_bounded_map,
    BlaschkeProduct, ColonnaMap, JacobianPair, MobiusFactor, PluriharmonicMap,
    PolydiskAutomorphism, PolydiskPoint, SeriesMap,
};
pub use multiindex::MultiIndex;
pub use quadrature::{QuadratureSettings, QuadratureSpec};
pub use search::{direction_max, sharpness_ratio, sharpness_search, Family, SharpnessResult};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/multi-indices.md")]
    mod multi_indices {}
    #[doc = include_str!("../../../book/src/mappings.md")]
    mod mappings {}
    #[doc = include_str!("../../../book/src/quadrature.md")]
    mod quadrature {}
    #[doc = include_str!("../../../book/src/bounds.md")]
    mod bounds {}
    #[doc = include_str!("../../../book/src/sharpness.md")]
    mod sharpness {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
