//! Multivariate Value-at-Risk and vector-valued multivariate Conditional
//! Value-at-Risk for finite discrete distributions.
//!
//! The multivariate VaR of a random vector `X` at level `p` is the set of its
//! p-level efficient points (pLEPs): minimal vectors `η` with
//! `P(X ≤ η) ≥ p`. For each pLEP the crate computes
//! `MCVaR_p(X, η) = η + E[(X − η)_+] / (1 − p)`, and VMCVaR is the
//! non-dominated subset of those vectors. Two comparator measures from the
//! literature (a conditional expectation over undesirable outcomes and the
//! lower-orthant conditional tail expectation) are provided alongside, with
//! their undefined cases reported as values.
//!
//! All computations are generic over [`Scalar`], implemented for `f32`,
//! `f64` and exact [`BigRational`](num_rational::BigRational).
//!
//! ```
//! use mvcvar::{ConfidenceLevel, ScenarioSet};
//!
//! let y = ScenarioSet::equally_likely(vec![
//!     vec![4.0, 1.5], vec![1.0, 3.0], vec![2.0, 5.0], vec![2.0, 3.0], vec![3.0, 1.0],
//! ]).unwrap();
//! let level = ConfidenceLevel::new(0.6).unwrap();
//! let risk = mvcvar::vmcvar(&y, &level).unwrap();
//! assert_eq!(risk.len(), 1);
//! ```

pub mod error;
pub mod laws;
pub mod mip;
pub mod quantile;
pub mod region;
pub mod risk;
pub mod scalar;
pub mod scenario;
pub mod vector;

pub use error::{Error, Result};
pub use laws::{Law, LawReport};
pub use mip::export_mip;
pub use quantile::{enumerate_mvar, enumerate_mvar_oracle, joint_cdf, pareto_min, MVaRSet, QuantilePoint};
pub use region::{desirable_region, RegionData};
pub use risk::{
    classify_desirable, cte_lower, full_report, mcvar_at, mcvar_bar_scalar, mcvar_conditional, univariate_cvar, vmcvar,
    vmcvar_bar, vmcvar_bar_with, BarOptions, Exceedance, MeasureReport, PlepPolicy, RiskValue, RiskVector,
    ScalarizationWeights, VMCVaRSet,
};
pub use scalar::Scalar;
pub use scenario::{load_scenarios, ConfidenceLevel, InputFormat, ScenarioSet};

/// Exact rational scalar.
pub type Exact = num_rational::BigRational;

pub type ScenarioSetF64 = ScenarioSet<f64>;
pub type ScenarioSetF32 = ScenarioSet<f32>;
pub type ScenarioSetExact = ScenarioSet<Exact>;
pub type ConfidenceLevelF64 = ConfidenceLevel<f64>;
pub type ConfidenceLevelExact = ConfidenceLevel<Exact>;
pub type MVaRSetF64 = MVaRSet<f64>;
pub type VMCVaRSetF64 = VMCVaRSet<f64>;
pub type MeasureReportF64 = MeasureReport<f64>;
