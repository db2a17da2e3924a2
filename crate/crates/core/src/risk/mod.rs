//! Univariate CVaR, per-pLEP MCVaR, the set-valued VMCVaR, and the
//! comparator measures from the literature.
//!
//! An undefined comparator (its conditioning event has probability zero) is
//! reported as [`RiskValue::Undefined`], never as an error.

mod compare;
mod report;

pub use compare::{
    classify_desirable, cte_lower, mcvar_bar_scalar, vmcvar_bar, vmcvar_bar_with, BarOptions, Desirability, Exceedance,
    PlepPolicy,
};
pub use report::{full_report, MeasureReport};

use crate::error::{Error, Result};
use crate::quantile::{enumerate_mvar, pareto_min_indices, MVaRSet, QuantilePoint};
use crate::scalar::{max_of, positive_part, sum, Scalar};
use crate::scenario::{ConfidenceLevel, ScenarioSet};
use crate::vector;

/// A risk value that may be undefined.
#[derive(Debug, Clone, PartialEq)]
pub enum RiskValue<T> {
    Defined(T),
    Undefined,
}

impl<T> RiskValue<T> {
    pub fn defined(&self) -> Option<&T> {
        match self {
            RiskValue::Defined(v) => Some(v),
            RiskValue::Undefined => None,
        }
    }

    pub fn is_defined(&self) -> bool {
        matches!(self, RiskValue::Defined(_))
    }
}

/// One `d`-dimensional risk value with the pLEP it was computed from.
#[derive(Debug, Clone, PartialEq)]
pub struct RiskVector<T> {
    pub value: RiskValue<Vec<T>>,
    pub anchor: Option<QuantilePoint<T>>,
    /// Probability of the conditioning event behind `value`.
    pub conditioning_mass: T,
}

impl<T: Scalar> RiskVector<T> {
    pub fn undefined() -> Self {
        Self { value: RiskValue::Undefined, anchor: None, conditioning_mass: T::zero() }
    }

    /// The defined value; panics on an undefined vector.
    pub fn expect_value(&self) -> &[T] {
        self.value.defined().expect("risk vector is undefined")
    }
}

/// Non-dominated MCVaR vectors, each carrying its anchor pLEP.
#[derive(Debug, Clone, PartialEq)]
pub struct VMCVaRSet<T> {
    pub level: ConfidenceLevel<T>,
    pub vectors: Vec<RiskVector<T>>,
}

impl<T: Scalar> VMCVaRSet<T> {
    pub fn values(&self) -> Vec<Vec<T>> {
        self.vectors.iter().map(|v| v.expect_value().to_vec()).collect()
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Whether some member equals `v` within `tol` in every coordinate.
    pub fn contains(&self, v: &[T], tol: &T) -> bool {
        self.vectors.iter().any(|r| vector::approx_eq(r.expect_value(), v, tol))
    }
}

/// Nonnegative weights summing to one, for the scalarization `c·x`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarizationWeights<T> {
    c: Vec<T>,
}

impl<T: Scalar> ScalarizationWeights<T> {
    pub fn new(c: Vec<T>) -> Result<Self> {
        if c.is_empty() {
            return Err(Error::InvalidWeights("no weights given".into()));
        }
        if c.iter().any(|w| !w.is_finite_value() || *w < T::zero()) {
            return Err(Error::InvalidWeights("weights must be finite and nonnegative".into()));
        }
        let total = sum(c.iter().cloned());
        if (total.clone() - T::one()).abs() > T::default_prob_eps() {
            return Err(Error::InvalidWeights(format!("weights sum to {}", total.to_decimal_text())));
        }
        Ok(Self { c })
    }

    pub fn weights(&self) -> &[T] {
        &self.c
    }

    pub fn dim(&self) -> usize {
        self.c.len()
    }

    /// `ψ(x) = Σ c_i x_i`.
    pub fn apply(&self, x: &[T]) -> T {
        sum(self.c.iter().zip(x).map(|(w, v)| w.clone() * v.clone()))
    }
}

/// VaR and CVaR of a univariate distribution.
#[derive(Debug, Clone, PartialEq)]
pub struct UnivariateCvar<T> {
    pub var: T,
    pub cvar: T,
}

/// Univariate VaR as the smallest value with `F ≥ p`, and CVaR as the
/// minimand `η + E[(V − η)_+] / (1 − p)` evaluated there.
pub fn univariate_cvar<T: Scalar>(set: &ScenarioSet<T>, level: &ConfidenceLevel<T>) -> Result<UnivariateCvar<T>> {
    if set.dim() != 1 {
        return Err(Error::NotUnivariate(set.dim()));
    }
    let var = set
        .coordinate_values(0)
        .into_iter()
        .find(|value| {
            let mass = sum(set.iter().filter(|(x, _)| x[0] <= *value).map(|(_, q)| q.clone()));
            level.is_reached_by(&mass)
        })
        .ok_or(Error::InfeasibleLevel)?;
    let excess = sum(set.iter().map(|(x, q)| q.clone() * positive_part(x[0].clone() - var.clone())));
    let cvar = var.clone() + excess / level.tail();
    Ok(UnivariateCvar { var, cvar })
}

fn exceeds_somewhere<T: Scalar>(x: &[T], eta: &[T]) -> bool {
    !vector::leq(x, eta)
}

/// `MCVaR_p(X, η) = η + E[(X − η)_+] / (1 − p)`, componentwise.
///
/// `η` need not be a pLEP. The conditioning mass reported is `P(X ≰ η)`.
pub fn mcvar_at<T: Scalar>(set: &ScenarioSet<T>, eta: &[T], level: &ConfidenceLevel<T>) -> Result<RiskVector<T>> {
    if eta.len() != set.dim() {
        return Err(Error::DimensionMismatch { expected: set.dim(), found: eta.len() });
    }
    let tail = level.tail();
    let value = (0..set.dim())
        .map(|i| {
            let excess = sum(set.iter().map(|(x, q)| q.clone() * positive_part(x[i].clone() - eta[i].clone())));
            eta[i].clone() + excess / tail.clone()
        })
        .collect();
    let conditioning_mass = sum(set.iter().filter(|(x, _)| exceeds_somewhere(x, eta)).map(|(_, q)| q.clone()));
    Ok(RiskVector {
        value: RiskValue::Defined(value),
        anchor: Some(QuantilePoint::at(set, eta.to_vec())),
        conditioning_mass,
    })
}

/// Result of the conditional-expectation form of MCVaR.
#[derive(Debug, Clone, PartialEq)]
pub struct ConditionalMcvar<T> {
    pub vector: RiskVector<T>,
    /// Whether `P(X ≤ η) = p` within the level tolerance. The equality with
    /// [`mcvar_at`] is only guaranteed when this holds.
    pub hypothesis_holds: bool,
}

/// `E[max(X, η) | X ≰ η]`.
///
/// Always computed when the conditioning event has positive probability;
/// `hypothesis_holds` flags whether `P(X ≤ η) = p`.
pub fn mcvar_conditional<T: Scalar>(
    set: &ScenarioSet<T>,
    eta: &[T],
    level: &ConfidenceLevel<T>,
) -> Result<ConditionalMcvar<T>> {
    if eta.len() != set.dim() {
        return Err(Error::DimensionMismatch { expected: set.dim(), found: eta.len() });
    }
    let anchor = QuantilePoint::at(set, eta.to_vec());
    let hypothesis_holds = level.matches(&anchor.cdf);
    let tail: Vec<(&[T], &T)> = set.iter().filter(|(x, _)| exceeds_somewhere(x, eta)).collect();
    let mass = sum(tail.iter().map(|(_, q)| (*q).clone()));
    if mass <= T::zero() {
        return Err(Error::EmptyCondition);
    }
    let value = (0..set.dim())
        .map(|i| sum(tail.iter().map(|(x, q)| (*q).clone() * max_of(&x[i], &eta[i]))) / mass.clone())
        .collect();
    Ok(ConditionalMcvar {
        vector: RiskVector { value: RiskValue::Defined(value), anchor: Some(anchor), conditioning_mass: mass },
        hypothesis_holds,
    })
}

/// The Pareto-minimal MCVaR vectors over all pLEPs.
pub fn vmcvar<T: Scalar>(set: &ScenarioSet<T>, level: &ConfidenceLevel<T>) -> Result<VMCVaRSet<T>> {
    let mvar = enumerate_mvar(set, level)?;
    vmcvar_from(set, &mvar)
}

/// [`vmcvar`] for an already enumerated pLEP set.
pub fn vmcvar_from<T: Scalar>(set: &ScenarioSet<T>, mvar: &MVaRSet<T>) -> Result<VMCVaRSet<T>> {
    let level = mvar.level();
    let candidates = mvar.points().iter().map(|q| mcvar_at(set, &q.eta, level)).collect::<Result<Vec<_>>>()?;
    let values: Vec<Vec<T>> = candidates.iter().map(|r| r.expect_value().to_vec()).collect();
    let keep = pareto_min_indices(&values, &T::default_coord_tol());
    let vectors = keep.into_iter().map(|i| candidates[i].clone()).collect();
    Ok(VMCVaRSet { level: level.clone(), vectors })
}
