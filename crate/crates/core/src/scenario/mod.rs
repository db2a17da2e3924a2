//! Discrete multivariate distributions and the confidence level.
//!
//! A [`ScenarioSet`] is immutable once built; the arithmetic operations below
//! return new sets on the same probability space.

mod io;

pub use io::{load_scenarios, load_scenarios_from_str, to_json, InputFormat};

use crate::error::{Error, Result};
use crate::scalar::{sum, Scalar};
use crate::vector;

/// Tolerance on the raw probability sum before the input is rejected.
pub const PROB_SUM_TOLERANCE: f64 = 1e-9;

/// Per-entry tolerance when checking that two sets share probabilities.
pub const SHARED_SPACE_TOLERANCE: f64 = 1e-12;

/// `n` scenarios of `d`-dimensional outcomes with their probabilities.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioSet<T> {
    dim: usize,
    outcomes: Vec<Vec<T>>,
    probs: Vec<T>,
    labels: Option<Vec<String>>,
}

impl<T: Scalar> ScenarioSet<T> {
    /// Validates and builds a scenario set.
    ///
    /// Probabilities whose sum lies within `1e-9` of one are divided through
    /// by the sum; sums further away are rejected.
    pub fn new(outcomes: Vec<Vec<T>>, probs: Vec<T>, labels: Option<Vec<String>>) -> Result<Self> {
        let first = outcomes.first().ok_or(Error::EmptyInput)?;
        let dim = first.len();
        if dim == 0 {
            return Err(Error::DimensionMismatch { expected: 1, found: 0 });
        }
        if let Some(bad) = outcomes.iter().find(|x| x.len() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: bad.len() });
        }
        if probs.len() != outcomes.len() {
            return Err(Error::InvalidProbability(format!(
                "{} probabilities for {} scenarios",
                probs.len(),
                outcomes.len()
            )));
        }
        if let Some(labels) = &labels {
            if labels.len() != outcomes.len() {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("{} labels for {} scenarios", labels.len(), outcomes.len()),
                });
            }
        }
        if outcomes.iter().flatten().any(|v| !v.is_finite_value()) {
            return Err(Error::Parse { line: 0, message: "outcome is not a finite number".into() });
        }
        for (s, q) in probs.iter().enumerate() {
            if !q.is_finite_value() || *q <= T::zero() || *q > T::one() {
                return Err(Error::InvalidProbability(format!("scenario {s} has probability {}", q.to_decimal_text())));
            }
        }
        let total = sum(probs.iter().cloned());
        let deviation = (total.clone() - T::one()).abs();
        let limit = T::from_f64(PROB_SUM_TOLERANCE).expect("tolerance is representable");
        if deviation > limit {
            return Err(Error::InvalidProbability(format!("probabilities sum to {}", total.to_decimal_text())));
        }
        let probs = if deviation > T::default_prob_eps() {
            probs.into_iter().map(|q| q / total.clone()).collect()
        } else {
            probs
        };
        Ok(Self { dim, outcomes, probs, labels })
    }

    /// Scenario set with probability `1/n` on each outcome.
    pub fn equally_likely(outcomes: Vec<Vec<T>>) -> Result<Self> {
        let n = T::from_usize_exact(outcomes.len().max(1));
        let probs = vec![T::one() / n; outcomes.len()];
        Self::new(outcomes, probs, None)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.outcomes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.outcomes.is_empty()
    }

    pub fn outcomes(&self) -> &[Vec<T>] {
        &self.outcomes
    }

    pub fn outcome(&self, s: usize) -> &[T] {
        &self.outcomes[s]
    }

    pub fn probs(&self) -> &[T] {
        &self.probs
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Iterator over `(outcome, probability)` pairs in scenario order.
    pub fn iter(&self) -> impl Iterator<Item = (&[T], &T)> {
        self.outcomes.iter().map(Vec::as_slice).zip(&self.probs)
    }

    /// Distinct values of coordinate `i`, ascending.
    pub fn coordinate_values(&self, i: usize) -> Vec<T> {
        let mut values: Vec<T> = self.outcomes.iter().map(|x| x[i].clone()).collect();
        values.sort_by(|a, b| a.partial_cmp(b).expect("outcomes are finite"));
        values.dedup();
        values
    }

    /// Componentwise minimum over all outcomes.
    pub fn lower_corner(&self) -> Vec<T> {
        (0..self.dim).map(|i| self.coordinate_values(i).swap_remove(0)).collect()
    }

    /// Componentwise maximum over all outcomes.
    pub fn upper_corner(&self) -> Vec<T> {
        (0..self.dim).map(|i| self.coordinate_values(i).pop().expect("nonempty")).collect()
    }

    fn with_outcomes(&self, outcomes: Vec<Vec<T>>) -> Self {
        Self { dim: self.dim, outcomes, probs: self.probs.clone(), labels: self.labels.clone() }
    }

    /// Scenario-wise sum `X + Y` on a shared probability space.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::SpaceMismatch(format!("{} vs {} scenarios", self.len(), other.len())));
        }
        if self.dim != other.dim {
            return Err(Error::SpaceMismatch(format!("dimension {} vs {}", self.dim, other.dim)));
        }
        let tol = T::from_f64(SHARED_SPACE_TOLERANCE).expect("tolerance is representable");
        if let Some(s) = (0..self.len()).find(|&s| (self.probs[s].clone() - other.probs[s].clone()).abs() > tol) {
            return Err(Error::SpaceMismatch(format!("probabilities differ at scenario {s}")));
        }
        let outcomes = self.outcomes.iter().zip(&other.outcomes).map(|(x, y)| vector::add(x, y)).collect();
        Ok(self.with_outcomes(outcomes))
    }

    /// `kX` for `k ≥ 0`.
    pub fn scale(&self, k: &T) -> Result<Self> {
        if *k < T::zero() || !k.is_finite_value() {
            return Err(Error::NegativeScale);
        }
        Ok(self.with_outcomes(self.outcomes.iter().map(|x| vector::scale(x, k)).collect()))
    }

    /// `X + k` for a fixed vector `k`.
    pub fn translate(&self, k: &[T]) -> Result<Self> {
        if k.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: k.len() });
        }
        if k.iter().any(|v| !v.is_finite_value()) {
            return Err(Error::Parse { line: 0, message: "translation is not finite".into() });
        }
        Ok(self.with_outcomes(self.outcomes.iter().map(|x| vector::add(x, k)).collect()))
    }

    /// Same outcomes and probabilities converted into another scalar type.
    pub fn convert<U: Scalar>(&self) -> Result<ScenarioSet<U>> {
        let conv = |v: &T| {
            U::parse_decimal(&v.to_decimal_text())
                .ok_or_else(|| Error::Parse { line: 0, message: format!("cannot convert {}", v.to_decimal_text()) })
        };
        let outcomes =
            self.outcomes.iter().map(|x| x.iter().map(conv).collect::<Result<Vec<U>>>()).collect::<Result<Vec<_>>>()?;
        let probs = self.probs.iter().map(conv).collect::<Result<Vec<U>>>()?;
        ScenarioSet::new(outcomes, probs, self.labels.clone())
    }
}

/// Free-function form of [`ScenarioSet::sum`].
pub fn sum_scenarios<T: Scalar>(a: &ScenarioSet<T>, b: &ScenarioSet<T>) -> Result<ScenarioSet<T>> {
    a.sum(b)
}

pub fn scale_scenarios<T: Scalar>(a: &ScenarioSet<T>, k: &T) -> Result<ScenarioSet<T>> {
    a.scale(k)
}

pub fn translate_scenarios<T: Scalar>(a: &ScenarioSet<T>, k: &[T]) -> Result<ScenarioSet<T>> {
    a.translate(k)
}

/// Level `p ∈ (0,1)` together with the tolerance used in `F(η) ≥ p` checks.
#[derive(Debug, Clone, PartialEq)]
pub struct ConfidenceLevel<T> {
    p: T,
    eps: T,
}

impl<T: Scalar> ConfidenceLevel<T> {
    pub fn new(p: T) -> Result<Self> {
        Self::with_eps(p, T::default_prob_eps())
    }

    pub fn with_eps(p: T, eps: T) -> Result<Self> {
        if !p.is_finite_value() || p <= T::zero() || p >= T::one() {
            return Err(Error::InvalidLevel(format!("p = {} is outside (0,1)", p.to_decimal_text())));
        }
        if !eps.is_finite_value() || eps <= T::zero() {
            return Err(Error::InvalidLevel(format!("eps = {} must be positive", eps.to_decimal_text())));
        }
        Ok(Self { p, eps })
    }

    /// Parses a decimal literal such as `0.6`. Fractions are not accepted.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit() || b == b'.') {
            return Err(Error::InvalidLevel(format!("'{text}' is not a decimal literal")));
        }
        let p = T::parse_decimal(t).ok_or_else(|| Error::InvalidLevel(format!("'{text}' is not a decimal literal")))?;
        Self::new(p)
    }

    pub fn p(&self) -> &T {
        &self.p
    }

    pub fn eps(&self) -> &T {
        &self.eps
    }

    /// Tail mass `1 − p`.
    pub fn tail(&self) -> T {
        T::one() - self.p.clone()
    }

    /// `mass ≥ p − eps`.
    pub fn is_reached_by(&self, mass: &T) -> bool {
        mass.clone() >= self.p.clone() - self.eps.clone()
    }

    /// `|mass − p| ≤ eps`.
    pub fn matches(&self, mass: &T) -> bool {
        (mass.clone() - self.p.clone()).abs() <= self.eps
    }

    pub fn convert<U: Scalar>(&self) -> Result<ConfidenceLevel<U>> {
        let conv = |v: &T| {
            U::parse_decimal(&v.to_decimal_text())
                .ok_or_else(|| Error::InvalidLevel(format!("cannot convert {}", v.to_decimal_text())))
        };
        ConfidenceLevel::with_eps(conv(&self.p)?, conv(&self.eps)?)
    }
}
