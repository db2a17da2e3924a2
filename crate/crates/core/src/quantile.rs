//! Joint CDF, p-level efficient points (pLEPs) and the Pareto filter.
//!
//! `F` is a step function that only changes at observed coordinate values, so
//! every pLEP sits on the grid formed by the distinct values of each
//! coordinate. [`enumerate_mvar`] scans that grid in lexicographic order;
//! [`enumerate_mvar_oracle`] takes the independent route of scanning every
//! scenario subset and is meant for cross-checking small instances.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::scalar::{sum, Scalar};
use crate::scenario::{ConfidenceLevel, ScenarioSet};
use crate::vector;

/// Largest scenario count accepted by the subset-scan oracle.
pub const ORACLE_LIMIT: usize = 20;

/// A candidate or confirmed quantile vector with its CDF value.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantilePoint<T> {
    pub eta: Vec<T>,
    /// `F(eta) = P(X ≤ eta)`.
    pub cdf: T,
    /// Scenarios with `x^s ≤ eta`, ascending.
    pub covered: Vec<usize>,
}

impl<T: Scalar> QuantilePoint<T> {
    pub fn at(set: &ScenarioSet<T>, eta: Vec<T>) -> Self {
        let covered = covered_scenarios(set, &eta);
        let cdf = sum(covered.iter().map(|&s| set.probs()[s].clone()));
        Self { eta, cdf, covered }
    }
}

/// All pLEPs of a distribution at one level, sorted lexicographically.
#[derive(Debug, Clone, PartialEq)]
pub struct MVaRSet<T> {
    level: ConfidenceLevel<T>,
    points: Vec<QuantilePoint<T>>,
}

impl<T: Scalar> MVaRSet<T> {
    pub fn level(&self) -> &ConfidenceLevel<T> {
        &self.level
    }

    pub fn points(&self) -> &[QuantilePoint<T>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn etas(&self) -> Vec<Vec<T>> {
        self.points.iter().map(|q| q.eta.clone()).collect()
    }

    /// Set equality with every coordinate matched within `tol`.
    pub fn same_points(&self, other: &Self, tol: &T) -> bool {
        same_vector_sets(&self.etas(), &other.etas(), tol)
    }
}

/// `true` when both lists contain the same vectors up to `tol`, ignoring order.
pub fn same_vector_sets<T: Scalar>(a: &[Vec<T>], b: &[Vec<T>], tol: &T) -> bool {
    a.len() == b.len()
        && a.iter().all(|u| b.iter().any(|v| vector::approx_eq(u, v, tol)))
        && b.iter().all(|v| a.iter().any(|u| vector::approx_eq(u, v, tol)))
}

fn covered_scenarios<T: Scalar>(set: &ScenarioSet<T>, v: &[T]) -> Vec<usize> {
    (0..set.len()).filter(|&s| vector::leq(set.outcome(s), v)).collect()
}

fn check_dim<T: Scalar>(set: &ScenarioSet<T>, v: &[T]) -> Result<()> {
    if v.len() == set.dim() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected: set.dim(), found: v.len() })
    }
}

/// `F(v) = P(X ≤ v)`, componentwise and non-strict.
pub fn joint_cdf<T: Scalar>(set: &ScenarioSet<T>, v: &[T]) -> Result<T> {
    check_dim(set, v)?;
    Ok(sum(set.iter().filter(|(x, _)| vector::leq(x, v)).map(|(_, q)| q.clone())))
}

fn lex_cmp<T: Scalar>(a: &[T], b: &[T]) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.partial_cmp(y).unwrap_or(Ordering::Equal))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// Enumerates every pLEP by scanning the coordinate grid.
///
/// Grid points are visited in lexicographic order, so any grid point below a
/// candidate is visited before it. A feasible candidate is therefore minimal
/// exactly when no pLEP found so far lies below it, and the frontier only
/// ever grows.
pub fn enumerate_mvar<T: Scalar>(set: &ScenarioSet<T>, level: &ConfidenceLevel<T>) -> Result<MVaRSet<T>> {
    let axes: Vec<Vec<T>> = (0..set.dim()).map(|i| set.coordinate_values(i)).collect();
    let mut cursor = vec![0usize; axes.len()];
    let mut frontier: Vec<QuantilePoint<T>> = Vec::new();
    loop {
        let candidate: Vec<T> = cursor.iter().zip(&axes).map(|(&k, axis)| axis[k].clone()).collect();
        let pruned = frontier.iter().any(|q| vector::leq(&q.eta, &candidate));
        if !pruned {
            let point = QuantilePoint::at(set, candidate);
            if level.is_reached_by(&point.cdf) {
                frontier.push(point);
            }
        }
        // Mixed-radix increment, last coordinate fastest.
        let mut axis = axes.len();
        loop {
            if axis == 0 {
                return finish(level, frontier);
            }
            axis -= 1;
            cursor[axis] += 1;
            if cursor[axis] < axes[axis].len() {
                break;
            }
            cursor[axis] = 0;
        }
    }
}

fn finish<T: Scalar>(level: &ConfidenceLevel<T>, points: Vec<QuantilePoint<T>>) -> Result<MVaRSet<T>> {
    if points.is_empty() {
        return Err(Error::InfeasibleLevel);
    }
    Ok(MVaRSet { level: level.clone(), points })
}

/// Independent pLEP enumeration by scanning all `2^n` scenario subsets.
///
/// Every subset with enough mass contributes the componentwise maximum of its
/// outcomes; the Pareto-minimal maxima are the pLEPs.
pub fn enumerate_mvar_oracle<T: Scalar>(set: &ScenarioSet<T>, level: &ConfidenceLevel<T>) -> Result<MVaRSet<T>> {
    let n = set.len();
    if n > ORACLE_LIMIT {
        return Err(Error::TooLarge { n, limit: ORACLE_LIMIT });
    }
    let mut maxima: Vec<Vec<T>> = Vec::new();
    for mask in 1u32..(1u32 << n) {
        let members = (0..n).filter(|s| mask & (1 << s) != 0);
        let mass = sum(members.clone().map(|s| set.probs()[s].clone()));
        if !level.is_reached_by(&mass) {
            continue;
        }
        let top =
            members.map(|s| set.outcome(s).to_vec()).reduce(|acc, x| vector::max(&acc, &x)).expect("mask is nonempty");
        maxima.push(top);
    }
    let mut etas = pareto_min(&maxima, &T::default_coord_tol())?;
    etas.sort_by(|a, b| lex_cmp(a, b));
    finish(level, etas.into_iter().map(|eta| QuantilePoint::at(set, eta)).collect())
}

/// Indices of the non-dominated points; near-duplicates keep their first
/// occurrence.
pub fn pareto_min_indices<T: Scalar>(points: &[Vec<T>], tol: &T) -> Vec<usize> {
    (0..points.len())
        .filter(|&i| {
            !points.iter().enumerate().any(|(j, other)| {
                vector::dominates(other, &points[i], tol) || (j < i && vector::approx_eq(other, &points[i], tol))
            })
        })
        .collect()
}

/// Non-dominated subset under the minimization convention.
///
/// `u` dominates `v` when `u_i ≤ v_i + tol` everywhere and `u_i < v_i − tol`
/// somewhere.
pub fn pareto_min<T: Scalar>(points: &[Vec<T>], tol: &T) -> Result<Vec<Vec<T>>> {
    if let Some(first) = points.first() {
        if let Some(bad) = points.iter().find(|p| p.len() != first.len()) {
            return Err(Error::DimensionMismatch { expected: first.len(), found: bad.len() });
        }
    }
    Ok(pareto_min_indices(points, tol).into_iter().map(|i| points[i].clone()).collect())
}
