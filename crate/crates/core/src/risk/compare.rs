//! Comparator measures: the scalarized MCVaR-bar over undesirable outcomes,
//! its vector adaptation, and the lower-orthant conditional tail expectation.

use super::{RiskValue, RiskVector, ScalarizationWeights};
use crate::error::{Error, Result};
use crate::quantile::{enumerate_mvar, joint_cdf, MVaRSet};
use crate::scalar::{sum, Scalar};
use crate::scenario::{ConfidenceLevel, ScenarioSet};
use crate::vector;

/// Scenario indices split by whether some pLEP lies above the outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Desirability {
    pub desirable: Vec<usize>,
    pub undesirable: Vec<usize>,
}

/// `x^s` is desirable iff `x^s ≤ η` for some pLEP `η` (boundary included).
pub fn classify_desirable<T: Scalar>(set: &ScenarioSet<T>, mvar: &MVaRSet<T>) -> Desirability {
    let (desirable, undesirable) =
        (0..set.len()).partition(|&s| mvar.points().iter().any(|q| vector::leq(set.outcome(s), &q.eta)));
    Desirability { desirable, undesirable }
}

fn conditional_mean<T: Scalar>(set: &ScenarioSet<T>, members: &[usize]) -> (RiskValue<Vec<T>>, T) {
    let mass = sum(members.iter().map(|&s| set.probs()[s].clone()));
    if mass <= T::zero() {
        return (RiskValue::Undefined, mass);
    }
    let mean = (0..set.dim())
        .map(|i| sum(members.iter().map(|&s| set.probs()[s].clone() * set.outcome(s)[i].clone())) / mass.clone())
        .collect();
    (RiskValue::Defined(mean), mass)
}

/// `E[c·X | X undesirable]`, undefined when no outcome is undesirable.
pub fn mcvar_bar_scalar<T: Scalar>(
    set: &ScenarioSet<T>,
    level: &ConfidenceLevel<T>,
    weights: &ScalarizationWeights<T>,
) -> Result<RiskValue<T>> {
    let mvar = enumerate_mvar(set, level)?;
    mcvar_bar_scalar_from(set, &mvar, weights)
}

pub(crate) fn mcvar_bar_scalar_from<T: Scalar>(
    set: &ScenarioSet<T>,
    mvar: &MVaRSet<T>,
    weights: &ScalarizationWeights<T>,
) -> Result<RiskValue<T>> {
    if weights.dim() != set.dim() {
        return Err(Error::DimensionMismatch { expected: set.dim(), found: weights.dim() });
    }
    let undesirable = classify_desirable(set, mvar).undesirable;
    Ok(match conditional_mean(set, &undesirable).0 {
        RiskValue::Defined(mean) => RiskValue::Defined(weights.apply(&mean)),
        RiskValue::Undefined => RiskValue::Undefined,
    })
}

/// Comparison used for "exceeds `η_i`".
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Exceedance {
    /// `x_i ≥ η_i`.
    #[default]
    AtLeast,
    /// `x_i > η_i`.
    Strictly,
}

impl Exceedance {
    fn holds<T: Scalar>(self, x: &T, eta: &T) -> bool {
        match self {
            Exceedance::AtLeast => x >= eta,
            Exceedance::Strictly => x > eta,
        }
    }
}

/// How the vector MCVaR-bar treats distributions with several pLEPs.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum PlepPolicy {
    /// Fail with [`Error::MultiplePleps`] unless the pLEP is unique.
    #[default]
    RequireSingle,
    /// Condition on outcomes that exceed every pLEP in some coordinate.
    UndesirableSet,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BarOptions {
    pub exceedance: Exceedance,
    pub pleps: PlepPolicy,
}

/// `E[X | X_i ≥ η_i for some i]` for the unique pLEP `η`.
pub fn vmcvar_bar<T: Scalar>(set: &ScenarioSet<T>, level: &ConfidenceLevel<T>) -> Result<RiskVector<T>> {
    vmcvar_bar_with(set, level, BarOptions::default())
}

pub fn vmcvar_bar_with<T: Scalar>(
    set: &ScenarioSet<T>,
    level: &ConfidenceLevel<T>,
    options: BarOptions,
) -> Result<RiskVector<T>> {
    let mvar = enumerate_mvar(set, level)?;
    vmcvar_bar_from(set, &mvar, options)
}

pub(crate) fn vmcvar_bar_from<T: Scalar>(
    set: &ScenarioSet<T>,
    mvar: &MVaRSet<T>,
    options: BarOptions,
) -> Result<RiskVector<T>> {
    if options.pleps == PlepPolicy::RequireSingle && mvar.len() != 1 {
        return Err(Error::MultiplePleps(mvar.len()));
    }
    let members: Vec<usize> = (0..set.len())
        .filter(|&s| {
            let x = set.outcome(s);
            mvar.points().iter().all(|q| x.iter().zip(&q.eta).any(|(xi, ei)| options.exceedance.holds(xi, ei)))
        })
        .collect();
    let (value, conditioning_mass) = conditional_mean(set, &members);
    let anchor = (mvar.len() == 1).then(|| mvar.points()[0].clone());
    Ok(RiskVector { value, anchor, conditioning_mass })
}

/// Lower-orthant CTE `E[X | F(X) ≥ p]`: only outcomes whose own CDF value
/// reaches the level are averaged.
pub fn cte_lower<T: Scalar>(set: &ScenarioSet<T>, level: &ConfidenceLevel<T>) -> Result<RiskVector<T>> {
    let members = (0..set.len())
        .map(|s| joint_cdf(set, set.outcome(s)).map(|f| (s, f)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|(_, f)| level.is_reached_by(f))
        .map(|(s, _)| s)
        .collect::<Vec<_>>();
    let (value, conditioning_mass) = conditional_mean(set, &members);
    Ok(RiskVector { value, anchor: None, conditioning_mass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::risk::tests::eq_set;
    use crate::risk::vmcvar;

    fn anti_diagonal() -> ScenarioSet<f64> {
        eq_set(&[&[1.0, 5.0], &[2.0, 4.0], &[3.0, 3.0], &[4.0, 2.0], &[5.0, 1.0]])
    }

    fn skewed_anti_diagonal() -> ScenarioSet<f64> {
        ScenarioSet::new(anti_diagonal().outcomes().to_vec(), vec![0.05, 0.3, 0.3, 0.3, 0.05], None).unwrap()
    }

    fn hand_instance() -> ScenarioSet<f64> {
        eq_set(&[&[1.0, 1.0], &[2.0, 3.0], &[3.0, 2.0], &[5.0, 5.0]])
    }

    fn level(p: f64) -> ConfidenceLevel<f64> {
        ConfidenceLevel::new(p).unwrap()
    }

    fn weights(c: &[f64]) -> ScalarizationWeights<f64> {
        ScalarizationWeights::new(c.to_vec()).unwrap()
    }

    fn close(a: &[f64], b: &[f64]) -> bool {
        vector::approx_eq(a, b, &1e-12)
    }

    #[test]
    fn classification_examples() {
        let x2 = anti_diagonal();
        let m2 = enumerate_mvar(&x2, &level(0.6)).unwrap();
        assert!(classify_desirable(&x2, &m2).undesirable.is_empty());

        let x3 = skewed_anti_diagonal();
        let m3 = enumerate_mvar(&x3, &level(0.9)).unwrap();
        assert_eq!(classify_desirable(&x3, &m3).undesirable, vec![0, 4]);

        let single = eq_set(&[&[1.0, 2.0]]);
        let m1 = enumerate_mvar(&single, &level(0.5)).unwrap();
        assert_eq!(classify_desirable(&single, &m1), Desirability { desirable: vec![0], undesirable: vec![] });
    }

    #[test]
    fn scalar_bar_examples() {
        assert_eq!(
            mcvar_bar_scalar(&anti_diagonal(), &level(0.6), &weights(&[0.3, 0.7])).unwrap(),
            RiskValue::Undefined
        );
        let x3 = skewed_anti_diagonal();
        // E[X | undesirable] = (3,3), so any convex weights give 3.
        for c in [[0.5, 0.5], [1.0, 0.0], [0.2, 0.8]] {
            let v = mcvar_bar_scalar(&x3, &level(0.9), &weights(&c)).unwrap();
            assert!((v.defined().unwrap() - 3.0).abs() < 1e-12, "weights {c:?}");
        }
        assert!(mcvar_bar_scalar(&x3, &level(0.9), &weights(&[1.0])).is_err());
    }

    #[test]
    fn vector_bar_examples() {
        let r = vmcvar_bar(&skewed_anti_diagonal(), &level(0.9)).unwrap();
        assert!(close(r.expect_value(), &[3.0, 3.0]));
        let strict = vmcvar_bar_with(
            &skewed_anti_diagonal(),
            &level(0.9),
            BarOptions { exceedance: Exceedance::Strictly, ..Default::default() },
        )
        .unwrap();
        assert!(close(strict.expect_value(), &[3.0, 3.0]));

        // Single pLEP (3,3); (2,3), (3,2) and (5,5) reach it in some coordinate.
        let h = vmcvar_bar(&hand_instance(), &level(0.75)).unwrap();
        assert!(close(h.expect_value(), &[10.0 / 3.0, 10.0 / 3.0]));
        assert_eq!(h.anchor.unwrap().eta, vec![3.0, 3.0]);

        // The single-scenario pLEP is the outcome itself, so nothing exceeds it
        // strictly.
        let single = eq_set(&[&[1.0, 2.0]]);
        let r = vmcvar_bar_with(
            &single,
            &level(0.5),
            BarOptions { exceedance: Exceedance::Strictly, ..Default::default() },
        )
        .unwrap();
        assert_eq!(r.value, RiskValue::Undefined);
    }

    #[test]
    fn vector_bar_requires_unique_plep_unless_relaxed() {
        let x2 = anti_diagonal();
        assert_eq!(vmcvar_bar(&x2, &level(0.6)), Err(Error::MultiplePleps(3)));
        let relaxed =
            vmcvar_bar_with(&x2, &level(0.6), BarOptions { pleps: PlepPolicy::UndesirableSet, ..Default::default() })
                .unwrap();
        assert!(relaxed.value.is_defined());
        assert!(relaxed.anchor.is_none());
    }

    #[test]
    fn cte_examples() {
        let x2 = anti_diagonal();
        for p in [0.4, 0.45, 0.5, 0.6, 0.7, 0.75, 0.8] {
            assert_eq!(cte_lower(&x2, &level(p)).unwrap().value, RiskValue::Undefined, "p = {p}");
            assert!(!vmcvar(&x2, &level(p)).unwrap().is_empty());
        }
        let c = cte_lower(&hand_instance(), &level(0.75)).unwrap();
        assert!(close(c.expect_value(), &[5.0, 5.0]));
        let single = eq_set(&[&[-2.0, 9.0]]);
        assert_eq!(cte_lower(&single, &level(0.99)).unwrap().expect_value(), &[-2.0, 9.0]);
    }
}
