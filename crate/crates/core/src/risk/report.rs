use serde_json::{json, Value};

use super::compare::{cte_lower, mcvar_bar_scalar_from, vmcvar_bar_from, BarOptions, Exceedance, PlepPolicy};
use super::{vmcvar_from, RiskValue, RiskVector, ScalarizationWeights, VMCVaRSet};
use crate::error::Result;
use crate::quantile::{enumerate_mvar, MVaRSet};
use crate::scalar::Scalar;
use crate::scenario::{ConfidenceLevel, ScenarioSet};
use crate::vector;

/// Every measure at one level for one scenario set.
///
/// `vmcvar_bar` conditions on outcomes exceeding every pLEP in some
/// coordinate, which reduces to the single-pLEP definition when the pLEP is
/// unique.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureReport<T> {
    pub level: ConfidenceLevel<T>,
    pub mvar: MVaRSet<T>,
    pub vmcvar: VMCVaRSet<T>,
    pub vmcvar_bar: RiskVector<T>,
    pub cte: RiskVector<T>,
    /// Present only when weights were supplied.
    pub mcvar_bar_scalar: Option<RiskValue<T>>,
    pub weights: Option<ScalarizationWeights<T>>,
}

pub fn full_report<T: Scalar>(
    set: &ScenarioSet<T>,
    level: &ConfidenceLevel<T>,
    weights: Option<&ScalarizationWeights<T>>,
    exceedance: Exceedance,
) -> Result<MeasureReport<T>> {
    let mvar = enumerate_mvar(set, level)?;
    let vmcvar = vmcvar_from(set, &mvar)?;
    let vmcvar_bar = vmcvar_bar_from(set, &mvar, BarOptions { exceedance, pleps: PlepPolicy::UndesirableSet })?;
    let cte = cte_lower(set, level)?;
    let mcvar_bar_scalar = weights.map(|w| mcvar_bar_scalar_from(set, &mvar, w)).transpose()?;
    Ok(MeasureReport {
        level: level.clone(),
        mvar,
        vmcvar,
        vmcvar_bar,
        cte,
        mcvar_bar_scalar,
        weights: weights.cloned(),
    })
}

pub(crate) fn vector_json<T: Scalar>(v: &[T]) -> Value {
    json!(vector::to_f64(v))
}

pub(crate) fn risk_json<T: Scalar>(value: &RiskValue<Vec<T>>) -> Value {
    match value {
        RiskValue::Defined(v) => vector_json(v),
        RiskValue::Undefined => json!("undefined"),
    }
}

pub(crate) fn vmcvar_json<T: Scalar>(set: &VMCVaRSet<T>) -> Value {
    Value::Array(
        set.vectors
            .iter()
            .map(|r| {
                let mut entry = serde_json::Map::new();
                entry.insert("value".into(), risk_json(&r.value));
                if let Some(anchor) = &r.anchor {
                    entry.insert("anchor".into(), vector_json(&anchor.eta));
                }
                Value::Object(entry)
            })
            .collect(),
    )
}

impl<T: Scalar> MeasureReport<T> {
    /// JSON document with keys in a fixed order.
    pub fn to_json(&self) -> Value {
        let mut doc = serde_json::Map::new();
        doc.insert("level".into(), json!(self.level.p().to_f64_lossy()));
        doc.insert("mvar".into(), Value::Array(self.mvar.points().iter().map(|q| vector_json(&q.eta)).collect()));
        doc.insert("vmcvar".into(), vmcvar_json(&self.vmcvar));
        doc.insert("vmcvar_bar".into(), risk_json(&self.vmcvar_bar.value));
        doc.insert("cte".into(), risk_json(&self.cte.value));
        if let Some(scalar) = &self.mcvar_bar_scalar {
            let value = match scalar {
                RiskValue::Defined(v) => json!(v.to_f64_lossy()),
                RiskValue::Undefined => json!("undefined"),
            };
            doc.insert("mcvar_bar_scalar".into(), value);
        }
        Value::Object(doc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::risk::tests::eq_set;

    fn level(p: f64) -> ConfidenceLevel<f64> {
        ConfidenceLevel::new(p).unwrap()
    }

    #[test]
    fn five_point_report() {
        let y = eq_set(&[&[4.0, 1.5], &[1.0, 3.0], &[2.0, 5.0], &[2.0, 3.0], &[3.0, 1.0]]);
        let r = full_report(&y, &level(0.6), None, Exceedance::AtLeast).unwrap();
        assert_eq!(r.mvar.etas(), vec![vec![2.0, 5.0], vec![3.0, 3.0]]);
        assert!(vector::approx_eq(&r.vmcvar.values()[0], &[3.5, 4.0], &1e-12));
        assert!(r.mcvar_bar_scalar.is_none());
        let doc = r.to_json();
        let text = serde_json::to_string(&doc).unwrap();
        assert!(text.starts_with(
            "{\"level\":0.6,\"mvar\":[[2.0,5.0],[3.0,3.0]],\"vmcvar\":[{\"value\":[3.5,4.0],\"anchor\":[3.0,3.0]}]"
        ));
        assert!(doc.get("mcvar_bar_scalar").is_none());
    }

    #[test]
    fn anti_diagonal_report_carries_undefined() {
        let x = eq_set(&[&[1.0, 5.0], &[2.0, 4.0], &[3.0, 3.0], &[4.0, 2.0], &[5.0, 1.0]]);
        let w = ScalarizationWeights::new(vec![0.5, 0.5]).unwrap();
        let r = full_report(&x, &level(0.6), Some(&w), Exceedance::AtLeast).unwrap();
        assert!(!r.vmcvar.is_empty());
        assert_eq!(r.mcvar_bar_scalar, Some(RiskValue::Undefined));
        assert_eq!(r.cte.value, RiskValue::Undefined);
        let doc = r.to_json();
        assert_eq!(doc["cte"], json!("undefined"));
        assert_eq!(doc["mcvar_bar_scalar"], json!("undefined"));
    }
}
