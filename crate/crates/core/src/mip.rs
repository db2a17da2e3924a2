//! Mixed-integer model of VMCVaR in CPLEX LP text format.
//!
//! The vector objective is scalarized with weights `c`:
//!
//! ```text
//! min  c·η + 1/(1−p) Σ_s q_s c·w^s
//! s.t. w^s_i ≥ x^s_i − η_i,  w^s ≥ 0
//!      Σ_s q_s β_s ≤ 1 − p
//!      x^s_i ≤ η_i + M_is β_s,  β_s ∈ {0,1}
//! ```
//!
//! with `M_is = x^s_i − min_s' x^s'_i`. Every pLEP lies inside the bounding
//! box of the data, so this `M` deactivates its row whenever `β_s = 1`.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::risk::ScalarizationWeights;
use crate::scalar::{positive_part, Scalar};
use crate::scenario::{ConfidenceLevel, ScenarioSet};

pub fn eta_name(i: usize) -> String {
    format!("eta_{}", i + 1)
}

pub fn w_name(s: usize, i: usize) -> String {
    format!("w_{}_{}", s + 1, i + 1)
}

pub fn beta_name(s: usize) -> String {
    format!("b_{}", s + 1)
}

/// Big-M constants, indexed `[scenario][criterion]`.
pub fn big_m<T: Scalar>(set: &ScenarioSet<T>) -> Vec<Vec<T>> {
    let low = set.lower_corner();
    set.outcomes()
        .iter()
        .map(|x| x.iter().zip(&low).map(|(v, m)| positive_part(v.clone() - m.clone())).collect())
        .collect()
}

struct Terms<'a, T>(&'a [(T, String)]);

impl<T: Scalar> std::fmt::Display for Terms<'_, T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (k, (coef, var)) in self.0.iter().filter(|(c, _)| !c.is_zero()).enumerate() {
            let magnitude = coef.abs();
            match (k, coef.is_negative()) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            if magnitude.is_one() {
                f.write_str(var)?;
            } else {
                write!(f, "{} {var}", magnitude.to_decimal_text())?;
            }
        }
        Ok(())
    }
}

/// Renders the scalarized model as an LP file.
pub fn export_mip<T: Scalar>(
    set: &ScenarioSet<T>,
    level: &ConfidenceLevel<T>,
    weights: &ScalarizationWeights<T>,
) -> Result<String> {
    let (n, d) = (set.len(), set.dim());
    if weights.dim() != d {
        return Err(Error::DimensionMismatch { expected: d, found: weights.dim() });
    }
    let c = weights.weights();
    let tail = level.tail();
    let m = big_m(set);
    let mut out = String::new();

    writeln!(out, "\\ VMCVaR weighted-sum model: {n} scenarios, {d} criteria, p = {}", level.p().to_decimal_text())
        .unwrap();
    writeln!(out, "Minimize").unwrap();
    let mut objective: Vec<(T, String)> = (0..d).map(|i| (c[i].clone(), eta_name(i))).collect();
    for (s, prob) in set.probs().iter().enumerate() {
        for (i, ci) in c.iter().enumerate() {
            let coef = prob.clone() * ci.clone() / tail.clone();
            objective.push((coef, w_name(s, i)));
        }
    }
    writeln!(out, " obj: {}", Terms(&objective)).unwrap();

    writeln!(out, "Subject To").unwrap();
    for s in 0..n {
        for i in 0..d {
            let terms = [(T::one(), w_name(s, i)), (T::one(), eta_name(i))];
            writeln!(out, " exc_{}_{}: {} >= {}", s + 1, i + 1, Terms(&terms), set.outcome(s)[i].to_decimal_text())
                .unwrap();
        }
    }
    let knapsack: Vec<(T, String)> = (0..n).map(|s| (set.probs()[s].clone(), beta_name(s))).collect();
    writeln!(out, " knapsack: {} <= {}", Terms(&knapsack), tail.to_decimal_text()).unwrap();
    for (s, row) in m.iter().enumerate() {
        for (i, m_si) in row.iter().enumerate() {
            let terms = [(T::one(), eta_name(i)), (m_si.clone(), beta_name(s))];
            writeln!(out, " bigm_{}_{}: {} >= {}", s + 1, i + 1, Terms(&terms), set.outcome(s)[i].to_decimal_text())
                .unwrap();
        }
    }

    writeln!(out, "Bounds").unwrap();
    for i in 0..d {
        writeln!(out, " {} free", eta_name(i)).unwrap();
    }
    for s in 0..n {
        for i in 0..d {
            writeln!(out, " {} >= 0", w_name(s, i)).unwrap();
        }
    }
    writeln!(out, "Binaries").unwrap();
    let binaries: Vec<String> = (0..n).map(beta_name).collect();
    writeln!(out, " {}", binaries.join(" ")).unwrap();
    writeln!(out, "End").unwrap();
    Ok(out)
}
