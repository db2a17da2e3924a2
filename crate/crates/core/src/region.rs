//! Plot data for the desirable region of a bivariate distribution: the
//! pLEPs, the scenario points, and the staircase bounding the union of the
//! lower orthants below the pLEPs.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::quantile::enumerate_mvar;
use crate::risk::classify_desirable;
use crate::scalar::Scalar;
use crate::scenario::{ConfidenceLevel, ScenarioSet};

#[derive(Debug, Clone, PartialEq)]
pub struct RegionData<T> {
    pub pleps: Vec<Vec<T>>,
    /// Outcome and whether it is desirable.
    pub scenarios: Vec<(Vec<T>, bool)>,
    /// Staircase vertices from the upper-left to the lower-right corner of
    /// the frame.
    pub boundary: Vec<Vec<T>>,
}

pub fn desirable_region<T: Scalar>(set: &ScenarioSet<T>, level: &ConfidenceLevel<T>) -> Result<RegionData<T>> {
    if set.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: set.dim() });
    }
    let mvar = enumerate_mvar(set, level)?;
    let split = classify_desirable(set, &mvar);
    let scenarios = (0..set.len()).map(|s| (set.outcome(s).to_vec(), split.desirable.contains(&s))).collect();
    // Lexicographic order on mutually non-dominated points: x ascending, y descending.
    let pleps = mvar.etas();
    let low = set.lower_corner();
    let mut boundary: Vec<Vec<T>> = vec![vec![low[0].clone(), pleps[0][1].clone()]];
    for (k, eta) in pleps.iter().enumerate() {
        boundary.push(eta.clone());
        let next_y = pleps.get(k + 1).map_or_else(|| low[1].clone(), |next| next[1].clone());
        boundary.push(vec![eta[0].clone(), next_y]);
    }
    boundary.dedup();
    Ok(RegionData { pleps, scenarios, boundary })
}

impl<T: Scalar> RegionData<T> {
    /// CSV with columns `kind,index,x1,x2`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("kind,index,x1,x2\n");
        let mut row = |kind: &str, index: usize, v: &[T]| {
            writeln!(out, "{kind},{index},{},{}", v[0].to_decimal_text(), v[1].to_decimal_text()).unwrap();
        };
        for (k, eta) in self.pleps.iter().enumerate() {
            row("plep", k, eta);
        }
        for (s, (x, desirable)) in self.scenarios.iter().enumerate() {
            row(if *desirable { "desirable" } else { "undesirable" }, s, x);
        }
        for (k, v) in self.boundary.iter().enumerate() {
            row("boundary", k, v);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anti_diagonal_staircase() {
        let x = ScenarioSet::equally_likely(vec![
            vec![1.0, 5.0],
            vec![2.0, 4.0],
            vec![3.0, 3.0],
            vec![4.0, 2.0],
            vec![5.0, 1.0],
        ])
        .unwrap();
        let r = desirable_region(&x, &ConfidenceLevel::new(0.6).unwrap()).unwrap();
        assert_eq!(r.pleps, vec![vec![3.0, 5.0], vec![4.0, 4.0], vec![5.0, 3.0]]);
        assert!(r.scenarios.iter().all(|(_, d)| *d));
        assert_eq!(
            r.boundary,
            vec![
                vec![1.0, 5.0],
                vec![3.0, 5.0],
                vec![3.0, 4.0],
                vec![4.0, 4.0],
                vec![4.0, 3.0],
                vec![5.0, 3.0],
                vec![5.0, 1.0]
            ]
        );
        let csv = r.to_csv();
        assert!(csv.starts_with("kind,index,x1,x2\nplep,0,3,5\n"));
        assert!(csv.ends_with("boundary,6,5,1\n"));
    }

    #[test]
    fn region_needs_two_dimensions() {
        let x = ScenarioSet::equally_likely(vec![vec![1.0]]).unwrap();
        assert!(desirable_region(&x, &ConfidenceLevel::new(0.5).unwrap()).is_err());
    }
}
