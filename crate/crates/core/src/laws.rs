//! Randomized checks of the coherence-style laws of VMCVaR, the
//! subadditivity counterexample, and the ordering against the comparator
//! measures.
//!
//! Every trial draws its instance from a generator keyed by `(seed, trial)`,
//! so a report can be reproduced trial by trial.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::quantile::enumerate_mvar;
use crate::risk::{cte_lower, vmcvar, vmcvar_bar, RiskVector, VMCVaRSet};
use crate::scalar::Scalar;
use crate::scenario::{ConfidenceLevel, ScenarioSet};
use crate::vector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    Normalized,
    Homogeneous,
    Translation,
    Monotone,
    SubadditivityViolation,
    Ordering,
}

impl Law {
    pub const ALL: [Law; 6] = [
        Law::Normalized,
        Law::Homogeneous,
        Law::Translation,
        Law::Monotone,
        Law::SubadditivityViolation,
        Law::Ordering,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::Normalized => "normalized",
            Law::Homogeneous => "homogeneous",
            Law::Translation => "translation",
            Law::Monotone => "monotone",
            Law::SubadditivityViolation => "subadditivity_violation",
            Law::Ordering => "ordering",
        }
    }

    pub fn parse(name: &str) -> Option<Law> {
        Law::ALL.into_iter().find(|law| law.name() == name)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub seed: u64,
    pub trial: u64,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LawReport {
    pub law: Law,
    /// Instances on which the law was evaluated (after any filter).
    pub instances_tested: usize,
    /// Instances drawn from the generator before filtering.
    pub instances_generated: usize,
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl LawReport {
    fn new(law: Law) -> Self {
        Self { law, instances_tested: 0, instances_generated: 0, violations: Vec::new(), notes: Vec::new() }
    }

    fn single(law: Law) -> Self {
        Self { instances_tested: 1, instances_generated: 1, ..Self::new(law) }
    }

    fn violation(&mut self, seed: u64, trial: u64, detail: String) {
        self.violations.push(Violation { seed, trial, detail });
    }

    fn absorb(&mut self, other: LawReport, seed: u64, trial: u64) {
        self.instances_tested += other.instances_tested;
        self.instances_generated += other.instances_generated;
        for v in other.violations {
            self.violation(seed, trial, v.detail);
        }
    }

    /// For the counterexample check, a violation is the expected outcome;
    /// every other law must come out clean.
    pub fn holds(&self) -> bool {
        match self.law {
            Law::SubadditivityViolation => !self.violations.is_empty(),
            _ => self.violations.is_empty(),
        }
    }
}

fn fmt_vec<T: Scalar>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(Scalar::to_decimal_text).collect();
    format!("({})", parts.join(","))
}

fn coord_tol<T: Scalar>() -> T {
    T::default_coord_tol()
}

/// A generated scenario set with a level drawn from its achievable CDF values.
#[derive(Debug, Clone)]
pub struct Instance<T> {
    pub set: ScenarioSet<T>,
    pub level: ConfidenceLevel<T>,
}

/// Instance generators shared by the law checks and by test suites.
pub mod generate {
    use super::*;

    /// Deterministic RNG for one trial of a seeded run.
    pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        rng
    }

    fn integer_outcomes(rng: &mut ChaCha8Rng, n: usize, d: usize) -> Vec<Vec<i64>> {
        (0..n).map(|_| (0..d).map(|_| rng.gen_range(0..=9)).collect()).collect()
    }

    fn lift<T: Scalar>(rows: &[Vec<i64>]) -> Vec<Vec<T>> {
        rows.iter()
            .map(|x| x.iter().map(|&v| T::from_i64(v).expect("small integers are representable")).collect())
            .collect()
    }

    fn ratio<T: Scalar>(k: usize, n: usize) -> T {
        T::from_usize_exact(k) / T::from_usize_exact(n)
    }

    /// Equal probabilities `1/n`, `n ∈ 4..=8`, integer outcomes in `[0,9]`,
    /// `p = k/n` for `k ∈ 1..n`.
    pub fn equal_prob_instance<T: Scalar>(rng: &mut ChaCha8Rng, dims: std::ops::RangeInclusive<usize>) -> Instance<T> {
        let n = rng.gen_range(4..=8);
        let d = rng.gen_range(dims);
        let outcomes = lift(&integer_outcomes(rng, n, d));
        let k = rng.gen_range(1..n);
        Instance {
            set: ScenarioSet::equally_likely(outcomes).expect("generated set is valid"),
            level: ConfidenceLevel::new(ratio(k, n)).expect("k/n lies in (0,1)"),
        }
    }

    /// Random positive probabilities on `n ∈ 1..=max_n` scenarios of dimension
    /// `d ∈ 1..=max_d` with a uniformly drawn level.
    pub fn random_prob_instance<T: Scalar>(rng: &mut ChaCha8Rng, max_n: usize, max_d: usize) -> Instance<T> {
        let n = rng.gen_range(1..=max_n);
        let d = rng.gen_range(1..=max_d);
        let outcomes = lift(&integer_outcomes(rng, n, d));
        let weights: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=20)).collect();
        let total: usize = weights.iter().sum();
        let probs = weights.iter().map(|&w| ratio(w, total)).collect();
        let p = ratio(rng.gen_range(1..100), 100);
        Instance {
            set: ScenarioSet::new(outcomes, probs, None).expect("generated set is valid"),
            level: ConfidenceLevel::new(p).expect("level lies in (0,1)"),
        }
    }

    /// `X` plus i.i.d. nonnegative integer noise in `[0,3]` per scenario and
    /// coordinate, on the same probability space.
    pub fn dominating_set<T: Scalar>(rng: &mut ChaCha8Rng, low: &ScenarioSet<T>) -> ScenarioSet<T> {
        let noise: Vec<Vec<i64>> =
            (0..low.len()).map(|_| (0..low.dim()).map(|_| rng.gen_range(0..=3)).collect()).collect();
        let shift = ScenarioSet::new(lift(&noise), low.probs().to_vec(), None).expect("noise set is valid");
        low.sum(&shift).expect("shared probability space")
    }

    /// Independent integer outcomes in `[0,9]` on the same probability space.
    pub fn companion_set<T: Scalar>(rng: &mut ChaCha8Rng, like: &ScenarioSet<T>) -> ScenarioSet<T> {
        let outcomes = lift(&integer_outcomes(rng, like.len(), like.dim()));
        ScenarioSet::new(outcomes, like.probs().to_vec(), None).expect("companion set is valid")
    }

    pub fn integer_vector<T: Scalar>(rng: &mut ChaCha8Rng, d: usize, range: std::ops::RangeInclusive<i64>) -> Vec<T> {
        (0..d).map(|_| T::from_i64(rng.gen_range(range.clone())).expect("representable")).collect()
    }
}

/// `VMCVaR_p(0) = {0}` for the `d`-dimensional zero vector.
pub fn check_normalized<T: Scalar>(dim: usize, level: &ConfidenceLevel<T>) -> Result<LawReport> {
    let zero = ScenarioSet::new(vec![vec![T::zero(); dim]], vec![T::one()], None)?;
    let result = vmcvar(&zero, level)?;
    let mut report = LawReport::single(Law::Normalized);
    let origin = vec![T::zero(); dim];
    if result.len() != 1 || !result.contains(&origin, &coord_tol()) {
        report.violation(
            0,
            0,
            format!("VMCVaR(0) = {:?}", result.values().iter().map(|v| fmt_vec(v)).collect::<Vec<_>>()),
        );
    }
    Ok(report)
}

fn missing_members<T: Scalar>(
    expected: impl Iterator<Item = Vec<T>>,
    actual: &VMCVaRSet<T>,
    what: &str,
) -> Vec<String> {
    expected
        .filter(|v| !actual.contains(v, &coord_tol()))
        .map(|v| {
            format!(
                "{what} {} not in {:?}",
                fmt_vec(&v),
                actual.values().iter().map(|a| fmt_vec(a)).collect::<Vec<_>>()
            )
        })
        .collect()
}

/// Every `kϑ` with `ϑ ∈ VMCVaR_p(X)` belongs to `VMCVaR_p(kX)`.
pub fn check_homogeneous<T: Scalar>(set: &ScenarioSet<T>, level: &ConfidenceLevel<T>, k: &T) -> Result<LawReport> {
    let base = vmcvar(set, level)?;
    let scaled = vmcvar(&set.scale(k)?, level)?;
    let mut report = LawReport::single(Law::Homogeneous);
    for detail in missing_members(base.values().into_iter().map(|v| vector::scale(&v, k)), &scaled, "kϑ") {
        report.violation(0, 0, detail);
    }
    Ok(report)
}

/// Every `ϑ + k` with `ϑ ∈ VMCVaR_p(X)` belongs to `VMCVaR_p(X + k)`.
pub fn check_translation<T: Scalar>(set: &ScenarioSet<T>, level: &ConfidenceLevel<T>, k: &[T]) -> Result<LawReport> {
    let base = vmcvar(set, level)?;
    let shifted = vmcvar(&set.translate(k)?, level)?;
    let mut report = LawReport::single(Law::Translation);
    for detail in missing_members(base.values().into_iter().map(|v| vector::add(&v, k)), &shifted, "ϑ+k") {
        report.violation(0, 0, detail);
    }
    Ok(report)
}

/// For `X ≤ Y` scenario-wise, every `ϑ1 ∈ VMCVaR_p(X)` has some
/// `ϑ2 ∈ VMCVaR_p(Y)` with `ϑ2 ≥ ϑ1`.
pub fn check_monotone<T: Scalar>(
    low: &ScenarioSet<T>,
    high: &ScenarioSet<T>,
    level: &ConfidenceLevel<T>,
) -> Result<LawReport> {
    // Sum with a zero set validates the shared space.
    low.sum(&high.scale(&T::zero())?)?;
    if (0..low.len()).any(|s| !vector::leq(low.outcome(s), high.outcome(s))) {
        return Err(Error::SpaceMismatch("outcomes are not ordered scenario-wise".into()));
    }
    let lower = vmcvar(low, level)?;
    let upper = vmcvar(high, level)?;
    let mut report = LawReport::single(Law::Monotone);
    let tol = coord_tol::<T>();
    for theta in lower.values() {
        if !upper.values().iter().any(|u| vector::leq_tol(&theta, u, &tol)) {
            report.violation(
                0,
                0,
                format!(
                    "ϑ1 = {} has no dominating element in VMCVaR(Y) = {:?}",
                    fmt_vec(&theta),
                    upper.values().iter().map(|u| fmt_vec(u)).collect::<Vec<_>>()
                ),
            );
        }
    }
    Ok(report)
}

/// Triples `(u, v, w)` from `VMCVaR(X) × VMCVaR(Y) × VMCVaR(X+Y)` with
/// `u + v ≱ w`.
pub fn subadditivity_failures<T: Scalar>(
    x: &ScenarioSet<T>,
    y: &ScenarioSet<T>,
    level: &ConfidenceLevel<T>,
) -> Result<Vec<String>> {
    let vx = vmcvar(x, level)?.values();
    let vy = vmcvar(y, level)?.values();
    let vz = vmcvar(&x.sum(y)?, level)?.values();
    let tol = coord_tol::<T>();
    let mut out = Vec::new();
    for u in &vx {
        for v in &vy {
            let uv = vector::add(u, v);
            for w in vz.iter().filter(|w| !vector::leq_tol(w, &uv, &tol)) {
                out.push(format!(
                    "{} + {} = {} does not dominate-or-equal {}",
                    fmt_vec(u),
                    fmt_vec(v),
                    fmt_vec(&uv),
                    fmt_vec(w)
                ));
            }
        }
    }
    Ok(out)
}

/// A two-criterion pair `(X, Y)` on five equally likely scenarios at
/// `p = 0.6`, offered as a subadditivity counterexample. `X + Y` has three
/// pLEPs, `(4,7)`, `(5,6.5)` and `(8,6)`; the middle one yields the single
/// VMCVaR value `(6.5,6.75)`, so this pair does not in fact violate
/// subadditivity.
pub fn subadditivity_pair<T: Scalar>() -> (ScenarioSet<T>, ScenarioSet<T>, ConfidenceLevel<T>) {
    let lift = |rows: &[[&str; 2]]| {
        ScenarioSet::equally_likely(
            rows.iter().map(|r| r.iter().map(|t| T::parse_decimal(t).expect("literal")).collect()).collect(),
        )
        .expect("valid instance")
    };
    let x = lift(&[["1", "5"], ["3", "2"], ["2", "1"], ["1", "4"], ["5", "5"]]);
    let y = lift(&[["4", "1.5"], ["1", "3"], ["2", "5"], ["2", "3"], ["3", "1"]]);
    let level = ConfidenceLevel::new(T::parse_decimal("0.6").expect("literal")).expect("valid level");
    (x, y, level)
}

/// Evaluates subadditivity on the fixed pair and records the
/// computed sets as notes.
pub fn check_subadditivity_counterexample<T: Scalar>() -> Result<LawReport> {
    let (x, y, level) = subadditivity_pair::<T>();
    let mut report = LawReport::single(Law::SubadditivityViolation);
    let z = x.sum(&y)?;
    for (name, set) in [("X", &x), ("Y", &y), ("X+Y", &z)] {
        let pleps = enumerate_mvar(set, &level)?.etas();
        let values = vmcvar(set, &level)?.values();
        report.notes.push(format!(
            "fixed pair {name}: MVaR = {:?}, VMCVaR = {:?}",
            pleps.iter().map(|v| fmt_vec(v)).collect::<Vec<_>>(),
            values.iter().map(|v| fmt_vec(v)).collect::<Vec<_>>()
        ));
    }
    for detail in subadditivity_failures(&x, &y, &level)? {
        report.violation(0, 0, detail);
    }
    if report.violations.is_empty() {
        report.notes.push("fixed pair does not violate subadditivity".into());
    }
    Ok(report)
}

/// Searches random pairs on a shared space for subadditivity violations.
pub fn search_subadditivity_violation<T: Scalar>(seed: u64, trials: u64) -> Result<LawReport> {
    let mut report = LawReport::new(Law::SubadditivityViolation);
    for trial in 0..trials {
        let mut rng = generate::trial_rng(seed, trial);
        let Instance { set: x, level } = generate::equal_prob_instance::<T>(&mut rng, 2..=3);
        let y = generate::companion_set(&mut rng, &x);
        report.instances_generated += 1;
        report.instances_tested += 1;
        if let Some(detail) = subadditivity_failures(&x, &y, &level)?.into_iter().next() {
            report.violation(
                seed,
                trial,
                format!(
                    "X = {:?}, Y = {:?}, p = {}: {detail}",
                    x.outcomes().iter().map(|v| fmt_vec(v)).collect::<Vec<_>>(),
                    y.outcomes().iter().map(|v| fmt_vec(v)).collect::<Vec<_>>(),
                    level.p().to_decimal_text()
                ),
            );
        }
    }
    Ok(report)
}

/// Outcome of evaluating the three single-pLEP measures on one instance.
#[derive(Debug, Clone)]
pub struct OrderingCase<T> {
    pub bar: RiskVector<T>,
    pub vmcvar: Vec<T>,
    pub cte: RiskVector<T>,
}

/// Evaluates `VMCVaR-bar ≤ VMCVaR ≤ CTE` on one instance if it satisfies
/// the hypotheses: a single pLEP `η` with `P(X ≤ η) = p`, no outcome equal
/// to `η`, and both comparators defined. Returns `None` when filtered out.
pub fn ordering_case<T: Scalar>(set: &ScenarioSet<T>, level: &ConfidenceLevel<T>) -> Result<Option<OrderingCase<T>>> {
    let mvar = enumerate_mvar(set, level)?;
    if mvar.len() != 1 {
        return Ok(None);
    }
    let eta = &mvar.points()[0];
    if !level.matches(&eta.cdf) || set.outcomes().iter().any(|x| x == &eta.eta) {
        return Ok(None);
    }
    let bar = vmcvar_bar(set, level)?;
    let cte = cte_lower(set, level)?;
    if !bar.value.is_defined() || !cte.value.is_defined() {
        return Ok(None);
    }
    let vm = vmcvar(set, level)?;
    Ok(Some(OrderingCase { bar, vmcvar: vm.values().swap_remove(0), cte }))
}

impl<T: Scalar> OrderingCase<T> {
    pub fn holds(&self, tol: &T) -> bool {
        vector::leq_tol(self.bar.expect_value(), &self.vmcvar, tol)
            && vector::leq_tol(&self.vmcvar, self.cte.expect_value(), tol)
    }
}

pub fn check_ordering<T: Scalar>(seed: u64, trials: u64) -> Result<LawReport> {
    let mut report = LawReport::new(Law::Ordering);
    let tol = coord_tol::<T>();
    for trial in 0..trials {
        let mut rng = generate::trial_rng(seed, trial);
        let Instance { set, level } = generate::equal_prob_instance::<T>(&mut rng, 2..=3);
        report.instances_generated += 1;
        let Some(case) = ordering_case(&set, &level)? else {
            continue;
        };
        report.instances_tested += 1;
        if !case.holds(&tol) {
            report.violation(
                seed,
                trial,
                format!(
                    "X = {:?}, p = {}: bar = {}, vmcvar = {}, cte = {}",
                    set.outcomes().iter().map(|v| fmt_vec(v)).collect::<Vec<_>>(),
                    level.p().to_decimal_text(),
                    fmt_vec(case.bar.expect_value()),
                    fmt_vec(&case.vmcvar),
                    fmt_vec(case.cte.expect_value())
                ),
            );
        }
    }
    Ok(report)
}

fn describe<T: Scalar>(set: &ScenarioSet<T>, level: &ConfidenceLevel<T>) -> String {
    format!(
        "X = {:?}, p = {}",
        set.outcomes().iter().map(|v| fmt_vec(v)).collect::<Vec<_>>(),
        level.p().to_decimal_text()
    )
}

fn randomized(
    law: Law,
    seed: u64,
    trials: u64,
    mut body: impl FnMut(&mut ChaCha8Rng) -> Result<(LawReport, String)>,
) -> Result<LawReport> {
    let mut report = LawReport::new(law);
    for trial in 0..trials {
        let mut rng = generate::trial_rng(seed, trial);
        let (single, context) = body(&mut rng)?;
        let before = report.violations.len();
        report.absorb(single, seed, trial);
        for v in &mut report.violations[before..] {
            v.detail = format!("{context}: {}", v.detail);
        }
    }
    Ok(report)
}

/// Runs one law over `trials` seeded instances (`n ≤ 8`, `d ≤ 3`).
pub fn run_law<T: Scalar>(law: Law, seed: u64, trials: u64) -> Result<LawReport> {
    match law {
        Law::Normalized => randomized(law, seed, trials, |rng| {
            let d = rng.gen_range(1..=5);
            let level = generate::equal_prob_instance::<T>(rng, 1..=1).level;
            Ok((check_normalized(d, &level)?, format!("d = {d}, p = {}", level.p().to_decimal_text())))
        }),
        Law::Homogeneous => randomized(law, seed, trials, |rng| {
            let Instance { set, level } = generate::equal_prob_instance::<T>(rng, 1..=3);
            // k in quarters over [0, 5], zero included.
            let k = T::from_usize_exact(rng.gen_range(0..=20)) / T::from_usize_exact(4);
            let context = format!("{}, k = {}", describe(&set, &level), k.to_decimal_text());
            Ok((check_homogeneous(&set, &level, &k)?, context))
        }),
        Law::Translation => randomized(law, seed, trials, |rng| {
            let Instance { set, level } = generate::equal_prob_instance::<T>(rng, 1..=3);
            let k = generate::integer_vector::<T>(rng, set.dim(), -5..=5);
            let context = format!("{}, k = {}", describe(&set, &level), fmt_vec(&k));
            Ok((check_translation(&set, &level, &k)?, context))
        }),
        Law::Monotone => randomized(law, seed, trials, |rng| {
            let Instance { set, level } = generate::equal_prob_instance::<T>(rng, 1..=3);
            let high = generate::dominating_set(rng, &set);
            let context = format!(
                "{}, Y = {:?}",
                describe(&set, &level),
                high.outcomes().iter().map(|v| fmt_vec(v)).collect::<Vec<_>>()
            );
            Ok((check_monotone(&set, &high, &level)?, context))
        }),
        Law::SubadditivityViolation => {
            let mut report = check_subadditivity_counterexample::<T>()?;
            let search = search_subadditivity_violation::<T>(seed, trials)?;
            report.notes.push(format!(
                "random search: {} of {} pairs violate subadditivity",
                search.violations.len(),
                search.instances_tested
            ));
            report.instances_tested += search.instances_tested;
            report.instances_generated += search.instances_generated;
            report.violations.extend(search.violations);
            Ok(report)
        }
        Law::Ordering => check_ordering::<T>(seed, trials),
    }
}

/// Runs the selected laws (all when `law` is `None`).
pub fn run_laws<T: Scalar>(seed: u64, trials: u64, law: Option<Law>) -> Result<Vec<LawReport>> {
    let selected: Vec<Law> = law.map_or_else(|| Law::ALL.to_vec(), |l| vec![l]);
    selected.into_iter().map(|l| run_law::<T>(l, seed, trials)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn level(p: f64) -> ConfidenceLevel<f64> {
        ConfidenceLevel::new(p).unwrap()
    }

    fn five_point() -> ScenarioSet<f64> {
        subadditivity_pair::<f64>().1
    }

    #[test]
    fn normalization_examples() {
        for (d, p) in [(2, 0.6), (5, 0.9), (1, 0.5)] {
            let r = check_normalized(d, &level(p)).unwrap();
            assert!(r.holds(), "{r:?}");
        }
    }

    #[test]
    fn homogeneity_examples() {
        let y = five_point();
        let r = check_homogeneous(&y, &level(0.6), &2.0).unwrap();
        assert!(r.holds());
        assert!(vmcvar(&y.scale(&2.0).unwrap(), &level(0.6)).unwrap().contains(&[7.0, 8.0], &1e-9));
        assert!(check_homogeneous(&y, &level(0.6), &1.0).unwrap().holds());
        assert!(check_homogeneous(&y, &level(0.6), &0.0).unwrap().holds());
    }

    #[test]
    fn translation_examples() {
        let y = five_point();
        assert!(check_translation(&y, &level(0.6), &[1.0, 1.0]).unwrap().holds());
        assert!(vmcvar(&y.translate(&[1.0, 1.0]).unwrap(), &level(0.6)).unwrap().contains(&[4.5, 5.0], &1e-9));
        assert!(check_translation(&y, &level(0.6), &[0.0, 0.0]).unwrap().holds());
        let shifted = y.translate(&[-3.5, -4.0]).unwrap();
        assert!(vmcvar(&shifted, &level(0.6)).unwrap().contains(&[0.0, 0.0], &1e-9));
    }

    #[test]
    fn monotone_examples() {
        let y = five_point();
        assert!(check_monotone(&y, &y, &level(0.6)).unwrap().holds());
        let up = y.translate(&[0.5, 2.0]).unwrap();
        assert!(check_monotone(&y, &up, &level(0.6)).unwrap().holds());
        assert!(matches!(check_monotone(&up, &y, &level(0.6)), Err(Error::SpaceMismatch(_))));
    }

    #[test]
    fn monotone_fails_when_the_min_filter_drops_the_dominating_vector() {
        // X ≤ Y scenario-wise at p = 1/4. VMCVaR(X) contains (4, 5/3) from
        // the pLEP (4,0); Y has the single pLEP (3,1) and VMCVaR(Y) =
        // {(11/3, 8/3)}, which is not above (4, 5/3).
        let x =
            ScenarioSet::equally_likely(vec![vec![2.0, 4.0], vec![4.0, 0.0], vec![4.0, 0.0], vec![3.0, 1.0]]).unwrap();
        let y =
            ScenarioSet::equally_likely(vec![vec![3.0, 4.0], vec![4.0, 2.0], vec![4.0, 2.0], vec![3.0, 1.0]]).unwrap();
        let r = check_monotone(&x, &y, &level(0.25)).unwrap();
        assert_eq!(r.violations.len(), 1);
    }

    #[test]
    fn subadditivity_self_sum_and_shift_hold() {
        let y = five_point();
        assert!(subadditivity_failures(&y, &y, &level(0.6)).unwrap().is_empty());
        let shifted = y.translate(&[2.0, -1.0]).unwrap();
        assert!(subadditivity_failures(&y, &shifted, &level(0.6)).unwrap().is_empty());
    }

    #[test]
    fn subadditivity_pair_values() {
        let r = check_subadditivity_counterexample::<f64>().unwrap();
        assert!(r.notes[0].contains("VMCVaR = [\"(4,5)\"]"), "{:?}", r.notes);
        assert!(r.notes[1].contains("VMCVaR = [\"(3.5,4)\"]"), "{:?}", r.notes);
        assert!(r.notes[2].contains("VMCVaR = [\"(6.5,6.75)\"]"), "{:?}", r.notes);
    }

    #[test]
    fn random_search_finds_subadditivity_violations() {
        let r = search_subadditivity_violation::<f64>(7, 200).unwrap();
        assert!(r.holds());
    }

    #[test]
    fn ordering_hand_instance() {
        let set =
            ScenarioSet::equally_likely(vec![vec![1.0, 1.0], vec![2.0, 3.0], vec![3.0, 2.0], vec![5.0, 5.0]]).unwrap();
        let case = ordering_case(&set, &level(0.75)).unwrap().unwrap();
        assert!(vector::approx_eq(case.bar.expect_value(), &[10.0 / 3.0, 10.0 / 3.0], &1e-12));
        assert!(vector::approx_eq(&case.vmcvar, &[5.0, 5.0], &1e-12));
        assert!(vector::approx_eq(case.cte.expect_value(), &[5.0, 5.0], &1e-12));
        assert!(case.holds(&1e-9));
    }

    #[test]
    fn ordering_filter_excludes_undefined_and_multi_plep_cases() {
        let x3 = ScenarioSet::new(
            vec![vec![1.0, 5.0], vec![2.0, 4.0], vec![3.0, 3.0], vec![4.0, 2.0], vec![5.0, 1.0]],
            vec![0.05, 0.3, 0.3, 0.3, 0.05],
            None,
        )
        .unwrap();
        assert!(cte_lower(&x3, &level(0.9)).unwrap().value == crate::risk::RiskValue::Undefined);
        assert!(ordering_case(&x3, &level(0.9)).unwrap().is_none());
        let x2 = ScenarioSet::equally_likely(x3.outcomes().to_vec()).unwrap();
        assert!(ordering_case(&x2, &level(0.6)).unwrap().is_none());
    }

    #[test]
    fn trials_are_reproducible() {
        let a = run_law::<f64>(Law::Monotone, 11, 50).unwrap();
        let b = run_law::<f64>(Law::Monotone, 11, 50).unwrap();
        assert_eq!(a, b);
        assert_eq!(Law::parse("ordering"), Some(Law::Ordering));
        assert_eq!(Law::parse("bogus"), None);
    }
}
