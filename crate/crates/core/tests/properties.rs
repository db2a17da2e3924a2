use mvcvar::mip::big_m;
use mvcvar::quantile::{pareto_min, same_vector_sets};
use mvcvar::scenario::{load_scenarios_from_str, to_json};
use mvcvar::vector;
use mvcvar::{
    enumerate_mvar, enumerate_mvar_oracle, joint_cdf, mcvar_at, mcvar_conditional, univariate_cvar, vmcvar,
    ConfidenceLevel, Exact, InputFormat, ScenarioSet,
};
use proptest::prelude::*;

const TOL: f64 = 1e-9;

fn scenario_set(max_n: usize, max_d: usize) -> impl Strategy<Value = ScenarioSet<f64>> {
    (1..=max_n, 1..=max_d).prop_flat_map(|(n, d)| {
        (
            prop::collection::vec(prop::collection::vec((0i32..=18).prop_map(|v| f64::from(v) / 2.0), d), n),
            prop::collection::vec(1u32..=20, n),
        )
            .prop_map(|(outcomes, weights)| {
                let total: u32 = weights.iter().sum();
                let probs = weights.iter().map(|&w| f64::from(w) / f64::from(total)).collect();
                ScenarioSet::new(outcomes, probs, None).unwrap()
            })
    })
}

fn level() -> impl Strategy<Value = ConfidenceLevel<f64>> {
    (1u32..100).prop_map(|k| ConfidenceLevel::new(f64::from(k) / 100.0).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn grid_scan_matches_subset_oracle(set in scenario_set(10, 3), level in level()) {
        let grid = enumerate_mvar(&set, &level).unwrap();
        let oracle = enumerate_mvar_oracle(&set, &level).unwrap();
        prop_assert!(grid.same_points(&oracle, &TOL), "grid {:?} oracle {:?}", grid.etas(), oracle.etas());
    }

    #[test]
    fn pleps_are_feasible_minimal_and_mutually_nondominated(set in scenario_set(8, 3), level in level()) {
        let m = enumerate_mvar(&set, &level).unwrap();
        let etas = m.etas();
        prop_assert_eq!(pareto_min(&etas, &TOL).unwrap(), etas.clone());
        for q in m.points() {
            prop_assert!(level.is_reached_by(&q.cdf));
            let mass: f64 = q.covered.iter().map(|&s| set.probs()[s]).sum();
            prop_assert!((mass - q.cdf).abs() <= 1e-12);
            // Lowering any coordinate to the next smaller grid value loses the level.
            for i in 0..set.dim() {
                if let Some(lower) = set.coordinate_values(i).into_iter().rev().find(|v| *v < q.eta[i]) {
                    let mut y = q.eta.clone();
                    y[i] = lower;
                    prop_assert!(!level.is_reached_by(&joint_cdf(&set, &y).unwrap()));
                }
            }
        }
    }

    #[test]
    fn higher_level_pleps_sit_above_lower_level_pleps(set in scenario_set(8, 3), a in 1u32..100, b in 1u32..100) {
        let (lo, hi) = (a.min(b), a.max(b));
        let low = enumerate_mvar(&set, &ConfidenceLevel::new(f64::from(lo) / 100.0).unwrap()).unwrap();
        let high = enumerate_mvar(&set, &ConfidenceLevel::new(f64::from(hi) / 100.0).unwrap()).unwrap();
        for q in high.points() {
            prop_assert!(q.cdf >= f64::from(lo) / 100.0 - 1e-12);
            prop_assert!(low.points().iter().any(|r| vector::leq(&r.eta, &q.eta)));
        }
    }

    #[test]
    fn mvar_scales_and_translates(set in scenario_set(8, 3), level in level(), k in 1u32..8, shift in -5i32..=5) {
        let k = f64::from(k) / 2.0;
        let base = enumerate_mvar(&set, &level).unwrap().etas();
        let scaled = enumerate_mvar(&set.scale(&k).unwrap(), &level).unwrap().etas();
        let expected: Vec<Vec<f64>> = base.iter().map(|v| vector::scale(v, &k)).collect();
        prop_assert!(same_vector_sets(&scaled, &expected, &TOL));
        let t = vec![f64::from(shift); set.dim()];
        let moved = enumerate_mvar(&set.translate(&t).unwrap(), &level).unwrap().etas();
        let expected: Vec<Vec<f64>> = base.iter().map(|v| vector::add(v, &t)).collect();
        prop_assert!(same_vector_sets(&moved, &expected, &TOL));
    }

    #[test]
    fn joint_cdf_is_monotone(set in scenario_set(8, 3), seed in prop::collection::vec(-1i32..=10, 3), i in 0usize..3, bump in 0i32..4) {
        let d = set.dim();
        let v: Vec<f64> = seed.iter().take(d).map(|&x| f64::from(x)).collect();
        let mut w = v.clone();
        w[i % d] += f64::from(bump);
        prop_assert!(joint_cdf(&set, &v).unwrap() <= joint_cdf(&set, &w).unwrap() + 1e-15);
    }

    #[test]
    fn json_round_trip_is_exact(set in scenario_set(8, 3)) {
        let text = to_json(&set);
        let back: ScenarioSet<f64> = load_scenarios_from_str(&text, InputFormat::Json).unwrap();
        prop_assert_eq!(&back, &set);
        let total: f64 = back.probs().iter().sum();
        prop_assert!((total - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn arithmetic_preserves_the_probability_space(set in scenario_set(8, 3), k in 0u32..5) {
        let k = f64::from(k);
        let shift = vec![1.5; set.dim()];
        for derived in [set.scale(&k).unwrap(), set.translate(&shift).unwrap(), set.sum(&set).unwrap()] {
            prop_assert_eq!(derived.probs(), set.probs());
            prop_assert_eq!((derived.len(), derived.dim()), (set.len(), set.dim()));
        }
    }

    #[test]
    fn mcvar_is_conservative(set in scenario_set(8, 3), level in level(), eta in prop::collection::vec(-2i32..=11, 3)) {
        let eta: Vec<f64> = eta.iter().take(set.dim()).map(|&v| f64::from(v)).collect();
        let r = mcvar_at(&set, &eta, &level).unwrap();
        prop_assert!(vector::leq(&eta, r.expect_value()));
    }

    #[test]
    fn conditional_form_agrees_under_its_hypothesis(set in scenario_set(8, 3), level in level()) {
        for q in enumerate_mvar(&set, &level).unwrap().points() {
            let Ok(c) = mcvar_conditional(&set, &q.eta, &level) else { continue };
            if c.hypothesis_holds {
                let a = mcvar_at(&set, &q.eta, &level).unwrap();
                prop_assert!(vector::approx_eq(a.expect_value(), c.vector.expect_value(), &TOL));
            }
        }
    }

    #[test]
    fn univariate_vmcvar_is_cvar(set in scenario_set(10, 1), level in level()) {
        let v = vmcvar(&set, &level).unwrap();
        prop_assert_eq!(v.len(), 1);
        let c = univariate_cvar(&set, &level).unwrap();
        prop_assert!((v.vectors[0].expect_value()[0] - c.cvar).abs() <= TOL);
    }

    #[test]
    fn vmcvar_members_are_nondominated(set in scenario_set(8, 3), level in level()) {
        let values = vmcvar(&set, &level).unwrap().values();
        prop_assert_eq!(pareto_min(&values, &TOL).unwrap(), values.clone());
    }

    #[test]
    fn big_m_deactivates_rows_inside_the_bounding_box(set in scenario_set(8, 3), frac in prop::collection::vec(0u32..=4, 3)) {
        let (low, high) = (set.lower_corner(), set.upper_corner());
        let eta: Vec<f64> = (0..set.dim()).map(|i| low[i] + (high[i] - low[i]) * f64::from(frac[i]) / 4.0).collect();
        let m = big_m(&set);
        for (s, row) in m.iter().enumerate() {
            for (i, m_si) in row.iter().enumerate() {
                prop_assert!(set.outcome(s)[i] <= eta[i] + m_si + 1e-12);
            }
        }
    }

    #[test]
    fn float_and_exact_arithmetic_agree(set in scenario_set(7, 3), k in 1u32..100) {
        let level = ConfidenceLevel::new(f64::from(k) / 100.0).unwrap();
        let exact_set: ScenarioSet<Exact> = set.convert().unwrap();
        let exact_level: ConfidenceLevel<Exact> = level.convert().unwrap();
        let f = vmcvar(&set, &level).unwrap().values();
        let e: Vec<Vec<f64>> = vmcvar(&exact_set, &exact_level).unwrap().values().iter().map(|v| vector::to_f64(v)).collect();
        prop_assert!(same_vector_sets(&f, &e, &1e-9), "f64 {:?} exact {:?}", f, e);
    }
}

#[test]
fn f32_instantiation_reproduces_five_point() {
    let y: ScenarioSet<f32> = ScenarioSet::equally_likely(vec![
        vec![4.0, 1.5],
        vec![1.0, 3.0],
        vec![2.0, 5.0],
        vec![2.0, 3.0],
        vec![3.0, 1.0],
    ])
    .unwrap();
    let level = ConfidenceLevel::new(0.6f32).unwrap();
    assert_eq!(enumerate_mvar(&y, &level).unwrap().etas(), vec![vec![2.0, 5.0], vec![3.0, 3.0]]);
    let v = vmcvar(&y, &level).unwrap().values();
    assert_eq!(v.len(), 1);
    assert!(vector::approx_eq(&v[0], &[3.5, 4.0], &1e-5));
}
