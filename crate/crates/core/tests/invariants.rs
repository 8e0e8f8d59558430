//! Cross-module invariants: the exhaustive small-instance cross-engine
//! sweep, long-horizon unitarity, asymptotic-formula agreement bands, peak
//! consistency, weight-independence and the qualitative heatmap claims.

use lackwalk_core::analytic;
use lackwalk_core::peaks::{self, GridRange, HeatmapMetric};
use lackwalk_core::subspace::SubspaceModel;
use lackwalk_core::verify;
use lackwalk_core::{BipartiteInstance, Engine, Init};

fn inst(n1: usize, n2: usize, l1: f64, l2: f64, k1: usize, k2: usize) -> BipartiteInstance {
    BipartiteInstance::new(n1, n2, l1, l2, k1, k2).unwrap()
}

/// Every valid instance with n1, n2 <= 12, k1, k2 <= 2 and weights from
/// {0, 0.5, 2}: the 7D/12D reductions reproduce the full engine pointwise
/// to 1e-10 over 60 steps, from both initial states.
#[test]
fn cross_engine_sweep_small_instances() {
    let weights = [0.0, 0.5, 2.0];
    let mut runs = 0usize;
    let mut worst = 0.0f64;
    for n1 in 1..=12usize {
        for n2 in 1..=12usize {
            for k1 in 0..=2usize.min(n1) {
                for k2 in 0..=2usize.min(n2) {
                    if k1 + k2 == 0 {
                        continue;
                    }
                    // fully marked sets have no subspace reduction
                    if (k1 > 0 && k2 > 0 && (k1 == n1 || k2 == n2))
                        || (k2 == 0 && k1 == n1)
                        || (k1 == 0 && k2 == n2)
                    {
                        continue;
                    }
                    for l1 in weights {
                        for l2 in weights {
                            let inst = inst(n1, n2, l1, l2, k1, k2);
                            let model = SubspaceModel::for_instance(&inst).unwrap();
                            for init in [Init::Uniform, Init::Stationary] {
                                let d = verify::cross_engine_deviation(&model, &inst, init, 60);
                                assert!(
                                    d <= 1e-10,
                                    "({n1},{n2},k{k1},{k2},l{l1},{l2},{init:?}): {d:e}"
                                );
                                if d > worst {
                                    worst = d;
                                }
                                runs += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    println!("cross-engine sweep: {runs} runs, worst deviation {worst:e}");
    assert!(runs > 10_000);
}

#[test]
fn unitarity_over_long_horizon() {
    for instance in [inst(6, 4, 1.5, 0.5, 2, 0), inst(5, 7, 0.3, 0.8, 1, 2)] {
        for init in [Init::Uniform, Init::Stationary] {
            let drift = verify::unitarity_drift(&instance, init, 1000);
            assert!(drift <= 1e-12, "norm drift {drift:e}");
        }
    }
}

/// Leading-order stationary-start formula vs the exact subspace trace.
/// The asymptotic corrections measure out at 0.030-0.043 on the reference
/// instances (for weights and marks far below the set sizes), so the band
/// is pinned at 0.05.
#[test]
fn stationary_closed_form_tracks_exact_traces() {
    let cases = [
        (1000usize, 800usize, 3usize, 1.2, 0.0),
        (1000, 800, 3, 1.2, 10.0),
        (1000, 100, 3, 0.15, 0.0),
        (2000, 1500, 2, 0.5, 1.0),
        (800, 800, 1, 0.5, 0.5),
    ];
    for (n1, n2, k, l1, l2) in cases {
        let instance = inst(n1, n2, l1, l2, k, 0);
        let horizon = peaks::default_horizon(&instance);
        let trace = peaks::trace_for(&instance, Init::Stationary, horizon, Engine::Subspace)
            .unwrap();
        let mut max_dev = 0.0f64;
        for (t, &p) in trace.probs.iter().enumerate() {
            let formula =
                analytic::one_set_p_of_t(&instance, Init::Stationary, t as u32).unwrap();
            max_dev = max_dev.max((p - formula).abs());
        }
        assert!(max_dev <= 0.05, "({n1},{n2},{k},{l1},{l2}): max deviation {max_dev}");
    }
}

/// Same band for the uniform-start oscillatory form over two peak periods.
#[test]
fn uniform_closed_form_tracks_exact_traces() {
    let cases = [
        (1000usize, 800usize, 3usize, 1.2, 0.0),
        (1000, 100, 3, 0.15, 0.0),
        (1000, 100, 3, 0.15, 3.13725),
    ];
    for (n1, n2, k, l1, l2) in cases {
        let instance = inst(n1, n2, l1, l2, k, 0);
        let (theta, _) = analytic::one_set_angles(&instance).unwrap();
        let horizon = (2.0 * core::f64::consts::PI / theta) as usize;
        let trace = peaks::trace_for(&instance, Init::Uniform, horizon, Engine::Subspace).unwrap();
        let mut max_dev = 0.0f64;
        for (t, &p) in trace.probs.iter().enumerate() {
            let formula = analytic::one_set_p_of_t(&instance, Init::Uniform, t as u32).unwrap();
            max_dev = max_dev.max((p - formula).abs());
        }
        assert!(max_dev <= 0.05, "({n1},{n2},{k},{l1},{l2}): max deviation {max_dev}");
    }
}

/// The exact-trace peak lands within one step of the predicted t* and
/// within 0.01 of the predicted p*.
#[test]
fn peak_consistency_with_prediction() {
    let instance = inst(1000, 800, 1.2, 0.0, 3, 0);
    let prediction = analytic::one_set_peak(&instance, Init::Stationary).unwrap();
    let horizon = peaks::default_horizon(&instance);
    let trace = peaks::trace_for(&instance, Init::Stationary, horizon, Engine::Subspace).unwrap();
    let peak = peaks::find_first_peak(&trace);
    assert!((peak.t_star as f64 - prediction.t_star).abs() <= 1.0);
    assert!((peak.p_star - prediction.p_star).abs() <= 0.01);
}

/// At the optimal marked-set weight the exact peak barely moves with the
/// unmarked-set weight.
#[test]
fn peak_is_independent_of_unmarked_weight() {
    let template = inst(1000, 800, 1.2, 0.0, 3, 0);
    let horizon = peaks::default_horizon(&template);
    let mut values = Vec::new();
    for l2 in [0.0, 1.0, 5.0, 10.0] {
        let cell =
            peaks::heatmap_cell(&template, Init::Uniform, 1.2, l2, horizon, Engine::Subspace)
                .unwrap();
        values.push(cell.p_star);
    }
    let spread = values.iter().cloned().fold(f64::MIN, f64::max)
        - values.iter().cloned().fold(f64::MAX, f64::min);
    assert!(spread < 5e-3, "p* spread {spread} across l2");
}

/// Qualitative heatmap structure for marked vertices in both sets:
/// equal marks on the unbalanced graph admit weight pairs with a total
/// runtime clearly below loopless.
#[test]
fn unbalanced_equal_marks_have_improving_cells() {
    let template = inst(500, 1500, 0.0, 0.0, 3, 3);
    let horizon = peaks::default_horizon(&template);
    let loopless = peaks::loopless_reference(&template, Init::Stationary, horizon).unwrap();
    let grid = peaks::heatmap(
        &template,
        Init::Stationary,
        GridRange { lo: 0.0, hi: 30.0, n: 7 },
        GridRange { lo: 0.0, hi: 30.0, n: 7 },
        HeatmapMetric::TotalRuntime,
        horizon,
    )
    .unwrap();
    let best = grid
        .cells
        .iter()
        .map(|c| c.total_runtime)
        .fold(f64::INFINITY, f64::min);
    assert!(
        best < loopless.total_runtime,
        "best {best} vs loopless {}",
        loopless.total_runtime
    );
    // the quoted improving example sits inside the speedup region
    let cell = peaks::heatmap_cell(&template, Init::Stationary, 10.0, 1.0, horizon, Engine::Subspace)
        .unwrap();
    assert!(cell.total_runtime < loopless.total_runtime);
}

/// On the balanced graph with equal marks, the diagonal of the heatmap is
/// the symmetric problem: its runtime dips below loopless by the
/// predicted constant factor near l = k/2 (about 8 percent), and the
/// best grid cell agrees with that closed-form floor.
#[test]
fn balanced_equal_marks_follow_symmetric_prediction() {
    let template = inst(1000, 1000, 0.0, 0.0, 3, 3);
    let horizon = peaks::default_horizon(&template);
    let loopless = peaks::loopless_reference(&template, Init::Stationary, horizon).unwrap();
    let grid = peaks::heatmap(
        &template,
        Init::Stationary,
        GridRange { lo: 0.0, hi: 30.0, n: 7 },
        GridRange { lo: 0.0, hi: 30.0, n: 7 },
        HeatmapMetric::TotalRuntime,
        horizon,
    )
    .unwrap();
    let best = grid
        .cells
        .iter()
        .map(|c| c.total_runtime)
        .fold(f64::INFINITY, f64::min);
    // the symmetric analysis caps the improvement at 1.443/1.571 ~ 0.919
    let floor = analytic::symmetric_min_runtime(2000, 6);
    assert!(
        best >= 0.97 * floor,
        "best cell {best} undercuts the symmetric floor {floor}"
    );
    assert!(
        best < loopless.total_runtime,
        "diagonal improvement missing: best {best} vs loopless {}",
        loopless.total_runtime
    );
}
