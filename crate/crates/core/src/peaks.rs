//! Numerical experiment layer: first-peak detection on exact traces,
//! loop-weight sweeps, and (l1, l2) heatmaps of peak probability and total
//! runtime.
//!
//! Exact traces carry two kinds of fine structure that a naive local-max
//! test trips over: the uniform start oscillates with an explicit (-1)^t
//! term, and stationary-start traces advance in two-step plateaus (two
//! coined steps make one Szegedy step). The detector therefore works on
//! the parity envelope `q(t) = max(p(t), p(t+1))` and reports the first
//! time the envelope strictly descends after climbing above its starting
//! value; the peak is the raw-trace argmax over that prefix. The rule is
//! validated against the quoted peak times of the reference instances.

use alloc::vec::Vec;

use crate::graph::BipartiteInstance;
use crate::math;
use crate::subspace::{ModelError, SubspaceModel};
use crate::trace::{Engine, EvolutionTrace, Init};

/// First-peak summary of one trace.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeakResult {
    /// Step index of the first peak.
    pub t_star: usize,
    /// Trace value at `t_star` (exactly; no interpolation).
    pub p_star: f64,
    /// `t_star / p_star`; infinite when the trace never leaves zero.
    pub total_runtime: f64,
}

/// Relative envelope drop that counts as a genuine descent; keeps
/// rounding-level jitter in near-flat plateau pairs from ending the climb.
const DESCENT_EPS: f64 = 1e-9;

/// Locates the first peak of a trace via the parity envelope.
///
/// Falls back to the global argmax when the envelope never descends within
/// the horizon (monotone truncated traces). An all-zero trace (no marked
/// vertices) yields the `p_star = 0` sentinel with infinite runtime.
pub fn find_first_peak(trace: &EvolutionTrace) -> PeakResult {
    let p = &trace.probs;
    let result = |t_star: usize, p_star: f64| PeakResult {
        t_star,
        p_star,
        total_runtime: if p_star > 0.0 { t_star as f64 / p_star } else { f64::INFINITY },
    };
    if p.is_empty() || p.iter().all(|&x| x <= 0.0) {
        return result(0, 0.0);
    }
    if p.len() >= 3 {
        let q = |t: usize| if p[t] >= p[t + 1] { p[t] } else { p[t + 1] };
        let q0 = q(0);
        for t in 1..p.len() - 1 {
            let prev = q(t - 1);
            let descended = q(t) < prev - DESCENT_EPS * if prev > 1.0 { prev } else { 1.0 };
            if descended && prev > q0 {
                let (mut best_t, mut best_p) = (0, p[0]);
                for (i, &x) in p[..=t].iter().enumerate() {
                    if x > best_p {
                        best_t = i;
                        best_p = x;
                    }
                }
                return result(best_t, best_p);
            }
        }
    }
    let (mut best_t, mut best_p) = (0, p[0]);
    for (i, &x) in p.iter().enumerate() {
        if x > best_p {
            best_t = i;
            best_p = x;
        }
    }
    result(best_t, best_p)
}

/// Default trace horizon, `10 * ceil(sqrt(n1 + n2))`: peak times scale as
/// `sqrt(n)` and the factor covers the slow-growth regimes.
pub fn default_horizon(inst: &BipartiteInstance) -> usize {
    10 * math::ceil(math::sqrt(inst.vertex_count() as f64)) as usize
}

/// Exact trace from the requested engine. The subspace engine needs at
/// least one marked vertex; the full engine accepts anything.
pub fn trace_for(
    inst: &BipartiteInstance,
    init: Init,
    steps: usize,
    engine: Engine,
) -> Result<EvolutionTrace, ModelError> {
    match engine {
        Engine::Subspace => Ok(SubspaceModel::for_instance(inst)?.evolve(init, steps)),
        Engine::Full => {
            let state = match init {
                Init::Uniform => crate::full::ArcState::uniform(inst),
                Init::Stationary => crate::full::ArcState::stationary(inst),
            };
            Ok(state.evolve(steps))
        }
    }
}

/// Subspace-engine peaks for each `l1` in turn (`l2` fixed by the template).
pub fn sweep_l1(
    template: &BipartiteInstance,
    init: Init,
    l1_values: &[f64],
    horizon: usize,
) -> Result<Vec<PeakResult>, ModelError> {
    let mut out = Vec::with_capacity(l1_values.len());
    for &l1 in l1_values {
        let inst = template
            .with_weights(l1, template.l2())
            .map_err(|_| ModelError::NoMarkedVertices)?;
        let trace = trace_for(&inst, init, horizon, Engine::Subspace)?;
        out.push(find_first_peak(&trace));
    }
    Ok(out)
}

/// Inclusive uniform grid of `n` points over `[lo, hi]` (`n = 1` gives `lo`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridRange {
    pub lo: f64,
    pub hi: f64,
    pub n: usize,
}

impl GridRange {
    pub fn values(&self) -> Vec<f64> {
        if self.n <= 1 {
            return alloc::vec![self.lo];
        }
        let step = (self.hi - self.lo) / (self.n - 1) as f64;
        (0..self.n).map(|i| self.lo + step * i as f64).collect()
    }
}

/// Which scalar a heatmap reports per cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HeatmapMetric {
    PeakProbability,
    TotalRuntime,
}

/// Row-major grid of peak results over `(l1, l2)` weight pairs.
#[derive(Debug, Clone)]
pub struct HeatmapGrid {
    pub l1_values: Vec<f64>,
    pub l2_values: Vec<f64>,
    pub cells: Vec<PeakResult>,
    pub metric: HeatmapMetric,
}

impl HeatmapGrid {
    pub fn cell(&self, i: usize, j: usize) -> &PeakResult {
        &self.cells[i * self.l2_values.len() + j]
    }

    pub fn metric_value(&self, i: usize, j: usize) -> f64 {
        match self.metric {
            HeatmapMetric::PeakProbability => self.cell(i, j).p_star,
            HeatmapMetric::TotalRuntime => self.cell(i, j).total_runtime,
        }
    }
}

/// Peak result of a single weight cell.
pub fn heatmap_cell(
    template: &BipartiteInstance,
    init: Init,
    l1: f64,
    l2: f64,
    horizon: usize,
    engine: Engine,
) -> Result<PeakResult, ModelError> {
    let inst = template.with_weights(l1, l2).map_err(|_| ModelError::NoMarkedVertices)?;
    Ok(find_first_peak(&trace_for(&inst, init, horizon, engine)?))
}

/// Full heatmap over the weight grid with a chosen engine. Cells are
/// independent; results are deterministic and row-major.
pub fn heatmap_with_engine(
    template: &BipartiteInstance,
    init: Init,
    l1_range: GridRange,
    l2_range: GridRange,
    metric: HeatmapMetric,
    horizon: usize,
    engine: Engine,
) -> Result<HeatmapGrid, ModelError> {
    let l1_values = l1_range.values();
    let l2_values = l2_range.values();
    let mut cells = Vec::with_capacity(l1_values.len() * l2_values.len());
    for &l1 in &l1_values {
        for &l2 in &l2_values {
            cells.push(heatmap_cell(template, init, l1, l2, horizon, engine)?);
        }
    }
    Ok(HeatmapGrid { l1_values, l2_values, cells, metric })
}

/// Heatmap over the exact subspace engine.
pub fn heatmap(
    template: &BipartiteInstance,
    init: Init,
    l1_range: GridRange,
    l2_range: GridRange,
    metric: HeatmapMetric,
    horizon: usize,
) -> Result<HeatmapGrid, ModelError> {
    heatmap_with_engine(template, init, l1_range, l2_range, metric, horizon, Engine::Subspace)
}

/// Peak of the `l1 = l2 = 0` walk on the same instance; centers heatmap
/// color scales and serves as the no-improvement baseline.
pub fn loopless_reference(
    inst: &BipartiteInstance,
    init: Init,
    horizon: usize,
) -> Result<PeakResult, ModelError> {
    heatmap_cell(inst, init, 0.0, 0.0, horizon, Engine::Subspace)
}
