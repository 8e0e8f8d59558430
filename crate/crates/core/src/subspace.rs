//! Exact reduced dynamics in the invariant subspace of the search operator.
//!
//! With marked vertices confined to one set, the walk stays in a
//! 7-dimensional subspace spanned by uniform superpositions over the
//! vertex classes a (marked X), b (all of Y) and c (unmarked X); with
//! marked vertices in both sets it stays in a 12-dimensional subspace over
//! classes a (marked X), b (marked Y), c (unmarked X), d (unmarked Y).
//!
//! The search matrix is written down entry by entry from its closed form
//! in the instance parameters, *not* obtained by projecting the full
//! operator; the cross-engine tests against [`full`](crate::full) are
//! therefore a genuine check of the transcription rather than a tautology.
//!
//! Success probability is the squared norm on the basis states whose tail
//! class is marked; those labels come first in both basis orderings.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::BipartiteInstance;
use crate::math;
use crate::trace::{Engine, EvolutionTrace, Init};

/// Which reduction applies to an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubspaceCase {
    /// Marked vertices in one set only (7D). Y-only instances are handled
    /// by relabeling the sets before building.
    OneSet,
    /// Marked vertices in both sets (12D).
    BothSets,
}

const ONE_SET_LABELS: [&str; 7] = ["aa", "ab", "ba", "bb", "bc", "cb", "cc"];
const BOTH_SETS_LABELS: [&str; 12] =
    ["aa", "ab", "ad", "ba", "bb", "bc", "cb", "cc", "cd", "da", "dc", "dd"];
const ONE_SET_MARKED: usize = 2;
const BOTH_SETS_MARKED: usize = 6;

/// Why a subspace model cannot be built.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelError {
    /// No marked vertices at all; there is nothing to search for.
    NoMarkedVertices,
    /// A set is fully marked; the unmarked-class states are undefined.
    SetFullyMarked,
    /// The 7D reduction was requested but both sets carry marks.
    NeedsBothSets,
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::NoMarkedVertices => write!(f, "instance has no marked vertices"),
            ModelError::SetFullyMarked => {
                write!(f, "a partite set is fully marked; unmarked-class states are undefined")
            }
            ModelError::NeedsBothSets => {
                write!(f, "marked vertices in both sets; use the 12D reduction")
            }
        }
    }
}

impl core::error::Error for ModelError {}

/// Dense real search matrix plus subspace coordinates of both initial states.
#[derive(Debug, Clone)]
pub struct SubspaceModel {
    case: SubspaceCase,
    dim: usize,
    marked_len: usize,
    matrix: Vec<f64>,
    s_coords: Vec<f64>,
    sigma_coords: Vec<f64>,
}

impl SubspaceModel {
    /// Builds the 7D model for an instance with marked vertices in X only.
    pub fn one_set(inst: &BipartiteInstance) -> Result<Self, ModelError> {
        if inst.k1() == 0 {
            return Err(ModelError::NoMarkedVertices);
        }
        if inst.k2() != 0 {
            return Err(ModelError::NeedsBothSets);
        }
        if inst.k1() >= inst.n1() {
            return Err(ModelError::SetFullyMarked);
        }
        let n1 = inst.n1() as f64;
        let n2 = inst.n2() as f64;
        let k = inst.k1() as f64;
        let l1 = inst.l1();
        let l2 = inst.l2();
        let dx = n2 + l1;
        let dy = n1 + l2;
        let s = math::sqrt;

        let mut m = vec![0.0; 49];
        let mut set = |r: usize, c: usize, v: f64| m[r * 7 + c] = v;
        // row aa
        set(0, 0, (n2 - l1) / dx);
        set(0, 1, -2.0 * s(n2 * l1) / dx);
        // row ab
        set(1, 2, (2.0 * k - n1 - l2) / dy);
        set(1, 3, 2.0 * s(l2 * k) / dy);
        set(1, 4, 2.0 * s(k * (n1 - k)) / dy);
        // row ba
        set(2, 0, -2.0 * s(n2 * l1) / dx);
        set(2, 1, (l1 - n2) / dx);
        // row bb
        set(3, 2, 2.0 * s(l2 * k) / dy);
        set(3, 3, (l2 - n1) / dy);
        set(3, 4, 2.0 * s(l2 * (n1 - k)) / dy);
        // row bc
        set(4, 5, (n2 - l1) / dx);
        set(4, 6, 2.0 * s(n2 * l1) / dx);
        // row cb
        set(5, 2, 2.0 * s(k * (n1 - k)) / dy);
        set(5, 3, 2.0 * s(l2 * (n1 - k)) / dy);
        set(5, 4, (n1 - 2.0 * k - l2) / dy);
        // row cc
        set(6, 5, 2.0 * s(n2 * l1) / dx);
        set(6, 6, (l1 - n2) / dx);

        let s_coords = {
            let n = n1 + n2;
            vec![
                s(k * l1 / dx / n),
                s(k * n2 / dx / n),
                s(k * n2 / dy / n),
                s(n2 * l2 / dy / n),
                s(n2 * (n1 - k) / dy / n),
                s(n2 * (n1 - k) / dx / n),
                s(l1 * (n1 - k) / dx / n),
            ]
        };
        let sigma_coords = {
            let w = 2.0 * n1 * n2 + l1 * n1 + l2 * n2;
            vec![
                s(k * l1 / w),
                s(k * n2 / w),
                s(k * n2 / w),
                s(l2 * n2 / w),
                s(n2 * (n1 - k) / w),
                s(n2 * (n1 - k) / w),
                s(l1 * (n1 - k) / w),
            ]
        };

        Ok(Self {
            case: SubspaceCase::OneSet,
            dim: 7,
            marked_len: ONE_SET_MARKED,
            matrix: m,
            s_coords,
            sigma_coords,
        })
    }

    /// Builds the 12D model for an instance with marked vertices in both sets.
    pub fn both_sets(inst: &BipartiteInstance) -> Result<Self, ModelError> {
        if inst.k1() == 0 || inst.k2() == 0 {
            return Err(ModelError::NoMarkedVertices);
        }
        if inst.k1() >= inst.n1() || inst.k2() >= inst.n2() {
            return Err(ModelError::SetFullyMarked);
        }
        let n1 = inst.n1() as f64;
        let n2 = inst.n2() as f64;
        let k1 = inst.k1() as f64;
        let k2 = inst.k2() as f64;
        let l1 = inst.l1();
        let l2 = inst.l2();
        let dx = n2 + l1;
        let dy = n1 + l2;
        let s = math::sqrt;

        // Basis order: aa ab ad ba | bb bc cb cc | cd da dc dd.
        let mut m = vec![0.0; 144];
        let mut set = |r: usize, c: usize, v: f64| m[r * 12 + c] = v;
        // row aa
        set(0, 0, (n2 - l1) / dx);
        set(0, 1, -2.0 * s(k2 * l1) / dx);
        set(0, 2, -2.0 * s(l1 * (n2 - k2)) / dx);
        // row ab
        set(1, 3, (n1 + l2 - 2.0 * k1) / dy);
        set(1, 4, -2.0 * s(k1 * l2) / dy);
        set(1, 5, -2.0 * s(k1 * (n1 - k1)) / dy);
        // row ad
        set(2, 9, (2.0 * k1 - n1 - l2) / dy);
        set(2, 10, 2.0 * s(k1 * (n1 - k1)) / dy);
        set(2, 11, 2.0 * s(k1 * l2) / dy);
        // row ba
        set(3, 0, -2.0 * s(k2 * l1) / dx);
        set(3, 1, (n2 + l1 - 2.0 * k2) / dx);
        set(3, 2, -2.0 * s(k2 * (n2 - k2)) / dx);
        // row bb
        set(4, 3, -2.0 * s(k1 * l2) / dy);
        set(4, 4, (n1 - l2) / dy);
        set(4, 5, -2.0 * s(l2 * (n1 - k1)) / dy);
        // row bc
        set(5, 6, (2.0 * k2 - n2 - l1) / dx);
        set(5, 7, 2.0 * s(k2 * l1) / dx);
        set(5, 8, 2.0 * s(k2 * (n2 - k2)) / dx);
        // row cb
        set(6, 3, -2.0 * s(k1 * (n1 - k1)) / dy);
        set(6, 4, -2.0 * s(l2 * (n1 - k1)) / dy);
        set(6, 5, (2.0 * k1 + l2 - n1) / dy);
        // row cc
        set(7, 6, 2.0 * s(k2 * l1) / dx);
        set(7, 7, (l1 - n2) / dx);
        set(7, 8, 2.0 * s(l1 * (n2 - k2)) / dx);
        // row cd
        set(8, 9, 2.0 * s(k1 * (n1 - k1)) / dy);
        set(8, 10, (n1 - 2.0 * k1 - l2) / dy);
        set(8, 11, 2.0 * s(l2 * (n1 - k1)) / dy);
        // row da
        set(9, 0, -2.0 * s(l1 * (n2 - k2)) / dx);
        set(9, 1, -2.0 * s(k2 * (n2 - k2)) / dx);
        set(9, 2, (2.0 * k2 + l1 - n2) / dx);
        // row dc
        set(10, 6, 2.0 * s(k2 * (n2 - k2)) / dx);
        set(10, 7, 2.0 * s(l1 * (n2 - k2)) / dx);
        set(10, 8, (n2 - 2.0 * k2 - l1) / dx);
        // row dd
        set(11, 9, 2.0 * s(k1 * l2) / dy);
        set(11, 10, 2.0 * s(l2 * (n1 - k1)) / dy);
        set(11, 11, (l2 - n1) / dy);

        let s_coords = {
            let n = n1 + n2;
            vec![
                s(k1 * l1 / dx / n),
                s(k1 * k2 / dx / n),
                s(k1 * (n2 - k2) / dx / n),
                s(k1 * k2 / dy / n),
                s(k2 * l2 / dy / n),
                s(k2 * (n1 - k1) / dy / n),
                s(k2 * (n1 - k1) / dx / n),
                s(l1 * (n1 - k1) / dx / n),
                s((n1 - k1) * (n2 - k2) / dx / n),
                s(k1 * (n2 - k2) / dy / n),
                s((n1 - k1) * (n2 - k2) / dy / n),
                s(l2 * (n2 - k2) / dy / n),
            ]
        };
        let sigma_coords = {
            let w = 2.0 * n1 * n2 + l1 * n1 + l2 * n2;
            vec![
                s(k1 * l1 / w),
                s(k1 * k2 / w),
                s(k1 * (n2 - k2) / w),
                s(k1 * k2 / w),
                s(k2 * l2 / w),
                s(k2 * (n1 - k1) / w),
                s(k2 * (n1 - k1) / w),
                s(l1 * (n1 - k1) / w),
                s((n1 - k1) * (n2 - k2) / w),
                s(k1 * (n2 - k2) / w),
                s((n1 - k1) * (n2 - k2) / w),
                s(l2 * (n2 - k2) / w),
            ]
        };

        Ok(Self {
            case: SubspaceCase::BothSets,
            dim: 12,
            marked_len: BOTH_SETS_MARKED,
            matrix: m,
            s_coords,
            sigma_coords,
        })
    }

    /// Picks the reduction for an instance: 7D for one marked set (Y-only
    /// instances are relabeled first), 12D when both sets carry marks.
    pub fn for_instance(inst: &BipartiteInstance) -> Result<Self, ModelError> {
        match (inst.k1(), inst.k2()) {
            (0, 0) => Err(ModelError::NoMarkedVertices),
            (_, 0) => Self::one_set(inst),
            (0, _) => Self::one_set(&inst.swapped()),
            _ => Self::both_sets(inst),
        }
    }

    pub fn case(&self) -> SubspaceCase {
        self.case
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_labels(&self) -> &'static [&'static str] {
        match self.case {
            SubspaceCase::OneSet => &ONE_SET_LABELS,
            SubspaceCase::BothSets => &BOTH_SETS_LABELS,
        }
    }

    /// Labels whose squared coordinates sum to the success probability.
    /// They form a prefix of the basis ordering.
    pub fn marked_labels(&self) -> &'static [&'static str] {
        &self.basis_labels()[..self.marked_len]
    }

    /// Row-major dim x dim search matrix.
    pub fn matrix(&self) -> &[f64] {
        &self.matrix
    }

    #[cfg(test)]
    pub(crate) fn matrix_mut(&mut self) -> &mut [f64] {
        &mut self.matrix
    }

    pub fn s_coords(&self) -> &[f64] {
        &self.s_coords
    }

    pub fn sigma_coords(&self) -> &[f64] {
        &self.sigma_coords
    }

    pub fn initial(&self, init: Init) -> &[f64] {
        match init {
            Init::Uniform => &self.s_coords,
            Init::Stationary => &self.sigma_coords,
        }
    }

    /// `out = U * v`.
    pub fn apply(&self, v: &[f64], out: &mut [f64]) {
        debug_assert_eq!(v.len(), self.dim);
        debug_assert_eq!(out.len(), self.dim);
        for r in 0..self.dim {
            let row = &self.matrix[r * self.dim..(r + 1) * self.dim];
            let mut acc = 0.0;
            for (m, x) in row.iter().zip(v) {
                acc += m * x;
            }
            out[r] = acc;
        }
    }

    fn success(&self, v: &[f64]) -> f64 {
        v[..self.marked_len].iter().map(|x| x * x).sum()
    }

    /// Success probability after 0..=steps applications of the matrix.
    pub fn evolve(&self, init: Init, steps: usize) -> EvolutionTrace {
        let mut v = self.initial(init).to_vec();
        let mut next = vec![0.0; self.dim];
        let mut probs = Vec::with_capacity(steps + 1);
        probs.push(self.success(&v));
        for _ in 0..steps {
            self.apply(&v, &mut next);
            core::mem::swap(&mut v, &mut next);
            probs.push(self.success(&v));
        }
        EvolutionTrace { probs, engine: Engine::Subspace }
    }

    /// Max-norm of `U^T U - I`.
    pub fn orthogonality_defect(&self) -> f64 {
        let d = self.dim;
        let mut worst = 0.0;
        for i in 0..d {
            for j in 0..d {
                let mut acc = 0.0;
                for r in 0..d {
                    acc += self.matrix[r * d + i] * self.matrix[r * d + j];
                }
                let target = if i == j { 1.0 } else { 0.0 };
                let dev = math::abs(acc - target);
                if dev > worst {
                    worst = dev;
                }
            }
        }
        worst
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::full::ArcState;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn inst(n1: usize, n2: usize, l1: f64, l2: f64, k1: usize, k2: usize) -> BipartiteInstance {
        BipartiteInstance::new(n1, n2, l1, l2, k1, k2).unwrap()
    }

    #[test]
    fn one_set_rejects_degenerate_marking() {
        assert!(matches!(
            SubspaceModel::one_set(&inst(5, 4, 1.0, 0.0, 0, 0)),
            Err(ModelError::NoMarkedVertices)
        ));
        assert!(matches!(
            SubspaceModel::one_set(&inst(5, 4, 1.0, 0.0, 5, 0)),
            Err(ModelError::SetFullyMarked)
        ));
        assert!(SubspaceModel::one_set(&inst(5, 4, 1.0, 0.0, 1, 1)).is_err());
    }

    #[test]
    fn both_sets_rejects_degenerate_marking() {
        assert!(matches!(
            SubspaceModel::both_sets(&inst(5, 4, 1.0, 0.0, 0, 1)),
            Err(ModelError::NoMarkedVertices)
        ));
        assert!(matches!(
            SubspaceModel::both_sets(&inst(5, 4, 1.0, 0.0, 2, 4)),
            Err(ModelError::SetFullyMarked)
        ));
    }

    #[test]
    fn coordinates_are_unit_vectors() {
        for inst in [inst(9, 6, 1.3, 0.4, 2, 0), inst(9, 6, 1.3, 0.4, 2, 3)] {
            let model = SubspaceModel::for_instance(&inst).unwrap();
            let ns: f64 = model.s_coords().iter().map(|x| x * x).sum();
            let ng: f64 = model.sigma_coords().iter().map(|x| x * x).sum();
            assert_abs_diff_eq!(ns, 1.0, epsilon = 1e-12);
            assert_abs_diff_eq!(ng, 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn uniform_success_at_t0_is_k_over_n() {
        let model = SubspaceModel::one_set(&inst(9, 6, 1.3, 0.4, 2, 0)).unwrap();
        let trace = model.evolve(Init::Uniform, 0);
        assert_eq!(trace.probs.len(), 1);
        assert_abs_diff_eq!(trace.probs[0], 2.0 / 15.0, epsilon = 1e-13);
    }

    #[test]
    fn sigma_boost_reaches_one_at_optimal_weight() {
        // highly irregular graph, stationary start, l1 = k*n2/(2*n1)
        let model = SubspaceModel::one_set(&inst(1000, 100, 0.15, 0.0, 3, 0)).unwrap();
        let trace = model.evolve(Init::Stationary, 430);
        let max = trace.probs.iter().cloned().fold(0.0, f64::max);
        assert!(max >= 0.999, "sigma peak {max} should approach 1");
        // loopless comparison stays near 1/2
        let model0 = SubspaceModel::one_set(&inst(1000, 100, 0.0, 0.0, 3, 0)).unwrap();
        let trace0 = model0.evolve(Init::Stationary, 430);
        let max0 = trace0.probs.iter().cloned().fold(0.0, f64::max);
        assert!((max0 - 0.5).abs() < 0.01, "loopless sigma peak {max0} should be ~1/2");
    }

    #[test]
    fn one_set_peak_near_predicted_time() {
        let model = SubspaceModel::one_set(&inst(1000, 800, 1.2, 0.0, 3, 0)).unwrap();
        let trace = model.evolve(Init::Stationary, 100);
        let (t, p) = trace
            .probs
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.total_cmp(b.1))
            .map(|(t, p)| (t, *p))
            .unwrap();
        assert!((40..=42).contains(&t), "peak at t={t}");
        assert!(p >= 0.999);
    }

    #[test]
    fn symmetric_both_sets_first_peak_matches_quoted_numbers() {
        let model = SubspaceModel::both_sets(&inst(1000, 1000, 5.0, 5.0, 5, 5)).unwrap();
        let trace = model.evolve(Init::Stationary, 40);
        // quoted first peak: t ~ 18 with p ~ 0.889
        let p18 = trace.probs[18];
        assert!((p18 - 0.889).abs() < 0.02, "p(18) = {p18}");
        // loopless symmetric search reaches ~1
        let model0 = SubspaceModel::both_sets(&inst(1000, 1000, 0.0, 0.0, 5, 5)).unwrap();
        let trace0 = model0.evolve(Init::Stationary, 60);
        let max0 = trace0.probs.iter().cloned().fold(0.0, f64::max);
        assert!(max0 > 0.99, "loopless symmetric peak {max0}");
    }

    fn max_trace_deviation(inst: &BipartiteInstance, init: Init, steps: usize) -> f64 {
        let model = SubspaceModel::for_instance(inst).unwrap();
        let sub = model.evolve(init, steps);
        let full = match init {
            Init::Uniform => ArcState::uniform(inst),
            Init::Stationary => ArcState::stationary(inst),
        }
        .evolve(steps);
        sub.probs
            .iter()
            .zip(&full.probs)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    #[test]
    fn cross_engine_one_set_quoted_instance() {
        let inst = inst(6, 4, 1.5, 0.5, 2, 0);
        assert!(max_trace_deviation(&inst, Init::Uniform, 50) <= 1e-10);
        assert!(max_trace_deviation(&inst, Init::Stationary, 50) <= 1e-10);
    }

    #[test]
    fn cross_engine_both_sets_quoted_instance() {
        let inst = inst(5, 7, 0.3, 0.8, 1, 2);
        assert!(max_trace_deviation(&inst, Init::Uniform, 50) <= 1e-10);
        assert!(max_trace_deviation(&inst, Init::Stationary, 50) <= 1e-10);
    }

    #[test]
    fn y_only_marking_reduces_via_swap() {
        let inst = inst(8, 2, 0.7, 1.3, 0, 1);
        let model = SubspaceModel::for_instance(&inst).unwrap();
        assert_eq!(model.case(), SubspaceCase::OneSet);
        assert!(max_trace_deviation(&inst, Init::Uniform, 50) <= 1e-10);
        assert!(max_trace_deviation(&inst, Init::Stationary, 50) <= 1e-10);
    }

    #[test]
    fn set_swap_produces_identical_sigma_traces() {
        let a = inst(9, 5, 1.7, 0.2, 2, 0);
        let b = a.swapped();
        let ta = SubspaceModel::for_instance(&a).unwrap().evolve(Init::Stationary, 80);
        let tb = SubspaceModel::for_instance(&b).unwrap().evolve(Init::Stationary, 80);
        assert_eq!(ta.probs, tb.probs);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        // randomized instances: the printed matrices stay orthogonal
        #[test]
        fn matrices_are_orthogonal(
            n1 in 2usize..2000,
            n2 in 2usize..2000,
            k1 in 1usize..5,
            k2 in 0usize..5,
            l1 in 0.0f64..10.0,
            l2 in 0.0f64..10.0,
        ) {
            let k1 = k1.min(n1 - 1);
            let k2 = k2.min(n2 - 1);
            let inst = BipartiteInstance::new(n1, n2, l1, l2, k1, k2).unwrap();
            let model = SubspaceModel::for_instance(&inst).unwrap();
            prop_assert!(model.orthogonality_defect() <= 1e-12);
        }

        // evolution keeps every probability in [0, 1]
        #[test]
        fn probabilities_stay_in_unit_interval(
            n1 in 2usize..40,
            n2 in 2usize..40,
            k1 in 1usize..3,
            l1 in 0.0f64..5.0,
            l2 in 0.0f64..5.0,
        ) {
            let k1 = k1.min(n1 - 1);
            let inst = BipartiteInstance::new(n1, n2, l1, l2, k1, 0).unwrap();
            let model = SubspaceModel::for_instance(&inst).unwrap();
            for init in [Init::Uniform, Init::Stationary] {
                let trace = model.evolve(init, 120);
                for &p in &trace.probs {
                    prop_assert!((-1e-12..=1.0 + 1e-12).contains(&p));
                }
            }
        }
    }
}
