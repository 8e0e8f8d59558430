//! Full Hilbert-space engine over all directed arcs.
//!
//! The state is a complex amplitude vector indexed by the arc layout of
//! [`graph`](crate::graph). One search step is oracle, then coin, then
//! shift; each operator is applied in place in O(arc count):
//!
//! - oracle: negate every amplitude whose tail vertex is marked;
//! - coin: per vertex u, reflect the outgoing block about the weighted
//!   coin state (1, ..., 1, sqrt(l)) / sqrt(deg u), via
//!   `a <- 2 <s_u|a> s_u - a` without materializing any matrix;
//! - shift: swap the amplitudes of (u, v) and (v, u); loops stay put.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::graph::BipartiteInstance;
use crate::math;
use crate::trace::{Engine, EvolutionTrace};

/// Complex amplitude vector over the directed arcs of an instance.
#[derive(Debug, Clone)]
pub struct ArcState {
    inst: BipartiteInstance,
    amps: Vec<Complex64>,
}

impl ArcState {
    /// The uniform-over-vertices initial state: each vertex carries total
    /// probability `1/(n1+n2)`, split over its arcs according to weight.
    pub fn uniform(inst: &BipartiteInstance) -> Self {
        let mut amps = vec![Complex64::ZERO; inst.arc_count()];
        let n = (inst.n1() + inst.n2()) as f64;
        let cx = 1.0 / math::sqrt(n * (inst.n2() as f64 + inst.l1()));
        let cy = 1.0 / math::sqrt(n * (inst.n1() as f64 + inst.l2()));
        let (lx, ly) = (math::sqrt(inst.l1()), math::sqrt(inst.l2()));
        for v in 0..inst.vertex_count() {
            let (start, cross) = inst.block(v);
            let (c, lw) = if inst.is_x(v) { (cx, lx * cx) } else { (cy, ly * cy) };
            for a in &mut amps[start..start + cross] {
                *a = Complex64::new(c, 0.0);
            }
            amps[start + cross] = Complex64::new(lw, 0.0);
        }
        Self { inst: *inst, amps }
    }

    /// The walk-stationary initial state: amplitude 1 on every cross arc,
    /// sqrt(l1) / sqrt(l2) on loops, normalized.
    pub fn stationary(inst: &BipartiteInstance) -> Self {
        let mut amps = vec![Complex64::ZERO; inst.arc_count()];
        let norm = 1.0
            / math::sqrt(
                2.0 * inst.n1() as f64 * inst.n2() as f64
                    + inst.l1() * inst.n1() as f64
                    + inst.l2() * inst.n2() as f64,
            );
        let (lx, ly) = (math::sqrt(inst.l1()) * norm, math::sqrt(inst.l2()) * norm);
        for v in 0..inst.vertex_count() {
            let (start, cross) = inst.block(v);
            let lw = if inst.is_x(v) { lx } else { ly };
            for a in &mut amps[start..start + cross] {
                *a = Complex64::new(norm, 0.0);
            }
            amps[start + cross] = Complex64::new(lw, 0.0);
        }
        Self { inst: *inst, amps }
    }

    pub fn instance(&self) -> &BipartiteInstance {
        &self.inst
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    /// Replaces the amplitude vector (normalization is the caller's
    /// responsibility). Panics when the length does not match the arc count.
    pub fn set_amplitudes(&mut self, amps: impl IntoIterator<Item = Complex64>) {
        let v: Vec<Complex64> = amps.into_iter().collect();
        assert_eq!(v.len(), self.inst.arc_count(), "amplitude length mismatch");
        self.amps = v;
    }

    pub fn norm(&self) -> f64 {
        math::sqrt(self.amps.iter().map(|a| a.norm_sqr()).sum())
    }

    /// Sign flip on every arc whose tail is marked.
    pub fn apply_oracle(&mut self) {
        for v in 0..self.inst.k1() {
            let (start, cross) = self.inst.block(v);
            for a in &mut self.amps[start..=start + cross] {
                *a = -*a;
            }
        }
        for j in 0..self.inst.k2() {
            let (start, cross) = self.inst.block(self.inst.n1() + j);
            for a in &mut self.amps[start..=start + cross] {
                *a = -*a;
            }
        }
    }

    /// Weighted Grover diffusion, applied per vertex block.
    pub fn apply_coin(&mut self) {
        for v in 0..self.inst.vertex_count() {
            let (start, cross) = self.inst.block(v);
            let l = if self.inst.is_x(v) { self.inst.l1() } else { self.inst.l2() };
            let inv_sqrt_deg = 1.0 / math::sqrt(cross as f64 + l);
            let loop_w = math::sqrt(l) * inv_sqrt_deg;

            let mut dot = Complex64::ZERO;
            for a in &self.amps[start..start + cross] {
                dot += a;
            }
            dot *= inv_sqrt_deg;
            dot += loop_w * self.amps[start + cross];

            let twice = 2.0 * dot;
            for a in &mut self.amps[start..start + cross] {
                *a = twice * inv_sqrt_deg - *a;
            }
            self.amps[start + cross] = twice * loop_w - self.amps[start + cross];
        }
    }

    /// Flip-flop shift: `(u, v) <-> (v, u)`; loop arcs are fixed points.
    pub fn apply_shift(&mut self) {
        let n1 = self.inst.n1();
        let n2 = self.inst.n2();
        let base = self.inst.y_block_base();
        for x in 0..n1 {
            for j in 0..n2 {
                let i1 = x * (n2 + 1) + j;
                let i2 = base + j * (n1 + 1) + x;
                self.amps.swap(i1, i2);
            }
        }
    }

    /// One walk step without the oracle: coin, then shift.
    pub fn apply_walk_step(&mut self) {
        self.apply_coin();
        self.apply_shift();
    }

    /// One search step: oracle, then coin, then shift.
    pub fn apply_search_step(&mut self) {
        self.apply_oracle();
        self.apply_coin();
        self.apply_shift();
    }

    /// Total probability on arcs leaving marked vertices.
    pub fn success_probability(&self) -> f64 {
        let mut p = 0.0;
        for v in 0..self.inst.k1() {
            let (start, cross) = self.inst.block(v);
            for a in &self.amps[start..=start + cross] {
                p += a.norm_sqr();
            }
        }
        for j in 0..self.inst.k2() {
            let (start, cross) = self.inst.block(self.inst.n1() + j);
            for a in &self.amps[start..=start + cross] {
                p += a.norm_sqr();
            }
        }
        p
    }

    /// Success probability after 0..=steps search steps. The receiver is
    /// not mutated; evolution happens on an internal copy.
    pub fn evolve(&self, steps: usize) -> EvolutionTrace {
        let mut state = self.clone();
        let mut probs = Vec::with_capacity(steps + 1);
        probs.push(state.success_probability());
        for _ in 0..steps {
            state.apply_search_step();
            probs.push(state.success_probability());
        }
        EvolutionTrace { probs, engine: Engine::Full }
    }

    /// Squared norm lost when projecting onto the span of the vertex-class
    /// basis (marked X / unmarked X / marked Y / unmarked Y, tail and head
    /// classes combined). Evolution from either initial state should stay
    /// in this span, so the leakage stays at rounding level.
    pub fn subspace_leakage(&self) -> f64 {
        let inst = &self.inst;
        // Class of a vertex: 0 = marked X, 1 = unmarked X, 2 = marked Y,
        // 3 = unmarked Y. Arc classes: (tail class, head class) for cross
        // arcs, plus per-class loop families.
        let class = |v: usize| -> usize {
            if inst.is_x(v) {
                usize::from(v >= inst.k1())
            } else {
                2 + usize::from(v - inst.n1() >= inst.k2())
            }
        };
        let mut sums = [Complex64::ZERO; 24];
        let mut counts = [0usize; 24];
        for v in 0..inst.vertex_count() {
            let (start, cross) = inst.block(v);
            let tc = class(v);
            for j in 0..cross {
                let head = if inst.is_x(v) { inst.n1() + j } else { j };
                let slot = tc * 4 + class(head);
                sums[slot] += self.amps[start + j];
                counts[slot] += 1;
            }
            let slot = 16 + tc;
            sums[slot] += self.amps[start + cross];
            counts[slot] += 1;
        }
        let total: f64 = self.amps.iter().map(|a| a.norm_sqr()).sum();
        let mut projected = 0.0;
        for (s, &c) in sums.iter().zip(counts.iter()) {
            if c > 0 {
                projected += s.norm_sqr() / c as f64;
            }
        }
        total - projected
    }
}
