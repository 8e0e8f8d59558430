//! Shared evolution types: initial states, engines, probability traces.

use alloc::vec::Vec;
use core::fmt;

/// Which initial state the walker starts from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Init {
    /// Equal probability per vertex, weight-distributed over its arcs.
    Uniform,
    /// The walk-invariant state, amplitudes proportional to edge weights.
    Stationary,
}

impl fmt::Display for Init {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Init::Uniform => write!(f, "uniform"),
            Init::Stationary => write!(f, "stationary"),
        }
    }
}

/// Which exact engine produced a trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    Full,
    Subspace,
}

/// Success probability after 0, 1, ..., t_max search steps.
#[derive(Debug, Clone, PartialEq)]
pub struct EvolutionTrace {
    pub probs: Vec<f64>,
    pub engine: Engine,
}

impl EvolutionTrace {
    /// Number of recorded steps (trace length minus one).
    pub fn steps(&self) -> usize {
        self.probs.len().saturating_sub(1)
    }
}
