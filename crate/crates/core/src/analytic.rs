//! Closed-form spectral engine: asymptotic eigenpairs from degenerate
//! perturbation theory, initial-state expansions, success-probability
//! formulas, peak times/probabilities, optimal loop weights, improvement
//! thresholds and total runtimes.
//!
//! All one-set formulas assume the marked vertices sit in set X
//! (`k2 == 0`); reduce Y-only instances with
//! [`BipartiteInstance::swapped`] first. The symmetric family covers the
//! regular graph with equal weights and equally split marks
//! (`n1 = n2 = n/2`, `l1 = l2 = l`, `k1 = k2 = k/2`).
//!
//! The formulas are leading-order in `1/sqrt(n)`; several carry `1/sqrt(l)`
//! factors and are gated on `l > 0`. Loopless cases are served by the
//! exact engines and by [`loopless_baselines`].

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

use crate::graph::BipartiteInstance;
use crate::math;
use crate::subspace::SubspaceModel;
use crate::trace::Init;

/// Closed-form prediction for one instance / initial state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralPrediction {
    /// Slow rotation angle; `sin(theta)` is the printed closed form.
    pub theta: f64,
    /// Fast rotation angle; `sin(phi) >= sin(theta)` in the one-set case.
    pub phi: f64,
    /// Predicted peak time (real-valued; rounding is the caller's business).
    pub t_star: f64,
    /// Predicted peak success probability.
    pub p_star: f64,
    /// Expected total cost with classical repetitions, `t_star / p_star`.
    pub total_runtime: f64,
}

/// Asymptotic eigenvector (in subspace coordinates) with its eigenvalue.
#[derive(Debug, Clone, PartialEq)]
pub struct PerturbativeEigenpair {
    pub coords: Vec<Complex64>,
    pub eigenvalue: Complex64,
}

impl PerturbativeEigenpair {
    pub fn norm(&self) -> f64 {
        math::sqrt(self.coords.iter().map(|c| c.norm_sqr()).sum())
    }

    /// `|| U psi - lambda psi ||` against an exact subspace matrix.
    pub fn residual(&self, model: &SubspaceModel) -> f64 {
        let d = model.dim();
        assert_eq!(d, self.coords.len(), "eigenvector dimension mismatch");
        let m = model.matrix();
        let mut acc = 0.0;
        for r in 0..d {
            let mut y = Complex64::ZERO;
            for c in 0..d {
                y += m[r * d + c] * self.coords[c];
            }
            acc += (y - self.eigenvalue * self.coords[r]).norm_sqr();
        }
        math::sqrt(acc)
    }
}

/// Inputs outside the domain of a closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnalyticError {
    /// One-set formulas need `1 <= k1 < n1` and `k2 == 0`.
    NotOneSet,
    /// The perturbative expressions carry `1/sqrt(l)` factors.
    ZeroLoopWeight,
    /// The `uniform`-state peak formula holds only at `l1 = k*n2/(2*n1)`.
    NonOptimalWeight,
    /// Symmetric formulas need even totals, `2 <= k` and `k/2 < n/2`.
    NotSymmetric,
    /// The printed sine exceeds 1; the instance is outside the asymptotic
    /// regime the expansion assumes.
    OutOfAsymptoticRegime,
}

impl fmt::Display for AnalyticError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnalyticError::NotOneSet => write!(
                f,
                "closed form requires marked vertices in set X only (1 <= k1 < n1, k2 = 0)"
            ),
            AnalyticError::ZeroLoopWeight => {
                write!(f, "closed form is singular at zero loop weight")
            }
            AnalyticError::NonOptimalWeight => {
                write!(f, "uniform-state peak formula requires l1 = k*n2/(2*n1)")
            }
            AnalyticError::NotSymmetric => {
                write!(f, "symmetric case requires even n and k with 2 <= k and k/2 < n/2")
            }
            AnalyticError::OutOfAsymptoticRegime => {
                write!(f, "weights/marks too large relative to the set sizes")
            }
        }
    }
}

impl core::error::Error for AnalyticError {}

struct OneSet {
    n1: f64,
    n2: f64,
    k: f64,
    l1: f64,
    l2: f64,
}

fn one_set_params(inst: &BipartiteInstance) -> Result<OneSet, AnalyticError> {
    if inst.k2() != 0 || inst.k1() == 0 || inst.k1() >= inst.n1() {
        return Err(AnalyticError::NotOneSet);
    }
    Ok(OneSet {
        n1: inst.n1() as f64,
        n2: inst.n2() as f64,
        k: inst.k1() as f64,
        l1: inst.l1(),
        l2: inst.l2(),
    })
}

fn checked_asin_sqrt(x: f64) -> Result<f64, AnalyticError> {
    if !(0.0..=1.0).contains(&x) {
        return Err(AnalyticError::OutOfAsymptoticRegime);
    }
    Ok(math::asin(math::sqrt(x)))
}

/// `(theta, phi)` with `sin(theta) = sqrt((2 l1 n1 + k n2)/(n1 n2))` and
/// `sin(phi) = sqrt((2 l1 n1 + k n2 + 2 l2 n2)/(n1 n2))`.
pub fn one_set_angles(inst: &BipartiteInstance) -> Result<(f64, f64), AnalyticError> {
    let p = one_set_params(inst)?;
    let theta = checked_asin_sqrt((2.0 * p.l1 * p.n1 + p.k * p.n2) / (p.n1 * p.n2))?;
    let phi =
        checked_asin_sqrt((2.0 * p.l1 * p.n1 + p.k * p.n2 + 2.0 * p.l2 * p.n2) / (p.n1 * p.n2))?;
    Ok((theta, phi))
}

fn unit_phase(angle: f64) -> Complex64 {
    Complex64::new(math::cos(angle), math::sin(angle))
}

/// The seven asymptotic eigenpairs of the 7D search operator, with
/// eigenvalues `1, exp(-+i theta), -1, -1, -exp(+-i phi)`. Requires
/// `l1 > 0` (several entries carry `1/sqrt(l1)`).
pub fn one_set_eigensystem(
    inst: &BipartiteInstance,
) -> Result<Vec<PerturbativeEigenpair>, AnalyticError> {
    let p = one_set_params(inst)?;
    if p.l1 <= 0.0 {
        return Err(AnalyticError::ZeroLoopWeight);
    }
    let (theta, phi) = one_set_angles(inst)?;
    let s = math::sqrt;
    let (n1, n2, k, l1, l2) = (p.n1, p.n2, p.k, p.l1, p.l2);

    let re = |x: f64| Complex64::new(x, 0.0);
    let im = |x: f64| Complex64::new(0.0, x);
    let zero = Complex64::ZERO;

    let r = l1 * n1 / (k * n2);
    let norm1 = s(1.0 + 2.0 * r);
    let psi1 = vec![re(1.0 / norm1), zero, zero, zero, re(-s(r) / norm1), re(-s(r) / norm1), zero];

    let w = s((2.0 * l1 * n1 + k * n2) / (4.0 * l1 * n1));
    let u = s(k * n2 / (4.0 * l1 * n1));
    let norm23 = s(2.0 + k * n2 / (l1 * n1));
    let psi2 = vec![
        re(1.0 / norm23),
        im(w / norm23),
        im(-w / norm23),
        zero,
        re(u / norm23),
        re(u / norm23),
        zero,
    ];
    let psi3 = vec![
        re(1.0 / norm23),
        im(-w / norm23),
        im(w / norm23),
        zero,
        re(u / norm23),
        re(u / norm23),
        zero,
    ];

    let psi4 = vec![
        zero,
        re(1.0 / norm23),
        re(1.0 / norm23),
        zero,
        zero,
        zero,
        re(s(k * n2 / (l1 * n1)) / norm23),
    ];

    let norm5 = s(1.0 + l2 * n2 / (l1 * n1));
    let psi5 =
        vec![zero, zero, zero, re(1.0 / norm5), zero, zero, re(s(l2 * n2 / (l1 * n1)) / norm5)];

    let v = s((2.0 * l1 * n1 + (k + 2.0 * l2) * n2) / (2.0 * k * n2));
    let norm67 = s(2.0 + 4.0 * (l1 * n1 + l2 * n2) / (k * n2));
    let half = 1.0 / s(2.0);
    let psi6 = vec![
        zero,
        re(half / norm67),
        re(half / norm67),
        re(s(2.0 * l2 / k) / norm67),
        im(-v / norm67),
        im(v / norm67),
        re(-s(2.0 * l1 * n1 / (k * n2)) / norm67),
    ];
    let psi7 = vec![
        zero,
        re(half / norm67),
        re(half / norm67),
        re(s(2.0 * l2 / k) / norm67),
        im(v / norm67),
        im(-v / norm67),
        re(-s(2.0 * l1 * n1 / (k * n2)) / norm67),
    ];

    Ok(vec![
        PerturbativeEigenpair { coords: psi1, eigenvalue: re(1.0) },
        PerturbativeEigenpair { coords: psi2, eigenvalue: unit_phase(-theta) },
        PerturbativeEigenpair { coords: psi3, eigenvalue: unit_phase(theta) },
        PerturbativeEigenpair { coords: psi4, eigenvalue: re(-1.0) },
        PerturbativeEigenpair { coords: psi5, eigenvalue: re(-1.0) },
        PerturbativeEigenpair { coords: psi6, eigenvalue: -unit_phase(phi) },
        PerturbativeEigenpair { coords: psi7, eigenvalue: -unit_phase(-phi) },
    ])
}

/// Expansion coefficients `a..g` of the initial state over the asymptotic
/// eigenvectors. For the stationary state `d = e = f = g = 0`; for the
/// uniform state `f` and `g` are imaginary. In both cases the combination
/// reconstructs the leading-order initial state exactly.
pub fn one_set_expansion_coeffs(
    inst: &BipartiteInstance,
    init: Init,
) -> Result<Vec<Complex64>, AnalyticError> {
    let p = one_set_params(inst)?;
    if p.l1 <= 0.0 {
        return Err(AnalyticError::ZeroLoopWeight);
    }
    let s = math::sqrt;
    let (n1, n2, k, l1) = (p.n1, p.n2, p.k, p.l1);
    let w = 2.0 * l1 * n1 + k * n2;
    Ok(match init {
        Init::Uniform => {
            let a = -(s(n1) + s(n2)) * s(l1 * n1 / ((n1 + n2) * w));
            let b = (s(k) * n2 + s(k * n1 * n2)) / (2.0 * s((n1 + n2) * w));
            let f = (s(n2) - s(n1)) / (2.0 * s(n1 + n2));
            vec![
                Complex64::new(a, 0.0),
                Complex64::new(b, 0.0),
                Complex64::new(b, 0.0),
                Complex64::ZERO,
                Complex64::ZERO,
                Complex64::new(0.0, f),
                Complex64::new(0.0, -f),
            ]
        }
        Init::Stationary => {
            let a = -s(2.0 * l1 * n1 / w);
            let b = s(k * n2 / (2.0 * w));
            vec![
                Complex64::new(a, 0.0),
                Complex64::new(b, 0.0),
                Complex64::new(b, 0.0),
                Complex64::ZERO,
                Complex64::ZERO,
                Complex64::ZERO,
                Complex64::ZERO,
            ]
        }
    })
}

/// The printed leading-order success probability at integer time `t`.
///
/// The uniform-state form carries an explicit `(-1)^t` term, which is why
/// `t` is an integer here; peak predictions with real-valued `t` live in
/// [`one_set_peak`].
pub fn one_set_p_of_t(inst: &BipartiteInstance, init: Init, t: u32) -> Result<f64, AnalyticError> {
    let p = one_set_params(inst)?;
    if p.l1 <= 0.0 {
        return Err(AnalyticError::ZeroLoopWeight);
    }
    let (theta, phi) = one_set_angles(inst)?;
    let s = math::sqrt;
    let (n1, n2, k, l1, l2) = (p.n1, p.n2, p.k, p.l1, p.l2);
    let w = 2.0 * l1 * n1 + k * n2;
    let tf = t as f64;
    Ok(match init {
        Init::Uniform => {
            let a = s(k * n2) * (s(n1) + s(n2)) / (2.0 * s(w));
            let b = s(k * n2) * (s(n1) - s(n2)) / (2.0 * s(w + 2.0 * l2 * n2));
            let c = s(k * l1 * n1 * n2) * (s(n1) + s(n2)) / w;
            let parity = if t % 2 == 0 { 1.0 } else { -1.0 };
            let osc = a * math::sin(theta * tf) + parity * b * math::sin(phi * tf);
            let drift = c * (math::cos(theta * tf) - 1.0);
            (osc * osc + drift * drift) / (n1 + n2)
        }
        Init::Stationary => {
            let envelope =
                6.0 * l1 * n1 + k * n2 + (k * n2 - 2.0 * l1 * n1) * math::cos(theta * tf);
            let half = math::sin(theta * tf / 2.0);
            k * n2 * envelope / (w * w) * half * half
        }
    })
}

/// The loop weight on the marked set that maximizes the peak: `k*n2/(2*n1)`.
pub fn optimal_l1(inst: &BipartiteInstance) -> Result<f64, AnalyticError> {
    let p = one_set_params(inst)?;
    Ok(p.k * p.n2 / (2.0 * p.n1))
}

/// Root of `pi*x = tan(pi*x)` in `(1, 1.5)`, solved by bisection to 1e-10.
/// The unmarked-set weight maximizing the uniform-state peak is
/// `l2 = k*(x^2 - 1)`.
pub fn optimal_l2_root() -> f64 {
    let f = |x: f64| math::tan(math::PI * x) - math::PI * x;
    let mut lo = 1.0 + 1e-9;
    let mut hi = 1.5 - 1e-12;
    // f < 0 at the left end and increases to +inf toward 1.5
    for _ in 0..200 {
        if hi - lo < 1e-10 {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `l2 = k*(x^2 - 1)` at the transcendental root, about `1.0458 * k`.
pub fn optimal_l2(k: usize) -> Result<f64, AnalyticError> {
    if k == 0 {
        return Err(AnalyticError::NotOneSet);
    }
    let x = optimal_l2_root();
    Ok(k as f64 * (x * x - 1.0))
}

/// Peak time, peak probability and total runtime for a one-set instance.
///
/// Stationary start: any `l1 > 0`, with the piecewise split at
/// `l1 = k*n2/(6*n1)`; below the split the peak time is
/// `acos(4 l1 n1 / (2 l1 n1 - k n2)) / theta`. Uniform start: the closed
/// form is only available at `l1 = k*n2/(2*n1)` and evaluates the peak via
/// `sin(pi * sqrt(1 + l2/k))`; off-optimal weights are refused.
pub fn one_set_peak(
    inst: &BipartiteInstance,
    init: Init,
) -> Result<SpectralPrediction, AnalyticError> {
    let p = one_set_params(inst)?;
    if p.l1 <= 0.0 {
        return Err(AnalyticError::ZeroLoopWeight);
    }
    let (theta, phi) = one_set_angles(inst)?;
    let s = math::sqrt;
    let (n1, n2, k, l1, l2) = (p.n1, p.n2, p.k, p.l1, p.l2);
    let (t_star, p_star) = match init {
        Init::Stationary => {
            let split = k * n2 / (6.0 * n1);
            if l1 <= split {
                let t = math::acos(4.0 * l1 * n1 / (2.0 * l1 * n1 - k * n2)) / theta;
                (t, k * n2 / (2.0 * k * n2 - 4.0 * l1 * n1))
            } else {
                let w = 2.0 * l1 * n1 + k * n2;
                (math::PI / theta, 8.0 * k * l1 * n1 * n2 / (w * w))
            }
        }
        Init::Uniform => {
            let opt = k * n2 / (2.0 * n1);
            if math::abs(l1 - opt) > 1e-9 * if opt > 1.0 { opt } else { 1.0 } {
                return Err(AnalyticError::NonOptimalWeight);
            }
            let osc = s(k) * (s(n1) - s(n2)) / (2.0 * s(2.0 * (k + l2)))
                * math::sin(math::PI * s(1.0 + l2 / k));
            let main = (s(n1) + s(n2)) / s(2.0);
            (math::PI / theta, (osc * osc + main * main) / (n1 + n2))
        }
    };
    Ok(SpectralPrediction { theta, phi, t_star, p_star, total_runtime: t_star / p_star })
}

/// `(3 - 2*sqrt(2)) * n1`: the uniform-state peak at the optimal `l1` beats
/// the loopless value exactly when `n2` exceeds this.
pub fn improvement_threshold(n1: usize) -> f64 {
    (3.0 - 2.0 * math::sqrt(2.0)) * n1 as f64
}

/// Lower bound on the optimal-weight uniform-state peak:
/// `(sqrt(n1) + sqrt(n2))^2 / (2 (n1 + n2))`, attained at `l2 = 0`.
pub fn peak_lower_bound(n1: usize, n2: usize) -> f64 {
    let s = math::sqrt(n1 as f64) + math::sqrt(n2 as f64);
    s * s / (2.0 * (n1 + n2) as f64)
}

/// Upper endpoint of the loop-weight range that beats the loopless walk on
/// a regular graph with stationary start: `(3 + 2*sqrt(2)) * k / 2`.
pub fn regular_weight_upper_bound(k: usize) -> f64 {
    (3.0 + 2.0 * math::sqrt(2.0)) * k as f64 / 2.0
}

/// Loopless reference values: peak probability `max(n1,n2)/(n1+n2)` from
/// the uniform state, `1/2` from the stationary state, and the stationary
/// envelope peak time `pi / (2 asin(sqrt(k/n1)))`, which reduces to
/// `(pi / (2 sqrt(2))) sqrt(n/k)` on regular graphs.
pub fn loopless_baselines(
    inst: &BipartiteInstance,
    init: Init,
) -> Result<(f64, f64), AnalyticError> {
    let p = one_set_params(inst)?;
    let p_star = match init {
        Init::Uniform => {
            if p.n1 >= p.n2 {
                p.n1 / (p.n1 + p.n2)
            } else {
                p.n2 / (p.n1 + p.n2)
            }
        }
        Init::Stationary => 0.5,
    };
    let theta0 = checked_asin_sqrt(p.k / p.n1)?;
    Ok((p_star, math::PI / (2.0 * theta0)))
}

// ---------------------------------------------------------------------------
// Symmetric both-sets case: n1 = n2 = n/2, l1 = l2 = l, k1 = k2 = k/2.
// ---------------------------------------------------------------------------

fn symmetric_params(n: usize, k: usize, l: f64) -> Result<(f64, f64), AnalyticError> {
    if n % 2 != 0 || k % 2 != 0 || k == 0 || k / 2 >= n / 2 {
        return Err(AnalyticError::NotSymmetric);
    }
    if !l.is_finite() || l < 0.0 {
        return Err(AnalyticError::NotSymmetric);
    }
    Ok((n as f64, k as f64))
}

/// `(theta, phi)` with `sin(theta) = 2 sqrt(k+l)/sqrt(n)`,
/// `sin(phi) = 2 sqrt(l)/sqrt(n)`.
pub fn symmetric_angles(n: usize, k: usize, l: f64) -> Result<(f64, f64), AnalyticError> {
    let (nf, kf) = symmetric_params(n, k, l)?;
    let theta = checked_asin_sqrt(4.0 * (kf + l) / nf)?;
    let phi = checked_asin_sqrt(4.0 * l / nf)?;
    Ok((theta, phi))
}

/// The six symmetric-case eigenpairs spanning both initial states, with
/// eigenvalues `exp(-+i theta), exp(-+i phi), 1, 1`. The two eigenvalue-1
/// vectors are deliberately not orthogonal (their overlap is
/// `sqrt(l/(k+2l))`), matching the derivation. Requires `l > 0`.
pub fn symmetric_eigensystem(
    n: usize,
    k: usize,
    l: f64,
) -> Result<Vec<PerturbativeEigenpair>, AnalyticError> {
    let (_, kf) = symmetric_params(n, k, l)?;
    if l <= 0.0 {
        return Err(AnalyticError::ZeroLoopWeight);
    }
    let (theta, phi) = symmetric_angles(n, k, l)?;
    let s = math::sqrt;
    let re = |x: f64| Complex64::new(x, 0.0);
    let im = |x: f64| Complex64::new(0.0, x);
    let zero = Complex64::ZERO;

    // basis order: aa ab ad ba bb bc cb cc cd da dc dd
    let q = s((kf + l) / (2.0 * l));
    let r = s(kf / (2.0 * l));
    let n12 = s(4.0 + 4.0 * kf / l);
    let psi1: Vec<Complex64> =
        [re(1.0), re(r), im(q), re(r), re(1.0), im(q), im(-q), zero, re(r), im(-q), re(r), zero]
            .iter()
            .map(|c| c / n12)
            .collect();
    let psi2: Vec<Complex64> = psi1.iter().map(|c| c.conj()).collect();

    let h = 1.0 / s(2.0);
    let psi3: Vec<Complex64> =
        [re(1.0), zero, im(h), zero, re(-1.0), im(-h), im(h), zero, zero, im(-h), zero, zero]
            .iter()
            .map(|c| c / 2.0)
            .collect();
    let psi4: Vec<Complex64> = psi3.iter().map(|c| c.conj()).collect();

    let n5 = s(2.0 + 4.0 * l / kf);
    let g = s(2.0 * l / kf);
    let psi5: Vec<Complex64> =
        [re(1.0), zero, zero, zero, re(1.0), zero, zero, zero, re(-g), zero, re(-g), zero]
            .iter()
            .map(|c| c / n5)
            .collect();
    let psi6: Vec<Complex64> =
        [zero, re(h), zero, re(h), zero, zero, zero, zero, re(-h), zero, re(-h), zero]
            .iter()
            .map(|c| c / s(2.0))
            .collect();

    Ok(vec![
        PerturbativeEigenpair { coords: psi1, eigenvalue: unit_phase(-theta) },
        PerturbativeEigenpair { coords: psi2, eigenvalue: unit_phase(theta) },
        PerturbativeEigenpair { coords: psi3, eigenvalue: unit_phase(-phi) },
        PerturbativeEigenpair { coords: psi4, eigenvalue: unit_phase(phi) },
        PerturbativeEigenpair { coords: psi5, eigenvalue: re(1.0) },
        PerturbativeEigenpair { coords: psi6, eigenvalue: re(1.0) },
    ])
}

/// Expansion of the (shared) initial state over the six symmetric
/// eigenvectors; all coefficients are real and the combination
/// reconstructs the leading-order initial state exactly.
pub fn symmetric_expansion_coeffs(n: usize, k: usize, l: f64) -> Result<Vec<f64>, AnalyticError> {
    let (_, kf) = symmetric_params(n, k, l)?;
    let s = math::sqrt;
    let a = kf / (2.0 * s(kf * (kf + l)));
    let e = -s(l) * s(kf + 2.0 * l) / (s(2.0) * (kf + l));
    let f = -kf / (s(2.0) * (kf + l));
    Ok(vec![a, a, 0.0, 0.0, e, f])
}

/// Leading-order symmetric success probability
/// `k/(2(k+l)^2) * [2k + 3l - l cos(theta t)] * sin^2(theta t / 2)`.
pub fn symmetric_p_of_t(n: usize, k: usize, l: f64, t: f64) -> Result<f64, AnalyticError> {
    let (_, kf) = symmetric_params(n, k, l)?;
    let (theta, _) = symmetric_angles(n, k, l)?;
    let half = math::sin(theta * t / 2.0);
    Ok(kf / (2.0 * (kf + l) * (kf + l))
        * (2.0 * kf + 3.0 * l - l * math::cos(theta * t))
        * half
        * half)
}

/// Symmetric peak: `t* = pi/theta`, `p* = k(k+2l)/(k+l)^2`, `T = t*/p*`.
pub fn symmetric_peak(n: usize, k: usize, l: f64) -> Result<SpectralPrediction, AnalyticError> {
    let (_, kf) = symmetric_params(n, k, l)?;
    let (theta, phi) = symmetric_angles(n, k, l)?;
    let t_star = math::PI / theta;
    let p_star = kf * (kf + 2.0 * l) / ((kf + l) * (kf + l));
    Ok(SpectralPrediction { theta, phi, t_star, p_star, total_runtime: t_star / p_star })
}

/// The loop weight minimizing the symmetric total runtime: `l = k/2`.
pub fn symmetric_optimal_l(k: usize) -> f64 {
    k as f64 / 2.0
}

/// Total runtime at the optimal weight: `(3 pi / 8) sqrt(3 n / (2 k))`,
/// about `1.443 sqrt(n/k)`.
pub fn symmetric_min_runtime(n: usize, k: usize) -> f64 {
    3.0 * math::PI / 8.0 * math::sqrt(3.0 * n as f64 / (2.0 * k as f64))
}
