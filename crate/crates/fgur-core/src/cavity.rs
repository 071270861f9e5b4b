//! Rigid-cavity scenario: polylogarithm-based mode-mixing coefficients,
//! the reduced single-mode density matrix, closed-form uncertainty bounds
//! and the acceleration-duration period.
//!
//! A cavity of length L with left wall at x₁ accelerates for a finite
//! Rindler-time interval. To second order in the dimensionless
//! acceleration h = 2L/(x₁ + x₂), every observable quantity depends on
//! the duration only through the unit-modulus phase E₁ = exp(2πiu), where
//! u counts elapsed periods T = 4Lx₁·tanh(h/2)/h of proper time at the
//! cavity center. The coefficient stack is built from
//! Q_α(β) = Re[Li_α(β) − 2^(−α)·Li_α(β²)].

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::fock::DensityMatrix;
use crate::measurement::{OutcomePair, PauliBasis};
use crate::unruh::BlochState;
use crate::{Error, Result};

/// Series termination threshold for the polylogarithm.
const POLYLOG_TERM_CUTOFF: f64 = 1e-16;
/// Hard cap on the number of polylogarithm series terms.
const POLYLOG_MAX_TERMS: usize = 10_000_000;

/// Dimensionless cavity parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CavityParams {
    h: f64,
    k: u32,
    s: f64,
    u: f64,
}

impl CavityParams {
    /// Builds parameters: acceleration h > 0, mode number k ≥ 1,
    /// self-adjoint-extension parameter s ∈ [0, 1), duration u ≥ 0.
    pub fn new(h: f64, k: u32, s: f64, u: f64) -> Result<Self> {
        if !h.is_finite() || h <= 0.0 {
            return Err(Error::OutOfRange {
                name: "h",
                value: h,
            });
        }
        if k == 0 {
            return Err(Error::OutOfRange {
                name: "k",
                value: 0.0,
            });
        }
        if !s.is_finite() || !(0.0..1.0).contains(&s) {
            return Err(Error::OutOfRange {
                name: "s",
                value: s,
            });
        }
        if !u.is_finite() || u < 0.0 {
            return Err(Error::OutOfRange {
                name: "u",
                value: u,
            });
        }
        Ok(CavityParams { h, k, s, u })
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn u(&self) -> f64 {
        self.u
    }

    /// Returns the same parameters at a different duration.
    pub fn at_duration(&self, u: f64) -> Result<Self> {
        CavityParams::new(self.h, self.k, self.s, u)
    }

    /// Effective mode number k + s.
    fn mode(&self) -> f64 {
        self.k as f64 + self.s
    }

    /// Warning when the perturbative validity condition |k|h ≪ 1 is
    /// strained (kh > 0.3).
    pub fn perturbative_warning(&self) -> Option<String> {
        let kh = self.k as f64 * self.h;
        if kh > 0.3 {
            Some(format!(
                "kh = {kh:.3} strains the small-acceleration expansion (validity needs kh << 1)"
            ))
        } else {
            None
        }
    }
}

/// Physical cavity geometry: length, left-wall position and proper
/// duration of the acceleration measured at the cavity center.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CavityGeometry {
    length: f64,
    left_wall: f64,
    duration: f64,
}

impl CavityGeometry {
    pub fn new(length: f64, left_wall: f64, duration: f64) -> Result<Self> {
        if !length.is_finite() || length <= 0.0 {
            return Err(Error::OutOfRange {
                name: "length",
                value: length,
            });
        }
        if !left_wall.is_finite() || left_wall <= 0.0 {
            return Err(Error::OutOfRange {
                name: "left_wall",
                value: left_wall,
            });
        }
        if !duration.is_finite() || duration < 0.0 {
            return Err(Error::OutOfRange {
                name: "duration",
                value: duration,
            });
        }
        Ok(CavityGeometry {
            length,
            left_wall,
            duration,
        })
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn left_wall(&self) -> f64 {
        self.left_wall
    }

    pub fn duration(&self) -> f64 {
        self.duration
    }

    /// Dimensionless acceleration h = 2L/(x₁ + x₂) = 2L/(2x₁ + L).
    pub fn h(&self) -> f64 {
        2.0 * self.length / (2.0 * self.left_wall + self.length)
    }

    /// Period of the bounds in proper time, T = 4Lx₁·tanh(h/2)/h.
    pub fn period(&self) -> f64 {
        let h = self.h();
        4.0 * self.length * self.left_wall * (0.5 * h).tanh() / h
    }

    /// Dimensionless duration u = hτ₁/(4Lx₁·tanh(h/2)) = τ₁/T.
    pub fn u(&self) -> f64 {
        self.duration / self.period()
    }

    /// Dimensionless parameters for mode `k` and extension parameter `s`.
    pub fn params(&self, k: u32, s: f64) -> Result<CavityParams> {
        CavityParams::new(self.h(), k, s, self.u())
    }
}

/// Prefactor convention for the leading term of [`f_minus`].
///
/// `Sixteen` follows the coefficient as printed; `Eight` is the
/// alternative reading kept for sensitivity analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FMinusPrefactor {
    #[default]
    Sixteen,
    Eight,
}

impl FMinusPrefactor {
    fn value(self) -> f64 {
        match self {
            FMinusPrefactor::Sixteen => 16.0,
            FMinusPrefactor::Eight => 8.0,
        }
    }
}

/// Polylogarithm Li_α(z) = Σ_{n≥1} zⁿ/n^α by direct series summation.
///
/// Valid for α ≥ 2 and |z| ≤ 1 (rejects anything else); terms are summed
/// with compensated accumulation until they drop below 1e-16 in
/// magnitude. For α ≥ 4 the absolute error on the closed unit disk is
/// below 1e-12.
pub fn polylog(alpha: u32, z: Complex64) -> Result<Complex64> {
    if alpha < 2 {
        return Err(Error::OutOfRange {
            name: "alpha",
            value: alpha as f64,
        });
    }
    if !z.re.is_finite() || !z.im.is_finite() || z.norm() > 1.0 + 1e-12 {
        return Err(Error::OutOfRange {
            name: "|z|",
            value: z.norm(),
        });
    }
    Ok(polylog_series(alpha, z))
}

/// Series core; assumes validated input.
fn polylog_series(alpha: u32, z: Complex64) -> Complex64 {
    let cutoff_sqr = POLYLOG_TERM_CUTOFF * POLYLOG_TERM_CUTOFF;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut compensation = Complex64::new(0.0, 0.0);
    let mut power = Complex64::new(1.0, 0.0);
    for n in 1..=POLYLOG_MAX_TERMS {
        power *= z;
        let term = power / (n as f64).powi(alpha as i32);
        // Kahan step, real and imaginary parts compensated together
        let y = term - compensation;
        let t = sum + y;
        compensation = (t - sum) - y;
        sum = t;
        if term.norm_sqr() < cutoff_sqr {
            break;
        }
    }
    sum
}

/// Q_α(β) = Re[Li_α(β) − 2^(−α)·Li_α(β²)].
///
/// Subtracting the rescaled square removes the even terms, so this equals
/// the odd-index series Σ_{odd n} Re(βⁿ)/n^α, maximal at β = 1.
pub fn q_alpha(alpha: u32, beta: Complex64) -> Result<f64> {
    if alpha < 2 {
        return Err(Error::OutOfRange {
            name: "alpha",
            value: alpha as f64,
        });
    }
    if beta.norm() > 1.0 + 1e-12 {
        return Err(Error::OutOfRange {
            name: "|beta|",
            value: beta.norm(),
        });
    }
    Ok(q_series(alpha, beta))
}

fn q_series(alpha: u32, beta: Complex64) -> f64 {
    let direct = polylog_series(alpha, beta);
    let squared = polylog_series(alpha, beta * beta);
    (direct - squared * 2.0f64.powi(-(alpha as i32))).re
}

/// Duration phase E₁ = exp(2πiu).
///
/// The duration is reduced modulo one period first, so integer u maps to
/// exactly 1 and the periodicity of every downstream quantity is exact.
pub fn e1_phase(u: f64) -> Complex64 {
    let frac = u.rem_euclid(1.0);
    if frac == 0.0 {
        Complex64::new(1.0, 0.0)
    } else {
        Complex64::from_polar(1.0, 2.0 * PI * frac)
    }
}

/// Mode-mixing coefficient
/// F₊ = (4h²/π⁴)[4(k+s)²(Q₆(1) − Q₆(E₁)) + Q₄(1) − Q₄(E₁)].
pub fn f_plus(p: &CavityParams) -> f64 {
    let e1 = e1_phase(p.u);
    let ks = p.mode();
    let one = Complex64::new(1.0, 0.0);
    let dq6 = q_series(6, one) - q_series(6, e1);
    let dq4 = q_series(4, one) - q_series(4, e1);
    4.0 * p.h * p.h / PI.powi(4) * (4.0 * ks * ks * dq6 + dq4)
}

/// Mode-mixing coefficient F₋ = f⁺ − f⁻ with the printed prefactor:
/// (16h²/π⁴)·2(k+s)·[Q₅(1) − Q₅(E₁)] + P(k, s, E₁).
pub fn f_minus(p: &CavityParams) -> f64 {
    f_minus_with(p, FMinusPrefactor::Sixteen)
}

/// [`f_minus`] with a selectable leading prefactor.
pub fn f_minus_with(p: &CavityParams, prefactor: FMinusPrefactor) -> f64 {
    let e1 = e1_phase(p.u);
    let ks = p.mode();
    let one = Complex64::new(1.0, 0.0);
    let dq5 = q_series(5, one) - q_series(5, e1);
    let lead = prefactor.value() * p.h * p.h / PI.powi(4) * 2.0 * ks * dq5;
    lead + p_polynomial(p.k, p.s, p.h, e1)
}

/// Odd-mode polynomial
/// P = Σ_{odd m=1}^{k} (4h²/π⁴)(1 − Re E₁^m)[4(k+s)((k+s)/m − 1) + 1/m⁴].
pub fn p_polynomial(k: u32, s: f64, h: f64, e1: Complex64) -> f64 {
    let ks = k as f64 + s;
    let scale = 4.0 * h * h / PI.powi(4);
    (1..=k)
        .step_by(2)
        .map(|m| {
            let m_f = m as f64;
            let weight = 1.0 - e1.powi(m as i32).re;
            scale * weight * (4.0 * ks * (ks / m_f - 1.0) + m_f.powi(-4))
        })
        .sum()
}

/// Real part of the coherence coefficient,
/// 1 − h²{(1/48 + π²(k+s)²/120) − (2/π⁴)[4(k+s)²Q₆(E₁) + Q₄(E₁)]}.
pub fn re_g(p: &CavityParams) -> f64 {
    let e1 = e1_phase(p.u);
    let ks = p.mode();
    let q6 = q_series(6, e1);
    let q4 = q_series(4, e1);
    let braces =
        (1.0 / 48.0 + PI * PI * ks * ks / 120.0) - 2.0 / PI.powi(4) * (4.0 * ks * ks * q6 + q4);
    1.0 - p.h * p.h * braces
}

/// The three coefficients entering the bounds, plus the duration phase.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoefficientSet {
    pub f_plus: f64,
    pub f_minus: f64,
    pub re_g: f64,
    pub e1: Complex64,
}

impl CoefficientSet {
    pub fn compute(p: &CavityParams) -> Self {
        Self::compute_with(p, FMinusPrefactor::Sixteen)
    }

    pub fn compute_with(p: &CavityParams, prefactor: FMinusPrefactor) -> Self {
        CoefficientSet {
            f_plus: f_plus(p),
            f_minus: f_minus_with(p, prefactor),
            re_g: re_g(p),
            e1: e1_phase(p.u),
        }
    }
}

/// Reduced density matrix of the observed cavity mode in the basis
/// {|0̃_k⟩, |1̃_k⟩⁺}.
///
/// The populations depend on the mode-mixing only through the printed
/// combinations: the |0̃⟩ population is cos²(θ/2) + (F₋ − F₊·cos θ)/2 and
/// the coherence is (1/2)·sin θ·e^(∓iφ) times the coefficient whose real
/// part is [`re_g`]. Only that real part is available from the closed-form
/// stack, so the imaginary part of the coherence coefficient is set to
/// zero; at φ = 0, where the bounds are evaluated, it would drop out
/// anyway.
pub fn cavity_reduced_density(state: &BlochState, p: &CavityParams) -> DensityMatrix {
    cavity_reduced_density_from(&CoefficientSet::compute(p), state)
}

/// [`cavity_reduced_density`] from precomputed coefficients; this is the
/// cheap path for optimizer sweeps at fixed cavity parameters.
pub fn cavity_reduced_density_from(coeffs: &CoefficientSet, state: &BlochState) -> DensityMatrix {
    let theta = state.theta();
    let half = 0.5 * theta;
    let population_shift = 0.5 * (coeffs.f_minus - coeffs.f_plus * theta.cos());
    let p0 = half.cos().powi(2) + population_shift;
    let p1 = half.sin().powi(2) - population_shift;
    let coherence = Complex64::from_polar(0.5 * theta.sin() * coeffs.re_g, -state.phi());
    let mut rho = DensityMatrix::zeros(2);
    rho.set(0, 0, Complex64::new(p0, 0.0));
    rho.set(1, 1, Complex64::new(p1, 0.0));
    rho.set(0, 1, coherence);
    rho.set(1, 0, coherence.conj());
    rho
}

/// True when every population (diagonal entry) of a reduced matrix lies
/// in [0, 1] up to rounding slack.
///
/// The h²-truncated coefficients can push a population outside that
/// range when the expansion is strained (kh no longer small); callers
/// surface this as a warning.
pub fn populations_physical(rho: &DensityMatrix) -> bool {
    (0..rho.dim()).all(|i| {
        let p = rho.get(i, i).re;
        (-1e-12..=1.0 + 1e-12).contains(&p)
    })
}

/// Closed-form cavity uncertainty bound for an x/z outcome pair:
/// (1/4)[2 + (√2/2)(1 − F₊) ± F₋ + (√2/2)·Re G], with + for pairs asking
/// the 0 outcome of σ_z and − for the 1 outcome.
pub fn cavity_bound(pair: &OutcomePair, p: &CavityParams) -> Result<f64> {
    cavity_bound_with(pair, p, FMinusPrefactor::Sixteen)
}

/// [`cavity_bound`] with a selectable F₋ prefactor.
pub fn cavity_bound_with(
    pair: &OutcomePair,
    p: &CavityParams,
    prefactor: FMinusPrefactor,
) -> Result<f64> {
    let coeffs = CoefficientSet::compute_with(p, prefactor);
    cavity_bound_from(pair, &coeffs)
}

/// [`cavity_bound`] from precomputed coefficients.
pub fn cavity_bound_from(pair: &OutcomePair, coeffs: &CoefficientSet) -> Result<f64> {
    let z = pair
        .outcome_for(PauliBasis::Z)
        .filter(|_| pair.is_xz())
        .ok_or(Error::UnsupportedPair)?;
    let sign = if z == 0 { 1.0 } else { -1.0 };
    let sqrt2_half = std::f64::consts::FRAC_1_SQRT_2;
    Ok(0.25
        * (2.0
            + sqrt2_half * (1.0 - coeffs.f_plus)
            + sign * coeffs.f_minus
            + sqrt2_half * coeffs.re_g))
}
