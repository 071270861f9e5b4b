//! Unruh vacuum and one-particle states beyond the single-mode
//! approximation, and the wedge-I reduced density matrix of a qubit
//! prepared in an inertial frame.
//!
//! The reduced matrix is produced along two fully independent routes:
//!
//! * [`reduced_density_oracle`] pushes the state through the Fock engine
//!   (superpose, project, trace out wedge II) with no knowledge of the
//!   closed-form result;
//! * [`reduced_density_analytic`] populates the ten closed-form entries
//!   directly.
//!
//! Their entrywise agreement over the whole parameter space is the central
//! correctness property of the crate and pins down every fermionic sign
//! convention.

use num_complex::Complex64;
use std::f64::consts::FRAC_PI_4;

use crate::fock::{outer_product, partial_trace_wedge_ii, DensityMatrix, FockVector};
use crate::{Error, Result};

const TAU: f64 = 2.0 * std::f64::consts::PI;

/// Acceleration parameter and Unruh-mode weights.
///
/// `r` parameterizes the proper acceleration through tan r = e^(−πω/a),
/// so r = 0 is the inertial limit and r = π/4 the infinite-acceleration
/// limit. The real weights satisfy q_R² + q_L² = 1; q_L = 0 recovers the
/// single-mode approximation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnruhParams {
    r: f64,
    q_r: f64,
    q_l: f64,
}

impl UnruhParams {
    /// Builds parameters from `r` and `q_l`, with q_R = +√(1 − q_L²).
    pub fn new(r: f64, q_l: f64) -> Result<Self> {
        if !r.is_finite() || !(0.0..=FRAC_PI_4).contains(&r) {
            return Err(Error::OutOfRange {
                name: "r",
                value: r,
            });
        }
        if !q_l.is_finite() || q_l.abs() > 1.0 {
            return Err(Error::OutOfRange {
                name: "q_l",
                value: q_l,
            });
        }
        Ok(UnruhParams {
            r,
            q_r: (1.0 - q_l * q_l).sqrt(),
            q_l,
        })
    }

    /// Builds parameters with explicit weights, which must satisfy
    /// q_R² + q_L² = 1 within 1e-12.
    pub fn with_weights(r: f64, q_r: f64, q_l: f64) -> Result<Self> {
        if !r.is_finite() || !(0.0..=FRAC_PI_4).contains(&r) {
            return Err(Error::OutOfRange {
                name: "r",
                value: r,
            });
        }
        let sum = q_r * q_r + q_l * q_l;
        if !sum.is_finite() || (sum - 1.0).abs() > 1e-12 {
            return Err(Error::OutOfRange {
                name: "q_r^2 + q_l^2",
                value: sum,
            });
        }
        Ok(UnruhParams { r, q_r, q_l })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn q_r(&self) -> f64 {
        self.q_r
    }

    pub fn q_l(&self) -> f64 {
        self.q_l
    }

    pub fn cos_r(&self) -> f64 {
        self.r.cos()
    }

    pub fn sin_r(&self) -> f64 {
        self.r.sin()
    }
}

/// Pure qubit state cos(θ/2)|0⟩ + e^(iφ) sin(θ/2)|1⟩.
///
/// Both angles are wrapped into [0, 2π); the full θ range is kept because
/// maximally certain states sit at angles such as 5π/4.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochState {
    theta: f64,
    phi: f64,
}

impl BlochState {
    pub fn new(theta: f64, phi: f64) -> Self {
        BlochState {
            theta: theta.rem_euclid(TAU),
            phi: phi.rem_euclid(TAU),
        }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// Amplitudes (cos(θ/2), e^(iφ) sin(θ/2)) of |0⟩ and |1⟩.
    pub fn amplitudes(&self) -> (Complex64, Complex64) {
        let half = 0.5 * self.theta;
        (
            Complex64::new(half.cos(), 0.0),
            Complex64::from_polar(half.sin(), self.phi),
        )
    }
}

/// The Unruh vacuum for one frequency:
/// cos²r|0000⟩ − sin²r|1111⟩ + sin r cos r (|1100⟩ − |0011⟩).
pub fn unruh_vacuum(params: &UnruhParams) -> FockVector {
    let c = params.cos_r();
    let s = params.sin_r();
    let mut v = FockVector::zero();
    v.set_amplitude(0b0000, Complex64::new(c * c, 0.0));
    v.set_amplitude(0b1111, Complex64::new(-s * s, 0.0));
    v.set_amplitude(0b1100, Complex64::new(s * c, 0.0));
    v.set_amplitude(0b0011, Complex64::new(-s * c, 0.0));
    v
}

/// The first Unruh excitation:
/// q_R(cos r|1000⟩ − sin r|1011⟩) + q_L(sin r|1101⟩ + cos r|0001⟩).
pub fn unruh_one_particle(params: &UnruhParams) -> FockVector {
    let c = params.cos_r();
    let s = params.sin_r();
    let mut v = FockVector::zero();
    v.set_amplitude(0b1000, Complex64::new(params.q_r * c, 0.0));
    v.set_amplitude(0b1011, Complex64::new(-params.q_r * s, 0.0));
    v.set_amplitude(0b1101, Complex64::new(params.q_l * s, 0.0));
    v.set_amplitude(0b0001, Complex64::new(params.q_l * c, 0.0));
    v
}

/// The inertial qubit state rewritten in the Rindler description:
/// cos(θ/2)·|0_U⟩ + e^(iφ) sin(θ/2)·|1_U⟩.
pub fn rindler_state(state: &BlochState, params: &UnruhParams) -> FockVector {
    let (a0, a1) = state.amplitudes();
    unruh_vacuum(params)
        .scaled(a0)
        .add(&unruh_one_particle(params).scaled(a1))
}

/// Wedge-I reduced density matrix via the brute-force Fock pipeline.
pub fn reduced_density_oracle(state: &BlochState, params: &UnruhParams) -> DensityMatrix {
    let psi = rindler_state(state, params);
    let rho = outer_product(&psi, &psi);
    partial_trace_wedge_ii(&rho).expect("16-dimensional by construction")
}

/// Wedge-I reduced density matrix from its ten closed-form entries.
///
/// Basis order |00⟩, |01⟩, |10⟩, |11⟩ in the wedge-I occupations (n₁, n₃);
/// the off-diagonal entries below the diagonal are the Hermitian
/// conjugates of the listed ones.
pub fn reduced_density_analytic(state: &BlochState, params: &UnruhParams) -> DensityMatrix {
    let c = params.cos_r();
    let s = params.sin_r();
    let (c2, s2) = (c * c, s * s);
    let qr = params.q_r;
    let ql = params.q_l;
    let half = 0.5 * state.theta();
    let (cos_half, sin_half) = (half.cos(), half.sin());
    let (kappa2, sigma2) = (cos_half * cos_half, sin_half * sin_half);
    let cross = cos_half * sin_half;
    let phase = Complex64::from_polar(1.0, state.phi());

    let mut rho = DensityMatrix::zeros(4);
    rho.set(
        0,
        0,
        Complex64::new(kappa2 * c2 * c2 + sigma2 * ql * ql * c2, 0.0),
    );
    rho.set(1, 1, Complex64::new(kappa2 * s2 * c2, 0.0));
    rho.set(
        2,
        2,
        Complex64::new(
            kappa2 * s2 * c2 + sigma2 * qr * qr * c2 + sigma2 * ql * ql * s2,
            0.0,
        ),
    );
    rho.set(
        3,
        3,
        Complex64::new(kappa2 * s2 * s2 + sigma2 * qr * qr * s2, 0.0),
    );

    let e01 = -phase * (cross * ql * s * c2);
    let e02 = phase.conj() * (cross * qr * c2 * c);
    let e03 = Complex64::new(-sigma2 * qr * ql * s * c, 0.0);
    let e13 = phase.conj() * (cross * qr * s2 * c);
    let e23 = phase * (cross * ql * s2 * s);
    rho.set(0, 1, e01);
    rho.set(1, 0, e01.conj());
    rho.set(0, 2, e02);
    rho.set(2, 0, e02.conj());
    rho.set(0, 3, e03);
    rho.set(3, 0, e03.conj());
    rho.set(1, 3, e13);
    rho.set(3, 1, e13.conj());
    rho.set(2, 3, e23);
    rho.set(3, 2, e23.conj());
    rho
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::partial_trace_antiparticle;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn vacuum_at_rest_is_bare_vacuum() {
        let p = UnruhParams::new(0.0, 0.0).unwrap();
        let v = unruh_vacuum(&p);
        assert_eq!(v.amplitude(0b0000), Complex64::new(1.0, 0.0));
        assert!((v.norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn vacuum_at_maximal_acceleration() {
        let p = UnruhParams::new(FRAC_PI_4, 0.0).unwrap();
        let v = unruh_vacuum(&p);
        assert!((v.amplitude(0b0000).re - 0.5).abs() < 1e-15);
        assert!((v.amplitude(0b1111).re + 0.5).abs() < 1e-15);
        assert!((v.amplitude(0b1100).re - 0.5).abs() < 1e-15);
        assert!((v.amplitude(0b0011).re + 0.5).abs() < 1e-15);
    }

    #[test]
    fn vacuum_is_normalized() {
        for r in [0.1, 0.3, 0.7] {
            let p = UnruhParams::new(r, 0.0).unwrap();
            assert!((unruh_vacuum(&p).norm() - 1.0).abs() < 1e-14, "r = {r}");
        }
    }

    #[test]
    fn one_particle_limits() {
        let right = UnruhParams::new(0.0, 0.0).unwrap();
        assert_eq!(
            unruh_one_particle(&right).amplitude(0b1000),
            Complex64::new(1.0, 0.0)
        );
        let left = UnruhParams::new(0.0, 1.0).unwrap();
        assert_eq!(
            unruh_one_particle(&left).amplitude(0b0001),
            Complex64::new(1.0, 0.0)
        );
    }

    #[test]
    fn vacuum_and_one_particle_are_orthonormal() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..50 {
            let p = UnruhParams::new(rng.gen::<f64>() * FRAC_PI_4, rng.gen::<f64>()).unwrap();
            let vac = unruh_vacuum(&p);
            let one = unruh_one_particle(&p);
            assert!(vac.inner(&one).norm() < 1e-14);
            assert!((one.norm() - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn oracle_trivial_cases() {
        let p = UnruhParams::new(0.0, 0.0).unwrap();
        let ground = reduced_density_oracle(&BlochState::new(0.0, 0.3), &p);
        assert!((ground.get(0, 0).re - 1.0).abs() < 1e-14);
        let excited = reduced_density_oracle(&BlochState::new(std::f64::consts::PI, 0.0), &p);
        assert!((excited.get(2, 2).re - 1.0).abs() < 1e-14);
    }

    #[test]
    fn analytic_diagonal_entry_matches_closed_form() {
        let p = UnruhParams::new(0.4, 0.6).unwrap();
        let state = BlochState::new(std::f64::consts::FRAC_PI_2, 0.0);
        let rho = reduced_density_analytic(&state, &p);
        let c2 = 0.4f64.cos().powi(2);
        let expected = 0.5 * c2 * c2 + 0.5 * 0.36 * c2;
        assert!((rho.get(0, 0).re - expected).abs() < 1e-15);
    }

    #[test]
    fn analytic_matches_oracle_at_reference_point() {
        let p = UnruhParams::new(0.4, 0.6).unwrap();
        let state = BlochState::new(std::f64::consts::PI / 3.0, std::f64::consts::PI / 5.0);
        let analytic = reduced_density_analytic(&state, &p);
        let oracle = reduced_density_oracle(&state, &p);
        assert!(analytic.max_abs_diff(&oracle).unwrap() < 1e-12);
    }

    #[test]
    fn analytic_trace_is_one_at_random_points() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..50 {
            let p = UnruhParams::new(rng.gen::<f64>() * FRAC_PI_4, rng.gen::<f64>()).unwrap();
            let state = BlochState::new(rng.gen::<f64>() * TAU, rng.gen::<f64>() * TAU);
            let rho = reduced_density_analytic(&state, &p);
            assert!((rho.trace().re - 1.0).abs() < 1e-12);
            assert!(rho.trace().im.abs() < 1e-15);
        }
    }

    #[test]
    fn inertial_single_mode_limit_recovers_input_state() {
        let p = UnruhParams::new(0.0, 0.0).unwrap();
        let state = BlochState::new(1.1, 2.4);
        let reduced = reduced_density_oracle(&state, &p);
        let particle = partial_trace_antiparticle(&reduced).unwrap();
        let (a0, a1) = state.amplitudes();
        assert!((particle.get(0, 0) - a0 * a0.conj()).norm() < 1e-14);
        assert!((particle.get(0, 1) - a0 * a1.conj()).norm() < 1e-14);
        assert!((particle.get(1, 0) - a1 * a0.conj()).norm() < 1e-14);
        assert!((particle.get(1, 1) - a1 * a1.conj()).norm() < 1e-14);
    }

    #[test]
    fn parameter_validation() {
        assert!(UnruhParams::new(-0.1, 0.0).is_err());
        assert!(UnruhParams::new(FRAC_PI_4 + 0.01, 0.0).is_err());
        assert!(UnruhParams::new(0.2, 1.2).is_err());
        assert!(UnruhParams::with_weights(0.2, 0.9, 0.6).is_err());
        assert!(UnruhParams::with_weights(0.2, 0.8, 0.6).is_ok());
    }

    #[test]
    fn bloch_angles_wrap() {
        let s = BlochState::new(-0.5, TAU + 1.0);
        assert!((s.theta() - (TAU - 0.5)).abs() < 1e-15);
        assert!((s.phi() - 1.0).abs() < 1e-15);
    }
}
