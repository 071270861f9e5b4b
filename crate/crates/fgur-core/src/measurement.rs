//! Projective measurements in the d = 2 mutually unbiased bases on the
//! particle sector, measurement probabilities, and the fine-grained
//! uncertainty left-hand side for a pair of outcomes.
//!
//! Measurements act on the particle qubit only: on the 4×4 wedge-I reduced
//! matrix the projector is tensored with the identity on the antiparticle
//! factor, while the 2×2 cavity-mode matrix is measured directly.

use num_complex::Complex64;
use std::f64::consts::FRAC_1_SQRT_2;

use crate::fock::DensityMatrix;
use crate::unruh::UnruhParams;
use crate::{Error, Result};

/// Tolerated deviation of a density-matrix trace from one.
pub const TRACE_TOLERANCE: f64 = 1e-8;

/// One of the three Pauli eigenbases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PauliBasis {
    X,
    Y,
    Z,
}

/// A measurement basis together with the outcome bit asked for.
///
/// Outcome 0 refers to |+⟩, (|0⟩ + i|1⟩)/√2 and |0⟩ for the X, Y and Z
/// bases respectively; outcome 1 to the orthogonal partner.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MeasurementSetting {
    basis: PauliBasis,
    outcome: u8,
}

impl MeasurementSetting {
    pub fn new(basis: PauliBasis, outcome: u8) -> Result<Self> {
        if outcome > 1 {
            return Err(Error::OutOfRange {
                name: "outcome",
                value: outcome as f64,
            });
        }
        Ok(MeasurementSetting { basis, outcome })
    }

    pub fn basis(&self) -> PauliBasis {
        self.basis
    }

    pub fn outcome(&self) -> u8 {
        self.outcome
    }

    /// The 2×2 projector onto the requested eigenstate.
    pub fn projector(&self) -> [[Complex64; 2]; 2] {
        let sign = if self.outcome == 0 { 1.0 } else { -1.0 };
        let half = Complex64::new(0.5, 0.0);
        match self.basis {
            PauliBasis::Z => {
                let mut p = [[Complex64::new(0.0, 0.0); 2]; 2];
                p[self.outcome as usize][self.outcome as usize] = Complex64::new(1.0, 0.0);
                p
            }
            PauliBasis::X => [[half, half * sign], [half * sign, half]],
            PauliBasis::Y => [
                [half, Complex64::new(0.0, -0.5 * sign)],
                [Complex64::new(0.0, 0.5 * sign), half],
            ],
        }
    }
}

/// Two measurement settings in distinct bases, one outcome each.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OutcomePair {
    first: MeasurementSetting,
    second: MeasurementSetting,
}

impl OutcomePair {
    pub fn new(first: MeasurementSetting, second: MeasurementSetting) -> Result<Self> {
        if first.basis() == second.basis() {
            return Err(Error::DuplicateBasis);
        }
        Ok(OutcomePair { first, second })
    }

    /// The canonical x/z pair with the given outcome bits.
    pub fn xz(x_outcome: u8, z_outcome: u8) -> Result<Self> {
        OutcomePair::new(
            MeasurementSetting::new(PauliBasis::X, x_outcome)?,
            MeasurementSetting::new(PauliBasis::Z, z_outcome)?,
        )
    }

    pub fn first(&self) -> MeasurementSetting {
        self.first
    }

    pub fn second(&self) -> MeasurementSetting {
        self.second
    }

    /// Outcome bit requested in the given basis, if that basis is part of
    /// the pair.
    pub fn outcome_for(&self, basis: PauliBasis) -> Option<u8> {
        if self.first.basis() == basis {
            Some(self.first.outcome())
        } else if self.second.basis() == basis {
            Some(self.second.outcome())
        } else {
            None
        }
    }

    /// True for the four pairs combining an X with a Z measurement.
    pub fn is_xz(&self) -> bool {
        self.outcome_for(PauliBasis::X).is_some() && self.outcome_for(PauliBasis::Z).is_some()
    }

    /// Short label such as "(0x,1z)"; generic pairs are labeled by basis.
    pub fn label(&self) -> String {
        if let (Some(x), Some(z)) = (
            self.outcome_for(PauliBasis::X),
            self.outcome_for(PauliBasis::Z),
        ) {
            format!("({x}x,{z}z)")
        } else {
            format!(
                "({}{:?},{}{:?})",
                self.first.outcome(),
                self.first.basis(),
                self.second.outcome(),
                self.second.basis()
            )
        }
    }
}

/// Probability of obtaining the setting's outcome on a reduced density
/// matrix.
///
/// Accepts the 4×4 wedge-I matrix (projector ⊗ identity on the
/// antiparticle factor) or a 2×2 single-qubit matrix. Rejects input whose
/// trace deviates from one by more than [`TRACE_TOLERANCE`].
pub fn probability(setting: &MeasurementSetting, rho: &DensityMatrix) -> Result<f64> {
    let trace = rho.trace();
    let deviation = (trace - Complex64::new(1.0, 0.0)).norm();
    if deviation > TRACE_TOLERANCE {
        return Err(Error::TraceDeviation(deviation));
    }
    let p = setting.projector();
    match rho.dim() {
        2 => {
            let mut sum = Complex64::new(0.0, 0.0);
            for (a, row) in p.iter().enumerate() {
                for (b, entry) in row.iter().enumerate() {
                    sum += entry * rho.get(b, a);
                }
            }
            Ok(sum.re)
        }
        4 => {
            // particle bit is the most significant index bit
            let mut sum = Complex64::new(0.0, 0.0);
            for (a, row) in p.iter().enumerate() {
                for (b, entry) in row.iter().enumerate() {
                    for n in 0..2 {
                        sum += entry * rho.get(b * 2 + n, a * 2 + n);
                    }
                }
            }
            Ok(sum.re)
        }
        d => Err(Error::DimensionMismatch {
            expected: 4,
            actual: d,
        }),
    }
}

/// Left-hand side of the fine-grained relation with equal measurement
/// weights: (1/2)[p(first) + p(second)].
pub fn fgur_lhs(pair: &OutcomePair, rho: &DensityMatrix) -> Result<f64> {
    fgur_lhs_weighted(pair, rho, 0.5)
}

/// Left-hand side with a generalized weight on the first setting:
/// w·p(first) + (1 − w)·p(second).
pub fn fgur_lhs_weighted(
    pair: &OutcomePair,
    rho: &DensityMatrix,
    weight_first: f64,
) -> Result<f64> {
    if !(0.0..=1.0).contains(&weight_first) {
        return Err(Error::OutOfRange {
            name: "weight_first",
            value: weight_first,
        });
    }
    let p1 = probability(&pair.first(), rho)?;
    let p2 = probability(&pair.second(), rho)?;
    Ok(weight_first * p1 + (1.0 - weight_first) * p2)
}

/// Fixed maximally-certain-state angles (θ, φ) at which the closed-form
/// bound for an x/z pair is attained in the inertial limit.
pub fn mcs_angles(pair: &OutcomePair) -> Result<(f64, f64)> {
    let x = pair.outcome_for(PauliBasis::X);
    let z = pair.outcome_for(PauliBasis::Z);
    match (x, z) {
        (Some(0), Some(0)) => Ok((std::f64::consts::FRAC_PI_4, 0.0)),
        (Some(0), Some(1)) => Ok((3.0 * std::f64::consts::FRAC_PI_4, 0.0)),
        (Some(1), Some(1)) => Ok((5.0 * std::f64::consts::FRAC_PI_4, 0.0)),
        (Some(1), Some(0)) => Ok((7.0 * std::f64::consts::FRAC_PI_4, 0.0)),
        _ => Err(Error::UnsupportedPair),
    }
}

/// Closed-form uncertainty bound for an x/z outcome pair under uniform
/// acceleration, i.e. the left-hand side evaluated at the pair's fixed
/// maximally-certain-state angles.
///
/// Pairs asking for the 0 outcome of σ_z share one bound,
/// ζ = (1/4)[c²(1 + q_L² + (√2/2)q_R²) + (√2/2)q_R c + 1],
/// and pairs asking for the 1 outcome share
/// ζ = (1/4)[(1 + (√2/2)c²)q_R² + (1 + q_L²)s² + (√2/2)q_R c + 1],
/// with c = cos r and s = sin r.
pub fn analytic_bound_uniform(pair: &OutcomePair, params: &UnruhParams) -> Result<f64> {
    let z = pair
        .outcome_for(PauliBasis::Z)
        .filter(|_| pair.is_xz())
        .ok_or(Error::UnsupportedPair)?;
    let c = params.cos_r();
    let s = params.sin_r();
    let (c2, s2) = (c * c, s * s);
    let qr = params.q_r();
    let ql = params.q_l();
    let bound = if z == 0 {
        0.25 * (c2 * (1.0 + ql * ql + FRAC_1_SQRT_2 * qr * qr) + FRAC_1_SQRT_2 * qr * c + 1.0)
    } else {
        0.25 * ((1.0 + FRAC_1_SQRT_2 * c2) * qr * qr
            + (1.0 + ql * ql) * s2
            + FRAC_1_SQRT_2 * qr * c
            + 1.0)
    };
    Ok(bound)
}
