//! Brute-force cross-check of the closed-form results against the Fock
//! pipeline: reduced matrices, measurement probabilities and uncertainty
//! bounds over a configurable parameter grid.

use std::f64::consts::{FRAC_PI_4, PI};

use fgur_core::fock::DensityMatrix;
use fgur_core::measurement::{
    analytic_bound_uniform, fgur_lhs, mcs_angles, probability, MeasurementSetting, OutcomePair,
    PauliBasis,
};
use fgur_core::unruh::{reduced_density_analytic, reduced_density_oracle, BlochState, UnruhParams};

use crate::CliError;

/// Largest deviation seen in one category, with the parameter point where
/// it occurred as (θ, φ, r, q_L).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeviationRecord {
    pub max: f64,
    pub at: [f64; 4],
}

impl DeviationRecord {
    fn new() -> Self {
        DeviationRecord {
            max: 0.0,
            at: [0.0; 4],
        }
    }

    fn update(&mut self, deviation: f64, at: [f64; 4]) {
        if deviation > self.max {
            self.max = deviation;
            self.at = at;
        }
    }
}

/// Result of the cross-check: per-category maximum deviations.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleReport {
    pub tolerance: f64,
    pub grid_points: usize,
    /// Reduced density matrix, entrywise.
    pub reduced_matrix: DeviationRecord,
    /// The four closed-form x/z outcome probabilities.
    pub probabilities: DeviationRecord,
    /// The closed-form bounds against the pipeline at the fixed angles.
    pub bounds: DeviationRecord,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.max_deviation() <= self.tolerance
    }

    pub fn max_deviation(&self) -> f64 {
        self.reduced_matrix
            .max
            .max(self.probabilities.max)
            .max(self.bounds.max)
    }

    /// Human-readable report, one line per category plus a verdict.
    pub fn render(&self) -> String {
        let line = |name: &str, rec: &DeviationRecord| {
            format!(
                "  {name:<32} max deviation {:.3e} at (theta={:.6}, phi={:.6}, r={:.6}, ql={:.6})\n",
                rec.max, rec.at[0], rec.at[1], rec.at[2], rec.at[3]
            )
        };
        let mut out = format!(
            "brute-force cross-check over {} grid points (tolerance {:.1e})\n",
            self.grid_points, self.tolerance
        );
        out.push_str(&line(
            "reduced density matrix entries",
            &self.reduced_matrix,
        ));
        out.push_str(&line("measurement probabilities", &self.probabilities));
        out.push_str(&line("uncertainty bounds", &self.bounds));
        if self.passed() {
            out.push_str("PASS: closed forms match the Fock pipeline\n");
        } else {
            out.push_str(&format!(
                "FAIL: max deviation {:.3e} exceeds tolerance {:.1e}\n",
                self.max_deviation(),
                self.tolerance
            ));
        }
        out
    }
}

/// Runs the cross-check with the production Fock pipeline.
pub fn run_oracle_check(points_per_axis: usize, tolerance: f64) -> Result<OracleReport, CliError> {
    run_oracle_check_with(&reduced_density_oracle, points_per_axis, tolerance)
}

/// Runs the cross-check against a caller-supplied reduced-matrix route.
///
/// Swapping in a deliberately corrupted route must make the check fail;
/// that negative control keeps the comparison honest.
pub fn run_oracle_check_with<F>(
    oracle: &F,
    points_per_axis: usize,
    tolerance: f64,
) -> Result<OracleReport, CliError>
where
    F: Fn(&BlochState, &UnruhParams) -> DensityMatrix,
{
    if points_per_axis < 2 {
        return Err(CliError::Usage(format!(
            "the cross-check grid needs at least 2 points per axis, got {points_per_axis}"
        )));
    }
    if tolerance.is_nan() || tolerance <= 0.0 {
        return Err(CliError::Usage(format!(
            "tolerance must be positive, got {tolerance}"
        )));
    }

    let n = points_per_axis;
    // exact endpoints: the naive formula can overshoot by an ulp
    let axis = |i: usize, max: f64| {
        if i + 1 == n {
            max
        } else {
            max * i as f64 / (n - 1) as f64
        }
    };
    let settings: Vec<MeasurementSetting> = [
        (PauliBasis::Z, 0),
        (PauliBasis::Z, 1),
        (PauliBasis::X, 0),
        (PauliBasis::X, 1),
    ]
    .iter()
    .map(|&(b, o)| MeasurementSetting::new(b, o).expect("valid setting"))
    .collect();

    let mut reduced_matrix = DeviationRecord::new();
    let mut probabilities = DeviationRecord::new();
    let mut bounds = DeviationRecord::new();

    for it in 0..n {
        let theta = axis(it, 2.0 * PI);
        for ip in 0..n {
            let phi = axis(ip, 2.0 * PI);
            for ir in 0..n {
                let r = axis(ir, FRAC_PI_4);
                for iq in 0..n {
                    let q_l = axis(iq, 1.0);
                    let at = [theta, phi, r, q_l];
                    let state = BlochState::new(theta, phi);
                    let params = UnruhParams::new(r, q_l)?;
                    let pipeline = oracle(&state, &params);
                    let analytic = reduced_density_analytic(&state, &params);
                    reduced_matrix.update(analytic.max_abs_diff(&pipeline)?, at);

                    for setting in &settings {
                        let from_pipeline = probability(setting, &pipeline)?;
                        let closed = closed_form_probability(setting, &state, &params);
                        probabilities.update((from_pipeline - closed).abs(), at);
                    }
                }
            }
        }
    }

    // bounds depend on (r, q_L) only; the pipeline side evaluates the
    // left-hand side on the oracle matrix at the fixed angles
    for ir in 0..n {
        let r = axis(ir, FRAC_PI_4);
        for iq in 0..n {
            let q_l = axis(iq, 1.0);
            let params = UnruhParams::new(r, q_l)?;
            for (x, z) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                let pair = OutcomePair::xz(x, z)?;
                let (theta, phi) = mcs_angles(&pair)?;
                let rho = oracle(&BlochState::new(theta, phi), &params);
                let lhs = fgur_lhs(&pair, &rho)?;
                let closed = analytic_bound_uniform(&pair, &params)?;
                bounds.update((lhs - closed).abs(), [theta, phi, r, q_l]);
            }
        }
    }

    Ok(OracleReport {
        tolerance,
        grid_points: n * n * n * n,
        reduced_matrix,
        probabilities,
        bounds,
    })
}

/// The printed closed-form outcome probabilities for the x/z settings.
fn closed_form_probability(
    setting: &MeasurementSetting,
    state: &BlochState,
    params: &UnruhParams,
) -> f64 {
    let (c, s) = (params.cos_r(), params.sin_r());
    let (q_r, q_l) = (params.q_r(), params.q_l());
    let half = 0.5 * state.theta();
    let (kappa2, sigma2) = (half.cos().powi(2), half.sin().powi(2));
    let cross = half.cos() * half.sin() * state.phi().cos();
    match (setting.basis(), setting.outcome()) {
        (PauliBasis::Z, 0) => c * c * (kappa2 + sigma2 * q_l * q_l),
        (PauliBasis::Z, _) => kappa2 * s * s + sigma2 * (q_r * q_r + q_l * q_l * s * s),
        (PauliBasis::X, 0) => 0.5 + cross * q_r * c,
        (PauliBasis::X, _) => 0.5 - cross * q_r * c,
        (PauliBasis::Y, _) => unreachable!("cross-check uses x/z settings only"),
    }
}
