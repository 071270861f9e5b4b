//! Parameter scans over the acceleration parameter (uniform case) and the
//! acceleration duration (cavity case).

use std::f64::consts::FRAC_PI_4;

use fgur_core::cavity::{cavity_bound_with, CavityParams, FMinusPrefactor};
use fgur_core::measurement::{analytic_bound_uniform, OutcomePair};
use fgur_core::optimizer::maximize_uniform;
use fgur_core::unruh::UnruhParams;

use crate::output::ScanTable;
use crate::CliError;

/// Column layout of a plain acceleration scan.
pub const UNRUH_COLUMNS: [&str; 4] = ["r", "ql", "zeta_00", "zeta_11"];
/// Column layout of an acceleration scan with optimizer diagnostics.
pub const UNRUH_MCS_COLUMNS: [&str; 8] = [
    "r",
    "ql",
    "zeta_00",
    "zeta_11",
    "zeta_true_00",
    "zeta_true_11",
    "theta_star_00",
    "theta_star_11",
];
/// Column layout of a duration scan.
pub const CAVITY_COLUMNS: [&str; 6] = ["u", "h", "k", "s", "zeta_00", "zeta_11"];

/// Sweep of the acceleration parameter at one fixed Unruh-mode weight.
#[derive(Debug, Clone, PartialEq)]
pub struct UnruhScanSpec {
    pub r_min: f64,
    pub r_max: f64,
    pub steps: usize,
    pub q_l: f64,
    /// When set, the true-maximum columns are filled using a grid of this
    /// resolution per angle.
    pub mcs_grid_n: Option<usize>,
}

impl Default for UnruhScanSpec {
    fn default() -> Self {
        UnruhScanSpec {
            r_min: 0.0,
            r_max: FRAC_PI_4,
            steps: 200,
            q_l: 0.0,
            mcs_grid_n: None,
        }
    }
}

/// Sweep of the dimensionless duration at fixed cavity parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct CavityScanSpec {
    pub u_min: f64,
    pub u_max: f64,
    pub steps: usize,
    pub h: f64,
    pub k: u32,
    pub s: f64,
    pub prefactor: FMinusPrefactor,
}

impl Default for CavityScanSpec {
    fn default() -> Self {
        CavityScanSpec {
            u_min: 0.0,
            u_max: 2.0,
            steps: 400,
            h: 0.1,
            k: 1,
            s: 0.0,
            prefactor: FMinusPrefactor::Sixteen,
        }
    }
}

fn check_steps(steps: usize) -> Result<(), CliError> {
    if steps < 2 {
        return Err(CliError::Usage(format!(
            "a scan needs at least 2 steps, got {steps}"
        )));
    }
    Ok(())
}

/// Evenly spaced point with exact endpoints (the naive formula can
/// overshoot `max` by an ulp and fail range validation).
fn linspace(min: f64, max: f64, steps: usize, i: usize) -> f64 {
    if i + 1 == steps {
        max
    } else {
        min + (max - min) * i as f64 / (steps - 1) as f64
    }
}

/// Runs an acceleration scan, one row per r in ascending order.
pub fn run_unruh_scan(spec: &UnruhScanSpec) -> Result<ScanTable, CliError> {
    check_steps(spec.steps)?;
    if !(0.0..=FRAC_PI_4).contains(&spec.r_min) || !(0.0..=FRAC_PI_4).contains(&spec.r_max) {
        return Err(CliError::Usage(format!(
            "r range [{}, {}] must lie within [0, {FRAC_PI_4}]",
            spec.r_min, spec.r_max
        )));
    }
    if spec.r_min >= spec.r_max {
        return Err(CliError::Usage("r-min must be below r-max".into()));
    }
    let pair_00 = OutcomePair::xz(0, 0).expect("valid pair");
    let pair_11 = OutcomePair::xz(1, 1).expect("valid pair");
    let mut table = match spec.mcs_grid_n {
        Some(_) => ScanTable::new(&UNRUH_MCS_COLUMNS),
        None => ScanTable::new(&UNRUH_COLUMNS),
    };
    for i in 0..spec.steps {
        let r = linspace(spec.r_min, spec.r_max, spec.steps, i);
        let params = UnruhParams::new(r, spec.q_l)?;
        let zeta_00 = analytic_bound_uniform(&pair_00, &params)?;
        let zeta_11 = analytic_bound_uniform(&pair_11, &params)?;
        match spec.mcs_grid_n {
            Some(grid_n) => {
                let mcs_00 = maximize_uniform(&pair_00, &params, grid_n)?;
                let mcs_11 = maximize_uniform(&pair_11, &params, grid_n)?;
                table.push_row(vec![
                    r,
                    spec.q_l,
                    zeta_00,
                    zeta_11,
                    mcs_00.zeta_true,
                    mcs_11.zeta_true,
                    mcs_00.theta_star,
                    mcs_11.theta_star,
                ]);
            }
            None => table.push_row(vec![r, spec.q_l, zeta_00, zeta_11]),
        }
    }
    Ok(table)
}

/// Runs a duration scan, one row per u in ascending order.
pub fn run_cavity_scan(spec: &CavityScanSpec) -> Result<ScanTable, CliError> {
    check_steps(spec.steps)?;
    if spec.u_min < 0.0 || spec.u_min >= spec.u_max {
        return Err(CliError::Usage(
            "the u range needs 0 <= u-min < u-max".into(),
        ));
    }
    let pair_00 = OutcomePair::xz(0, 0).expect("valid pair");
    let pair_11 = OutcomePair::xz(1, 1).expect("valid pair");
    let mut table = ScanTable::new(&CAVITY_COLUMNS);
    for i in 0..spec.steps {
        let u = linspace(spec.u_min, spec.u_max, spec.steps, i);
        let params = CavityParams::new(spec.h, spec.k, spec.s, u)?;
        let zeta_00 = cavity_bound_with(&pair_00, &params, spec.prefactor)?;
        let zeta_11 = cavity_bound_with(&pair_11, &params, spec.prefactor)?;
        table.push_row(vec![u, spec.h, spec.k as f64, spec.s, zeta_00, zeta_11]);
    }
    Ok(table)
}
