//! Grid-plus-refinement search for the maximally certain state: the pure
//! qubit input maximizing the fine-grained left-hand side.
//!
//! The objective is affine in the density matrix, so its maximum over the
//! convex set of all states is attained at a pure state and the search
//! space is the two-angle Bloch sphere. A coarse (θ, φ) grid is followed
//! by coordinate-wise golden-section refinement; a refined coordinate is
//! accepted only when it strictly improves the objective, so exact grid
//! maxima (and flat directions) are kept as-is. Ties on the grid are
//! broken toward the smallest θ, then the smallest φ, making results
//! deterministic and independent of evaluation order.
//!
//! The two-angle chart double-covers the sphere: (θ, φ) and
//! (2π − θ, φ + π) label the same ray, so every maximum appears twice.
//! Results are reported in the representative whose azimuth lies closest
//! to zero, matching the conventional labeling of the maximally certain
//! states.

use crate::cavity::{
    cavity_bound_from, cavity_reduced_density_from, CavityParams, CoefficientSet, FMinusPrefactor,
};
use crate::measurement::{analytic_bound_uniform, fgur_lhs, OutcomePair};
use crate::unruh::{reduced_density_analytic, BlochState, UnruhParams};
use crate::{Error, Result};

const TAU: f64 = 2.0 * std::f64::consts::PI;
/// Smallest accepted grid resolution per angle.
pub const MIN_GRID_N: usize = 64;
/// Default grid resolution per angle.
pub const DEFAULT_GRID_N: usize = 256;
/// Golden-section interval tolerance in radians.
const GOLDEN_X_TOL: f64 = 1e-12;
/// Objective improvement below which refinement sweeps stop.
const SWEEP_TOL: f64 = 1e-13;

/// Outcome of a maximally-certain-state search for an x/z pair.
///
/// `zeta_fixed_angles` is the closed-form bound, i.e. the objective at the
/// fixed inertial MCS angles; `zeta_true` is the searched maximum. Since
/// the fixed angles are one admissible input, `gap ≥ −1e-12` always; a
/// positive gap measures how far the true optimum drifts away from the
/// fixed angles under acceleration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McsResult {
    pub theta_star: f64,
    pub phi_star: f64,
    pub zeta_true: f64,
    pub zeta_fixed_angles: f64,
    pub gap: f64,
}

/// Maximum of the left-hand side for an arbitrary pair of settings (no
/// closed-form reference attached).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchResult {
    pub theta_star: f64,
    pub phi_star: f64,
    pub zeta: f64,
}

fn validate_grid(grid_n: usize) -> Result<()> {
    if grid_n < MIN_GRID_N {
        return Err(Error::OutOfRange {
            name: "grid_n",
            value: grid_n as f64,
        });
    }
    Ok(())
}

/// Picks the representative of the ray {(θ, φ), (2π − θ, φ + π)} whose
/// azimuth is closest to zero; residual ties go to the smaller azimuth,
/// then the smaller polar angle.
fn canonical_ray(theta: f64, phi: f64) -> (f64, f64) {
    let t1 = theta.rem_euclid(TAU);
    let p1 = phi.rem_euclid(TAU);
    let t2 = (TAU - t1).rem_euclid(TAU);
    let p2 = (p1 + std::f64::consts::PI).rem_euclid(TAU);
    let azimuth_dist = |p: f64| p.min(TAU - p);
    let twin_wins = azimuth_dist(p2) < azimuth_dist(p1)
        || (azimuth_dist(p2) == azimuth_dist(p1) && (p2, t2) < (p1, t1));
    if twin_wins {
        (t2, p2)
    } else {
        (t1, p1)
    }
}

fn golden_max<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while b - a > GOLDEN_X_TOL {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    0.5 * (a + b)
}

/// Coarse grid argmax over [0, 2π)² followed by coordinate-wise
/// golden-section refinement. Returns (θ*, φ*, maximum).
fn grid_refine_max<F: Fn(f64, f64) -> f64>(f: &F, grid_n: usize) -> (f64, f64, f64) {
    let step = TAU / grid_n as f64;
    let mut best = f64::NEG_INFINITY;
    let mut theta = 0.0;
    let mut phi = 0.0;
    for i in 0..grid_n {
        let t = i as f64 * step;
        for j in 0..grid_n {
            let p = j as f64 * step;
            let v = f(t, p);
            if v > best {
                best = v;
                theta = t;
                phi = p;
            }
        }
    }
    for _ in 0..50 {
        let before = best;
        let cand = golden_max(|t| f(t, phi), theta - step, theta + step);
        let v = f(cand, phi);
        if v > best {
            theta = cand;
            best = v;
        }
        let cand = golden_max(|p| f(theta, p), phi - step, phi + step);
        let v = f(theta, cand);
        if v > best {
            phi = cand;
            best = v;
        }
        if best - before < SWEEP_TOL {
            break;
        }
    }
    let (theta, phi) = canonical_ray(theta, phi);
    (theta, phi, best)
}

/// Maximizes the left-hand side over all pure states for an arbitrary
/// pair of settings under uniform acceleration.
pub fn search_uniform(
    pair: &OutcomePair,
    params: &UnruhParams,
    grid_n: usize,
) -> Result<SearchResult> {
    validate_grid(grid_n)?;
    let objective = |theta: f64, phi: f64| {
        let rho = reduced_density_analytic(&BlochState::new(theta, phi), params);
        fgur_lhs(pair, &rho).expect("reduced matrix has unit trace by construction")
    };
    let (theta_star, phi_star, zeta) = grid_refine_max(&objective, grid_n);
    Ok(SearchResult {
        theta_star,
        phi_star,
        zeta,
    })
}

/// Finds the maximally certain state for an x/z pair under uniform
/// acceleration and compares the maximum with the closed-form bound.
pub fn maximize_uniform(
    pair: &OutcomePair,
    params: &UnruhParams,
    grid_n: usize,
) -> Result<McsResult> {
    let zeta_fixed_angles = analytic_bound_uniform(pair, params)?;
    let search = search_uniform(pair, params, grid_n)?;
    Ok(McsResult {
        theta_star: search.theta_star,
        phi_star: search.phi_star,
        zeta_true: search.zeta,
        zeta_fixed_angles,
        gap: search.zeta - zeta_fixed_angles,
    })
}

/// Finds the maximally certain state for an x/z pair inside the cavity.
///
/// Note the cavity coherence enters through its real part only, so the
/// φ-dependence of the objective away from φ = 0 is modeled with a real
/// coherence coefficient.
pub fn maximize_cavity(
    pair: &OutcomePair,
    params: &CavityParams,
    grid_n: usize,
) -> Result<McsResult> {
    maximize_cavity_with(pair, params, FMinusPrefactor::Sixteen, grid_n)
}

/// [`maximize_cavity`] with a selectable F₋ prefactor.
pub fn maximize_cavity_with(
    pair: &OutcomePair,
    params: &CavityParams,
    prefactor: FMinusPrefactor,
    grid_n: usize,
) -> Result<McsResult> {
    validate_grid(grid_n)?;
    let coeffs = CoefficientSet::compute_with(params, prefactor);
    let zeta_fixed_angles = cavity_bound_from(pair, &coeffs)?;
    let objective = |theta: f64, phi: f64| {
        let rho = cavity_reduced_density_from(&coeffs, &BlochState::new(theta, phi));
        fgur_lhs(pair, &rho).expect("reduced matrix has unit trace by construction")
    };
    let (theta_star, phi_star, zeta_true) = grid_refine_max(&objective, grid_n);
    Ok(McsResult {
        theta_star,
        phi_star,
        zeta_true,
        zeta_fixed_angles,
        gap: zeta_true - zeta_fixed_angles,
    })
}
