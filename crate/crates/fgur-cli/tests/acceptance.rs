//! Acceptance suite: one test per criterion, each printing a pass line
//! with its measured numbers. Tolerances are pinned in the assertions.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4, PI, SQRT_2};
use std::time::Instant;

use num_complex::Complex64;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use fgur_cli::scan::{run_cavity_scan, run_unruh_scan, CavityScanSpec, UnruhScanSpec};
use fgur_cli::{run_oracle_check, ScanTable};
use fgur_core::cavity::{
    cavity_bound, cavity_bound_from, e1_phase, f_minus, f_plus, polylog, q_alpha, re_g,
    CavityParams, CoefficientSet,
};
use fgur_core::measurement::{analytic_bound_uniform, OutcomePair};
use fgur_core::optimizer::{maximize_cavity, maximize_uniform};
use fgur_core::unruh::UnruhParams;

/// 1/2 + 1/(2√2), the inertial bound shared by all four x/z pairs.
const INERTIAL_BOUND: f64 = 0.853_553_390_593_273_8;
/// ζ(5), used by the closed-form recomputations.
const ZETA_5: f64 = 1.036_927_755_143_37;

fn xz_pairs() -> [OutcomePair; 4] {
    [
        OutcomePair::xz(0, 0).unwrap(),
        OutcomePair::xz(1, 0).unwrap(),
        OutcomePair::xz(1, 1).unwrap(),
        OutcomePair::xz(0, 1).unwrap(),
    ]
}

fn column(table: &ScanTable, name: &str) -> usize {
    table.column_index(name).expect("known column")
}

#[test]
fn criterion_1_inertial_bound() {
    let params = UnruhParams::new(0.0, 0.0).unwrap();
    let start = Instant::now();
    let bounds: Vec<f64> = xz_pairs()
        .iter()
        .map(|pair| analytic_bound_uniform(pair, &params).unwrap())
        .collect();
    let elapsed = start.elapsed();
    for (pair, bound) in xz_pairs().iter().zip(&bounds) {
        assert!(
            (bound - INERTIAL_BOUND).abs() < 1e-12,
            "pair {} gave {bound}",
            pair.label()
        );
    }
    assert!(elapsed.as_secs_f64() < 1e-3, "took {elapsed:?}");
    println!(
        "criterion 1 pass: all four inertial bounds = {INERTIAL_BOUND} within 1e-12 ({elapsed:?})"
    );
}

#[test]
fn criterion_2_oracle_equivalence() {
    let start = Instant::now();
    let report = run_oracle_check(5, 1e-10).unwrap();
    let elapsed = start.elapsed();
    assert_eq!(report.grid_points, 625);
    assert!(
        report.passed(),
        "max deviation {:.3e} exceeds 1e-10",
        report.max_deviation()
    );
    assert!(elapsed.as_secs_f64() < 5.0, "took {elapsed:?}");
    println!(
        "criterion 2 pass: 5^4-grid max deviations: matrix {:.3e}, probabilities {:.3e}, bounds {:.3e} ({elapsed:?})",
        report.reduced_matrix.max, report.probabilities.max, report.bounds.max
    );
}

#[test]
fn criterion_3_bound_curves_over_acceleration() {
    let start = Instant::now();
    let right = run_unruh_scan(&UnruhScanSpec {
        steps: 200,
        q_l: 0.0,
        ..Default::default()
    })
    .unwrap();
    let left = run_unruh_scan(&UnruhScanSpec {
        steps: 200,
        q_l: 1.0,
        ..Default::default()
    })
    .unwrap();
    let elapsed = start.elapsed();

    let zeta_00 = column(&right, "zeta_00");
    let values_00: Vec<f64> = right.rows().iter().map(|row| row[zeta_00]).collect();
    assert!(
        values_00.windows(2).all(|w| w[1] < w[0]),
        "zeta_00 not strictly decreasing at q_L = 0"
    );
    // endpoint substitutions: c = 1 and c = 1/√2 in the closed forms
    let end_value = 0.25 * (0.5 * (1.0 + FRAC_1_SQRT_2) + FRAC_1_SQRT_2 / SQRT_2 + 1.0);
    assert!((values_00[0] - 0.853553).abs() < 1e-6);
    assert!((values_00[0] - INERTIAL_BOUND).abs() < 1e-12);
    assert!((values_00[199] - 0.588388).abs() < 1e-6);
    assert!((values_00[199] - end_value).abs() < 1e-12);

    let zeta_11 = column(&left, "zeta_11");
    let values_11: Vec<f64> = left.rows().iter().map(|row| row[zeta_11]).collect();
    assert!(
        values_11.windows(2).all(|w| w[1] > w[0]),
        "zeta_11 not strictly increasing at q_L = 1"
    );
    assert!((values_11[0] - 0.25).abs() < 1e-6);
    assert!((values_11[199] - 0.5).abs() < 1e-6);

    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!(
        "criterion 3 pass: zeta_00 falls {:.6} -> {:.6}, zeta_11 rises {:.6} -> {:.6} over 200 points ({elapsed:?})",
        values_00[0], values_00[199], values_11[0], values_11[199]
    );
}

#[test]
fn criterion_4_mub_distinguishability() {
    let pairs = xz_pairs();
    for ql in [0.0, 0.3, 0.6, 1.0] {
        for i in 1..=32 {
            let r = FRAC_PI_4 * i as f64 / 32.0;
            let params = UnruhParams::new(r, ql).unwrap();
            let bounds: Vec<f64> = pairs
                .iter()
                .map(|pair| analytic_bound_uniform(pair, &params).unwrap())
                .collect();
            // exact pair degeneracy within each family
            assert_eq!(bounds[0], bounds[1], "(0x,0z) vs (1x,0z) at r={r}, ql={ql}");
            assert_eq!(bounds[2], bounds[3], "(1x,1z) vs (0x,1z) at r={r}, ql={ql}");
        }
    }
    // the two families separate for every r > 0 when the right-moving
    // mode is pure; for mixed weights the two curves cross at the single
    // acceleration where (1 + q_L²)cos 2r = 1 − q_L², so distinguishability
    // is asserted away from that point
    for i in 1..=32 {
        let r = FRAC_PI_4 * i as f64 / 32.0;
        let params = UnruhParams::new(r, 0.0).unwrap();
        let b00 = analytic_bound_uniform(&pairs[0], &params).unwrap();
        let b11 = analytic_bound_uniform(&pairs[2], &params).unwrap();
        assert!(b00 != b11, "families coincide at r={r}, ql=0");
    }
    for ql in [0.3f64, 0.6, 1.0] {
        let crossing = 0.5 * ((1.0 - ql * ql) / (1.0 + ql * ql)).acos();
        for i in 1..=32 {
            let r = FRAC_PI_4 * i as f64 / 32.0;
            if (r - crossing).abs() < 0.02 {
                continue;
            }
            let params = UnruhParams::new(r, ql).unwrap();
            let b00 = analytic_bound_uniform(&pairs[0], &params).unwrap();
            let b11 = analytic_bound_uniform(&pairs[2], &params).unwrap();
            assert!(
                (b00 - b11).abs() > 1e-12,
                "families coincide at r={r}, ql={ql}"
            );
        }
    }
    println!(
        "criterion 4 pass: family degeneracy exact, families separated away from the single crossing per weight"
    );
}

#[test]
fn criterion_5_cavity_inertial_recovery_and_periodicity() {
    // the recovery hinges on these identities holding numerically
    let one = Complex64::new(1.0, 0.0);
    assert!((q_alpha(4, one).unwrap() - PI.powi(4) / 96.0).abs() < 1e-12);
    assert!((q_alpha(6, one).unwrap() - PI.powi(6) / 960.0).abs() < 1e-12);

    let pairs = xz_pairs();
    for u in [0.0, 1.0, 2.0, 3.0] {
        let params = CavityParams::new(0.1, 1, 0.0, u).unwrap();
        for pair in &pairs {
            let bound = cavity_bound(pair, &params).unwrap();
            assert!(
                (bound - INERTIAL_BOUND).abs() < 1e-10,
                "pair {} at u={u}: {bound}",
                pair.label()
            );
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(97);
    for _ in 0..20 {
        let u = rng.gen::<f64>() * 3.0;
        for pair in &pairs[..2] {
            let low = cavity_bound(pair, &CavityParams::new(0.1, 1, 0.0, u).unwrap()).unwrap();
            let high =
                cavity_bound(pair, &CavityParams::new(0.1, 1, 0.0, u + 1.0).unwrap()).unwrap();
            assert!((low - high).abs() < 1e-12, "period broken at u = {u}");
        }
    }
    println!(
        "criterion 5 pass: integer durations recover {INERTIAL_BOUND} within 1e-10; unit period within 1e-12"
    );
}

#[test]
fn criterion_6_cavity_midpoint_values() {
    let params = CavityParams::new(0.1, 1, 0.0, 0.5).unwrap();
    let pair_00 = OutcomePair::xz(0, 0).unwrap();
    let pair_11 = OutcomePair::xz(1, 1).unwrap();

    let start = Instant::now();
    let fp = f_plus(&params);
    let fm = f_minus(&params);
    let rg = re_g(&params);
    let coeffs = CoefficientSet {
        f_plus: fp,
        f_minus: fm,
        re_g: rg,
        e1: e1_phase(0.5),
    };
    let b00 = cavity_bound_from(&pair_00, &coeffs).unwrap();
    let b11 = cavity_bound_from(&pair_11, &coeffs).unwrap();
    let elapsed = start.elapsed();
    // the assembled bounds agree with the standalone entry point
    assert_eq!(b00, cavity_bound(&pair_00, &params).unwrap());
    assert_eq!(b11, cavity_bound(&pair_11, &params).unwrap());

    // independent recomputation from the closed-form Q values at β = −1:
    // Q₄(±1) = ±π⁴/96, Q₅(±1) = ±ζ(5)·31/32, Q₆(±1) = ±π⁶/960
    let h2 = 0.01;
    let fp_ref =
        4.0 * h2 / PI.powi(4) * (4.0 * (2.0 * PI.powi(6) / 960.0) + 2.0 * PI.powi(4) / 96.0);
    let fm_ref = 16.0 * h2 / PI.powi(4) * 2.0 * (2.0 * ZETA_5 * 31.0 / 32.0)
        + 4.0 * h2 / PI.powi(4) * 2.0 * 1.0;
    let rg_ref = 1.0
        - h2 * ((1.0 / 48.0 + PI * PI / 120.0)
            + 2.0 / PI.powi(4) * (4.0 * PI.powi(6) / 960.0 + PI.powi(4) / 96.0));
    let sq = FRAC_1_SQRT_2;
    let b00_ref = 0.25 * (2.0 + sq * (1.0 - fp_ref) + fm_ref + sq * rg_ref);
    let b11_ref = 0.25 * (2.0 + sq * (1.0 - fp_ref) - fm_ref + sq * rg_ref);

    for (name, got, reference, printed) in [
        ("F_plus", fp, fp_ref, 0.0041232),
        ("F_minus", fm, fm_ref, 0.007421),
        ("re_g", rg, rg_ref, 0.9979384),
        ("zeta_00", b00, b00_ref, 0.854315),
        ("zeta_11", b11, b11_ref, 0.850605),
    ] {
        assert!(
            (got - reference).abs() < 1e-5,
            "{name}: {got} vs recomputed {reference}"
        );
        assert!((got - printed).abs() < 1e-5, "{name}: {got} vs {printed}");
    }
    assert!(elapsed.as_secs_f64() < 0.010, "took {elapsed:?}");
    println!(
        "criterion 6 pass: F+ {fp:.7}, F- {fm:.6}, ReG {rg:.7}, bounds {b00:.6}/{b11:.6} ({elapsed:?})"
    );
}

#[test]
fn criterion_7_polylog_accuracy() {
    let one = Complex64::new(1.0, 0.0);
    let minus_one = Complex64::new(-1.0, 0.0);
    assert!((polylog(4, one).unwrap().re - PI.powi(4) / 90.0).abs() < 1e-12);
    assert!((polylog(5, one).unwrap().re - ZETA_5).abs() < 1e-12);
    assert!((polylog(6, one).unwrap().re - PI.powi(6) / 945.0).abs() < 1e-12);
    assert!((polylog(4, minus_one).unwrap().re + 7.0 * PI.powi(4) / 720.0).abs() < 1e-12);

    // reference: plain million-term summation, independent of the
    // production series (no cutoff, no compensation)
    let reference = |alpha: i32, z: Complex64| -> Complex64 {
        let mut sum = Complex64::new(0.0, 0.0);
        let mut power = Complex64::new(1.0, 0.0);
        for n in 1..=1_000_000u32 {
            power *= z;
            sum += power / (n as f64).powi(alpha);
        }
        sum
    };
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let mut worst = 0.0f64;
    for _ in 0..10 {
        let theta = rng.gen::<f64>() * 2.0 * PI;
        let z = Complex64::from_polar(1.0, theta);
        for alpha in [4u32, 5, 6] {
            let got = polylog(alpha, z).unwrap();
            let want = reference(alpha as i32, z);
            worst = worst.max((got - want).norm());
        }
    }
    assert!(worst < 1e-11, "worst deviation {worst:e}");
    println!(
        "criterion 7 pass: closed forms within 1e-12, unit-circle worst deviation {worst:.3e}"
    );
}

#[test]
fn criterion_8_optimizer_sanity() {
    let pair = OutcomePair::xz(0, 0).unwrap();
    let rest = UnruhParams::new(0.0, 0.0).unwrap();
    let result = maximize_uniform(&pair, &rest, 128).unwrap();
    assert!((result.theta_star - FRAC_PI_4).abs() < 1e-6);
    assert!(result.phi_star.min(2.0 * PI - result.phi_star) < 1e-6);
    assert!(result.gap.abs() < 1e-10);

    let doubled = maximize_uniform(&pair, &rest, 256).unwrap();
    assert!((doubled.zeta_true - result.zeta_true).abs() < 1e-8);
    let accelerated = UnruhParams::new(0.5, 0.4).unwrap();
    let lo = maximize_uniform(&pair, &accelerated, 128).unwrap();
    let hi = maximize_uniform(&pair, &accelerated, 256).unwrap();
    assert!((lo.zeta_true - hi.zeta_true).abs() < 1e-8);

    let mut rng = ChaCha8Rng::seed_from_u64(103);
    let pairs = xz_pairs();
    let mut worst_gap = f64::INFINITY;
    for i in 0..100 {
        let params = UnruhParams::new(rng.gen::<f64>() * FRAC_PI_4, rng.gen::<f64>()).unwrap();
        let res = maximize_uniform(&pairs[i % 4], &params, 64).unwrap();
        worst_gap = worst_gap.min(res.gap);
        assert!(res.gap >= -1e-12, "uniform gap {} at point {i}", res.gap);
    }
    for i in 0..100 {
        let params = CavityParams::new(
            0.01 + 0.15 * rng.gen::<f64>(),
            1 + rng.gen_range(0..3),
            rng.gen::<f64>() * 0.9,
            rng.gen::<f64>() * 2.0,
        )
        .unwrap();
        let res = maximize_cavity(&pairs[i % 4], &params, 64).unwrap();
        worst_gap = worst_gap.min(res.gap);
        assert!(res.gap >= -1e-12, "cavity gap {} at point {i}", res.gap);
    }
    println!(
        "criterion 8 pass: inertial MCS at (pi/4, 0), grid-doubling stable, min gap {worst_gap:.3e} over 200 random points"
    );
}

#[test]
fn criterion_9_fixed_angle_drift_diagnostic() {
    // every closed form is reproduced exactly elsewhere in this suite;
    // the one unresolved claim is that the maximally certain state stays
    // at the fixed angles under acceleration. Measured, not asserted.
    let pair = OutcomePair::xz(0, 0).unwrap();
    println!("criterion 9 diagnostic: drift of the true optimum from the fixed angles");
    for (r, ql) in [(0.2, 0.0), (0.4, 0.0), (FRAC_PI_4, 0.0), (0.4, 0.6)] {
        let params = UnruhParams::new(r, ql).unwrap();
        let result = maximize_uniform(&pair, &params, 128).unwrap();
        assert!(result.gap >= -1e-12 && result.gap.is_finite());
        println!(
            "  r={r:.4} ql={ql:.1}: |theta*-pi/4| = {:.6}, gap = {:.3e}",
            (result.theta_star - FRAC_PI_4).abs(),
            result.gap
        );
    }
    let cavity = CavityParams::new(0.1, 1, 0.0, 0.5).unwrap();
    let result = maximize_cavity(&pair, &cavity, 128).unwrap();
    assert!(result.gap >= -1e-12 && result.gap.is_finite());
    println!(
        "  cavity u=0.5: |theta*-pi/4| = {:.6}, gap = {:.3e}",
        (result.theta_star - FRAC_PI_4).abs(),
        result.gap
    );
    println!("criterion 9 pass: diagnostic emitted (fixed-angle claim measured, not asserted)");
}

#[test]
fn cavity_scan_matches_reference_rows() {
    // supporting check for the duration scan used in the figures: the
    // 0.25/1.25 rows agree to machine precision and integer rows recover
    // the inertial bound
    let table = run_cavity_scan(&CavityScanSpec {
        steps: 9,
        ..Default::default()
    })
    .unwrap();
    let zeta_00 = column(&table, "zeta_00");
    let zeta_11 = column(&table, "zeta_11");
    let rows = table.rows();
    assert!((rows[0][zeta_00] - INERTIAL_BOUND).abs() < 1e-10);
    assert!((rows[4][zeta_00] - INERTIAL_BOUND).abs() < 1e-10);
    assert!((rows[8][zeta_00] - INERTIAL_BOUND).abs() < 1e-10);
    assert!((rows[1][zeta_00] - rows[5][zeta_00]).abs() < 1e-12);
    assert!((rows[1][zeta_11] - rows[5][zeta_11]).abs() < 1e-12);
}
