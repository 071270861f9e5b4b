//! Command-line front end: parameter scans, maximally-certain-state
//! reports and the brute-force oracle cross-check.

use std::f64::consts::FRAC_PI_4;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use fgur_cli::output::{write_svg, PlotSpec, ScanTable};
use fgur_cli::scan::{run_cavity_scan, run_unruh_scan, CavityScanSpec, UnruhScanSpec};
use fgur_cli::{run_oracle_check, CliError, EXIT_USAGE};
use fgur_core::cavity::{
    cavity_reduced_density_from, populations_physical, CavityParams, CoefficientSet,
    FMinusPrefactor,
};
use fgur_core::measurement::{mcs_angles, OutcomePair, PauliBasis};
use fgur_core::optimizer::{maximize_cavity_with, maximize_uniform, McsResult};
use fgur_core::unruh::{BlochState, UnruhParams};

#[derive(Parser)]
#[command(
    name = "fgur",
    version,
    about = "Fine-grained uncertainty bounds for accelerated observers and rigid cavities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep the acceleration parameter r and emit both bound families
    UnruhScan(UnruhScanArgs),
    /// Sweep the dimensionless duration u and emit both cavity bounds
    CavityScan(CavityScanArgs),
    /// Search the Bloch sphere for the maximally certain state
    Mcs(McsArgs),
    /// Cross-check closed forms against the brute-force Fock pipeline
    OracleCheck(OracleCheckArgs),
}

#[derive(Args)]
struct UnruhScanArgs {
    /// Lower end of the r sweep (radians)
    #[arg(long, default_value_t = 0.0)]
    r_min: f64,
    /// Upper end of the r sweep (radians, at most pi/4)
    #[arg(long, default_value_t = FRAC_PI_4)]
    r_max: f64,
    /// Number of scan points
    #[arg(long, default_value_t = 200)]
    steps: usize,
    /// Unruh-mode weights q_L, comma separated; one curve family each
    #[arg(long, value_delimiter = ',', default_value = "0")]
    ql: Vec<f64>,
    /// Also search the true maximum per row (adds four columns)
    #[arg(long)]
    with_mcs: bool,
    /// Grid resolution per angle for --with-mcs
    #[arg(long, default_value_t = 256)]
    grid_n: usize,
    /// CSV output path (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write an SVG line plot
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct CavityScanArgs {
    /// Lower end of the u sweep
    #[arg(long, default_value_t = 0.0)]
    u_min: f64,
    /// Upper end of the u sweep
    #[arg(long, default_value_t = 2.0)]
    u_max: f64,
    /// Number of scan points
    #[arg(long, default_value_t = 400)]
    steps: usize,
    /// Dimensionless acceleration
    #[arg(long, default_value_t = 0.1)]
    h: f64,
    /// Observed mode number
    #[arg(long, default_value_t = 1)]
    k: u32,
    /// Self-adjoint-extension parameters, comma separated; one curve
    /// family each
    #[arg(long, value_delimiter = ',', default_value = "0")]
    s: Vec<f64>,
    /// Leading prefactor of the F-minus coefficient (16 as printed, 8 for
    /// sensitivity analysis)
    #[arg(long, default_value_t = 16)]
    f_minus_prefactor: u8,
    /// CSV output path (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write an SVG line plot
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Args)]
struct McsArgs {
    /// Outcome pair: first bit for the x outcome, second for the z
    /// outcome
    #[arg(long, default_value = "00", value_parser = ["00", "01", "10", "11"])]
    pair: String,
    /// Acceleration parameter r (uniform scenario)
    #[arg(long, default_value_t = 0.0)]
    r: f64,
    /// Unruh-mode weight q_L (uniform scenario)
    #[arg(long, default_value_t = 0.0)]
    ql: f64,
    /// Optimize inside the cavity instead of the uniform scenario
    #[arg(long)]
    cavity: bool,
    /// Dimensionless acceleration (cavity)
    #[arg(long, default_value_t = 0.1)]
    h: f64,
    /// Observed mode number (cavity)
    #[arg(long, default_value_t = 1)]
    k: u32,
    /// Self-adjoint-extension parameter (cavity)
    #[arg(long, default_value_t = 0.0)]
    s: f64,
    /// Dimensionless duration (cavity)
    #[arg(long, default_value_t = 0.5)]
    u: f64,
    /// Leading prefactor of the F-minus coefficient
    #[arg(long, default_value_t = 16)]
    f_minus_prefactor: u8,
    /// Grid resolution per angle
    #[arg(long, default_value_t = 256)]
    grid_n: usize,
    /// Also write the result as a one-row CSV
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OracleCheckArgs {
    /// Grid points per parameter axis
    #[arg(long, default_value_t = 5)]
    grid_points: usize,
    /// Largest tolerated deviation
    #[arg(long, default_value_t = 1e-10)]
    tolerance: f64,
}

fn parse_prefactor(value: u8) -> Result<FMinusPrefactor, CliError> {
    match value {
        16 => Ok(FMinusPrefactor::Sixteen),
        8 => Ok(FMinusPrefactor::Eight),
        other => Err(CliError::Usage(format!(
            "--f-minus-prefactor must be 16 or 8, got {other}"
        ))),
    }
}

fn parse_pair(label: &str) -> Result<OutcomePair, CliError> {
    let bit = |c: char| -> Result<u8, CliError> {
        match c {
            '0' => Ok(0),
            '1' => Ok(1),
            _ => Err(CliError::Usage(format!("invalid pair label `{label}`"))),
        }
    };
    let mut chars = label.chars();
    match (chars.next(), chars.next(), chars.next()) {
        (Some(x), Some(z), None) => Ok(OutcomePair::xz(bit(x)?, bit(z)?)?),
        _ => Err(CliError::Usage(format!("invalid pair label `{label}`"))),
    }
}

fn emit_table(
    table: &ScanTable,
    out: Option<&PathBuf>,
    svg: Option<&PathBuf>,
    plot: &PlotSpec,
) -> Result<(), CliError> {
    match out {
        Some(path) => {
            table.write_csv(path)?;
            eprintln!("wrote {} rows to {}", table.rows().len(), path.display());
        }
        None => print!("{}", table.to_csv()),
    }
    if let Some(path) = svg {
        write_svg(table, plot, path)?;
        eprintln!("wrote plot to {}", path.display());
    }
    Ok(())
}

fn cmd_unruh_scan(args: &UnruhScanArgs) -> Result<(), CliError> {
    if args.ql.is_empty() {
        return Err(CliError::Usage("--ql needs at least one value".into()));
    }
    let mut combined: Option<ScanTable> = None;
    for &q_l in &args.ql {
        let spec = UnruhScanSpec {
            r_min: args.r_min,
            r_max: args.r_max,
            steps: args.steps,
            q_l,
            mcs_grid_n: args.with_mcs.then_some(args.grid_n),
        };
        let table = run_unruh_scan(&spec)?;
        match combined.as_mut() {
            Some(all) => all.extend(table),
            None => combined = Some(table),
        }
    }
    let table = combined.expect("at least one ql value");
    let plot = PlotSpec {
        x_col: "r",
        y_cols: vec!["zeta_00", "zeta_11"],
        group_col: if args.ql.len() > 1 { Some("ql") } else { None },
        title: "uncertainty bounds vs acceleration parameter",
        y_label: "zeta",
    };
    emit_table(&table, args.out.as_ref(), args.svg.as_ref(), &plot)
}

fn cmd_cavity_scan(args: &CavityScanArgs) -> Result<(), CliError> {
    if args.s.is_empty() {
        return Err(CliError::Usage("--s needs at least one value".into()));
    }
    let prefactor = parse_prefactor(args.f_minus_prefactor)?;
    let mut combined: Option<ScanTable> = None;
    for &s in &args.s {
        if let Ok(params) = CavityParams::new(args.h, args.k, s, args.u_min.max(0.0)) {
            if let Some(warning) = params.perturbative_warning() {
                eprintln!("warning: {warning}");
            }
        }
        let spec = CavityScanSpec {
            u_min: args.u_min,
            u_max: args.u_max,
            steps: args.steps,
            h: args.h,
            k: args.k,
            s,
            prefactor,
        };
        let table = run_cavity_scan(&spec)?;
        match combined.as_mut() {
            Some(all) => all.extend(table),
            None => combined = Some(table),
        }
    }
    let table = combined.expect("at least one s value");
    let zeta_cols = [
        table.column_index("zeta_00").expect("known column"),
        table.column_index("zeta_11").expect("known column"),
    ];
    if table
        .rows()
        .iter()
        .any(|row| zeta_cols.iter().any(|&i| !(0.0..=1.0).contains(&row[i])))
    {
        eprintln!("warning: some bounds leave [0, 1]; parameters are outside the validity domain");
    }
    let plot = PlotSpec {
        x_col: "u",
        y_cols: vec!["zeta_00", "zeta_11"],
        group_col: if args.s.len() > 1 { Some("s") } else { None },
        title: "cavity uncertainty bounds vs acceleration duration",
        y_label: "zeta",
    };
    emit_table(&table, args.out.as_ref(), args.svg.as_ref(), &plot)
}

fn print_mcs_report(result: &McsResult, pair: &OutcomePair, scenario: &str, grid_n: usize) {
    let (theta_ref, _) = mcs_angles(pair).expect("x/z pair");
    println!("pair:               {}", pair.label());
    println!("scenario:           {scenario}");
    println!("grid_n:             {grid_n}");
    println!("theta_star:         {:.12}", result.theta_star);
    println!("phi_star:           {:.12}", result.phi_star);
    println!("zeta_true:          {:.12}", result.zeta_true);
    println!("zeta_fixed_angles:  {:.12}", result.zeta_fixed_angles);
    println!("gap:                {:.6e}", result.gap);
    println!(
        "theta_star offset:  {:.6e} from the fixed angle {:.12}",
        (result.theta_star - theta_ref).abs(),
        theta_ref
    );
}

fn mcs_output_row(pair: &OutcomePair, result: &McsResult) -> Vec<f64> {
    vec![
        pair.outcome_for(PauliBasis::X).expect("x/z pair") as f64,
        pair.outcome_for(PauliBasis::Z).expect("x/z pair") as f64,
        result.theta_star,
        result.phi_star,
        result.zeta_true,
        result.zeta_fixed_angles,
        result.gap,
    ]
}

const MCS_RESULT_COLUMNS: [&str; 7] = [
    "x_outcome",
    "z_outcome",
    "theta_star",
    "phi_star",
    "zeta_true",
    "zeta_fixed_angles",
    "gap",
];

fn cmd_mcs(args: &McsArgs) -> Result<(), CliError> {
    let pair = parse_pair(&args.pair)?;
    if args.cavity {
        let prefactor = parse_prefactor(args.f_minus_prefactor)?;
        let params = CavityParams::new(args.h, args.k, args.s, args.u)?;
        if let Some(warning) = params.perturbative_warning() {
            eprintln!("warning: {warning}");
        }
        let result = maximize_cavity_with(&pair, &params, prefactor, args.grid_n)?;
        let coeffs = CoefficientSet::compute_with(&params, prefactor);
        let rho = cavity_reduced_density_from(
            &coeffs,
            &BlochState::new(result.theta_star, result.phi_star),
        );
        if !populations_physical(&rho) {
            eprintln!(
                "warning: reduced-matrix populations leave [0, 1]; parameters are outside the validity domain"
            );
        }
        print_mcs_report(&result, &pair, "rigid cavity", args.grid_n);
        println!(
            "note: the coherence coefficient enters through its real part only, \
             so off-meridian (phi != 0) objective values are modeled with a real \
             coherence"
        );
        if let Some(path) = &args.out {
            let mut columns = vec!["u", "h", "k", "s"];
            columns.extend_from_slice(&MCS_RESULT_COLUMNS);
            let mut table = ScanTable::new(&columns);
            let mut row = vec![args.u, args.h, args.k as f64, args.s];
            row.extend(mcs_output_row(&pair, &result));
            table.push_row(row);
            table.write_csv(path)?;
        }
    } else {
        let params = UnruhParams::new(args.r, args.ql)?;
        let result = maximize_uniform(&pair, &params, args.grid_n)?;
        print_mcs_report(&result, &pair, "uniform acceleration", args.grid_n);
        if let Some(path) = &args.out {
            let mut columns = vec!["r", "ql"];
            columns.extend_from_slice(&MCS_RESULT_COLUMNS);
            let mut table = ScanTable::new(&columns);
            let mut row = vec![args.r, args.ql];
            row.extend(mcs_output_row(&pair, &result));
            table.push_row(row);
            table.write_csv(path)?;
        }
    }
    Ok(())
}

fn cmd_oracle_check(args: &OracleCheckArgs) -> Result<(), CliError> {
    let report = run_oracle_check(args.grid_points, args.tolerance)?;
    print!("{}", report.render());
    if report.passed() {
        Ok(())
    } else {
        Err(CliError::OracleMismatch(format!(
            "max deviation {:.3e} over tolerance {:.1e}",
            report.max_deviation(),
            report.tolerance
        )))
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::UnruhScan(args) => cmd_unruh_scan(args),
        Command::CavityScan(args) => cmd_cavity_scan(args),
        Command::Mcs(args) => cmd_mcs(args),
        Command::OracleCheck(args) => cmd_oracle_check(args),
    }
}

/// Expands `--config FILE` (given after the subcommand) into flags read
/// from a plain key=value file. Flags passed explicitly on the command
/// line keep priority: file entries whose flag already appears are
/// dropped.
fn apply_config_file(mut args: Vec<String>) -> Result<Vec<String>, CliError> {
    let position = match args
        .iter()
        .position(|a| a == "--config" || a.starts_with("--config="))
    {
        Some(p) => p,
        None => return Ok(args),
    };
    let path = if let Some(inline) = args[position].strip_prefix("--config=") {
        let path = PathBuf::from(inline);
        args.remove(position);
        path
    } else {
        if position + 1 >= args.len() {
            return Err(CliError::Usage("--config needs a file path".into()));
        }
        let path = PathBuf::from(&args[position + 1]);
        args.drain(position..=position + 1);
        path
    };
    if position < 2 {
        return Err(CliError::Usage("--config must follow a subcommand".into()));
    }
    let text = std::fs::read_to_string(&path).map_err(|source| CliError::Io { path, source })?;

    let explicit: Vec<String> = args
        .iter()
        .filter(|a| a.starts_with("--"))
        .map(|a| a.split('=').next().unwrap_or(a).to_string())
        .collect();
    let mut injected = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("config line `{line}` is not key=value")))?;
        let flag = format!("--{}", key.trim());
        if explicit.contains(&flag) {
            continue;
        }
        match value.trim() {
            "true" => injected.push(flag),
            "false" => {}
            value => {
                injected.push(flag);
                injected.push(value.to_string());
            }
        }
    }
    // insert right after the subcommand token
    args.splice(2..2, injected);
    Ok(args)
}

fn main() -> ExitCode {
    let args = match apply_config_file(std::env::args().collect()) {
        Ok(args) => args,
        Err(err) => {
            eprintln!("{err}");
            return ExitCode::from(err.exit_code() as u8);
        }
    };
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(err) => {
            // help and version requests are not usage errors
            let code = if err.use_stderr() {
                EXIT_USAGE as u8
            } else {
                0
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("{err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
