//! Command line front end: evaluation tables, the identity residual suite,
//! zero tables, deformation-curve sweeps, field snapshots, and evolution
//! reports, emitted as CSV or JSON to standard output or a file.
//!
//! Exit codes: 0 success, 1 runtime failure (blow-up, I/O), 2 invalid
//! configuration, 3 residual suite with failing cases (the report is still
//! emitted).

use std::fmt;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use isobessel::{
    bessel_j, damping_g, find_zeros, min_steps_per_period, partner_j, partner_j_derivative,
    partner_j_second_derivative, run_default_suite, stationary_field, time_evolve, DriftReport,
    Error, GammaParam, Order, PartnerSpec, Perturbation, PolarGrid, RadialGrid, SuiteReport,
    WaveParams, MAX_RADIUS,
};

#[derive(Parser)]
#[command(
    name = "isobessel",
    version,
    about = "Isospectral partners of Bessel functions and their standing waves"
)]
struct Cli {
    /// Write the output here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Output format. Tables default to csv, reports to json.
    #[arg(long, global = true, value_enum, value_name = "FORMAT")]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate J_n over a radius sweep or at a single point.
    Eval(EvalArgs),
    /// Evaluate the partner function Jt_{n+1}(r; gamma).
    Partner(PartnerArgs),
    /// Evaluate the damping profile g_{n+1}(u; gamma).
    G(GArgs),
    /// Locate zeros of the partner function by scan and bisection.
    Zeros(ZerosArgs),
    /// Run the identity residual suite. Exits 3 if any case fails.
    Residuals(ResidualsArgs),
    /// Emit the deformation curves Jt_which(r; gamma) across a gamma sweep.
    #[command(name = "figure2")]
    Figure2(Figure2Args),
    /// Export a stationary field snapshot psi(r, theta) at one time.
    Field(FieldArgs),
    /// Evolve a stationary mode by leapfrog and report amplitude drift.
    Evolve(EvolveArgs),
}

#[derive(Args)]
struct RangeArgs {
    /// Single radius; replaces the sweep flags.
    #[arg(long, conflicts_with_all = ["r_min", "r_max", "step"])]
    r: Option<f64>,
    /// Sweep start.
    #[arg(long, default_value_t = 0.0)]
    r_min: f64,
    /// Sweep end, inclusive.
    #[arg(long, default_value_t = 30.0)]
    r_max: f64,
    /// Sweep spacing.
    #[arg(long, default_value_t = 0.05)]
    step: f64,
}

impl RangeArgs {
    fn points(&self) -> Result<Vec<f64>, Error> {
        match self.r {
            Some(r) => Ok(vec![r]),
            None => Ok(RadialGrid::uniform(self.r_min, self.r_max, self.step)?
                .points()
                .to_vec()),
        }
    }
}

#[derive(Args)]
struct EvalArgs {
    /// Bessel order, 0 through 20.
    #[arg(long)]
    n: u32,
    #[command(flatten)]
    range: RangeArgs,
}

#[derive(Args)]
struct PartnerArgs {
    /// Index of the underlying J_n; the partner carries index n+1.
    #[arg(long)]
    n: u32,
    /// Deformation parameter, a nonnegative number or "inf".
    #[arg(long, value_parser = parse_gamma)]
    gamma: GammaParam,
    /// Also emit the first and second analytic derivatives (needs r > 0).
    #[arg(long)]
    derivatives: bool,
    #[command(flatten)]
    range: RangeArgs,
}

#[derive(Args)]
struct GArgs {
    /// Index of the underlying J_n.
    #[arg(long)]
    n: u32,
    /// Deformation parameter, a nonnegative number or "inf".
    #[arg(long, value_parser = parse_gamma)]
    gamma: GammaParam,
    /// Single argument; replaces the sweep flags.
    #[arg(long, conflicts_with_all = ["u_min", "u_max", "step"])]
    u: Option<f64>,
    /// Sweep start.
    #[arg(long, default_value_t = 0.0)]
    u_min: f64,
    /// Sweep end, inclusive.
    #[arg(long, default_value_t = 30.0)]
    u_max: f64,
    /// Sweep spacing.
    #[arg(long, default_value_t = 0.05)]
    step: f64,
}

#[derive(Args)]
struct ZerosArgs {
    /// Index of the underlying J_n.
    #[arg(long)]
    n: u32,
    /// Deformation parameter, a nonnegative number or "inf".
    #[arg(long, value_parser = parse_gamma)]
    gamma: GammaParam,
    /// Search interval start.
    #[arg(long, default_value_t = 0.0)]
    r_min: f64,
    /// Search interval end.
    #[arg(long, default_value_t = 30.0)]
    r_max: f64,
    /// Stop after this many zeros.
    #[arg(long, default_value_t = 100)]
    max_count: usize,
}

#[derive(Args)]
struct ResidualsArgs {
    /// Case matrix to run; "default" is the only one defined.
    #[arg(long, default_value = "default")]
    matrix: String,
    /// Fault injection, for exercising the exit-code gate.
    #[arg(long, value_enum)]
    perturb: Option<PerturbArg>,
}

#[derive(Copy, Clone, ValueEnum)]
enum PerturbArg {
    FlipDampingSign,
}

#[derive(Args)]
struct Figure2Args {
    /// Partner index to plot: 2 for Jt_2 (deforms J_0 to -J_2),
    /// 3 for Jt_3 (deforms J_1 to -J_3).
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..=3))]
    which: u32,
    /// Comma-separated gamma sweep.
    #[arg(
        long,
        value_delimiter = ',',
        value_parser = parse_gamma,
        default_value = "0,0.2,1,5,inf"
    )]
    gammas: Vec<GammaParam>,
    /// Curve end radius.
    #[arg(long, default_value_t = 15.0)]
    r_max: f64,
    /// Radius spacing.
    #[arg(long, default_value_t = 0.01)]
    step: f64,
}

#[derive(Args)]
struct FieldArgs {
    /// Index of the underlying J_n.
    #[arg(long)]
    n: u32,
    /// Deformation parameter, a nonnegative number or "inf".
    #[arg(long, value_parser = parse_gamma)]
    gamma: GammaParam,
    /// Wavenumber.
    #[arg(long, default_value_t = 1.0)]
    k: f64,
    /// Wave speed.
    #[arg(long, default_value_t = 1.0)]
    v: f64,
    /// Angular phase offset.
    #[arg(long, default_value_t = 0.0)]
    phase: f64,
    /// Snapshot time.
    #[arg(long, default_value_t = 0.0)]
    t: f64,
    /// Inner radius of the annulus.
    #[arg(long, default_value_t = 0.5)]
    r_min: f64,
    /// Outer radius of the annulus.
    #[arg(long, default_value_t = 10.0)]
    r_max: f64,
    /// Radial sample count.
    #[arg(long, default_value_t = 128)]
    n_r: usize,
    /// Angular sample count, divisible by 4.
    #[arg(long, default_value_t = 64)]
    n_theta: usize,
}

#[derive(Args)]
struct EvolveArgs {
    /// Index of the underlying J_n.
    #[arg(long)]
    n: u32,
    /// Deformation parameter, a nonnegative number or "inf".
    #[arg(long, value_parser = parse_gamma)]
    gamma: GammaParam,
    /// Wavenumber.
    #[arg(long, default_value_t = 1.0)]
    k: f64,
    /// Wave speed.
    #[arg(long, default_value_t = 1.0)]
    v: f64,
    /// Angular phase offset.
    #[arg(long, default_value_t = 0.0)]
    phase: f64,
    /// Annulus inner edge: index (1-based) into the radial factor's zeros.
    #[arg(long, default_value_t = 1)]
    start_zero: usize,
    /// Annulus outer edge: index (1-based) into the radial factor's zeros.
    #[arg(long, default_value_t = 3)]
    end_zero: usize,
    /// Radial sample count.
    #[arg(long, default_value_t = 256)]
    n_r: usize,
    /// Angular sample count, divisible by 4.
    #[arg(long, default_value_t = 64)]
    n_theta: usize,
    /// Whole periods to integrate.
    #[arg(long, default_value_t = 5)]
    periods: usize,
    /// Steps per period; 0 selects the CFL-limited minimum.
    #[arg(long, default_value_t = 0)]
    steps_per_period: usize,
}

fn parse_gamma(s: &str) -> Result<GammaParam, Error> {
    s.parse()
}

enum Failure {
    Lib(Error),
    Io(io::Error),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Lib(Error::Domain { .. }) | Failure::Lib(Error::Config(_)) => 2,
            Failure::Lib(Error::BlowUp { .. }) | Failure::Io(_) => 1,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Lib(e) => e.fmt(f),
            Failure::Io(e) => e.fmt(f),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        // A consumer that stops reading mid-stream is not our failure.
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let mut sink: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(io::BufWriter::new(File::create(path)?)),
        None => Box::new(io::BufWriter::new(io::stdout())),
    };
    let format = cli.format;
    let code = match cli.command {
        Command::Eval(args) => run_eval(args, format, &mut sink)?,
        Command::Partner(args) => run_partner(args, format, &mut sink)?,
        Command::G(args) => run_g(args, format, &mut sink)?,
        Command::Zeros(args) => run_zeros(args, format, &mut sink)?,
        Command::Residuals(args) => run_residuals(args, format, &mut sink)?,
        Command::Figure2(args) => run_figure2(args, format, &mut sink)?,
        Command::Field(args) => run_field(args, format, &mut sink)?,
        Command::Evolve(args) => run_evolve(args, format, &mut sink)?,
    };
    sink.flush()?;
    Ok(code)
}

/// 17 significant digits: enough to reparse any f64 to the identical bits.
fn f17(x: f64) -> String {
    format!("{x:.16e}")
}

fn order(n: u32) -> Result<Order, Error> {
    Order::new(n)
}

fn write_json<T: Serialize>(doc: &T, w: &mut dyn Write) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *w, doc)?;
    writeln!(w)?;
    Ok(())
}

#[derive(Serialize)]
struct ValueRow {
    r: f64,
    value: f64,
}

#[derive(Serialize)]
struct EvalDoc {
    n: u32,
    points: Vec<ValueRow>,
}

fn run_eval(args: EvalArgs, format: Option<Format>, w: &mut dyn Write) -> Result<u8, Failure> {
    let n = order(args.n)?;
    let mut points = Vec::new();
    for r in args.range.points()? {
        points.push(ValueRow {
            r,
            value: bessel_j(n, r)?,
        });
    }
    match format.unwrap_or(Format::Csv) {
        Format::Csv => {
            writeln!(w, "r,value")?;
            for p in &points {
                writeln!(w, "{},{}", f17(p.r), f17(p.value))?;
            }
        }
        Format::Json => write_json(&EvalDoc { n: args.n, points }, w)?,
    }
    Ok(0)
}

#[derive(Serialize)]
struct PartnerRow {
    r: f64,
    value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    derivative: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    second_derivative: Option<f64>,
}

#[derive(Serialize)]
struct PartnerDoc {
    n: u32,
    gamma: GammaParam,
    points: Vec<PartnerRow>,
}

fn run_partner(
    args: PartnerArgs,
    format: Option<Format>,
    w: &mut dyn Write,
) -> Result<u8, Failure> {
    let spec = PartnerSpec::new(order(args.n)?, args.gamma);
    let mut points = Vec::new();
    for r in args.range.points()? {
        let value = partner_j(spec, r)?;
        let (derivative, second_derivative) = if args.derivatives {
            (
                Some(partner_j_derivative(spec, r)?),
                Some(partner_j_second_derivative(spec, r)?),
            )
        } else {
            (None, None)
        };
        points.push(PartnerRow {
            r,
            value,
            derivative,
            second_derivative,
        });
    }
    match format.unwrap_or(Format::Csv) {
        Format::Csv => {
            if args.derivatives {
                writeln!(w, "r,value,derivative,second_derivative")?;
                for p in &points {
                    writeln!(
                        w,
                        "{},{},{},{}",
                        f17(p.r),
                        f17(p.value),
                        f17(p.derivative.unwrap()),
                        f17(p.second_derivative.unwrap())
                    )?;
                }
            } else {
                writeln!(w, "r,value")?;
                for p in &points {
                    writeln!(w, "{},{}", f17(p.r), f17(p.value))?;
                }
            }
        }
        Format::Json => write_json(
            &PartnerDoc {
                n: args.n,
                gamma: args.gamma,
                points,
            },
            w,
        )?,
    }
    Ok(0)
}

#[derive(Serialize)]
struct GRow {
    u: f64,
    value: f64,
}

#[derive(Serialize)]
struct GDoc {
    n: u32,
    gamma: GammaParam,
    points: Vec<GRow>,
}

fn run_g(args: GArgs, format: Option<Format>, w: &mut dyn Write) -> Result<u8, Failure> {
    let spec = PartnerSpec::new(order(args.n)?, args.gamma);
    let us = match args.u {
        Some(u) => vec![u],
        None => RadialGrid::uniform(args.u_min, args.u_max, args.step)?
            .points()
            .to_vec(),
    };
    let mut points = Vec::new();
    for u in us {
        points.push(GRow {
            u,
            value: damping_g(spec, u)?,
        });
    }
    match format.unwrap_or(Format::Csv) {
        Format::Csv => {
            writeln!(w, "u,value")?;
            for p in &points {
                writeln!(w, "{},{}", f17(p.u), f17(p.value))?;
            }
        }
        Format::Json => write_json(
            &GDoc {
                n: args.n,
                gamma: args.gamma,
                points,
            },
            w,
        )?,
    }
    Ok(0)
}

#[derive(Serialize)]
struct ZerosDoc {
    n: u32,
    gamma: GammaParam,
    zeros: Vec<f64>,
}

fn run_zeros(args: ZerosArgs, format: Option<Format>, w: &mut dyn Write) -> Result<u8, Failure> {
    let spec = PartnerSpec::new(order(args.n)?, args.gamma);
    let zeros = find_zeros(spec, args.r_min, args.r_max, args.max_count)?;
    match format.unwrap_or(Format::Csv) {
        Format::Csv => {
            writeln!(w, "index,r")?;
            for (i, z) in zeros.iter().enumerate() {
                writeln!(w, "{},{}", i + 1, f17(*z))?;
            }
        }
        Format::Json => write_json(
            &ZerosDoc {
                n: args.n,
                gamma: args.gamma,
                zeros,
            },
            w,
        )?,
    }
    Ok(0)
}

fn write_residuals_csv(report: &SuiteReport, w: &mut dyn Write) -> Result<(), Failure> {
    writeln!(
        w,
        "id,n,gamma,k,max_abs,rms,argmax_point,n_points,second_max_abs,tail_ratio,pass"
    )?;
    for case in &report.cases {
        writeln!(
            w,
            "{},{},{},{},{},{},{},{},{},{},{}",
            case.id,
            case.n,
            case.gamma.map(|g| g.to_string()).unwrap_or_default(),
            case.k.map(f17).unwrap_or_default(),
            f17(case.max_abs),
            f17(case.rms),
            f17(case.argmax_point),
            case.n_points,
            case.second_max_abs.map(f17).unwrap_or_default(),
            case.tail_ratio.map(f17).unwrap_or_default(),
            case.pass
        )?;
    }
    Ok(())
}

fn run_residuals(
    args: ResidualsArgs,
    format: Option<Format>,
    w: &mut dyn Write,
) -> Result<u8, Failure> {
    if args.matrix != "default" {
        return Err(Error::Config(format!(
            "unknown case matrix {:?}; the only defined matrix is \"default\"",
            args.matrix
        ))
        .into());
    }
    let perturbation = match args.perturb {
        None => Perturbation::None,
        Some(PerturbArg::FlipDampingSign) => Perturbation::FlipDampingSign,
    };
    let report = run_default_suite(perturbation)?;
    match format.unwrap_or(Format::Json) {
        Format::Json => write_json(&report, w)?,
        Format::Csv => write_residuals_csv(&report, w)?,
    }
    Ok(if report.pass { 0 } else { 3 })
}

#[derive(Serialize)]
struct CurveDoc {
    gamma: GammaParam,
    values: Vec<f64>,
}

#[derive(Serialize)]
struct Figure2Doc {
    which: u32,
    r: Vec<f64>,
    curves: Vec<CurveDoc>,
}

fn run_figure2(
    args: Figure2Args,
    format: Option<Format>,
    w: &mut dyn Write,
) -> Result<u8, Failure> {
    if args.gammas.is_empty() {
        return Err(Error::Config("the gamma sweep must not be empty".into()).into());
    }
    // The curve with index `which` deforms J_{which-2} into -J_{which}.
    let n = order(args.which - 1)?;
    let r: Vec<f64> = RadialGrid::uniform(0.0, args.r_max, args.step)?
        .points()
        .to_vec();
    let mut curves = Vec::new();
    for &gamma in &args.gammas {
        let spec = PartnerSpec::new(n, gamma);
        let mut values = Vec::with_capacity(r.len());
        for &ri in &r {
            values.push(partner_j(spec, ri)?);
        }
        curves.push(CurveDoc { gamma, values });
    }
    match format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let mut header = String::from("r");
            for curve in &curves {
                header.push_str(",gamma=");
                header.push_str(&curve.gamma.to_string());
            }
            writeln!(w, "{header}")?;
            for (i, &ri) in r.iter().enumerate() {
                let mut line = f17(ri);
                for curve in &curves {
                    line.push(',');
                    line.push_str(&f17(curve.values[i]));
                }
                writeln!(w, "{line}")?;
            }
        }
        Format::Json => write_json(
            &Figure2Doc {
                which: args.which,
                r,
                curves,
            },
            w,
        )?,
    }
    Ok(0)
}

#[derive(Serialize)]
struct FieldRow {
    r: f64,
    theta: f64,
    value: f64,
}

#[derive(Serialize)]
struct FieldDoc {
    n: u32,
    gamma: GammaParam,
    k: f64,
    v: f64,
    phase: f64,
    t: f64,
    points: Vec<FieldRow>,
}

fn run_field(args: FieldArgs, format: Option<Format>, w: &mut dyn Write) -> Result<u8, Failure> {
    let params = WaveParams::new(order(args.n)?, args.gamma, args.k, args.v, args.phase)?;
    let grid = PolarGrid::uniform(args.r_min, args.r_max, args.n_r, args.n_theta)?;
    let field = stationary_field(&params, &grid, args.t)?;
    let mut points = Vec::with_capacity(grid.n_r() * grid.n_theta());
    for (i, &r) in grid.r_values().iter().enumerate() {
        for j in 0..grid.n_theta() {
            points.push(FieldRow {
                r,
                theta: grid.theta(j),
                value: field.value(i, j),
            });
        }
    }
    match format.unwrap_or(Format::Csv) {
        Format::Csv => {
            writeln!(w, "r,theta,value")?;
            for p in &points {
                writeln!(w, "{},{},{}", f17(p.r), f17(p.theta), f17(p.value))?;
            }
        }
        Format::Json => write_json(
            &FieldDoc {
                n: args.n,
                gamma: args.gamma,
                k: args.k,
                v: args.v,
                phase: args.phase,
                t: args.t,
                points,
            },
            w,
        )?,
    }
    Ok(0)
}

#[derive(Serialize)]
struct EvolveDoc {
    n: u32,
    gamma: GammaParam,
    k: f64,
    v: f64,
    phase: f64,
    r_min: f64,
    r_max: f64,
    n_r: usize,
    n_theta: usize,
    report: DriftReport,
}

fn run_evolve(args: EvolveArgs, format: Option<Format>, w: &mut dyn Write) -> Result<u8, Failure> {
    if args.start_zero == 0 || args.end_zero <= args.start_zero {
        return Err(Error::Config(format!(
            "zero indices are 1-based and the end index must exceed the start \
             index; got start {} and end {}",
            args.start_zero, args.end_zero
        ))
        .into());
    }
    let n = order(args.n)?;
    let spec = PartnerSpec::new(n, args.gamma);
    // The radial factor is Jt(k r), so its zeros sit at z_m / k.
    let zeros = find_zeros(spec, 0.0, MAX_RADIUS, args.end_zero)?;
    if zeros.len() < args.end_zero {
        return Err(Error::Config(format!(
            "the radial factor has only {} zeros inside the supported domain, \
             end zero index {} is out of reach",
            zeros.len(),
            args.end_zero
        ))
        .into());
    }
    let r_min = zeros[args.start_zero - 1] / args.k;
    let r_max = zeros[args.end_zero - 1] / args.k;
    let params = WaveParams::new(n, args.gamma, args.k, args.v, args.phase)?;
    let grid = PolarGrid::uniform(r_min, r_max, args.n_r, args.n_theta)?;
    let steps_per_period = if args.steps_per_period == 0 {
        min_steps_per_period(&params, &grid)
    } else {
        args.steps_per_period
    };
    let report = time_evolve(&params, &grid, args.periods, steps_per_period)?;
    match format.unwrap_or(Format::Json) {
        Format::Json => write_json(
            &EvolveDoc {
                n: args.n,
                gamma: args.gamma,
                k: args.k,
                v: args.v,
                phase: args.phase,
                r_min,
                r_max,
                n_r: args.n_r,
                n_theta: args.n_theta,
                report,
            },
            w,
        )?,
        Format::Csv => {
            writeln!(
                w,
                "periods,steps_per_period,dt,amplitude_drift,profile_drift,\
                 reference_amplitude,final_amplitude"
            )?;
            writeln!(
                w,
                "{},{},{},{},{},{},{}",
                report.periods,
                report.steps_per_period,
                f17(report.dt),
                f17(report.amplitude_drift),
                f17(report.profile_drift),
                f17(report.reference_amplitude),
                f17(report.final_amplitude)
            )?;
        }
    }
    Ok(0)
}
