use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use darboux_lab::algebra::{parse_rational, BiPoly, Rational};
use darboux_lab::darboux::{
    audit_family, cll_curve_set, extract_cofactor, standard_sweep, sweep, verify_invariance,
    CurveMode, Status,
};
use darboux_lab::factory::{
    build_invariant_curve, cll_cofactor, cll_special_system, derive_system, paper_literal_system, CofactorLine,
    VectorField,
};
use darboux_lab::formats::{
    decode, encode, render_ambiguity, render_audit, render_darboux_set, render_drift, write_levels_csv,
    write_trajectory_csv, ArtifactDocument, CertificateDocument, CurveDocument, DriftDocument, Payload,
    SystemDocument,
};
use darboux_lab::numeric::{
    ambiguity_report, drift_report, evaluate_along, general_integral_spec, integrate_trajectory, level_samples,
    standard_seeds, DriftConfig, FirstIntegralSpec, IntegralReading, IntegratorConfig, Region,
};
use darboux_lab::operators::{classical_generator, Family, FamilySpec};
use darboux_lab::{Error, Result};

/// Outcome of a command that ran to completion.
pub enum Outcome {
    Pass,
    Fail,
}

impl Outcome {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }
}

fn rational(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Parser)]
#[command(name = "darboux-lab", version, about = "Quadratic systems with invariant curves of arbitrary degree")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family member's system, invariant curve and certificate.
    Construct(ConstructArgs),
    /// Check that a curve is invariant for a system.
    Verify(VerifyArgs),
    /// Compare displayed family systems with the derived ones.
    Audit(AuditArgs),
    /// Certify the canonical curves of every family up to a degree.
    Sweep(SweepArgs),
    /// Invariant curves, cofactors and exponents of the special hypergeometric system.
    Darboux(DarbouxArgs),
    /// Drift of a first integral along RK4 trajectories.
    Drift(DriftArgs),
    /// Sample a first integral on a grid.
    Levels(LevelsArgs),
    /// Export one RK4 trajectory.
    Trajectory(TrajectoryArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    Hyp,
    Jacobi,
    Laguerre,
    Hermite,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: FamilyName,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    a: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    b: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    c: Option<Rational>,
    /// Jacobi or Laguerre parameter A.
    #[arg(long = "A", value_parser = rational, allow_hyphen_values = true)]
    big_a: Option<Rational>,
    /// Jacobi parameter B.
    #[arg(long = "B", value_parser = rational, allow_hyphen_values = true)]
    big_b: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true, default_value = "0")]
    beta: Rational,
    #[arg(long, value_parser = rational, allow_hyphen_values = true, default_value = "0")]
    gamma: Rational,
}

fn required(v: &Option<Rational>, name: &str) -> Result<Rational> {
    v.clone().ok_or_else(|| Error::Parameter(format!("--{name} is required for this family")))
}

impl FamilyArgs {
    /// The family at degree `n`; `None` keeps the hypergeometric `a` as given.
    fn spec(&self, n: Option<u32>) -> Result<FamilySpec> {
        let zero = Rational::from_integer(0.into());
        let family = match self.family {
            FamilyName::Hyp => {
                let a = match (&self.a, n) {
                    (Some(a), None) => a.clone(),
                    (None, Some(n)) => Rational::from_integer((-(n as i64)).into()),
                    (Some(a), Some(n)) if *a == Rational::from_integer((-(n as i64)).into()) => a.clone(),
                    (Some(_), Some(_)) => return Err(Error::Parameter("--a and --n disagree (need a = -n)".into())),
                    (None, None) => return Err(Error::Parameter("--a or --n is required".into())),
                };
                Family::Hypergeometric {
                    a,
                    b: required(&self.b, "b")?,
                    c: required(&self.c, "c")?,
                }
            }
            FamilyName::Jacobi => Family::Jacobi {
                a: self.big_a.clone().unwrap_or_else(|| zero.clone()),
                b: self.big_b.clone().unwrap_or_else(|| zero.clone()),
                n: n.ok_or_else(|| Error::Parameter("--n is required".into()))?,
            },
            FamilyName::Laguerre => Family::Laguerre {
                a: self.big_a.clone().unwrap_or(zero),
                n: n.ok_or_else(|| Error::Parameter("--n is required".into()))?,
            },
            FamilyName::Hermite => Family::HermiteLike {
                n: n.ok_or_else(|| Error::Parameter("--n is required".into()))?,
            },
        };
        let spec = FamilySpec::new(family, self.beta.clone(), self.gamma.clone());
        spec.family.validate()?;
        Ok(spec)
    }
}

#[derive(Args)]
struct ConstructArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long)]
    n: Option<u32>,
    /// Use the displayed coefficient formulas instead of the derivation.
    #[arg(long)]
    literal: bool,
    /// Certificate document (system, curve and certificate).
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    system_out: Option<PathBuf>,
    #[arg(long)]
    curve_out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// System or certificate document.
    #[arg(long)]
    system: PathBuf,
    /// Curve or certificate document.
    #[arg(long)]
    curve: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Args)]
struct AuditArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, default_value_t = 1)]
    n_min: u32,
    #[arg(long, default_value_t = 10)]
    n_max: u32,
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, default_value_t = 25)]
    n_max: u32,
}

#[derive(Args)]
struct CllArgs {
    /// Use the special hypergeometric system (the only source available).
    #[arg(long, required = true)]
    cll: bool,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    a: Rational,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    b: Rational,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    c: Rational,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Holonomic,
}

#[derive(Args)]
struct DarbouxArgs {
    #[command(flatten)]
    cll: CllArgs,
    #[arg(long, value_enum, default_value = "holonomic")]
    mode: ModeArg,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    V1,
    V2,
    /// Both readings next to the Darboux control.
    Both,
}

#[derive(Args)]
struct IntegralArgs {
    #[command(flatten)]
    cll: CllArgs,
    /// Reading of the general integral; the Darboux integral when absent.
    #[arg(long, value_enum)]
    variant: Option<VariantArg>,
}

impl IntegralArgs {
    fn spec(&self, reading: Option<IntegralReading>) -> Result<FirstIntegralSpec> {
        let CllArgs { a, b, c, .. } = &self.cll;
        match reading {
            None => {
                let set = cll_curve_set(a, b, c, CurveMode::Holonomic)?;
                FirstIntegralSpec::from_darboux("darboux", &set)
            }
            Some(r) => {
                let k = cll_cofactor(a, b, c)?;
                general_integral_spec(a, b, c, &k.beta, &k.gamma, r)
            }
        }
    }

    fn single_reading(&self) -> Result<Option<IntegralReading>> {
        match self.variant {
            None => Ok(None),
            Some(VariantArg::V1) => Ok(Some(IntegralReading::V1)),
            Some(VariantArg::V2) => Ok(Some(IntegralReading::V2)),
            Some(VariantArg::Both) => Err(Error::Parameter("--variant both is only available for drift".into())),
        }
    }
}

#[derive(Args)]
struct DriftArgs {
    #[command(flatten)]
    integral: IntegralArgs,
    #[arg(long, default_value_t = 1e-3)]
    h: f64,
    #[arg(long = "T", default_value_t = 2.0)]
    horizon: f64,
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
    /// Bound on |y| for samples entering the drift.
    #[arg(long, default_value_t = 100.0)]
    window: f64,
    /// Measure over the whole trajectory.
    #[arg(long, conflicts_with = "window")]
    no_window: bool,
    /// Directory for per-seed CSV files and report.json.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct LevelsArgs {
    #[command(flatten)]
    integral: IntegralArgs,
    #[arg(long, default_value_t = 0.05, allow_hyphen_values = true)]
    x_min: f64,
    #[arg(long, default_value_t = 0.95, allow_hyphen_values = true)]
    x_max: f64,
    #[arg(long, default_value_t = -2.0, allow_hyphen_values = true)]
    y_min: f64,
    #[arg(long, default_value_t = 2.0, allow_hyphen_values = true)]
    y_max: f64,
    #[arg(long, default_value_t = 50)]
    nx: usize,
    #[arg(long, default_value_t = 50)]
    ny: usize,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct TrajectoryArgs {
    /// System or certificate document.
    #[arg(long, required_unless_present = "cll", conflicts_with = "cll")]
    system: Option<PathBuf>,
    #[arg(long)]
    cll: bool,
    #[arg(long, value_parser = rational, allow_hyphen_values = true, requires = "cll")]
    a: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true, requires = "cll")]
    b: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true, requires = "cll")]
    c: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    x0: f64,
    #[arg(long, allow_hyphen_values = true)]
    y0: f64,
    #[arg(long, default_value_t = 1e-3)]
    h: f64,
    #[arg(long = "T", default_value_t = 2.0)]
    horizon: f64,
    #[arg(long)]
    out: PathBuf,
}

fn read_doc(path: &Path) -> Result<ArtifactDocument> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    decode(&text).map_err(|e| match e {
        Error::Parse { location, message } => Error::Parse {
            location: format!("{}: {location}", path.display()),
            message,
        },
        other => other,
    })
}

fn write_doc(path: &Path, payload: Payload) -> Result<()> {
    let text = encode(&ArtifactDocument::new(payload))?;
    fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
    }
}

pub fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Construct(args) => construct(args),
        Command::Verify(args) => verify(args),
        Command::Audit(args) => audit(args),
        Command::Sweep(args) => run_sweep(args),
        Command::Darboux(args) => darboux(args),
        Command::Drift(args) => drift(args),
        Command::Levels(args) => levels(args),
        Command::Trajectory(args) => trajectory(args),
    }
}

fn construct(args: ConstructArgs) -> Result<Outcome> {
    let spec = args.family.spec(args.n)?;
    let op = spec.family.operator()?;
    let k = CofactorLine::new(spec.beta.clone(), spec.gamma.clone());
    let canonical = derive_system(&op, &k)?;
    let system = if args.literal {
        paper_literal_system(&spec)?
    } else {
        canonical.clone()
    };
    let a0 = classical_generator(&spec)?;
    let bundle = build_invariant_curve(&a0, &canonical, &k)?;
    let field = system.field();
    let cert = verify_invariance(&field, &bundle.g, Some(&k.poly()))?;

    println!("x' = {}", field.p);
    println!("y' = {}", field.q);
    println!("g = {}", bundle.g);
    println!("K = {}", k.poly());
    println!("certificate: {}", status_word(cert.status));
    if !cert.residual.is_zero() {
        println!("residual: {}", cert.residual);
    }

    let system_doc = SystemDocument::from_system(system, Some(spec), args.literal);
    let curve_doc = CurveDocument {
        g: bundle.g.clone(),
        a0: Some(a0),
        n: Some(bundle.n),
        cofactor: Some(k.poly()),
    };
    if let Some(path) = &args.system_out {
        write_doc(path, Payload::System(system_doc.clone()))?;
    }
    if let Some(path) = &args.curve_out {
        write_doc(path, Payload::Curve(curve_doc.clone()))?;
    }
    let passed = cert.passed();
    if let Some(path) = &args.out {
        write_doc(
            path,
            Payload::Certificate(CertificateDocument {
                system: Some(system_doc),
                curve: Some(curve_doc),
                certificate: cert,
            }),
        )?;
    }
    Ok(Outcome::from_bool(passed))
}

fn field_of(doc: ArtifactDocument, path: &Path) -> Result<VectorField> {
    match doc.payload {
        Payload::System(s) => Ok(s.field),
        Payload::Certificate(c) => Ok(c.system.map(|s| s.field).unwrap_or(c.certificate.field)),
        Payload::DarbouxSet(d) => Ok(d.field),
        other => Err(Error::parse(
            path.display().to_string(),
            format!("expected a system document, found {}", other.kind()),
        )),
    }
}

fn curve_of(doc: ArtifactDocument, path: &Path) -> Result<(BiPoly, Option<BiPoly>)> {
    match doc.payload {
        Payload::Curve(c) => Ok((c.g, c.cofactor)),
        Payload::Certificate(c) => match c.curve {
            Some(curve) => Ok((curve.g, curve.cofactor)),
            None => Ok((c.certificate.curve, c.certificate.cofactor)),
        },
        other => Err(Error::parse(
            path.display().to_string(),
            format!("expected a curve document, found {}", other.kind()),
        )),
    }
}

fn verify(args: VerifyArgs) -> Result<Outcome> {
    let field = field_of(read_doc(&args.system)?, &args.system)?;
    let (g, cofactor) = curve_of(read_doc(&args.curve)?, &args.curve)?;
    let cert = verify_invariance(&field, &g, cofactor.as_ref())?;
    match &cert.cofactor {
        Some(k) => println!("K = {k}"),
        None => println!("K: none (curve does not divide its Lie derivative)"),
    }
    println!("residual: {}", cert.residual);
    println!("certificate: {}", status_word(cert.status));
    if cofactor.is_some() && !cert.passed() {
        if let Some(k) = extract_cofactor(&field, &g)? {
            println!("note: the curve is invariant with cofactor {k}");
        }
    }
    let passed = cert.passed();
    if let Some(path) = &args.out {
        write_doc(
            path,
            Payload::Certificate(CertificateDocument {
                system: None,
                curve: None,
                certificate: cert,
            }),
        )?;
    }
    Ok(Outcome::from_bool(passed))
}

fn audit(args: AuditArgs) -> Result<Outcome> {
    if args.n_min == 0 || args.n_min > args.n_max {
        return Err(Error::Parameter(format!("bad degree range {}..={}", args.n_min, args.n_max)));
    }
    let spec = args.family.spec(Some(args.n_min))?;
    let reports = audit_family(&spec, args.n_min..=args.n_max)?;
    let ok = reports.iter().all(|r| r.literal_invariance == Status::Pass);
    let text = match args.format {
        ReportFormat::Text => render_audit(&reports),
        ReportFormat::Json => encode(&ArtifactDocument::new(Payload::Audit(reports)))?,
    };
    match &args.out {
        Some(path) => fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(Outcome::from_bool(ok))
}

fn run_sweep(args: SweepArgs) -> Result<Outcome> {
    let specs = standard_sweep(args.n_max);
    let cells = sweep(&specs)?;
    let mut ok = true;
    for cell in &cells {
        let spec = &cell.family;
        println!(
            "{} n={} beta={} gamma={}: {}",
            spec.family.name(),
            cell.degree,
            spec.beta,
            spec.gamma,
            if cell.passed() { "pass" } else { "FAIL" }
        );
        ok &= cell.passed();
    }
    println!("{} of {} members certified", cells.iter().filter(|c| c.passed()).count(), cells.len());
    Ok(Outcome::from_bool(ok))
}

fn darboux(args: DarbouxArgs) -> Result<Outcome> {
    let mode = match args.mode {
        ModeArg::Exact => CurveMode::Exact,
        ModeArg::Holonomic => CurveMode::Holonomic,
    };
    let CllArgs { a, b, c, .. } = &args.cll;
    let set = cll_curve_set(a, b, c, mode)?;
    print!("{}", render_darboux_set(&set));
    let ok = set.relation_holds();
    if let Some(path) = &args.out {
        write_doc(path, Payload::DarbouxSet(set))?;
    }
    Ok(Outcome::from_bool(ok))
}

fn drift(args: DriftArgs) -> Result<Outcome> {
    let config = DriftConfig {
        h: args.h,
        horizon: args.horizon,
        tol: args.tol,
        window: (!args.no_window).then_some(args.window),
        unit_strip: true,
    };
    let CllArgs { a, b, c, .. } = &args.integral.cll;
    if let Some(VariantArg::Both) = args.integral.variant {
        let report = ambiguity_report(a, b, c, &config)?;
        print!("{}", render_ambiguity(&report));
        let ok = report.control.verdict == Status::Pass;
        if let Some(dir) = &args.out {
            fs::create_dir_all(dir)?;
            write_doc(&dir.join("report.json"), Payload::Drift(DriftDocument::Ambiguity(report)))?;
        }
        return Ok(Outcome::from_bool(ok));
    }
    let spec = args.integral.spec(args.integral.single_reading()?)?;
    let field = cll_special_system(a, b, c)?.field();
    let seeds = standard_seeds();
    let report = drift_report(&field, &spec, &seeds, &config)?;
    print!("{}", render_drift(&report));
    if let Some(dir) = &args.out {
        fs::create_dir_all(dir)?;
        let icfg = IntegratorConfig::new(config.h, config.horizon).unit_strip();
        for (i, &(x0, y0)) in seeds.iter().enumerate() {
            let traj = integrate_trajectory(&field, x0, y0, &icfg)?;
            let values = evaluate_along(&spec, &traj);
            let file = fs::File::create(dir.join(format!("seed_{i}.csv")))?;
            write_trajectory_csv(file, &traj, Some(&values))?;
        }
    }
    let ok = report.verdict == Status::Pass;
    if let Some(dir) = &args.out {
        write_doc(&dir.join("report.json"), Payload::Drift(DriftDocument::Single(report)))?;
    }
    Ok(Outcome::from_bool(ok))
}

fn levels(args: LevelsArgs) -> Result<Outcome> {
    let spec = args.integral.spec(args.integral.single_reading()?)?;
    let region = Region {
        x_min: args.x_min,
        x_max: args.x_max,
        y_min: args.y_min,
        y_max: args.y_max,
    };
    let samples = level_samples(|x, y| spec.eval(x, y).ok(), &region, args.nx, args.ny)?;
    let file = fs::File::create(&args.out)?;
    write_levels_csv(file, &samples)?;
    Ok(Outcome::Pass)
}

fn trajectory(args: TrajectoryArgs) -> Result<Outcome> {
    let (field, strip) = match (&args.system, &args.a, &args.b, &args.c) {
        (Some(path), ..) => (field_of(read_doc(path)?, path)?, false),
        (None, Some(a), Some(b), Some(c)) => (cll_special_system(a, b, c)?.field(), true),
        _ => return Err(Error::Parameter("--cll needs --a, --b and --c".into())),
    };
    let mut cfg = IntegratorConfig::new(args.h, args.horizon);
    if strip {
        cfg = cfg.unit_strip();
    }
    let traj = integrate_trajectory(&field, args.x0, args.y0, &cfg)?;
    let file = fs::File::create(&args.out)?;
    write_trajectory_csv(file, &traj, None)?;
    println!("{} samples, {:?}", traj.samples.len(), traj.termination);
    Ok(Outcome::Pass)
}
