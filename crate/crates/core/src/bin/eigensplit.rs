use clap::{Args, Parser, Subcommand, ValueEnum};
use eigensplit::asymptotics::{
    legacy_leading_order, predict_splitting_with, AsymptoticOptions, Evaluation, RSum, DEFAULT_TRUNCATION,
};
use eigensplit::harness::{
    export, format_f64, lin_space, run_sweep, sweep_failed, validate, Format, Mutation, SweepSpec,
};
use eigensplit::multipole::solve_level;
use eigensplit::spectrum::{enumerate_levels, level, EigenLevel};
use eigensplit::{Error, Point};
use serde_json::json;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

const USAGE: u8 = 1;
const NUMERICAL: u8 = 2;
const VALIDATION: u8 = 3;

/// Splitting of Neumann eigenvalues of the unit disk by a small grounded
/// disk inclusion.
#[derive(Parser)]
#[command(name = "eigensplit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the unperturbed levels below a cutoff.
    Spectrum {
        #[arg(long, default_value_t = 20.0)]
        omega_max: f64,
        #[command(flatten)]
        out: Output,
    },
    /// Asymptotic prediction for one inclusion.
    Asym {
        #[command(flatten)]
        at: Placement,
        #[arg(long, default_value_t = 1e-3)]
        eps: f64,
        #[command(flatten)]
        model: Model,
        #[command(flatten)]
        out: Output,
    },
    /// Multipole reference frequencies for one inclusion.
    Multipole {
        #[command(flatten)]
        at: Placement,
        #[arg(long, default_value_t = 1e-3)]
        eps: f64,
        /// Truncation order (default picked from |z|).
        #[arg(long)]
        order: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Fixed centre (d, 0), log-spaced radii.
    SweepEps {
        #[arg(long, default_value_t = 1)]
        level: usize,
        #[arg(long, default_value_t = 0.5)]
        d: f64,
        #[arg(long, default_value_t = 1e-4)]
        eps_min: f64,
        #[arg(long, default_value_t = 1e-2)]
        eps_max: f64,
        #[arg(long, default_value_t = 8)]
        points: usize,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Fixed radius, centres (d, 0) evenly spaced in d.
    SweepZ {
        #[arg(long, default_value_t = 1)]
        level: usize,
        #[arg(long, default_value_t = 1e-2)]
        eps: f64,
        #[arg(long, default_value_t = 0.0)]
        d_min: f64,
        #[arg(long, default_value_t = 0.8)]
        d_max: f64,
        #[arg(long, default_value_t = 9)]
        points: usize,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Run every check; exit 3 if any fails.
    Validate {
        /// Inject a known defect to show the suite catches it.
        #[arg(long, value_enum)]
        mutate: Option<MutationArg>,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Placement {
    /// Level index in the ordered spectrum (0 is the constant mode).
    #[arg(long, default_value_t = 1)]
    level: usize,
    /// Inclusion centre as X,Y.
    #[arg(long, value_parser = parse_point, allow_hyphen_values = true, conflicts_with = "d")]
    z: Option<Point>,
    /// Inclusion centre (D, 0).
    #[arg(long)]
    d: Option<f64>,
}

impl Placement {
    fn point(&self) -> Point {
        self.z.unwrap_or_else(|| Point::new(self.d.unwrap_or(0.5), 0.0))
    }
}

#[derive(Args)]
struct Model {
    /// Frequency cutoff of the truncated sum for r; implies --r-sum truncated.
    #[arg(long)]
    truncation: Option<f64>,
    #[arg(long, value_enum)]
    r_sum: Option<RSumArg>,
    #[arg(long, value_enum, default_value_t = EvaluationArg::SelfConsistent)]
    evaluation: EvaluationArg,
}

impl Model {
    fn options(&self) -> AsymptoticOptions {
        let cutoff = self.truncation.unwrap_or(DEFAULT_TRUNCATION);
        let r_sum = match (self.r_sum, self.truncation) {
            (Some(RSumArg::Resummed), _) | (None, None) => RSum::Resummed,
            _ => RSum::Truncated { cutoff },
        };
        let evaluation = match self.evaluation {
            EvaluationArg::Frozen => Evaluation::Frozen,
            EvaluationArg::SelfConsistent => Evaluation::SelfConsistent,
        };
        AsymptoticOptions { r_sum, evaluation }
    }
}

#[derive(Args)]
struct SweepArgs {
    /// Asymptotics only.
    #[arg(long)]
    no_multipole: bool,
    #[arg(long)]
    order: Option<usize>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    #[command(flatten)]
    model: Model,
    #[command(flatten)]
    out: Output,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
    /// Write here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Output {
    fn write(&self, text: &str) -> Result<(), Error> {
        match &self.out {
            Some(p) => std::fs::write(p, text)?,
            None => std::io::stdout().lock().write_all(text.as_bytes())?,
        }
        Ok(())
    }

    fn format(&self) -> Format {
        match self.format {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum RSumArg {
    Truncated,
    Resummed,
}

#[derive(Clone, Copy, ValueEnum)]
enum EvaluationArg {
    Frozen,
    SelfConsistent,
}

#[derive(Clone, Copy, ValueEnum)]
enum MutationArg {
    GrafSign,
}

fn parse_point(s: &str) -> Result<Point, String> {
    let parts: Vec<&str> = s.split(',').collect();
    let [x, y] = parts.as_slice() else {
        return Err(format!("expected X,Y, got '{s}'"));
    };
    let x: f64 = x.trim().parse().map_err(|e| format!("bad x '{x}': {e}"))?;
    let y: f64 = y.trim().parse().map_err(|e| format!("bad y '{y}': {e}"))?;
    Ok(Point::new(x, y))
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidInput(_) | Error::Domain(_) => USAGE,
        _ => NUMERICAL,
    }
}

fn json_text(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn spectrum(omega_max: f64, out: &Output) -> Result<(), Error> {
    let levels = enumerate_levels(omega_max)?;
    let text = match out.format() {
        Format::Csv => {
            let mut s = String::from("index,omega,n,k,multiplicity\n");
            for l in &levels {
                let m = &l.modes[0];
                s.push_str(&format!("{},{},{},{},{}\n", l.index, format_f64(l.omega), m.n, m.k, l.multiplicity()));
            }
            s
        }
        Format::Json => json_text(&serde_json::Value::Array(
            levels
                .iter()
                .map(|l| {
                    json!({"index": l.index, "omega": l.omega, "n": l.modes[0].n, "k": l.modes[0].k,
                           "multiplicity": l.multiplicity()})
                })
                .collect(),
        )),
    };
    out.write(&text)
}

fn target_level(index: usize) -> Result<EigenLevel, Error> {
    if index == 0 {
        return Err(Error::InvalidInput("level 0 is the constant mode, which does not split".into()));
    }
    level(index)
}

fn asym(at: &Placement, eps: f64, model: &Model, out: &Output) -> Result<(), Error> {
    let l = target_level(at.level)?;
    let z = at.point();
    let p = predict_splitting_with(&l, z, eps, &model.options())?;
    let legacy = legacy_leading_order(&l, z, eps)?;
    let c = &p.constants;
    let lo = p.shifts[0];
    let hi = p.shifts[p.shifts.len() - 1];
    let text = match out.format() {
        Format::Csv => {
            let header = "level,omega_theta,eps,x,y,shift_lo,shift_hi,legacy,s0,t,r,omega_eval,converged\n";
            let row = [
                l.index.to_string(),
                format_f64(l.omega),
                format_f64(eps),
                format_f64(z.x),
                format_f64(z.y),
                format_f64(lo),
                format_f64(hi),
                format_f64(legacy),
                format_f64(c.s0),
                format_f64(c.t),
                format_f64(c.r),
                format_f64(c.omega),
                c.converged.to_string(),
            ];
            format!("{header}{}\n", row.join(","))
        }
        Format::Json => json_text(&json!({
            "level": l.index, "omega_theta": l.omega, "eps": eps, "x": z.x, "y": z.y,
            "shifts": p.shifts, "legacy": legacy, "remainder_order": p.remainder_order,
            "constants": c, "attribution": p.attribution,
        })),
    };
    if !c.converged {
        eprintln!("warning: truncated r did not settle (tail estimate {:e})", c.tail_estimate);
    }
    out.write(&text)
}

fn multipole(at: &Placement, eps: f64, order: Option<usize>, out: &Output) -> Result<(), Error> {
    let l = target_level(at.level)?;
    let z = at.point();
    let r = solve_level(&l, z, eps, order)?;
    let text = match out.format() {
        Format::Csv => {
            let mut s = String::from("level,omega_theta,eps,x,y,root,shift,order\n");
            for w in &r.roots {
                let row = [
                    l.index.to_string(),
                    format_f64(l.omega),
                    format_f64(eps),
                    format_f64(z.x),
                    format_f64(z.y),
                    format_f64(*w),
                    format_f64(w - l.omega),
                    r.config.order.to_string(),
                ];
                s.push_str(&row.join(","));
                s.push('\n');
            }
            s
        }
        Format::Json => json_text(&json!({
            "level": l.index, "omega_theta": l.omega, "eps": eps, "x": z.x, "y": z.y,
            "roots": r.roots, "config": r.config,
        })),
    };
    out.write(&text)
}

fn sweep(mut spec: SweepSpec, args: &SweepArgs) -> Result<ExitCode, Error> {
    spec.multipole = !args.no_multipole;
    spec.order = args.order;
    spec.jobs = args.jobs;
    spec.options = args.model.options();
    spec.check()?;
    let records = run_sweep(&spec)?;
    for r in &records {
        for m in &r.messages {
            eprintln!("{m}");
        }
    }
    export(&records, args.out.format(), args.out.out.as_deref())?;
    if sweep_failed(&records) {
        let n = records.iter().filter(|r| r.failed()).count();
        eprintln!("{n} of {} records failed", records.len());
        return Ok(ExitCode::from(NUMERICAL));
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Spectrum { omega_max, out } => spectrum(omega_max, &out)?,
        Command::Asym { at, eps, model, out } => asym(&at, eps, &model, &out)?,
        Command::Multipole { at, eps, order, out } => multipole(&at, eps, order, &out)?,
        Command::SweepEps { level, d, eps_min, eps_max, points, sweep: args } => {
            return sweep(SweepSpec::eps_sweep(level, d, eps_min, eps_max, points)?, &args);
        }
        Command::SweepZ { level, eps, d_min, d_max, points, sweep: args } => {
            if points == 0 || !(d_min <= d_max) {
                return Err(Error::InvalidInput(format!("empty d range [{d_min}, {d_max}] x {points}")));
            }
            return sweep(SweepSpec::z_sweep(level, eps, lin_space(d_min, d_max, points))?, &args);
        }
        Command::Validate { mutate, out } => {
            let mutation = match mutate {
                Some(MutationArg::GrafSign) => Mutation::GrafSign,
                None => Mutation::None,
            };
            let report = validate(mutation);
            let text = match out.format() {
                Format::Csv => report.to_csv(),
                Format::Json => json_text(&serde_json::to_value(&report).expect("serializable")),
            };
            out.write(&text)?;
            let passed = report.checks.iter().filter(|c| c.pass).count();
            eprintln!("{passed} of {} checks passed", report.checks.len());
            for c in report.checks.iter().filter(|c| !c.pass) {
                eprintln!("FAIL {}: measured {:e}, threshold {:e} ({})", c.name, c.measured, c.threshold, c.detail);
            }
            if !report.all_pass() {
                return Ok(ExitCode::from(VALIDATION));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
